#include "sawlab/snake.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_set>

namespace sawlab {

namespace {

const Point kStepOrder[4] = {{1, 0}, {0, 1}, {0, -1}, {-1, 0}};

inline bool ne_ok(Point p) { return p.y < 0 || (p.y == 0 && p.x <= 0); }

} // namespace

bool in_first_class(const Walk& gamma) {
    if (gamma.front() != Point{0, 0}) return false;
    for (auto p : gamma.vertices())
        if (!ne_ok(p)) return false;
    return true;
}

CompletionCount count_completions(const Walk& gamma, int ext_len, const EnumConfig& cfg) {
    if (!in_first_class(gamma)) fail(errc::invalid_params, "gamma must have NE = gamma_0 = 0");
    int n = gamma.length();
    if (n >= 1 && gamma[1] != Point{-1, 0}) return {0, 0};

    struct Rec {
        std::unordered_set<Point, PointHash> occupied;
        Point target_neighbor; // the far end of gamma
        bool forbid_first_west = false;
        int ext = 0;
        uint64_t budget_left = 0;
        bool budget_on = false;
        CompletionCount out;

        void run(Point pos, int depth) {
            if (budget_on && budget_left-- == 0)
                fail(errc::budget_exceeded, "completion budget exceeded");
            if (depth == ext) {
                out.total++;
                if (adjacent(pos, target_neighbor)) out.closing++;
                return;
            }
            for (auto step : kStepOrder) {
                Point q = pos + step;
                if (depth == 0 && forbid_first_west && q == Point{-1, 0}) continue;
                if (!ne_ok(q) || occupied.count(q)) continue;
                occupied.insert(q);
                run(q, depth + 1);
                occupied.erase(q);
            }
        }
    } rec;
    for (auto p : gamma.vertices()) rec.occupied.insert(p);
    rec.target_neighbor = gamma.back();
    rec.forbid_first_west = (n == 0);
    rec.ext = ext_len;
    uint64_t budget = cfg.effective_budget();
    rec.budget_on = budget > 0;
    rec.budget_left = budget;
    rec.run({0, 0}, 0);
    return rec.out;
}

Rational conditional_closing_q(int n, int m, const Walk& gamma, const EnumConfig& cfg) {
    if (gamma.length() != n) fail(errc::invalid_params, "gamma length disagrees with n");
    if (m <= n) fail(errc::invalid_params, "q_{n,m} requires m > n");
    auto cc = count_completions(gamma, m - n, cfg);
    if (cc.total == 0)
        fail(errc::not_extendable, "gamma admits no completion of the requested length");
    return Rational((long long)cc.closing, (long long)cc.total);
}

bool phi_hat_contains(const Walk& gamma, int m, double alpha, const EnumConfig& cfg) {
    int n = gamma.length();
    if (m <= n) fail(errc::invalid_params, "phi_hat requires m > n");
    auto cc = count_completions(gamma, m - n, cfg);
    if (cc.total == 0) return false;
    Rational q((long long)cc.closing, (long long)cc.total);
    long double threshold = std::pow((long double)m, (long double)-alpha);
    return guarded_greater(q.to_long_double(), threshold);
}

std::vector<Walk> phi_hat(int n, int m, double alpha, const EnumConfig& cfg) {
    auto table = enumerate(ObjectClass::first, n, true, cfg);
    std::vector<Walk> out;
    for (const auto& s : table.members) {
        Walk gamma = Walk::parse(s);
        if (phi_hat_contains(gamma, m, alpha, cfg)) out.push_back(gamma);
    }
    return out;
}

void SnakeParams::validate_shape() const {
    if (beta <= 0 || beta > 1) fail(errc::invalid_params, "beta must lie in (0,1]");
    if (eta <= 0 || eta >= beta) fail(errc::invalid_params, "eta must lie in (0,beta)");
    if (n < 1 || n % 2 == 0) fail(errc::invalid_params, "n must be odd and positive");
    if (ell < 0 || ell > n) fail(errc::invalid_params, "ell must lie in [0,n]");
    if (d < 2) fail(errc::invalid_params, "dimension must be at least 2");
}

void SnakeParams::validate_hypothesis() const {
    validate_shape();
    if (alpha <= 0) fail(errc::invalid_params, "alpha must be positive");
    if (delta() <= 0) fail(errc::invalid_params, "delta = beta - eta - alpha must be positive");
}

SnakeConstants snake_constants(int d) {
    if (d < 2) fail(errc::invalid_params, "dimension must be at least 2");
    double pd = std::pow(4.0, d) + 1.0;
    SnakeConstants k;
    k.c = std::pow(2.0, 1.0 / (5.0 * pd));
    k.K = 20.0 * pd * std::log(4.0 * d) / std::log(2.0);
    return k;
}

std::vector<int> charming_indices(const Walk& gamma, const SnakeParams& params,
                                  const EnumConfig& cfg) {
    if (params.n % 2 == 0 || params.n < 1) fail(errc::invalid_params, "n must be odd");
    int ell = gamma.length();
    if (ell != params.ell) fail(errc::invalid_params, "gamma length disagrees with ell");
    if (ell > params.n) fail(errc::invalid_params, "ell must not exceed n");
    if (!in_first_class(gamma)) fail(errc::invalid_params, "gamma must have NE = gamma_0 = 0");
    long double threshold = std::pow((long double)params.n, (long double)-params.alpha);
    std::vector<int> out;
    for (int k = ell % 2; k <= ell; k += 2) {
        auto cc = count_completions(gamma.prefix(k), params.n - ell, cfg);
        if (cc.total == 0) continue;
        Rational q((long long)cc.closing, (long long)cc.total);
        if (guarded_greater(q.to_long_double(), threshold)) out.push_back(k);
    }
    return out;
}

CharmingSnakeReport charming_snake_test(const Walk& gamma, const SnakeParams& params,
                                        const EnumConfig& cfg) {
    SnakeParams shape = params;
    shape.validate_shape();
    CharmingSnakeReport rep;
    rep.required = std::pow((double)params.n, params.beta - params.eta) / 4.0;
    // window [ell - n^beta, ell], clamped to [0, ell]
    long double span = std::pow((long double)params.n, (long double)params.beta);
    auto cc = count_completions(gamma, params.n - params.ell, cfg);
    if (cc.total == 0) return rep; // not a possible first part at this pair of lengths
    for (int k : charming_indices(gamma, params, cfg)) {
        if ((long double)(params.ell - k) <= span + 1e-9L) rep.charming_in_window++;
    }
    rep.member = guarded_at_least((long double)rep.charming_in_window, (long double)rep.required);
    return rep;
}

Rational cs_probability(const SnakeParams& params, const EnumConfig& cfg) {
    SnakeParams shape = params;
    shape.validate_shape();
    auto table = enumerate(ObjectClass::polygon, params.n + 1, true, cfg);
    if (table.count == 0) fail(errc::zero_count, "no polygons at length n+1");
    uint64_t hits = 0;
    for (const auto& s : table.members) {
        Polygon phi = Polygon::from_direction_string(s);
        auto trav = phi.traversal();
        Walk prefix(std::vector<Point>(trav.begin(), trav.begin() + params.ell + 1), false);
        if (charming_snake_test(prefix, params, cfg).member) hits++;
    }
    return Rational((long long)hits, (long long)table.count);
}

SnakeHypothesisReport snake_hypothesis_eval(const SnakeParams& params, const EnumConfig& cfg) {
    params.validate_hypothesis();
    SnakeHypothesisReport rep;
    rep.params = params;
    rep.constants = snake_constants(params.d);
    rep.lhs = cs_probability(params, cfg);
    double nd = std::pow((double)params.n, params.delta());
    rep.rhs = std::pow(rep.constants.c, -nd / 2.0);
    rep.hypothesis_met = guarded_at_least(rep.lhs.to_long_double(), (long double)rep.rhs);
    rep.n_threshold = std::pow(rep.constants.K, 1.0 / params.delta());
    rep.n_at_threshold = (double)params.n >= rep.n_threshold;
    return rep;
}

int x_statistic(const Polygon& gamma, int ell, int m_prime, double alpha, const EnumConfig& cfg) {
    if (m_prime < 1) fail(errc::invalid_params, "m' must be positive");
    auto trav = gamma.traversal();
    if (ell < 0 || ell + 1 >= (int)trav.size())
        fail(errc::invalid_params, "ell out of range for this polygon");
    int x = 0;
    for (int k = 0; k <= ell; ++k) {
        Walk prefix(std::vector<Point>(trav.begin(), trav.begin() + k + 1), false);
        auto cc = count_completions(prefix, m_prime - 1, cfg);
        if (cc.total == 0) continue;
        Rational q((long long)cc.closing, (long long)cc.total);
        long double threshold = std::pow((long double)(m_prime + k - 1), (long double)-alpha);
        if (guarded_greater(q.to_long_double(), threshold)) ++x;
    }
    return x;
}

void TypicalityParams::validate() const {
    if (chi < 0) fail(errc::invalid_params, "chi must be nonnegative");
    // equality of the two epsilons is admitted for the degenerate threshold-one case
    if (!(eps2 >= eps1 && eps1 > 0)) fail(errc::invalid_params, "need eps2 >= eps1 > 0");
    if (a < 0) fail(errc::invalid_params, "a must be nonnegative");
}

ClosecardReport closecard_report(int n, double alpha_prime, double delta_prime,
                                 const EnumConfig& cfg) {
    if (n < 1 || n % 2 == 0) fail(errc::invalid_params, "n must be odd");
    if (delta_prime <= 0) fail(errc::invalid_params, "delta' must be positive");
    ClosecardReport rep;
    rep.bound = 2.0 * std::pow((double)n, 1.0 - delta_prime);

    auto table = enumerate(ObjectClass::walk_ne0, n, true, cfg);
    std::vector<uint64_t> total((size_t)n + 1, 0), closing((size_t)n + 1, 0);
    uint64_t closing_all = 0;
    for (const auto& s : table.members) {
        Walk w = Walk::parse(s);
        auto d = two_part_decompose(w);
        size_t i = (size_t)d.first.length();
        total[i]++;
        bool closes = walk_closes(w);
        if (closes) {
            closing[i]++;
            closing_all++;
        }
    }
    Rational w_closes((long long)closing_all, (long long)table.count);
    long double hyp = std::pow((long double)n, (long double)-alpha_prime);
    rep.hypothesis_met = guarded_at_least(w_closes.to_long_double(), hyp);

    long double factor = std::pow((long double)n, (long double)(alpha_prime + delta_prime));
    for (int i = 0; i <= n; ++i) {
        long double lhs = (long double)total[(size_t)i];
        long double rhs = factor * (long double)closing[(size_t)i];
        if (guarded_at_least(lhs, rhs)) rep.bad_indices.push_back(i);
    }
    return rep;
}

TypicalPairReport typical_pair_checks(int k, int j, const TypicalityParams& params,
                                      const EnumConfig& cfg) {
    params.validate();
    if (j % 2 != 0 || j < 4) fail(errc::invalid_params, "j must be even and at least 4");
    if (k < 0 || k > j - 1) fail(errc::invalid_params, "k out of range");
    TypicalPairReport rep;

    // membership of E: strict count inequality at walk length j-1
    {
        auto table = enumerate(ObjectClass::walk_ne0, j - 1, true, cfg);
        uint64_t total = 0, closing = 0;
        for (const auto& s : table.members) {
            Walk w = Walk::parse(s);
            auto d = two_part_decompose(w);
            if (d.first.length() != k) continue;
            total++;
            if (walk_closes(w)) closing++;
        }
        long double rhs = std::pow((long double)(j - 1), (long double)(0.5 + params.chi + params.eps1)) *
                          (long double)closing;
        rep.in_E = guarded_less((long double)total, rhs);
    }

    // closing-probability typicality at the supplied a
    {
        double alpha2 = 0.5 + (params.a + 1.0) * params.chi + params.eps2;
        auto table = enumerate(ObjectClass::polygon, j, true, cfg);
        uint64_t misses = 0;
        for (const auto& s : table.members) {
            Polygon phi = Polygon::from_direction_string(s);
            auto trav = phi.traversal();
            Walk prefix(std::vector<Point>(trav.begin(), trav.begin() + k + 1), false);
            if (!phi_hat_contains(prefix, j - 1, alpha2, cfg)) misses++;
        }
        Rational lhs((long long)misses, (long long)table.count);
        long double rhs = std::pow((long double)j,
                                   -(long double)(params.a * params.chi + params.eps2 - params.eps1));
        rep.cpt_ok = guarded_at_most(lhs.to_long_double(), rhs);
    }

    // first-part length statistics at n = j - 1, parameters in the eps1 scale
    rep.closecard = closecard_report(j - 1, 0.5 + params.chi + params.eps1 / 2.0,
                                     params.eps1 / 2.0, cfg);
    return rep;
}

} // namespace sawlab
