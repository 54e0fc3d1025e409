// Acceptance suite: runs every release criterion at its stated scale and
// prints one pass/fail line per criterion. Exit code is the failure count.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "sawlab/enumeration.hpp"
#include "sawlab/madras.hpp"
#include "sawlab/snake.hpp"
#include "sawlab/surgery.hpp"
#include "sawlab/verify.hpp"

using namespace sawlab;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

struct Criterion {
    int id;
    std::string title;
    bool ok = true;
    std::string detail;
    Clock::time_point start = Clock::now();

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
    void finish() {
        double secs = std::chrono::duration<double>(Clock::now() - start).count();
        std::ostringstream line;
        line << (ok ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << title;
        if (!ok) line << " -- " << detail;
        line.precision(1);
        line << " (" << std::fixed << secs << "s)";
        std::cout << line.str() << std::endl;
        if (!ok) ++failures;
    }
};

// Dedicated closing-walk enumeration for the polygon-count oracle; plain
// recursion over a boolean grid, no shared code with the production paths.
struct ClosingWalkOracle {
    int n;
    std::vector<uint8_t> grid;
    int dim, half;
    std::vector<Point> path;
    std::map<std::string, uint64_t>* out;

    explicit ClosingWalkOracle(int n_) : n(n_), half(n_ + 1), out(nullptr) {
        dim = 2 * half + 1;
        grid.assign((size_t)dim * dim, 0);
    }
    uint8_t& at(Point p) { return grid[(size_t)(p.y + half) * dim + (size_t)(p.x + half)]; }

    void run(std::map<std::string, uint64_t>& sink) {
        out = &sink;
        path.assign(1, {0, 0});
        at({0, 0}) = 1;
        rec();
    }
    void rec() {
        if ((int)path.size() == n + 1) {
            if (manhattan(path.back(), path.front()) == 1) {
                auto cp = polygon_of_closing_walk(Walk(path, false));
                (*out)[cp.polygon.normalized().direction_string()]++;
            }
            return;
        }
        static const Point steps[4] = {{1, 0}, {0, 1}, {0, -1}, {-1, 0}};
        for (auto s : steps) {
            Point q = path.back() + s;
            if (at(q)) continue;
            at(q) = 1;
            path.push_back(q);
            rec();
            path.pop_back();
            at(q) = 0;
        }
    }
};

std::vector<Polygon> polygons_of(int n) {
    std::vector<Polygon> out;
    for (const auto& s : enumerate(ObjectClass::polygon, n, true).members)
        out.push_back(Polygon::from_direction_string(s));
    return out;
}

void criterion_exact_counts() {
    Criterion c{1, "exact counts match the brute-force oracles (c to 12, p to 16)"};
    const uint64_t small_c[] = {1, 4, 12, 36, 100, 284};
    for (int n = 1; n <= 5; ++n) {
        c.require(oracle::count_walks(n) == small_c[n], "frozen small walk count is off");
        c.require(count_class(ObjectClass::walk_rooted, n) == small_c[n],
                  "enumerator disagrees with frozen walk count");
    }
    for (int n = 6; n <= 12; ++n)
        c.require(count_class(ObjectClass::walk_rooted, n) == oracle::count_walks(n),
                  "walk count oracle mismatch at n=" + std::to_string(n));

    const uint64_t small_p[] = {0, 0, 0, 0, 1, 0, 2, 0, 7};
    for (int n = 4; n <= 16; n += 2) {
        std::map<std::string, uint64_t> classes;
        ClosingWalkOracle oracle_walks(n - 1);
        oracle_walks.run(classes);
        uint64_t pn = count_class(ObjectClass::polygon, n);
        c.require(pn == classes.size(),
                  "polygon count oracle mismatch at n=" + std::to_string(n));
        if (n <= 8) c.require(pn == small_p[n], "frozen small polygon count is off");
        for (const auto& [dirs, mult] : classes)
            c.require(mult == 2ull * (uint64_t)n, "closing-walk multiplicity is not 2n");
    }
    c.finish();
}

void criterion_closing_identity() {
    Criterion c{2, "closing_count(n) = 2(n+1) p_{n+1} exactly for odd n <= 13"};
    for (int n = 3; n <= 13; n += 2) {
        uint64_t lhs = closing_count(n);
        uint64_t rhs = 2ull * (uint64_t)(n + 1) * count_class(ObjectClass::polygon, n + 1);
        c.require(lhs == rhs, "identity fails at n=" + std::to_string(n));
    }
    c.finish();
}

void criterion_surgery_roundtrips() {
    Criterion c{3, "surgery round trips and global-join injectivity to length 14"};
    for (int n = 4; n <= 14; n += 2) {
        for (const auto& phi : polygons_of(n)) {
            for (const auto& p : join_plaquettes(phi)) {
                auto s = split(phi, p);
                c.require(join_via_plaquette(s.left_component, s.right_component, p) == phi,
                          "join(split) is not the identity at n=" + std::to_string(n));
            }
            std::set<int> seen;
            for (const auto& p : global_join_plaquettes(phi))
                c.require(seen.insert(ne_component_length(phi, p)).second,
                          "NE-component lengths repeat at n=" + std::to_string(n));
        }
    }
    c.finish();
}

void criterion_class_bounds() {
    Criterion c{4, "class bounds |left| >= p/8 and |right| >= p/2 to length 14"};
    for (int n = 4; n <= 14; n += 2) {
        uint64_t pn = 0, nleft = 0, nright = 0;
        for (const auto& phi : polygons_of(n)) {
            ++pn;
            auto f = polygon_class(phi);
            nleft += f.in_left;
            nright += f.in_right;
        }
        c.require(8 * nleft >= pn, "left bound fails at n=" + std::to_string(n));
        c.require(2 * nright >= pn, "right bound fails at n=" + std::to_string(n));
    }
    c.finish();
}

void criterion_madras_contract() {
    Criterion c{5, "join contract over all joinable pairs up to length 8"};
    std::vector<Polygon> shapes;
    for (int n = 4; n <= 8; n += 2)
        for (const auto& p : polygons_of(n)) shapes.push_back(p);
    uint64_t joins = 0;
    const int box = 12;
    for (const auto& tau : shapes) {
        auto tv = tau.vertex_set();
        for (const auto& sigma : shapes) {
            int h2 = extent_of(sigma.vertex_set()).height;
            for (int t = y_min(tv) - h2 - box; t <= y_max(tv) + box; ++t) {
                auto u = canonical_placement(tau, sigma, t);
                if (!u) continue;
                Polygon placed = sigma.translated(*u);
                JoinRecord rec = madras_join(tau, placed);
                ++joins;
                c.require(rec.output.length() == tau.length() + sigma.length() + 16,
                          "length is not inputs + 16");
                Polygon revalidated(rec.output.edges()); // full self-avoidance validation
                c.require(revalidated == rec.output, "output fails polygon validation");
                c.require(ne_component_length(rec.output, rec.junction) == tau.length() + 8,
                          "NE component is not |left| + 8");
                if (is_globally_madras_joinable(tau, placed)) {
                    int j = se_traversal_index(tau);
                    auto tt = tau.traversal();
                    auto jt = rec.output.traversal();
                    c.require(rec.output.ne() == tau.ne(), "NE vertex moved");
                    for (int i = 0; i <= j - 1; ++i)
                        c.require(tt[(size_t)i] == jt[(size_t)i], "prefix disturbed");
                }
            }
        }
    }
    c.require(joins > 0, "no joinable pairs found");
    c.finish();
}

void criterion_rgj_exactness() {
    Criterion c{6, "regulation join cardinality and unique decomposition at 4,6,8"};
    for (int k : {4, 6, 8}) {
        uint64_t lefts = 0;
        for (const auto& phi : polygons_of(k)) lefts += polygon_class(phi).in_left;
        for (int l : {4, 6, 8}) {
            if (2 * l < k || l > 35 * k) continue;
            uint64_t rights = 0;
            for (const auto& phi : polygons_of(l)) rights += polygon_class(phi).in_right;
            RgjParams params{k, l, 1.0};
            auto records = build_rgj(params);
            uint64_t want = (uint64_t)std::floor(std::sqrt((double)k)) * lefts * rights;
            std::set<Polygon> distinct;
            for (const auto& r : records) distinct.insert(r.output);
            c.require(distinct.size() == records.size(), "joins collided");
            c.require(records.size() == want,
                      "cardinality differs at (" + std::to_string(k) + "," + std::to_string(l) +
                          "): got " + std::to_string(records.size()) + " want " +
                          std::to_string(want));
            for (const auto& rec : records) {
                auto d = rgj_decompose(rec.output, params);
                c.require(d.left == rec.left && d.right == rec.right && d.shift == rec.shift,
                          "decompose(build) is not the identity");
            }
        }
    }
    c.finish();
}

void criterion_conditional_law() {
    Criterion c{7, "conditional prefix laws agree exactly for k,l <= 8"};
    for (int k : {4, 6, 8}) {
        for (int l : {4, 6, 8}) {
            if (2 * l < k || l > 35 * k) continue;
            RgjParams params{k, l, 1.0};
            auto records = build_rgj(params);
            std::vector<Polygon> lefts;
            for (const auto& phi : polygons_of(k))
                if (polygon_class(phi).in_left) lefts.push_back(phi);
            c.require(!records.empty() && !lefts.empty(), "empty ensembles");
            for (int j = 0; j <= k / 2 - 1; ++j) {
                std::map<std::string, uint64_t> lhs, rhs;
                for (const auto& rec : records) {
                    auto trav = rec.output.traversal();
                    lhs[Walk(std::vector<Point>(trav.begin(), trav.begin() + j + 1), false).str()]++;
                }
                for (const auto& phi : lefts) {
                    auto trav = phi.traversal();
                    rhs[Walk(std::vector<Point>(trav.begin(), trav.begin() + j + 1), false).str()]++;
                }
                std::set<std::string> keys;
                for (auto& [s, cnt] : lhs) keys.insert(s);
                for (auto& [s, cnt] : rhs) keys.insert(s);
                for (const auto& s : keys) {
                    Rational a((long long)lhs[s], (long long)records.size());
                    Rational b((long long)rhs[s], (long long)lefts.size());
                    c.require(a == b, "laws differ at (k,l,j)=(" + std::to_string(k) + "," +
                                          std::to_string(l) + "," + std::to_string(j) + ")");
                }
            }
        }
    }
    c.finish();
}

void criterion_snake_plumbing() {
    Criterion c{8, "snake plumbing: q values, q-route agreement, x implication, constants"};
    c.require(conditional_closing_q(1, 3, Walk({{0, 0}, {-1, 0}})) == Rational(1, 3),
              "q_{1,3}(west) != 1/3");

    for (int m = 2; m <= 9; ++m) {
        auto filtered = oracle::q_by_first_part(m);
        for (int n = 0; n < m; ++n) {
            auto firsts = enumerate(ObjectClass::first, n, true);
            for (const auto& s : firsts.members) {
                Walk gamma = Walk::parse(s);
                auto cc = count_completions(gamma, m - n);
                auto it = filtered.find(s);
                if (cc.total == 0) {
                    c.require(it == filtered.end(), "q routes disagree on extendability");
                    continue;
                }
                c.require(it != filtered.end(), "extension route invents first parts");
                if (it == filtered.end()) continue;
                c.require(Rational((long long)cc.closing, (long long)cc.total) ==
                              Rational((long long)it->second.closing, (long long)it->second.total),
                          "q routes disagree at n=" + std::to_string(n) + " m=" +
                              std::to_string(m));
            }
        }
    }

    for (int len = 4; len <= 12; len += 2) {
        int n = len - 1;
        for (int m_prime : {2, 4}) {
            int ell = n - m_prime + 1;
            if (ell < 0) continue;
            SnakeParams p;
            p.alpha = 0.5;
            p.beta = 1.0;
            p.eta = 0.25;
            p.n = n;
            p.ell = ell;
            double threshold = std::pow((double)n, p.beta - p.eta) / 4.0;
            for (const auto& phi : polygons_of(len)) {
                int x = x_statistic(phi, ell, m_prime, p.alpha);
                if ((double)x < threshold) continue;
                auto trav = phi.traversal();
                Walk prefix(std::vector<Point>(trav.begin(), trav.begin() + ell + 1), false);
                c.require(charming_snake_test(prefix, p).member,
                          "x implication fails at length " + std::to_string(len));
            }
        }
    }

    auto k = snake_constants(2);
    c.require(std::abs(k.c - std::pow(2.0, 1.0 / 85.0)) < 1e-15, "constant c is off");
    c.require(std::abs(k.K - 1020.0) < 1e-9, "constant K is off");
    c.finish();
}

void criterion_exponent_table() {
    Criterion c{9, "exponent table exports end to end for even 4 <= n <= 16"};
    auto table = counts_table(16, {}, false);
    double mu = estimate_mu(counts_table(12, {}, false)).estimate;
    std::string path = "acceptance_theta_table.csv";
    {
        std::ofstream out(path);
        out << "n,p_n,theta_n,mu\n";
        for (int n = 4; n <= 16; n += 2) {
            auto rep = exponents(n, mu, table);
            c.require(rep.theta_n.has_value() && std::isfinite(*rep.theta_n),
                      "theta not finite at n=" + std::to_string(n));
            out << n << "," << table.p[(size_t)n] << "," << *rep.theta_n << "," << mu << "\n";
        }
    }
    std::ifstream back(path);
    int rows = 0;
    std::string line;
    while (std::getline(back, line))
        if (!line.empty()) ++rows;
    c.require(rows == 8, "exported table does not have seven data rows plus a header");
    c.finish();
}

void criterion_determinism() {
    Criterion c{10, "shard determinism and a clean verification pass"};
    for (int shards = 1; shards <= 8; ++shards) {
        EnumConfig cfg;
        cfg.shards = shards;
        c.require(enumerate(ObjectClass::walk_rooted, 9, true, cfg).members ==
                      enumerate(ObjectClass::walk_rooted, 9, true).members,
                  "rooted walks differ across shard counts");
        c.require(enumerate(ObjectClass::polygon, 10, true, cfg).members ==
                      enumerate(ObjectClass::polygon, 10, true).members,
                  "polygons differ across shard counts");
        c.require(enumerate(ObjectClass::walk_ne0, 8, true, cfg).members ==
                      enumerate(ObjectClass::walk_ne0, 8, true).members,
                  "NE-rooted walks differ across shard counts");
        c.require(enumerate(ObjectClass::first, 8, true, cfg).members ==
                      enumerate(ObjectClass::first, 8, true).members,
                  "first parts differ across shard counts");
        c.require(enumerate(ObjectClass::first_nm, 3, true, cfg, 7).members ==
                      enumerate(ObjectClass::first_nm, 3, true, {}, 7).members,
                  "extendable first parts differ across shard counts");
        c.require(count_class(ObjectClass::walk_rooted, 12, cfg) == 324932,
                  "sharded walk count at n=12 is off");
        c.require(count_class(ObjectClass::polygon, 12, cfg) == 124,
                  "sharded polygon count at n=12 is off");
    }

    auto start = Clock::now();
#ifdef SAWLAB_CLI_PATH
    std::string cmd = std::string(SAWLAB_CLI_PATH) +
                      " verify --max-n 8 --report acceptance_verify_report.json > "
                      "acceptance_verify_stdout.txt 2>&1";
    int code = std::system(cmd.c_str());
    c.require(code == 0, "verify --max-n 8 exited nonzero");
#else
    SuiteConfig vcfg;
    vcfg.max_n = 8;
    c.require(run_verification_suite(vcfg).all_passed, "verification suite failed");
#endif
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    c.require(secs < 120.0, "verification pass took too long");
    c.finish();
}

} // namespace

int main() {
    criterion_exact_counts();
    criterion_closing_identity();
    criterion_surgery_roundtrips();
    criterion_class_bounds();
    criterion_madras_contract();
    criterion_rgj_exactness();
    criterion_conditional_law();
    criterion_snake_plumbing();
    criterion_exponent_table();
    criterion_determinism();
    if (failures == 0)
        std::cout << "all acceptance criteria passed" << std::endl;
    else
        std::cout << failures << " acceptance criteria FAILED" << std::endl;
    return failures;
}
