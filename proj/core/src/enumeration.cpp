#include "sawlab/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

namespace sawlab {

namespace {

constexpr char kDirOrder[4] = {'E', 'N', 'S', 'W'}; // lexicographic step order
const Point kStep[4] = {{1, 0}, {0, 1}, {0, -1}, {-1, 0}};

struct Grid {
    int half;
    int dim;
    std::vector<uint8_t> cells;
    explicit Grid(int h) : half(h), dim(2 * h + 1), cells((size_t)dim * dim, 0) {}
    uint8_t& at(Point p) { return cells[(size_t)(p.y + half) * dim + (size_t)(p.x + half)]; }
};

struct Budget {
    std::atomic<uint64_t>* used = nullptr;
    uint64_t limit = 0;
    void tick() {
        if (!limit) return;
        if (used->fetch_add(1, std::memory_order_relaxed) + 1 > limit)
            fail(errc::budget_exceeded, "enumeration node budget exceeded");
    }
};

// NE-rooted constraint: no vertex above the origin row, none right of the
// origin within it.
inline bool ne_ok(Point p) { return p.y < 0 || (p.y == 0 && p.x <= 0); }

struct WalkDfs {
    int n;
    bool constrain_ne; // for classes first / polygon
    Grid grid;
    Budget budget;
    std::string path;
    std::vector<Point> verts;

    WalkDfs(int n_, bool ne, Budget b) : n(n_), constrain_ne(ne), grid(n_ + 2), budget(b) {
        verts.reserve((size_t)n + 1);
        verts.push_back({0, 0});
        grid.at({0, 0}) = 1;
    }

    // Replays a direction prefix; returns false if it violates the constraints.
    bool push_prefix(const std::string& pre) {
        for (char c : pre) {
            Point q = verts.back() + direction_step(c);
            if (constrain_ne && !ne_ok(q)) return false;
            if (grid.at(q)) return false;
            grid.at(q) = 1;
            verts.push_back(q);
            path += c;
        }
        return true;
    }

    template <typename Leaf>
    void run(int depth, Leaf&& leaf) {
        budget.tick();
        if (depth == n) {
            leaf(*this);
            return;
        }
        for (int d = 0; d < 4; ++d) {
            Point q = verts.back() + kStep[d];
            if (constrain_ne && !ne_ok(q)) continue;
            if (grid.at(q)) continue;
            grid.at(q) = 1;
            verts.push_back(q);
            path += kDirOrder[d];
            run(depth + 1, leaf);
            path.pop_back();
            verts.pop_back();
            grid.at(q) = 0;
        }
    }

    // Enumerates constraint-respecting prefixes of a given depth, in order.
    void prefixes(int depth, std::vector<std::string>& out) {
        if (depth == 0 || (int)path.size() == depth) {
            out.push_back(path);
            return;
        }
        for (int d = 0; d < 4; ++d) {
            Point q = verts.back() + kStep[d];
            if (constrain_ne && !ne_ok(q)) continue;
            if (grid.at(q)) continue;
            grid.at(q) = 1;
            verts.push_back(q);
            path += kDirOrder[d];
            prefixes(depth, out);
            path.pop_back();
            verts.pop_back();
            grid.at(q) = 0;
        }
    }
};

// Polygon enumeration: NE-rooted traversals, first step W, closing at the
// origin after exactly n steps.
struct PolygonDfs {
    int n;
    Grid grid;
    Budget budget;
    std::string path;
    Point pos{0, 0};

    PolygonDfs(int n_, Budget b) : n(n_), grid(n_ + 2), budget(b) { grid.at({0, 0}) = 1; }

    bool push_prefix(const std::string& pre) {
        for (char c : pre) {
            Point q = pos + direction_step(c);
            if (q == Point{0, 0}) return false; // premature close cannot extend
            if (!ne_ok(q) || grid.at(q)) return false;
            grid.at(q) = 1;
            pos = q;
            path += c;
        }
        return true;
    }

    template <typename Leaf>
    void run(Leaf&& leaf) {
        budget.tick();
        int depth = (int)path.size();
        int remaining = n - depth;
        int dist = manhattan(pos, {0, 0});
        if (dist > remaining || ((remaining - dist) & 1)) return;
        if (remaining == 1) {
            // the closing step; for valid traversals it is always N
            path += direction_char(Point{0, 0} - pos);
            leaf(path);
            path.pop_back();
            return;
        }
        for (int d = 0; d < 4; ++d) {
            Point q = pos + kStep[d];
            if (q == Point{0, 0}) continue;
            if (!ne_ok(q) || grid.at(q)) continue;
            grid.at(q) = 1;
            Point save = pos;
            pos = q;
            path += kDirOrder[d];
            run(leaf);
            path.pop_back();
            pos = save;
            grid.at(q) = 0;
        }
    }

    void prefixes(int depth, std::vector<std::string>& out) {
        if ((int)path.size() == depth) {
            out.push_back(path);
            return;
        }
        for (int d = 0; d < 4; ++d) {
            Point q = pos + kStep[d];
            if (q == Point{0, 0}) continue;
            if (!ne_ok(q) || grid.at(q)) continue;
            grid.at(q) = 1;
            Point save = pos;
            pos = q;
            path += kDirOrder[d];
            prefixes(depth, out);
            path.pop_back();
            pos = save;
            grid.at(q) = 0;
        }
    }
};

struct ShardResult {
    uint64_t count = 0;
    std::vector<std::string> members;
};

// Runs one job per prefix across cfg.shards workers; results are merged in
// prefix order, so the outcome is independent of the shard count.
template <typename Job>
std::vector<ShardResult> run_sharded(const std::vector<std::string>& prefixes, int shards,
                                     Job&& job) {
    std::vector<ShardResult> results(prefixes.size());
    if (prefixes.empty()) return results;
    shards = std::max(1, std::min<int>(shards, (int)prefixes.size()));
    if (shards == 1) {
        for (size_t i = 0; i < prefixes.size(); ++i) job(prefixes[i], results[i]);
        return results;
    }
    std::vector<std::exception_ptr> errors((size_t)shards);
    std::vector<std::thread> threads;
    threads.reserve((size_t)shards);
    for (int s = 0; s < shards; ++s) {
        threads.emplace_back([&, s]() {
            try {
                for (size_t i = (size_t)s; i < prefixes.size(); i += (size_t)shards)
                    job(prefixes[i], results[i]);
            } catch (...) {
                errors[(size_t)s] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

int prefix_depth(int n) { return std::min(n, 3); }

EnsembleTable enumerate_walk_class(ObjectClass cls, int n, bool full, const EnumConfig& cfg) {
    bool ne = (cls == ObjectClass::first);
    bool translate_ne0 = (cls == ObjectClass::walk_ne0);
    std::atomic<uint64_t> used{0};
    Budget budget{&used, cfg.effective_budget()};

    std::vector<std::string> prefixes;
    {
        WalkDfs pd(n, ne, budget);
        pd.prefixes(prefix_depth(n), prefixes);
    }
    auto results = run_sharded(prefixes, cfg.shards, [&](const std::string& pre, ShardResult& out) {
        WalkDfs dfs(n, ne, budget);
        if (!dfs.push_prefix(pre)) return;
        dfs.run((int)pre.size(), [&](WalkDfs& d) {
            out.count++;
            if (!full) return;
            if (translate_ne0) {
                Point nev = compass_corner(d.verts, Corner::NE);
                Point start = Point{0, 0} - nev;
                out.members.push_back(std::to_string(start.x) + "," + std::to_string(start.y) +
                                      ":" + d.path);
            } else {
                out.members.push_back("0,0:" + d.path);
            }
        });
    });

    EnsembleTable t;
    t.cls = cls;
    t.n = n;
    t.full = full;
    for (auto& r : results) {
        t.count += r.count;
        if (full)
            t.members.insert(t.members.end(), r.members.begin(), r.members.end());
    }
    if (translate_ne0 && full) std::sort(t.members.begin(), t.members.end());
    return t;
}

EnsembleTable enumerate_polygon_class(int n, bool full, const EnumConfig& cfg) {
    if (n % 2 != 0) fail(errc::odd_polygon_length, "polygon length must be even");
    EnsembleTable t;
    t.cls = ObjectClass::polygon;
    t.n = n;
    t.full = full;
    if (n < 4) return t;

    std::atomic<uint64_t> used{0};
    Budget budget{&used, cfg.effective_budget()};

    std::vector<std::string> prefixes;
    {
        PolygonDfs pd(n, budget);
        // first step of the canonical traversal is always W
        if (pd.push_prefix("W")) pd.prefixes(std::min(n - 1, 3), prefixes);
    }
    auto results = run_sharded(prefixes, cfg.shards, [&](const std::string& pre, ShardResult& out) {
        PolygonDfs dfs(n, budget);
        if (!dfs.push_prefix(pre)) return;
        dfs.run([&](const std::string& dirs) {
            out.count++;
            if (full) out.members.push_back(dirs);
        });
    });
    for (auto& r : results) {
        t.count += r.count;
        if (full)
            t.members.insert(t.members.end(), r.members.begin(), r.members.end());
    }
    return t;
}

// Extension test for first_nm: gamma must admit a second part of length
// m - n so that [gamma, phi] decomposes a walk with NE at the origin.
bool first_part_extendable(const Walk& gamma, int ext_len, Budget& budget) {
    int n = gamma.length();
    if (n >= 1 && gamma[1] != Point{-1, 0}) return false;
    Grid grid(n + ext_len + 2);
    for (auto p : gamma.vertices()) grid.at(p) = 1;
    // phi and gamma share only the apex
    struct Rec {
        Grid& g;
        Budget& b;
        int target;
        bool forbid_first_west;
        bool found = false;
        void run(Point pos, int depth) {
            b.tick();
            if (found) return;
            if (depth == target) {
                found = true;
                return;
            }
            for (int d = 0; d < 4; ++d) {
                Point q = pos + kStep[d];
                if (depth == 0 && forbid_first_west && q == Point{-1, 0}) continue;
                if (!ne_ok(q) || g.at(q)) continue;
                g.at(q) = 1;
                run(q, depth + 1);
                g.at(q) = 0;
                if (found) return;
            }
        }
    } rec{grid, budget, ext_len, n == 0};
    rec.run({0, 0}, 0);
    return rec.found;
}

} // namespace

uint64_t EnumConfig::effective_budget() const {
    if (node_budget) return node_budget;
    if (const char* env = std::getenv("SAWLAB_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 0;
}

std::string class_token(ObjectClass c, int m) {
    switch (c) {
        case ObjectClass::walk_rooted: return "walk_rooted";
        case ObjectClass::walk_ne0: return "walk_ne0";
        case ObjectClass::polygon: return "polygon";
        case ObjectClass::first: return "first";
        case ObjectClass::first_nm: return "first_nm(" + std::to_string(m) + ")";
    }
    return "?";
}

std::pair<ObjectClass, int> parse_class_token(const std::string& s) {
    if (s == "walk_rooted") return {ObjectClass::walk_rooted, 0};
    if (s == "walk_ne0") return {ObjectClass::walk_ne0, 0};
    if (s == "polygon") return {ObjectClass::polygon, 0};
    if (s == "first") return {ObjectClass::first, 0};
    if (s.rfind("first_nm(", 0) == 0 && s.back() == ')')
        return {ObjectClass::first_nm, std::stoi(s.substr(9, s.size() - 10))};
    fail(errc::invalid_params, "unknown class token: " + s);
}

EnsembleTable enumerate(ObjectClass cls, int n, bool full, const EnumConfig& cfg, int m) {
    if (n < 0) fail(errc::invalid_length, "length must be nonnegative");
    switch (cls) {
        case ObjectClass::walk_rooted:
        case ObjectClass::walk_ne0:
        case ObjectClass::first:
            return enumerate_walk_class(cls, n, full, cfg);
        case ObjectClass::polygon:
            return enumerate_polygon_class(n, full, cfg);
        case ObjectClass::first_nm: {
            if (m <= n) fail(errc::invalid_params, "first_nm requires m > n");
            std::atomic<uint64_t> used{0};
            Budget budget{&used, cfg.effective_budget()};
            EnsembleTable base = enumerate_walk_class(ObjectClass::first, n, true, cfg);
            EnsembleTable t;
            t.cls = ObjectClass::first_nm;
            t.n = n;
            t.m = m;
            t.full = full;
            for (const auto& s : base.members) {
                Walk gamma = Walk::parse(s);
                if (first_part_extendable(gamma, m - n, budget)) {
                    t.count++;
                    if (full) t.members.push_back(s);
                }
            }
            return t;
        }
    }
    fail(errc::invalid_params, "unknown class");
}

uint64_t count_class(ObjectClass cls, int n, const EnumConfig& cfg, int m) {
    return enumerate(cls, n, false, cfg, m).count;
}

uint64_t closing_count(int n, const EnumConfig& cfg) {
    if (n < 3) return 0;
    std::atomic<uint64_t> used{0};
    Budget budget{&used, cfg.effective_budget()};
    std::vector<std::string> prefixes;
    {
        WalkDfs pd(n, false, budget);
        pd.prefixes(prefix_depth(n), prefixes);
    }
    auto results = run_sharded(prefixes, cfg.shards, [&](const std::string& pre, ShardResult& out) {
        WalkDfs dfs(n, false, budget);
        if (!dfs.push_prefix(pre)) return;
        dfs.run((int)pre.size(), [&](WalkDfs& d) {
            if (manhattan(d.verts.back(), {0, 0}) == 1) out.count++;
        });
    });
    uint64_t total = 0;
    for (auto& r : results) total += r.count;
    return total;
}

Rational closing_probability(int n, const EnumConfig& cfg) {
    if (n < 3) return Rational(0);
    uint64_t closing = closing_count(n, cfg);
    if (closing == 0) return Rational(0);
    uint64_t cn = count_class(ObjectClass::walk_rooted, n, cfg);
    return Rational((long long)closing, (long long)cn);
}

CountsTable counts_table(int max_n, const EnumConfig& cfg, bool with_closing) {
    CountsTable t;
    t.max_n = max_n;
    t.c.assign((size_t)max_n + 1, 0);
    t.p.assign((size_t)max_n + 1, 0);
    t.closing.assign((size_t)max_n + 1, 0);
    t.c[0] = 1;
    for (int n = 1; n <= max_n; ++n) {
        t.c[(size_t)n] = count_class(ObjectClass::walk_rooted, n, cfg);
        if (n % 2 == 0 && n >= 4) t.p[(size_t)n] = count_class(ObjectClass::polygon, n, cfg);
        if (with_closing && n % 2 == 1) t.closing[(size_t)n] = closing_count(n, cfg);
    }
    return t;
}

MuEstimate estimate_mu(const CountsTable& t) {
    if (t.max_n < 4) fail(errc::insufficient_data, "estimate_mu needs counts up to n >= 4");
    MuEstimate e;
    e.lo = 0;
    e.hi = std::numeric_limits<double>::infinity();
    for (int n = 4; n <= t.max_n; n += 2)
        if (t.p[(size_t)n] > 0)
            e.lo = std::max(e.lo, std::pow((double)t.p[(size_t)n], 1.0 / n));
    for (int n = 1; n <= t.max_n; ++n)
        e.hi = std::min(e.hi, std::pow((double)t.c[(size_t)n], 1.0 / n));
    e.estimate = 0.5 * (e.lo + e.hi);
    return e;
}

MuEstimate estimate_mu(int max_n, const EnumConfig& cfg) {
    if (max_n < 4) fail(errc::insufficient_data, "estimate_mu needs max_n >= 4");
    return estimate_mu(counts_table(max_n, cfg, false));
}

ExponentReport exponents(int n, double mu, const CountsTable& t) {
    if (n < 2) fail(errc::invalid_length, "exponent report restricted to n >= 2");
    if (n > t.max_n) fail(errc::insufficient_data, "counts not available at n");
    if (mu <= 1.0) fail(errc::invalid_params, "mu must exceed 1");
    ExponentReport r;
    r.n = n;
    r.mu = mu;
    double ln_n = std::log((double)n);
    r.xi_n = (std::log((double)t.c[(size_t)n]) - n * std::log(mu)) / ln_n;
    if (n % 2 == 0) {
        if (t.p[(size_t)n] == 0) fail(errc::zero_count, "polygon count zero at even n");
        r.theta_n = (n * std::log(mu) - std::log((double)t.p[(size_t)n])) / ln_n;
    }
    if (n % 2 == 1 && t.c[(size_t)n] > 0 && t.closing[(size_t)n] > 0)
        r.closing_prob = Rational((long long)t.closing[(size_t)n], (long long)t.c[(size_t)n]);
    return r;
}

TypicalitySets typicality_sets(double zeta, double mu, int lo, int hi, const CountsTable& t) {
    TypicalitySets s;
    for (int n = std::max(4, lo + (lo % 2)); n <= std::min(hi, t.max_n); n += 2) {
        // p_n >= n^-zeta mu^n, compared in logs
        long double ln_n = std::log((long double)n);
        if (t.p[(size_t)n] > 0 &&
            guarded_at_least(std::log((long double)t.p[(size_t)n]) + zeta * ln_n,
                             n * std::log((long double)mu)))
            s.hpn.push_back(n);
        if (n - 1 >= 1 && t.c[(size_t)n - 1] > 0) {
            long double w = (long double)t.closing[(size_t)n - 1] / (long double)t.c[(size_t)n - 1];
            if (guarded_at_least(w, std::pow((long double)n, (long double)-zeta)))
                s.hcp.push_back(n);
        }
    }
    return s;
}

namespace {
uint64_t fnv1a(const std::vector<std::string>& lines) {
    uint64_t h = 1469598103934665603ull;
    for (const auto& s : lines) {
        for (char c : s) {
            h ^= (uint8_t)c;
            h *= 1099511628211ull;
        }
        h ^= (uint8_t)'\n';
        h *= 1099511628211ull;
    }
    return h;
}
} // namespace

void save_ensemble(const EnsembleTable& t, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(errc::io_error, "cannot open " + path + " for writing");
    out << "SAWLAB " << t.format_version << " " << class_token(t.cls, t.m) << " " << t.n << " "
        << t.count << "\n";
    for (const auto& m : t.members) out << m << "\n";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)fnv1a(t.members));
    out << "CHECKSUM " << buf << "\n";
}

EnsembleTable load_ensemble(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::io_error, "cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) fail(errc::format_version_mismatch, "empty ensemble file");
    std::istringstream hdr(line);
    std::string magic, cls_token;
    int version = 0, n = 0;
    uint64_t count = 0;
    hdr >> magic >> version >> cls_token >> n >> count;
    if (magic != "SAWLAB" || version != 1 || hdr.fail())
        fail(errc::format_version_mismatch, "bad ensemble header: " + line);
    EnsembleTable t;
    auto [cls, m] = parse_class_token(cls_token);
    t.cls = cls;
    t.m = m;
    t.n = n;
    t.count = count;
    std::string checksum;
    while (std::getline(in, line)) {
        if (line.rfind("CHECKSUM ", 0) == 0) {
            checksum = line.substr(9);
            break;
        }
        if (!line.empty()) t.members.push_back(line);
    }
    if (!checksum.empty()) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)fnv1a(t.members));
        if (checksum != buf) fail(errc::checksum_mismatch, "ensemble checksum mismatch");
    }
    if (!t.members.empty()) {
        t.full = true;
        if (t.members.size() != t.count)
            fail(errc::count_mismatch, "member list length disagrees with header count");
    }
    return t;
}

void write_counts_csv(const CountsTable& t, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(errc::io_error, "cannot open " + path + " for writing");
    out << "n,c_n,p_n,closing_count,closing_probability_num,closing_probability_den\n";
    for (int n = 1; n <= t.max_n; ++n) {
        Rational prob(0);
        if (n % 2 == 1 && t.closing[(size_t)n] > 0)
            prob = Rational((long long)t.closing[(size_t)n], (long long)t.c[(size_t)n]);
        out << n << "," << t.c[(size_t)n] << "," << t.p[(size_t)n] << "," << t.closing[(size_t)n]
            << "," << prob.num << "," << prob.den << "\n";
    }
}

} // namespace sawlab
