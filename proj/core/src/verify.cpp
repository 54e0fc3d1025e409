#include "sawlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "sawlab/madras.hpp"
#include "sawlab/snake.hpp"
#include "sawlab/surgery.hpp"

#include "json.hpp"

namespace sawlab {

MvmReport mvm_check(uint64_t domain_size, uint64_t codomain_size,
                    const std::vector<std::pair<uint64_t, uint64_t>>& arrows) {
    if (domain_size == 0) fail(errc::empty_domain, "multi-valued map with empty domain");
    std::vector<uint64_t> outgoing(domain_size, 0), incoming(codomain_size, 0);
    for (auto [a, b] : arrows) {
        if (a >= domain_size || b >= codomain_size)
            fail(errc::invalid_params, "arrow endpoint out of range");
        outgoing[a]++;
        incoming[b]++;
    }
    MvmReport r;
    r.m = *std::min_element(outgoing.begin(), outgoing.end());
    r.M = incoming.empty() ? 0 : *std::max_element(incoming.begin(), incoming.end());
    // |B| >= m M^-1 |A|  <=>  M |B| >= m |A|
    r.bound_ok = (unsigned __int128)r.M * codomain_size >= (unsigned __int128)r.m * domain_size;
    return r;
}

// ---------------------------------------------------------------------------
// Oracles
// ---------------------------------------------------------------------------
namespace oracle {

namespace {

const char kDirs[4] = {'E', 'N', 'S', 'W'};

void walk_rec(int n, std::set<Point>& visited, std::vector<Point>& path, std::string& dirs,
              bool restrict_ne, std::vector<std::string>* out, uint64_t& count,
              uint64_t* closing) {
    if ((int)dirs.size() == n) {
        count++;
        if (closing && manhattan(path.back(), path.front()) == 1) (*closing)++;
        if (out) out->push_back("0,0:" + dirs);
        return;
    }
    for (char c : kDirs) {
        Point q = path.back() + direction_step(c);
        if (restrict_ne && (q.y > 0 || (q.y == 0 && q.x > 0))) continue;
        if (visited.count(q)) continue;
        visited.insert(q);
        path.push_back(q);
        dirs.push_back(c);
        walk_rec(n, visited, path, dirs, restrict_ne, out, count, closing);
        dirs.pop_back();
        path.pop_back();
        visited.erase(q);
    }
}

struct WalkRun {
    uint64_t count = 0;
    uint64_t closing = 0;
    std::vector<std::string> members;
};

WalkRun run_walks(int n, bool restrict_ne, bool want_members, bool want_closing) {
    WalkRun r;
    std::set<Point> visited{{0, 0}};
    std::vector<Point> path{{0, 0}};
    std::string dirs;
    walk_rec(n, visited, path, dirs, restrict_ne, want_members ? &r.members : nullptr, r.count,
             want_closing ? &r.closing : nullptr);
    return r;
}

} // namespace

uint64_t count_walks(int n) { return run_walks(n, false, false, false).count; }

std::vector<std::string> walks(int n) { return run_walks(n, false, true, false).members; }

std::vector<std::string> walks_ne0(int n) {
    auto members = walks(n);
    std::vector<std::string> out;
    out.reserve(members.size());
    for (const auto& s : members) {
        Walk w = Walk::parse(s);
        Point ne = compass_corner(w.vertices(), Corner::NE);
        out.push_back(w.translated(Point{-ne.x, -ne.y}).str());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> first_parts(int n) { return run_walks(n, true, true, false).members; }

uint64_t closing_walk_count(int n) {
    if (n < 3) return 0;
    return run_walks(n, false, false, true).closing;
}

std::map<std::string, uint64_t> polygon_preimage_multiplicities(int n) {
    std::map<std::string, uint64_t> out;
    if (n < 4 || n % 2 != 0) return out;
    for (const auto& s : walks(n - 1)) {
        Walk w = Walk::parse(s);
        if (!walk_closes(w)) continue;
        auto cp = polygon_of_closing_walk(w);
        out[cp.polygon.normalized().direction_string()]++;
    }
    return out;
}

std::vector<std::string> polygons(int n) {
    std::vector<std::string> out;
    for (const auto& [dirs, mult] : polygon_preimage_multiplicities(n)) out.push_back(dirs);
    return out;
}

std::map<std::string, QFilterEntry> q_by_first_part(int m) {
    std::map<std::string, QFilterEntry> out;
    for (const auto& s : walks_ne0(m)) {
        Walk w = Walk::parse(s);
        auto d = two_part_decompose(w);
        auto& entry = out[d.first.str()];
        entry.total++;
        if (walk_closes(w)) entry.closing++;
    }
    return out;
}

} // namespace oracle

// ---------------------------------------------------------------------------
// Verification suite
// ---------------------------------------------------------------------------
namespace {

struct Ctx {
    SuiteConfig cfg;
    EnumConfig ecfg;

    std::vector<Polygon> polygons(int n) const {
        auto t = enumerate(ObjectClass::polygon, n, true, ecfg);
        std::vector<Polygon> out;
        out.reserve(t.members.size());
        for (const auto& s : t.members) out.push_back(Polygon::from_direction_string(s));
        return out;
    }
};

using CheckFn = void (*)(const Ctx&, CheckResult&);

void expect(bool ok, CheckResult& r, const std::string& what) {
    if (!ok && r.status == CheckStatus::passed) {
        r.status = CheckStatus::failed;
        r.detail = what;
    }
}

void check_oracle_counts(const Ctx& ctx, CheckResult& r) {
    int cap = std::min(ctx.cfg.max_n, 10);
    for (int n = 1; n <= cap; ++n) {
        auto got = enumerate(ObjectClass::walk_rooted, n, true, ctx.ecfg);
        auto want = oracle::walks(n);
        expect(got.count == want.size() && got.members == want, r,
               "walk_rooted mismatch at n=" + std::to_string(n));

        auto got0 = enumerate(ObjectClass::walk_ne0, n, true, ctx.ecfg);
        auto want0 = oracle::walks_ne0(n);
        expect(got0.count == want0.size() && got0.members == want0, r,
               "walk_ne0 mismatch at n=" + std::to_string(n));

        auto gotf = enumerate(ObjectClass::first, n, true, ctx.ecfg);
        auto wantf = oracle::first_parts(n);
        expect(gotf.count == wantf.size() && gotf.members == wantf, r,
               "first mismatch at n=" + std::to_string(n));

        if (n % 2 == 0 && n >= 4) {
            auto gotp = enumerate(ObjectClass::polygon, n, true, ctx.ecfg);
            auto wantp = oracle::polygons(n);
            auto sorted = gotp.members;
            std::sort(sorted.begin(), sorted.end());
            expect(gotp.count == wantp.size() && sorted == wantp, r,
                   "polygon mismatch at n=" + std::to_string(n));
        }
    }
    if (r.detail.empty()) r.detail = "classes agree with the reference enumeration";
}

void check_closing_identity(const Ctx& ctx, CheckResult& r) {
    int cap = std::min(ctx.cfg.max_n, 13);
    for (int n = 3; n <= cap; n += 2) {
        uint64_t lhs = closing_count(n, ctx.ecfg);
        uint64_t pn1 = count_class(ObjectClass::polygon, n + 1, ctx.ecfg);
        expect(lhs == 2ull * (uint64_t)(n + 1) * pn1, r,
               "closing identity fails at n=" + std::to_string(n));
    }
    if (r.detail.empty()) r.detail = "closing_count(n) = 2(n+1) p_{n+1} for odd n";
}

void check_preimage_2n(const Ctx& ctx, CheckResult& r) {
    int cap = std::min(ctx.cfg.max_n, 12);
    for (int n = 4; n <= cap; n += 2) {
        auto mult = oracle::polygon_preimage_multiplicities(n);
        uint64_t pn = count_class(ObjectClass::polygon, n, ctx.ecfg);
        expect(mult.size() == pn, r, "distinct closed-walk polygons != p_n at n=" + std::to_string(n));
        for (const auto& [dirs, m] : mult)
            expect(m == 2ull * (uint64_t)n, r,
                   "preimage multiplicity != 2n at n=" + std::to_string(n) + " for " + dirs);
    }
    if (r.detail.empty()) r.detail = "every polygon has exactly 2n closing walks";
}

void check_surgery_roundtrip(const Ctx& ctx, CheckResult& r) {
    int cap = std::min(ctx.cfg.max_n, 14);
    uint64_t flips = 0;
    for (int n = 4; n <= cap; n += 2) {
        for (const auto& phi : ctx.polygons(n)) {
            for (const auto& p : join_plaquettes(phi)) {
                auto s = split(phi, p);
                expect(s.left_component.length() + s.right_component.length() == phi.length(), r,
                       "component lengths do not sum at n=" + std::to_string(n));
                Polygon back = join_via_plaquette(s.left_component, s.right_component, p);
                expect(back == phi, r, "join(split) != id at n=" + std::to_string(n));
                ++flips;
            }
        }
    }
    if (r.detail.empty()) r.detail = std::to_string(flips) + " split/join round trips";
}

void check_gj_structure(const Ctx& ctx, CheckResult& r) {
    int cap = std::min(ctx.cfg.max_n, 14);
    for (int n = 4; n <= cap; n += 2) {
        for (const auto& phi : ctx.polygons(n)) {
            auto all = join_plaquettes(phi);
            auto global = global_join_plaquettes(phi);
            for (const auto& g : global)
                expect(std::find(all.begin(), all.end(), g) != all.end(), r,
                       "global join plaquette is not a join plaquette");
            std::set<int> ne_lengths;
            for (const auto& g : global) {
                int len = ne_component_length(phi, g);
                expect(ne_lengths.insert(len).second, r,
                       "NE-component length repeats over global join plaquettes");
            }
            // outward/return structure along the traversal
            auto trav = phi.traversal();
            Point es = compass_corner(phi.vertex_set(), Corner::ES);
            size_t es_idx = 0;
            while (trav[es_idx] != es) ++es_idx;
            std::map<Edge, size_t> idx;
            for (size_t i = 0; i + 1 < trav.size(); ++i) idx[Edge(trav[i], trav[i + 1])] = i;
            size_t last_touch = 0;
            bool first = true;
            for (const auto& g : global) {
                int outward = 0, back = 0;
                size_t touch = trav.size();
                for (const auto& h : g.horizontal_edges()) {
                    auto it = idx.find(h);
                    if (it == idx.end()) continue;
                    if (it->second < es_idx) {
                        outward++;
                        touch = std::min(touch, it->second);
                    } else {
                        back++;
                    }
                }
                expect(outward == 1 && back == 1, r,
                       "global join plaquette not split across outward/return journeys");
                expect(first || touch > last_touch, r, "global join order not by outward touch");
                last_touch = touch;
                first = false;
            }
        }
    }
    if (r.detail.empty()) r.detail = "global join plaquettes ordered and injective";
}

void check_class_bounds(const Ctx& ctx, CheckResult& r) {
    int cap = std::min(ctx.cfg.max_n, 14);
    for (int n = 4; n <= cap; n += 2) {
        uint64_t pn = 0, nl = 0, nr = 0, nleft = 0, nright = 0;
        for (const auto& phi : ctx.polygons(n)) {
            pn++;
            auto f = polygon_class(phi);
            nl += f.in_l;
            nr += f.in_r;
            nleft += f.in_left;
            nright += f.in_right;
        }
        expect(4 * nl >= pn, r, "left-class bound fails at n=" + std::to_string(n));
        expect(2 * nr >= pn, r, "right-class bound fails at n=" + std::to_string(n));
        expect(8 * nleft >= pn, r, "left-long class bound fails at n=" + std::to_string(n));
        expect(2 * nright >= pn, r, "right class bound fails at n=" + std::to_string(n));
    }
    if (r.detail.empty()) r.detail = "class cardinalities meet the 1/4, 1/2, 1/8 bounds";
}

// Shared scan over canonical placements of polygon pairs.
template <typename Fn>
void for_each_joinable_pair(const Ctx& ctx, int cap, Fn&& fn) {
    std::vector<Polygon> shapes;
    for (int n = 4; n <= cap; n += 2)
        for (const auto& p : ctx.polygons(n)) shapes.push_back(p);
    for (const auto& tau : shapes) {
        auto tv = tau.vertex_set();
        for (const auto& sigma : shapes) {
            int h2 = extent_of(sigma.vertex_set()).height;
            int lo = y_min(tv) - h2 - ctx.cfg.box;
            int hi = y_max(tv) + ctx.cfg.box;
            for (int t = lo; t <= hi; ++t) {
                auto u = canonical_placement(tau, sigma, t);
                if (!u) continue;
                fn(tau, sigma.translated(*u));
            }
        }
    }
}

void check_madras_contract(const Ctx& ctx, CheckResult& r) {
    int cap = std::min(ctx.cfg.max_n, 8);
    uint64_t joins = 0;
    for_each_joinable_pair(ctx, cap, [&](const Polygon& tau, const Polygon& sigma_pos) {
        JoinRecord rec = madras_join(tau, sigma_pos);
        ++joins;
        expect(rec.output.length() == tau.length() + sigma_pos.length() + 16, r,
               "output length is not inputs + 16");
        expect(is_join_plaquette(rec.output, rec.junction), r,
               "junction is not a join plaquette of the output");
        expect(ne_component_length(rec.output, rec.junction) == tau.length() + 8, r,
               "NE-side component is not |left| + 8");
    });
    expect(joins > 0, r, "no joinable pairs found");
    if (r.detail.empty()) r.detail = std::to_string(joins) + " joins satisfy the contract";
}

void check_prefix_preservation(const Ctx& ctx, CheckResult& r) {
    int cap = std::min(ctx.cfg.max_n, 8);
    uint64_t checked = 0;
    for_each_joinable_pair(ctx, cap, [&](const Polygon& tau, const Polygon& sigma_pos) {
        if (!is_globally_madras_joinable(tau, sigma_pos)) return;
        JoinRecord rec = madras_join(tau, sigma_pos);
        expect(rec.output.ne() == tau.ne(), r, "NE vertex moved by a global join");
        int j = se_traversal_index(tau);
        auto tt = tau.traversal();
        auto jt = rec.output.traversal();
        for (int i = 0; i <= j - 1; ++i)
            expect(tt[(size_t)i] == jt[(size_t)i], r, "traversal prefix disturbed by surgery");
        ++checked;
    });
    expect(checked > 0, r, "no globally joinable pairs found");
    if (r.detail.empty()) r.detail = std::to_string(checked) + " global joins preserve the prefix";
}

void check_shift_set_bound(const Ctx& ctx, CheckResult& r) {
    int cap = std::min(ctx.cfg.max_n, 8);
    for (int a = 4; a <= cap; a += 2) {
        for (int b = 4; b <= cap; b += 2) {
            for (const auto& phi1 : ctx.polygons(a)) {
                if (!polygon_class(phi1).in_l) continue;
                for (const auto& phi2 : ctx.polygons(b)) {
                    if (!polygon_class(phi2).in_r) continue;
                    auto shifts = shift_set(phi1, phi2);
                    double bound = std::min(std::sqrt((double)a) / 2.0, std::sqrt((double)b));
                    expect((double)shifts.size() >= bound - 1e-12, r,
                           "shift set below bound at (" + std::to_string(a) + "," +
                               std::to_string(b) + ")");
                    int ye = compass_corner(phi1.vertex_set(), Corner::ES).y;
                    for (int kk = ye; (double)kk <= (double)ye + bound - 1.0 + 1e-12; ++kk) {
                        bool realized = false;
                        for (auto u : shifts) realized = realized || u.y == kk;
                        expect(realized, r, "vertical offset in the window not realized");
                    }
                }
            }
        }
    }
    if (r.detail.empty()) r.detail = "shift sets meet the min(sqrt(n)/2, sqrt(m)) bound";
}

void check_rgj_exactness(const Ctx& ctx, CheckResult& r) {
    int cap = std::min(ctx.cfg.max_n, 8);
    for (int k = 4; k <= cap; k += 2) {
        for (int l = 4; l <= cap; l += 2) {
            if (2 * l < k || l > 35 * k) continue;
            RgjParams params{k, l, ctx.cfg.rho};
            auto records = build_rgj(params, ctx.ecfg);
            std::set<Polygon> outputs;
            for (const auto& rec : records) outputs.insert(rec.output);
            expect(outputs.size() == records.size(), r, "regulation joins collided");

            uint64_t lefts = 0, rights = 0;
            for (const auto& phi : ctx.polygons(k)) lefts += polygon_class(phi).in_left;
            for (const auto& phi : ctx.polygons(l)) rights += polygon_class(phi).in_right;
            uint64_t predicted = (uint64_t)params.window_width() * lefts * rights;
            expect(records.size() == predicted, r,
                   "cardinality formula fails at (" + std::to_string(k) + "," +
                       std::to_string(l) + "): got " + std::to_string(records.size()) +
                       " want " + std::to_string(predicted));

            for (const auto& rec : records) {
                expect(is_global_join_plaquette(rec.output, rec.junction), r,
                       "regulation junction is not a global join plaquette");
                auto d = rgj_decompose(rec.output, params);
                expect(d.left == rec.left && d.right == rec.right && d.shift == rec.shift, r,
                       "decompose(build) is not the identity");
            }
        }
    }
    if (r.detail.empty()) r.detail = "regulation join counts and round trips are exact";
}

void check_conditional_law(const Ctx& ctx, CheckResult& r) {
    int cap = std::min(ctx.cfg.max_n, 8);
    for (int k = 4; k <= cap; k += 2) {
        for (int l = 4; l <= cap; l += 2) {
            if (2 * l < k || l > 35 * k) continue;
            RgjParams params{k, l, ctx.cfg.rho};
            auto records = build_rgj(params, ctx.ecfg);
            if (records.empty()) continue;
            std::vector<Polygon> lefts;
            for (const auto& phi : ctx.polygons(k))
                if (polygon_class(phi).in_left) lefts.push_back(phi);
            for (int j = 0; j <= k / 2 - 1; ++j) {
                std::map<std::string, uint64_t> lhs, rhs;
                for (const auto& rec : records) {
                    auto trav = rec.output.traversal();
                    Walk prefix(std::vector<Point>(trav.begin(), trav.begin() + j + 1), false);
                    lhs[prefix.str()]++;
                }
                for (const auto& phi : lefts) {
                    auto trav = phi.traversal();
                    Walk prefix(std::vector<Point>(trav.begin(), trav.begin() + j + 1), false);
                    rhs[prefix.str()]++;
                }
                std::set<std::string> keys;
                for (auto& [s, c] : lhs) keys.insert(s);
                for (auto& [s, c] : rhs) keys.insert(s);
                for (const auto& s : keys) {
                    Rational pl((long long)lhs[s], (long long)records.size());
                    Rational pr((long long)rhs[s], (long long)lefts.size());
                    expect(pl == pr, r, "conditional prefix laws differ at (k,l,j)=(" +
                                            std::to_string(k) + "," + std::to_string(l) + "," +
                                            std::to_string(j) + ")");
                }
            }
        }
    }
    if (r.detail.empty()) r.detail = "prefix laws of regulation joins match the left-class law";
}

void check_q_equivalence(const Ctx& ctx, CheckResult& r) {
    int cap = std::min(ctx.cfg.max_n + 1, 9);
    for (int m = 2; m <= cap; ++m) {
        auto filtered = oracle::q_by_first_part(m);
        for (int n = 0; n < m; ++n) {
            auto firsts = enumerate(ObjectClass::first, n, true, ctx.ecfg);
            for (const auto& s : firsts.members) {
                Walk gamma = Walk::parse(s);
                auto cc = count_completions(gamma, m - n, ctx.ecfg);
                auto it = filtered.find(s);
                if (cc.total == 0) {
                    expect(it == filtered.end() || it->second.total == 0, r,
                           "filter route finds completions the extension route misses");
                    continue;
                }
                expect(it != filtered.end(), r, "extension route invents completions");
                if (it == filtered.end()) continue;
                Rational qa((long long)cc.closing, (long long)cc.total);
                Rational qb((long long)it->second.closing, (long long)it->second.total);
                expect(qa == qb, r, "q routes disagree at n=" + std::to_string(n) +
                                        " m=" + std::to_string(m) + " gamma=" + s);
            }
        }
    }
    if (r.detail.empty()) r.detail = "both q computations agree on every first part";
}

void check_closecard(const Ctx& ctx, CheckResult& r) {
    int cap = std::min(ctx.cfg.max_n, 11);
    for (int n = 3; n <= cap; n += 2) {
        for (double ap : {1.6, 2.0}) {
            for (double dp : {0.3, 0.5, 1.0}) {
                auto rep = closecard_report(n, ap, dp, ctx.ecfg);
                if (!rep.hypothesis_met) continue;
                expect((double)rep.bad_indices.size() <= rep.bound + 1e-12, r,
                       "closecard bound fails at n=" + std::to_string(n));
            }
        }
    }
    if (r.detail.empty()) r.detail = "violating index sets stay within 2 n^{1-delta'}";
}

void check_x_statistic(const Ctx& ctx, CheckResult& r) {
    int cap = std::min(ctx.cfg.max_n + 1, 12);
    for (int len = 4; len <= cap; len += 2) {
        int n = len - 1; // odd
        for (int m_prime : {2, 4}) {
            int ell = n - m_prime + 1;
            if (ell < 0 || ell > n) continue;
            for (double eta : {0.25, 0.5}) {
                SnakeParams params;
                params.alpha = 0.5;
                params.beta = 1.0;
                params.eta = eta;
                params.n = n;
                params.ell = ell;
                double threshold = std::pow((double)n, params.beta - params.eta) / 4.0;
                for (const auto& phi : ctx.polygons(len)) {
                    int x = x_statistic(phi, ell, m_prime, params.alpha, ctx.ecfg);
                    if ((double)x < threshold) continue;
                    auto trav = phi.traversal();
                    Walk prefix(std::vector<Point>(trav.begin(), trav.begin() + ell + 1), false);
                    expect(charming_snake_test(prefix, params, ctx.ecfg).member, r,
                           "x statistic implication fails at polygon length " +
                               std::to_string(len));
                }
            }
        }
    }
    if (r.detail.empty()) r.detail = "x >= n^{beta-eta}/4 always lands in the snake set";
}

void check_mvm_phisap(const Ctx& ctx, CheckResult& r) {
    {
        auto rep = mvm_check(1, 2, {{0, 0}, {0, 1}});
        expect(rep.m == 2 && rep.M == 1 && rep.bound_ok, r, "toy multi-valued map bound fails");
    }
    {
        std::vector<std::pair<uint64_t, uint64_t>> arrows;
        for (uint64_t i = 0; i < 5; ++i) arrows.push_back({i, i});
        auto rep = mvm_check(5, 5, arrows);
        expect(rep.m == 1 && rep.M == 1 && rep.bound_ok, r, "identity map bound fails");
    }
    int cap = std::min(ctx.cfg.max_n, 8);
    for (int k = 4; k <= cap; k += 2) {
        RgjParams params{k, k, ctx.cfg.rho};
        auto records = build_rgj(params, ctx.ecfg);
        if (records.empty()) continue;
        // arrows of the joining map: (left,right) pairs to their join outputs
        std::map<std::pair<std::string, std::string>, uint64_t> dom;
        std::map<std::string, uint64_t> cod;
        std::vector<std::pair<uint64_t, uint64_t>> arrows;
        for (const auto& rec : records) {
            auto key = std::make_pair(rec.left.direction_string(), rec.right.direction_string());
            auto [di, inserted] = dom.try_emplace(key, dom.size());
            auto [ci, cinserted] = cod.try_emplace(rec.output.direction_string(), cod.size());
            arrows.push_back({di->second, ci->second});
        }
        auto rep = mvm_check(dom.size(), cod.size(), arrows);
        expect(rep.bound_ok, r, "regulation joining map violates the arrow bound");
        expect(rep.m == (uint64_t)params.window_width(), r,
               "outgoing arrow count differs from the window width");
        // every output has preimage count 1 <= |GJ|
        for (const auto& rec : records) {
            auto gj = global_join_plaquettes(rec.output);
            expect(!gj.empty(), r, "regulation output with no global join plaquette");
        }
    }
    if (r.detail.empty()) r.detail = "arrow-count bounds hold for the joining maps";
}

struct NamedCheck {
    const char* name;
    CheckFn fn;
};

const NamedCheck kChecks[] = {
    {"oracle_counts", check_oracle_counts},
    {"closing_identity", check_closing_identity},
    {"preimage_2n", check_preimage_2n},
    {"surgery_roundtrip", check_surgery_roundtrip},
    {"gj_structure", check_gj_structure},
    {"class_bounds", check_class_bounds},
    {"madras_contract", check_madras_contract},
    {"shift_set_bound", check_shift_set_bound},
    {"rgj_exactness", check_rgj_exactness},
    {"prefix_preservation", check_prefix_preservation},
    {"conditional_law", check_conditional_law},
    {"q_equivalence", check_q_equivalence},
    {"closecard", check_closecard},
    {"x_statistic", check_x_statistic},
    {"mvm_phisap", check_mvm_phisap},
};

} // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& c : kChecks) out.push_back(c.name);
    return out;
}

SuiteReport run_verification_suite(const SuiteConfig& config) {
    Ctx ctx;
    ctx.cfg = config;
    ctx.ecfg.node_budget = config.budget;

    SuiteReport report;
    {
        std::ostringstream fp;
        fp << "max_n=" << config.max_n << " rho=" << config.rho << " budget=" << config.budget
           << " box=" << config.box;
        if (config.mu) fp << " mu=" << *config.mu;
        for (const auto& s : config.suites) fp << " suite=" << s;
        report.config_fingerprint = fp.str();
    }
    for (const auto& check : kChecks) {
        if (!config.suites.empty() &&
            std::find(config.suites.begin(), config.suites.end(), check.name) ==
                config.suites.end())
            continue;
        CheckResult r;
        r.name = check.name;
        auto start = std::chrono::steady_clock::now();
        try {
            check.fn(ctx, r);
        } catch (const error& e) {
            if (e.code() == errc::budget_exceeded) {
                r.status = CheckStatus::skipped;
                r.detail = std::string("skipped: ") + e.what();
            } else {
                r.status = CheckStatus::failed;
                r.detail = e.what();
            }
        } catch (const std::exception& e) {
            r.status = CheckStatus::failed;
            r.detail = e.what();
        }
        auto end = std::chrono::steady_clock::now();
        r.wall_ms = std::chrono::duration<double, std::milli>(end - start).count();
        if (r.status == CheckStatus::failed) report.all_passed = false;
        report.checks.push_back(std::move(r));
    }
    return report;
}

std::string SuiteReport::to_json(bool include_timing) const {
    nlohmann::json j;
    j["all_passed"] = all_passed;
    j["config"] = config_fingerprint;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json jc;
        jc["name"] = c.name;
        jc["status"] = c.status == CheckStatus::passed   ? "pass"
                       : c.status == CheckStatus::failed ? "fail"
                                                         : "skipped";
        jc["detail"] = c.detail;
        if (include_timing) jc["wall_ms"] = c.wall_ms;
        j["checks"].push_back(jc);
    }
    return j.dump(2);
}

} // namespace sawlab
