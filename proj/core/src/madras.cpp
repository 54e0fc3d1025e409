#include "sawlab/madras.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_set>

namespace sawlab {

PolygonClassFlags polygon_class(const Polygon& phi) {
    auto verts = phi.vertex_set();
    Extent ext = extent_of(verts);
    int ylo = y_min(verts), yhi = y_max(verts);
    Point es = compass_corner(verts, Corner::ES);
    PolygonClassFlags f;
    f.in_r = ext.height >= ext.width;
    f.in_l = f.in_r && 2 * es.y <= ylo + yhi;
    f.left_long = 2 * se_traversal_index(phi) >= phi.length();
    f.in_left = f.in_l && f.left_long;
    f.in_right = f.in_r;
    return f;
}

int se_traversal_index(const Polygon& phi) {
    auto trav = phi.traversal();
    Point se = compass_corner(phi.vertex_set(), Corner::SE);
    for (size_t i = 0; i < trav.size(); ++i)
        if (trav[i] == se) return (int)i;
    fail(errc::invalid_polygon, "traversal misses SE");
}

namespace {

// One side of the surgery: a segment of boundary edges swapped for a detour
// whose easternmost (resp. westernmost) feature is a vertical tip edge at the
// junction rows [c-1, c]. Each detour adds exactly eight edges.
struct Mod {
    std::vector<Edge> removed;
    std::vector<Edge> added;
    int tip_x = 0;
    int c = 0;
};

bool vertex_in(const std::vector<Point>& sorted_verts, Point p) {
    return std::binary_search(sorted_verts.begin(), sorted_verts.end(), p);
}

// Appends the straight path from a to b (sharing an axis) onto es.
void add_segment(std::vector<Edge>& es, Point a, Point b) {
    int dx = (b.x > a.x) - (b.x < a.x);
    int dy = (b.y > a.y) - (b.y < a.y);
    Point p = a;
    while (p != b) {
        Point q{p.x + dx, p.y + dy};
        es.emplace_back(p, q);
        p = q;
    }
}

std::vector<Point> path_vertices(Point start, const std::vector<Point>& corners) {
    std::vector<Point> out;
    Point p = start;
    out.push_back(p);
    for (Point c : corners) {
        int dx = (c.x > p.x) - (c.x < p.x);
        int dy = (c.y > p.y) - (c.y < p.y);
        while (p != c) {
            p = Point{p.x + dx, p.y + dy};
            out.push_back(p);
        }
    }
    return out;
}

struct LeftContext {
    std::vector<Point> verts; // sorted
    Point es;
    int xm;         // x(ES) = xmax
    int ye;         // y(ES)
    std::map<Edge, int> edge_index;
    int se_index = 0;

    explicit LeftContext(const Polygon& tau) {
        verts = tau.vertex_set();
        es = compass_corner(verts, Corner::ES);
        xm = es.x;
        ye = es.y;
        auto trav = tau.traversal();
        Point se = compass_corner(verts, Corner::SE);
        for (size_t i = 0; i + 1 < trav.size(); ++i) {
            edge_index[Edge(trav[i], trav[i + 1])] = (int)i;
            if (trav[i] == se) se_index = (int)i;
        }
        if (trav.back() == se) se_index = (int)trav.size() - 1;
    }
};

// The removed segment must sit at or beyond the step into SE so the initial
// traversal prefix survives the surgery.
bool removal_preserves_prefix(const LeftContext& ctx, const std::vector<Edge>& removed) {
    for (const auto& e : removed) {
        auto it = ctx.edge_index.find(e);
        if (it == ctx.edge_index.end()) return false;
        if (it->second < ctx.se_index - 1) return false;
    }
    return true;
}

std::optional<Mod> finish_left(const LeftContext& ctx, const Polygon& tau, Mod m,
                               const std::vector<Point>& path, Point from, Point to) {
    for (size_t i = 1; i + 1 < path.size(); ++i)
        if (vertex_in(ctx.verts, path[i])) return std::nullopt;
    for (const auto& e : m.removed)
        if (!tau.contains(e)) return std::nullopt;
    if (!removal_preserves_prefix(ctx, m.removed)) return std::nullopt;
    (void)from;
    (void)to;
    return m;
}

// Straight east bump at the easternmost vertical edge spanning [c-1, c];
// needs a clean frontier east of it on both rows.
std::optional<Mod> left_case_bump(const Polygon& tau, const LeftContext& ctx, int c) {
    int xe = INT32_MIN;
    for (const auto& e : tau.edges())
        if (e.vertical() && e.a.y == c - 1 && e.b.y == c) xe = std::max(xe, e.a.x);
    if (xe == INT32_MIN) return std::nullopt;
    for (auto v : ctx.verts)
        if ((v.y == c - 1 || v.y == c) && v.x > xe) return std::nullopt;
    Mod m;
    m.c = c;
    m.tip_x = xe + 4;
    m.removed = {Edge({xe, c - 1}, {xe, c})};
    auto corners = std::vector<Point>{{xe + 4, c - 1}, {xe + 4, c}, {xe, c}};
    auto pv = path_vertices({xe, c - 1}, corners);
    add_segment(m.added, {xe, c - 1}, {xe + 4, c - 1});
    add_segment(m.added, {xe + 4, c - 1}, {xe + 4, c});
    add_segment(m.added, {xe + 4, c}, {xe, c});
    return finish_left(ctx, tau, m, pv, {xe, c - 1}, {xe, c});
}

// Dip just west of ES: swap the edge entering ES for a detour dropping to the
// junction rows. Applies when the junction sits at or below the ES row.
std::optional<Mod> left_case_dip(const Polygon& tau, const LeftContext& ctx, int c) {
    int d = ctx.ye - c;
    if (d < 0 || d > 3) return std::nullopt; // tip may sit on the ES column itself
    int aL = ctx.xm + 3 - d;
    Point start{ctx.xm - 1, ctx.ye};
    Mod m;
    m.c = c;
    m.tip_x = aL;
    m.removed = {Edge(start, ctx.es)};
    std::vector<Point> corners{{ctx.xm - 1, c - 1}, {aL, c - 1}, {aL, ctx.ye}, {ctx.xm, ctx.ye}};
    auto pv = path_vertices(start, corners);
    add_segment(m.added, start, {ctx.xm - 1, c - 1});
    add_segment(m.added, {ctx.xm - 1, c - 1}, {aL, c - 1});
    add_segment(m.added, {aL, c - 1}, {aL, ctx.ye});
    add_segment(m.added, {aL, ctx.ye}, {ctx.xm, ctx.ye});
    return finish_left(ctx, tau, m, pv, start, ctx.es);
}

// Reroute the whole horizontal run entering ES, starting the dip at its west
// end; the variant taken depends on whether the run end turns down or up.
std::optional<Mod> left_case_reroute(const Polygon& tau, const LeftContext& ctx, int c,
                                     bool down_turn) {
    int d = ctx.ye - c;
    if (d < 0 || d > 4 || (!down_turn && d > 3)) return std::nullopt;
    int xq = ctx.xm;
    while (tau.contains(Edge({xq - 1, ctx.ye}, {xq, ctx.ye}))) --xq;
    if (xq == ctx.xm) return std::nullopt; // no horizontal approach
    Edge down({xq, ctx.ye - 1}, {xq, ctx.ye});
    if (down_turn != tau.contains(down)) return std::nullopt;

    Mod m;
    m.c = c;
    Point start;
    if (down_turn) {
        m.tip_x = ctx.xm + 4 - d;
        start = {xq, ctx.ye - 1};
        m.removed.push_back(down);
    } else {
        m.tip_x = ctx.xm + 3 - d;
        start = {xq, ctx.ye};
    }
    if (m.tip_x < ctx.xm) return std::nullopt;
    add_segment(m.removed, {xq, ctx.ye}, {ctx.xm, ctx.ye});
    std::vector<Point> corners{{xq, c - 1}, {m.tip_x, c - 1}, {m.tip_x, ctx.ye}, {ctx.xm, ctx.ye}};
    auto pv = path_vertices(start, corners);
    add_segment(m.added, start, {xq, c - 1});
    add_segment(m.added, {xq, c - 1}, {m.tip_x, c - 1});
    add_segment(m.added, {m.tip_x, c - 1}, {m.tip_x, ctx.ye});
    add_segment(m.added, {m.tip_x, ctx.ye}, {ctx.xm, ctx.ye});
    return finish_left(ctx, tau, m, pv, start, ctx.es);
}

std::optional<Mod> left_mod(const Polygon& tau, const LeftContext& ctx, int c) {
    if (auto m = left_case_bump(tau, ctx, c)) return m;
    if (auto m = left_case_dip(tau, ctx, c)) return m;
    if (auto m = left_case_reroute(tau, ctx, c, true)) return m;
    if (auto m = left_case_reroute(tau, ctx, c, false)) return m;
    return std::nullopt;
}

// Right side: straight west bump at the westernmost vertical edge spanning
// the junction rows.
std::optional<Mod> right_mod(const Polygon& sigma, const std::vector<Point>& sverts, int c) {
    int xs = INT32_MAX;
    for (const auto& e : sigma.edges())
        if (e.vertical() && e.a.y == c - 1 && e.b.y == c) xs = std::min(xs, e.a.x);
    if (xs == INT32_MAX) return std::nullopt;
    Mod m;
    m.c = c;
    m.tip_x = xs - 4;
    m.removed = {Edge({xs, c - 1}, {xs, c})};
    std::vector<Point> corners{{xs - 4, c - 1}, {xs - 4, c}, {xs, c}};
    auto pv = path_vertices({xs, c - 1}, corners);
    for (size_t i = 1; i + 1 < pv.size(); ++i)
        if (vertex_in(sverts, pv[i])) return std::nullopt;
    add_segment(m.added, {xs, c - 1}, {xs - 4, c - 1});
    add_segment(m.added, {xs - 4, c - 1}, {xs - 4, c});
    add_segment(m.added, {xs - 4, c}, {xs, c});
    return m;
}

Polygon apply_mod(const Polygon& base, const Mod& m) {
    std::vector<Edge> es = base.edges();
    for (const auto& r : m.removed) es.erase(std::remove(es.begin(), es.end(), r), es.end());
    es.insert(es.end(), m.added.begin(), m.added.end());
    return Polygon(std::move(es), true);
}

struct JoinPlan {
    Mod left;
    Mod right;
    Polygon tau_mod;
    Polygon sigma_mod;
    Plaquette junction;
};

// The junction row scan: the highest row pair at or below the top of sigma
// that both sides can serve.
std::optional<JoinPlan> plan_join(const Polygon& tau, const Polygon& sigma) {
    auto tv = tau.vertex_set();
    auto sv = sigma.vertex_set();
    {
        // standing requirement on the extended vertical intervals
        int tlo = y_min(tv) - 1, thi = y_max(tv) + 1;
        int slo = y_min(sv) - 1, shi = y_max(sv) + 1;
        if (thi < slo || shi < tlo)
            fail(errc::vertical_intervals_disjoint, "extended vertical intervals do not meet");
    }
    for (auto p : sv)
        if (vertex_in(tv, p)) return std::nullopt;

    LeftContext ctx(tau);
    int t = y_max(sv);
    for (int c = t; c >= t - 2; --c) {
        auto lm = left_mod(tau, ctx, c);
        if (!lm) continue;
        auto rm = right_mod(sigma, sv, c);
        if (!rm) continue;
        if (rm->tip_x != lm->tip_x + 1) return std::nullopt; // wrong horizontal placement
        JoinPlan plan;
        plan.left = *lm;
        plan.right = *rm;
        try {
            plan.tau_mod = apply_mod(tau, *lm);
            plan.sigma_mod = apply_mod(sigma, *rm);
        } catch (const error&) {
            return std::nullopt;
        }
        // full separation of the modified polygons
        auto tmv = plan.tau_mod.vertex_set();
        for (auto p : plan.sigma_mod.vertex_set())
            if (vertex_in(tmv, p)) return std::nullopt;
        // the northeast vertex of the join must stay on the left polygon
        Point ne_tau = compass_corner(tv, Corner::NE);
        auto beats = [&](Point p) {
            return p.y > ne_tau.y || (p.y == ne_tau.y && p.x > ne_tau.x);
        };
        for (auto p : tmv)
            if (beats(p)) return std::nullopt;
        for (auto p : plan.sigma_mod.vertex_set())
            if (beats(p)) return std::nullopt;
        plan.junction = Plaquette{Point{lm->tip_x, c - 1}};
        for (const auto& h : plan.junction.horizontal_edges())
            if (plan.tau_mod.contains(h) || plan.sigma_mod.contains(h)) return std::nullopt;
        return plan;
    }
    return std::nullopt;
}

} // namespace

std::optional<Plaquette> is_madras_joinable(const Polygon& tau, const Polygon& sigma) {
    auto plan = plan_join(tau, sigma);
    if (!plan) return std::nullopt;
    return plan->junction;
}

JoinRecord madras_join(const Polygon& tau, const Polygon& sigma) {
    auto plan = plan_join(tau, sigma);
    if (!plan) fail(errc::not_joinable, "pair is not Madras joinable as placed");
    JoinRecord rec;
    rec.left = tau;
    rec.right = sigma.normalized();
    rec.shift = sigma.ne();
    rec.junction = plan->junction;
    rec.output = join_via_plaquette(plan->tau_mod, plan->sigma_mod, plan->junction);
    return rec;
}

bool is_globally_madras_joinable(const Polygon& tau, const Polygon& sigma) {
    auto plan = plan_join(tau, sigma);
    if (!plan) return false;
    Polygon out = join_via_plaquette(plan->tau_mod, plan->sigma_mod, plan->junction);
    return is_global_join_plaquette(out, plan->junction);
}

std::optional<Point> canonical_placement(const Polygon& tau, const Polygon& sigma_normalized,
                                         int t) {
    // Pin the vertical coordinate, slide in from the right until the surgery
    // sites align, then recheck the full plan at the discovered spot.
    Polygon probe = sigma_normalized.translated({0, t});
    auto sv = probe.vertex_set();
    LeftContext ctx(tau);
    for (int c = t; c >= t - 2; --c) {
        auto lm = left_mod(tau, ctx, c);
        if (!lm) continue;
        auto rm = right_mod(probe, sv, c);
        if (!rm) continue;
        int ux = (lm->tip_x + 1) - rm->tip_x;
        Point u{ux, t};
        try {
            if (is_madras_joinable(tau, sigma_normalized.translated(u))) return u;
        } catch (const error&) {
        }
        return std::nullopt;
    }
    return std::nullopt;
}

std::vector<Point> shift_set(const Polygon& phi1, const Polygon& phi2) {
    if (phi1.ne() != Point{0, 0} || !polygon_class(phi1).in_l)
        fail(errc::wrong_class, "first polygon must be NE-rooted and in the left class");
    if (phi2.ne() != Point{0, 0} || !polygon_class(phi2).in_r)
        fail(errc::wrong_class, "second polygon must be NE-rooted and in the right class");
    auto v1 = phi1.vertex_set();
    auto v2 = phi2.vertex_set();
    int h2 = extent_of(v2).height;
    std::vector<Point> out;
    for (int t = y_min(v1) - h2 - 2; t <= y_max(v1) + 2; ++t) {
        auto u = canonical_placement(phi1, phi2, t);
        if (!u) continue;
        if (is_globally_madras_joinable(phi1, phi2.translated(*u))) out.push_back(*u);
    }
    return out;
}

void RgjParams::validate() const {
    if (k < 4 || l < 4 || k % 2 != 0 || l % 2 != 0)
        fail(errc::constraint_violation, "lengths must be even and at least 4");
    if (2 * l < k || l > 35 * k)
        fail(errc::constraint_violation, "length pair must satisfy k/2 <= l <= 35k");
    if (rho <= 0 || rho > 1) fail(errc::constraint_violation, "rho must lie in (0,1]");
}

int RgjParams::window_width() const {
    return (int)std::floor(rho * std::sqrt((double)k) + 1e-9);
}

namespace {

std::vector<Polygon> class_members(int n, bool left, const EnumConfig& cfg) {
    auto table = enumerate(ObjectClass::polygon, n, true, cfg);
    std::vector<Polygon> out;
    for (const auto& s : table.members) {
        Polygon p = Polygon::from_direction_string(s);
        auto f = polygon_class(p);
        if ((left && f.in_left) || (!left && f.in_right)) out.push_back(p);
    }
    return out;
}

} // namespace

std::vector<JoinRecord> build_rgj(const RgjParams& params, const EnumConfig& cfg) {
    params.validate();
    std::vector<JoinRecord> out;
    int w = params.window_width();
    if (w <= 0) return out;
    auto lefts = class_members(params.k, true, cfg);
    auto rights = class_members(params.l, false, cfg);
    for (const auto& tau : lefts) {
        int ye = compass_corner(tau.vertex_set(), Corner::ES).y;
        for (const auto& sigma : rights) {
            for (int i = 0; i < w; ++i) {
                int t = ye - i;
                auto u = canonical_placement(tau, sigma, t);
                if (!u)
                    fail(errc::not_joinable, "window placement failed at k=" +
                                                 std::to_string(params.k) + " l=" +
                                                 std::to_string(params.l) + " offset " +
                                                 std::to_string(i));
                out.push_back(madras_join(tau, sigma.translated(*u)));
            }
        }
    }
    return out;
}

uint64_t rgj_cardinality(const RgjParams& params, const EnumConfig& cfg) {
    auto records = build_rgj(params, cfg);
    std::set<Polygon> distinct;
    for (const auto& r : records) distinct.insert(r.output);
    if (distinct.size() != records.size())
        fail(errc::constraint_violation, "regulation joins collided");
    return records.size();
}

RgjDecomposition rgj_decompose(const Polygon& phi, const RgjParams& params) {
    params.validate();
    int w = params.window_width();
    if (phi.length() != params.k + params.l + 16)
        fail(errc::not_regulation, "length does not match k + l + 16");
    if (w <= 0) fail(errc::not_regulation, "empty offset window");

    std::vector<RgjDecomposition> found;
    auto consider = [&](const RgjDecomposition& d) {
        for (const auto& f : found)
            if (f.left == d.left && f.right == d.right && f.shift == d.shift) return;
        found.push_back(d);
    };

    Point ne = phi.ne();
    for (const auto& p : join_plaquettes(phi)) {
        SplitResult s = split(phi, p);
        Polygon& a = s.left_component.has_vertex(ne) ? s.left_component : s.right_component;
        Polygon& b = s.left_component.has_vertex(ne) ? s.right_component : s.left_component;
        if (a.length() != params.k + 8 || b.length() != params.l + 8) continue;

        // invert the right-side bump: its tip is the plaquette's right column
        int c = p.anchor.y + 1;
        int aR = p.anchor.x + 1;
        int xs = aR + 4;
        Mod rm;
        rm.c = c;
        rm.tip_x = aR;
        rm.removed = {Edge({xs, c - 1}, {xs, c})};
        add_segment(rm.added, {xs, c - 1}, {aR, c - 1});
        add_segment(rm.added, {aR, c - 1}, {aR, c});
        add_segment(rm.added, {aR, c}, {xs, c});
        bool pattern_ok = true;
        for (const auto& e : rm.added)
            if (!b.contains(e)) pattern_ok = false;
        if (!pattern_ok || b.contains(rm.removed[0])) continue;
        Polygon sigma_pos;
        try {
            Mod inverse;
            inverse.removed = rm.added;
            inverse.added = rm.removed;
            sigma_pos = apply_mod(b, inverse);
        } catch (const error&) {
            continue;
        }
        if (sigma_pos.length() != params.l) continue;

        Polygon sigma = sigma_pos.normalized();
        Point u = sigma_pos.ne();
        if (!polygon_class(sigma).in_right) continue;

        // Recover the left polygon by trying each local case in reverse; the
        // rebuild is the arbiter.
        int t = y_max(sigma_pos.vertex_set());
        for (int d = 0; d <= 4; ++d) {
            int ye = c + d;
            std::vector<std::pair<std::vector<Edge>, std::vector<Edge>>> candidates;
            int aL = p.anchor.x;
            {
                // bump
                int xe = aL - 4;
                std::vector<Edge> added, removed{Edge({xe, c - 1}, {xe, c})};
                add_segment(added, {xe, c - 1}, {aL, c - 1});
                add_segment(added, {aL, c - 1}, {aL, c});
                add_segment(added, {aL, c}, {xe, c});
                if (d == 0) candidates.emplace_back(added, removed);
            }
            {
                // dip
                int xm = aL - 3 + d;
                std::vector<Edge> added, removed{Edge({xm - 1, ye}, {xm, ye})};
                add_segment(added, {xm - 1, ye}, {xm - 1, c - 1});
                add_segment(added, {xm - 1, c - 1}, {aL, c - 1});
                add_segment(added, {aL, c - 1}, {aL, ye});
                add_segment(added, {aL, ye}, {xm, ye});
                if (d <= 3) candidates.emplace_back(added, removed);
            }
            for (int down = 0; down <= 1; ++down) {
                int xm = down ? aL - 4 + d : aL - 3 + d;
                if (xm > aL || (!down && d > 3)) continue;
                for (int xq = xm - 1; xq >= x_min(a.vertex_set()) - 1; --xq) {
                    std::vector<Edge> added, removed;
                    Point start = down ? Point{xq, ye - 1} : Point{xq, ye};
                    if (down) removed.push_back(Edge({xq, ye - 1}, {xq, ye}));
                    add_segment(removed, {xq, ye}, {xm, ye});
                    add_segment(added, start, {xq, c - 1});
                    add_segment(added, {xq, c - 1}, {aL, c - 1});
                    add_segment(added, {aL, c - 1}, {aL, ye});
                    add_segment(added, {aL, ye}, {xm, ye});
                    candidates.emplace_back(added, removed);
                }
            }
            for (auto& [added, removed] : candidates) {
                bool ok = true;
                for (const auto& e : added)
                    if (!a.contains(e)) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                Polygon tau;
                try {
                    Mod inv;
                    inv.removed = added;
                    inv.added = removed;
                    tau = apply_mod(a, inv);
                } catch (const error&) {
                    continue;
                }
                if (tau.length() != params.k) continue;
                if (tau.ne() != ne) continue;
                if (!polygon_class(tau).in_left) continue;
                int ye_tau = compass_corner(tau.vertex_set(), Corner::ES).y;
                int offset = ye_tau - t;
                if (offset < 0 || offset >= w) continue;
                try {
                    JoinRecord rec = madras_join(tau, sigma_pos);
                    if (rec.output != phi || !(rec.junction == p)) continue;
                } catch (const error&) {
                    continue;
                }
                consider({tau, sigma, u, p});
            }
        }
    }
    if (found.empty()) fail(errc::not_regulation, "no regulation decomposition");
    if (found.size() > 1) fail(errc::not_regulation, "decomposition is not unique");
    return found[0];
}

bool is_regulation(const Polygon& phi, const RgjParams& params) {
    try {
        rgj_decompose(phi, params);
        return true;
    } catch (const error& e) {
        if (e.code() == errc::not_regulation) return false;
        throw;
    }
}

std::set<int> tau_gamma(const Polygon& phi, const std::set<int>& index_set, double rho) {
    std::set<int> out;
    int s = phi.length();
    for (int k : index_set) {
        int l = s - 16 - k;
        if (k < 4 || l < 4 || k % 2 != 0 || l % 2 != 0) continue;
        if (2 * l < k || l > 35 * k) continue;
        RgjParams params{k, l, rho};
        if (is_regulation(phi, params)) out.insert(k);
    }
    return out;
}

} // namespace sawlab
