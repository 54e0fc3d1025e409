#include "sawlab/surgery.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace sawlab {

bool is_join_plaquette(const Polygon& phi, const Plaquette& p) {
    for (const auto& e : p.horizontal_edges())
        if (!phi.contains(e)) return false;
    for (const auto& e : p.vertical_edges())
        if (phi.contains(e)) return false;
    return true;
}

std::vector<Plaquette> join_plaquettes(const Polygon& phi) {
    auto verts = phi.vertex_set();
    int xlo = x_min(verts) - 1, xhi = x_max(verts);
    int ylo = y_min(verts) - 1, yhi = y_max(verts);
    std::vector<Plaquette> out;
    for (int x = xlo; x <= xhi; ++x)
        for (int y = ylo; y <= yhi; ++y) {
            Plaquette p{Point{x, y}};
            if (is_join_plaquette(phi, p)) out.push_back(p);
        }
    return out;
}

namespace {

// Splits an edge set known to be the disjoint union of two cycles.
std::pair<std::vector<Edge>, std::vector<Edge>> two_components(const std::vector<Edge>& edges) {
    std::unordered_map<Point, std::vector<Point>, PointHash> adj;
    for (const auto& e : edges) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    std::unordered_set<Point, PointHash> seen;
    std::vector<std::vector<Edge>> comps;
    for (const auto& e0 : edges) {
        if (seen.count(e0.a)) continue;
        std::vector<Edge> comp;
        Point start = e0.a;
        Point prev = start, cur = adj[start][0];
        seen.insert(start);
        comp.emplace_back(start, cur);
        while (cur != start) {
            seen.insert(cur);
            const auto& nb = adj[cur];
            Point nxt = (nb[0] == prev) ? nb[1] : nb[0];
            comp.emplace_back(cur, nxt);
            prev = cur;
            cur = nxt;
        }
        comps.push_back(std::move(comp));
    }
    if (comps.size() != 2) fail(errc::invalid_polygon, "plaquette flip did not yield two cycles");
    return {std::move(comps[0]), std::move(comps[1])};
}

} // namespace

SplitResult split(const Polygon& phi, const Plaquette& p) {
    if (!is_join_plaquette(phi, p))
        fail(errc::not_join_plaquette, "plaquette is not a join plaquette of the polygon");
    std::vector<Edge> edges = phi.edges();
    for (const auto& h : p.horizontal_edges())
        edges.erase(std::remove(edges.begin(), edges.end(), h), edges.end());
    auto vs = p.vertical_edges();
    edges.insert(edges.end(), vs.begin(), vs.end());
    auto [c1, c2] = two_components(edges);
    Polygon a(std::move(c1));
    Polygon b(std::move(c2));
    const Edge left_vertical = vs[0].a.x < vs[1].a.x ? vs[0] : vs[1];
    SplitResult r;
    r.pivot = p;
    if (a.contains(left_vertical)) {
        r.left_component = std::move(a);
        r.right_component = std::move(b);
    } else {
        r.left_component = std::move(b);
        r.right_component = std::move(a);
    }
    return r;
}

Polygon join_via_plaquette(const Polygon& a, const Polygon& b, const Plaquette& p) {
    auto vs = p.vertical_edges();
    int in_a = (int)a.contains(vs[0]) + (int)a.contains(vs[1]);
    int in_b = (int)b.contains(vs[0]) + (int)b.contains(vs[1]);
    if (in_a != 1 || in_b != 1 || a.contains(vs[0]) == b.contains(vs[0]))
        fail(errc::vertical_edges_not_split,
             "the polygons must split the plaquette's vertical edges between them");
    for (const auto& h : p.horizontal_edges())
        if (a.contains(h) || b.contains(h))
            fail(errc::vertical_edges_not_split, "plaquette horizontal edge already present");
    // vertex-disjointness apart from the plaquette corners they already carry
    auto va = a.vertex_set();
    for (auto q : b.vertex_set())
        if (std::binary_search(va.begin(), va.end(), q))
            fail(errc::not_disjoint, "polygons share a vertex");
    std::vector<Edge> edges = a.edges();
    const auto& eb = b.edges();
    edges.insert(edges.end(), eb.begin(), eb.end());
    for (const auto& v : vs)
        edges.erase(std::remove(edges.begin(), edges.end(), v), edges.end());
    auto hs = p.horizontal_edges();
    edges.insert(edges.end(), hs.begin(), hs.end());
    return Polygon(std::move(edges), true);
}

int ne_component_length(const Polygon& phi, const Plaquette& p) {
    auto r = split(phi, p);
    Point ne = phi.ne();
    if (r.left_component.has_vertex(ne)) return r.left_component.length();
    return r.right_component.length();
}

bool is_global_join_plaquette(const Polygon& phi, const Plaquette& p) {
    if (!is_join_plaquette(phi, p)) return false;
    auto r = split(phi, p);
    auto verts = phi.vertex_set();
    int xm = x_max(verts);
    Point ne = compass_corner(verts, Corner::NE);
    const Polygon* ne_side = r.left_component.has_vertex(ne) ? &r.left_component : &r.right_component;
    const Polygon* other = ne_side == &r.left_component ? &r.right_component : &r.left_component;
    for (auto v : verts)
        if (v.x == xm && !other->has_vertex(v)) return false;
    return !other->has_vertex(ne);
}

std::vector<Plaquette> global_join_plaquettes(const Polygon& phi) {
    std::vector<Plaquette> all = join_plaquettes(phi);
    std::vector<Plaquette> global;
    for (const auto& p : all)
        if (is_global_join_plaquette(phi, p)) global.push_back(p);

    // Order by first touch on the outward journey from NE to ES.
    auto trav = phi.traversal();
    auto verts = phi.vertex_set();
    Point es = compass_corner(verts, Corner::ES);
    size_t es_index = 0;
    while (trav[es_index] != es) ++es_index;
    std::map<Edge, size_t> edge_index;
    for (size_t i = 0; i + 1 < trav.size(); ++i) {
        Edge e(trav[i], trav[i + 1]);
        if (!edge_index.count(e)) edge_index[e] = i;
    }
    auto outward_touch = [&](const Plaquette& p) -> size_t {
        size_t best = trav.size();
        for (const auto& h : p.horizontal_edges()) {
            auto it = edge_index.find(h);
            if (it != edge_index.end() && it->second < es_index) best = std::min(best, it->second);
        }
        return best;
    };
    std::stable_sort(global.begin(), global.end(), [&](const Plaquette& a, const Plaquette& b) {
        return outward_touch(a) < outward_touch(b);
    });
    return global;
}

} // namespace sawlab
