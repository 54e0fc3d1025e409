#include "sawlab/lattice.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace sawlab {

char direction_char(Point step) {
    if (step == e2) return 'N';
    if (step == e1) return 'E';
    if (step == Point{0, -1}) return 'S';
    if (step == Point{-1, 0}) return 'W';
    fail(errc::invalid_params, "not a unit step");
}

Point direction_step(char c) {
    switch (c) {
        case 'N': return e2;
        case 'E': return e1;
        case 'S': return {0, -1};
        case 'W': return {-1, 0};
    }
    fail(errc::invalid_params, std::string("bad direction char '") + c + "'");
}

namespace {

// true if a beats b for the given corner
bool corner_better(Point a, Point b, Corner c) {
    auto key = [&](Point p) -> std::pair<int, int> {
        switch (c) {
            case Corner::NE: return {p.y, p.x};
            case Corner::NW: return {p.y, -p.x};
            case Corner::SE: return {-p.y, p.x};
            case Corner::SW: return {-p.y, -p.x};
            case Corner::EN: return {p.x, p.y};
            case Corner::ES: return {p.x, -p.y};
            case Corner::WN: return {-p.x, p.y};
            case Corner::WS: return {-p.x, -p.y};
        }
        return {0, 0};
    };
    return key(a) > key(b);
}

} // namespace

Point compass_corner(const std::vector<Point>& pts, Corner c) {
    if (pts.empty()) fail(errc::empty_set, "compass corner of empty set");
    Point best = pts[0];
    for (auto p : pts)
        if (corner_better(p, best, c)) best = p;
    return best;
}

int y_max(const std::vector<Point>& pts) { return compass_corner(pts, Corner::NE).y; }
int y_min(const std::vector<Point>& pts) { return compass_corner(pts, Corner::SE).y; }
int x_max(const std::vector<Point>& pts) { return compass_corner(pts, Corner::EN).x; }
int x_min(const std::vector<Point>& pts) { return compass_corner(pts, Corner::WN).x; }

Extent extent_of(const std::vector<Point>& pts) {
    return {y_max(pts) - y_min(pts), x_max(pts) - x_min(pts)};
}

// ---------------------------------------------------------------------------
// Walk
// ---------------------------------------------------------------------------

Walk::Walk(std::vector<Point> vertices, bool validate) : v_(std::move(vertices)) {
    if (!validate) return;
    if (v_.empty()) fail(errc::invalid_params, "walk needs at least one vertex");
    std::unordered_set<Point, PointHash> seen;
    seen.insert(v_[0]);
    for (size_t i = 1; i < v_.size(); ++i) {
        if (!adjacent(v_[i - 1], v_[i]))
            fail(errc::non_unit_step, "non-unit step at index " + std::to_string(i), (long long)i);
        if (!seen.insert(v_[i]).second)
            fail(errc::repeated_vertex, "repeated vertex at index " + std::to_string(i), (long long)i);
    }
}

Walk validate_walk(const std::vector<Point>& vertices) { return Walk(vertices, true); }

Walk Walk::prefix(int k) const {
    if (k < 0 || k > length()) fail(errc::invalid_length, "prefix index out of range");
    return Walk(std::vector<Point>(v_.begin(), v_.begin() + k + 1), false);
}

Walk Walk::reversed() const {
    std::vector<Point> r(v_.rbegin(), v_.rend());
    return Walk(std::move(r), false);
}

Walk Walk::translated(Point t) const {
    std::vector<Point> r;
    r.reserve(v_.size());
    for (auto p : v_) r.push_back(p + t);
    return Walk(std::move(r), false);
}

std::string Walk::str() const {
    std::string s = std::to_string(v_[0].x) + "," + std::to_string(v_[0].y) + ":";
    for (size_t i = 1; i < v_.size(); ++i) s += direction_char(v_[i] - v_[i - 1]);
    return s;
}

Walk Walk::parse(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) fail(errc::invalid_params, "walk string missing ':'");
    auto comma = s.find(',');
    if (comma == std::string::npos || comma > colon)
        fail(errc::invalid_params, "walk string missing start coordinates");
    Point p{std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1, colon - comma - 1))};
    std::vector<Point> v{p};
    for (size_t i = colon + 1; i < s.size(); ++i) {
        p = p + direction_step(s[i]);
        v.push_back(p);
    }
    return Walk(std::move(v), true);
}

// ---------------------------------------------------------------------------
// Polygon
// ---------------------------------------------------------------------------

Polygon::Polygon(std::vector<Edge> edges, bool validate) : edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    if (!validate) return;
    if (edges_.size() < 4 || edges_.size() % 2 != 0)
        fail(errc::invalid_polygon, "polygon length must be even and at least 4");
    std::unordered_map<Point, int, PointHash> deg;
    for (const auto& e : edges_) {
        deg[e.a]++;
        deg[e.b]++;
    }
    for (const auto& [p, d] : deg)
        if (d != 2) fail(errc::invalid_polygon, "polygon vertex degree != 2");
    // connectivity: walk the cycle from one edge
    std::unordered_map<Point, std::vector<Point>, PointHash> adj;
    for (const auto& e : edges_) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    Point start = edges_[0].a;
    Point prev = start, cur = adj[start][0];
    size_t steps = 1;
    while (cur != start) {
        const auto& nb = adj[cur];
        Point nxt = (nb[0] == prev) ? nb[1] : nb[0];
        prev = cur;
        cur = nxt;
        ++steps;
        if (steps > edges_.size()) break;
    }
    if (steps != edges_.size()) fail(errc::invalid_polygon, "polygon edge set not a single cycle");
}

bool Polygon::contains(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<Point> Polygon::vertex_set() const {
    std::vector<Point> v;
    v.reserve(edges_.size() * 2);
    for (const auto& e : edges_) {
        v.push_back(e.a);
        v.push_back(e.b);
    }
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool Polygon::has_vertex(Point p) const {
    for (const auto& e : edges_)
        if (e.a == p || e.b == p) return true;
    return false;
}

Polygon Polygon::translated(Point t) const {
    std::vector<Edge> es;
    es.reserve(edges_.size());
    for (const auto& e : edges_) es.emplace_back(e.a + t, e.b + t);
    return Polygon(std::move(es), false);
}

Polygon Polygon::normalized() const {
    Point n = ne();
    return translated(Point{-n.x, -n.y});
}

std::vector<Point> Polygon::traversal() const {
    auto verts = vertex_set();
    Point start = compass_corner(verts, Corner::NE);
    std::unordered_map<Point, std::vector<Point>, PointHash> adj;
    for (const auto& e : edges_) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    std::vector<Point> path{start};
    path.reserve(edges_.size() + 1);
    Point prev = start;
    Point cur = start - e1; // the NE vertex always has its west and south edges
    path.push_back(cur);
    while (cur != start) {
        const auto& nb = adj[cur];
        Point nxt = (nb[0] == prev) ? nb[1] : nb[0];
        prev = cur;
        cur = nxt;
        path.push_back(cur);
    }
    return path;
}

std::string Polygon::direction_string() const {
    auto t = traversal();
    std::string s;
    s.reserve(t.size() - 1);
    for (size_t i = 1; i < t.size(); ++i) s += direction_char(t[i] - t[i - 1]);
    return s;
}

Polygon Polygon::from_direction_string(const std::string& s, Point ne) {
    Point p = ne;
    std::vector<Edge> es;
    es.reserve(s.size());
    for (char c : s) {
        Point q = p + direction_step(c);
        es.emplace_back(p, q);
        p = q;
    }
    if (p != ne) fail(errc::invalid_polygon, "direction string does not close");
    return Polygon(std::move(es), true);
}

// ---------------------------------------------------------------------------
// Plaquette
// ---------------------------------------------------------------------------

std::vector<Edge> Plaquette::all_edges() const {
    auto h = horizontal_edges();
    auto v = vertical_edges();
    h.insert(h.end(), v.begin(), v.end());
    return h;
}

std::vector<Edge> Plaquette::horizontal_edges() const {
    Point a = anchor;
    return {Edge(a, a + e1), Edge(a + e2, a + e1 + e2)};
}

std::vector<Edge> Plaquette::vertical_edges() const {
    Point a = anchor;
    return {Edge(a, a + e2), Edge(a + e1, a + e1 + e2)};
}

Polygon Plaquette::as_polygon() const { return Polygon(all_edges()); }

std::string Plaquette::str() const {
    return "P:" + std::to_string(anchor.x) + "," + std::to_string(anchor.y);
}

Plaquette Plaquette::parse(const std::string& s) {
    if (s.rfind("P:", 0) != 0) fail(errc::invalid_params, "plaquette string must start with P:");
    auto comma = s.find(',');
    if (comma == std::string::npos) fail(errc::invalid_params, "plaquette string missing comma");
    return Plaquette{Point{std::stoi(s.substr(2, comma - 2)), std::stoi(s.substr(comma + 1))}};
}

// ---------------------------------------------------------------------------
// Two-part decomposition
// ---------------------------------------------------------------------------

TwoPartDecomposition two_part_decompose(const Walk& w) {
    const auto& v = w.vertices();
    Point apex = compass_corner(v, Corner::NE);
    size_t j = 0;
    while (v[j] != apex) ++j;

    std::vector<Point> head; // reversal of v[0..j]
    head.reserve(j + 1);
    for (size_t i = 0; i <= j; ++i) head.push_back(v[j - i]);
    std::vector<Point> tail(v.begin() + (long)j, v.end());
    Walk a(std::move(head), false); // from apex back to the start
    Walk b(std::move(tail), false); // from apex on to the end

    Point west = apex - e1;
    TwoPartDecomposition d;
    d.apex = apex;
    if (a.length() > 0 && a[1] == west) {
        d.first = a;
        d.second = b;
        d.first_from_start = true;
    } else if (b.length() > 0 && b[1] == west) {
        d.first = b;
        d.second = a;
        d.first_from_start = false;
    } else if (a.length() == 0) {
        d.first = a;
        d.second = b;
        d.first_from_start = true;
    } else {
        d.first = b; // b has length zero here
        d.second = a;
        d.first_from_start = false;
    }
    return d;
}

Walk recompose(const TwoPartDecomposition& d) {
    const Walk& head = d.first_from_start ? d.first : d.second;
    const Walk& tail = d.first_from_start ? d.second : d.first;
    std::vector<Point> v;
    v.reserve((size_t)head.length() + tail.length() + 1);
    const auto& hv = head.vertices();
    v.assign(hv.rbegin(), hv.rend());
    const auto& tv = tail.vertices();
    v.insert(v.end(), tv.begin() + 1, tv.end());
    return Walk(std::move(v), true);
}

bool walk_closes(const Walk& w) {
    return w.length() >= 1 && adjacent(w.front(), w.back());
}

ClosedWalkPolygon polygon_of_closing_walk(const Walk& w) {
    int n = w.length();
    if (n < 3) fail(errc::length_two_excluded, "closing walks of length below 3 are excluded");
    if (!adjacent(w.front(), w.back())) fail(errc::not_closing, "walk endpoints not adjacent");
    std::vector<Edge> es;
    es.reserve((size_t)n + 1);
    const auto& v = w.vertices();
    for (int i = 1; i <= n; ++i) es.emplace_back(v[(size_t)i - 1], v[(size_t)i]);
    Edge missing(w.back(), w.front());
    es.push_back(missing);
    return {Polygon(std::move(es), true), missing};
}

// ---------------------------------------------------------------------------
// Symmetries
// ---------------------------------------------------------------------------

Point Symmetry::apply(Point p) const {
    switch (kind) {
        case SymmetryKind::rot90: return {-p.y, p.x}; // counterclockwise
        case SymmetryKind::rot270: return {p.y, -p.x};
        case SymmetryKind::reflect_x_axis: return {p.x, -p.y};
        case SymmetryKind::reflect_vertical_line: return {-p.x, p.y};
        case SymmetryKind::translate: return p + shift;
    }
    return p;
}

Symmetry Symmetry::inverse() const {
    switch (kind) {
        case SymmetryKind::rot90: return Symmetry{SymmetryKind::rot270, {0, 0}};
        case SymmetryKind::rot270: return Symmetry{SymmetryKind::rot90, {0, 0}};
        case SymmetryKind::reflect_x_axis: return *this;
        case SymmetryKind::reflect_vertical_line: return *this;
        case SymmetryKind::translate: return Symmetry{SymmetryKind::translate, {-shift.x, -shift.y}};
    }
    return *this;
}

Walk symmetry_apply(const Walk& w, const Symmetry& g) {
    std::vector<Point> v;
    v.reserve(w.vertices().size());
    for (auto p : w.vertices()) v.push_back(g.apply(p));
    return Walk(std::move(v), false);
}

Polygon symmetry_apply(const Polygon& p, const Symmetry& g) {
    std::vector<Edge> es;
    es.reserve(p.edges().size());
    for (const auto& e : p.edges()) es.emplace_back(g.apply(e.a), g.apply(e.b));
    return Polygon(std::move(es), false);
}

} // namespace sawlab
