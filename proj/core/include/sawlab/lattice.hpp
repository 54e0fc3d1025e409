#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sawlab/errors.hpp"

namespace sawlab {

struct Point {
    int x = 0;
    int y = 0;

    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(Point a, Point b) { return !(a == b); }
    friend bool operator<(Point a, Point b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    }
};

inline constexpr Point e1{1, 0};
inline constexpr Point e2{0, 1};

inline int manhattan(Point a, Point b) {
    int dx = a.x - b.x, dy = a.y - b.y;
    return (dx < 0 ? -dx : dx) + (dy < 0 ? -dy : dy);
}
inline bool adjacent(Point a, Point b) { return manhattan(a, b) == 1; }

struct PointHash {
    size_t operator()(Point p) const {
        uint64_t v = (uint64_t)(uint32_t)p.x << 32 | (uint32_t)p.y;
        v *= 0x9e3779b97f4a7c15ull;
        return (size_t)(v ^ (v >> 29));
    }
};

// Unit lattice edge as an unordered endpoint pair; stored with a < b.
struct Edge {
    Point a, b;

    Edge() = default;
    Edge(Point u, Point v) {
        if (!adjacent(u, v)) fail(errc::invalid_params, "edge endpoints not at distance 1");
        if (v < u) std::swap(u, v);
        a = u;
        b = v;
    }

    bool horizontal() const { return a.y == b.y; }
    bool vertical() const { return a.x == b.x; }

    friend bool operator==(const Edge& l, const Edge& r) { return l.a == r.a && l.b == r.b; }
    friend bool operator!=(const Edge& l, const Edge& r) { return !(l == r); }
    friend bool operator<(const Edge& l, const Edge& r) {
        return l.a != r.a ? l.a < r.a : l.b < r.b;
    }
};

// Steps in serialization order N,E,S,W <-> +e2,+e1,-e2,-e1.
char direction_char(Point step);
Point direction_step(char c);

// ---------------------------------------------------------------------------
// Compass corners of a finite vertex set. First letter picks the primary
// extremum, second letter breaks ties: NE = max y then max x, EN = max x then
// max y (the lexicographic maximum with x primary), WS = lexicographic min.
// ---------------------------------------------------------------------------
enum class Corner { NE, NW, SE, SW, EN, ES, WN, WS };

Point compass_corner(const std::vector<Point>& pts, Corner c);

struct Extent {
    int height = 0;
    int width = 0;
};

Extent extent_of(const std::vector<Point>& pts);

int y_max(const std::vector<Point>& pts);
int y_min(const std::vector<Point>& pts);
int x_max(const std::vector<Point>& pts);
int x_min(const std::vector<Point>& pts);

// ---------------------------------------------------------------------------
// Walk: ordered self-avoiding vertex sequence. Length = #vertices - 1; the
// zero-length walk (single vertex) is valid.
// ---------------------------------------------------------------------------
class Walk {
  public:
    Walk() : v_{Point{0, 0}} {}
    explicit Walk(std::vector<Point> vertices, bool validate = true);

    int length() const { return (int)v_.size() - 1; }
    const std::vector<Point>& vertices() const { return v_; }
    Point operator[](int i) const { return v_[(size_t)i]; }
    Point front() const { return v_.front(); }
    Point back() const { return v_.back(); }

    Walk prefix(int k) const; // vertices 0..k
    Walk reversed() const;
    Walk translated(Point t) const;

    // Serialized as "x0,y0:DIRS".
    std::string str() const;
    static Walk parse(const std::string& s);

    friend bool operator==(const Walk& a, const Walk& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Walk& a, const Walk& b) { return !(a == b); }
    friend bool operator<(const Walk& a, const Walk& b) { return a.v_ < b.v_; }

  private:
    std::vector<Point> v_;
};

Walk validate_walk(const std::vector<Point>& vertices);

// ---------------------------------------------------------------------------
// Polygon: closed even-length edge set, every incident vertex of degree
// exactly two, connected.
// ---------------------------------------------------------------------------
class Polygon {
  public:
    Polygon() = default;
    explicit Polygon(std::vector<Edge> edges, bool validate = true);

    int length() const { return (int)edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; } // sorted
    bool contains(const Edge& e) const;
    std::vector<Point> vertex_set() const; // sorted, deduplicated
    bool has_vertex(Point p) const;

    Point ne() const { return compass_corner(vertex_set(), Corner::NE); }
    Polygon translated(Point t) const;
    Polygon normalized() const; // translate NE to the origin

    // NE-rooted traversal phi_0..phi_n with phi_1 = NE - e1; deterministic.
    std::vector<Point> traversal() const;
    std::string direction_string() const; // first char always W, last always N
    static Polygon from_direction_string(const std::string& s, Point ne = {0, 0});

    friend bool operator==(const Polygon& a, const Polygon& b) { return a.edges_ == b.edges_; }
    friend bool operator!=(const Polygon& a, const Polygon& b) { return !(a == b); }
    friend bool operator<(const Polygon& a, const Polygon& b) { return a.edges_ < b.edges_; }

  private:
    std::vector<Edge> edges_;
};

// Unit square identified by its lower-left corner.
struct Plaquette {
    Point anchor;

    std::vector<Edge> all_edges() const;
    std::vector<Edge> horizontal_edges() const;
    std::vector<Edge> vertical_edges() const;
    Polygon as_polygon() const;

    std::string str() const; // "P:x,y"
    static Plaquette parse(const std::string& s);

    friend bool operator==(const Plaquette& a, const Plaquette& b) { return a.anchor == b.anchor; }
    friend bool operator<(const Plaquette& a, const Plaquette& b) { return a.anchor < b.anchor; }
};

// ---------------------------------------------------------------------------
// Two-part decomposition: split a walk at its NE vertex into two walks that
// emanate from it. The piece stepping to NE - e1 first is the first part; if
// neither does, the zero-length piece is.
// ---------------------------------------------------------------------------
struct TwoPartDecomposition {
    Walk first;
    Walk second;
    Point apex;
    bool first_from_start = true; // whether the first part is the reversal of the initial segment
};

TwoPartDecomposition two_part_decompose(const Walk& w);
Walk recompose(const TwoPartDecomposition& d);

// Adds the missing edge between the endpoints; defined for walk length >= 3.
struct ClosedWalkPolygon {
    Polygon polygon;
    Edge missing_edge;
};
ClosedWalkPolygon polygon_of_closing_walk(const Walk& w);

bool walk_closes(const Walk& w); // ||gamma_n - gamma_0|| = 1

// ---------------------------------------------------------------------------
// Lattice symmetries.
// ---------------------------------------------------------------------------
enum class SymmetryKind { rot90, rot270, reflect_x_axis, reflect_vertical_line, translate };

struct Symmetry {
    SymmetryKind kind;
    Point shift{0, 0}; // used by translate

    Point apply(Point p) const;
    Symmetry inverse() const;
};

Walk symmetry_apply(const Walk& w, const Symmetry& g);
Polygon symmetry_apply(const Polygon& p, const Symmetry& g);

} // namespace sawlab
