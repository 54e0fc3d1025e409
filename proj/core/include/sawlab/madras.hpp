#pragma once

#include <optional>
#include <set>
#include <vector>

#include "sawlab/enumeration.hpp"
#include "sawlab/lattice.hpp"
#include "sawlab/surgery.hpp"

namespace sawlab {

// Orientation classes. For a polygon of length n with height h and width w:
//   in_l       h >= w and y(ES) at or below mid-height
//   in_r       h >= w
//   left_long  the canonical traversal reaches SE no earlier than index n/2
//   in_left    in_l and left_long;  in_right = in_r
struct PolygonClassFlags {
    bool in_l = false;
    bool in_r = false;
    bool left_long = false;
    bool in_left = false;
    bool in_right = false;
};

PolygonClassFlags polygon_class(const Polygon& phi);

// Traversal index j with phi_j = SE(phi).
int se_traversal_index(const Polygon& phi);

struct JoinRecord {
    Polygon left;      // as placed (NE-rooted in regulation use)
    Polygon right;     // normalized to NE = 0
    Point shift;       // right polygon placement: right + shift was joined
    Plaquette junction;
    Polygon output;    // length |left| + |right| + 16
};

// Joinability of the pair as placed: the local surgery applies with no
// horizontal adjustment. Requires the extended vertical intervals
// [ymin-1, ymax+1] to intersect. Returns the junction plaquette.
std::optional<Plaquette> is_madras_joinable(const Polygon& tau, const Polygon& sigma);
bool is_globally_madras_joinable(const Polygon& tau, const Polygon& sigma);

JoinRecord madras_join(const Polygon& tau, const Polygon& sigma);

// The unique admissible placement of sigma (given normalized, NE = 0) with its
// top row at height t: sigma is pushed in from the right until the surgery
// sites line up. Returns the shift u, if the pair joins there.
std::optional<Point> canonical_placement(const Polygon& tau, const Polygon& sigma_normalized, int t);

// All u making (phi1, phi2 + u) globally Madras joinable; phi1 in the left
// class, phi2 in the right class, both NE-rooted.
std::vector<Point> shift_set(const Polygon& phi1, const Polygon& phi2);

struct RgjParams {
    int k = 4;
    int l = 4;
    double rho = 0.1; // offset-window fraction; window width = floor(rho * sqrt(k))

    void validate() const;
    int window_width() const;
};

// Regulation global joins: every J(phi1, phi2 + u) with phi1 in-left of
// length k, phi2 in-right of length l, and the top of phi2 + u confined to a
// window of window_width() rows at and below y(ES(phi1)).
std::vector<JoinRecord> build_rgj(const RgjParams& params, const EnumConfig& cfg = {});
uint64_t rgj_cardinality(const RgjParams& params, const EnumConfig& cfg = {});

struct RgjDecomposition {
    Polygon left;
    Polygon right; // normalized
    Point shift;
    Plaquette junction;
};
RgjDecomposition rgj_decompose(const Polygon& phi, const RgjParams& params);

bool is_regulation(const Polygon& phi, const RgjParams& params);

// Regulation join indices: k in index_set with phi in RGJ_{k, |phi|-16-k}.
std::set<int> tau_gamma(const Polygon& phi, const std::set<int>& index_set, double rho);

} // namespace sawlab
