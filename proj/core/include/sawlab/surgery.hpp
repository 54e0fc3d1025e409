#pragma once

#include <vector>

#include "sawlab/lattice.hpp"

namespace sawlab {

// P is a join plaquette of phi iff phi contains both horizontal edges of P
// and neither vertical edge.
bool is_join_plaquette(const Polygon& phi, const Plaquette& p);

// All join plaquettes, ordered by anchor.
std::vector<Plaquette> join_plaquettes(const Polygon& phi);

struct SplitResult {
    Polygon left_component;  // contains the left vertical edge of the pivot
    Polygon right_component; // contains the right vertical edge
    Plaquette pivot;
};

// Symmetric difference phi ^ P: swaps the two horizontal edges of P for its
// two vertical edges, producing two disjoint polygons.
SplitResult split(const Polygon& phi, const Plaquette& p);

// Reverse operation: each input polygon holds one vertical edge of P.
Polygon join_via_plaquette(const Polygon& a, const Polygon& b, const Plaquette& p);

// Global join plaquettes: the split components can be labelled so that all
// rightmost vertices of phi fall in one and NE(phi) in the other. Returned in
// the total order given by first touch on the outward NE -> ES journey of the
// canonical traversal.
std::vector<Plaquette> global_join_plaquettes(const Polygon& phi);
bool is_global_join_plaquette(const Polygon& phi, const Plaquette& p);

// Length of the split component containing NE(phi); the key injectivity
// statistic for global join plaquettes.
int ne_component_length(const Polygon& phi, const Plaquette& p);

} // namespace sawlab
