#pragma once

#include "topo/group.hpp"
#include "topo/sset.hpp"

namespace topo {

/// One vertex, nothing else.
ReducedSimplicialSet point_model();

/// Delta^n / boundary: one vertex, one nondegenerate n-cell whose faces are
/// all fully degenerate. Requires n >= 1.
ReducedSimplicialSet delta_quotient(int n);

/// Wedge at the base vertex; summand cells keep their ids prefixed "sK.".
ReducedSimplicialSet wedge_of(const std::vector<ReducedSimplicialSet>& parts);

/// Presentation 2-complex: one vertex, an edge per generator, and per
/// relator a fan of triangles over its prefix diagonals. Triangle i encodes
/// p_{i+1} = p_i * x_{i+1}; the last prefix is the degenerate edge.
ReducedSimplicialSet presentation_complex(const GroupPresentation& p);

/// Collapse of everything to the base point.
SimplicialMap collapse_to_point(const SimplicialSetData& s);

}  // namespace topo
