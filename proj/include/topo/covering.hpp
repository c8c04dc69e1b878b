#pragma once

#include "topo/coset_table.hpp"
#include "topo/sset.hpp"

namespace topo {

/// Cover of a reduced simplicial set classified by a coset table for its
/// fundamental-group presentation. Cells are pairs "id@coset"; the 0-th
/// face translates the coset by the (0,1)-edge of the cell, the others keep
/// it. For the table over the trivial subgroup this is the universal cover.
SimplicialSetData covering_space(const ReducedSimplicialSet& x, const CosetTable& t);

/// Deck transformation of the universal cover given by left multiplication
/// with the group element represented by coset h. Requires a table over the
/// trivial subgroup.
SimplicialMap deck_transformation(const ReducedSimplicialSet& x, const CosetTable& t, int h);

}  // namespace topo
