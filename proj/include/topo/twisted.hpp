#pragma once

#include "topo/cobar.hpp"
#include "topo/pi_module.hpp"

namespace topo {

/// Maurer-Cartan equation d(tau) + tau * tau = 0 for the universal twisting
/// cochain tau = -(desuspension), checked on every basis simplex of
/// dimension <= max_dim. The pieces are assembled independently from the
/// coalgebra matrices and the cobar differential.
bool maurer_cartan_holds(const DgCoalgebra& c, const CobarAlgebra& a, int max_dim,
                         std::string* witness = nullptr);

/// Twisted tensor product C (x)_tau M. Since M sits in degree 0 and acts
/// through the degree-0 projection, the twist reduces to the back-edge
/// coproduct component acting by (edge action - id), with sign (-1)^n in
/// degree n. The boundary is verified to square to zero.
ChainComplex twisted_tensor(const DgCoalgebra& c, const PiModule& m,
                            const GroupPresentation& g);

/// Homology of the twisted tensor product in degrees 0..up_to.
std::vector<FGAbelianGroup> local_homology(const ReducedSimplicialSet& s, const PiModule& m,
                                           int up_to, const CoeffSpec& coeffs = {});

}  // namespace topo
