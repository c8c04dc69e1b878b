#pragma once

#include <optional>

#include "topo/coalgebra.hpp"
#include "topo/covering.hpp"
#include "topo/twisted.hpp"

namespace topo {

/// A replayable inequality of weak-homotopy invariants.
struct Witness {
  std::string kind;  // "pi1" | "local-homology" | "ordinary-homology"
  std::string name;  // invariant or module label
  int degree = -1;
  std::string source_value;
  std::string target_value;

  Json to_json() const;
  bool operator==(const Witness& rhs) const = default;
};

struct TranscriptEntry {
  std::string check;
  std::string inputs_hash;
  std::string result;
};

struct PartialVerdict {
  bool distinguished = false;
  std::vector<Witness> witnesses;
  std::vector<std::string> evidence;  // matching data when inconclusive
};

struct DetectConfig {
  int up_to = 2;
  int tc_budget = 10000;
  std::vector<std::pair<std::string, PiModule>> modules;  // over the target's pi1
};

struct Verdict {
  bool not_weak_equivalence = false;
  int depth = 0;  // consistency depth when nothing distinguished
  std::vector<Witness> witnesses;
  std::vector<TranscriptEntry> transcript;

  Json to_json() const;
};

struct OrdinaryReport {
  bool iso_up_to = true;
  std::vector<HomologyMap> per_degree;
  std::optional<Witness> witness;
};

/// Integral homology comparison in degrees 0..up_to.
OrdinaryReport ordinary_quasi_iso(const SimplicialMap& f, int up_to);

/// Fundamental-group invariants: abelianizations always; enumerated orders
/// and surjectivity on cosets when Todd-Coxeter completes within budget.
PartialVerdict compare_pi1(const SimplicialMap& f, int tc_budget);

/// Homology with coefficients in a module over the target's fundamental
/// group, pulled back along the induced generator map (edges with
/// degenerate image act as the identity). Distinguishes when some induced
/// map in degrees <= up_to fails to be an isomorphism.
PartialVerdict compare_local_homology(const SimplicialMap& f, const PiModule& m_target,
                                      const std::string& label, int up_to);

/// Regular-coefficient comparison: each side with finite enumerated pi1
/// gets its own Z[pi] (the homology of its universal cover, a weak-homotopy
/// invariant); inconclusive unless both enumerations complete.
PartialVerdict compare_local_homology_regular(const SimplicialMap& f, int up_to, int tc_budget);

/// Full decision procedure. Sound for the negative direction only:
/// NotWeakEquivalence always carries replayable witnesses; otherwise the
/// verdict is consistency up to the checked depth, never a positive claim.
Verdict whitehead_verdict(const SimplicialMap& f, const DetectConfig& cfg);

/// Re-executes the named check and confirms the recorded inequality.
bool replay_witness(const SimplicialMap& f, const Witness& w, const DetectConfig& cfg);

}  // namespace topo
