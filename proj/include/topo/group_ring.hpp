#pragma once

#include <map>

#include "topo/cobar.hpp"
#include "topo/coset_table.hpp"

namespace topo {

/// Element of the group ring of a free group: finite support map from
/// reduced words to integers. Quotient-group equality is decided through a
/// coset table, never inside the ring.
struct GroupRingElement {
  std::map<Word, Int> terms;

  void add(const Word& w, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
  bool operator==(const GroupRingElement& rhs) const = default;
};

GroupRingElement gre_identity();
GroupRingElement gre_mul(const GroupRingElement& a, const GroupRingElement& b);

/// psi([g]) = g - e on length-1 monomials, psi(1) = e, extended as an
/// algebra map. Words index the generators of the presentation; an unknown
/// letter is rejected.
GroupRingElement psi_word(const std::vector<int>& cobar_word, const GroupPresentation& g);
GroupRingElement psi_poly(const NCPoly& p, const GroupPresentation& g);

/// Pushes an element of Z[free group] into Z[G] along a completed coset
/// table over the trivial subgroup: coefficient per group element.
std::map<int, Int> evaluate_in_group(const GroupRingElement& x, const CosetTable& t);

bool is_zero_in_group(const GroupRingElement& x, const CosetTable& t);

/// Group-like elements of Z[G]: integer solutions of eps(x) = 1 and
/// grad(x) = x (x) x. The quadratic constraints force exactly the standard
/// basis vectors, i.e. the group elements themselves.
std::vector<int> group_like_elements(const FiniteGroupTable& g);

/// mu (s (x) id) grad = eta eps = mu (id (x) s) grad on the given element of
/// Z[G], with s(g) = g^{-1}.
bool antipode_identity_holds(const FiniteGroupTable& g, const std::map<int, Int>& element);

}  // namespace topo
