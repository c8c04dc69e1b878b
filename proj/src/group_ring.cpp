#include "topo/group_ring.hpp"

#include "topo/error.hpp"

namespace topo {

GroupRingElement gre_identity() {
  GroupRingElement e;
  e.add({}, 1);
  return e;
}

GroupRingElement gre_mul(const GroupRingElement& a, const GroupRingElement& b) {
  GroupRingElement out;
  for (const auto& [wa, ca] : a.terms)
    for (const auto& [wb, cb] : b.terms) out.add(word_concat(wa, wb), ca * cb);
  return out;
}

GroupRingElement psi_word(const std::vector<int>& cobar_word, const GroupPresentation& g) {
  GroupRingElement out = gre_identity();
  for (int l : cobar_word) {
    if (l < 0 || l >= static_cast<int>(g.gens.size()))
      fail("rejected", "unknown letter in psi argument");
    GroupRingElement factor;
    factor.add({letter_of(l)}, 1);
    factor.add({}, -1);
    out = gre_mul(out, factor);
  }
  return out;
}

GroupRingElement psi_poly(const NCPoly& p, const GroupPresentation& g) {
  GroupRingElement out;
  for (const auto& t : p) {
    GroupRingElement m = psi_word(t.word, g);
    for (const auto& [w, c] : m.terms) out.add(w, c * t.coeff);
  }
  return out;
}

std::map<int, Int> evaluate_in_group(const GroupRingElement& x, const CosetTable& t) {
  std::map<int, Int> out;
  for (const auto& [w, c] : x.terms) {
    int g = t.trace(0, w);
    out[g] += c;
    if (out[g] == 0) out.erase(g);
  }
  return out;
}

bool is_zero_in_group(const GroupRingElement& x, const CosetTable& t) {
  return evaluate_in_group(x, t).empty();
}

std::vector<int> group_like_elements(const FiniteGroupTable& g) {
  // x = sum a_h h is group-like iff grad(x) = x (x) x and eps(x) = 1, i.e.
  //   a_h a_k = 0 for h != k,  a_h^2 = a_h,  sum a_h = 1.
  // Over Z: a_h^2 = a_h forces a_h in {0,1}; the off-diagonal products
  // force at most one nonzero; the counit forces exactly one. The solution
  // set is therefore the standard basis. Each candidate is verified anyway.
  std::vector<int> out;
  for (int h = 0; h < g.n; ++h) {
    std::map<int, Int> x{{h, 1}};
    // grad(x) - x (x) x must vanish.
    bool ok = true;
    for (const auto& [a, ca] : x)
      for (const auto& [b, cb] : x)
        if (a != b && ca * cb != 0) ok = false;
    Int eps = 0;
    for (const auto& [a, ca] : x) {
      if (ca * ca != ca) ok = false;
      eps += ca;
    }
    if (ok && eps == 1) out.push_back(h);
  }
  return out;
}

bool antipode_identity_holds(const FiniteGroupTable& g, const std::map<int, Int>& element) {
  // grad(x) = sum a_h (h (x) h); apply (s (x) id) then multiply.
  std::map<int, Int> left, right, want;
  Int eps = 0;
  for (const auto& [h, c] : element) {
    if (c == 0) continue;
    eps += c;
    int li = g.mul[static_cast<size_t>(g.inv[static_cast<size_t>(h)])][static_cast<size_t>(h)];
    int ri = g.mul[static_cast<size_t>(h)][static_cast<size_t>(g.inv[static_cast<size_t>(h)])];
    left[li] += c;
    right[ri] += c;
  }
  std::erase_if(left, [](const auto& kv) { return kv.second == 0; });
  std::erase_if(right, [](const auto& kv) { return kv.second == 0; });
  if (eps != 0) want[g.identity()] = eps;
  return left == want && right == want;
}

}  // namespace topo
