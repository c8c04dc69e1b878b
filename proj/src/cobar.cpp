#include "topo/cobar.hpp"

#include <algorithm>

#include "topo/error.hpp"

namespace topo {

NCPoly nc_normalize(std::vector<NCTerm> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const NCTerm& a, const NCTerm& b) { return a.word < b.word; });
  NCPoly out;
  for (auto& t : terms) {
    if (!out.empty() && out.back().word == t.word)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
  }
  return out;
}

NCPoly nc_add(const NCPoly& a, const NCPoly& b) {
  std::vector<NCTerm> all(a);
  all.insert(all.end(), b.begin(), b.end());
  return nc_normalize(std::move(all));
}

NCPoly nc_scale(const NCPoly& a, const Int& c) {
  if (c == 0) return {};
  NCPoly out = a;
  for (auto& t : out) t.coeff *= c;
  return out;
}

NCPoly nc_mul(const NCPoly& a, const NCPoly& b) {
  std::vector<NCTerm> all;
  for (const auto& s : a)
    for (const auto& t : b) {
      NCTerm st{s.coeff * t.coeff, s.word};
      st.word.insert(st.word.end(), t.word.begin(), t.word.end());
      all.push_back(std::move(st));
    }
  return nc_normalize(std::move(all));
}

std::string nc_str(const NCPoly& p, const std::vector<std::string>& names) {
  if (p.empty()) return "0";
  std::string out;
  for (const auto& t : p) {
    if (!out.empty()) out += t.coeff > 0 ? " + " : " - ";
    else if (t.coeff < 0) out += "-";
    Int a = abs_int(t.coeff);
    if (a != 1 || t.word.empty()) out += a.str();
    if (!t.word.empty()) {
      if (a != 1) out += "*";
      out += "[";
      for (size_t i = 0; i < t.word.size(); ++i) {
        if (i) out += "|";
        out += names.at(static_cast<size_t>(t.word[i]));
      }
      out += "]";
    }
  }
  return out;
}

int CobarAlgebra::word_degree(const std::vector<int>& w) const {
  int d = 0;
  for (int l : w) d += letter_degree(l);
  return d;
}

int CobarAlgebra::letter_for(const std::string& name) const {
  for (size_t i = 0; i < letter_name.size(); ++i)
    if (letter_name[i] == name) return static_cast<int>(i);
  fail("rejected", "no cobar letter named '" + name + "'");
}

NCPoly CobarAlgebra::d_word(const std::vector<int>& w) const {
  std::vector<NCTerm> out;
  int sign = 1;
  for (size_t i = 0; i < w.size(); ++i) {
    for (const auto& t : d_letter[static_cast<size_t>(w[i])]) {
      NCTerm term{t.coeff * sign, {}};
      term.word.assign(w.begin(), w.begin() + static_cast<long>(i));
      term.word.insert(term.word.end(), t.word.begin(), t.word.end());
      term.word.insert(term.word.end(), w.begin() + static_cast<long>(i) + 1, w.end());
      out.push_back(std::move(term));
    }
    if (letter_degree(w[i]) % 2 != 0) sign = -sign;
  }
  return nc_normalize(std::move(out));
}

NCPoly CobarAlgebra::d_poly(const NCPoly& p) const {
  NCPoly out;
  for (const auto& t : p) out = nc_add(out, nc_scale(d_word(t.word), t.coeff));
  return out;
}

namespace {

void enumerate_words(const CobarAlgebra& a, std::vector<int>& word, int degree,
                     std::vector<std::vector<std::vector<int>>>& basis, size_t cap,
                     bool& truncated) {
  if (truncated) return;
  basis[static_cast<size_t>(degree)].push_back(word);
  size_t total = 0;
  for (const auto& level : basis) total += level.size();
  if (total > cap) {
    truncated = true;
    return;
  }
  if (static_cast<int>(word.size()) >= a.max_len) return;
  for (int l = 0; l < static_cast<int>(a.letter_name.size()); ++l) {
    int d = degree + a.letter_degree(l);
    if (d > a.max_deg) continue;
    word.push_back(l);
    enumerate_words(a, word, d, basis, cap, truncated);
    word.pop_back();
  }
}

}  // namespace

CobarAlgebra cobar(const DgCoalgebra& c, const CobarOptions& opts) {
  if (c.rank(0) != 1) fail("rejected", "cobar needs a connected coalgebra (C_0 of rank 1)");
  CobarAlgebra a;
  a.max_deg = opts.max_deg;
  a.max_len = opts.max_len;

  // Letters: positive-degree basis elements, flattened by dimension.
  std::vector<std::vector<int>> letter_at(static_cast<size_t>(c.top()) + 1);
  for (int n = 1; n <= c.top(); ++n) {
    letter_at[static_cast<size_t>(n)].resize(static_cast<size_t>(c.rank(n)));
    for (int i = 0; i < c.rank(n); ++i) {
      letter_at[static_cast<size_t>(n)][static_cast<size_t>(i)] =
          static_cast<int>(a.letter_name.size());
      a.letter_dim.push_back(n);
      a.letter_name.push_back(c.basis_names[static_cast<size_t>(n)][static_cast<size_t>(i)]);
    }
  }

  for (size_t l = 0; l < a.letter_name.size(); ++l) {
    int n = a.letter_dim[l];
    int idx = c.name_index(n, a.letter_name[l]);
    std::vector<NCTerm> terms;
    if (n >= 2) {
      // -[dc]: faces of dimension 0 are killed by the shift.
      const IntMatrix& d = c.complex.boundary[static_cast<size_t>(n)];
      for (const auto& [k, v] : d.entries())
        if (k.second == idx)
          terms.push_back({-v, {letter_at[static_cast<size_t>(n - 1)][static_cast<size_t>(k.first)]}});
    }
    for (int p = 1; p <= n - 1; ++p) {
      int q = n - p;
      const IntMatrix& dl = c.delta(n, p);
      for (const auto& [k, v] : dl.entries()) {
        if (k.second != idx) continue;
        int ip = k.first / c.rank(q);
        int iq = k.first % c.rank(q);
        Int coeff = (p % 2 == 0) ? v : -v;
        terms.push_back({coeff,
                         {letter_at[static_cast<size_t>(p)][static_cast<size_t>(ip)],
                          letter_at[static_cast<size_t>(q)][static_cast<size_t>(iq)]}});
      }
    }
    a.d_letter.push_back(nc_normalize(std::move(terms)));
  }

  a.basis.assign(static_cast<size_t>(a.max_deg) + 1, {});
  std::vector<int> word;
  enumerate_words(a, word, 0, a.basis, opts.basis_cap, a.basis_truncated);
  if (a.basis_truncated) {
    a.basis.assign(static_cast<size_t>(a.max_deg) + 1, {});
    a.index.assign(static_cast<size_t>(a.max_deg) + 1, {});
    a.window_closed.assign(static_cast<size_t>(a.max_deg) + 1, false);
    return a;
  }
  for (auto& level : a.basis)
    std::sort(level.begin(), level.end(), [](const auto& x, const auto& y) {
      return std::make_pair(x.size(), x) < std::make_pair(y.size(), y);
    });
  a.index.assign(static_cast<size_t>(a.max_deg) + 1, {});
  for (int d = 0; d <= a.max_deg; ++d)
    for (size_t i = 0; i < a.basis[static_cast<size_t>(d)].size(); ++i)
      a.index[static_cast<size_t>(d)][a.basis[static_cast<size_t>(d)][i]] = static_cast<int>(i);

  a.window_closed.assign(static_cast<size_t>(a.max_deg) + 1, true);
  a.d_mat.resize(static_cast<size_t>(a.max_deg) + 1);
  for (int d = 1; d <= a.max_deg; ++d) {
    IntMatrix m(static_cast<int>(a.basis[static_cast<size_t>(d - 1)].size()),
                static_cast<int>(a.basis[static_cast<size_t>(d)].size()));
    for (size_t j = 0; j < a.basis[static_cast<size_t>(d)].size(); ++j) {
      for (const auto& t : a.d_word(a.basis[static_cast<size_t>(d)][j])) {
        auto it = a.index[static_cast<size_t>(d - 1)].find(t.word);
        if (it == a.index[static_cast<size_t>(d - 1)].end()) {
          a.window_closed[static_cast<size_t>(d)] = false;
          continue;
        }
        m.add_at(it->second, static_cast<int>(j), t.coeff);
      }
    }
    a.d_mat[static_cast<size_t>(d)] = std::move(m);
  }
  return a;
}

bool d_squared_vanishes_on_generators(const CobarAlgebra& a, std::string* witness) {
  for (size_t l = 0; l < a.letter_name.size(); ++l) {
    NCPoly dd = a.d_poly(a.d_letter[l]);
    if (!dd.empty()) {
      if (witness) *witness = a.letter_name[l];
      return false;
    }
  }
  return true;
}

RingPresentation h0_relations(const DgCoalgebra& c) {
  RingPresentation out;
  if (c.top() >= 1) out.generators = c.basis_names[1];
  if (c.top() < 2) return out;
  const IntMatrix& d2 = c.complex.boundary[2];
  const IntMatrix& d11 = c.delta(2, 1);
  for (int j = 0; j < c.rank(2); ++j) {
    std::vector<NCTerm> terms;
    for (const auto& [k, v] : d2.entries())
      if (k.second == j) terms.push_back({-v, {k.first}});
    for (const auto& [k, v] : d11.entries())
      if (k.second == j) {
        int ip = k.first / c.rank(1);
        int iq = k.first % c.rank(1);
        terms.push_back({-v, {ip, iq}});
      }
    out.relations.push_back(nc_normalize(std::move(terms)));
  }
  return out;
}

Json RingPresentation::to_json() const {
  Json rels = Json::array();
  for (const auto& r : relations) {
    Json rel = Json::array();
    for (const auto& t : r) {
      Json word = Json::array();
      for (int l : t.word) word.push_back(generators.at(static_cast<size_t>(l)));
      rel.push_back(Json{{"coeff", t.coeff.str()}, {"word", word}});
    }
    rels.push_back(rel);
  }
  return Json{{"generators", generators}, {"relations", rels}};
}

GroupPresentation pi1_presentation(const ReducedSimplicialSet& rs) {
  const SimplicialSetData& s = rs.data;
  GroupPresentation p;
  if (s.top_dim() >= 1) p.gens = s.by_dim[1];
  if (s.top_dim() < 2) return p;
  for (const auto& id : s.by_dim[2]) {
    const auto& fs = s.faces.at(id);
    Word w;
    if (!fs[2].degenerate()) w.push_back(letter_of(s.index_of(fs[2].target)));
    if (!fs[0].degenerate()) w.push_back(letter_of(s.index_of(fs[0].target)));
    if (!fs[1].degenerate()) w.push_back(letter_of(s.index_of(fs[1].target), true));
    p.add_relator(std::move(w));
  }
  return p;
}

TensorPoly h0_coproduct_word(const std::vector<int>& w) {
  TensorPoly out;
  out[{{}, {}}] = 1;
  for (int x : w) {
    TensorPoly next;
    for (const auto& [pair, coeff] : out) {
      // (x (x) x), (x (x) 1), (1 (x) x)
      auto both = pair;
      both.first.push_back(x);
      both.second.push_back(x);
      next[both] += coeff;
      auto left = pair;
      left.first.push_back(x);
      next[left] += coeff;
      auto right = pair;
      right.second.push_back(x);
      next[right] += coeff;
    }
    out = std::move(next);
  }
  return out;
}

TensorPoly h0_coproduct(const NCPoly& p) {
  TensorPoly out;
  for (const auto& t : p)
    for (const auto& [pair, coeff] : h0_coproduct_word(t.word)) {
      out[pair] += coeff * t.coeff;
      if (out[pair] == 0) out.erase(pair);
    }
  return out;
}

Int h0_counit(const NCPoly& p) {
  Int v = 0;
  for (const auto& t : p)
    if (t.word.empty()) v += t.coeff;
  return v;
}

bool h0_coproduct_coassociative(const std::vector<int>& w) {
  using Triple = std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>;
  std::map<Triple, Int> lhs, rhs;
  for (const auto& [pair, c] : h0_coproduct_word(w)) {
    for (const auto& [pair2, c2] : h0_coproduct_word(pair.first)) {
      lhs[{pair2.first, pair2.second, pair.second}] += c * c2;
    }
    for (const auto& [pair2, c2] : h0_coproduct_word(pair.second)) {
      rhs[{pair.first, pair2.first, pair2.second}] += c * c2;
    }
  }
  std::erase_if(lhs, [](const auto& kv) { return kv.second == 0; });
  std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
  return lhs == rhs;
}

bool h0_coproduct_counital(const std::vector<int>& w) {
  // (eps (x) id) and (id (x) eps) applied to the coproduct give the word back.
  std::map<std::vector<int>, Int> left, right;
  for (const auto& [pair, c] : h0_coproduct_word(w)) {
    if (pair.first.empty()) left[pair.second] += c;
    if (pair.second.empty()) right[pair.first] += c;
  }
  std::erase_if(left, [](const auto& kv) { return kv.second == 0; });
  std::erase_if(right, [](const auto& kv) { return kv.second == 0; });
  std::map<std::vector<int>, Int> want;
  want[w] = 1;
  return left == want && right == want;
}

}  // namespace topo
