#include "topo/bar.hpp"

#include <algorithm>

#include "topo/error.hpp"

namespace topo {
namespace {

std::string word_name(const CobarAlgebra& a, const std::vector<int>& w) {
  if (w.empty()) return "1";
  std::string out = "[";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += "|";
    out += a.letter_name[static_cast<size_t>(w[i])];
  }
  return out + "]";
}

}  // namespace

CobarAlgebraView algebra_from_cobar(const CobarAlgebra& a) {
  if (a.basis_truncated)
    fail("rejected", "cobar window too large to materialize as an algebra");
  CobarAlgebraView v;
  FiniteDgAlgebra& alg = v.algebra;
  for (int d = 0; d <= a.max_deg; ++d)
    for (const auto& w : a.basis[static_cast<size_t>(d)]) {
      v.element_of_word[w] = alg.size();
      alg.degree.push_back(d);
      alg.name.push_back(word_name(a, w));
      if (w.empty()) alg.unit = alg.size() - 1;
    }
  std::vector<std::vector<int>> words(static_cast<size_t>(alg.size()));
  for (const auto& [w, i] : v.element_of_word) words[static_cast<size_t>(i)] = w;

  for (int i = 0; i < alg.size(); ++i) {
    NCPoly dw = a.d_word(words[static_cast<size_t>(i)]);
    FiniteDgAlgebra::Combo combo;
    bool ok = true;
    for (const auto& t : dw) {
      auto it = v.element_of_word.find(t.word);
      if (it == v.element_of_word.end()) {
        ok = false;
        break;
      }
      combo[it->second] = t.coeff;
    }
    alg.diff.push_back(ok ? std::optional(std::move(combo)) : std::nullopt);
  }
  alg.prod.assign(static_cast<size_t>(alg.size()), {});
  for (int i = 0; i < alg.size(); ++i) {
    alg.prod[static_cast<size_t>(i)].resize(static_cast<size_t>(alg.size()));
    for (int j = 0; j < alg.size(); ++j) {
      std::vector<int> w = words[static_cast<size_t>(i)];
      w.insert(w.end(), words[static_cast<size_t>(j)].begin(), words[static_cast<size_t>(j)].end());
      auto it = v.element_of_word.find(w);
      if (it == v.element_of_word.end()) continue;  // left the window
      FiniteDgAlgebra::Combo combo;
      combo[it->second] = 1;
      alg.prod[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(combo);
    }
  }
  return v;
}

int BarComplex::degree_of_word(const FiniteDgAlgebra& a, const std::vector<int>& w) const {
  int d = 0;
  for (int e : w) d += a.degree[static_cast<size_t>(e)] + 1;
  return d;
}

namespace {

void enumerate_bar_words(const FiniteDgAlgebra& a, int max_words, int max_deg,
                         std::vector<int>& word, int degree,
                         std::vector<std::vector<std::vector<int>>>& basis) {
  basis[static_cast<size_t>(degree)].push_back(word);
  if (static_cast<int>(word.size()) >= max_words) return;
  for (int e = 0; e < a.size(); ++e) {
    if (e == a.unit) continue;
    int d = degree + a.degree[static_cast<size_t>(e)] + 1;
    if (d > max_deg) continue;
    word.push_back(e);
    enumerate_bar_words(a, max_words, max_deg, word, d, basis);
    word.pop_back();
  }
}

// Parity of eps_i = |a_1| + ... + |a_i| - i + 1 for the first i letters.
int eps_parity(const FiniteDgAlgebra& a, const std::vector<int>& w, int i) {
  int sum = 0;
  for (int j = 0; j < i; ++j) sum += a.degree[static_cast<size_t>(w[static_cast<size_t>(j)])];
  return ((sum - i + 1) % 2 + 2) % 2;
}

}  // namespace

BarComplex bar(const FiniteDgAlgebra& a, int max_words, int max_deg) {
  if (!a.augmented()) fail("rejected", "bar construction needs an augmented algebra");
  BarComplex b;
  b.max_words = max_words;
  b.max_deg = max_deg;
  b.basis.assign(static_cast<size_t>(max_deg) + 1, {});
  std::vector<int> word;
  enumerate_bar_words(a, max_words, max_deg, word, 0, b.basis);
  for (auto& level : b.basis)
    std::sort(level.begin(), level.end(), [](const auto& x, const auto& y) {
      return std::make_pair(x.size(), x) < std::make_pair(y.size(), y);
    });
  b.index.assign(static_cast<size_t>(max_deg) + 1, {});
  for (int d = 0; d <= max_deg; ++d)
    for (size_t i = 0; i < b.basis[static_cast<size_t>(d)].size(); ++i)
      b.index[static_cast<size_t>(d)][b.basis[static_cast<size_t>(d)][i]] = static_cast<int>(i);

  // A degree-d slice of words is complete only when the length cap cannot
  // exclude a word of that degree.
  int min_shift = -1;
  for (int e = 0; e < a.size(); ++e)
    if (e != a.unit) {
      int s = a.degree[static_cast<size_t>(e)] + 1;
      if (min_shift < 0 || s < min_shift) min_shift = s;
    }
  b.closed.assign(static_cast<size_t>(max_deg) + 1, true);
  for (int d = 1; d <= max_deg; ++d)
    if (min_shift > 0 && d >= (max_words + 1) * min_shift)
      b.closed[static_cast<size_t>(d)] = false;

  b.d_mat.resize(static_cast<size_t>(max_deg) + 1);
  for (int d = 1; d <= max_deg; ++d) {
    IntMatrix m(static_cast<int>(b.basis[static_cast<size_t>(d - 1)].size()),
                static_cast<int>(b.basis[static_cast<size_t>(d)].size()));
    for (size_t jw = 0; jw < b.basis[static_cast<size_t>(d)].size(); ++jw) {
      const auto& w = b.basis[static_cast<size_t>(d)][jw];
      const int len = static_cast<int>(w.size());
      for (int i = 0; i < len; ++i) {
        // -d1: replace slot i by its differential.
        const auto& di = a.diff[static_cast<size_t>(w[static_cast<size_t>(i)])];
        if (!di) {
          b.closed[static_cast<size_t>(d)] = false;
          continue;
        }
        int sign = eps_parity(a, w, i) == 0 ? 1 : -1;  // (-1)^{eps_{i-1}} for i-th letter
        for (const auto& [e, c] : *di) {
          if (e == a.unit) fail("internal", "differential leaves the augmentation ideal");
          std::vector<int> nw = w;
          nw[static_cast<size_t>(i)] = e;
          m.add_at(b.index[static_cast<size_t>(d - 1)].at(nw), static_cast<int>(jw), -sign * c);
        }
      }
      for (int i = 0; i + 1 < len; ++i) {
        // +d2: merge slots i, i+1.
        const auto& pr = a.prod[static_cast<size_t>(w[static_cast<size_t>(i)])]
                                [static_cast<size_t>(w[static_cast<size_t>(i + 1)])];
        if (!pr) {
          b.closed[static_cast<size_t>(d)] = false;
          continue;
        }
        int sign = eps_parity(a, w, i + 1) == 0 ? 1 : -1;  // (-1)^{eps_i}
        for (const auto& [e, c] : *pr) {
          if (e == a.unit) fail("internal", "product of ideal elements hit the unit");
          std::vector<int> nw;
          nw.reserve(w.size() - 1);
          nw.insert(nw.end(), w.begin(), w.begin() + i);
          nw.push_back(e);
          nw.insert(nw.end(), w.begin() + i + 2, w.end());
          m.add_at(b.index[static_cast<size_t>(d - 1)].at(nw), static_cast<int>(jw), sign * c);
        }
      }
    }
    b.d_mat[static_cast<size_t>(d)] = std::move(m);
  }
  return b;
}

TensorPoly bar_coproduct_word(const std::vector<int>& w) {
  TensorPoly out;
  for (size_t i = 0; i <= w.size(); ++i) {
    std::vector<int> left(w.begin(), w.begin() + static_cast<long>(i));
    std::vector<int> right(w.begin() + static_cast<long>(i), w.end());
    out[{left, right}] += 1;
  }
  return out;
}

std::optional<FGAbelianGroup> bar_homology(const BarComplex& b, int n) {
  if (n < 0 || n > b.max_deg) return std::nullopt;
  if (!b.closed[static_cast<size_t>(n)]) return std::nullopt;
  if (n + 1 <= b.max_deg && !b.closed[static_cast<size_t>(n + 1)]) return std::nullopt;
  if (n + 1 > b.max_deg && !b.basis[static_cast<size_t>(b.max_deg)].empty() && n == b.max_deg)
    return std::nullopt;  // incoming boundaries unknown past the window
  ChainComplex c;
  c.ranks.resize(static_cast<size_t>(n) + 2, 0);
  c.boundary.resize(static_cast<size_t>(n) + 2);
  for (int d = 0; d <= n + 1 && d <= b.max_deg; ++d)
    c.ranks[static_cast<size_t>(d)] = static_cast<int>(b.basis[static_cast<size_t>(d)].size());
  for (int d = 1; d <= n + 1 && d <= b.max_deg; ++d)
    c.boundary[static_cast<size_t>(d)] = b.d_mat[static_cast<size_t>(d)];
  return homology(c, n);
}

std::vector<IntMatrix> cobar_action_on_module(const CobarAlgebraView& v, const CobarAlgebra& a,
                                              const PiModule& m,
                                              const std::vector<std::string>& edge_names) {
  std::vector<std::vector<int>> words(static_cast<size_t>(v.algebra.size()));
  for (const auto& [w, i] : v.element_of_word) words[static_cast<size_t>(i)] = w;
  std::vector<IntMatrix> out;
  out.reserve(words.size());
  const IntMatrix id = IntMatrix::identity(m.rank);
  for (const auto& w : words) {
    IntMatrix act = id;
    bool zero = false;
    for (int l : w) {
      if (a.letter_dim[static_cast<size_t>(l)] != 1) {
        zero = true;
        break;
      }
      const std::string& name = a.letter_name[static_cast<size_t>(l)];
      bool known = false;
      for (const auto& e : edge_names) known = known || e == name;
      if (!known) fail("rejected", "edge '" + name + "' has no module action");
      act = act * (m.action.at(name) - id);
    }
    out.push_back(zero ? IntMatrix(m.rank, m.rank) : act);
  }
  return out;
}

OneSidedBar one_sided_bar(const FiniteDgAlgebra& a, const std::vector<IntMatrix>& action,
                          int module_rank, int max_words, int max_deg) {
  if (static_cast<int>(action.size()) != a.size())
    fail("invalid-input", "one action matrix per algebra element required");
  OneSidedBar out;
  out.words = bar(a, max_words, max_deg);
  out.module_rank = module_rank;
  out.closed = out.words.closed;
  const int r = module_rank;
  out.complex.ranks.resize(static_cast<size_t>(max_deg) + 1);
  out.complex.boundary.resize(static_cast<size_t>(max_deg) + 1);
  for (int d = 0; d <= max_deg; ++d)
    out.complex.ranks[static_cast<size_t>(d)] =
        static_cast<int>(out.words.basis[static_cast<size_t>(d)].size()) * r;
  for (int d = 1; d <= max_deg; ++d) {
    IntMatrix m(out.complex.ranks[static_cast<size_t>(d - 1)],
                out.complex.ranks[static_cast<size_t>(d)]);
    // D_BA (x) id.
    for (const auto& [k, v] : out.words.d_mat[static_cast<size_t>(d)].entries())
      for (int x = 0; x < r; ++x) m.add_at(k.first * r + x, k.second * r + x, v);
    // Last-letter action term.
    for (size_t jw = 0; jw < out.words.basis[static_cast<size_t>(d)].size(); ++jw) {
      const auto& w = out.words.basis[static_cast<size_t>(d)][jw];
      if (w.empty()) continue;
      int e = w.back();
      if (a.degree[static_cast<size_t>(e)] != 0) continue;  // acts by zero on degree 0
      const IntMatrix& act = action[static_cast<size_t>(e)];
      if (act.is_zero()) continue;
      std::vector<int> pref(w.begin(), w.end() - 1);
      int row_word = out.words.index[static_cast<size_t>(d - 1)].at(pref);
      int sign = eps_parity(a, w, static_cast<int>(w.size())) == 0 ? 1 : -1;
      for (const auto& [k, v] : act.entries())
        m.add_at(row_word * r + k.first, static_cast<int>(jw) * r + k.second, sign * v);
    }
    out.complex.boundary[static_cast<size_t>(d)] = std::move(m);
  }
  return out;
}

RhoMap rho_map(const DgCoalgebra& c, const SimplicialSetData& s, const CobarAlgebra& a,
               const CobarAlgebraView& v, const BarComplex& b) {
  RhoMap r;
  r.mats.resize(static_cast<size_t>(c.top()) + 1);
  r.defined.assign(static_cast<size_t>(c.top()) + 1, true);
  for (int n = 0; n <= c.top(); ++n) {
    if (n > b.max_deg || n > 20) {
      r.defined[static_cast<size_t>(n)] = false;
      r.mats[static_cast<size_t>(n)] = IntMatrix(0, c.rank(n));
      continue;
    }
    IntMatrix m(static_cast<int>(b.basis[static_cast<size_t>(n)].size()), c.rank(n));
    for (int j = 0; j < c.rank(n); ++j) {
      if (n == 0) {
        m.set(b.index[0].at({}), j, 1);
        continue;
      }
      const std::string& id = c.basis_names[static_cast<size_t>(n)][static_cast<size_t>(j)];
      const int sign = (n % 2 == 0) ? -1 : 1;  // (-1)^{n+1}
      // Splittings at subsets of the inner vertices 1..n-1; a splitting
      // with a degenerate part contributes nothing.
      for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> cuts{0};
        for (int t = 1; t <= n - 1; ++t)
          if (mask & (1u << (t - 1))) cuts.push_back(t);
        cuts.push_back(n);
        std::vector<int> barword;
        bool alive = true;
        for (size_t t = 0; t + 1 < cuts.size(); ++t) {
          DegenerateRef part = vertex_range_face(s, id, cuts[t], cuts[t + 1]);
          if (part.degenerate()) {
            alive = false;
            break;
          }
          auto it = v.element_of_word.find({a.letter_for(part.target)});
          if (it == v.element_of_word.end()) {
            r.defined[static_cast<size_t>(n)] = false;
            alive = false;
            break;
          }
          barword.push_back(it->second);
        }
        if (!alive) continue;
        auto row = b.index[static_cast<size_t>(n)].find(barword);
        if (row == b.index[static_cast<size_t>(n)].end()) {
          r.defined[static_cast<size_t>(n)] = false;
          continue;
        }
        m.add_at(row->second, j, sign);
      }
    }
    r.mats[static_cast<size_t>(n)] = std::move(m);
  }
  return r;
}

bool rho_chain_map_check(const DgCoalgebra& c, const RhoMap& r, const BarComplex& b,
                         std::string* witness) {
  for (int n = 1; n <= c.top(); ++n) {
    if (n > b.max_deg) continue;
    if (!r.defined[static_cast<size_t>(n)] || !r.defined[static_cast<size_t>(n - 1)]) continue;
    if (!b.closed[static_cast<size_t>(n)]) continue;
    IntMatrix lhs = b.d_mat[static_cast<size_t>(n)] * r.mats[static_cast<size_t>(n)];
    IntMatrix rhs = r.mats[static_cast<size_t>(n - 1)] * c.complex.d(n);
    if (lhs != rhs) {
      if (witness) *witness = "degree " + std::to_string(n);
      return false;
    }
  }
  return true;
}

}  // namespace topo
