#include "topo/coset_table.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "topo/error.hpp"

namespace topo {
namespace {

// Enumeration state. Columns come in pairs: 2g for generator g, 2g+1 for
// its inverse. -1 marks undefined entries.
struct Enumerator {
  const GroupPresentation& pres;
  int n_cols;
  int max_live;
  std::vector<std::vector<int>> tab;
  std::vector<int> p;  // union-find, p[i] <= i
  std::deque<int> merge_queue;
  int live = 0;
  int defined_total = 0;

  Enumerator(const GroupPresentation& pr, int max_cosets)
      : pres(pr), n_cols(2 * static_cast<int>(pr.gens.size())), max_live(max_cosets) {
    new_coset();
  }

  static int col(Letter l) { return l > 0 ? 2 * (l - 1) : 2 * (-l - 1) + 1; }
  static int inv_col(int c) { return c ^ 1; }

  int new_coset() {
    tab.emplace_back(n_cols, -1);
    p.push_back(static_cast<int>(p.size()));
    ++live;
    ++defined_total;
    return static_cast<int>(tab.size()) - 1;
  }

  bool alive(int c) const { return p[static_cast<size_t>(c)] == c; }

  int rep(int c) {
    int r = c;
    while (p[static_cast<size_t>(r)] != r) r = p[static_cast<size_t>(r)];
    while (p[static_cast<size_t>(c)] != r) {
      int next = p[static_cast<size_t>(c)];
      p[static_cast<size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void merge(int a, int b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    p[static_cast<size_t>(b)] = a;
    --live;
    merge_queue.push_back(b);
  }

  void coincidence(int a, int b) {
    merge(a, b);
    while (!merge_queue.empty()) {
      int y = merge_queue.front();
      merge_queue.pop_front();
      for (int x = 0; x < n_cols; ++x) {
        int d = tab[static_cast<size_t>(y)][static_cast<size_t>(x)];
        if (d < 0) continue;
        tab[static_cast<size_t>(y)][static_cast<size_t>(x)] = -1;
        if (tab[static_cast<size_t>(d)][static_cast<size_t>(inv_col(x))] == y)
          tab[static_cast<size_t>(d)][static_cast<size_t>(inv_col(x))] = -1;
        int mu = rep(y);
        int nu = rep(d);
        int mx = tab[static_cast<size_t>(mu)][static_cast<size_t>(x)];
        int ni = tab[static_cast<size_t>(nu)][static_cast<size_t>(inv_col(x))];
        if (mx >= 0)
          merge(nu, mx);
        else if (ni >= 0)
          merge(mu, ni);
        else {
          tab[static_cast<size_t>(mu)][static_cast<size_t>(x)] = nu;
          tab[static_cast<size_t>(nu)][static_cast<size_t>(inv_col(x))] = mu;
        }
      }
    }
  }

  int define(int c, int x) {
    int n = new_coset();
    tab[static_cast<size_t>(c)][static_cast<size_t>(x)] = n;
    tab[static_cast<size_t>(n)][static_cast<size_t>(inv_col(x))] = c;
    return n;
  }

  int entry(int c, Letter l) const {
    return tab[static_cast<size_t>(c)][static_cast<size_t>(col(l))];
  }

  // Scan relator w at coset a. With fill, gaps of length > 1 are closed by
  // defining new cosets (HLT); without, only deductions and coincidences
  // are applied (lookahead).
  void scan(int a, const Word& w, bool fill) {
    int f = a, b = a;
    int i = 0, r = static_cast<int>(w.size()) - 1;
    for (;;) {
      while (i <= r && entry(f, w[static_cast<size_t>(i)]) >= 0) {
        f = entry(f, w[static_cast<size_t>(i)]);
        ++i;
      }
      if (i > r) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (r >= i && entry(b, -w[static_cast<size_t>(r)]) >= 0) {
        b = entry(b, -w[static_cast<size_t>(r)]);
        --r;
      }
      if (r < i) {
        coincidence(f, b);
        return;
      }
      if (r == i) {
        int x = col(w[static_cast<size_t>(i)]);
        tab[static_cast<size_t>(f)][static_cast<size_t>(x)] = b;
        tab[static_cast<size_t>(b)][static_cast<size_t>(inv_col(x))] = f;
        return;
      }
      if (!fill) return;
      define(f, col(w[static_cast<size_t>(i)]));
    }
  }

  void lookahead() {
    for (int c = 0; c < static_cast<int>(tab.size()); ++c) {
      if (!alive(c)) continue;
      for (const Word& w : pres.relators) {
        scan(c, w, false);
        if (!alive(c)) break;
      }
    }
  }

  bool run() {
    for (int a = 0; a < static_cast<int>(tab.size()); ++a) {
      if (!alive(a)) continue;
      if (live > max_live) {
        lookahead();
        if (live > max_live) return false;
      }
      for (const Word& w : pres.relators) {
        scan(a, w, true);
        if (!alive(a)) break;
        if (live > 4 * max_live + 1000) return false;
      }
    }
    if (live > max_live) {
      lookahead();
      if (live > max_live) return false;
    }
    // Completed iff every live row is fully defined.
    for (int c = 0; c < static_cast<int>(tab.size()); ++c) {
      if (!alive(c)) continue;
      for (int x = 0; x < n_cols; ++x)
        if (tab[static_cast<size_t>(c)][static_cast<size_t>(x)] < 0) return false;
    }
    return true;
  }

  CosetTable extract() {
    std::vector<int> index(tab.size(), -1);
    int n = 0;
    for (int c = 0; c < static_cast<int>(tab.size()); ++c)
      if (alive(c)) index[static_cast<size_t>(c)] = n++;
    CosetTable t;
    t.gen_names = pres.gens;
    int g = static_cast<int>(pres.gens.size());
    t.fwd.assign(static_cast<size_t>(g), std::vector<int>(static_cast<size_t>(n), -1));
    t.bwd.assign(static_cast<size_t>(g), std::vector<int>(static_cast<size_t>(n), -1));
    for (int c = 0; c < static_cast<int>(tab.size()); ++c) {
      if (!alive(c)) continue;
      for (int k = 0; k < g; ++k) {
        int fw = tab[static_cast<size_t>(c)][static_cast<size_t>(2 * k)];
        int bw = tab[static_cast<size_t>(c)][static_cast<size_t>(2 * k + 1)];
        t.fwd[static_cast<size_t>(k)][static_cast<size_t>(index[static_cast<size_t>(c)])] =
            index[static_cast<size_t>(rep(fw))];
        t.bwd[static_cast<size_t>(k)][static_cast<size_t>(index[static_cast<size_t>(c)])] =
            index[static_cast<size_t>(rep(bw))];
      }
    }
    return t;
  }
};

}  // namespace

EnumerationResult todd_coxeter(const GroupPresentation& p, int max_cosets) {
  if (max_cosets < 1) fail("invalid-input", "max_cosets must be >= 1");
  for (const Word& w : p.relators)
    if (w.empty() || free_reduce(w) != w) fail("rejected", "relators must be reduced and nonempty");
  EnumerationResult out;
  if (p.gens.empty()) {
    out.completed = true;
    out.table = CosetTable{};
    out.cosets_defined = 1;
    return out;
  }
  Enumerator e(p, max_cosets);
  out.completed = e.run();
  out.cosets_defined = e.defined_total;
  if (out.completed) {
    out.table = e.extract();
    auto issues = out.table.validate(p);
    if (!issues.empty()) fail("internal", "enumerated table invalid: " + issues.front());
  }
  return out;
}

std::vector<Word> CosetTable::representatives() const {
  int n = size();
  std::vector<Word> reps(static_cast<size_t>(n));
  std::vector<bool> seen(static_cast<size_t>(n), false);
  std::deque<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    for (int g = 0; g < gens(); ++g) {
      for (Letter l : {letter_of(g), letter_of(g, true)}) {
        int d = apply(c, l);
        if (!seen[static_cast<size_t>(d)]) {
          seen[static_cast<size_t>(d)] = true;
          reps[static_cast<size_t>(d)] = reps[static_cast<size_t>(c)];
          reps[static_cast<size_t>(d)].push_back(l);
          queue.push_back(d);
        }
      }
    }
  }
  for (int c = 0; c < n; ++c)
    if (!seen[static_cast<size_t>(c)]) fail("rejected", "coset table is not transitive");
  return reps;
}

std::vector<std::string> CosetTable::validate(const GroupPresentation& p) const {
  std::vector<std::string> issues;
  if (gen_names != p.gens) {
    issues.push_back("generator names do not match the presentation");
    return issues;
  }
  int n = size();
  for (int g = 0; g < gens(); ++g) {
    std::vector<bool> hit(static_cast<size_t>(n), false);
    for (int c = 0; c < n; ++c) {
      int d = fwd[static_cast<size_t>(g)][static_cast<size_t>(c)];
      if (d < 0 || d >= n) {
        issues.push_back("action of " + gen_names[static_cast<size_t>(g)] + " out of range");
        return issues;
      }
      if (bwd[static_cast<size_t>(g)][static_cast<size_t>(d)] != c)
        issues.push_back("inverse action of " + gen_names[static_cast<size_t>(g)] +
                         " inconsistent at coset " + std::to_string(c));
      hit[static_cast<size_t>(d)] = true;
    }
    for (int c = 0; c < n; ++c)
      if (!hit[static_cast<size_t>(c)]) {
        issues.push_back("action of " + gen_names[static_cast<size_t>(g)] + " not a permutation");
        break;
      }
  }
  if (!issues.empty()) return issues;
  for (size_t r = 0; r < p.relators.size(); ++r)
    for (int c = 0; c < n; ++c)
      if (trace(c, p.relators[r]) != c) {
        issues.push_back("relator " + std::to_string(r) + " moves coset " + std::to_string(c));
        break;
      }
  std::vector<bool> seen(static_cast<size_t>(n), false);
  std::deque<int> queue{0};
  seen[0] = true;
  int count = 1;
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    for (int g = 0; g < gens(); ++g)
      for (Letter l : {letter_of(g), letter_of(g, true)}) {
        int d = apply(c, l);
        if (!seen[static_cast<size_t>(d)]) {
          seen[static_cast<size_t>(d)] = true;
          ++count;
          queue.push_back(d);
        }
      }
  }
  if (count != n) issues.push_back("action is not transitive from coset 0");
  return issues;
}

Json CosetTable::to_json() const {
  Json action = Json::object();
  for (int g = 0; g < gens(); ++g) action[gen_names[static_cast<size_t>(g)]] = fwd[static_cast<size_t>(g)];
  return Json{{"cosets", size()}, {"action", action}};
}

CosetTable CosetTable::from_json(const Json& j) {
  CosetTable t;
  int n = j.at("cosets").get<int>();
  if (n < 1) fail("rejected", "coset table must have at least one coset");
  for (const auto& [name, perm] : j.at("action").items()) {
    t.gen_names.push_back(name);
    auto v = perm.get<std::vector<int>>();
    if (static_cast<int>(v.size()) != n) fail("rejected", "action length mismatch for " + name);
    std::vector<int> inv(static_cast<size_t>(n), -1);
    for (int c = 0; c < n; ++c) {
      if (v[static_cast<size_t>(c)] < 0 || v[static_cast<size_t>(c)] >= n)
        fail("rejected", "action of " + name + " out of range");
      inv[static_cast<size_t>(v[static_cast<size_t>(c)])] = c;
    }
    for (int c = 0; c < n; ++c)
      if (inv[static_cast<size_t>(c)] < 0) fail("rejected", "action of " + name + " is not a permutation");
    t.fwd.push_back(std::move(v));
    t.bwd.push_back(std::move(inv));
  }
  if (t.gen_names.empty() && n != 1)
    fail("rejected", "table without generators must have a single coset");
  return t;
}

Word word_reduce(const Word& w) { return free_reduce(w); }

int word_reduce(const Word& w, const CosetTable& t) {
  for (Letter l : w)
    if (gen_of(l) >= t.gens()) fail("rejected", "unknown letter in word");
  return t.trace(0, free_reduce(w));
}

FiniteGroupTable group_table(const CosetTable& t) {
  FiniteGroupTable g;
  g.n = t.size();
  std::vector<Word> reps = t.representatives();
  g.mul.assign(static_cast<size_t>(g.n), std::vector<int>(static_cast<size_t>(g.n)));
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      g.mul[static_cast<size_t>(i)][static_cast<size_t>(j)] = t.trace(i, reps[static_cast<size_t>(j)]);
  g.inv.assign(static_cast<size_t>(g.n), -1);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      if (g.mul[static_cast<size_t>(i)][static_cast<size_t>(j)] == 0) g.inv[static_cast<size_t>(i)] = j;
  return g;
}

}  // namespace topo
