#include "topo/smith.hpp"

#include <algorithm>
#include <set>

#include "topo/error.hpp"

namespace topo {
namespace {

// Elimination workspace: rows as sparse maps plus a column index so column
// operations and pivot search by fill-in stay cheap.
struct Workspace {
  int rows, cols;
  std::vector<std::map<int, Int>> row;
  std::vector<std::set<int>> col;  // row indices with a nonzero in this column

  explicit Workspace(const IntMatrix& m)
      : rows(m.rows()), cols(m.cols()), row(m.rows()), col(m.cols()) {
    for (const auto& [k, v] : m.entries()) {
      row[k.first][k.second] = v;
      col[k.second].insert(k.first);
    }
  }
  Workspace(int r, int c, bool ident) : rows(r), cols(c), row(r), col(c) {
    if (ident)
      for (int i = 0; i < r; ++i) {
        row[i][i] = 1;
        col[i].insert(i);
      }
  }

  Int get(int i, int j) const {
    auto it = row[i].find(j);
    return it == row[i].end() ? Int(0) : it->second;
  }
  void put(int i, int j, Int v) {
    if (v == 0) {
      row[i].erase(j);
      col[j].erase(i);
    } else {
      row[i][j] = std::move(v);
      col[j].insert(i);
    }
  }
  // row r1 += q * row r2
  void row_add(int r1, int r2, const Int& q) {
    if (q == 0) return;
    for (const auto& [j, v] : row[r2]) {
      auto it = row[r1].find(j);
      if (it == row[r1].end()) {
        row[r1][j] = q * v;
        col[j].insert(r1);
      } else {
        it->second += q * v;
        if (it->second == 0) {
          row[r1].erase(it);
          col[j].erase(r1);
        }
      }
    }
  }
  // col c1 += q * col c2
  void col_add(int c1, int c2, const Int& q) {
    if (q == 0) return;
    std::vector<int> rows_c2(col[c2].begin(), col[c2].end());
    for (int i : rows_c2) {
      const Int& v = row[i][c2];
      auto it = row[i].find(c1);
      if (it == row[i].end()) {
        row[i][c1] = q * v;
        col[c1].insert(i);
      } else {
        it->second += q * v;
        if (it->second == 0) {
          row[i].erase(it);
          col[c1].erase(i);
        }
      }
    }
  }
  void row_swap(int r1, int r2) {
    if (r1 == r2) return;
    for (const auto& [j, v] : row[r1]) col[j].erase(r1);
    for (const auto& [j, v] : row[r2]) col[j].erase(r2);
    std::swap(row[r1], row[r2]);
    for (const auto& [j, v] : row[r1]) col[j].insert(r1);
    for (const auto& [j, v] : row[r2]) col[j].insert(r2);
  }
  void col_swap(int c1, int c2) {
    if (c1 == c2) return;
    std::vector<int> in1(col[c1].begin(), col[c1].end());
    std::vector<int> in2(col[c2].begin(), col[c2].end());
    for (int i : in1) col[c1].erase(i);
    for (int i : in2) col[c2].erase(i);
    std::vector<std::pair<int, Int>> save1, save2;
    for (int i : in1) {
      save1.emplace_back(i, row[i][c1]);
      row[i].erase(c1);
    }
    for (int i : in2) {
      save2.emplace_back(i, row[i][c2]);
      row[i].erase(c2);
    }
    for (auto& [i, v] : save1) {
      row[i][c2] = std::move(v);
      col[c2].insert(i);
    }
    for (auto& [i, v] : save2) {
      row[i][c1] = std::move(v);
      col[c1].insert(i);
    }
  }
  void row_negate(int r) {
    for (auto& [j, v] : row[r]) v = -v;
  }

  IntMatrix to_matrix() const {
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (const auto& [j, v] : row[i]) m.set(i, j, v);
    return m;
  }
};

// Balanced quotient: v - q*d has absolute value <= |d|/2.
Int balanced_quot(const Int& v, const Int& d) {
  Int q = v / d;
  Int r = v - q * d;
  if (2 * abs_int(r) > abs_int(d)) {
    if ((r > 0) == (d > 0))
      q += 1;
    else
      q -= 1;
  }
  return q;
}

struct Transforms {
  std::optional<Workspace> u, uinv, v, vinv;
  void on_row_add(int r1, int r2, const Int& q) {
    if (u) u->row_add(r1, r2, q);
    if (uinv) uinv->col_add(r2, r1, -q);
  }
  void on_col_add(int c1, int c2, const Int& q) {
    if (v) v->col_add(c1, c2, q);
    if (vinv) vinv->row_add(c2, c1, -q);
  }
  void on_row_swap(int r1, int r2) {
    if (u) u->row_swap(r1, r2);
    if (uinv) uinv->col_swap(r1, r2);
  }
  void on_col_swap(int c1, int c2) {
    if (v) v->col_swap(c1, c2);
    if (vinv) vinv->row_swap(c1, c2);
  }
  void on_row_negate(int r) {
    if (u) u->row_negate(r);
    if (uinv)
      for (int i = 0; i < uinv->rows; ++i) {
        auto it = uinv->row[i].find(r);
        if (it != uinv->row[i].end()) it->second = -it->second;
      }
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m, SmithOptions opts) {
  Workspace w(m);
  Transforms t;
  if (opts.want_u) t.u.emplace(m.rows(), m.rows(), true);
  if (opts.want_uinv) t.uinv.emplace(m.rows(), m.rows(), true);
  if (opts.want_v) t.v.emplace(m.cols(), m.cols(), true);
  if (opts.want_vinv) t.vinv.emplace(m.cols(), m.cols(), true);

  const int bound = std::min(m.rows(), m.cols());
  int k = 0;
  for (; k < bound; ++k) {
    // Pivot: minimal absolute value, fill-in tie break, then position.
    int pr = -1, pc = -1;
    Int pv;
    long long pfill = 0;
    for (int i = k; i < w.rows; ++i) {
      for (const auto& [j, v] : w.row[i]) {
        if (j < k) continue;
        long long fill = static_cast<long long>(w.row[i].size() - 1) *
                         static_cast<long long>(w.col[j].size() - 1);
        Int a = abs_int(v);
        if (pr < 0 || a < pv || (a == pv && fill < pfill)) {
          pr = i;
          pc = j;
          pv = a;
          pfill = fill;
        }
      }
    }
    if (pr < 0) break;  // submatrix is zero
    w.row_swap(k, pr);
    t.on_row_swap(k, pr);
    w.col_swap(k, pc);
    t.on_col_swap(k, pc);

    for (;;) {
      // Clear column k.
      bool again = true;
      while (again) {
        again = false;
        Int d = w.get(k, k);
        std::vector<int> in_col(w.col[k].begin(), w.col[k].end());
        for (int i : in_col) {
          if (i == k) continue;
          Int q = balanced_quot(w.row[i][k], d);
          w.row_add(i, k, -q);
          t.on_row_add(i, k, -q);
        }
        // If residues remain, move the smallest one into the pivot.
        int best = -1;
        Int bestv;
        for (int i : w.col[k])
          if (i != k) {
            Int a = abs_int(w.get(i, k));
            if (best < 0 || a < bestv) {
              best = i;
              bestv = a;
            }
          }
        if (best >= 0) {
          w.row_swap(k, best);
          t.on_row_swap(k, best);
          again = true;
        }
      }
      // Clear row k.
      again = true;
      bool touched_col = false;
      while (again) {
        again = false;
        Int d = w.get(k, k);
        std::vector<int> in_row;
        for (const auto& [j, v] : w.row[k])
          if (j != k) in_row.push_back(j);
        for (int j : in_row) {
          Int q = balanced_quot(w.get(k, j), d);
          w.col_add(j, k, -q);
          t.on_col_add(j, k, -q);
        }
        int best = -1;
        Int bestv;
        for (const auto& [j, v] : w.row[k])
          if (j != k) {
            Int a = abs_int(v);
            if (best < 0 || a < bestv) {
              best = j;
              bestv = a;
            }
          }
        if (best >= 0) {
          w.col_swap(k, best);
          t.on_col_swap(k, best);
          again = true;
          touched_col = true;
        }
      }
      if (!touched_col && w.col[k].size() == 1 && w.row[k].size() == 1) break;
    }

    // Divisibility: pivot must divide the whole remaining submatrix.
    Int d = w.get(k, k);
    bool fixed = true;
    while (fixed) {
      fixed = false;
      d = w.get(k, k);
      for (int i = k + 1; i < w.rows && !fixed; ++i) {
        for (const auto& [j, v] : w.row[i]) {
          if (j <= k) continue;
          if (v % d != 0) {
            w.row_add(k, i, 1);
            t.on_row_add(k, i, 1);
            fixed = true;
            break;
          }
        }
      }
      if (fixed) {
        // Re-clear the polluted pivot row/column.
        for (;;) {
          bool again = true;
          while (again) {
            again = false;
            Int dd = w.get(k, k);
            std::vector<int> in_row;
            for (const auto& [j, v] : w.row[k])
              if (j != k) in_row.push_back(j);
            for (int j : in_row) {
              Int q = balanced_quot(w.get(k, j), dd);
              w.col_add(j, k, -q);
              t.on_col_add(j, k, -q);
            }
            int best = -1;
            Int bestv;
            for (const auto& [j, v] : w.row[k])
              if (j != k) {
                Int a = abs_int(v);
                if (best < 0 || a < bestv) {
                  best = j;
                  bestv = a;
                }
              }
            if (best >= 0) {
              w.col_swap(k, best);
              t.on_col_swap(k, best);
              again = true;
            }
          }
          again = true;
          bool touched = false;
          while (again) {
            again = false;
            Int dd = w.get(k, k);
            std::vector<int> in_col(w.col[k].begin(), w.col[k].end());
            for (int i : in_col) {
              if (i == k) continue;
              Int q = balanced_quot(w.row[i][k], dd);
              w.row_add(i, k, -q);
              t.on_row_add(i, k, -q);
            }
            int best = -1;
            Int bestv;
            for (int i : w.col[k])
              if (i != k) {
                Int a = abs_int(w.get(i, k));
                if (best < 0 || a < bestv) {
                  best = i;
                  bestv = a;
                }
              }
            if (best >= 0) {
              w.row_swap(k, best);
              t.on_row_swap(k, best);
              again = true;
              touched = true;
            }
          }
          if (!touched && w.col[k].size() == 1 && w.row[k].size() == 1) break;
        }
      }
    }
    if (w.get(k, k) < 0) {
      w.row_negate(k);
      t.on_row_negate(k);
    }
  }

  SmithForm out;
  out.rank = 0;
  out.d = IntMatrix(m.rows(), m.cols());
  for (int i = 0; i < bound; ++i) {
    Int v = w.get(i, i);
    if (v != 0) {
      out.d.set(i, i, v);
      out.diag.push_back(v);
      ++out.rank;
    }
  }
  if (t.u) out.u = t.u->to_matrix();
  if (t.v) out.v = t.v->to_matrix();
  if (t.uinv) out.uinv = t.uinv->to_matrix();
  if (t.vinv) out.vinv = t.vinv->to_matrix();
  return out;
}

int rank_of(const IntMatrix& m) { return smith_normal_form(m).rank; }

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) fail("invalid-input", "determinant of non-square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination on a dense copy.
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n, 0));
  for (const auto& [k, v] : m.entries()) a[k.first][k.second] = v;
  Int sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

bool is_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  Int d = determinant(m);
  return d == 1 || d == -1;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols()) fail("invalid-input", "inverse of non-square matrix");
  const int n = m.rows();
  // Gauss-Jordan over the rationals, then check integrality.
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n, 0)), inv(n, std::vector<Rat>(n, 0));
  for (const auto& [k, v] : m.entries()) a[k.first][k.second] = Rat(v);
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (a[i][k] != 0) {
        p = i;
        break;
      }
    if (p < 0) fail("rejected", "matrix not invertible");
    std::swap(a[k], a[p]);
    std::swap(inv[k], inv[p]);
    Rat d = a[k][k];
    for (int j = 0; j < n; ++j) {
      a[k][j] /= d;
      inv[k][j] /= d;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      Rat f = a[i][k];
      for (int j = 0; j < n; ++j) {
        a[i][j] -= f * a[k][j];
        inv[i][j] -= f * inv[k][j];
      }
    }
  }
  IntMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (inv[i][j] == 0) continue;
      if (denominator(inv[i][j]) != 1) fail("rejected", "matrix not invertible over Z");
      out.set(i, j, numerator(inv[i][j]));
    }
  return out;
}

}  // namespace topo
