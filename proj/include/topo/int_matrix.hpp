#pragma once

#include <map>
#include <utility>
#include <vector>

#include "topo/int.hpp"
#include "topo/json_util.hpp"

namespace topo {

/// Sparse integer matrix. Entries are kept in row-major order with no
/// stored zeros and no duplicate positions.
class IntMatrix {
 public:
  using Key = std::pair<int, int>;

  IntMatrix() = default;
  IntMatrix(int rows, int cols);

  static IntMatrix identity(int n);
  static IntMatrix from_dense(const std::vector<std::vector<int>>& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int nnz() const { return static_cast<int>(entries_.size()); }
  bool is_zero() const { return entries_.empty(); }

  /// Zero for absent positions; throws on out-of-range indices.
  Int at(int i, int j) const;
  void set(int i, int j, Int v);
  void add_at(int i, int j, const Int& v);

  const std::map<Key, Int>& entries() const { return entries_; }

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  IntMatrix operator-(const IntMatrix& rhs) const;
  IntMatrix scaled(const Int& c) const;
  /// Kronecker product, left factor major: index (i,k) -> i*rhs.rows()+k.
  IntMatrix kron(const IntMatrix& rhs) const;
  /// Columns of rhs appended to the right of *this (same row count).
  IntMatrix augment(const IntMatrix& rhs) const;

  bool operator==(const IntMatrix& rhs) const;
  bool operator!=(const IntMatrix& rhs) const { return !(*this == rhs); }

  Json to_json() const;
  static IntMatrix from_json(const Json& j);

 private:
  void check_index(int i, int j) const;
  int rows_ = 0;
  int cols_ = 0;
  std::map<Key, Int> entries_;
};

}  // namespace topo
