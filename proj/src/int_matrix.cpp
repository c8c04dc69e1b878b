#include "topo/int_matrix.hpp"

#include "topo/error.hpp"

namespace topo {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) fail("invalid-input", "negative matrix dimension");
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.entries_[{i, i}] = 1;
  return m;
}

IntMatrix IntMatrix::from_dense(const std::vector<std::vector<int>>& d) {
  int r = static_cast<int>(d.size());
  int c = r == 0 ? 0 : static_cast<int>(d[0].size());
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(d[i].size()) != c) fail("invalid-input", "ragged dense matrix");
    for (int j = 0; j < c; ++j)
      if (d[i][j] != 0) m.entries_[{i, j}] = d[i][j];
  }
  return m;
}

void IntMatrix::check_index(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    fail("invalid-input", "matrix index out of range");
}

Int IntMatrix::at(int i, int j) const {
  check_index(i, j);
  auto it = entries_.find({i, j});
  return it == entries_.end() ? Int(0) : it->second;
}

void IntMatrix::set(int i, int j, Int v) {
  check_index(i, j);
  if (v == 0)
    entries_.erase({i, j});
  else
    entries_[{i, j}] = std::move(v);
}

void IntMatrix::add_at(int i, int j, const Int& v) {
  if (v == 0) return;
  check_index(i, j);
  auto [it, inserted] = entries_.try_emplace({i, j}, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) entries_.erase(it);
  }
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (const auto& [k, v] : entries_) t.entries_[{k.second, k.first}] = v;
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) fail("invalid-input", "matrix product shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (const auto& [k, v] : entries_) {
    auto it = rhs.entries_.lower_bound({k.second, 0});
    auto end = rhs.entries_.lower_bound({k.second + 1, 0});
    for (; it != end; ++it) out.add_at(k.first, it->first.second, v * it->second);
  }
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) fail("invalid-input", "matrix sum shape mismatch");
  IntMatrix out = *this;
  for (const auto& [k, v] : rhs.entries_) out.add_at(k.first, k.second, v);
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) fail("invalid-input", "matrix diff shape mismatch");
  IntMatrix out = *this;
  for (const auto& [k, v] : rhs.entries_) out.add_at(k.first, k.second, -v);
  return out;
}

IntMatrix IntMatrix::scaled(const Int& c) const {
  IntMatrix out(rows_, cols_);
  if (c == 0) return out;
  for (const auto& [k, v] : entries_) out.entries_[k] = v * c;
  return out;
}

IntMatrix IntMatrix::kron(const IntMatrix& rhs) const {
  IntMatrix out(rows_ * rhs.rows_, cols_ * rhs.cols_);
  for (const auto& [ka, va] : entries_)
    for (const auto& [kb, vb] : rhs.entries_)
      out.entries_[{ka.first * rhs.rows_ + kb.first, ka.second * rhs.cols_ + kb.second}] = va * vb;
  return out;
}

IntMatrix IntMatrix::augment(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_) fail("invalid-input", "augment row mismatch");
  IntMatrix out(rows_, cols_ + rhs.cols_);
  out.entries_ = entries_;
  for (const auto& [k, v] : rhs.entries_) out.entries_[{k.first, cols_ + k.second}] = v;
  return out;
}

bool IntMatrix::operator==(const IntMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
}

Json IntMatrix::to_json() const {
  Json entries = Json::array();
  for (const auto& [k, v] : entries_) entries.push_back({k.first, k.second, v.str()});
  return Json{{"rows", rows_}, {"cols", cols_}, {"entries", entries}};
}

IntMatrix IntMatrix::from_json(const Json& j) {
  IntMatrix m(j.at("rows").get<int>(), j.at("cols").get<int>());
  for (const auto& e : j.at("entries")) {
    Int v;
    if (e.at(2).is_string())
      v = Int(e.at(2).get<std::string>());
    else
      v = Int(e.at(2).get<long long>());
    if (m.at(e.at(0).get<int>(), e.at(1).get<int>()) != 0)
      fail("invalid-input", "duplicate matrix entry in JSON");
    m.set(e.at(0).get<int>(), e.at(1).get<int>(), v);
  }
  return m;
}

}  // namespace topo
