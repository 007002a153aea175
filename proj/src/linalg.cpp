#include "qhopf/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace qhopf {

void axpy(SparseVec& y, const CycNum& a, const SparseVec& x) {
  if (a.is_zero() || x.empty()) return;
  SparseVec out;
  out.reserve(y.size() + x.size());
  size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(std::move(y[i++]));
    } else if (i == y.size() || x[j].first < y[i].first) {
      out.emplace_back(x[j].first, a * x[j].second);
      ++j;
    } else {
      CycNum v = std::move(y[i].second);
      v += a * x[j].second;
      if (!v.is_zero()) out.emplace_back(y[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  y = std::move(out);
}

SparseVec scaled(const SparseVec& x, const CycNum& a) {
  SparseVec out;
  if (a.is_zero()) return out;
  out.reserve(x.size());
  for (auto& [c, v] : x) out.emplace_back(c, v * a);
  return out;
}

bool RowReducer::add_row(SparseVec r) {
  reduced_ = false;
  while (!r.empty()) {
    int lead = r.front().first;
    auto it = pivots_.find(lead);
    if (it == pivots_.end()) break;
    CycNum c = -r.front().second;
    axpy(r, c, it->second);
  }
  // also clear later pivot columns so stored rows stay short
  if (r.empty()) return false;
  for (size_t k = 1; k < r.size();) {
    auto it = pivots_.find(r[k].first);
    if (it == pivots_.end()) {
      ++k;
      continue;
    }
    int col = r[k].first;
    CycNum c = -r[k].second;
    axpy(r, c, it->second);
    k = 1;
    while (k < r.size() && r[k].first <= col) ++k;
  }
  CycNum inv = r.front().second.inverse();
  int lead = r.front().first;
  for (auto& [c, v] : r) v = v * inv;
  pivots_.emplace(lead, std::move(r));
  return true;
}

void RowReducer::reduce_fully() {
  if (reduced_) return;
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    int col = it->first;
    for (auto& [c2, row] : pivots_) {
      if (c2 >= col) break;
      auto pos = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, int k) { return e.first < k; });
      if (pos == row.end() || pos->first != col) continue;
      CycNum f = -pos->second;
      axpy(row, f, it->second);
    }
  }
  reduced_ = true;
}

std::vector<SparseVec> RowReducer::nullspace() const {
  std::vector<SparseVec> basis;
  std::vector<char> is_pivot(ncols_, 0);
  for (auto& [c, r] : pivots_) is_pivot[c] = 1;
  for (int f = 0; f < ncols_; ++f) {
    if (is_pivot[f]) continue;
    SparseVec v;
    for (auto& [c, r] : pivots_) {
      auto pos = std::lower_bound(r.begin(), r.end(), f, [](const auto& e, int k) { return e.first < k; });
      if (pos != r.end() && pos->first == f) v.emplace_back(c, -pos->second);
    }
    v.emplace_back(f, CycNum(1L, 1));
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<CycNum>> solve_rows(const std::vector<SparseVec>& rows, const std::vector<CycNum>& rhs,
                                              int ncols, int order) {
  RowReducer rr(ncols + 1);
  for (size_t i = 0; i < rows.size(); ++i) {
    SparseVec r = rows[i];
    if (!rhs[i].is_zero()) r.emplace_back(ncols, rhs[i]);
    rr.add_row(std::move(r));
  }
  if (rr.pivots().count(ncols)) return std::nullopt;
  rr.reduce_fully();
  std::vector<CycNum> x(ncols, CycNum(order));
  for (auto& [c, r] : rr.pivots())
    if (!r.empty() && r.back().first == ncols) x[c] = r.back().second;
  return x;
}

SMat SMat::identity(int n, int order) {
  SMat m(n, n, order);
  for (int i = 0; i < n; ++i) m.data_[i].emplace_back(i, CycNum(1L, order));
  return m;
}

SMat SMat::diagonal(const std::vector<CycNum>& d, int order) {
  SMat m(int(d.size()), int(d.size()), order);
  for (size_t i = 0; i < d.size(); ++i)
    if (!d[i].is_zero()) m.data_[i].emplace_back(int(i), d[i]);
  return m;
}

void SMat::set(int i, int j, const CycNum& v) {
  auto& r = data_[i];
  auto pos = std::lower_bound(r.begin(), r.end(), j, [](const auto& e, int k) { return e.first < k; });
  if (pos != r.end() && pos->first == j) {
    if (v.is_zero())
      r.erase(pos);
    else
      pos->second = v;
  } else if (!v.is_zero()) {
    r.insert(pos, {j, v});
  }
}

void SMat::add(int i, int j, const CycNum& v) {
  if (v.is_zero()) return;
  auto& r = data_[i];
  auto pos = std::lower_bound(r.begin(), r.end(), j, [](const auto& e, int k) { return e.first < k; });
  if (pos != r.end() && pos->first == j) {
    pos->second += v;
    if (pos->second.is_zero()) r.erase(pos);
  } else {
    r.insert(pos, {j, v});
  }
}

CycNum SMat::get(int i, int j) const {
  auto& r = data_[i];
  auto pos = std::lower_bound(r.begin(), r.end(), j, [](const auto& e, int k) { return e.first < k; });
  if (pos != r.end() && pos->first == j) return pos->second;
  return CycNum(order_);
}

size_t SMat::nnz() const {
  size_t n = 0;
  for (auto& r : data_) n += r.size();
  return n;
}

SMat SMat::operator*(const SMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("SMat: dimension mismatch in product");
  SMat out(rows_, o.cols_, std::max(order_, o.order_));
  std::vector<CycNum> acc(o.cols_);
  std::vector<char> used(o.cols_, 0);
  std::vector<int> touched;
  for (int i = 0; i < rows_; ++i) {
    touched.clear();
    for (auto& [k, a] : data_[i]) {
      for (auto& [j, b] : o.data_[k]) {
        if (!used[j]) {
          used[j] = 1;
          touched.push_back(j);
          acc[j] = a * b;
        } else {
          acc[j] += a * b;
        }
      }
    }
    std::sort(touched.begin(), touched.end());
    for (int j : touched) {
      used[j] = 0;
      if (!acc[j].is_zero()) out.data_[i].emplace_back(j, std::move(acc[j]));
    }
  }
  return out;
}

SMat& SMat::operator+=(const SMat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("SMat: dimension mismatch in sum");
  for (int i = 0; i < rows_; ++i) axpy(data_[i], CycNum(1L, 1), o.data_[i]);
  return *this;
}

SMat SMat::operator+(const SMat& o) const {
  SMat r = *this;
  r += o;
  return r;
}

SMat SMat::operator-(const SMat& o) const {
  SMat r = *this;
  for (int i = 0; i < rows_; ++i) axpy(r.data_[i], CycNum(-1L, 1), o.data_[i]);
  return r;
}

SMat SMat::operator*(const CycNum& s) const {
  SMat r(rows_, cols_, order_);
  for (int i = 0; i < rows_; ++i) r.data_[i] = scaled(data_[i], s);
  return r;
}

bool SMat::operator==(const SMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (int i = 0; i < rows_; ++i) {
    if (data_[i].size() != o.data_[i].size()) return false;
    for (size_t k = 0; k < data_[i].size(); ++k)
      if (data_[i][k].first != o.data_[i][k].first || data_[i][k].second != o.data_[i][k].second) return false;
  }
  return true;
}

bool SMat::is_zero() const {
  for (auto& r : data_)
    if (!r.empty()) return false;
  return true;
}

bool SMat::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    if (data_[i].size() != 1 || data_[i][0].first != i || !data_[i][0].second.is_one()) return false;
  return true;
}

SMat SMat::transpose() const {
  SMat t(cols_, rows_, order_);
  for (int i = 0; i < rows_; ++i)
    for (auto& [j, v] : data_[i]) t.data_[j].emplace_back(i, v);
  return t;
}

SMat SMat::pow(int e) const {
  SMat r = identity(rows_, order_), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

std::vector<CycNum> SMat::apply(const std::vector<CycNum>& v) const {
  std::vector<CycNum> out(rows_, CycNum(order_));
  for (int i = 0; i < rows_; ++i)
    for (auto& [j, a] : data_[i]) out[i] += a * v[j];
  return out;
}

int SMat::rank() const {
  RowReducer rr(cols_);
  for (auto& r : data_) rr.add_row(r);
  return rr.rank();
}

std::optional<SMat> SMat::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  int n = rows_;
  RowReducer rr(2 * n);
  for (int i = 0; i < n; ++i) {
    SparseVec r = data_[i];
    r.emplace_back(n + i, CycNum(1L, order_));
    rr.add_row(std::move(r));
  }
  rr.reduce_fully();
  if (rr.rank() != n) return std::nullopt;
  SMat inv(n, n, order_);
  for (auto& [c, r] : rr.pivots()) {
    if (c >= n) return std::nullopt;
    for (auto& [j, v] : r)
      if (j >= n) inv.data_[c].emplace_back(j - n, v);
  }
  return inv;
}

std::string SMat::str() const {
  std::ostringstream os;
  os << "[" << rows_ << "x" << cols_ << "]";
  for (int i = 0; i < rows_; ++i)
    for (auto& [j, v] : data_[i]) os << " (" << i << "," << j << ")=" << v.str();
  return os.str();
}

SMat kron(const SMat& a, const SMat& b) {
  SMat out(a.rows() * b.rows(), a.cols() * b.cols(), std::max(a.order(), b.order()));
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < b.rows(); ++k) {
      int r = i * b.rows() + k;
      for (auto& [j, x] : a.row(i))
        for (auto& [l, y] : b.row(k)) out.set(r, j * b.cols() + l, x * y);
    }
  return out;
}

SMat flip_matrix(int da, int db, int order) {
  SMat m(da * db, da * db, order);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j) m.set(j * da + i, i * db + j, CycNum(1L, order));
  return m;
}

}  // namespace qhopf
