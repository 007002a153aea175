#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qhopf/cyclo.hpp"

namespace qhopf {

// sorted by column, no stored zeros
using SparseVec = std::vector<std::pair<int, CycNum>>;

void axpy(SparseVec& y, const CycNum& a, const SparseVec& x);  // y += a x
SparseVec scaled(const SparseVec& x, const CycNum& a);

// Incremental exact Gaussian elimination over sparse rows.
class RowReducer {
 public:
  explicit RowReducer(int ncols) : ncols_(ncols) {}
  // reduces r against the current pivots; stores it if independent
  bool add_row(SparseVec r);
  int rank() const { return int(pivots_.size()); }
  int ncols() const { return ncols_; }
  // back substitution to reduced row echelon form
  void reduce_fully();
  // basis of {x : row . x = 0 for every row}; call after reduce_fully
  std::vector<SparseVec> nullspace() const;
  const std::map<int, SparseVec>& pivots() const { return pivots_; }

 private:
  int ncols_;
  std::map<int, SparseVec> pivots_;
  bool reduced_ = false;
};

// solve A x = b where A is given by rows; nullopt if inconsistent
std::optional<std::vector<CycNum>> solve_rows(const std::vector<SparseVec>& rows, const std::vector<CycNum>& rhs,
                                              int ncols, int order);

class SMat {
 public:
  SMat() = default;
  SMat(int rows, int cols, int order) : rows_(rows), cols_(cols), order_(order), data_(rows) {}
  static SMat identity(int n, int order);
  static SMat diagonal(const std::vector<CycNum>& d, int order);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int order() const { return order_; }

  void set(int i, int j, const CycNum& v);
  void add(int i, int j, const CycNum& v);
  CycNum get(int i, int j) const;
  const SparseVec& row(int i) const { return data_[i]; }
  size_t nnz() const;

  SMat operator*(const SMat& o) const;
  SMat operator+(const SMat& o) const;
  SMat operator-(const SMat& o) const;
  SMat operator*(const CycNum& s) const;
  SMat& operator+=(const SMat& o);
  bool operator==(const SMat& o) const;
  bool operator!=(const SMat& o) const { return !(*this == o); }
  bool is_zero() const;
  bool is_identity() const;
  SMat transpose() const;
  SMat pow(int e) const;
  std::vector<CycNum> apply(const std::vector<CycNum>& v) const;

  int rank() const;
  std::optional<SMat> inverse() const;
  std::string str() const;

 private:
  int rows_ = 0, cols_ = 0, order_ = 1;
  std::vector<SparseVec> data_;
};

SMat kron(const SMat& a, const SMat& b);
// permutation taking basis e_i (x) f_j of A (x) B to f_j (x) e_i
SMat flip_matrix(int da, int db, int order);

}  // namespace qhopf
