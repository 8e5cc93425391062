#pragma once

#include <span>
#include <string>
#include <vector>

#include "blockscope/field.hpp"

namespace blockscope {

/// Dense row-major matrix over a finite field. Vectors are stored as
/// 1 x n matrices or as rows of a larger matrix.
class Mat {
 public:
  Mat() = default;
  Mat(const Field& f, int rows, int cols);
  Mat(const Field& f, int rows, int cols, std::vector<Elem> data);

  static Mat identity(const Field& f, int n);
  /// Build from small integer literals, reduced into the prime subfield.
  static Mat from_ints(const Field& f, const std::vector<std::vector<long long>>& rows);

  const Field& field() const { return *field_; }
  const Field* field_ptr() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Elem operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
  Elem& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const Elem* row(int r) const { return data_.data() + static_cast<size_t>(r) * cols_; }
  Elem* row(int r) { return data_.data() + static_cast<size_t>(r) * cols_; }
  std::span<const Elem> row_span(int r) const { return {row(r), static_cast<size_t>(cols_)}; }
  const std::vector<Elem>& data() const { return data_; }

  bool is_zero() const;
  bool is_identity() const;
  bool operator==(const Mat& o) const;

  Mat transpose() const;
  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(Elem c) const;
  Mat& operator+=(const Mat& o);
  /// this += c * o
  void add_scaled(const Mat& o, Elem c);

  Mat block(int r0, int c0, int nr, int nc) const;
  void set_block(int r0, int c0, const Mat& b);
  Mat row_vec(int r) const { return block(r, 0, 1, cols_); }
  Mat select_rows(const std::vector<int>& idx) const;
  Mat select_cols(const std::vector<int>& idx) const;
  void append_rows(const Mat& b);

  static Mat vstack(const Mat& a, const Mat& b);
  static Mat hstack(const Mat& a, const Mat& b);

  /// Rows of `v` mapped through the column-convention operator `op`:
  /// returns v * op^T, i.e. each row x becomes (op x)^T.
  static Mat apply_rows(const Mat& op, const Mat& v);

  std::string to_string() const;

 private:
  const Field* field_ = nullptr;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Elem> data_;
};

/// dst[j] += c * src[j] for j < n.
void axpy(const Field& f, Elem* dst, const Elem* src, Elem c, int n);
/// dst[j] = c * dst[j].
void scale_row(const Field& f, Elem* dst, Elem c, int n);

struct Rref {
  Mat m;
  int rank = 0;
  std::vector<int> pivots;
};

Rref rref(const Mat& m);
int rank(const Mat& m);
/// Rows form a basis of {v : m v^T = 0}.
Mat kernel_basis(const Mat& m);
/// Rows form a basis of {v : v m = 0}.
Mat left_kernel(const Mat& m);
Mat kron(const Mat& a, const Mat& b);
/// Reduced echelon basis of the row space (zero rows dropped).
Mat row_space(const Mat& m);

/// Row space kept in reduced echelon form, with O(rank * n) membership
/// tests and coordinate extraction.
class Subspace {
 public:
  Subspace() = default;
  Subspace(const Field& f, int ambient);
  explicit Subspace(const Mat& spanning, int ambient = -1);

  int dim() const { return basis_.rows(); }
  int ambient() const { return ambient_; }
  const Mat& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }
  const Field& field() const { return *field_; }

  /// Reduce v against the basis in place; returns true if v became zero.
  bool reduce(Elem* v) const;
  bool contains(std::span<const Elem> v) const;
  bool contains_rows(const Mat& m) const;
  /// Coordinates of v (assumed inside) in terms of basis rows.
  std::vector<Elem> coords(std::span<const Elem> v) const;
  Mat coords_rows(const Mat& m) const;
  /// Adds v to the span; returns true if the dimension grew.
  bool add(std::span<const Elem> v);
  void add_rows(const Mat& m);

  bool operator==(const Subspace& o) const;
  bool is_subspace_of(const Subspace& o) const;

 private:
  const Field* field_ = nullptr;
  int ambient_ = 0;
  Mat basis_;
  std::vector<int> pivots_;
};

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

/// Solves x * D = y for many right-hand sides with one elimination.
class LinearSolver {
 public:
  LinearSolver() = default;
  explicit LinearSolver(const Mat& d);
  int rank() const { return rank_; }
  /// Returns false when y is outside the row space of D.
  bool solve(std::span<const Elem> y, std::vector<Elem>& x) const;
  Mat solve_rows(const Mat& y) const;  // throws if unsolvable
  /// Rows form a basis of {x : x * D = 0}.
  const Mat& left_kernel() const { return kernel_; }

 private:
  const Field* field_ = nullptr;
  int rows_ = 0;
  int cols_ = 0;
  int rank_ = 0;
  Mat reduced_;     // rref of D (first rank_ rows nonzero)
  Mat transform_;   // T with T * D = reduced_
  Mat kernel_;
  std::vector<int> pivots_;
};

}  // namespace blockscope
