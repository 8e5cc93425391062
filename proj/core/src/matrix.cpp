#include "blockscope/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "blockscope/errors.hpp"

namespace blockscope {

namespace {

void check_same_field(const Mat& a, const Mat& b) {
  if (a.field_ptr() != b.field_ptr()) throw PreconditionError("matrices over different fields");
}

// Reduction table for prime fields: red[x] = x mod p for x < p * p + p.
struct PrimeReducer {
  int p;
  std::vector<Elem> red;
  explicit PrimeReducer(int prime) : p(prime), red(static_cast<size_t>(prime) * prime + prime) {
    for (size_t i = 0; i < red.size(); ++i) red[i] = static_cast<Elem>(i % p);
  }
};

const PrimeReducer& reducer(int p) {
  static const auto* table = [] {
    auto* t = new std::vector<PrimeReducer>();
    for (int q = 0; q <= 31; ++q) t->emplace_back(q < 2 ? 2 : q);
    return t;
  }();
  return (*table)[p];
}

}  // namespace

void axpy(const Field& f, Elem* dst, const Elem* src, Elem c, int n) {
  if (c == 0) return;
  if (f.is_prime()) {
    const int p = f.p();
    if (p == 2) {
      for (int j = 0; j < n; ++j) dst[j] ^= src[j];
      return;
    }
    const Elem* red = reducer(p).red.data();
    for (int j = 0; j < n; ++j) dst[j] = red[dst[j] + c * src[j]];
    return;
  }
  const Elem* mc = f.mul_row(c);
  const int q = f.size();
  const Elem* add = f.add_row(0);
  for (int j = 0; j < n; ++j) dst[j] = add[static_cast<size_t>(dst[j]) * q + mc[src[j]]];
}

void scale_row(const Field& f, Elem* dst, Elem c, int n) {
  if (c == 1) return;
  const Elem* mc = f.mul_row(c);
  for (int j = 0; j < n; ++j) dst[j] = mc[dst[j]];
}

Mat::Mat(const Field& f, int rows, int cols)
    : field_(&f), rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, 0) {}

Mat::Mat(const Field& f, int rows, int cols, std::vector<Elem> data)
    : field_(&f), rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != static_cast<size_t>(rows) * cols) throw PreconditionError("matrix data size mismatch");
}

Mat Mat::identity(const Field& f, int n) {
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_ints(const Field& f, const std::vector<std::vector<long long>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows[0].size()) : 0;
  Mat m(f, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw PreconditionError("ragged matrix literal");
    for (int j = 0; j < c; ++j) m(i, j) = f.from_int(rows[i][j]);
  }
  return m;
}

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem x) { return x == 0; });
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool Mat::operator==(const Mat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_ &&
         (field_ == o.field_ || data_.empty());
}

Mat Mat::transpose() const {
  Mat t(*field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw PreconditionError("matrix product shape mismatch");
  check_same_field(*this, o);
  const Field& f = *field_;
  Mat r(f, rows_, o.cols_);
  const int n = o.cols_;
  if (n == 0 || rows_ == 0) return r;
  if (f.is_prime() && f.p() != 2) {
    const int p = f.p();
    // Accumulate in 32 bits; (p-1)^2 * 4096 stays far below 2^31.
    std::vector<std::uint32_t> acc(n);
    for (int i = 0; i < rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0u);
      const Elem* a = row(i);
      int pending = 0;
      for (int k = 0; k < cols_; ++k) {
        const std::uint32_t c = a[k];
        if (!c) continue;
        const Elem* b = o.row(k);
        for (int j = 0; j < n; ++j) acc[j] += c * b[j];
        if (++pending == 4096) {
          for (auto& x : acc) x %= p;
          pending = 0;
        }
      }
      Elem* out = r.row(i);
      for (int j = 0; j < n; ++j) out[j] = static_cast<Elem>(acc[j] % p);
    }
    return r;
  }
  for (int i = 0; i < rows_; ++i) {
    const Elem* a = row(i);
    Elem* out = r.row(i);
    for (int k = 0; k < cols_; ++k)
      if (a[k]) axpy(f, out, o.row(k), a[k], n);
  }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  Mat r = *this;
  r += o;
  return r;
}

Mat& Mat::operator+=(const Mat& o) {
  add_scaled(o, 1);
  return *this;
}

void Mat::add_scaled(const Mat& o, Elem c) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw PreconditionError("matrix sum shape mismatch");
  if (data_.empty()) return;
  check_same_field(*this, o);
  axpy(*field_, data_.data(), o.data_.data(), c, static_cast<int>(data_.size()));
}

Mat Mat::operator-(const Mat& o) const {
  Mat r = *this;
  r.add_scaled(o, field_->neg(1));
  return r;
}

Mat Mat::scaled(Elem c) const {
  Mat r = *this;
  if (!data_.empty()) scale_row(*field_, r.data_.data(), c, static_cast<int>(data_.size()));
  return r;
}

Mat Mat::block(int r0, int c0, int nr, int nc) const {
  Mat b(*field_, nr, nc);
  for (int i = 0; i < nr; ++i) std::copy_n(row(r0 + i) + c0, nc, b.row(i));
  return b;
}

void Mat::set_block(int r0, int c0, const Mat& b) {
  for (int i = 0; i < b.rows(); ++i) std::copy_n(b.row(i), b.cols(), row(r0 + i) + c0);
}

Mat Mat::select_rows(const std::vector<int>& idx) const {
  Mat r(*field_, static_cast<int>(idx.size()), cols_);
  for (size_t i = 0; i < idx.size(); ++i) std::copy_n(row(idx[i]), cols_, r.row(static_cast<int>(i)));
  return r;
}

Mat Mat::select_cols(const std::vector<int>& idx) const {
  Mat r(*field_, rows_, static_cast<int>(idx.size()));
  for (int i = 0; i < rows_; ++i)
    for (size_t j = 0; j < idx.size(); ++j) r(i, static_cast<int>(j)) = (*this)(i, idx[j]);
  return r;
}

void Mat::append_rows(const Mat& b) {
  if (rows_ == 0 && cols_ == 0) {
    *this = b;
    return;
  }
  if (b.rows() == 0) return;
  if (b.cols() != cols_) throw PreconditionError("append_rows width mismatch");
  data_.insert(data_.end(), b.data_.begin(), b.data_.end());
  rows_ += b.rows();
}

Mat Mat::vstack(const Mat& a, const Mat& b) {
  Mat r = a;
  r.append_rows(b);
  return r;
}

Mat Mat::hstack(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw PreconditionError("hstack height mismatch");
  Mat r(a.field(), a.rows(), a.cols() + b.cols());
  r.set_block(0, 0, a);
  r.set_block(0, a.cols(), b);
  return r;
}

Mat Mat::apply_rows(const Mat& op, const Mat& v) {
  if (v.rows() == 0) return Mat(op.field(), 0, op.rows());
  return v * op.transpose();
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << field_->format((*this)(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

Rref rref(const Mat& m) {
  Rref out{m, 0, {}};
  Mat& a = out.m;
  const int rows = a.rows(), cols = a.cols();
  if (rows == 0 || cols == 0) return out;
  const Field& f = a.field();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a(i, c)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) std::swap_ranges(a.row(piv), a.row(piv) + cols, a.row(r));
    scale_row(f, a.row(r) + c, f.inv(a(r, c)), cols - c);
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Elem x = a(i, c);
      if (x) axpy(f, a.row(i) + c, a.row(r) + c, f.neg(x), cols - c);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

int rank(const Mat& m) { return rref(m).rank; }

Mat kernel_basis(const Mat& m) {
  const Field& f = m.field();
  const Rref r = rref(m);
  const int cols = m.cols();
  std::vector<char> is_pivot(cols, 0);
  for (int c : r.pivots) is_pivot[c] = 1;
  Mat k(f, cols - r.rank, cols);
  int idx = 0;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    k(idx, free) = 1;
    for (int i = 0; i < r.rank; ++i) k(idx, r.pivots[i]) = f.neg(r.m(i, free));
    ++idx;
  }
  return k;
}

Mat left_kernel(const Mat& m) { return kernel_basis(m.transpose()); }

Mat kron(const Mat& a, const Mat& b) {
  check_same_field(a, b);
  const Field& f = a.field();
  Mat k(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Elem x = a(i, j);
      if (!x) continue;
      const Elem* mx = f.mul_row(x);
      for (int k2 = 0; k2 < b.rows(); ++k2) {
        Elem* out = k.row(i * b.rows() + k2) + j * b.cols();
        const Elem* src = b.row(k2);
        for (int l = 0; l < b.cols(); ++l) out[l] = mx[src[l]];
      }
    }
  return k;
}

Mat row_space(const Mat& m) {
  Rref r = rref(m);
  return r.m.block(0, 0, r.rank, m.cols());
}

Subspace::Subspace(const Field& f, int ambient) : field_(&f), ambient_(ambient), basis_(f, 0, ambient) {}

Subspace::Subspace(const Mat& spanning, int ambient)
    : field_(spanning.field_ptr()), ambient_(ambient < 0 ? spanning.cols() : ambient) {
  Rref r = rref(spanning);
  basis_ = r.m.block(0, 0, r.rank, spanning.cols());
  pivots_ = r.pivots;
  if (basis_.cols() != ambient_) basis_ = Mat(*field_, 0, ambient_);
}

bool Subspace::reduce(Elem* v) const {
  const Field& f = *field_;
  for (int i = 0; i < basis_.rows(); ++i) {
    const Elem c = v[pivots_[i]];
    if (c) axpy(f, v, basis_.row(i), f.neg(c), ambient_);
  }
  for (int j = 0; j < ambient_; ++j)
    if (v[j]) return false;
  return true;
}

bool Subspace::contains(std::span<const Elem> v) const {
  std::vector<Elem> w(v.begin(), v.end());
  return reduce(w.data());
}

bool Subspace::contains_rows(const Mat& m) const {
  for (int i = 0; i < m.rows(); ++i)
    if (!contains(m.row_span(i))) return false;
  return true;
}

std::vector<Elem> Subspace::coords(std::span<const Elem> v) const {
  std::vector<Elem> c(basis_.rows());
  for (int i = 0; i < basis_.rows(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Mat Subspace::coords_rows(const Mat& m) const {
  Mat c(*field_, m.rows(), basis_.rows());
  for (int r = 0; r < m.rows(); ++r)
    for (int i = 0; i < basis_.rows(); ++i) c(r, i) = m(r, pivots_[i]);
  return c;
}

bool Subspace::add(std::span<const Elem> v) {
  const Field& f = *field_;
  std::vector<Elem> w(v.begin(), v.end());
  if (reduce(w.data())) return false;
  int piv = 0;
  while (w[piv] == 0) ++piv;
  scale_row(f, w.data(), f.inv(w[piv]), ambient_);
  for (int i = 0; i < basis_.rows(); ++i) {
    const Elem c = basis_(i, piv);
    if (c) axpy(f, basis_.row(i), w.data(), f.neg(c), ambient_);
  }
  const int pos = static_cast<int>(std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin());
  Mat nb(f, basis_.rows() + 1, ambient_);
  for (int i = 0; i < pos; ++i) std::copy_n(basis_.row(i), ambient_, nb.row(i));
  std::copy_n(w.data(), ambient_, nb.row(pos));
  for (int i = pos; i < basis_.rows(); ++i) std::copy_n(basis_.row(i), ambient_, nb.row(i + 1));
  basis_ = std::move(nb);
  pivots_.insert(pivots_.begin() + pos, piv);
  return true;
}

void Subspace::add_rows(const Mat& m) {
  if (m.rows() == 0) return;
  if (basis_.rows() == 0) {
    *this = Subspace(m, ambient_);
    return;
  }
  *this = Subspace(Mat::vstack(basis_, m), ambient_);
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && basis_.rows() == o.basis_.rows() &&
         (basis_.rows() == 0 || basis_.data() == o.basis_.data());
}

bool Subspace::is_subspace_of(const Subspace& o) const { return o.contains_rows(basis_); }

Subspace intersect(const Subspace& a, const Subspace& b) {
  const Field& f = a.field();
  const int n = a.ambient();
  if (a.dim() == 0 || b.dim() == 0) return Subspace(f, n);
  // x in span(A) and span(B): solve [A; B]^T-style relation c_A A = c_B B.
  Mat stacked = Mat::vstack(a.basis(), b.basis());
  Mat rel = left_kernel(stacked);
  Mat coeff = rel.block(0, 0, rel.rows(), a.dim());
  Mat vecs = coeff * a.basis();
  return Subspace(vecs, n);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  Subspace s = a;
  s.add_rows(b.basis());
  return s;
}

LinearSolver::LinearSolver(const Mat& d) : field_(d.field_ptr()), rows_(d.rows()), cols_(d.cols()) {
  const Field& f = *field_;
  Mat aug(f, rows_, cols_ + rows_);
  aug.set_block(0, 0, d);
  for (int i = 0; i < rows_; ++i) aug(i, cols_ + i) = 1;
  // Eliminate only over the first cols_ columns.
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int piv = -1;
    for (int i = r; i < rows_; ++i)
      if (aug(i, c)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    const int w = cols_ + rows_;
    if (piv != r) std::swap_ranges(aug.row(piv), aug.row(piv) + w, aug.row(r));
    scale_row(f, aug.row(r), f.inv(aug(r, c)), w);
    for (int i = 0; i < rows_; ++i) {
      if (i == r) continue;
      const Elem x = aug(i, c);
      if (x) axpy(f, aug.row(i), aug.row(r), f.neg(x), w);
    }
    pivots_.push_back(c);
    ++r;
  }
  rank_ = r;
  reduced_ = aug.block(0, 0, r, cols_);
  transform_ = aug.block(0, cols_, r, rows_);
  kernel_ = aug.block(r, cols_, rows_ - r, rows_);
}

bool LinearSolver::solve(std::span<const Elem> y, std::vector<Elem>& x) const {
  const Field& f = *field_;
  std::vector<Elem> res(y.begin(), y.end());
  x.assign(rows_, 0);
  for (int i = 0; i < rank_; ++i) {
    const Elem c = res[pivots_[i]];
    if (!c) continue;
    axpy(f, res.data(), reduced_.row(i), f.neg(c), cols_);
    axpy(f, x.data(), transform_.row(i), c, rows_);
  }
  for (Elem v : res)
    if (v) return false;
  return true;
}

Mat LinearSolver::solve_rows(const Mat& y) const {
  Mat out(*field_, y.rows(), rows_);
  std::vector<Elem> x;
  for (int i = 0; i < y.rows(); ++i) {
    if (!solve(y.row_span(i), x)) throw InternalError("linear system has no solution");
    std::copy(x.begin(), x.end(), out.row(i));
  }
  return out;
}

}  // namespace blockscope
