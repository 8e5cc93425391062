#include "blockscope/meataxe.hpp"

#include <algorithm>

#include "blockscope/errors.hpp"
#include "blockscope/poly1.hpp"

namespace blockscope {

namespace {

Mat transposed_spin_complement(const ModuleRep& m, const std::vector<Elem>& w, const std::vector<int>& gens) {
  ModuleRep mt = m;
  for (auto& a : mt.action) a = a.transpose();
  Subspace ws = spin(mt, Mat(*m.field, 1, m.dim, w), gens);
  if (ws.dim() == m.dim) return Mat(*m.field, 0, m.dim);
  return kernel_basis(ws.basis());  // annihilator of W is invariant in M
}

}  // namespace

std::optional<Subspace> MeatAxe::find_submodule(const ModuleRep& m, const std::vector<int>& gens) {
  const Field& f = *m.field;
  const int n = m.dim;
  if (n <= 1) return std::nullopt;
  std::uniform_int_distribution<int> coeff(0, f.size() - 1);
  for (int attempt = 0; attempt < 400; ++attempt) {
    Mat a(f, n, n);
    for (auto& act : m.action) {
      const Elem c = static_cast<Elem>(coeff(rng_));
      if (c) a.add_scaled(act, c);
    }
    // Products of generators enlarge the sampled set for small fields.
    if (gens.size() >= 2 && attempt % 2 == 1) a += m.action[gens[0]] * m.action[gens[1]] * a;
    auto factors = upoly::factor(f, upoly::minimal_polynomial(a));
    for (auto& fc : factors) {
      Mat theta = upoly::eval_matrix(fc.poly, a);
      Mat ker = kernel_basis(theta);
      if (ker.rows() == 0) continue;
      Subspace sv = spin(m, ker.row_vec(0), gens);
      if (sv.dim() < n) return sv;
      Mat kert = kernel_basis(theta.transpose());
      std::vector<Elem> w(kert.row(0), kert.row(0) + n);
      Mat sub = transposed_spin_complement(m, w, gens);
      if (sub.rows() > 0) return Subspace(sub, n);
      if (ker.rows() == upoly::degree(fc.poly)) return std::nullopt;
    }
  }
  throw InternalError("MeatAxe failed to decide irreducibility");
}

std::vector<ModuleRep> MeatAxe::composition_factors(const ModuleRep& m, const std::vector<int>& gens) {
  if (m.dim == 0) return {};
  auto sub = find_submodule(m, gens);
  if (!sub) return {m};
  auto lower = composition_factors(submodule(m, sub->basis()), gens);
  auto upper = composition_factors(quotient_module(m, *sub), gens);
  lower.insert(lower.end(), upper.begin(), upper.end());
  return lower;
}

bool isomorphic_simples(const ModuleRep& s, const ModuleRep& t, const std::vector<int>& gens) {
  if (s.dim != t.dim) return false;
  return hom_space(s, t, gens).rows() > 0;
}

int match_simple(const ModuleRep& s, const std::vector<ModuleRep>& simples, const std::vector<int>& gens) {
  for (size_t i = 0; i < simples.size(); ++i)
    if (isomorphic_simples(s, simples[i], gens)) return static_cast<int>(i);
  return -1;
}

Vec trace_vector(const ModuleRep& m) {
  const Field& f = *m.field;
  Vec t;
  for (auto& a : m.action) {
    Elem s = 0;
    for (int i = 0; i < m.dim; ++i) s = f.add(s, a(i, i));
    t.push_back(s);
  }
  return t;
}

std::vector<ModuleRep> simple_modules(const Algebra& a, std::uint64_t seed) {
  const auto gens = algebra_generators(a);
  MeatAxe axe(seed);
  auto factors = axe.composition_factors(regular_module(a), gens);
  std::vector<ModuleRep> simples;
  for (auto& s : factors)
    if (match_simple(s, simples, gens) < 0) simples.push_back(s);
  for (auto& s : simples) {
    const int e = hom_space(s, s, gens).rows();
    if (e > 1) throw FieldTooSmall(e, "simple module of dimension " + std::to_string(s.dim) + " is not absolutely irreducible");
  }
  std::stable_sort(simples.begin(), simples.end(), [](const ModuleRep& x, const ModuleRep& y) {
    if (x.dim != y.dim) return x.dim < y.dim;
    return trace_vector(x) < trace_vector(y);
  });
  return simples;
}

std::vector<int> composition_multiplicities(const ModuleRep& m, const std::vector<ModuleRep>& simples,
                                            const std::vector<int>& gens, std::uint64_t seed) {
  MeatAxe axe(seed);
  std::vector<int> mult(simples.size(), 0);
  for (auto& s : axe.composition_factors(m, gens)) {
    const int i = match_simple(s, simples, gens);
    if (i < 0) throw InternalError("composition factor not among the simple modules");
    ++mult[i];
  }
  return mult;
}

Mat radical_power(const Algebra& a, const Mat& j, int n) {
  const Field& f = a.field();
  const int d = a.dim();
  if (n == 0) return Mat::identity(f, d);
  Mat cur = j;
  for (int k = 1; k < n && cur.rows() > 0; ++k) {
    Subspace next(f, d);
    for (int r = 0; r < cur.rows(); ++r) {
      Vec x(cur.row(r), cur.row(r) + d);
      next.add_rows(Mat::apply_rows(a.left_mult(x), j));  // x * y, y in J
    }
    cur = next.basis();
  }
  return cur;
}

int nilpotency_index(const Algebra& a, const Mat& j) {
  if (j.rows() == 0) return 1;
  for (int n = 2; n <= a.dim() + 1; ++n)
    if (radical_power(a, j, n).rows() == 0) return n;
  throw InternalError("radical is not nilpotent");
}

Mat radical(const Algebra& a, const std::vector<ModuleRep>& simples) {
  const Field& f = a.field();
  const int d = a.dim();
  int cols = 0;
  for (auto& s : simples) cols += s.dim * s.dim;
  Mat phi(f, d, cols);
  int off = 0;
  for (auto& s : simples) {
    for (int i = 0; i < d; ++i) std::copy(s.action[i].data().begin(), s.action[i].data().end(), phi.row(i) + off);
    off += s.dim * s.dim;
  }
  Mat j = row_space(left_kernel(phi));
  int semisimple_dim = 0;
  for (auto& s : simples) semisimple_dim += s.dim * s.dim;
  if (d - j.rows() != semisimple_dim) throw InternalError("dim A/J differs from the sum of squared simple dimensions");
  nilpotency_index(a, j);  // certifies nilpotency
  return j;
}

Subspace radical_of_module(const ModuleRep& m, const Mat& j) {
  Subspace s(*m.field, m.dim);
  for (int r = 0; r < j.rows(); ++r) {
    Vec x(j.row(r), j.row(r) + j.cols());
    Mat act = m.act(x).transpose();  // rows = images of basis vectors
    s.add_rows(act);
  }
  return s;
}

}  // namespace blockscope
