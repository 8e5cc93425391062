#include "blockscope/module.hpp"

#include <cstdio>

#include "blockscope/errors.hpp"

namespace blockscope {

Mat ModuleRep::act(const Vec& x) const {
  Mat m(*field, dim, dim);
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i]) m.add_scaled(action[i], x[i]);
  return m;
}

std::string ModuleRep::fingerprint() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<std::uint64_t>(dim));
  for (auto& a : action)
    for (Elem v : a.data()) mix(v);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<int> algebra_generators(const Algebra& a) {
  const Field& f = a.field();
  const int d = a.dim();
  std::vector<int> gens;
  Subspace closure(Mat(f, 1, d, a.unit()), d);
  auto close = [&]() {
    bool grew = true;
    while (grew) {
      grew = false;
      Mat b = closure.basis();
      for (int g : gens) {
        Mat img = Mat::apply_rows(a.right(g), b);  // x -> x b_g
        for (int r = 0; r < img.rows(); ++r) grew |= closure.add(img.row_span(r));
      }
    }
  };
  for (int i = 0; i < d && closure.dim() < d; ++i) {
    Vec bi = a.basis_vector(i);
    if (closure.contains(bi)) continue;
    gens.push_back(i);
    closure.add(bi);
    close();
  }
  return gens;
}

ModuleRep regular_module(const Algebra& a) {
  std::vector<Mat> act(a.dim());
  for (int i = 0; i < a.dim(); ++i) act[i] = a.left(i);
  return ModuleRep(a.field(), a.dim(), std::move(act));
}

ModuleRep trivial_module(const HopfAlgebra& h) {
  std::vector<Mat> act(h.dim());
  for (int i = 0; i < h.dim(); ++i) act[i] = Mat(h.field(), 1, 1, {h.counit()(0, i)});
  return ModuleRep(h.field(), 1, std::move(act));
}

ModuleRep zero_module(const Algebra& a) {
  return ModuleRep(a.field(), 0, std::vector<Mat>(a.dim(), Mat(a.field(), 0, 0)));
}

void check_module(const Algebra& a, const ModuleRep& m) {
  const int d = a.dim();
  if (static_cast<int>(m.action.size()) != d) throw PreconditionError("module needs one action matrix per basis element");
  if (!m.act(a.unit()).is_identity()) throw PreconditionError("unit does not act as identity");
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vec prod(d, 0);
      for (int k = 0; k < d; ++k) prod[k] = a.c(i, j, k);
      if (!(m.act(prod) == m.action[i] * m.action[j]))
        throw PreconditionError("action fails on basis pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
}

ModuleRep direct_sum(const ModuleRep& m, const ModuleRep& n) {
  std::vector<Mat> act(m.action.size());
  for (size_t i = 0; i < act.size(); ++i) {
    Mat s(*m.field, m.dim + n.dim, m.dim + n.dim);
    s.set_block(0, 0, m.action[i]);
    s.set_block(m.dim, m.dim, n.action[i]);
    act[i] = std::move(s);
  }
  return ModuleRep(*m.field, m.dim + n.dim, std::move(act));
}

ModuleRep tensor_diagonal(const HopfAlgebra& h, const ModuleRep& m, const ModuleRep& n) {
  std::vector<Mat> act(h.dim());
  for (int i = 0; i < h.dim(); ++i) {
    Mat s(h.field(), m.dim * n.dim, m.dim * n.dim);
    for (auto& t : h.coproduct(i)) s.add_scaled(kron(m.action[t.left], n.action[t.right]), t.coeff);
    act[i] = std::move(s);
  }
  return ModuleRep(h.field(), m.dim * n.dim, std::move(act));
}

ModuleRep dual_module(const HopfAlgebra& h, const ModuleRep& m) {
  std::vector<Mat> act(h.dim());
  for (int i = 0; i < h.dim(); ++i) {
    Vec s(h.dim());
    for (int k = 0; k < h.dim(); ++k) s[k] = h.antipode()(k, i);
    act[i] = m.act(s).transpose();
  }
  return ModuleRep(h.field(), m.dim, std::move(act));
}

ModuleRep hom_module(const HopfAlgebra& h, const ModuleRep& m, const ModuleRep& n) {
  return tensor_diagonal(h, n, dual_module(h, m));
}

void check_algebra_map(const Algebra& target, const Algebra& source, const Mat& phi) {
  if (phi.rows() != target.dim() || phi.cols() != source.dim()) throw PreconditionError("algebra map has wrong shape");
  auto image = [&](const Vec& x) {
    Mat col(source.field(), 1, source.dim(), x);
    return Mat::apply_rows(phi, col).data();
  };
  if (image(source.unit()) != target.unit()) throw PreconditionError("algebra map is not unital");
  for (int i = 0; i < source.dim(); ++i)
    for (int j = 0; j < source.dim(); ++j) {
      Vec prod(source.dim());
      for (int k = 0; k < source.dim(); ++k) prod[k] = source.c(i, j, k);
      if (image(prod) != target.mul(image(source.basis_vector(i)), image(source.basis_vector(j))))
        throw PreconditionError("algebra map is not multiplicative on (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
    }
}

ModuleRep restrict_module(const Algebra& target, const Algebra& source, const Mat& phi, const ModuleRep& m) {
  check_algebra_map(target, source, phi);
  std::vector<Mat> act(source.dim());
  for (int i = 0; i < source.dim(); ++i) {
    Vec col(target.dim());
    for (int k = 0; k < target.dim(); ++k) col[k] = phi(k, i);
    act[i] = m.act(col);
  }
  return ModuleRep(*m.field, m.dim, std::move(act));
}

ModuleRep submodule(const ModuleRep& m, const Mat& basis) {
  const int r = basis.rows();
  std::vector<Mat> act(m.action.size());
  if (r == 0) {
    for (auto& a : act) a = Mat(*m.field, 0, 0);
    return ModuleRep(*m.field, 0, std::move(act));
  }
  LinearSolver solver(basis);
  for (size_t i = 0; i < act.size(); ++i) {
    Mat img = Mat::apply_rows(m.action[i], basis);
    act[i] = solver.solve_rows(img).transpose();
  }
  return ModuleRep(*m.field, r, std::move(act));
}

ModuleRep quotient_module(const ModuleRep& m, const Subspace& sub) {
  const Field& f = *m.field;
  std::vector<char> pivot(m.dim, 0);
  for (int p : sub.pivots()) pivot[p] = 1;
  std::vector<int> rest;
  for (int j = 0; j < m.dim; ++j)
    if (!pivot[j]) rest.push_back(j);
  const int q = static_cast<int>(rest.size());
  std::vector<Mat> act(m.action.size());
  std::vector<Elem> v(m.dim);
  for (size_t i = 0; i < act.size(); ++i) {
    Mat a(f, q, q);
    for (int c = 0; c < q; ++c) {
      for (int r = 0; r < m.dim; ++r) v[r] = m.action[i](r, rest[c]);
      sub.reduce(v.data());
      for (int r = 0; r < q; ++r) a(r, c) = v[rest[r]];
    }
    act[i] = std::move(a);
  }
  return ModuleRep(f, q, std::move(act));
}

Subspace spin(const ModuleRep& m, const Mat& vectors, const std::vector<int>& gens) {
  Subspace s(*m.field, m.dim);
  std::vector<std::vector<Elem>> queue;
  for (int r = 0; r < vectors.rows(); ++r)
    if (s.add(vectors.row_span(r))) queue.emplace_back(vectors.row(r), vectors.row(r) + m.dim);
  Mat col(*m.field, 1, m.dim);
  while (!queue.empty() && s.dim() < m.dim) {
    auto v = std::move(queue.back());
    queue.pop_back();
    std::copy(v.begin(), v.end(), col.row(0));
    for (int g : gens) {
      Mat w = Mat::apply_rows(m.action[g], col);
      if (s.add(w.row_span(0))) queue.emplace_back(w.row(0), w.row(0) + m.dim);
    }
  }
  return s;
}

Subspace spin(const ModuleRep& m, const Mat& vectors) {
  std::vector<int> all(m.action.size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return spin(m, vectors, all);
}

bool is_invariant(const ModuleRep& m, const Subspace& s) {
  for (auto& a : m.action)
    if (!s.contains_rows(Mat::apply_rows(a, s.basis()))) return false;
  return true;
}

namespace {

// Rows of `k` span a space of vec(X) (X is rows x cols); intersect with the
// kernel of X -> X A - B X.
Mat refine_commuting(const Mat& k, const Mat& a, const Mat& b, int rows, int cols) {
  const Field& f = k.field();
  if (k.rows() == 0) return k;
  // Equation matrix E with E vec(X) = vec(X A - B X).
  Mat e = kron(Mat::identity(f, rows), a.transpose()) - kron(b, Mat::identity(f, cols));
  if (k.rows() == k.cols() && k.is_identity()) return kernel_basis(e);
  Mat img = e * k.transpose();  // columns: images of basis vectors
  Mat c = kernel_basis(img);    // combinations with zero image
  if (c.rows() == 0) return Mat(f, 0, k.cols());
  return row_space(c * k);
}

}  // namespace

Mat hom_space(const ModuleRep& m, const ModuleRep& n, const std::vector<int>& gens) {
  const Field& f = *m.field;
  const int sz = m.dim * n.dim;
  Mat k = Mat::identity(f, sz);
  if (sz == 0) return Mat(f, 0, 0);
  for (int g : gens) {
    k = refine_commuting(k, m.action[g], n.action[g], n.dim, m.dim);
    if (k.rows() == 0) break;
  }
  return k;
}

Mat unvec(const Field& f, const Elem* data, int rows, int cols) {
  return Mat(f, rows, cols, std::vector<Elem>(data, data + static_cast<size_t>(rows) * cols));
}

std::vector<Mat> endomorphism_basis(const ModuleRep& m, const std::vector<int>& gens) {
  Mat k = hom_space(m, m, gens);
  std::vector<Mat> out;
  for (int r = 0; r < k.rows(); ++r) out.push_back(unvec(*m.field, k.row(r), m.dim, m.dim));
  return out;
}

int module_rank_of_action(const ModuleRep& m, const Vec& x) { return rank(m.act(x)); }

}  // namespace blockscope
