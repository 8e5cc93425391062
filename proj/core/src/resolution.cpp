#include "blockscope/resolution.hpp"

#include "blockscope/errors.hpp"

namespace blockscope {

namespace {

// m * x for a column-convention matrix and a coordinate vector.
void mat_vec_acc(const Field& f, const Mat& m, const Elem* x, Elem* out) {
  for (int j = 0; j < m.cols(); ++j) {
    const Elem c = x[j];
    if (!c) continue;
    const Elem* mc = f.mul_row(c);
    for (int i = 0; i < m.rows(); ++i) {
      const Elem a = m(i, j);
      if (a) out[i] = f.add(out[i], mc[a]);
    }
  }
}

Vec mat_vec(const Mat& m, const Vec& x) {
  Vec out(m.rows(), 0);
  mat_vec_acc(m.field(), m, x.data(), out.data());
  return out;
}

Vec row_of(const Mat& m, int r) { return Vec(m.row(r), m.row(r) + m.cols()); }

// Minimal set of generators of the submodule spanned by the rows of K:
// for each type s, vectors of e_s K independent modulo e_s (J K).
template <class Act, class Rad>
void cover(const ProjKit& kit, const Mat& k, int ambient, Act act, Rad rad, std::vector<int>& types, Mat& values) {
  const Field& f = *kit.field;
  Subspace jk(f, ambient);
  for (size_t g = 0; g < kit.rad.size(); ++g)
    for (int r = 0; r < k.rows(); ++r) jk.add(rad(static_cast<int>(g), row_of(k, r)));
  values = Mat(f, 0, ambient);
  for (int s = 0; s < kit.ntypes; ++s) {
    Subspace sp(f, ambient);
    for (int r = 0; r < jk.dim(); ++r) sp.add(act(s, 0, row_of(jk.basis(), r)));
    for (int r = 0; r < k.rows(); ++r) {
      Vec u = act(s, 0, row_of(k, r));
      if (sp.add(u)) {
        types.push_back(s);
        values.append_rows(Mat(f, 1, ambient, u));
      }
    }
  }
}

void set_offsets(Resolution& r, int n) {
  std::vector<int> offs;
  int o = 0;
  for (int t : r.gens[n]) {
    offs.push_back(o);
    o += r.kit->qdim[t];
  }
  r.offsets.push_back(offs);
  r.dims.push_back(o);
}

// Finishes degree n once gens/offsets/images are set: differential, solver,
// kernel, exactness check against the previous kernel.
void finish_degree(Resolution& r, int n, int prev_dim, int image_dim) {
  const ProjKit& kit = *r.kit;
  Mat d(*kit.field, r.dims[n], prev_dim);
  for (size_t k = 0; k < r.gens[n].size(); ++k) {
    const int t = r.gens[n][k];
    Vec y = row_of(r.images[n], static_cast<int>(k));
    for (int b = 0; b < kit.qdim[t]; ++b) {
      Vec img = n == 0 ? mat_vec(r.top.qrho[t][b], y) : r.act(t, b, n - 1, y);
      std::copy(img.begin(), img.end(), d.row(r.offsets[n][k] + b));
    }
  }
  r.solvers.emplace_back(d);
  if (r.solvers.back().rank() != image_dim) throw InternalError("resolution cover is not surjective");
  r.kernels.push_back(r.solvers.back().left_kernel());
  r.D.push_back(std::move(d));
}

}  // namespace

Vec Resolution::act(int s, int b, int n, const Vec& v) const {
  Vec out(dims[n], 0);
  const Field& f = *kit->field;
  for (size_t k = 0; k < gens[n].size(); ++k) {
    const int o = offsets[n][k];
    mat_vec_acc(f, kit->act[s][b][gens[n][k]], v.data() + o, out.data() + o);
  }
  return out;
}

Vec Resolution::act_rad(int g, int n, const Vec& v) const {
  Vec out(dims[n], 0);
  const Field& f = *kit->field;
  for (size_t k = 0; k < gens[n].size(); ++k) {
    const int o = offsets[n][k];
    mat_vec_acc(f, kit->rad[g][gens[n][k]], v.data() + o, out.data() + o);
  }
  return out;
}

Resolution minimal_resolution(const ProjKit& kit, const CoefModule& m, int length) {
  Resolution r;
  r.kit = &kit;
  r.top = m;
  std::vector<int> types;
  Mat values;
  cover(
      kit, Mat::identity(*kit.field, m.dim), m.dim, [&](int s, int b, const Vec& v) { return mat_vec(m.qrho[s][b], v); },
      [&](int g, const Vec& v) { return mat_vec(m.radrho[g], v); }, types, values);
  r.gens.push_back(types);
  r.images.push_back(values);
  set_offsets(r, 0);
  finish_degree(r, 0, m.dim, m.dim);
  extend(r, length);
  return r;
}

void extend(Resolution& r, int length) {
  while (r.length() < length) {
    const int n = r.length() + 1;
    std::vector<int> types;
    Mat values;
    const Mat& k = r.kernels[n - 1];
    cover(
        *r.kit, k, r.dims[n - 1], [&](int s, int b, const Vec& v) { return r.act(s, b, n - 1, v); },
        [&](int g, const Vec& v) { return r.act_rad(g, n - 1, v); }, types, values);
    r.gens.push_back(types);
    r.images.push_back(values);
    set_offsets(r, n);
    finish_degree(r, n, r.dims[n - 1], k.rows());
  }
}

ModuleRep term_module(const Resolution& r, int n) {
  const ProjKit& kit = *r.kit;
  if (!kit.algebra) throw PreconditionError("term modules need an algebra kit");
  const Algebra& a = *kit.algebra;
  ModuleRep m;
  m.field = kit.field;
  m.dim = r.dims[n];
  for (int i = 0; i < a.dim(); ++i) {
    Mat act(*kit.field, m.dim, m.dim);
    for (size_t k = 0; k < r.gens[n].size(); ++k)
      act.set_block(r.offsets[n][k], r.offsets[n][k], kit.element_action(a.basis_vector(i), r.gens[n][k]));
    m.action.push_back(std::move(act));
  }
  return m;
}

ModuleRep syzygy_module(const Resolution& r, int n) {
  if (r.kernels[n].rows() == 0) {
    ModuleRep z;
    z.field = r.kit->field;
    z.dim = 0;
    z.action.assign(r.kit->algebra ? r.kit->algebra->dim() : 0, Mat(*r.kit->field, 0, 0));
    return z;
  }
  return submodule(term_module(r, n), r.kernels[n]);
}

Cochains::Cochains(const Resolution& r, const CoefModule& x) : res_(&r), x_(&x) {
  for (int n = 0; n <= r.length(); ++n) {
    std::vector<int> offs;
    int o = 0;
    for (int t : r.gens[n]) {
      offs.push_back(o);
      o += x.eps_basis[t].rows();
    }
    offs.push_back(o);
    offs_.push_back(offs);
  }
  delta_.resize(r.length());
  have_.assign(r.length(), false);
}

int Cochains::dim(int n) const { return offs_.at(n).back(); }

const Mat& Cochains::delta(int n) const {
  if (n + 1 > res_->length()) throw PreconditionError("resolution too short for this coboundary");
  if (have_[n]) return delta_[n];
  const Field& f = *x_->field;
  const Resolution& r = *res_;
  const ProjKit& kit = *r.kit;
  Mat out(f, dim(n), dim(n + 1));
  const Mat& next = r.images[n + 1];
  for (size_t k = 0; k < r.gens[n].size(); ++k) {
    const int t = r.gens[n][k];
    const Mat& eb = x_->eps_basis[t];
    for (int e = 0; e < eb.rows(); ++e) {
      Vec xv = row_of(eb, e);
      Mat w(f, kit.qdim[t], x_->dim);
      for (int b = 0; b < kit.qdim[t]; ++b) {
        Vec img = mat_vec(x_->qrho[t][b], xv);
        std::copy(img.begin(), img.end(), w.row(b));
      }
      Elem* dst = out.row(offs_[n][k] + e);
      for (size_t l = 0; l < r.gens[n + 1].size(); ++l) {
        const int tl = r.gens[n + 1][l];
        Vec val(x_->dim, 0);
        const Elem* y = next.row(static_cast<int>(l)) + r.offsets[n][k];
        for (int b = 0; b < kit.qdim[t]; ++b)
          if (y[b]) axpy(f, val.data(), w.row(b), y[b], x_->dim);
        std::vector<Elem> c;
        if (!x_->eps_solver[tl].solve(val, c)) throw InternalError("coboundary leaves e_t X");
        std::copy(c.begin(), c.end(), dst + offs_[n + 1][l]);
      }
    }
  }
  delta_[n] = std::move(out);
  have_[n] = true;
  return delta_[n];
}

Mat Cochains::as_map(int n, const Vec& c) const {
  const Field& f = *x_->field;
  const Resolution& r = *res_;
  Mat out(f, r.dims[n], x_->dim);
  for (size_t k = 0; k < r.gens[n].size(); ++k) {
    const int t = r.gens[n][k];
    const Mat& eb = x_->eps_basis[t];
    Vec xv(x_->dim, 0);
    for (int e = 0; e < eb.rows(); ++e)
      if (c[offs_[n][k] + e]) axpy(f, xv.data(), eb.row(e), c[offs_[n][k] + e], x_->dim);
    for (int b = 0; b < r.kit->qdim[t]; ++b) {
      Vec img = mat_vec(x_->qrho[t][b], xv);
      std::copy(img.begin(), img.end(), out.row(r.offsets[n][k] + b));
    }
  }
  return out;
}

Vec Cochains::evaluate(int n, const Vec& c, const Vec& v) const {
  return Mat::apply_rows(as_map(n, c).transpose(), Mat(*x_->field, 1, res_->dims[n], v)).data();
}

Vec Cochains::from_values(int n, const Mat& values) const {
  const Resolution& r = *res_;
  Vec out(dim(n), 0);
  for (size_t k = 0; k < r.gens[n].size(); ++k) {
    std::vector<Elem> c;
    if (!x_->eps_solver[r.gens[n][k]].solve(values.row_span(static_cast<int>(k)), c))
      throw PreconditionError("generator value outside e_t X");
    std::copy(c.begin(), c.end(), out.begin() + offs_[n][k]);
  }
  return out;
}

Mat cocycle_values(const Cochains& c, int n, const Vec& cocycle) {
  const Resolution& r = c.resolution();
  const CoefModule& x = c.coef();
  Mat out(*x.field, static_cast<int>(r.gens[n].size()), x.dim);
  for (size_t k = 0; k < r.gens[n].size(); ++k) {
    const Mat& eb = x.eps_basis[r.gens[n][k]];
    for (int e = 0; e < eb.rows(); ++e) {
      const Elem a = cocycle[c.offset(n, static_cast<int>(k)) + e];
      if (a) axpy(*x.field, out.row(static_cast<int>(k)), eb.row(e), a, x.dim);
    }
  }
  return out;
}

std::vector<Elem> ExtSpace::coords(const Vec& cocycle) const {
  std::vector<Elem> x;
  if (!combined.solve(cocycle, x)) throw PreconditionError("not a cocycle");
  return std::vector<Elem>(x.begin() + boundaries.rows(), x.end());
}

bool ExtSpace::is_zero_class(const Vec& cocycle) const {
  for (Elem e : coords(cocycle))
    if (e) return false;
  return true;
}

ExtSpace ext_space(const Cochains& c, int n) {
  const Field& f = *c.coef().field;
  ExtSpace e;
  e.degree = n;
  Mat z = c.dim(n) == 0 ? Mat(f, 0, 0) : LinearSolver(c.delta(n)).left_kernel();
  e.boundaries = n == 0 || c.dim(n) == 0 ? Mat(f, 0, c.dim(n)) : row_space(c.delta(n - 1));
  Subspace s(e.boundaries, c.dim(n));
  e.reps = Mat(f, 0, c.dim(n));
  for (int r = 0; r < z.rows(); ++r)
    if (s.add(z.row_span(r))) e.reps.append_rows(z.row_vec(r));
  e.combined = LinearSolver(Mat::vstack(e.boundaries, e.reps));
  return e;
}

int ext_dim(const Cochains& c, int n) {
  if (c.dim(n) == 0) return 0;
  int d = c.dim(n) - LinearSolver(c.delta(n)).rank();
  if (n > 0 && c.dim(n - 1) > 0) d -= LinearSolver(c.delta(n - 1)).rank();
  return d;
}

Vec ResolutionTarget::preimage(int j, const Vec& v) const {
  std::vector<Elem> w;
  if (!r_.solvers.at(j).solve(v, w)) throw InternalError("lifting target is not in the image");
  return w;
}

Mat lift_chain_map(const Resolution& src, int m, const Mat& values, const LiftTarget& target, int steps) {
  const ProjKit& kit = *src.kit;
  const Field& f = *kit.field;
  if (src.length() < m + steps) throw PreconditionError("source resolution too short");
  Mat cur;
  for (size_t l = 0; l < src.gens[m].size(); ++l) {
    Vec w = target.act(src.gens[m][l], 0, 0, target.preimage(0, row_of(values, static_cast<int>(l))));
    if (l == 0) cur = Mat(f, 0, static_cast<int>(w.size()));
    cur.append_rows(Mat(f, 1, static_cast<int>(w.size()), w));
  }
  for (int j = 1; j <= steps; ++j) {
    const int deg = m + j;
    // acts[k] rows b: Q_{t_k}[b] applied to the image of generator k.
    std::vector<Mat> acts;
    for (size_t k = 0; k < src.gens[deg - 1].size(); ++k) {
      const int t = src.gens[deg - 1][k];
      Mat a(f, 0, cur.cols());
      for (int b = 0; b < kit.qdim[t]; ++b) {
        Vec img = target.act(t, b, j - 1, row_of(cur, static_cast<int>(k)));
        a.append_rows(Mat(f, 1, static_cast<int>(img.size()), img));
      }
      acts.push_back(std::move(a));
    }
    Mat next;
    for (size_t l = 0; l < src.gens[deg].size(); ++l) {
      Vec v(cur.cols(), 0);
      const Elem* y = src.images[deg].row(static_cast<int>(l));
      for (size_t k = 0; k < acts.size(); ++k) {
        const Elem* yk = y + src.offsets[deg - 1][k];
        for (int b = 0; b < acts[k].rows(); ++b)
          if (yk[b]) axpy(f, v.data(), acts[k].row(b), yk[b], cur.cols());
      }
      Vec w = target.act(src.gens[deg][l], 0, j, target.preimage(j, v));
      if (l == 0) next = Mat(f, 0, static_cast<int>(w.size()));
      next.append_rows(Mat(f, 1, static_cast<int>(w.size()), w));
    }
    cur = std::move(next);
  }
  return cur;
}

Vec yoneda(const Cochains& ce, int n, const Vec& eta, const Cochains& cz, int m, const Vec& zeta, const Cochains& out) {
  if (cz.coef().dim != ce.resolution().top.dim) throw PreconditionError("Yoneda composition mismatch");
  if (&out.resolution() != &cz.resolution()) throw PreconditionError("output cochains must live on zeta's resolution");
  const Field& f = *ce.coef().field;
  Mat zv = cocycle_values(cz, m, zeta);
  ResolutionTarget tgt(ce.resolution());
  Mat lifted = lift_chain_map(cz.resolution(), m, zv, tgt, n);
  Mat a = ce.as_map(n, eta);
  Mat values = lifted.rows() ? lifted * a : Mat(f, 0, ce.coef().dim);
  return out.from_values(m + n, values);
}

bool is_projective(const ProjKit& kit, const CoefModule& m) {
  return minimal_resolution(kit, m, 0).kernels[0].rows() == 0;
}

ModuleRep carlson_module(const Resolution& r, const Cochains& c, int n, const Vec& zeta) {
  if (n < 1) throw PreconditionError("Carlson modules need positive degree");
  if (ext_space(c, n).is_zero_class(zeta)) throw PreconditionError("zero class has no Carlson module");
  const Field& f = *r.kit->field;
  // zeta factors through Omega^n = ker D[n-1] = image of D[n].
  const Mat& omega = r.kernels[n - 1];
  Mat pre = r.solvers[n].solve_rows(omega);
  Mat vals = pre * c.as_map(n, zeta);  // omega.rows() x 1
  Mat lz = left_kernel(vals);
  Mat basis = lz * omega;
  ModuleRep om = term_module(r, n - 1);
  if (basis.rows() == 0) {
    ModuleRep z;
    z.field = &f;
    z.dim = 0;
    z.action.assign(om.action.size(), Mat(f, 0, 0));
    return z;
  }
  return submodule(om, basis);
}

}  // namespace blockscope
