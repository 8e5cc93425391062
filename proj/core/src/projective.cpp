#include "blockscope/projective.hpp"

#include "blockscope/errors.hpp"
#include "blockscope/meataxe.hpp"

namespace blockscope {

namespace {

Mat simple_matrix(const Algebra& a, const std::vector<ModuleRep>& simples) {
  int cols = 0;
  for (auto& s : simples) cols += s.dim * s.dim;
  Mat phi(a.field(), a.dim(), cols);
  int off = 0;
  for (auto& s : simples) {
    for (int i = 0; i < a.dim(); ++i) std::copy(s.action[i].data().begin(), s.action[i].data().end(), phi.row(i) + off);
    off += s.dim * s.dim;
  }
  return phi;
}

// Basis of the span of {x * b_i} (right = false: b_i * x) starting with x.
Mat ideal_basis(const Algebra& a, const Vec& x, bool left_ideal) {
  Subspace s(a.field(), a.dim());
  Mat basis(a.field(), 0, a.dim());
  auto push = [&](const Vec& v) {
    if (s.add(v)) basis.append_rows(Mat(a.field(), 1, a.dim(), v));
  };
  push(x);
  for (int i = 0; i < a.dim(); ++i) push(left_ideal ? a.mul(a.basis_vector(i), x) : a.mul(x, a.basis_vector(i)));
  return basis;
}

// Matrix (column convention) of v -> op(v) on the span of `basis`.
template <class Op>
Mat restricted(const Mat& basis, const LinearSolver& solver, Op op) {
  const Field& f = basis.field();
  const int q = basis.rows();
  Mat m(f, q, q);
  std::vector<Elem> c;
  for (int j = 0; j < q; ++j) {
    Vec v(basis.row(j), basis.row(j) + basis.cols());
    if (!solver.solve(op(v), c)) throw InternalError("action leaves the projective");
    for (int i = 0; i < q; ++i) m(i, j) = c[i];
  }
  return m;
}

Mat radical_generators(const Algebra& a, const Mat& radical) {
  Subspace s(radical_power(a, radical, 2), a.dim());
  Mat gens(a.field(), 0, a.dim());
  for (int r = 0; r < radical.rows(); ++r)
    if (s.add(radical.row_span(r))) gens.append_rows(radical.row_vec(r));
  return gens;
}

}  // namespace

Vec primitive_idempotent(const Algebra& a, const std::vector<ModuleRep>& simples, int s) {
  const Field& f = a.field();
  Mat phi = simple_matrix(a, simples);
  std::vector<Elem> target(phi.cols(), 0);
  int off = 0;
  for (int t = 0; t < s; ++t) off += simples[t].dim * simples[t].dim;
  target[off] = 1;  // E_11
  LinearSolver solver(phi);
  std::vector<Elem> x;
  if (!solver.solve(target, x)) throw InternalError("no lift of a matrix unit");
  Vec e = x;
  for (int it = 0; it < 64; ++it) {
    Vec e2 = a.mul(e, e);
    if (e2 == e) return e;
    Vec e3 = a.mul(e2, e);
    Vec next(a.dim());
    for (int i = 0; i < a.dim(); ++i) next[i] = f.sub(f.mul(f.from_int(3), e2[i]), f.mul(f.from_int(2), e3[i]));
    e = next;
  }
  throw InternalError("idempotent lifting did not converge");
}

int trivial_simple_index(const HopfAlgebra& h, const std::vector<ModuleRep>& simples) {
  for (size_t i = 0; i < simples.size(); ++i) {
    if (simples[i].dim != 1) continue;
    bool ok = true;
    for (int b = 0; b < h.dim() && ok; ++b) ok = simples[i].action[b](0, 0) == h.counit()(0, b);
    if (ok) return static_cast<int>(i);
  }
  throw InternalError("trivial module missing from the simple modules");
}

Mat ProjKit::element_action(const Vec& x, int dst) const {
  if (!algebra) throw PreconditionError("element actions need an algebra kit");
  return restricted(qbasis[dst], qsolver[dst], [&](const Vec& v) { return algebra->mul(x, v); });
}

int ProjKit::total_qdim() const {
  int s = 0;
  for (int q : qdim) s += q;
  return s;
}

ProjKit make_kit(const Algebra& a, const std::vector<ModuleRep>& simples, const Mat& radical, int trivial_simple) {
  ProjKit kit;
  kit.field = &a.field();
  kit.algebra = &a;
  kit.ntypes = static_cast<int>(simples.size());
  kit.trivial_type = trivial_simple;
  for (int s = 0; s < kit.ntypes; ++s) {
    Vec e = primitive_idempotent(a, simples, s);
    kit.qbasis.push_back(ideal_basis(a, e, true));
    kit.qsolver.emplace_back(kit.qbasis.back());
    kit.qdim.push_back(kit.qbasis.back().rows());
  }
  int total = 0;
  for (int s = 0; s < kit.ntypes; ++s) total += simples[s].dim * kit.qdim[s];
  if (total != a.dim()) throw InternalError("projective covers do not add up to the regular module");
  kit.act.assign(kit.ntypes, {});
  for (int src = 0; src < kit.ntypes; ++src) {
    kit.act[src].resize(kit.qdim[src]);
    for (int b = 0; b < kit.qdim[src]; ++b) {
      Vec x(kit.qbasis[src].row(b), kit.qbasis[src].row(b) + a.dim());
      for (int dst = 0; dst < kit.ntypes; ++dst) kit.act[src][b].push_back(kit.element_action(x, dst));
    }
  }
  kit.radical_gens = radical_generators(a, radical);
  for (int g = 0; g < kit.radical_gens.rows(); ++g) {
    Vec x(kit.radical_gens.row(g), kit.radical_gens.row(g) + a.dim());
    std::vector<Mat> per;
    for (int dst = 0; dst < kit.ntypes; ++dst) per.push_back(kit.element_action(x, dst));
    kit.rad.push_back(std::move(per));
  }
  return kit;
}

EnvelopeKit make_envelope_kit(const Algebra& a, const std::vector<ModuleRep>& simples, const Mat& radical) {
  EnvelopeKit env;
  const Field& f = a.field();
  const int n = static_cast<int>(simples.size());
  env.nsimples = n;
  std::vector<LinearSolver> lsolve, rsolve;
  for (int s = 0; s < n; ++s) {
    Vec e = primitive_idempotent(a, simples, s);
    env.left_basis.push_back(ideal_basis(a, e, true));
    env.right_basis.push_back(ideal_basis(a, e, false));
    lsolve.emplace_back(env.left_basis.back());
    rsolve.emplace_back(env.right_basis.back());
  }
  // Left actions on A e_t and right actions on e_t A of arbitrary elements.
  auto lact = [&](const Vec& x, int t) {
    return restricted(env.left_basis[t], lsolve[t], [&](const Vec& v) { return a.mul(x, v); });
  };
  auto ract = [&](const Vec& y, int t) {
    return restricted(env.right_basis[t], rsolve[t], [&](const Vec& v) { return a.mul(v, y); });
  };
  ProjKit& kit = env.kit;
  kit.field = &f;
  kit.ntypes = n * n;
  for (int s1 = 0; s1 < n; ++s1)
    for (int s2 = 0; s2 < n; ++s2) kit.qdim.push_back(env.left_basis[s1].rows() * env.right_basis[s2].rows());
  // Cache per-element restricted actions.
  std::vector<std::vector<std::vector<Mat>>> lcache(n), rcache(n);  // [s][b][t]
  for (int s = 0; s < n; ++s) {
    for (int b = 0; b < env.left_basis[s].rows(); ++b) {
      Vec x(env.left_basis[s].row(b), env.left_basis[s].row(b) + a.dim());
      std::vector<Mat> per;
      for (int t = 0; t < n; ++t) per.push_back(lact(x, t));
      lcache[s].push_back(std::move(per));
    }
    for (int b = 0; b < env.right_basis[s].rows(); ++b) {
      Vec y(env.right_basis[s].row(b), env.right_basis[s].row(b) + a.dim());
      std::vector<Mat> per;
      for (int t = 0; t < n; ++t) per.push_back(ract(y, t));
      rcache[s].push_back(std::move(per));
    }
  }
  kit.act.assign(kit.ntypes, {});
  for (int s1 = 0; s1 < n; ++s1)
    for (int s2 = 0; s2 < n; ++s2) {
      const int src = s1 * n + s2;
      const int q2 = env.right_basis[s2].rows();
      kit.act[src].resize(kit.qdim[src]);
      for (int b = 0; b < kit.qdim[src]; ++b)
        for (int t1 = 0; t1 < n; ++t1)
          for (int t2 = 0; t2 < n; ++t2) kit.act[src][b].push_back(kron(lcache[s1][b / q2][t1], rcache[s2][b % q2][t2]));
    }
  Mat gens = radical_generators(a, radical);
  for (int side = 0; side < 2; ++side)
    for (int g = 0; g < gens.rows(); ++g) {
      Vec x(gens.row(g), gens.row(g) + a.dim());
      std::vector<Mat> per;
      for (int t1 = 0; t1 < n; ++t1)
        for (int t2 = 0; t2 < n; ++t2) {
          if (side == 0)
            per.push_back(kron(lact(x, t1), Mat::identity(f, env.right_basis[t2].rows())));
          else
            per.push_back(kron(Mat::identity(f, env.left_basis[t1].rows()), ract(x, t2)));
        }
      kit.rad.push_back(std::move(per));
    }
  kit.radical_gens = gens;
  return env;
}

void CoefModule::finish() {
  eps_basis.clear();
  eps_solver.clear();
  for (auto& q : qrho) {
    Mat img = row_space(q[0].transpose());  // image of e_t
    eps_basis.push_back(img);
    eps_solver.emplace_back(img);
  }
}

CoefModule coef_module(const ProjKit& kit, const ModuleRep& m) {
  if (!kit.algebra) throw PreconditionError("coef_module needs an algebra kit");
  CoefModule c;
  c.field = m.field;
  c.dim = m.dim;
  const int d = kit.algebra->dim();
  for (int t = 0; t < kit.ntypes; ++t) {
    std::vector<Mat> per;
    for (int b = 0; b < kit.qdim[t]; ++b) per.push_back(m.act(Vec(kit.qbasis[t].row(b), kit.qbasis[t].row(b) + d)));
    c.qrho.push_back(std::move(per));
  }
  for (int g = 0; g < kit.radical_gens.rows(); ++g)
    c.radrho.push_back(m.act(Vec(kit.radical_gens.row(g), kit.radical_gens.row(g) + d)));
  c.finish();
  return c;
}

CoefModule coef_bimodule(const EnvelopeKit& env, const std::vector<Mat>& left, const std::vector<Mat>& right) {
  const int n = env.nsimples;
  const Field& f = *env.kit.field;
  CoefModule c;
  c.field = &f;
  c.dim = left.empty() ? 0 : left[0].rows();
  auto combo = [&](const std::vector<Mat>& acts, const Elem* coeffs, int len) {
    Mat m(f, c.dim, c.dim);
    for (int i = 0; i < len; ++i)
      if (coeffs[i]) m.add_scaled(acts[i], coeffs[i]);
    return m;
  };
  const int d = static_cast<int>(left.size());
  std::vector<std::vector<Mat>> lrho(n), rrho(n);
  for (int s = 0; s < n; ++s) {
    for (int b = 0; b < env.left_basis[s].rows(); ++b) lrho[s].push_back(combo(left, env.left_basis[s].row(b), d));
    for (int b = 0; b < env.right_basis[s].rows(); ++b) rrho[s].push_back(combo(right, env.right_basis[s].row(b), d));
  }
  for (int s1 = 0; s1 < n; ++s1)
    for (int s2 = 0; s2 < n; ++s2) {
      std::vector<Mat> per;
      const int q2 = env.right_basis[s2].rows();
      for (int b = 0; b < env.kit.qdim[s1 * n + s2]; ++b) per.push_back(lrho[s1][b / q2] * rrho[s2][b % q2]);
      c.qrho.push_back(std::move(per));
    }
  const Mat& gens = env.kit.radical_gens;
  for (int side = 0; side < 2; ++side)
    for (int g = 0; g < gens.rows(); ++g) c.radrho.push_back(combo(side == 0 ? left : right, gens.row(g), d));
  c.finish();
  return c;
}

}  // namespace blockscope
