#include "blockscope/adjoint.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "blockscope/errors.hpp"
#include "blockscope/poly1.hpp"

namespace blockscope {

namespace {

Vec apply_to(const Mat& op, const Vec& v) {
  return Mat::apply_rows(op, Mat(op.field(), 1, static_cast<int>(v.size()), v)).data();
}

Vec combine(const Mat& rows, const Elem* coords) {
  const Field& f = rows.field();
  Vec v(rows.cols(), 0);
  for (int r = 0; r < rows.rows(); ++r)
    if (coords[r]) axpy(f, v.data(), rows.row(r), coords[r], rows.cols());
  return v;
}

/// Action of b_i on A: a -> sum b_l a s(b_r).
std::vector<Mat> full_adjoint(const HopfAlgebra& h) {
  const Field& f = h.field();
  const int d = h.dim();
  std::vector<Mat> rs(d);
  for (int r = 0; r < d; ++r) {
    Vec s(d);
    for (int k = 0; k < d; ++k) s[k] = h.antipode()(k, r);
    rs[r] = h.right_mult(s);
  }
  std::vector<Mat> act(d, Mat(f, d, d));
  for (int i = 0; i < d; ++i)
    for (auto& t : h.coproduct(i)) act[i].add_scaled(h.left(t.left) * rs[t.right], t.coeff);
  return act;
}

}  // namespace

AdjointModule adjoint_module(const HopfAlgebra& h, const Mat& basis, const Vec& unit, int block) {
  const Field& f = h.field();
  std::vector<Mat> full = full_adjoint(h);
  AdjointModule am;
  am.block = block;
  am.basis = basis;
  am.module = submodule(ModuleRep(f, h.dim(), full), basis);
  LinearSolver solver(basis);
  if (!solver.solve(unit, am.idempotent)) throw PreconditionError("unit is not in the span of the basis");
  // G-algebra property: x.(ab) = sum (x1.a)(x2.b).
  for (int g : algebra_generators(h))
    for (int i = 0; i < basis.rows(); ++i) {
      Vec a(basis.row(i), basis.row(i) + h.dim());
      for (int j = 0; j < basis.rows(); ++j) {
        Vec b(basis.row(j), basis.row(j) + h.dim());
        Vec lhs = apply_to(full[g], h.mul(a, b));
        Vec rhs(h.dim(), 0);
        for (auto& t : h.coproduct(g)) {
          Vec p = h.mul(apply_to(full[t.left], a), apply_to(full[t.right], b));
          axpy(f, rhs.data(), p.data(), t.coeff, h.dim());
        }
        if (lhs != rhs) throw InternalError("multiplication is not a module map for the adjoint action");
      }
    }
  return am;
}

AdjointModule adjoint_module(const Analysis& an, int block) {
  if (block < 0) return adjoint_module(an.h, Mat::identity(an.field(), an.h.dim()), an.h.unit(), -1);
  const Block& b = an.blocks.blocks.at(block);
  return adjoint_module(an.h, b.basis, b.idempotent, block);
}

Mat fixed_points(const HopfAlgebra& h, const ModuleRep& m) {
  const Field& f = h.field();
  Mat stacked(f, 0, m.dim);
  for (int g : algebra_generators(h)) {
    Mat a = m.action[g];
    Elem eps = h.counit()(0, g);
    for (int k = 0; k < m.dim; ++k) a(k, k) = f.sub(a(k, k), eps);
    stacked.append_rows(a);
  }
  return kernel_basis(stacked);
}

std::vector<Summand> indecomposable_summands(const Algebra& a, const ModuleRep& m, std::uint64_t seed, int trials) {
  const Field& f = *m.field;
  const std::vector<int> gens = algebra_generators(a);
  std::mt19937_64 rng(seed);
  std::vector<Summand> out, work{{Mat::identity(f, m.dim), m}};
  while (!work.empty()) {
    Summand cur = std::move(work.back());
    work.pop_back();
    if (cur.module.dim <= 1) {
      if (cur.module.dim == 1) out.push_back(std::move(cur));
      continue;
    }
    std::vector<Mat> end = endomorphism_basis(cur.module, gens);
    bool split = false;
    for (int t = 0; t < trials && !split && end.size() > 1; ++t) {
      Mat phi(f, cur.module.dim, cur.module.dim);
      for (auto& e : end) phi.add_scaled(e, static_cast<Elem>(rng() % f.size()));
      auto fs = upoly::factor(f, upoly::minimal_polynomial(phi));
      if (fs.size() < 2) continue;
      upoly::Poly first{1}, others{1};
      for (size_t k = 0; k < fs.size(); ++k)
        for (int r = 0; r < fs[k].multiplicity; ++r) {
          if (k == 0) first = upoly::mul(f, first, fs[k].poly);
          else others = upoly::mul(f, others, fs[k].poly);
        }
      auto g = upoly::xgcd(f, others, first);
      Mat p = upoly::eval_matrix(upoly::mul(f, g.s, others), phi);  // projector onto the first factor
      Mat q = Mat::identity(f, cur.module.dim) - p;
      for (const Mat* proj : {&p, &q}) {
        Mat rows = row_space(proj->transpose());
        Summand s;
        s.module = submodule(cur.module, rows);
        s.basis = rows * cur.basis;
        work.push_back(std::move(s));
      }
      split = true;
    }
    if (!split) out.push_back(std::move(cur));
  }
  std::sort(out.begin(), out.end(), [](const Summand& x, const Summand& y) {
    if (x.module.dim != y.module.dim) return x.module.dim > y.module.dim;
    return x.basis.data() < y.basis.data();
  });
  return out;
}

EnvelopingSetup enveloping_setup(const Analysis& an, bool check_projective) {
  const HopfAlgebra& h = an.h;
  const Field& f = h.field();
  const int d = h.dim();
  EnvelopingSetup s;
  s.dim = d;
  s.delta = Mat(f, d * d, d);
  for (int i = 0; i < d; ++i)
    for (auto& t : h.coproduct(i))
      for (int k = 0; k < d; ++k)
        s.delta(t.left * d + k, i) = f.add(s.delta(t.left * d + k, i), f.mul(t.coeff, h.antipode()(k, t.right)));
  s.injective = rank(s.delta) == d;

  auto column = [&](const Vec& x) {
    Vec v(static_cast<size_t>(d) * d, 0);
    for (int i = 0; i < d; ++i)
      if (x[i])
        for (int r = 0; r < d * d; ++r) v[r] = f.add(v[r], f.mul(x[i], s.delta(r, i)));
    return v;
  };
  // (a (x) b)(a' (x) b') = a a' (x) b' b
  auto product = [&](const Vec& u, const Vec& v) {
    Vec w(static_cast<size_t>(d) * d, 0);
    for (int l = 0; l < d; ++l)
      for (int m = 0; m < d; ++m) {
        Elem cu = u[l * d + m];
        if (!cu) continue;
        for (int l2 = 0; l2 < d; ++l2)
          for (int m2 = 0; m2 < d; ++m2) {
            Elem cv = v[l2 * d + m2];
            if (!cv) continue;
            Elem c = f.mul(cu, cv);
            for (int p = 0; p < d; ++p) {
              Elem x = h.c(l, l2, p);
              if (!x) continue;
              Elem cx = f.mul(c, x);
              for (int q = 0; q < d; ++q)
                if (Elem y = h.c(m2, m, q)) w[p * d + q] = f.add(w[p * d + q], f.mul(cx, y));
            }
          }
      }
    return w;
  };
  Vec one(static_cast<size_t>(d) * d, 0);
  for (int l = 0; l < d; ++l)
    for (int m = 0; m < d; ++m) one[l * d + m] = f.mul(h.unit()[l], h.unit()[m]);
  s.algebra_map = column(h.unit()) == one;
  for (int g : algebra_generators(h))
    for (int j = 0; j < d && s.algebra_map; ++j)
      s.algebra_map = column(h.mul(h.basis_vector(g), h.basis_vector(j))) ==
                      product(column(h.basis_vector(g)), column(h.basis_vector(j)));

  if (check_projective) {
    // A (x) A^op restricted along delta: x.(a (x) b) = sum x1 a (x) b s(x2).
    std::vector<Mat> act(d, Mat(f, d * d, d * d));
    for (int i = 0; i < d; ++i)
      for (auto& t : h.coproduct(i)) {
        Vec sr(d);
        for (int k = 0; k < d; ++k) sr[k] = h.antipode()(k, t.right);
        act[i].add_scaled(kron(h.left(t.left), h.right_mult(sr)), t.coeff);
      }
    ModuleRep env(f, d * d, std::move(act));
    ProjKit kit = make_kit(h, an.simples, an.radical);
    s.projective = is_projective(kit, coef_module(kit, env));
    s.projectivity_checked = true;
  }
  return s;
}

CoefModule bimodule_coefficients(const EnvelopeKit& env, const Algebra& a) {
  std::vector<Mat> left, right;
  for (int i = 0; i < a.dim(); ++i) {
    left.push_back(a.left(i));
    right.push_back(a.right(i));
  }
  return coef_bimodule(env, left, right);
}

std::vector<int> hochschild_dims(const Algebra& a, const std::vector<ModuleRep>& simples, const Mat& radical,
                                 int cap) {
  EnvelopeKit env = make_envelope_kit(a, simples, radical);
  CoefModule x = bimodule_coefficients(env, a);
  Resolution r = minimal_resolution(env.kit, x, cap + 1);
  Cochains c(r, x);
  std::vector<int> dims;
  for (int n = 0; n <= cap; ++n) dims.push_back(ext_dim(c, n));
  return dims;
}

std::vector<int> hochschild_dims(const Analysis& an, int cap) {
  return hochschild_dims(an.h, an.simples, an.radical, cap);
}

std::vector<int> hochschild_block_dims(const Analysis& an, int block, int cap) {
  const Algebra& ba = an.block_algebras.at(block);
  const Mat& basis = an.blocks.blocks.at(block).basis;
  std::vector<ModuleRep> simples;
  for (int s : an.simples_in_block(block)) {
    std::vector<Mat> act;
    for (int i = 0; i < basis.rows(); ++i) act.push_back(an.simples[s].act(Vec(basis.row(i), basis.row(i) + basis.cols())));
    simples.emplace_back(an.field(), an.simples[s].dim, std::move(act));
  }
  return hochschild_dims(ba, simples, radical(ba, simples), cap);
}

std::vector<int> group_cohomology_dims(const CohomologyEngine& e, const ModuleRep& m) {
  CoefModule x = e.coef(m);
  Cochains c(e.resolution(), x);
  std::vector<int> dims;
  for (int n = 0; n <= e.cap(); ++n) dims.push_back(ext_dim(c, n));
  return dims;
}

GrowthFit growth_degree(const std::vector<int>& dims, double tolerance) {
  const int len = static_cast<int>(dims.size());
  std::vector<double> s(len + 1, 0);
  for (int n = 1; n <= len; ++n) s[n] = s[n - 1] + dims[n - 1];
  int start = std::max(1, std::min((len + 1) / 2, len - 1));
  while (start < len && s[start] == 0) ++start;
  GrowthFit fit;
  if (start >= len) return fit;
  double mx = 0, my = 0;
  const int npts = len - start + 1;
  for (int n = start; n <= len; ++n) {
    mx += std::log(n);
    my += std::log(s[n]);
  }
  mx /= npts;
  my /= npts;
  double sxy = 0, sxx = 0;
  for (int n = start; n <= len; ++n) {
    const double dx = std::log(n) - mx;
    sxy += dx * (std::log(s[n]) - my);
    sxx += dx * dx;
  }
  fit.slope = sxx > 0 ? sxy / sxx : 0;
  fit.degree = static_cast<int>(std::lround(fit.slope));
  fit.ambiguous = std::fabs(fit.slope - fit.degree) > tolerance;
  return fit;
}

int nilpotency_of_span(const Algebra& a, const Mat& rows) {
  if (rows.rows() == 0) return 1;
  for (int n = 2; n <= a.dim() + 1; ++n)
    if (radical_power(a, rows, n).rows() == 0) return n;
  return 0;
}

class AlgebraCohomology::Target : public LiftTarget {
 public:
  Target(const HopfAlgebra& h, const Resolution& r, const ModuleRep& y) : h_(h), r_(r), y_(y) {}

  Vec act(int s, int b, int j, const Vec& v) const override {
    auto key = std::make_tuple(s, b, j);
    auto it = act_.find(key);
    if (it == act_.end()) {
      const Mat& q = r_.kit->qbasis[s];
      it = act_.emplace(key, tensor(j).act(Vec(q.row(b), q.row(b) + q.cols()))).first;
    }
    return apply_to(it->second, v);
  }

  Vec preimage(int j, const Vec& v) const override {
    auto it = solvers_.find(j);
    if (it == solvers_.end())
      it = solvers_.emplace(j, LinearSolver(kron(r_.D[j], Mat::identity(*y_.field, y_.dim)))).first;
    Vec w;
    if (!it->second.solve(v, w)) throw InternalError("value outside the image of P (x) Y");
    return w;
  }

 private:
  const ModuleRep& tensor(int j) const {
    auto it = tensors_.find(j);
    if (it == tensors_.end()) it = tensors_.emplace(j, tensor_diagonal(h_, term_module(r_, j), y_)).first;
    return it->second;
  }

  const HopfAlgebra& h_;
  const Resolution& r_;
  const ModuleRep& y_;
  mutable std::map<int, ModuleRep> tensors_;
  mutable std::map<std::tuple<int, int, int>, Mat> act_;
  mutable std::map<int, LinearSolver> solvers_;
};

AlgebraCohomology::AlgebraCohomology(const CohomologyEngine& e, const ModuleRep& y, const Algebra& mult)
    : e_(e), y_(y), mult_(mult), coef_(e.coef(y)) {
  if (mult.dim() != y.dim) throw PreconditionError("algebra and module dimensions differ");
  cochains_ = std::make_unique<Cochains>(e.resolution(), coef_);
  target_ = std::make_unique<Target>(e.hopf(), e.resolution(), y_);
}

AlgebraCohomology::~AlgebraCohomology() = default;

const ExtSpace& AlgebraCohomology::ext(int n) const {
  auto it = ext_.find(n);
  if (it == ext_.end()) it = ext_.emplace(n, ext_space(*cochains_, n)).first;
  return it->second;
}

Vec AlgebraCohomology::product(int a, const Vec& z1, int b, const Vec& z2) const {
  if (a + b > e_.cap()) throw PreconditionError("product degree exceeds the cap");
  const Field& f = e_.field();
  const int dy = mult_.dim();
  Mat lifted = lift_chain_map(e_.resolution(), b, cocycle_values(*cochains_, b, z2), *target_, a);
  Mat z1map = cochains_->as_map(a, z1);  // rows: images of P_a basis vectors
  Mat vals(f, lifted.rows(), dy);
  for (int g = 0; g < lifted.rows(); ++g) {
    Vec acc(dy, 0);
    for (int p = 0; p < z1map.rows(); ++p) {
      Vec right(lifted.row(g) + static_cast<size_t>(p) * dy, lifted.row(g) + static_cast<size_t>(p + 1) * dy);
      if (std::all_of(right.begin(), right.end(), [](Elem x) { return x == 0; })) continue;
      Vec prod = mult_.mul(Vec(z1map.row(p), z1map.row(p) + dy), right);
      axpy(f, acc.data(), prod.data(), 1, dy);
    }
    std::copy(acc.begin(), acc.end(), vals.row(g));
  }
  return cochains_->from_values(a + b, vals);
}

namespace {

std::string block_name(int b) { return b < 0 ? std::string("algebra") : "block" + std::to_string(b); }

Mat center_in_block(const Analysis& an, int b) {
  return b < 0 ? center(an.h) : center(an.block_algebras.at(b));
}

}  // namespace

Report verify_center(const Analysis& an) {
  Report rep;
  rep.name = "center";
  for (int b = -1; b < static_cast<int>(an.blocks.blocks.size()); ++b) {
    AdjointModule am = adjoint_module(an, b);
    Mat fp = fixed_points(an.h, am.module);
    Mat z = center_in_block(an, b);
    const int n = am.module.dim;
    rep.data["fixed_dims"][block_name(b)] = fp.rows();
    rep.require(block_name(b) + " fixed points = center", Subspace(fp, n) == Subspace(z, n));
  }
  return rep;
}

Report verify_theorem_same(const CohomologyEngine& e, int b) {
  const Analysis& an = e.analysis();
  const HopfAlgebra& h = an.h;
  const Field& f = e.field();
  const Algebra& ba = an.block_algebras.at(b);
  Report rep;
  rep.name = "same/" + block_name(b);
  AdjointModule am = adjoint_module(an, b);
  const int n = am.module.dim;
  GradedIdeal blk = e.block_ideal(b);
  GradedIdeal adj = e.annihilator(am.module);
  rep.data["variety_dim"] = e.variety(blk).dim;
  rep.require("V(B adjoint) = V(block)", radical_equal(e.ring(), adj.gens, blk.gens));

  // Central character: how Z(B) acts on a simple of the block.
  const ModuleRep& s0 = an.simples[an.simples_in_block(b).at(0)];
  auto chi = [&](const Vec& v) { return s0.act(combine(am.basis, v.data()))(0, 0); };
  Subspace zb(fixed_points(h, am.module), n);

  auto summands = indecomposable_summands(h, am.module, 0xB10C);
  std::vector<int> sdims;
  int total = 0;
  for (auto& s : summands) {
    sdims.push_back(s.module.dim);
    total += s.module.dim;
  }
  rep.data["summand_dims"] = sdims;
  rep.require("summands reassemble B", total == n && rank(Mat([&] {
                                                      Mat all(f, 0, n);
                                                      for (auto& s : summands) all.append_rows(s.basis);
                                                      return all;
                                                    }())) == n);

  const Summand* chosen = nullptr;
  Vec unit_elem;  // e + z in block coordinates
  for (auto& s : summands) {
    Subspace fixed = intersect(Subspace(s.basis, n), zb);
    for (int r = 0; r < fixed.dim() && !chosen; ++r) {
      Vec v(fixed.basis().row(r), fixed.basis().row(r) + n);
      Elem c = chi(v);
      if (!c) continue;
      scale_row(f, v.data(), f.inv(c), n);
      chosen = &s;
      unit_elem = v;
    }
    if (chosen) break;
  }
  if (!rep.require("some summand contains e + z", chosen != nullptr)) return rep;

  Vec z = unit_elem;
  for (int k = 0; k < n; ++k) z[k] = f.sub(z[k], am.idempotent[k]);
  bool z_nonzero = std::any_of(z.begin(), z.end(), [](Elem x) { return x != 0; });
  Vec zp = z;
  for (int k = 0; k < n && std::any_of(zp.begin(), zp.end(), [](Elem x) { return x != 0; }); ++k) zp = ba.mul(zp, z);
  rep.require("z is nilpotent", std::all_of(zp.begin(), zp.end(), [](Elem x) { return x == 0; }));
  rep.data["z_nonzero"] = z_nonzero;
  rep.data["chosen_summand_dim"] = chosen->module.dim;

  GradedIdeal mi = e.annihilator(chosen->module);
  rep.require("V(M_i) = V(block)", radical_equal(e.ring(), mi.gens, blk.gens));

  // f(m (x) x) = m x and h(x) = (e + z) (x) sum (-z)^i x compose to the identity.
  Vec geo = am.idempotent, pw = am.idempotent, negz = z;
  for (auto& x : negz) x = f.neg(x);
  for (int k = 0; k < n; ++k) {
    pw = ba.mul(pw, negz);
    axpy(f, geo.data(), pw.data(), 1, n);
  }
  Vec u;
  LinearSolver(chosen->basis).solve(unit_elem, u);
  const int md = chosen->module.dim;
  const std::vector<int> gens = algebra_generators(h);
  bool identity = true, fmap = true, hmap = true;
  for (int si : an.simples_in_block(b)) {
    const ModuleRep& nm = an.simples[si];
    const int dn = nm.dim;
    Mat fm(f, dn, md * dn);
    for (int a = 0; a < md; ++a) {
      Mat rho = nm.act(combine(am.basis, chosen->basis.row(a)));
      for (int r = 0; r < dn; ++r)
        for (int c = 0; c < dn; ++c) fm(r, a * dn + c) = rho(r, c);
    }
    Mat ucol(f, md, 1, u);
    Mat hm = kron(ucol, nm.act(combine(am.basis, geo.data())));
    identity = identity && (fm * hm).is_identity();
    ModuleRep t = tensor_diagonal(h, chosen->module, nm);
    for (int g : gens) {
      fmap = fmap && nm.action[g] * fm == fm * t.action[g];
      hmap = hmap && t.action[g] * hm == hm * nm.action[g];
    }
  }
  rep.require("f o h = id", identity);
  rep.require("f is a module map", fmap);
  rep.require("h is a module map", hmap);

  SupportVariety v = e.variety(mi);
  rep.data["connectivity"] = to_string(v.connectivity.verdict);
  if (v.connectivity.verdict == Connectivity::unsupported)
    rep.data["notes"].push_back("connectivity not decided: " + v.connectivity.reason);
  else
    rep.require("Proj V(M_i) connected", v.connectivity.verdict == Connectivity::connected);
  return rep;
}

Report verify_relative(const CohomologyEngine& e) {
  const Analysis& an = e.analysis();
  Report rep;
  rep.name = "relative";
  for (int b = -1; b < static_cast<int>(an.blocks.blocks.size()); ++b) {
    AdjointModule am = adjoint_module(an, b);
    GradedIdeal full = e.annihilator(am.module);
    CoefModule x = e.coef(am.module);
    GradedIdeal rel = e.kernel_ideal(x, am.idempotent);
    rep.require(block_name(b) + ": I(A) = I(k, A)", e.equal(full, rel));
  }
  return rep;
}

Report verify_eckmann_shapiro(const CohomologyEngine& e) {
  const Analysis& an = e.analysis();
  const int cap = e.cap();
  Report rep;
  rep.name = "eckmann-shapiro";
  std::vector<int> hh = hochschild_dims(an, cap);
  std::vector<int> hg = group_cohomology_dims(e, adjoint_module(an, -1).module);
  rep.data["hochschild"]["algebra"] = hh;
  rep.data["group"]["algebra"] = hg;
  rep.require("algebra: H(G, ad A) = HH(A)", hh == hg);
  rep.require("algebra: HH^0 = center", hh[0] == center(an.h).rows());
  std::vector<int> sum(cap + 1, 0);
  for (int b = 0; b < static_cast<int>(an.blocks.blocks.size()); ++b) {
    std::vector<int> hb = hochschild_block_dims(an, b, cap);
    std::vector<int> gb = group_cohomology_dims(e, adjoint_module(an, b).module);
    rep.data["hochschild"][block_name(b)] = hb;
    rep.data["group"][block_name(b)] = gb;
    rep.require(block_name(b) + ": H(G, ad B) = HH(B)", hb == gb);
    rep.require(block_name(b) + ": HH^0 = center", hb[0] == center(an.block_algebras[b]).rows());
    for (int k = 0; k <= cap; ++k) sum[k] += hb[k];
  }
  rep.require("HH(A) = sum of HH(B)", sum == hh);
  return rep;
}

Report verify_krull(const CohomologyEngine& e, int b) {
  const Analysis& an = e.analysis();
  Report rep;
  rep.name = "krull/" + block_name(b);
  std::vector<int> hh = hochschild_block_dims(an, b, e.cap());
  GrowthFit fit = growth_degree(hh);
  const int vdim = e.variety(e.block_ideal(b)).dim;
  rep.data["hochschild"] = hh;
  rep.data["slope"] = std::round(fit.slope * 1000) / 1000;
  rep.data["growth_degree"] = fit.degree;
  rep.data["variety_dim"] = vdim;
  if (fit.ambiguous) {
    rep.inconclusive("growth fit is ambiguous at this cap");
    return rep;
  }
  rep.require("growth degree = dim V(block)", fit.degree == vdim);
  return rep;
}

Report verify_nilpotents(const CohomologyEngine& e) {
  const Analysis& an = e.analysis();
  const HopfAlgebra& h = an.h;
  const Field& f = e.field();
  const int cap = e.cap();
  const int b0 = an.blocks.principal_index;
  Report rep;
  rep.name = "nilpotents";
  const int nsimples = static_cast<int>(an.simples_in_block(b0).size());
  const int vdim = e.variety(e.relation_ideal()).dim;
  int which = 0;
  if (nsimples == 1)
    which = 1;
  else if (vdim <= 1)
    which = 2;
  rep.data["case"] = which;
  rep.data["variety_dim"] = vdim;
  if (which == 0) {
    rep.unsupported("principal block is not local and dim V_G > 1");
    return rep;
  }

  const Algebra& ba = an.block_algebras.at(b0);
  AdjointModule am = adjoint_module(an, b0);
  const int n = am.module.dim;
  Mat eps(f, 1, n);
  for (int i = 0; i < n; ++i) eps(0, i) = h.counit_of(combine(am.basis, Mat::identity(f, n).row(i)));
  Mat ibasis = kernel_basis(eps);
  rep.require("I is a submodule", is_invariant(am.module, Subspace(ibasis, n)));
  rep.require("e spans a trivial summand", Subspace(fixed_points(h, am.module), n).contains(am.idempotent) &&
                                               h.counit_of(combine(am.basis, am.idempotent.data())) == 1);

  AlgebraCohomology hy(e, am.module, ba);
  ModuleRep im = submodule(am.module, ibasis);
  CoefModule ci = e.coef(im);
  Cochains chi(e.resolution(), ci);
  bool split = true;
  for (int d : e.degrees()) split = split && hy.ext(d).dim() == e.piece_dims()[d] + ext_dim(chi, d);
  rep.require("H(G, B0) = H(G, k) + H(G, I)", split);

  int nu = 0, period = 0;
  if (which == 1) {
    nu = nilpotency_of_span(ba, ibasis);
  } else {
    Mat zi = intersect(Subspace(center(ba), n), Subspace(ibasis, n)).basis();
    nu = nilpotency_of_span(ba, zi);
    rep.require("Z(B0) meet I is nilpotent", nu > 0);
    for (int k = 1; k <= cap && !period; ++k) {
      ModuleRep om = syzygy_module(e.resolution(), k - 1);
      if (om.dim != 1) continue;
      bool trivial = true;
      for (int g : algebra_generators(h)) trivial = trivial && om.action[g](0, 0) == h.counit()(0, g);
      if (trivial) period = k;
    }
    rep.data["period"] = period;
    if (!rep.require("Omega^n(k) = k for some n <= cap", period > 0)) return rep;
  }
  rep.data["nilpotency_bound"] = nu;

  int tested = 0, vanished = 0;
  nlohmann::json classes = nlohmann::json::array();
  for (int d : e.degrees()) {
    if (d == 0 || 2 * d > cap) continue;
    const bool in_window = nu > 0 && d * nu <= cap && (which == 1 || d % period == 0);
    ExtSpace ex = ext_space(chi, d);
    for (int r = 0; r < ex.dim(); ++r) {
      Mat vals = cocycle_values(chi, d, Vec(ex.reps.row(r), ex.reps.row(r) + ex.reps.cols())) * ibasis;
      Vec zeta = hy.cochains().from_values(d, vals);
      Vec cur = zeta;
      int m = 1, zero_at = 0;
      while ((m + 1) * d <= cap) {
        cur = hy.product(d, zeta, m * d, cur);
        ++m;
        if (hy.ext(m * d).is_zero_class(cur)) {
          zero_at = m;
          break;
        }
      }
      nlohmann::json c;
      c["degree"] = d;
      c["index"] = r;
      c["tested"] = in_window;
      c["vanishes_at"] = zero_at;
      classes.push_back(c);
      if (in_window) {
        ++tested;
        if (zero_at > 0 && zero_at <= nu) ++vanished;
        else rep.require("class " + std::to_string(d) + "." + std::to_string(r) + " vanishes by its bound", false);
      }
    }
  }
  rep.data["classes"] = classes;
  rep.data["tested"] = tested;
  rep.data["vanished"] = vanished;
  if (tested == 0) rep.inconclusive("no class has its predicted bound inside the cap window");
  return rep;
}

}  // namespace blockscope
