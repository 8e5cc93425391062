#include "blockscope/cohomology.hpp"

#include "blockscope/errors.hpp"

namespace blockscope {

namespace {

Monomial trimmed(Monomial m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
  return m;
}

}  // namespace

Vec identity_vector(const Field& f, int dim) {
  (void)f;
  Vec v(static_cast<size_t>(dim) * dim, 0);
  for (int i = 0; i < dim; ++i) v[static_cast<size_t>(i) * dim + i] = 1;
  return v;
}

CohomologyEngine::CohomologyEngine(const HopfAlgebra& h, int cap, std::uint64_t seed)
    : an_(std::make_unique<Analysis>(analyze(h, seed))), cap_(cap) {
  if (cap < 2) throw PreconditionError("cohomology cap must be at least 2");
  even_only_ = an_->field().p() != 2;
  const int triv = trivial_simple_index(an_->h, an_->simples);
  kit_ = make_kit(an_->h, an_->simples, an_->radical, triv);
  k_ = coef_module(kit_, trivial_module(an_->h));
  res_ = minimal_resolution(kit_, k_, cap + 1);
  cochains_ = std::make_unique<Cochains>(res_, k_);
  for (int n = 0; n <= cap; ++n)
    if (!even_only_ || n % 2 == 0) degrees_.push_back(n);
  build_ring();
}

void CohomologyEngine::build_ring() {
  const Field& f = field();
  const Cochains& c = *cochains_;
  std::map<Monomial, Vec> cache;  // trimmed monomial -> cocycle
  std::vector<int> var_deg;
  piece_dims_.assign(cap_ + 1, 0);
  for (int n : degrees_) {
    ext_.emplace(n, ext_space(c, n));
    const ExtSpace& e = ext_.at(n);
    piece_dims_[n] = e.dim();
    if (n == 0) {
      Mat one(f, static_cast<int>(res_.gens[0].size()), 1);
      for (size_t k = 0; k < res_.gens[0].size(); ++k)
        if (res_.gens[0][k] == kit_.trivial_type) one(static_cast<int>(k), 0) = 1;
      cache[{}] = c.from_values(0, one);
      continue;
    }
    PolyRing cur;
    cur.field = &f;
    cur.weights = var_deg;
    cur.names.assign(var_deg.size(), "");
    Subspace span(f, e.dim());
    for (auto& m : cur.monomials_of_degree(n)) {
      Monomial key = trimmed(m);
      int i = static_cast<int>(key.size()) - 1;
      Monomial rest = key;
      --rest[i];
      rest = trimmed(rest);
      const int dr = n - var_deg[i];
      Vec v = yoneda(c, var_deg[i], gens_[i].cocycle, c, dr, cache.at(rest), c);
      cache[key] = v;
      span.add(e.coords(v));
    }
    for (int r = 0; r < e.dim(); ++r) {
      std::vector<Elem> unit(e.dim(), 0);
      unit[r] = 1;
      if (!span.add(unit)) continue;
      Vec cocycle(e.reps.row(r), e.reps.row(r) + e.reps.cols());
      gens_.push_back({n, cocycle});
      var_deg.push_back(n);
      Monomial key(var_deg.size(), 0);
      key.back() = 1;
      cache[key] = cocycle;
    }
  }
  ring_.field = &f;
  ring_.weights = var_deg;
  for (size_t i = 0; i < var_deg.size(); ++i) ring_.names.push_back("x" + std::to_string(i));
  std::map<int, Mat> rel;
  for (int n : degrees_) {
    monomials_[n] = ring_.monomials_of_degree(n);
    auto& idx = mono_index_[n];
    Mat cocycles(f, 0, c.dim(n));
    Mat coords(f, 0, ext_.at(n).dim());
    for (size_t k = 0; k < monomials_[n].size(); ++k) {
      const Monomial& m = monomials_[n][k];
      idx[m] = static_cast<int>(k);
      const Vec& v = cache.at(trimmed(m));
      cocycles.append_rows(Mat(f, 1, c.dim(n), v));
      coords.append_rows(Mat(f, 1, ext_.at(n).dim(), ext_.at(n).coords(v)));
    }
    if (rank(coords) != ext_.at(n).dim()) throw InternalError("ring generators do not span H^" + std::to_string(n));
    mono_cocycles_[n] = cocycles;
    rel[n] = left_kernel(coords);
  }
  relation_pieces_ = rel;
  relations_ = make_ideal(rel).gens;
}

int CohomologyEngine::monomial_index(int n, const Monomial& m) const {
  auto& idx = mono_index_.at(n);
  auto it = idx.find(m);
  if (it == idx.end()) throw PreconditionError("monomial not of the given degree");
  return it->second;
}

Vec CohomologyEngine::monomial_vector(int n, const Poly& p) const {
  Vec v(monomials_.at(n).size(), 0);
  for (auto& t : p.terms) v[monomial_index(n, t.m)] = t.c;
  return v;
}

Poly CohomologyEngine::polynomial(int n, const Elem* coords) const {
  std::vector<Term> ts;
  const auto& ms = monomials_.at(n);
  for (size_t k = 0; k < ms.size(); ++k)
    if (coords[k]) ts.push_back({ms[k], coords[k]});
  return poly::from_terms(ring_, ts);
}

Vec CohomologyEngine::class_of(const Poly& p, int n) const {
  const Mat& mc = mono_cocycles_.at(n);
  Vec v(mc.cols(), 0);
  for (auto& t : p.terms) axpy(field(), v.data(), mc.row(monomial_index(n, t.m)), t.c, mc.cols());
  return v;
}

GradedIdeal CohomologyEngine::make_ideal(std::map<int, Mat> pieces) const {
  const Field& f = field();
  GradedIdeal out;
  std::vector<std::pair<int, Poly>> gens;
  for (int n : degrees_) {
    auto it = pieces.find(n);
    if (it == pieces.end() || it->second.rows() == 0) continue;
    const int nm = static_cast<int>(monomials_.at(n).size());
    Subspace span(f, nm);
    for (auto& [d, g] : gens) {
      if (d > n) continue;
      for (auto& m : ring_.monomials_of_degree(n - d)) span.add(monomial_vector(n, poly::mul_term(ring_, g, m, 1)));
    }
    for (int r = 0; r < it->second.rows(); ++r)
      if (span.add(it->second.row_span(r))) gens.push_back({n, poly::monic(ring_, polynomial(n, it->second.row(r)))});
  }
  for (auto& [d, g] : gens) out.gens.push_back(g);
  out.pieces = std::move(pieces);
  return out;
}

GradedIdeal CohomologyEngine::kernel_ideal(const CoefModule& x, const Vec& x0) const {
  const Field& f = field();
  Cochains cx(res_, x);
  std::map<int, Mat> pieces;
  for (int n : degrees_) {
    ExtSpace ex = ext_space(cx, n);
    const Mat& mc = mono_cocycles_.at(n);
    Mat coords(f, 0, ex.dim());
    for (int k = 0; k < mc.rows(); ++k) {
      Mat vals = cocycle_values(*cochains_, n, Vec(mc.row(k), mc.row(k) + mc.cols()));
      Mat xv(f, vals.rows(), x.dim);
      for (int g = 0; g < vals.rows(); ++g)
        if (vals(g, 0)) axpy(f, xv.row(g), x0.data(), vals(g, 0), x.dim);
      coords.append_rows(Mat(f, 1, ex.dim(), ex.coords(cx.from_values(n, xv))));
    }
    pieces[n] = left_kernel(coords);
  }
  return make_ideal(std::move(pieces));
}

GradedIdeal CohomologyEngine::annihilator(const ModuleRep& m) const {
  ModuleRep end = hom_module(hopf(), m, m);
  return kernel_ideal(coef(end), identity_vector(field(), m.dim));
}

GradedIdeal CohomologyEngine::intersect(const GradedIdeal& a, const GradedIdeal& b) const {
  std::map<int, Mat> pieces;
  for (int n : degrees_) {
    auto ia = a.pieces.find(n), ib = b.pieces.find(n);
    if (ia == a.pieces.end() || ib == b.pieces.end()) continue;
    const int nm = static_cast<int>(monomials_.at(n).size());
    pieces[n] = blockscope::intersect(Subspace(ia->second, nm), Subspace(ib->second, nm)).basis();
  }
  return make_ideal(std::move(pieces));
}

bool CohomologyEngine::equal(const GradedIdeal& a, const GradedIdeal& b) const {
  for (int n : degrees_) {
    const int nm = static_cast<int>(monomials_.at(n).size());
    auto get = [&](const GradedIdeal& i) {
      auto it = i.pieces.find(n);
      return it == i.pieces.end() ? Subspace(field(), nm) : Subspace(it->second, nm);
    };
    if (!(get(a) == get(b))) return false;
  }
  return true;
}

GradedIdeal CohomologyEngine::whole_irrelevant() const {
  std::map<int, Mat> pieces;
  for (int n : degrees_)
    if (n > 0) pieces[n] = Mat::identity(field(), static_cast<int>(monomials_.at(n).size()));
  return make_ideal(std::move(pieces));
}

GradedIdeal CohomologyEngine::relation_ideal() const { return make_ideal(relation_pieces_); }

SupportVariety CohomologyEngine::variety(const GradedIdeal& i) const {
  SupportVariety v;
  v.ideal = i.gens;
  v.dim = ideal_dim(ring_, i.gens);
  v.connectivity = proj_connected(ring_, i.gens);
  return v;
}

GradedIdeal CohomologyEngine::block_ideal(int b) const {
  auto it = block_ideals_.find(b);
  if (it != block_ideals_.end()) return it->second;
  std::optional<GradedIdeal> acc;
  for (int s : an_->simples_in_block(b)) {
    GradedIdeal i = annihilator(an_->simples[s]);
    acc = acc ? intersect(*acc, i) : i;
  }
  if (!acc) throw InternalError("block without simple modules");
  block_ideals_[b] = *acc;
  return *acc;
}

}  // namespace blockscope
