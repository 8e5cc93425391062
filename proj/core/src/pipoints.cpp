#include "blockscope/pipoints.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>

#include "blockscope/errors.hpp"

namespace blockscope {

namespace {

constexpr long long kExhaustiveLimit = 1LL << 20;
constexpr int kStableHits = 200;

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; });
}

Vec combine(const Mat& rows, const Vec& coords) {
  Vec v(rows.cols(), 0);
  for (int r = 0; r < rows.rows(); ++r)
    if (coords[r]) axpy(rows.field(), v.data(), rows.row(r), coords[r], rows.cols());
  return v;
}

/// q^n, or -1 past the limit.
long long count_points(int q, int n) {
  long long c = 1;
  for (int i = 0; i < n; ++i) {
    c *= q;
    if (c > kExhaustiveLimit) return -1;
  }
  return c;
}

Vec digits(long long index, int q, int n) {
  Vec d(n);
  for (int i = 0; i < n; ++i) {
    d[i] = static_cast<Elem>(index % q);
    index /= q;
  }
  return d;
}

Vec random_coords(std::mt19937_64& rng, int q, int n) {
  Vec d(n);
  for (auto& x : d) x = static_cast<Elem>(rng() % q);
  return d;
}

bool is_power_of(int n, int p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

/// Abelian p-subgroups other than the trivial one.
std::vector<std::vector<int>> abelian_p_subgroups(const GroupTable& g, int p, const std::vector<int>* inside = nullptr) {
  std::vector<std::vector<int>> out;
  for (auto& s : g.subgroups()) {
    if (s.size() < 2 || !is_power_of(static_cast<int>(s.size()), p) || !g.is_abelian_subset(s)) continue;
    if (inside && !std::includes(inside->begin(), inside->end(), s.begin(), s.end())) continue;
    out.push_back(s);
  }
  return out;
}

/// Augmentation-ideal element sum c_j (g_j - 1) over the non-identity
/// elements of a subgroup.
Vec subgroup_element(const GroupTable& g, const std::vector<int>& s, const Vec& c, const Field& f) {
  Vec u(g.order(), 0);
  int j = 0;
  for (int x : s) {
    if (x == g.identity()) continue;
    u[x] = f.add(u[x], c[j]);
    u[g.identity()] = f.sub(u[g.identity()], c[j]);
    ++j;
  }
  return u;
}

ModuleRep component(const ModuleRep& m, const Vec& idem) {
  Mat rows = row_space(m.act(idem).transpose());
  return submodule(m, rows);
}

bool all_p(const std::vector<int>& jt, int p) {
  return std::all_of(jt.begin(), jt.end(), [p](int s) { return s == p; });
}

}  // namespace

std::vector<int> jordan_type(const Mat& op) {
  const int n = op.rows();
  std::vector<int> ranks{n};
  Mat pw = Mat::identity(op.field(), n);
  while (ranks.back() > 0) {
    pw = pw * op;
    int r = rank(pw);
    if (r == ranks.back()) throw PreconditionError("operator is not nilpotent");
    ranks.push_back(r);
  }
  ranks.push_back(0);
  std::vector<int> sizes;
  for (size_t k = 1; k + 1 < ranks.size(); ++k) {
    int at_least = ranks[k - 1] - ranks[k];
    int at_least_next = ranks[k] - ranks[k + 1];
    for (int c = 0; c < at_least - at_least_next; ++c) sizes.push_back(static_cast<int>(k));
  }
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

bool is_p_nilpotent(const Algebra& a, const Vec& u) {
  Vec pw = u;
  for (int k = 1; k < a.field().p(); ++k) pw = a.mul(pw, u);
  return is_zero(pw);
}

FlatMap flat_test(const Algebra& a, const Vec& u) {
  const int p = a.field().p();
  if (!is_p_nilpotent(a, u)) throw PreconditionError("element is not p-nilpotent");
  FlatMap fm;
  fm.u = u;
  Mat l = a.left_mult(u);
  fm.jordan_type = jordan_type(l);
  const int d = a.dim();
  const bool by_type = all_p(fm.jordan_type, p);
  const bool by_rank = rank(l) * p == d * (p - 1);
  Mat lp = Mat::identity(a.field(), d);
  for (int k = 1; k < p; ++k) lp = lp * l;
  const bool by_top = rank(lp) * p == d;
  fm.flat = by_type;
  fm.criteria_agree = by_type == by_rank && by_rank == by_top;
  return fm;
}

bool restricts_projectively(const ModuleRep& m, const Vec& u, int p) {
  if (m.dim == 0) return true;
  if (m.dim % p) return false;
  return rank(m.act(u)) * p == m.dim * (p - 1);
}

ModuleRep coinduce(const Algebra& a, const FlatMap& fm) {
  if (!fm.flat) throw PreconditionError("coinduction needs a flat map");
  const Field& f = a.field();
  std::vector<Mat> act;
  for (int i = 0; i < a.dim(); ++i) act.push_back(a.right(i).transpose());
  return submodule(ModuleRep(f, a.dim(), std::move(act)), left_kernel(a.left_mult(fm.u)));
}

XNExample example_xN(const HopfAlgebra& h) {
  const GroupTable* g = h.group();
  const Field& f = h.field();
  const int p = f.p();
  if (!g || g->is_abelian() || !g->is_p_group(p)) throw PreconditionError("x + N needs a nonabelian p-group");
  XNExample ex;
  for (int z : g->center())
    if (z != g->identity() && g->element_order(z) == p) {
      ex.central_element = z;
      break;
    }
  Vec u(g->order(), 1);
  u[g->identity()] = f.add(u[g->identity()], 1);
  u[ex.central_element] = f.sub(u[ex.central_element], 1);
  ex.fm = flat_test(h, u);
  ex.outside_all = true;
  for (auto& s : g->subgroups()) {
    if (static_cast<int>(s.size()) == g->order()) continue;
    Mat span(f, static_cast<int>(s.size()), g->order());
    for (size_t k = 0; k < s.size(); ++k) span(static_cast<int>(k), s[k]) = 1;
    ++ex.subgroups_tested;
    if (Subspace(span, g->order()).contains(u)) ex.outside_all = false;
  }
  return ex;
}

PPointVerdict is_p_point(const HopfAlgebra& h, const FlatMap& fm) {
  PPointVerdict v;
  if (!fm.flat) return v;
  const Field& f = h.field();
  if (const GroupTable* g = h.group()) {
    for (auto& s : abelian_p_subgroups(*g, f.p())) {
      Mat span(f, static_cast<int>(s.size()), g->order());
      for (size_t k = 0; k < s.size(); ++k) span(static_cast<int>(k), s[k]) = 1;
      if (Subspace(span, g->order()).contains(fm.u)) {
        v.verdict = Verdict::pass;
        v.witness = s;
        return v;
      }
    }
    return v;
  }
  if (h.is_commutative()) {
    v.verdict = Verdict::pass;
    return v;
  }
  v.verdict = Verdict::unsupported;
  return v;
}

EquivalenceVerdict equivalent(const std::vector<NamedModule>& family, const Vec& a, const Vec& b, int p) {
  if (family.empty()) throw PreconditionError("empty witness family");
  EquivalenceVerdict v;
  for (auto& m : family) {
    v.family.push_back(m.name);
    v.a.push_back(restricts_projectively(m.module, a, p));
    v.b.push_back(restricts_projectively(m.module, b, p));
  }
  v.equivalent = v.a == v.b;
  return v;
}

PiPoints::PiPoints(const CohomologyEngine& e, long long budget, std::uint64_t seed)
    : e_(e), budget_(budget), seed_(seed) {
  if (budget < 1) throw PreconditionError("sampling budget must be positive");
}

GradedIdeal PiPoints::induced_kernel(const Vec& u) const {
  const Field& f = e_.field();
  const Resolution& r = e_.resolution();
  const ProjKit& kit = e_.kit();
  std::map<int, Mat> pieces;
  for (int n : e_.degrees()) {
    if (n == 0) continue;
    // Hom over k[t]/(t^p) into k: functionals on P_{n-1} killing u.P_{n-1}.
    Mat act(f, r.dims[n - 1], r.dims[n - 1]);
    for (size_t k = 0; k < r.gens[n - 1].size(); ++k)
      act.set_block(r.offsets[n - 1][k], r.offsets[n - 1][k], kit.element_action(u, r.gens[n - 1][k]));
    Mat fk = left_kernel(act);
    Subspace bound(fk * r.D[n].transpose(), r.dims[n]);
    const Mat& mc = e_.monomial_cocycles(n);
    Mat rem(f, mc.rows(), r.dims[n]);
    for (int k = 0; k < mc.rows(); ++k) {
      Mat vals = e_.cochains().as_map(n, Vec(mc.row(k), mc.row(k) + mc.cols()));
      Vec c(vals.rows());
      for (int i = 0; i < vals.rows(); ++i) c[i] = vals(i, 0);
      bound.reduce(c.data());
      std::copy(c.begin(), c.end(), rem.row(k));
    }
    pieces[n] = left_kernel(rem);
  }
  return e_.make_ideal(std::move(pieces));
}

bool PiPoints::kernel_lemma_holds(const GradedIdeal& kernel) const { return !e_.equal(kernel, e_.whole_irrelevant()); }

const std::vector<NamedModule>& PiPoints::family() const {
  if (!family_.empty()) return family_;
  const Analysis& an = e_.analysis();
  for (size_t i = 0; i < an.simples.size(); ++i) family_.push_back({"S" + std::to_string(i), an.simples[i]});
  for (size_t i = 0; i < an.simples.size(); ++i) {
    CoefModule c = e_.coef(an.simples[i]);
    Resolution r = minimal_resolution(e_.kit(), c, 4);
    for (int n = 0; n < 4; ++n) {
      ModuleRep om = syzygy_module(r, n);
      if (om.dim) family_.push_back({"Omega" + std::to_string(n + 1) + "(S" + std::to_string(i) + ")", om});
    }
  }
  for (size_t g = 0; g < e_.generators().size(); ++g) {
    const auto& gen = e_.generators()[g];
    if (gen.degree > 2) continue;
    ModuleRep l = carlson_module(e_.resolution(), e_.cochains(), gen.degree, gen.cocycle);
    if (l.dim) family_.push_back({"L(x" + std::to_string(g) + ")", l});
  }
  ModuleRep reg = regular_module(an.h);
  for (int t = 0; t < e_.kit().ntypes; ++t)
    family_.push_back({"P" + std::to_string(t), submodule(reg, e_.kit().qbasis[t])});
  return family_;
}

const std::vector<NamedModule>& PiPoints::block_family(int b) const {
  auto it = block_family_.find(b);
  if (it != block_family_.end()) return it->second;
  const Analysis& an = e_.analysis();
  const Vec& idem = an.blocks.blocks.at(b).idempotent;
  std::vector<NamedModule> out;
  const std::string tag = "e" + std::to_string(b) + ".";
  for (auto& m : family()) {
    ModuleRep c = component(m.module, idem);
    if (c.dim) out.push_back({tag + m.name, c});
  }
  for (size_t g = 0; g < e_.generators().size(); ++g) {
    const auto& gen = e_.generators()[g];
    if (gen.degree > 2) continue;
    ModuleRep l = carlson_module(e_.resolution(), e_.cochains(), gen.degree, gen.cocycle);
    if (!l.dim) continue;
    for (int s : an.simples_in_block(b)) {
      ModuleRep c = component(tensor_diagonal(an.h, l, an.simples[s]), idem);
      if (c.dim) out.push_back({tag + "(L(x" + std::to_string(g) + ")xS" + std::to_string(s) + ")", c});
    }
  }
  return block_family_[b] = std::move(out);
}

Vec PiPoints::rho_star(const Vec& u, int b) const {
  const Analysis& an = e_.analysis();
  return an.h.mul(an.blocks.blocks.at(b).idempotent, u);
}

std::vector<Vec> PiPoints::sample_p_nilpotents(int count, std::uint64_t seed) const {
  const Analysis& an = e_.analysis();
  const HopfAlgebra& h = an.h;
  const Field& f = h.field();
  const int q = f.size();
  std::mt19937_64 rng(seed);
  std::vector<std::function<Vec()>> sources;
  std::vector<std::vector<int>> subs;
  if (h.group()) subs = abelian_p_subgroups(*h.group(), f.p());
  if (!subs.empty())
    sources.push_back([&]() {
      const auto& s = subs[rng() % subs.size()];
      return subgroup_element(*h.group(), s, random_coords(rng, q, static_cast<int>(s.size()) - 1), f);
    });
  if (an.radical.rows() > 0)
    sources.push_back([&]() { return combine(an.radical, random_coords(rng, q, an.radical.rows())); });
  sources.push_back([&]() {
    Vec u(h.dim(), 0);
    for (int g : an.gens) u[g] = static_cast<Elem>(rng() % q);
    Elem eps = h.counit_of(u);
    axpy(f, u.data(), h.unit().data(), f.neg(eps), h.dim());
    return u;
  });
  std::vector<Vec> out;
  const long long max_attempts = 200LL * count + 1000;
  for (long long t = 0; t < max_attempts && static_cast<int>(out.size()) < count; ++t) {
    Vec u = sources[t % sources.size()]();
    if (!is_zero(u) && is_p_nilpotent(h, u)) out.push_back(std::move(u));
  }
  return out;
}

std::vector<Vec> PiPoints::flat_elements(bool& exhaustive) const {
  const HopfAlgebra& h = e_.hopf();
  const Field& f = h.field();
  std::vector<Vec> out;
  const long long total = count_points(f.size(), h.dim());
  exhaustive = total > 0;
  auto consider = [&](const Vec& u) {
    if (is_zero(u) || !is_p_nilpotent(h, u)) return;
    if (flat_test(h, u).flat) out.push_back(u);
  };
  if (exhaustive)
    for (long long i = 1; i < total; ++i) consider(digits(i, f.size(), h.dim()));
  else
    for (auto& u : sample_p_nilpotents(static_cast<int>(std::min<long long>(budget_, 1 << 20)), seed_)) consider(u);
  return out;
}

const std::vector<PointClass>& PiPoints::flat_classes(bool* exhaustive) const {
  if (!have_flat_) {
    std::vector<Vec> flats = flat_elements(flat_exhaustive_);
    int stale = 0;
    for (auto& u : flats) {
      if (!flat_exhaustive_ && stale >= kStableHits) break;
      GradedIdeal k = induced_kernel(u);
      auto it = std::find_if(flat_classes_.begin(), flat_classes_.end(),
                             [&](const PointClass& c) { return e_.equal(c.kernel, k); });
      if (it != flat_classes_.end()) {
        ++it->hits;
        ++stale;
      } else {
        flat_classes_.push_back({u, std::move(k), {}, 1});
        stale = 0;
      }
    }
    have_flat_ = true;
  }
  if (exhaustive) *exhaustive = flat_exhaustive_;
  return flat_classes_;
}

const std::vector<PointClass>& PiPoints::p_point_classes() const {
  if (have_classes_) return classes_;
  const HopfAlgebra& h = e_.hopf();
  const Field& f = h.field();
  const int q = f.size();
  const GroupTable* g = h.group();
  std::vector<std::vector<int>> subs;
  Mat rad = e_.analysis().radical;
  if (g)
    subs = abelian_p_subgroups(*g, f.p());
  else if (!h.is_commutative() || e_.analysis().simples.size() != 1)
    throw UnsupportedError("p-points are only enumerated for constant groups and commutative local algebras");
  // Candidate sources: one per subgroup (coefficients on g - 1), or the radical.
  std::vector<int> widths;
  if (g)
    for (auto& s : subs) widths.push_back(static_cast<int>(s.size()) - 1);
  else
    widths.push_back(rad.rows());
  auto build = [&](size_t src, const Vec& c) {
    return g ? subgroup_element(*g, subs[src], c, f) : combine(rad, c);
  };
  long long total = 0;
  for (int w : widths) {
    long long c = count_points(q, w);
    if (c < 0 || total + c > kExhaustiveLimit) {
      total = -1;
      break;
    }
    total += c;
  }
  auto consider = [&](size_t src, const Vec& u) {
    if (is_zero(u) || !is_p_nilpotent(h, u) || !flat_test(h, u).flat) return false;
    GradedIdeal k = induced_kernel(u);
    for (auto& c : classes_)
      if (e_.equal(c.kernel, k)) {
        ++c.hits;
        return false;
      }
    classes_.push_back({u, std::move(k), g ? subs[src] : std::vector<int>{}, 1});
    return true;
  };
  if (total >= 0) {
    for (size_t src = 0; src < widths.size(); ++src) {
      long long c = count_points(q, widths[src]);
      for (long long i = 1; i < c; ++i) consider(src, build(src, digits(i, q, widths[src])));
    }
  } else {
    std::mt19937_64 rng(seed_);
    int stale = 0;
    for (long long t = 0; t < budget_ && stale < kStableHits; ++t) {
      size_t src = rng() % widths.size();
      Vec u = build(src, random_coords(rng, q, widths[src]));
      if (is_zero(u) || !is_p_nilpotent(h, u) || !flat_test(h, u).flat) continue;
      stale = consider(src, u) ? 0 : stale + 1;
    }
  }
  have_classes_ = true;
  return classes_;
}

PiSupportSample PiPoints::block_pi_support(int b) const {
  const Analysis& an = e_.analysis();
  PiSupportSample s;
  s.classes = p_point_classes();
  long long total = 0;
  for (auto& c : s.classes) total += c.hits;
  s.candidates = total;
  s.exhaustive = true;
  for (auto& c : s.classes) {
    bool hit = false;
    for (int i : an.simples_in_block(b)) hit = hit || !restricts_projectively(an.simples[i], c.rep, e_.field().p());
    s.in_block.push_back(hit);
  }
  return s;
}

FlatPointSample PiPoints::flat_points_of_block(int b, const std::vector<NamedModule>& extra) const {
  const Analysis& an = e_.analysis();
  const Field& f = e_.field();
  const int p = f.p(), q = f.size();
  const Block& blk = an.blocks.blocks.at(b);
  const Algebra& ba = an.block_algebras.at(b);
  std::vector<NamedModule> fam = block_family(b);
  fam.insert(fam.end(), extra.begin(), extra.end());
  FlatPointSample out;
  for (auto& m : fam) out.family.push_back(m.name);
  LinearSolver coords_of(blk.basis);
  auto consider = [&](const Vec& c) {
    ++out.candidates;
    if (is_zero(c) || !is_p_nilpotent(ba, c)) return false;
    if (!all_p(jordan_type(ba.left_mult(c)), p)) return false;
    Vec u = combine(blk.basis, c);
    std::vector<bool> v;
    for (auto& m : fam) v.push_back(restricts_projectively(m.module, u, p));
    if (std::all_of(v.begin(), v.end(), [](bool x) { return x; })) {
      ++out.discarded;
      return false;
    }
    for (auto& cls : out.classes)
      if (cls.projective == v) {
        ++cls.hits;
        return false;
      }
    out.classes.push_back({u, v, 1});
    return true;
  };
  const long long total = count_points(q, blk.dim);
  out.exhaustive = total > 0;
  if (out.exhaustive) {
    for (long long i = 1; i < total; ++i) consider(digits(i, q, blk.dim));
  } else {
    int stale = 0;
    for (auto& u : sample_p_nilpotents(static_cast<int>(std::min<long long>(budget_, 1 << 20)), seed_)) {
      if (stale >= kStableHits) break;
      Vec eu = rho_star(u, b), c;
      if (is_zero(eu) || !coords_of.solve(eu, c)) continue;
      const size_t before = out.classes.size();
      const int disc = out.discarded;
      consider(c);
      if (out.classes.size() > before) stale = 0;
      else if (out.discarded == disc) ++stale;
    }
  }
  return out;
}

namespace {

std::string block_label(int b) { return "block" + std::to_string(b); }

bool same_kernel_sets(const CohomologyEngine& e, const std::vector<GradedIdeal>& a, const std::vector<GradedIdeal>& b) {
  auto covered = [&](const std::vector<GradedIdeal>& x, const std::vector<GradedIdeal>& y) {
    for (auto& i : x)
      if (std::none_of(y.begin(), y.end(), [&](const GradedIdeal& j) { return e.equal(i, j); })) return false;
    return true;
  };
  return covered(a, b) && covered(b, a);
}

int block_radical_dim(const Analysis& an, int b) {
  const Vec& idem = an.blocks.blocks.at(b).idempotent;
  Mat rows(an.field(), an.radical.rows(), an.h.dim());
  for (int r = 0; r < an.radical.rows(); ++r) {
    Vec v = an.h.mul(Vec(an.radical.row(r), an.radical.row(r) + an.radical.cols()), idem);
    std::copy(v.begin(), v.end(), rows.row(r));
  }
  return rank(rows);
}

std::vector<int> sylow(const GroupTable& g, int p) {
  int part = 1, n = g.order();
  while (n % p == 0) {
    part *= p;
    n /= p;
  }
  for (auto& s : g.subgroups())
    if (static_cast<int>(s.size()) == part) return s;
  return {g.identity()};
}

std::vector<int> to_ints(const std::vector<bool>& v) { return std::vector<int>(v.begin(), v.end()); }

std::vector<std::string> format_vec(const Field& f, const Vec& v) {
  std::vector<std::string> out;
  for (Elem x : v) out.push_back(f.format(x));
  return out;
}

/// A flat map of a local target used as the distinguished example.
std::optional<FlatMap> example_map(const HopfAlgebra& h, const Analysis& an) {
  const Field& f = h.field();
  if (const GroupTable* g = h.group()) {
    if (!g->is_abelian()) return example_xN(h).fm;
    for (int z : g->center())
      if (z != g->identity() && g->element_order(z) == f.p()) {
        Vec u(h.dim(), 0);
        u[z] = 1;
        u[g->identity()] = f.neg(1);
        return flat_test(h, u);
      }
    return std::nullopt;
  }
  for (int r = 0; r < an.radical.rows(); ++r) {
    Vec u(an.radical.row(r), an.radical.row(r) + an.radical.cols());
    if (is_p_nilpotent(h, u)) {
      FlatMap fm = flat_test(h, u);
      if (fm.flat) return fm;
    }
  }
  return std::nullopt;
}

}  // namespace

Report verify_kernel_lemma(const PiPoints& pp) {
  Report rep;
  rep.name = "kernel-lemma";
  bool exhaustive = false;
  const auto& classes = pp.flat_classes(&exhaustive);
  int tested = 0;
  bool holds = true;
  for (auto& c : classes) {
    tested += c.hits;
    holds = holds && pp.kernel_lemma_holds(c.kernel);
  }
  rep.data["exhaustive"] = exhaustive;
  rep.data["flat_elements"] = tested;
  rep.data["kernel_classes"] = static_cast<int>(classes.size());
  if (tested == 0) {
    rep.inconclusive("no flat elements found");
    return rep;
  }
  rep.require("every induced kernel is a proper subideal of the irrelevant ideal", holds);
  return rep;
}

Report verify_xn_example(const HopfAlgebra& h) {
  Report rep;
  rep.name = "xN-example";
  const GroupTable* g = h.group();
  if (!g || g->is_abelian() || !g->is_p_group(h.field().p())) {
    rep.unsupported("needs the group algebra of a nonabelian p-group");
    return rep;
  }
  XNExample ex = example_xN(h);
  rep.data["central_element"] = g->label(ex.central_element);
  rep.data["jordan_type"] = ex.fm.jordan_type;
  rep.data["subgroups_tested"] = ex.subgroups_tested;
  rep.require("x + N is p-nilpotent and flat", ex.fm.flat);
  rep.require("flatness criteria agree", ex.fm.criteria_agree);
  rep.require("x + N lies in no proper subgroup algebra", ex.outside_all);
  rep.require("x + N is not a p-point", is_p_point(h, ex.fm).verdict == Verdict::fail);
  return rep;
}

Report verify_equiv(const PiPoints& pp) {
  const CohomologyEngine& e = pp.engine();
  const Analysis& an = e.analysis();
  const HopfAlgebra& h = an.h;
  const int p = e.field().p();
  Report rep;
  rep.name = "equiv";
  if (an.simples.size() != 1) {
    rep.unsupported("the target is not local");
    return rep;
  }
  if (!h.group() && !h.is_commutative()) {
    rep.unsupported("p-points of a non-constant group scheme");
    return rep;
  }
  auto fm = example_map(h, an);
  if (!fm) {
    rep.unsupported("no distinguished flat map");
    return rep;
  }
  rep.data["alpha"] = format_vec(e.field(), fm->u);
  rep.data["alpha_is_p_point"] = is_p_point(h, *fm).verdict == Verdict::pass;
  GradedIdeal k = pp.induced_kernel(fm->u);
  rep.require("kernel of alpha is proper", pp.kernel_lemma_holds(k));
  const PointClass* match = nullptr;
  for (auto& c : pp.p_point_classes())
    if (e.equal(c.kernel, k)) {
      match = &c;
      break;
    }
  if (!rep.require("a p-point with the same kernel exists over the base field", match != nullptr)) {
    rep.data["notes"].push_back("field extensions are not searched");
    return rep;
  }
  rep.data["beta"] = format_vec(e.field(), match->rep);
  if (h.group()) {
    std::vector<std::string> labels;
    for (int x : match->witness) labels.push_back(h.group()->label(x));
    rep.data["beta_subgroup"] = labels;
  }
  FlatMap beta = flat_test(h, match->rep);
  std::vector<NamedModule> fam = pp.family();
  ModuleRep ka = coinduce(h, *fm);
  fam.push_back({"coind(alpha)", ka});
  fam.push_back({"coind(beta)", coinduce(h, beta)});
  EquivalenceVerdict v = equivalent(fam, fm->u, beta.u, p);
  rep.data["family"] = v.family;
  rep.data["alpha_projective"] = to_ints(v.a);
  rep.data["beta_projective"] = to_ints(v.b);
  rep.require("alpha and beta agree on the witness family", v.equivalent);
  rep.require("coind(alpha) is not projective along alpha", !v.a[v.a.size() - 2]);
  rep.require("V(coind(alpha)) is cut out by ker alpha",
              radical_equal(e.ring(), e.annihilator(ka).gens, k.gens));
  return rep;
}

Report verify_injective(const PiPoints& pp, int b) {
  const CohomologyEngine& e = pp.engine();
  const Analysis& an = e.analysis();
  const HopfAlgebra& h = an.h;
  const int p = e.field().p();
  Report rep;
  rep.name = "injective/" + block_label(b);
  if (!pp.constant_group() && !h.is_commutative()) {
    rep.unsupported("p-points of a non-constant group scheme");
    return rep;
  }
  PiSupportSample s = pp.block_pi_support(b);
  std::vector<int> in;
  for (size_t i = 0; i < s.classes.size(); ++i)
    if (s.in_block[i]) in.push_back(static_cast<int>(i));
  rep.data["classes"] = static_cast<int>(s.classes.size());
  rep.data["in_block"] = static_cast<int>(in.size());
  const Vec& idem = an.blocks.blocks.at(b).idempotent;
  bool preserved = true;
  for (int i : in)
    for (auto& m : pp.block_family(b))
      preserved = preserved && restricts_projectively(m.module, s.classes[i].rep, p) ==
                                   restricts_projectively(m.module, pp.rho_star(s.classes[i].rep, b), p);
  rep.require("rho_* preserves verdicts on block modules", preserved);
  int pairs = 0, separated = 0;
  nlohmann::json witnesses = nlohmann::json::array();
  for (size_t x = 0; x < in.size(); ++x)
    for (size_t y = x + 1; y < in.size(); ++y) {
      ++pairs;
      const Vec a = pp.rho_star(s.classes[in[x]].rep, b), c = pp.rho_star(s.classes[in[y]].rep, b);
      std::string found;
      // Carlson witness from a kernel element separating the two classes.
      for (int pass = 0; pass < 2 && found.empty(); ++pass) {
        const GradedIdeal& ka = s.classes[pass ? in[y] : in[x]].kernel;
        const GradedIdeal& kb = s.classes[pass ? in[x] : in[y]].kernel;
        for (auto& [n, piece] : ka.pieces) {
          if (!found.empty() || piece.rows() == 0) continue;
          auto it = kb.pieces.find(n);
          Subspace other(it == kb.pieces.end() ? Mat(e.field(), 0, piece.cols()) : it->second, piece.cols());
          for (int r = 0; r < piece.rows() && found.empty(); ++r) {
            Vec row(piece.row(r), piece.row(r) + piece.cols());
            if (other.contains(row)) continue;
            Vec zeta = combine(e.monomial_cocycles(n), row);
            ModuleRep l = carlson_module(e.resolution(), e.cochains(), n, zeta);
            for (int si : an.simples_in_block(b)) {
              ModuleRep w = component(tensor_diagonal(h, l, an.simples[si]), idem);
              if (restricts_projectively(w, a, p) != restricts_projectively(w, c, p)) {
                found = "e.(L_zeta (x) S" + std::to_string(si) + "), deg " + std::to_string(n);
                break;
              }
            }
            break;  // one separating element per degree
          }
        }
      }
      if (found.empty())
        for (auto& m : pp.block_family(b))
          if (restricts_projectively(m.module, a, p) != restricts_projectively(m.module, c, p)) {
            found = m.name;
            break;
          }
      if (!found.empty()) ++separated;
      witnesses.push_back({{"pair", {in[x], in[y]}}, {"witness", found}});
    }
  rep.data["pairs"] = pairs;
  rep.data["witnesses"] = witnesses;
  rep.require("distinct classes stay distinct after rho_*", separated == pairs);
  return rep;
}

Report verify_homeo_local(const PiPoints& pp) {
  const CohomologyEngine& e = pp.engine();
  const Analysis& an = e.analysis();
  const HopfAlgebra& h = an.h;
  const int b0 = an.blocks.principal_index;
  const int p = e.field().p();
  Report rep;
  rep.name = "homeo-local";
  if (an.simples_in_block(b0).size() != 1) {
    rep.unsupported("principal block is not local");
    return rep;
  }
  if (!pp.constant_group() && !h.is_commutative()) {
    rep.unsupported("p-points of a non-constant group scheme");
    return rep;
  }
  bool exhaustive = false;
  const auto& classes = pp.flat_classes(&exhaustive);
  const Vec& idem = an.blocks.blocks.at(b0).idempotent;
  std::vector<NamedModule> extra;
  std::vector<int> in;
  const std::vector<int> b0_simples = an.simples_in_block(b0);
  for (size_t i = 0; i < classes.size(); ++i) {
    if (std::all_of(b0_simples.begin(), b0_simples.end(),
                    [&](int si) { return restricts_projectively(an.simples[si], classes[i].rep, p); }))
      continue;
    in.push_back(static_cast<int>(i));
    ModuleRep c = component(coinduce(h, flat_test(h, classes[i].rep)), idem);
    if (c.dim) extra.push_back({"e.coind(P" + std::to_string(i) + ")", c});
  }
  FlatPointSample fp = pp.flat_points_of_block(b0, extra);
  std::vector<NamedModule> fam = pp.block_family(b0);
  fam.insert(fam.end(), extra.begin(), extra.end());
  std::vector<int> image;
  bool total = true;
  for (int i : in) {
    Vec u = pp.rho_star(classes[i].rep, b0);
    std::vector<bool> v;
    for (auto& m : fam) v.push_back(restricts_projectively(m.module, u, p));
    int hit = -1;
    for (size_t c = 0; c < fp.classes.size(); ++c)
      if (fp.classes[c].projective == v) hit = static_cast<int>(c);
    total = total && hit >= 0;
    image.push_back(hit);
  }
  std::vector<int> sorted = image;
  std::sort(sorted.begin(), sorted.end());
  const bool injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  bool surjective = true;
  for (size_t c = 0; c < fp.classes.size(); ++c)
    surjective = surjective && std::count(image.begin(), image.end(), static_cast<int>(c)) > 0;
  rep.data["point_classes"] = static_cast<int>(in.size());
  rep.data["flat_classes"] = static_cast<int>(fp.classes.size());
  rep.data["discarded"] = fp.discarded;
  rep.data["exhaustive"] = fp.exhaustive;
  rep.data["family"] = fp.family;
  rep.data["image"] = image;
  rep.require("rho_* lands in F(B0)", total);
  rep.require("rho_* is injective", injective);
  rep.require("rho_* is surjective", surjective);
  if (!fp.exhaustive || !exhaustive) rep.inconclusive("flat maps were sampled");
  return rep;
}

Report verify_defect(const PiPoints& pp, int b) {
  const CohomologyEngine& e = pp.engine();
  const Analysis& an = e.analysis();
  const HopfAlgebra& h = an.h;
  const Field& f = e.field();
  Report rep;
  rep.name = "defect/" + block_label(b);
  const GroupTable* g = h.group();
  if (!g) {
    rep.unsupported("needs a constant group");
    return rep;
  }
  std::vector<int> d;
  if (b == an.blocks.principal_index)
    d = sylow(*g, f.p());
  else if (block_radical_dim(an, b) == 0)
    d = {g->identity()};
  else {
    rep.unsupported("defect group is only known for principal and simple blocks");
    return rep;
  }
  std::vector<std::string> labels;
  for (int x : d) labels.push_back(g->label(x));
  rep.data["defect_group"] = labels;
  std::vector<GradedIdeal> from_d;
  for (auto& sub : abelian_p_subgroups(*g, f.p(), &d)) {
    const int w = static_cast<int>(sub.size()) - 1;
    const long long c = count_points(f.size(), w);
    if (c < 0) {
      rep.unsupported("defect subgroup too large to enumerate");
      return rep;
    }
    for (long long i = 1; i < c; ++i) {
      Vec u = subgroup_element(*g, sub, digits(i, f.size(), w), f);
      if (!is_p_nilpotent(h, u) || !flat_test(h, u).flat) continue;
      GradedIdeal k = pp.induced_kernel(u);
      if (std::none_of(from_d.begin(), from_d.end(), [&](const GradedIdeal& x) { return e.equal(x, k); }))
        from_d.push_back(std::move(k));
    }
  }
  PiSupportSample s = pp.block_pi_support(b);
  std::vector<GradedIdeal> in;
  for (size_t i = 0; i < s.classes.size(); ++i)
    if (s.in_block[i]) in.push_back(s.classes[i].kernel);
  rep.data["classes_from_defect"] = static_cast<int>(from_d.size());
  rep.data["classes_in_block"] = static_cast<int>(in.size());
  rep.require("P(G)_B equals the image of P(D)", same_kernel_sets(e, from_d, in));
  return rep;
}

Report verify_rep_type(const CohomologyEngine& e) {
  const Analysis& an = e.analysis();
  Report rep;
  rep.name = "rep-type";
  for (size_t b = 0; b < an.blocks.blocks.size(); ++b) {
    const int bi = static_cast<int>(b);
    const int vdim = e.variety(e.block_ideal(bi)).dim;
    const bool semisimple = block_radical_dim(an, bi) == 0;
    rep.data["blocks"][block_label(bi)] = {{"variety_dim", vdim},
                                           {"type", to_string(rep_type_classify(vdim))},
                                           {"semisimple", semisimple}};
    rep.require(block_label(bi) + ": dim 0 exactly for simple blocks", (vdim == 0) == semisimple);
  }
  return rep;
}

Report verify_localunipotent(const HopfAlgebra& h) {
  Report rep;
  rep.name = "localunipotent";
  const GroupTable* g = h.group();
  if (!g) {
    rep.unsupported("needs a constant group");
    return rep;
  }
  LocalBlockReport lb;
  try {
    lb = local_principal_structure(*g, h.field());
  } catch (const PreconditionError& ex) {
    rep.unsupported(ex.what());
    return rep;
  }
  std::vector<std::string> labels;
  for (int x : lb.normal_subgroup) labels.push_back(g->label(x));
  rep.data["normal_subgroup"] = labels;
  rep.data["principal_dim"] = lb.principal_dim;
  rep.data["quotient_order"] = lb.quotient_order;
  rep.require("G/N is a p-group", lb.quotient_unipotent);
  rep.require("kN is semisimple", lb.kn_semisimple);
  rep.require("B0 is isomorphic to k[G/N]", lb.iso_check);
  rep.require("augmentation of kN lies in the other blocks", lb.containment);
  return rep;
}

}  // namespace blockscope
