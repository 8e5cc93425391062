#include "blockscope/hopf.hpp"

#include <cstdio>
#include <sstream>

#include "blockscope/errors.hpp"

namespace blockscope {

// ---------------------------------------------------------------- Algebra

Algebra::Algebra(const Field& f, int dim, std::vector<Elem> mult, Vec unit, std::vector<std::string> labels)
    : field_(&f), dim_(dim), mult_(std::move(mult)), unit_(std::move(unit)), labels_(std::move(labels)) {
  if (dim_ < 1) throw PreconditionError("algebra dimension must be positive");
  if (mult_.size() != static_cast<size_t>(dim_) * dim_ * dim_)
    throw PreconditionError("structure constant count must be dim^3");
  if (static_cast<int>(unit_.size()) != dim_) throw PreconditionError("unit vector has wrong length");
  if (labels_.empty())
    for (int i = 0; i < dim_; ++i) labels_.push_back("b" + std::to_string(i));
  left_.assign(dim_, Mat(f, dim_, dim_));
  right_.assign(dim_, Mat(f, dim_, dim_));
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) {
        const Elem v = c(i, j, k);
        left_[i](k, j) = v;
        right_[j](k, i) = v;
      }
}

Mat Algebra::left_mult(const Vec& x) const {
  Mat m(*field_, dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    if (x[i]) m.add_scaled(left_[i], x[i]);
  return m;
}

Mat Algebra::right_mult(const Vec& x) const {
  Mat m(*field_, dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    if (x[i]) m.add_scaled(right_[i], x[i]);
  return m;
}

Vec Algebra::mul(const Vec& x, const Vec& y) const {
  const Field& f = *field_;
  Vec out(dim_, 0);
  for (int i = 0; i < dim_; ++i) {
    if (!x[i]) continue;
    for (int j = 0; j < dim_; ++j) {
      if (!y[j]) continue;
      const Elem s = f.mul(x[i], y[j]);
      axpy(f, out.data(), &mult_[(static_cast<size_t>(i) * dim_ + j) * dim_], s, dim_);
    }
  }
  return out;
}

Vec Algebra::basis_vector(int i) const {
  Vec v(dim_, 0);
  v[i] = 1;
  return v;
}

bool Algebra::is_commutative() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        if (c(i, j, k) != c(j, i, k)) return false;
  return true;
}

Algebra Algebra::subalgebra(const Mat& basis, const Vec& unit_in_ambient) const {
  const int r = basis.rows();
  LinearSolver solver(basis);
  if (solver.rank() != r) throw PreconditionError("subalgebra basis is not independent");
  std::vector<Elem> mult(static_cast<size_t>(r) * r * r);
  std::vector<Elem> coords;
  for (int i = 0; i < r; ++i) {
    Vec bi(basis.row(i), basis.row(i) + dim_);
    for (int j = 0; j < r; ++j) {
      Vec bj(basis.row(j), basis.row(j) + dim_);
      if (!solver.solve(mul(bi, bj), coords)) throw PreconditionError("subspace is not closed under multiplication");
      std::copy(coords.begin(), coords.end(), mult.begin() + (static_cast<size_t>(i) * r + j) * r);
    }
  }
  if (!solver.solve(unit_in_ambient, coords)) throw PreconditionError("unit lies outside the subspace");
  return Algebra(*field_, r, std::move(mult), coords);
}

// ------------------------------------------------------------ HopfAlgebra

HopfAlgebra::HopfAlgebra(Algebra alg, Mat comult, Mat counit, Mat antipode, std::string name)
    : Algebra(std::move(alg)),
      comult_(std::move(comult)),
      counit_(std::move(counit)),
      antipode_(std::move(antipode)),
      name_(std::move(name)) {
  const int d = dim_;
  if (comult_.rows() != d * d || comult_.cols() != d) throw PreconditionError("comultiplication must be dim^2 x dim");
  if (counit_.rows() != 1 || counit_.cols() != d) throw PreconditionError("counit must be 1 x dim");
  if (antipode_.rows() != d || antipode_.cols() != d) throw PreconditionError("antipode must be dim x dim");
  terms_.resize(d);
  for (int i = 0; i < d; ++i)
    for (int r = 0; r < d * d; ++r)
      if (comult_(r, i)) terms_[i].push_back({r / d, r % d, comult_(r, i)});
}

Elem HopfAlgebra::counit_of(const Vec& x) const {
  const Field& f = *field_;
  Elem s = 0;
  for (int i = 0; i < dim_; ++i) s = f.add(s, f.mul(counit_(0, i), x[i]));
  return s;
}

Vec HopfAlgebra::antipode_of(const Vec& x) const {
  Mat col(*field_, 1, dim_, x);
  Mat r = Mat::apply_rows(antipode_, col);
  return r.data();
}

std::string HopfAlgebra::fingerprint() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<std::uint64_t>(field_->p()));
  for (int c : field_->modulus()) mix(static_cast<std::uint64_t>(c));
  mix(static_cast<std::uint64_t>(dim_));
  for (Elem v : mult_) mix(v);
  for (Elem v : unit_) mix(v);
  for (Elem v : comult_.data()) mix(v);
  for (Elem v : counit_.data()) mix(v);
  for (Elem v : antipode_.data()) mix(v);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// ------------------------------------------------------------- validation

bool HopfVerdict::ok() const {
  for (auto& a : axioms)
    if (!a.pass) return false;
  return true;
}

const AxiomResult& HopfVerdict::operator[](const std::string& name) const {
  for (auto& a : axioms)
    if (a.name == name) return a;
  throw PreconditionError("unknown axiom " + name);
}

namespace {

std::string tuple_str(std::initializer_list<int> xs) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (int x : xs) {
    os << (first ? "" : ",") << x;
    first = false;
  }
  os << ")";
  return os.str();
}

// Column i of the comultiplication as a dim x dim matrix X with
// X(j,k) = coefficient of b_j (x) b_k.
Mat comult_square(const HopfAlgebra& h, int i) {
  const int d = h.dim();
  Mat x(h.field(), d, d);
  for (auto& t : h.coproduct(i)) x(t.left, t.right) = t.coeff;
  return x;
}

}  // namespace

HopfVerdict validate_hopf(const HopfAlgebra& h) {
  const Field& f = h.field();
  const int d = h.dim();
  HopfVerdict v;
  auto fail = [](AxiomResult& r, std::string w) {
    if (r.pass) {
      r.pass = false;
      r.witness = std::move(w);
    }
  };

  AxiomResult assoc{"associativity"};
  for (int i = 0; i < d && assoc.pass; ++i)
    for (int j = 0; j < d && assoc.pass; ++j) {
      Mat lhs(f, d, d);  // L_{b_i b_j}
      for (int l = 0; l < d; ++l)
        if (h.c(i, j, l)) lhs.add_scaled(h.left(l), h.c(i, j, l));
      Mat rhs = h.left(i) * h.left(j);
      if (!(lhs == rhs))
        for (int k = 0; k < d; ++k)
          for (int r = 0; r < d; ++r)
            if (lhs(r, k) != rhs(r, k)) {
              fail(assoc, tuple_str({i, j, k}));
              k = d;
              break;
            }
    }
  v.axioms.push_back(assoc);

  AxiomResult unit{"unit"};
  {
    Mat lu = h.left_mult(h.unit()), ru = h.right_mult(h.unit());
    for (int j = 0; j < d && unit.pass; ++j)
      for (int k = 0; k < d; ++k)
        if (lu(k, j) != (k == j) || ru(k, j) != (k == j)) {
          fail(unit, tuple_str({j}));
          break;
        }
  }
  v.axioms.push_back(unit);

  AxiomResult coassoc{"coassociativity"};
  for (int i = 0; i < d && coassoc.pass; ++i) {
    // (Delta (x) id) Delta and (id (x) Delta) Delta as d^3 vectors.
    std::vector<Elem> a(static_cast<size_t>(d) * d * d, 0), b(a.size(), 0);
    for (auto& t : h.coproduct(i)) {
      for (auto& s : h.coproduct(t.left)) {
        const size_t idx = (static_cast<size_t>(s.left) * d + s.right) * d + t.right;
        a[idx] = f.add(a[idx], f.mul(t.coeff, s.coeff));
      }
      for (auto& s : h.coproduct(t.right)) {
        const size_t idx = (static_cast<size_t>(t.left) * d + s.left) * d + s.right;
        b[idx] = f.add(b[idx], f.mul(t.coeff, s.coeff));
      }
    }
    if (a != b) fail(coassoc, tuple_str({i}));
  }
  v.axioms.push_back(coassoc);

  AxiomResult counit{"counit"};
  for (int i = 0; i < d && counit.pass; ++i) {
    Vec l(d, 0), r(d, 0);
    for (auto& t : h.coproduct(i)) {
      l[t.right] = f.add(l[t.right], f.mul(t.coeff, h.counit()(0, t.left)));
      r[t.left] = f.add(r[t.left], f.mul(t.coeff, h.counit()(0, t.right)));
    }
    if (l != h.basis_vector(i) || r != h.basis_vector(i)) fail(counit, tuple_str({i}));
  }
  v.axioms.push_back(counit);

  AxiomResult anti{"antipode"};
  for (int i = 0; i < d && anti.pass; ++i) {
    Vec l(d, 0), r(d, 0);
    for (auto& t : h.coproduct(i)) {
      Vec sl = h.antipode_of(h.basis_vector(t.left));
      Vec sr = h.antipode_of(h.basis_vector(t.right));
      Vec pl = h.mul(sl, h.basis_vector(t.right));
      Vec pr = h.mul(h.basis_vector(t.left), sr);
      axpy(f, l.data(), pl.data(), t.coeff, d);
      axpy(f, r.data(), pr.data(), t.coeff, d);
    }
    Vec expect = h.unit();
    scale_row(f, expect.data(), h.counit()(0, i), d);
    if (l != expect || r != expect) fail(anti, tuple_str({i}));
  }
  v.axioms.push_back(anti);

  AxiomResult comult_alg{"comult_multiplicative"};
  {
    std::vector<Mat> sq(d);
    for (int i = 0; i < d; ++i) sq[i] = comult_square(h, i);
    // Delta(1) = 1 (x) 1
    Mat one(f, d, d);
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) one(j, k) = f.mul(h.unit()[j], h.unit()[k]);
    Mat delta_unit(f, d, d);
    for (int i = 0; i < d; ++i)
      if (h.unit()[i]) delta_unit.add_scaled(sq[i], h.unit()[i]);
    if (!(delta_unit == one)) fail(comult_alg, "unit");
    std::vector<Mat> left_t(d);
    for (int i = 0; i < d; ++i) left_t[i] = h.left(i).transpose();
    for (int i = 0; i < d && comult_alg.pass; ++i)
      for (int j = 0; j < d && comult_alg.pass; ++j) {
        // Delta(b_i) Delta(b_j) = sum_t c L_a X_j L_b^T
        Mat prod(f, d, d);
        for (auto& t : h.coproduct(i)) prod.add_scaled(h.left(t.left) * sq[j] * left_t[t.right], t.coeff);
        Mat expect(f, d, d);
        for (int l = 0; l < d; ++l)
          if (h.c(i, j, l)) expect.add_scaled(sq[l], h.c(i, j, l));
        if (!(prod == expect)) fail(comult_alg, tuple_str({i, j}));
      }
  }
  v.axioms.push_back(comult_alg);

  AxiomResult counit_alg{"counit_multiplicative"};
  if (h.counit_of(h.unit()) != 1) fail(counit_alg, "unit");
  for (int i = 0; i < d && counit_alg.pass; ++i)
    for (int j = 0; j < d; ++j) {
      Elem lhs = 0;
      for (int l = 0; l < d; ++l) lhs = f.add(lhs, f.mul(h.c(i, j, l), h.counit()(0, l)));
      if (lhs != f.mul(h.counit()(0, i), h.counit()(0, j))) {
        fail(counit_alg, tuple_str({i, j}));
        break;
      }
    }
  v.axioms.push_back(counit_alg);

  AxiomResult cocomm{"cocommutativity"};
  for (int i = 0; i < d && cocomm.pass; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = j + 1; k < d; ++k)
        if (h.comult()(j * d + k, i) != h.comult()(k * d + j, i)) {
          fail(cocomm, tuple_str({i}));
          j = d;
          break;
        }
  v.axioms.push_back(cocomm);
  return v;
}

// ----------------------------------------------------------- constructors

namespace {

// Delta from the images of generators: X -> sum_t c L_a X L_b^T.
Mat apply_tensor_left(const Algebra& a, const Mat& x, const std::vector<HopfAlgebra::Term>& terms) {
  Mat out(a.field(), a.dim(), a.dim());
  for (auto& t : terms) out.add_scaled(a.left(t.left) * x * a.left(t.right).transpose(), t.coeff);
  return out;
}

// Primitive element x (a basis index): Delta(x) = x (x) 1 + 1 (x) x where 1 = b_0.
std::vector<HopfAlgebra::Term> primitive_terms(int x) { return {{x, 0, 1}, {0, x, 1}}; }

Mat squares_to_comult(const Field& f, const std::vector<Mat>& sq) {
  const int d = static_cast<int>(sq.size());
  Mat comult(f, d * d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) comult(j * d + k, i) = sq[i](j, k);
  return comult;
}

Algebra algebra_from_left(const Field& f, const std::vector<Mat>& left_of_basis, std::vector<std::string> labels) {
  const int d = static_cast<int>(left_of_basis.size());
  std::vector<Elem> mult(static_cast<size_t>(d) * d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) mult[(static_cast<size_t>(i) * d + j) * d + k] = left_of_basis[i](k, j);
  Vec unit(d, 0);
  unit[0] = 1;
  return Algebra(f, d, std::move(mult), std::move(unit), std::move(labels));
}

}  // namespace

HopfAlgebra group_algebra(const GroupTable& g, const Field& f) {
  const int n = g.order();
  std::vector<Elem> mult(static_cast<size_t>(n) * n * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mult[(static_cast<size_t>(a) * n + b) * n + g.mul(a, b)] = 1;
  Vec unit(n, 0);
  unit[g.identity()] = 1;
  Algebra alg(f, n, std::move(mult), std::move(unit), g.labels());
  Mat comult(f, n * n, n), counit(f, 1, n), antipode(f, n, n);
  for (int a = 0; a < n; ++a) {
    comult(a * n + a, a) = 1;
    counit(0, a) = 1;
    antipode(g.inv(a), a) = 1;
  }
  HopfAlgebra h(std::move(alg), std::move(comult), std::move(counit), std::move(antipode));
  h.set_group(std::make_shared<GroupTable>(g));
  return h;
}

HopfAlgebra truncated_poly(int p, const Field& f) {
  if (f.p() != p) throw PreconditionError("truncated polynomial algebra needs characteristic p");
  std::vector<Mat> left(p, Mat(f, p, p));
  Mat shift(f, p, p);
  for (int i = 0; i + 1 < p; ++i) shift(i + 1, i) = 1;
  left[0] = Mat::identity(f, p);
  for (int i = 1; i < p; ++i) left[i] = left[i - 1] * shift;
  std::vector<std::string> labels;
  for (int i = 0; i < p; ++i) labels.push_back(i == 0 ? "1" : i == 1 ? "t" : "t^" + std::to_string(i));
  Algebra alg = algebra_from_left(f, left, labels);
  std::vector<Mat> sq(p, Mat(f, p, p));
  sq[0](0, 0) = 1;
  for (int i = 1; i < p; ++i) sq[i] = apply_tensor_left(alg, sq[i - 1], primitive_terms(1));
  Mat counit(f, 1, p), antipode(f, p, p);
  counit(0, 0) = 1;
  for (int i = 0; i < p; ++i) antipode(i, i) = i % 2 ? f.neg(1) : 1;
  return HopfAlgebra(std::move(alg), squares_to_comult(f, sq), std::move(counit), std::move(antipode));
}

HopfAlgebra trivial_hopf(const Field& f) {
  Algebra alg(f, 1, {1}, {1}, {"1"});
  Mat one = Mat::identity(f, 1);
  HopfAlgebra h(std::move(alg), one, one, one, "k");
  h.set_group(std::make_shared<GroupTable>(GroupTable::trivial()));
  return h;
}

HopfAlgebra product_hopf(const HopfAlgebra& a, const HopfAlgebra& b) {
  if (&a.field() != &b.field()) throw PreconditionError("product of Hopf algebras over different fields");
  const Field& f = a.field();
  const int da = a.dim(), db = b.dim(), d = da * db;
  std::vector<Elem> mult(static_cast<size_t>(d) * d * d, 0);
  for (int i1 = 0; i1 < da; ++i1)
    for (int j1 = 0; j1 < da; ++j1)
      for (int k1 = 0; k1 < da; ++k1) {
        const Elem ca = a.c(i1, j1, k1);
        if (!ca) continue;
        for (int i2 = 0; i2 < db; ++i2)
          for (int j2 = 0; j2 < db; ++j2)
            for (int k2 = 0; k2 < db; ++k2) {
              const Elem cb = b.c(i2, j2, k2);
              if (!cb) continue;
              const size_t i = i1 * db + i2, j = j1 * db + j2, k = k1 * db + k2;
              mult[(i * d + j) * d + k] = f.mul(ca, cb);
            }
      }
  Vec unit(d, 0);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j) unit[i * db + j] = f.mul(a.unit()[i], b.unit()[j]);
  std::vector<std::string> labels;
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j) labels.push_back(a.labels()[i] + "*" + b.labels()[j]);
  Algebra alg(f, d, std::move(mult), std::move(unit), std::move(labels));
  Mat comult(f, d * d, d);
  for (int i1 = 0; i1 < da; ++i1)
    for (int i2 = 0; i2 < db; ++i2)
      for (auto& s : a.coproduct(i1))
        for (auto& t : b.coproduct(i2)) {
          const int l = s.left * db + t.left, r = s.right * db + t.right;
          Elem& slot = comult(l * d + r, i1 * db + i2);
          slot = f.add(slot, f.mul(s.coeff, t.coeff));
        }
  Mat counit = kron(a.counit(), b.counit());
  Mat antipode = kron(a.antipode(), b.antipode());
  HopfAlgebra h(std::move(alg), std::move(comult), std::move(counit), std::move(antipode));
  if (a.group() && b.group()) h.set_group(std::make_shared<GroupTable>(GroupTable::direct_product(*a.group(), *b.group())));
  return h;
}

HopfAlgebra u_sl2(const Field& f) {
  if (f.p() != 3) throw UnsupportedError("u(sl2) is only supported in characteristic 3");
  const int d = 27;
  auto idx = [](int a, int b, int c) { return 9 * a + 3 * b + c; };
  const Elem two = f.from_int(2);
  Mat le(f, d, d), lh(f, d, d), lf(f, d, d);
  // Adds coeff * e^a (poly in h) h^b f^c where hpoly = {c0, c1, c2}, reducing h^3 = h.
  auto add_hpoly = [&](Mat& m, int col, int a, std::vector<Elem> hp, int b, int c, Elem coeff) {
    if (a > 2 || c > 2) return;
    // multiply hp by h^b then reduce modulo h^3 - h
    std::vector<Elem> poly(hp.size() + b, 0);
    for (size_t i = 0; i < hp.size(); ++i) poly[i + b] = hp[i];
    for (int deg = static_cast<int>(poly.size()) - 1; deg >= 3; --deg) {
      poly[deg - 2] = f.add(poly[deg - 2], poly[deg]);
      poly[deg] = 0;
    }
    for (int k = 0; k < 3 && k < static_cast<int>(poly.size()); ++k)
      if (poly[k]) m(idx(a, k, c), col) = f.add(m(idx(a, k, c), col), f.mul(coeff, poly[k]));
  };
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        const int col = idx(a, b, c);
        // e * e^a h^b f^c
        add_hpoly(le, col, a + 1, {1}, b, c, 1);
        // h e^a = e^a (h + 2a)
        add_hpoly(lh, col, a, {f.from_int(2 * a), 1}, b, c, 1);
        // f e^a = e^a f - a e^{a-1} (h + a - 1);  f h^b = (h+2)^b f
        std::vector<Elem> shifted{1};
        for (int k = 0; k < b; ++k) {
          std::vector<Elem> next(shifted.size() + 1, 0);
          for (size_t i = 0; i < shifted.size(); ++i) {
            next[i + 1] = f.add(next[i + 1], shifted[i]);
            next[i] = f.add(next[i], f.mul(two, shifted[i]));
          }
          shifted = next;
        }
        add_hpoly(lf, col, a, shifted, 0, c + 1, 1);
        if (a > 0) add_hpoly(lf, col, a - 1, {f.from_int(a - 1), 1}, b, c, f.neg(f.from_int(a)));
      }
  std::vector<Mat> left(d);
  auto power = [&](const Mat& m, int k) {
    Mat r = Mat::identity(f, d);
    for (int i = 0; i < k; ++i) r = r * m;
    return r;
  };
  std::vector<std::string> labels;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        left[idx(a, b, c)] = power(le, a) * power(lh, b) * power(lf, c);
        std::string l;
        auto part = [&](const char* g, int k) {
          if (k == 0) return;
          l += g;
          if (k > 1) l += "^" + std::to_string(k);
        };
        part("e", a);
        part("h", b);
        part("f", c);
        labels.push_back(l.empty() ? "1" : l);
      }
  Algebra alg = algebra_from_left(f, left, labels);
  // Delta from primitivity of e, h, f and multiplicativity.
  const int ie = idx(1, 0, 0), ih = idx(0, 1, 0), iff = idx(0, 0, 1);
  std::vector<Mat> sq(d);
  Mat counit(f, 1, d), antipode(f, d, d);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        Mat x(f, d, d);
        x(0, 0) = 1;
        for (int k = 0; k < c; ++k) x = apply_tensor_left(alg, x, primitive_terms(iff));
        for (int k = 0; k < b; ++k) x = apply_tensor_left(alg, x, primitive_terms(ih));
        for (int k = 0; k < a; ++k) x = apply_tensor_left(alg, x, primitive_terms(ie));
        sq[idx(a, b, c)] = x;
        // s(e^a h^b f^c) = (-f)^c (-h)^b (-e)^a
        Mat s = power(lf, c) * power(lh, b) * power(le, a);
        const Elem sign = (a + b + c) % 2 ? f.neg(1) : 1;
        for (int k = 0; k < d; ++k) antipode(k, idx(a, b, c)) = f.mul(sign, s(k, 0));
      }
  counit(0, 0) = 1;
  return HopfAlgebra(std::move(alg), squares_to_comult(f, sq), std::move(counit), std::move(antipode), "u(sl2)");
}

// ------------------------------------------------------------ base change

Vec embed_vec(const Vec& v, const Field& from, const Field& to) {
  if (&from == &to) return v;
  const auto img = field_embedding(from, to);
  Vec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = img[v[i]];
  return out;
}

Mat embed_mat(const Mat& m, const Field& to) {
  if (m.field_ptr() == &to) return m;
  return Mat(to, m.rows(), m.cols(), embed_vec(m.data(), m.field(), to));
}

Algebra base_change(const Algebra& a, const Field& to) {
  return Algebra(to, a.dim(), embed_vec(a.structure_constants(), a.field(), to), embed_vec(a.unit(), a.field(), to),
                 a.labels());
}

HopfAlgebra base_change(const HopfAlgebra& h, const Field& to) {
  HopfAlgebra out(base_change(static_cast<const Algebra&>(h), to), embed_mat(h.comult(), to),
                  embed_mat(h.counit(), to), embed_mat(h.antipode(), to), h.name());
  if (h.group()) out.set_group(std::make_shared<GroupTable>(*h.group()));
  return out;
}

}  // namespace blockscope
