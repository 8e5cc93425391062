#include "blockscope/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "blockscope/errors.hpp"

namespace blockscope {

namespace {

using Poly = std::vector<int>;  // coefficients mod p, low-to-high

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int mod(long long v, int p) {
  long long r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

int inv_mod(int a, int p) {
  for (int x = 1; x < p; ++x)
    if ((a * x) % p == 1) return x;
  throw InternalError("no inverse mod p");
}

// Remainder of a modulo b over F_p; b nonzero.
Poly poly_rem(Poly a, const Poly& b, int p) {
  trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  const int lead_inv = inv_mod(b.back(), p);
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    const int c = (a.back() * lead_inv) % p;
    for (int i = 0; i <= db; ++i) a[shift + i] = mod(a[shift + i] - c * b[i], p);
    trim(a);
  }
  return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& m, int p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return poly_rem(r, m, p);
}

Poly digits(int v, int p, int n) {
  Poly c(n, 0);
  for (int i = 0; i < n; ++i) {
    c[i] = v % p;
    v /= p;
  }
  return c;
}

int encode(const Poly& c, int p) {
  int v = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) v = v * p + c[i];
  return v;
}

struct Registry {
  std::mutex mu;
  std::map<std::pair<int, Poly>, std::unique_ptr<Field>> fields;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

std::string FieldSpec::to_string() const {
  std::ostringstream os;
  os << "F_" << p;
  if (e > 1) {
    os << "^" << e << "[";
    for (size_t i = 0; i < modulus.size(); ++i) os << (i ? "," : "") << modulus[i];
    os << "]";
  }
  return os.str();
}

bool is_prime_number(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible_mod_p(int p, const std::vector<int>& poly) {
  Poly f = poly;
  trim(f);
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg < 1) return false;
  if (deg == 1) return true;
  // Trial division by every monic polynomial of degree <= deg/2.
  for (int d = 1; d <= deg / 2; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int v = 0; v < count; ++v) {
      Poly g = digits(v, p, d);
      g.push_back(1);
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

Field::Field(int p, std::vector<int> modulus)
    : p_(p), e_(static_cast<int>(modulus.size()) - 1), q_(1), modulus_(std::move(modulus)) {
  for (int i = 0; i < e_; ++i) q_ *= p_;
  const size_t n = static_cast<size_t>(q_);
  add_.resize(n * n);
  mul_.resize(n * n);
  neg_.resize(n);
  inv_.assign(n, 0);
  std::vector<Poly> polys(n);
  for (int a = 0; a < q_; ++a) polys[a] = digits(a, p_, e_);
  for (int a = 0; a < q_; ++a) {
    for (int b = 0; b < q_; ++b) {
      Poly s(e_);
      for (int i = 0; i < e_; ++i) s[i] = (polys[a][i] + polys[b][i]) % p_;
      add_[a * n + b] = static_cast<Elem>(encode(s, p_));
    }
    Poly ng(e_);
    for (int i = 0; i < e_; ++i) ng[i] = mod(-polys[a][i], p_);
    neg_[a] = static_cast<Elem>(encode(ng, p_));
  }
  for (int a = 0; a < q_; ++a) {
    for (int b = a; b < q_; ++b) {
      Poly pa = polys[a], pb = polys[b];
      trim(pa);
      trim(pb);
      Poly r = poly_mul_mod(pa, pb, modulus_, p_);
      r.resize(e_, 0);
      const Elem v = static_cast<Elem>(encode(r, p_));
      mul_[a * n + b] = v;
      mul_[b * n + a] = v;
    }
  }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_[a * n + b] == 1) {
        inv_[a] = static_cast<Elem>(b);
        break;
      }
}

const Field& Field::with_modulus(int p, const std::vector<int>& modulus) {
  if (!is_prime_number(p) || p > 31) throw PreconditionError("characteristic must be a prime <= 31");
  Poly m = modulus;
  for (auto& c : m) c = mod(c, p);
  trim(m);
  if (m.size() < 2 || m.back() != 1) throw PreconditionError("field modulus must be monic of degree >= 1");
  if (!is_irreducible_mod_p(p, m)) throw PreconditionError("field modulus is reducible");
  long long q = 1;
  for (size_t i = 1; i < m.size(); ++i) q *= p;
  if (q > kMaxOrder) throw UnsupportedError("field order exceeds " + std::to_string(kMaxOrder));
  Registry& reg = registry();
  std::lock_guard<std::mutex> lock(reg.mu);
  auto key = std::make_pair(p, m);
  auto it = reg.fields.find(key);
  if (it != reg.fields.end()) return *it->second;
  auto* f = new Field(p, m);
  reg.fields.emplace(key, std::unique_ptr<Field>(f));
  return *f;
}

const Field& Field::get(int p, int e) {
  if (!is_prime_number(p) || p > 31) throw PreconditionError("characteristic must be a prime <= 31");
  if (e < 1) throw PreconditionError("extension degree must be >= 1");
  if (e == 1) return with_modulus(p, {0, 1});
  long long count = 1;
  for (int i = 0; i < e; ++i) count *= p;
  if (count > kMaxOrder) throw UnsupportedError("field order exceeds " + std::to_string(kMaxOrder));
  for (int v = 0; v < count; ++v) {
    Poly m = digits(v, p, e);
    m.push_back(1);
    if (is_irreducible_mod_p(p, m)) return with_modulus(p, m);
  }
  throw InternalError("no irreducible modulus found");
}

const Field& Field::from_spec(const FieldSpec& spec) {
  if (spec.modulus.empty()) return get(spec.p, spec.e);
  return with_modulus(spec.p, spec.modulus);
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw PreconditionError("division by zero in finite field");
  return inv_[a];
}

Elem Field::pow(Elem a, long long n) const {
  Elem r = 1, b = a;
  if (n < 0) {
    b = inv(a);
    n = -n;
  }
  while (n > 0) {
    if (n & 1) r = mul(r, b);
    b = mul(b, b);
    n >>= 1;
  }
  return r;
}

Elem Field::from_int(long long v) const { return static_cast<Elem>(mod(v, p_)); }

Elem Field::generator() const { return e_ == 1 ? 1 : static_cast<Elem>(p_); }

std::vector<int> Field::coeffs(Elem a) const { return digits(a, p_, e_); }

Elem Field::from_coeffs(const std::vector<int>& c) const {
  Poly d(e_, 0);
  for (size_t i = 0; i < c.size() && static_cast<int>(i) < e_; ++i) d[i] = mod(c[i], p_);
  return static_cast<Elem>(encode(d, p_));
}

std::string Field::format(Elem a) const {
  if (e_ == 1) return std::to_string(a);
  Poly c = coeffs(a);
  std::string out;
  for (int i = e_ - 1; i >= 0; --i) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c[i]);
    } else {
      if (c[i] != 1) out += std::to_string(c[i]) + "*";
      out += "a";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

std::vector<Elem> field_embedding(const Field& from, const Field& to) {
  if (from.p() != to.p() || to.degree() % from.degree() != 0)
    throw PreconditionError("no embedding between these fields");
  // Image of the generator: first root (in encoding order) of from's modulus.
  const auto& m = from.modulus();
  Elem root = 0;
  bool found = false;
  for (int x = 0; x < to.size() && !found; ++x) {
    Elem acc = 0;
    for (int i = static_cast<int>(m.size()) - 1; i >= 0; --i)
      acc = to.add(to.mul(acc, static_cast<Elem>(x)), to.from_int(m[i]));
    if (acc == 0) {
      root = static_cast<Elem>(x);
      found = true;
    }
  }
  if (!found) throw InternalError("modulus has no root in extension field");
  std::vector<Elem> image(from.size());
  for (int a = 0; a < from.size(); ++a) {
    const auto c = from.coeffs(static_cast<Elem>(a));
    Elem acc = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
      acc = to.add(to.mul(acc, root), to.from_int(c[i]));
    image[a] = acc;
  }
  return image;
}

FieldExtension extend_field(const Field& f, int d) {
  if (d < 1) throw PreconditionError("extension degree must be >= 1");
  FieldExtension ext;
  ext.field = d == 1 ? &f : &Field::get(f.p(), f.degree() * d);
  ext.image = d == 1 ? std::vector<Elem>() : field_embedding(f, *ext.field);
  if (d == 1) {
    ext.image.resize(f.size());
    for (int a = 0; a < f.size(); ++a) ext.image[a] = static_cast<Elem>(a);
  }
  Elem power = 1;
  for (int i = 0; i < f.degree(); ++i) {
    ext.embedding.push_back(ext.field->coeffs(ext.image[power]));
    power = f.mul(power, f.generator());
  }
  return ext;
}

}  // namespace blockscope
