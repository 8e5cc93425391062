#include "blockscope/poly1.hpp"

#include <algorithm>
#include <random>

#include "blockscope/errors.hpp"

namespace blockscope::upoly {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly add(const Field& f, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    const Elem x = i < a.size() ? a[i] : 0;
    const Elem y = i < b.size() ? b[i] : 0;
    r[i] = f.add(x, y);
  }
  trim(r);
  return r;
}

Poly sub(const Field& f, const Poly& a, const Poly& b) {
  Poly nb(b.size());
  for (size_t i = 0; i < b.size(); ++i) nb[i] = f.neg(b[i]);
  return add(f, a, nb);
}

Poly mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

std::pair<Poly, Poly> divmod(const Field& f, const Poly& a, const Poly& b) {
  if (b.empty()) throw PreconditionError("polynomial division by zero");
  Poly r = a;
  trim(r);
  const int db = degree(b);
  if (degree(r) < db) return {{}, r};
  Poly q(r.size() - b.size() + 1, 0);
  const Elem lead_inv = f.inv(b.back());
  while (degree(r) >= db) {
    const int shift = degree(r) - db;
    const Elem c = f.mul(r.back(), lead_inv);
    q[shift] = c;
    for (int i = 0; i <= db; ++i) r[shift + i] = f.sub(r[shift + i], f.mul(c, b[i]));
    trim(r);
  }
  trim(q);
  return {q, r};
}

Poly rem(const Field& f, const Poly& a, const Poly& b) { return divmod(f, a, b).second; }

Poly monic(const Field& f, const Poly& a) {
  if (a.empty()) return a;
  Poly r = a;
  const Elem inv = f.inv(a.back());
  for (auto& c : r) c = f.mul(c, inv);
  return r;
}

Poly gcd(const Field& f, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, a);
}

Xgcd xgcd(const Field& f, const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    auto [q, r] = divmod(f, r0, r1);
    Poly s2 = sub(f, s0, mul(f, q, s1));
    Poly t2 = sub(f, t0, mul(f, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {r0, s0, t0};
  const Elem inv = f.inv(r0.back());
  for (auto* p : {&r0, &s0, &t0})
    for (auto& c : *p) c = f.mul(c, inv);
  return {r0, s0, t0};
}

Poly derivative(const Field& f, const Poly& a) {
  if (a.size() <= 1) return {};
  Poly d(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) d[i - 1] = f.mul(f.from_int(static_cast<long long>(i)), a[i]);
  trim(d);
  return d;
}

Poly powmod(const Field& f, const Poly& base, std::uint64_t e, const Poly& m) {
  Poly result{1};
  Poly b = rem(f, base, m);
  result = rem(f, result, m);
  while (e > 0) {
    if (e & 1) result = rem(f, mul(f, result, b), m);
    b = rem(f, mul(f, b, b), m);
    e >>= 1;
  }
  return result;
}

Elem eval(const Field& f, const Poly& a, Elem x) {
  Elem acc = 0;
  for (int i = degree(a); i >= 0; --i) acc = f.add(f.mul(acc, x), a[i]);
  return acc;
}

std::vector<Elem> roots(const Field& f, const Poly& a) {
  std::vector<Elem> out;
  for (int x = 0; x < f.size(); ++x)
    if (eval(f, a, static_cast<Elem>(x)) == 0) out.push_back(static_cast<Elem>(x));
  return out;
}

namespace {

// p-th root of a polynomial whose derivative vanishes (all exponents
// divisible by p). In F_q the p-th root of c is c^(q/p).
Poly pth_root(const Field& f, const Poly& a) {
  const int p = f.p();
  const long long root_exp = f.size() / p;
  Poly r(a.size() / p + 1, 0);
  for (size_t i = 0; i < a.size(); i += p) r[i / p] = f.pow(a[i], root_exp);
  trim(r);
  return r;
}

// Square-free decomposition: returns (g_i, i) with a = prod g_i^i.
std::vector<std::pair<Poly, int>> squarefree(const Field& f, const Poly& a0) {
  std::vector<std::pair<Poly, int>> out;
  Poly a = monic(f, a0);
  if (degree(a) <= 0) return out;
  const Poly d = derivative(f, a);
  if (d.empty()) {
    for (auto& [g, m] : squarefree(f, pth_root(f, a))) out.emplace_back(g, m * f.p());
    return out;
  }
  Poly c = gcd(f, a, d);
  Poly w = divmod(f, a, c).first;
  int i = 1;
  while (degree(w) > 0) {
    Poly y = gcd(f, w, c);
    Poly z = divmod(f, w, y).first;
    if (degree(z) > 0) out.emplace_back(monic(f, z), i);
    ++i;
    w = y;
    c = divmod(f, c, y).first;
  }
  if (degree(c) > 0) {
    for (auto& [g, m] : squarefree(f, pth_root(f, c))) out.emplace_back(g, m * f.p());
  }
  return out;
}

// Distinct-degree factorization of a squarefree monic polynomial.
std::vector<std::pair<Poly, int>> distinct_degree(const Field& f, Poly a) {
  std::vector<std::pair<Poly, int>> out;
  const Poly x{0, 1};
  Poly h = x;
  int d = 0;
  while (degree(a) >= 2 * (d + 1)) {
    ++d;
    h = powmod(f, h, static_cast<std::uint64_t>(f.size()), a);
    Poly g = gcd(f, a, sub(f, h, x));
    if (degree(g) > 0) {
      out.emplace_back(g, d);
      a = divmod(f, a, g).first;
      h = rem(f, h, a);
    }
  }
  if (degree(a) > 0) out.emplace_back(monic(f, a), degree(a));
  return out;
}

// Equal-degree splitting (Cantor-Zassenhaus); characteristic 2 uses the
// trace map.
void equal_degree(const Field& f, const Poly& a, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (degree(a) == d) {
    out.push_back(monic(f, a));
    return;
  }
  const int n = degree(a);
  std::uniform_int_distribution<int> dist(0, f.size() - 1);
  for (;;) {
    Poly r(n);
    for (auto& c : r) c = static_cast<Elem>(dist(rng));
    trim(r);
    if (degree(r) < 1) continue;
    Poly g;
    if (f.p() == 2) {
      // Trace: r + r^2 + ... + r^(2^(k d - 1)) with q = 2^k.
      const int steps = f.degree() * d;
      Poly t = rem(f, r, a), acc = t;
      for (int i = 1; i < steps; ++i) {
        t = rem(f, mul(f, t, t), a);
        acc = add(f, acc, t);
      }
      g = gcd(f, a, acc);
    } else {
      std::uint64_t qd = 1;
      for (int i = 0; i < d; ++i) qd *= static_cast<std::uint64_t>(f.size());
      Poly t = powmod(f, r, (qd - 1) / 2, a);
      g = gcd(f, a, sub(f, t, Poly{1}));
    }
    if (degree(g) > 0 && degree(g) < n) {
      equal_degree(f, g, d, rng, out);
      equal_degree(f, divmod(f, a, g).first, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Factor> factor(const Field& f, const Poly& a) {
  std::vector<Factor> out;
  std::mt19937_64 rng(0x5eed);
  for (auto& [sq, mult] : squarefree(f, a)) {
    for (auto& [part, d] : distinct_degree(f, sq)) {
      std::vector<Poly> pieces;
      equal_degree(f, part, d, rng, pieces);
      for (auto& p : pieces) out.push_back({p, mult});
    }
  }
  // Merge identical irreducibles that arrived from different square-free layers.
  std::sort(out.begin(), out.end(), [](const Factor& x, const Factor& y) {
    if (x.poly.size() != y.poly.size()) return x.poly.size() < y.poly.size();
    return x.poly < y.poly;
  });
  std::vector<Factor> merged;
  for (auto& fc : out) {
    if (!merged.empty() && merged.back().poly == fc.poly)
      merged.back().multiplicity += fc.multiplicity;
    else
      merged.push_back(fc);
  }
  return merged;
}

Mat eval_matrix(const Poly& a, const Mat& m) {
  const Field& f = m.field();
  Mat acc(f, m.rows(), m.cols());
  for (int i = degree(a); i >= 0; --i) {
    acc = acc * m;
    for (int j = 0; j < m.rows(); ++j) acc(j, j) = f.add(acc(j, j), a[i]);
  }
  return acc;
}

Poly minimal_polynomial(const Mat& m) {
  const Field& f = m.field();
  const int n = m.rows();
  if (n == 0) return {1};
  // Find the first linear dependency among I, M, M^2, ... (flattened).
  Subspace span(f, n * n);
  std::vector<Mat> powers;
  Mat cur = Mat::identity(f, n);
  for (int k = 0; k <= n; ++k) {
    Mat flat(f, 1, n * n, cur.data());
    if (span.contains(flat.row_span(0))) {
      // Solve cur = sum c_i M^i.
      Mat stacked(f, k, n * n);
      for (int i = 0; i < k; ++i) std::copy(powers[i].data().begin(), powers[i].data().end(), stacked.row(i));
      LinearSolver solver(stacked);
      std::vector<Elem> c;
      if (!solver.solve(flat.row_span(0), c)) throw InternalError("minimal polynomial solve failed");
      Poly mp(k + 1);
      for (int i = 0; i < k; ++i) mp[i] = f.neg(c[i]);
      mp[k] = 1;
      return mp;
    }
    span.add(flat.row_span(0));
    powers.push_back(cur);
    cur = cur * m;
  }
  throw InternalError("minimal polynomial degree exceeded dimension");
}

Poly local_minimal_polynomial(const Mat& m, const std::vector<Elem>& v) {
  const Field& f = m.field();
  const int n = m.rows();
  Subspace span(f, n);
  std::vector<std::vector<Elem>> krylov;
  std::vector<Elem> cur = v;
  Mat col(f, 1, n);
  for (int k = 0; k <= n; ++k) {
    if (span.contains(cur)) {
      Mat stacked(f, k, n);
      for (int i = 0; i < k; ++i) std::copy(krylov[i].begin(), krylov[i].end(), stacked.row(i));
      std::vector<Elem> c;
      if (k > 0) {
        LinearSolver solver(stacked);
        if (!solver.solve(cur, c)) throw InternalError("local minimal polynomial solve failed");
      }
      Poly mp(k + 1);
      for (int i = 0; i < k; ++i) mp[i] = f.neg(c[i]);
      mp[k] = 1;
      return mp;
    }
    span.add(cur);
    krylov.push_back(cur);
    std::copy(cur.begin(), cur.end(), col.row(0));
    Mat next = Mat::apply_rows(m, col);
    cur.assign(next.row(0), next.row(0) + n);
  }
  throw InternalError("local minimal polynomial degree exceeded dimension");
}

}  // namespace blockscope::upoly
