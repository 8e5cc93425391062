#include "blockscope/poly.hpp"

#include <algorithm>
#include <functional>

#include "blockscope/errors.hpp"
#include "blockscope/matrix.hpp"

namespace blockscope {

int PolyRing::weight(const Monomial& m) const {
  int w = 0;
  for (int i = 0; i < nvars(); ++i) w += m[i] * weights[i];
  return w;
}

bool PolyRing::greater(const Monomial& a, const Monomial& b) const {
  const int wa = weight(a), wb = weight(b);
  if (wa != wb) return wa > wb;
  for (int i = nvars() - 1; i >= 0; --i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

PolyRing PolyRing::with_extra(const std::string& name) const {
  PolyRing r = *this;
  r.weights.push_back(1);
  r.names.push_back(name);
  return r;
}

std::vector<Monomial> PolyRing::monomials_of_degree(int d) const {
  std::vector<Monomial> out;
  Monomial cur(nvars(), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == nvars()) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (int e = 0; e * weights[i] <= left; ++e) {
      cur[i] = e;
      rec(i + 1, left - e * weights[i]);
    }
    cur[i] = 0;
  };
  if (d >= 0) rec(0, d);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return greater(a, b); });
  return out;
}

bool Poly::operator==(const Poly& o) const {
  if (terms.size() != o.terms.size()) return false;
  for (size_t i = 0; i < terms.size(); ++i)
    if (terms[i].m != o.terms[i].m || terms[i].c != o.terms[i].c) return false;
  return true;
}

namespace poly {

Poly constant(const PolyRing& r, Elem c) {
  Poly p;
  if (c) p.terms.push_back({Monomial(r.nvars(), 0), c});
  return p;
}

Poly variable(const PolyRing& r, int i) {
  Monomial m(r.nvars(), 0);
  m[i] = 1;
  return Poly{{{m, 1}}};
}

Poly from_terms(const PolyRing& r, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return r.greater(a.m, b.m); });
  Poly p;
  for (auto& t : terms) {
    if (!p.terms.empty() && p.terms.back().m == t.m)
      p.terms.back().c = r.field->add(p.terms.back().c, t.c);
    else
      p.terms.push_back(t);
    if (p.terms.back().c == 0) p.terms.pop_back();
  }
  return p;
}

namespace {
Poly combine(const PolyRing& r, const Poly& a, const Poly& b, Elem cb) {
  const Field& f = *r.field;
  Poly out;
  size_t i = 0, j = 0;
  while (i < a.terms.size() || j < b.terms.size()) {
    if (j == b.terms.size() || (i < a.terms.size() && r.greater(a.terms[i].m, b.terms[j].m))) {
      out.terms.push_back(a.terms[i++]);
    } else if (i == a.terms.size() || r.greater(b.terms[j].m, a.terms[i].m)) {
      out.terms.push_back({b.terms[j].m, f.mul(cb, b.terms[j].c)});
      ++j;
    } else {
      Elem c = f.add(a.terms[i].c, f.mul(cb, b.terms[j].c));
      if (c) out.terms.push_back({a.terms[i].m, c});
      ++i;
      ++j;
    }
  }
  return out;
}
}  // namespace

Poly add(const PolyRing& r, const Poly& a, const Poly& b) { return combine(r, a, b, 1); }
Poly sub(const PolyRing& r, const Poly& a, const Poly& b) { return combine(r, a, b, r.field->neg(1)); }

Poly scale(const PolyRing& r, const Poly& a, Elem c) {
  if (!c) return {};
  Poly out = a;
  for (auto& t : out.terms) t.c = r.field->mul(t.c, c);
  return out;
}

Poly mul_term(const PolyRing& r, const Poly& a, const Monomial& m, Elem c) {
  Poly out;
  if (!c) return out;
  for (auto& t : a.terms) {
    Monomial mm = t.m;
    for (int i = 0; i < r.nvars(); ++i) mm[i] += m[i];
    out.terms.push_back({mm, r.field->mul(t.c, c)});
  }
  return out;
}

Poly mul(const PolyRing& r, const Poly& a, const Poly& b) {
  Poly out;
  for (auto& t : b.terms) out = add(r, out, mul_term(r, a, t.m, t.c));
  return out;
}

Poly monic(const PolyRing& r, const Poly& a) {
  if (a.is_zero()) return a;
  return scale(r, a, r.field->inv(a.lead().c));
}

bool is_homogeneous(const PolyRing& r, const Poly& a) {
  for (auto& t : a.terms)
    if (r.weight(t.m) != r.weight(a.lead().m)) return false;
  return true;
}

Poly widen(const Poly& a, int nvars) {
  Poly out = a;
  for (auto& t : out.terms) t.m.resize(nvars, 0);
  return out;
}

std::string to_string(const PolyRing& r, const Poly& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (size_t k = 0; k < a.terms.size(); ++k) {
    const Term& t = a.terms[k];
    std::string mono;
    for (int i = 0; i < r.nvars(); ++i) {
      if (!t.m[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += r.names[i];
      if (t.m[i] > 1) mono += "^" + std::to_string(t.m[i]);
    }
    std::string coef = r.field->format(t.c);
    if (coef.find('+') != std::string::npos) coef = "(" + coef + ")";
    if (k) s += " + ";
    if (mono.empty())
      s += coef;
    else if (t.c == 1)
      s += mono;
    else
      s += coef + "*" + mono;
  }
  return s;
}

}  // namespace poly

namespace {

bool divides(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
  return m;
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (size_t i = 0; i < a.size(); ++i) m[i] = a[i] - b[i];
  return m;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

bool is_constant(const Poly& p) {
  return !p.is_zero() && std::all_of(p.lead().m.begin(), p.lead().m.end(), [](int e) { return e == 0; });
}

}  // namespace

Poly normal_form(const PolyRing& r, const Poly& f, const std::vector<Poly>& gb) {
  const Field& fl = *r.field;
  Poly p = f, rem;
  while (!p.is_zero()) {
    const Term lt = p.lead();
    const Poly* g = nullptr;
    for (auto& q : gb)
      if (divides(q.lead().m, lt.m)) {
        g = &q;
        break;
      }
    if (g) {
      Elem c = fl.neg(fl.div(lt.c, g->lead().c));
      p = poly::add(r, p, poly::mul_term(r, *g, quotient(lt.m, g->lead().m), c));
    } else {
      rem.terms.push_back(lt);
      p.terms.erase(p.terms.begin());
    }
  }
  return rem;
}

std::vector<Poly> groebner(const PolyRing& r, std::vector<Poly> gens) {
  std::vector<Poly> g;
  for (auto& p : gens) {
    Poly h = poly::monic(r, normal_form(r, p, g));
    if (!h.is_zero()) g.push_back(h);
  }
  struct Pair {
    size_t i, j;
    Monomial l;
  };
  std::vector<Pair> pairs;
  for (size_t j = 0; j < g.size(); ++j)
    for (size_t i = 0; i < j; ++i) pairs.push_back({i, j, lcm(g[i].lead().m, g[j].lead().m)});
  while (!pairs.empty()) {
    // Normal selection strategy: smallest lcm first.
    auto it = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) { return r.greater(b.l, a.l); });
    Pair pr = *it;
    pairs.erase(it);
    if (coprime(g[pr.i].lead().m, g[pr.j].lead().m)) continue;
    Poly s = poly::sub(r, poly::mul_term(r, g[pr.i], quotient(pr.l, g[pr.i].lead().m), 1),
                       poly::mul_term(r, g[pr.j], quotient(pr.l, g[pr.j].lead().m), 1));
    Poly h = poly::monic(r, normal_form(r, s, g));
    if (h.is_zero()) continue;
    if (is_constant(h)) return {poly::constant(r, 1)};
    for (size_t i = 0; i < g.size(); ++i) pairs.push_back({i, g.size(), lcm(g[i].lead().m, h.lead().m)});
    g.push_back(h);
  }
  // Minimalize and reduce.
  std::vector<Poly> min;
  for (size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j || !divides(g[j].lead().m, g[i].lead().m)) continue;
      redundant = g[j].lead().m != g[i].lead().m || j < i;
    }
    if (!redundant) min.push_back(g[i]);
  }
  std::vector<Poly> red;
  for (size_t i = 0; i < min.size(); ++i) {
    std::vector<Poly> others;
    for (size_t j = 0; j < min.size(); ++j)
      if (j != i) others.push_back(min[j]);
    Poly tail = min[i];
    Term lt = tail.lead();
    tail.terms.erase(tail.terms.begin());
    Poly h = normal_form(r, tail, others);
    h.terms.insert(h.terms.begin(), lt);
    red.push_back(h);
  }
  std::sort(red.begin(), red.end(), [&](const Poly& a, const Poly& b) { return r.greater(b.lead().m, a.lead().m); });
  return red;
}

bool ideal_contains(const PolyRing& r, const std::vector<Poly>& gb, const Poly& f) {
  return normal_form(r, f, gb).is_zero();
}

int ideal_dim(const PolyRing& r, const std::vector<Poly>& gens) {
  auto gb = groebner(r, gens);
  for (auto& p : gb)
    if (is_constant(p)) return -1;
  const int n = r.nvars();
  if (n > 20) throw UnsupportedError("too many variables for the independent-set search");
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool independent = true;
    for (auto& p : gb) {
      bool inside = true;
      for (int i = 0; i < n; ++i)
        if (p.lead().m[i] && !(mask >> i & 1u)) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

bool in_radical(const PolyRing& r, const std::vector<Poly>& gens, const Poly& f) {
  if (f.is_zero()) return true;
  PolyRing rt = r.with_extra("_t");
  const int n = rt.nvars();
  std::vector<Poly> g;
  for (auto& p : gens) g.push_back(poly::widen(p, n));
  Poly tf = poly::mul(rt, poly::variable(rt, n - 1), poly::widen(f, n));
  g.push_back(poly::sub(rt, poly::constant(rt, 1), tf));
  auto gb = groebner(rt, g);
  return gb.size() == 1 && is_constant(gb[0]);
}

bool radical_equal(const PolyRing& r, const std::vector<Poly>& a, const std::vector<Poly>& b) {
  for (auto& p : a)
    if (!in_radical(r, b, p)) return false;
  for (auto& p : b)
    if (!in_radical(r, a, p)) return false;
  return true;
}

std::vector<Poly> irrelevant_ideal(const PolyRing& r) {
  std::vector<Poly> out;
  for (int i = 0; i < r.nvars(); ++i) out.push_back(poly::variable(r, i));
  return out;
}

namespace {

// A linear ideal: per weight group, a basis (RREF rows) of the linear forms.
struct LinearIdeal {
  std::vector<Mat> rows;  // one per group, columns = group variables
  int rank() const {
    int s = 0;
    for (auto& m : rows) s += m.rows();
    return s;
  }
};

std::vector<Mat> all_subspaces(const Field& f, int m) {
  std::vector<Mat> out;
  for (int k = 0; k <= m; ++k) {
    // Pivot sets of size k.
    std::vector<int> piv(k);
    std::function<void(int, int)> choose = [&](int idx, int start) {
      if (idx == k) {
        std::vector<std::pair<int, int>> free;
        for (int i = 0; i < k; ++i)
          for (int j = piv[i] + 1; j < m; ++j)
            if (std::find(piv.begin(), piv.end(), j) == piv.end()) free.push_back({i, j});
        long long total = 1;
        for (size_t t = 0; t < free.size(); ++t) total *= f.size();
        for (long long code = 0; code < total; ++code) {
          Mat b(f, k, m);
          for (int i = 0; i < k; ++i) b(i, piv[i]) = 1;
          long long c = code;
          for (auto& [i, j] : free) {
            b(i, j) = static_cast<Elem>(c % f.size());
            c /= f.size();
          }
          out.push_back(b);
        }
        return;
      }
      for (int s = start; s < m; ++s) {
        piv[idx] = s;
        choose(idx + 1, s + 1);
      }
    };
    choose(0, 0);
  }
  return out;
}

long long count_subspaces_bound(int q, int m) {
  long long s = 0;
  for (int k = 0; k <= m; ++k) {
    long long t = 1;
    for (int i = 0; i < k * (m - k) + k; ++i) t *= q;
    s += t;
  }
  return s;
}

std::vector<Poly> linear_gens(const PolyRing& r, const std::vector<std::vector<int>>& groups, const LinearIdeal& li) {
  std::vector<Poly> out;
  for (size_t g = 0; g < groups.size(); ++g)
    for (int i = 0; i < li.rows[g].rows(); ++i) {
      std::vector<Term> ts;
      for (size_t j = 0; j < groups[g].size(); ++j)
        if (li.rows[g](i, static_cast<int>(j))) {
          Monomial m(r.nvars(), 0);
          m[groups[g][j]] = 1;
          ts.push_back({m, li.rows[g](i, static_cast<int>(j))});
        }
      out.push_back(poly::from_terms(r, ts));
    }
  return out;
}

bool linear_subset(const LinearIdeal& a, const LinearIdeal& b) {
  for (size_t g = 0; g < a.rows.size(); ++g) {
    if (a.rows[g].rows() == 0) continue;
    Subspace s(b.rows[g], a.rows[g].cols());
    if (!s.contains_rows(a.rows[g])) return false;
  }
  return true;
}

struct LinearSearch {
  std::vector<std::vector<int>> groups;
  std::vector<LinearIdeal> minimal;
};

std::optional<LinearSearch> search_linear(const PolyRing& r, const std::vector<Poly>& gens) {
  const Field& f = *r.field;
  if (r.nvars() > 4) return std::nullopt;
  LinearSearch ls;
  std::vector<int> ws = r.weights;
  std::sort(ws.begin(), ws.end());
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
  for (int w : ws) {
    std::vector<int> g;
    for (int i = 0; i < r.nvars(); ++i)
      if (r.weights[i] == w) g.push_back(i);
    ls.groups.push_back(g);
  }
  long long total = 1;
  for (auto& g : ls.groups) total *= count_subspaces_bound(f.size(), static_cast<int>(g.size()));
  if (total > 200000) return std::nullopt;
  std::vector<std::vector<Mat>> per_group;
  for (auto& g : ls.groups) per_group.push_back(all_subspaces(f, static_cast<int>(g.size())));
  std::vector<LinearIdeal> containing;
  std::vector<size_t> idx(ls.groups.size(), 0);
  for (;;) {
    LinearIdeal li;
    for (size_t g = 0; g < ls.groups.size(); ++g) li.rows.push_back(per_group[g][idx[g]]);
    auto gb = groebner(r, linear_gens(r, ls.groups, li));
    bool ok = true;
    for (auto& p : gens)
      if (!ideal_contains(r, gb, p)) {
        ok = false;
        break;
      }
    if (ok) containing.push_back(li);
    size_t g = 0;
    while (g < idx.size() && ++idx[g] == per_group[g].size()) idx[g++] = 0;
    if (g == idx.size()) break;
  }
  for (size_t i = 0; i < containing.size(); ++i) {
    bool minimal = true;
    for (size_t j = 0; j < containing.size() && minimal; ++j)
      if (j != i && containing[j].rank() < containing[i].rank() && linear_subset(containing[j], containing[i]))
        minimal = false;
    if (minimal) ls.minimal.push_back(containing[i]);
  }
  if (ls.minimal.empty()) return std::nullopt;
  // rad(I) must equal the intersection, i.e. rad of the product.
  std::vector<Poly> product{poly::constant(r, 1)};
  for (auto& li : ls.minimal) {
    std::vector<Poly> next;
    for (auto& a : product)
      for (auto& b : linear_gens(r, ls.groups, li)) next.push_back(poly::mul(r, a, b));
    product = next;
  }
  if (!radical_equal(r, gens, product)) return std::nullopt;
  return ls;
}

}  // namespace

std::optional<std::vector<std::vector<Poly>>> linear_components(const PolyRing& r, const std::vector<Poly>& gens) {
  auto ls = search_linear(r, gens);
  if (!ls) return std::nullopt;
  std::vector<std::vector<Poly>> out;
  for (auto& li : ls->minimal) out.push_back(linear_gens(r, ls->groups, li));
  return out;
}

std::string to_string(Connectivity c) {
  switch (c) {
    case Connectivity::connected: return "connected";
    case Connectivity::disconnected: return "disconnected";
    default: return "unsupported";
  }
}

ProjConnectivity proj_connected(const PolyRing& r, const std::vector<Poly>& gens) {
  ProjConnectivity out;
  auto ls = search_linear(r, gens);
  if (!ls) {
    // A complete intersection of dimension >= 2 has depth >= 2, so its
    // punctured spectrum, and hence Proj, is connected.
    std::vector<Poly> minimal;
    for (size_t i = 0; i < gens.size(); ++i) {
      std::vector<Poly> others = minimal;
      others.insert(others.end(), gens.begin() + static_cast<long>(i) + 1, gens.end());
      if (gens[i].terms.empty() || ideal_contains(r, groebner(r, others), gens[i])) continue;
      minimal.push_back(gens[i]);
    }
    const int c = static_cast<int>(minimal.size());
    const int d = ideal_dim(r, gens);
    if (d >= 2 && d == r.nvars() - c) {
      out.verdict = Connectivity::connected;
      out.reason = "complete intersection of dimension " + std::to_string(d);
      return out;
    }
    out.reason = r.nvars() > 4 ? "more than 4 variables" : "radical is not an intersection of rational linear primes";
    return out;
  }
  std::vector<LinearIdeal> comps;
  for (auto& li : ls->minimal)
    if (li.rank() < r.nvars()) comps.push_back(li);
  for (auto& li : comps) out.components.push_back(linear_gens(r, ls->groups, li));
  const int n = static_cast<int>(comps.size());
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int rk = 0;
      for (size_t g = 0; g < ls->groups.size(); ++g) rk += rank(Mat::vstack(comps[i].rows[g], comps[j].rows[g]));
      if (rk < r.nvars()) parent[find(i)] = find(j);
    }
  int roots = 0;
  for (int i = 0; i < n; ++i) roots += find(i) == i;
  out.verdict = roots <= 1 ? Connectivity::connected : Connectivity::disconnected;
  if (n == 0) out.reason = "Proj is empty";
  return out;
}

RepType rep_type_classify(int d) {
  if (d <= 0) return RepType::simple_algebra;
  if (d == 1) return RepType::unknown_small;
  if (d == 2) return RepType::infinite_type;
  return RepType::wild;
}

std::string to_string(RepType t) {
  switch (t) {
    case RepType::simple_algebra: return "simple_algebra";
    case RepType::unknown_small: return "unknown_small";
    case RepType::infinite_type: return "infinite_type";
    default: return "wild";
  }
}

}  // namespace blockscope
