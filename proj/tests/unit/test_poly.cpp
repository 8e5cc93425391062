#include <random>

#include "blockscope/poly.hpp"
#include "doctest.h"

using namespace blockscope;

namespace {

PolyRing ring(const Field& f, std::vector<int> w) {
  PolyRing r;
  r.field = &f;
  r.weights = w;
  const char* names[] = {"x", "y", "w", "z", "u", "v"};
  for (size_t i = 0; i < w.size(); ++i) r.names.push_back(names[i]);
  return r;
}

Poly mono(const PolyRing& r, Monomial m, Elem c = 1) { return poly::from_terms(r, {{m, c}}); }

}  // namespace

TEST_CASE("term order and monomial enumeration") {
  auto r = ring(Field::get(2), {1, 1, 2});
  CHECK(r.greater({2, 0, 0}, {0, 0, 1}));  // same weight: the larger exponent in the last variable loses
  CHECK(r.greater({1, 1, 0}, {0, 2, 0}));
  CHECK(r.monomials_of_degree(2).size() == 4);  // x^2, xy, y^2, w
  CHECK(r.monomials_of_degree(3).size() == 6);
}

TEST_CASE("ideal dimension") {
  auto r = ring(Field::get(2), {1, 1});
  CHECK(ideal_dim(r, {mono(r, {1, 1})}) == 1);
  CHECK(ideal_dim(r, {}) == 2);
  CHECK(ideal_dim(r, irrelevant_ideal(r)) == 0);
  CHECK(ideal_dim(r, {poly::constant(r, 1)}) == -1);
  auto r3 = ring(Field::get(3), {2, 2, 2});
  // Nilpotent cone xz + y^2: dimension 2.
  Poly cone = poly::add(r3, mono(r3, {1, 0, 1}), mono(r3, {0, 2, 0}));
  CHECK(ideal_dim(r3, {cone}) == 2);
}

TEST_CASE("dimension is monotone along random ideal chains") {
  const Field& f = Field::get(3);
  auto r = ring(f, {1, 1, 1});
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Poly> gens;
    int prev = 3;
    for (int step = 0; step < 3; ++step) {
      std::vector<Term> ts;
      for (auto& m : r.monomials_of_degree(2)) ts.push_back({m, static_cast<Elem>(rng() % 3)});
      gens.push_back(poly::from_terms(r, ts));
      int d = ideal_dim(r, gens);
      CHECK(d <= prev);
      prev = d;
    }
  }
}

TEST_CASE("Groebner bases are bases of the ideal") {
  const Field& f = Field::get(5);
  auto r = ring(f, {1, 1, 1});
  Poly g1 = poly::add(r, mono(r, {2, 0, 0}), mono(r, {0, 1, 1}, 3));
  Poly g2 = poly::sub(r, mono(r, {1, 1, 0}), mono(r, {0, 0, 2}));
  auto gb = groebner(r, {g1, g2});
  CHECK(ideal_contains(r, gb, g1));
  CHECK(ideal_contains(r, gb, g2));
  // Random combinations reduce to zero.
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    Poly c1 = mono(r, {static_cast<int>(rng() % 2), static_cast<int>(rng() % 2), 0}, 1 + rng() % 4);
    Poly c2 = mono(r, {0, static_cast<int>(rng() % 3), 1}, 1 + rng() % 4);
    CHECK(ideal_contains(r, gb, poly::add(r, poly::mul(r, c1, g1), poly::mul(r, c2, g2))));
  }
  CHECK_FALSE(ideal_contains(r, gb, mono(r, {1, 0, 0})));
}

TEST_CASE("radical equality") {
  auto r = ring(Field::get(2), {1, 1});
  Poly x = poly::variable(r, 0), y = poly::variable(r, 1);
  CHECK(radical_equal(r, {poly::mul(r, x, x)}, {x}));
  CHECK_FALSE(radical_equal(r, {x}, {y}));
  CHECK(in_radical(r, {poly::mul(r, x, y), poly::add(r, x, y)}, x));
}

TEST_CASE("Proj connectivity") {
  const Field& f = Field::get(2);
  auto r2 = ring(f, {1, 1});
  Poly xy = mono(r2, {1, 1});
  auto c = proj_connected(r2, {xy});
  CHECK(c.verdict == Connectivity::disconnected);
  CHECK(c.components.size() == 2);
  auto r3 = ring(f, {1, 1, 2});
  CHECK(proj_connected(r3, {mono(r3, {1, 1, 0})}).verdict == Connectivity::connected);
  CHECK(proj_connected(r2, {}).verdict == Connectivity::connected);
  // x^2 + xy + y^2 is irreducible over F_2: not split into rational lines.
  Poly q = poly::from_terms(r2, {{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}});
  CHECK(proj_connected(r2, {q}).verdict == Connectivity::unsupported);
  // The nilpotent cone xz + y^2 is a complete intersection of dimension 2.
  auto r3p = ring(Field::get(3), {2, 2, 2});
  Poly cone = poly::from_terms(r3p, {{{1, 0, 1}, 1}, {{0, 2, 0}, 1}});
  auto cc = proj_connected(r3p, {cone});
  CHECK(cc.verdict == Connectivity::connected);
  CHECK(cc.reason.find("complete intersection") != std::string::npos);
  auto comps = linear_components(r2, {q, xy});
  REQUIRE(comps.has_value());
  CHECK(comps->size() == 1);  // only the origin
}

TEST_CASE("representation type") {
  CHECK(rep_type_classify(0) == RepType::simple_algebra);
  CHECK(rep_type_classify(1) == RepType::unknown_small);
  CHECK(rep_type_classify(2) == RepType::infinite_type);
  CHECK(rep_type_classify(3) == RepType::wild);
}
