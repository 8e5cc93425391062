#include <random>

#include "blockscope/errors.hpp"
#include "blockscope/field.hpp"
#include "blockscope/matrix.hpp"
#include "blockscope/poly1.hpp"
#include "doctest.h"

using namespace blockscope;

namespace {
Mat random_mat(const Field& f, int r, int c, std::mt19937& rng) {
  Mat m(f, r, c);
  std::uniform_int_distribution<int> d(0, f.size() - 1);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = static_cast<Elem>(d(rng));
  return m;
}
}  // namespace

TEST_CASE("field axioms hold exhaustively for small fields") {
  for (auto [p, e] : {std::pair{2, 1}, {2, 2}, {3, 1}, {3, 2}, {5, 1}, {2, 3}}) {
    const Field& f = Field::get(p, e);
    for (int a = 0; a < f.size(); ++a)
      for (int b = 0; b < f.size(); ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        CHECK(f.sub(f.add(a, b), b) == a);
        for (int c = 0; c < f.size(); c += 3)
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
    for (int a = 1; a < f.size(); ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  }
}

TEST_CASE("default moduli") {
  CHECK(Field::get(2, 2).modulus() == std::vector<int>{1, 1, 1});
  CHECK(Field::get(3, 2).modulus() == std::vector<int>{1, 0, 1});
  CHECK_THROWS_AS(Field::get(4, 1), PreconditionError);
  CHECK_THROWS_AS(Field::get(2, 11), UnsupportedError);
  CHECK_THROWS_AS(Field::get(3).inv(0), PreconditionError);
}

TEST_CASE("x^2+1 splits over F_9 but not F_3") {
  const Field& f3 = Field::get(3);
  const Field& f9 = Field::get(3, 2);
  CHECK(upoly::roots(f3, {1, 0, 1}).empty());
  CHECK(upoly::roots(f9, {1, 0, 1}).size() == 2);
}

TEST_CASE("field embedding is a ring homomorphism") {
  const Field& f4 = Field::get(2, 2);
  const Field& f16 = Field::get(2, 4);
  auto img = field_embedding(f4, f16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      CHECK(img[f4.mul(a, b)] == f16.mul(img[a], img[b]));
      CHECK(img[f4.add(a, b)] == f16.add(img[a], img[b]));
    }
  auto ext = extend_field(Field::get(2), 2);
  CHECK(ext.field->modulus() == std::vector<int>{1, 1, 1});
}

TEST_CASE("rref and kernel small example") {
  const Field& f = Field::get(3);
  Mat m = Mat::from_ints(f, {{1, 2, 0}, {2, 1, 0}, {0, 0, 1}});
  // rows 1 and 2 are proportional mod 3 (2*(1,2,0) = (2,1,0)).
  CHECK(rank(m) == 2);
  Mat k = kernel_basis(m);
  CHECK(k.rows() == 1);
  CHECK((m * k.transpose()).is_zero());
  Mat lk = left_kernel(m);
  CHECK(lk.rows() == 1);
  CHECK((lk * m).is_zero());
}

TEST_CASE("rank-nullity and rref idempotence on random matrices") {
  std::mt19937 rng(7);
  for (const Field* f : {&Field::get(2), &Field::get(3), &Field::get(2, 2), &Field::get(5)}) {
    for (int t = 0; t < 30; ++t) {
      const int r = 1 + rng() % 9, c = 1 + rng() % 9;
      Mat m = random_mat(*f, r, c, rng);
      Rref a = rref(m);
      CHECK(rref(a.m).m == a.m);
      Mat k = kernel_basis(m);
      CHECK(k.rows() + a.rank == c);
      if (k.rows()) CHECK((m * k.transpose()).is_zero());
      Mat lk = left_kernel(m);
      CHECK(lk.rows() + a.rank == r);
    }
  }
}

TEST_CASE("kron rank is multiplicative") {
  std::mt19937 rng(11);
  const Field& f = Field::get(3);
  for (int t = 0; t < 10; ++t) {
    Mat a = random_mat(f, 1 + rng() % 4, 1 + rng() % 4, rng);
    Mat b = random_mat(f, 1 + rng() % 4, 1 + rng() % 4, rng);
    CHECK(rank(kron(a, b)) == rank(a) * rank(b));
  }
}

TEST_CASE("subspace operations") {
  std::mt19937 rng(3);
  const Field& f = Field::get(2);
  Mat a = random_mat(f, 3, 6, rng), b = random_mat(f, 3, 6, rng);
  Subspace sa(a, 6), sb(b, 6);
  Subspace s = sum(sa, sb), i = intersect(sa, sb);
  CHECK(s.dim() + i.dim() == sa.dim() + sb.dim());
  CHECK(i.is_subspace_of(sa));
  CHECK(i.is_subspace_of(sb));
  CHECK(sa.is_subspace_of(s));
  for (int r = 0; r < a.rows(); ++r) CHECK(sa.contains(a.row_span(r)));
}

TEST_CASE("linear solver") {
  std::mt19937 rng(5);
  const Field& f = Field::get(5);
  Mat d = random_mat(f, 4, 7, rng);
  Mat x = random_mat(f, 3, 4, rng);
  Mat y = x * d;
  LinearSolver s(d);
  Mat sol = s.solve_rows(y);
  CHECK(sol * d == y);
}

TEST_CASE("polynomial factorization round-trips") {
  for (auto [p, e] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    const Field& f = Field::get(p, e);
    std::mt19937 rng(p * 10 + e);
    for (int t = 0; t < 20; ++t) {
      upoly::Poly a(2 + rng() % 8);
      for (auto& c : a) c = static_cast<Elem>(rng() % f.size());
      a.back() = 1;
      auto fs = upoly::factor(f, a);
      upoly::Poly prod{1};
      for (auto& fc : fs) {
        for (int m = 0; m < fc.multiplicity; ++m) prod = upoly::mul(f, prod, fc.poly);
        // irreducible: no proper factor of degree <= deg/2 among roots at least
        if (upoly::degree(fc.poly) > 1) CHECK(upoly::roots(f, fc.poly).empty());
      }
      upoly::Poly am = a;
      upoly::trim(am);
      CHECK(prod == am);
    }
  }
}

TEST_CASE("minimal polynomial annihilates") {
  std::mt19937 rng(9);
  const Field& f = Field::get(3);
  for (int t = 0; t < 10; ++t) {
    Mat m = random_mat(f, 5, 5, rng);
    auto mp = upoly::minimal_polynomial(m);
    CHECK(upoly::eval_matrix(mp, m).is_zero());
  }
  Mat n = Mat::from_ints(f, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  CHECK(upoly::minimal_polynomial(n) == upoly::Poly{0, 0, 0, 1});
}
