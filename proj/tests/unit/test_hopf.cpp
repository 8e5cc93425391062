#include "blockscope/errors.hpp"
#include "blockscope/hopf.hpp"
#include "doctest.h"

using namespace blockscope;

TEST_CASE("group constructors") {
  CHECK(GroupTable::dihedral(4).order() == 8);
  CHECK_FALSE(GroupTable::dihedral(4).is_abelian());
  CHECK_FALSE(GroupTable::quaternion().is_abelian());
  CHECK(GroupTable::quaternion().center().size() == 2);
  CHECK(GroupTable::symmetric3().conjugacy_classes().size() == 3);
  CHECK(GroupTable::dihedral(4).conjugacy_classes().size() == 5);
  // D8 has 10 subgroups including itself.
  CHECK(GroupTable::dihedral(4).subgroups().size() == 10);
  CHECK(GroupTable::quaternion().subgroups().size() == 6);
  CHECK(GroupTable::symmetric3().normal_subgroups().size() == 3);
}

TEST_CASE("corrupted Cayley table is rejected") {
  auto g = GroupTable::cyclic(3);
  auto t = g.table();
  std::swap(t[4], t[5]);
  CHECK_THROWS_AS(GroupTable(3, t), PreconditionError);
}

TEST_CASE("quotient of S3 by A3") {
  auto s3 = GroupTable::symmetric3();
  std::vector<int> a3;
  for (auto& s : s3.normal_subgroups())
    if (s.size() == 3) a3 = s;
  auto q = s3.quotient(a3);
  CHECK(q.group.order() == 2);
}

TEST_CASE("corpus Hopf algebras validate") {
  const Field& f2 = Field::get(2);
  const Field& f3 = Field::get(3);
  const Field& f4 = Field::get(2, 2);
  std::vector<HopfAlgebra> hs{
      group_algebra(GroupTable::cyclic(2), f2),
      group_algebra(GroupTable::direct_product(GroupTable::cyclic(2), GroupTable::cyclic(2)), f2),
      group_algebra(GroupTable::cyclic(4), f2),
      group_algebra(GroupTable::dihedral(4), f2),
      group_algebra(GroupTable::quaternion(), f2),
      group_algebra(GroupTable::symmetric3(), f2),
      group_algebra(GroupTable::cyclic(3), f3),
      group_algebra(GroupTable::symmetric3(), f3),
      product_hopf(group_algebra(GroupTable::cyclic(2), f4), group_algebra(GroupTable::cyclic(3), f4)),
      truncated_poly(2, f2),
      truncated_poly(3, f3),
      truncated_poly(5, Field::get(5)),
      trivial_hopf(f2),
  };
  for (auto& h : hs) {
    auto v = validate_hopf(h);
    for (auto& a : v.axioms) CHECK_MESSAGE(a.pass, a.name, " ", a.witness);
  }
}

TEST_CASE("u(sl2) validates and satisfies restricted relations") {
  const Field& f3 = Field::get(3);
  auto u = u_sl2(f3);
  CHECK(u.dim() == 27);
  auto v = validate_hopf(u);
  for (auto& a : v.axioms) CHECK_MESSAGE(a.pass, a.name, " ", a.witness);
  const Mat& le = u.left(9), &lh = u.left(3), &lf = u.left(1);
  CHECK((le * le * le).is_zero());
  CHECK((lf * lf * lf).is_zero());
  CHECK(lh * lh * lh == lh);
  CHECK(le * lf - lf * le == lh);
  CHECK(lh * le - le * lh == le.scaled(2));
  CHECK(lh * lf - lf * lh == lf.scaled(f3.neg(2)));
}

TEST_CASE("fault injection locates failures") {
  const Field& f2 = Field::get(2);
  auto h = group_algebra(GroupTable::cyclic(2), f2);
  auto mult = h.structure_constants();
  mult[3] ^= 1;  // b0 b1 now has a b1 coefficient flipped
  HopfAlgebra bad(Algebra(f2, 2, mult, h.unit()), h.comult(), h.counit(), h.antipode());
  CHECK_FALSE(validate_hopf(bad).ok());
  HopfAlgebra zero(Algebra(f2, 2, h.structure_constants(), h.unit()), Mat(f2, 4, 2), h.counit(), h.antipode());
  CHECK_FALSE(validate_hopf(zero)["counit"].pass);
}

TEST_CASE("commutativity iff abelian") {
  const Field& f2 = Field::get(2);
  CHECK(group_algebra(GroupTable::cyclic(4), f2).is_commutative());
  CHECK_FALSE(group_algebra(GroupTable::dihedral(4), f2).is_commutative());
}
