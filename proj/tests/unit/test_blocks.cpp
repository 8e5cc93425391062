#include <set>

#include "blockscope/blocks.hpp"
#include "blockscope/errors.hpp"
#include "doctest.h"

using namespace blockscope;

namespace {
std::multiset<int> block_dims(const BlockDecomposition& d) {
  std::multiset<int> s;
  for (auto& b : d.blocks) s.insert(b.dim);
  return s;
}

// Oracle: all idempotents of a commutative algebra Z (given by basis rows
// inside A) by exhaustive search over F_q-combinations.
int count_idempotents(const Algebra& a, const Mat& z) {
  const Field& f = a.field();
  long long total = 1;
  for (int i = 0; i < z.rows(); ++i) total *= f.size();
  int count = 0;
  for (long long code = 0; code < total; ++code) {
    Vec x(a.dim(), 0);
    long long c = code;
    for (int i = 0; i < z.rows(); ++i) {
      axpy(f, x.data(), z.row(i), static_cast<Elem>(c % f.size()), a.dim());
      c /= f.size();
    }
    if (a.mul(x, x) == x) ++count;
  }
  return count;
}
}  // namespace

TEST_CASE("center dimensions") {
  const Field& f2 = Field::get(2);
  CHECK(center(group_algebra(GroupTable::dihedral(4), f2)).rows() == 5);
  CHECK(center(group_algebra(GroupTable::cyclic(4), f2)).rows() == 4);
  CHECK(center(group_algebra(GroupTable::symmetric3(), f2)).rows() == 3);
}

TEST_CASE("block decompositions of the corpus") {
  const Field& f2 = Field::get(2);
  const Field& f3 = Field::get(3);
  auto s3p2 = analyze(group_algebra(GroupTable::symmetric3(), f2));
  CHECK(block_dims(s3p2.blocks) == std::multiset<int>{2, 4});
  CHECK(s3p2.blocks.blocks[0].dim == 2);  // principal first
  CHECK(s3p2.radical.rows() == 1);
  CHECK(s3p2.simples.size() == 2);
  CHECK(s3p2.simples[1].dim == 2);
  CHECK(s3p2.simple_block[1] == 1);
  // Oracle: 2^blocks idempotents in the center.
  CHECK(count_idempotents(s3p2.h, center(s3p2.h)) == 4);

  auto s3p3 = analyze(group_algebra(GroupTable::symmetric3(), f3));
  CHECK(s3p3.blocks.blocks.size() == 1);
  CHECK(s3p3.simples.size() == 2);
  CHECK(count_idempotents(s3p3.h, center(s3p3.h)) == 2);

  auto z4 = analyze(group_algebra(GroupTable::cyclic(4), f2));
  CHECK(z4.blocks.blocks.size() == 1);
  CHECK(z4.simples.size() == 1);
}

TEST_CASE("field extension for Z/3 at p=2") {
  auto an = analyze(group_algebra(GroupTable::cyclic(3), Field::get(2)));
  CHECK(an.extension == 2);
  CHECK(an.blocks.blocks.size() == 3);
  CHECK(is_linearly_reductive(group_algebra(GroupTable::cyclic(3), Field::get(2))));
  CHECK_FALSE(is_linearly_reductive(group_algebra(GroupTable::cyclic(2), Field::get(2))));
}

TEST_CASE("u(sl2) blocks") {
  auto an = analyze(u_sl2(Field::get(3)));
  REQUIRE(an.blocks.blocks.size() == 2);
  CHECK(an.blocks.blocks[0].dim == 18);
  CHECK(an.blocks.blocks[1].dim == 9);
  CHECK(an.simples.size() == 3);
  auto b1 = an.block_algebras[1];
  CHECK(center(b1).rows() == 1);
}

TEST_CASE("local principal structure") {
  const Field& f2 = Field::get(2);
  auto r = local_principal_structure(GroupTable::symmetric3(), f2);
  CHECK(r.normal_subgroup.size() == 3);
  CHECK(r.ok());
  auto r2 = local_principal_structure(GroupTable::direct_product(GroupTable::cyclic(2), GroupTable::cyclic(3)), f2);
  CHECK(r2.normal_subgroup.size() == 3);
  CHECK(r2.ok());
  auto r3 = local_principal_structure(GroupTable::dihedral(4), f2);
  CHECK(r3.normal_subgroup.size() == 1);
  CHECK(r3.principal_dim == 8);
  CHECK(r3.ok());
}
