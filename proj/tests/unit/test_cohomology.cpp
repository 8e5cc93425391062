#include "blockscope/cohomology.hpp"
#include "doctest.h"

using namespace blockscope;

namespace {

std::vector<int> gen_degrees(const CohomologyEngine& e) {
  std::vector<int> d;
  for (auto& g : e.generators()) d.push_back(g.degree);
  return d;
}

GroupTable e2() { return GroupTable::direct_product(GroupTable::cyclic(2), GroupTable::cyclic(2)); }

}  // namespace

TEST_CASE("cohomology ring presentations") {
  {
    CohomologyEngine e(group_algebra(GroupTable::cyclic(2), Field::get(2)), 8);
    CHECK(gen_degrees(e) == std::vector<int>{1});
    CHECK(e.relations().empty());
    for (int n = 0; n <= 8; ++n) CHECK(e.piece_dims()[n] == 1);
  }
  {
    CohomologyEngine e(group_algebra(e2(), Field::get(2)), 6);
    CHECK(gen_degrees(e) == std::vector<int>{1, 1});
    CHECK(e.relations().empty());
    for (int n = 0; n <= 6; ++n) CHECK(e.piece_dims()[n] == n + 1);
  }
  {
    CohomologyEngine e(group_algebra(GroupTable::cyclic(3), Field::get(3)), 8);
    CHECK(gen_degrees(e) == std::vector<int>{2});
    for (int n = 0; n <= 8; n += 2) CHECK(e.piece_dims()[n] == 1);
  }
  {
    CohomologyEngine e(group_algebra(GroupTable::dihedral(4), Field::get(2)), 6);
    CHECK(gen_degrees(e) == std::vector<int>{1, 1, 2});
    REQUIRE(e.relations().size() == 1);
    CHECK(e.relations()[0].lead().m[2] == 0);  // degree-2 relation in the degree-1 generators
    for (int n = 0; n <= 6; ++n) CHECK(e.piece_dims()[n] == n + 1);
    CHECK(ideal_dim(e.ring(), e.relations()) == 2);
  }
  {
    CohomologyEngine e(group_algebra(GroupTable::symmetric3(), Field::get(3)), 10);
    CHECK(gen_degrees(e) == std::vector<int>{4});
  }
  {
    CohomologyEngine e(group_algebra(GroupTable::quaternion(), Field::get(2)), 8);
    CHECK(gen_degrees(e) == std::vector<int>{1, 1, 4});
    CHECK(ideal_dim(e.ring(), e.relations()) == 1);
  }
}

TEST_CASE("annihilator ideals") {
  CohomologyEngine e(group_algebra(e2(), Field::get(2)), 4);
  const auto& an = e.analysis();
  // Projective module: whole irrelevant ideal.
  ModuleRep reg = regular_module(an.h);
  CHECK(e.equal(e.annihilator(reg), e.whole_irrelevant()));
  // Trivial module: zero ideal here.
  CHECK(e.annihilator(trivial_module(an.h)).gens.empty());
  // Carlson module of a degree-1 generator: variety is the zero set of it.
  const Vec& x = e.generators()[0].cocycle;
  ModuleRep lx = carlson_module(e.resolution(), e.cochains(), 1, x);
  auto i = e.annihilator(lx);
  CHECK(radical_equal(e.ring(), i.gens, {poly::variable(e.ring(), 0)}));
  CHECK(e.variety(i).dim == 1);
}

TEST_CASE("block supports of S3 at p = 2") {
  CohomologyEngine e(group_algebra(GroupTable::symmetric3(), Field::get(2)), 6);
  CHECK(e.variety(e.block_ideal(0)).dim == 1);
  CHECK(e.variety(e.block_ideal(1)).dim == 0);
  CHECK(e.variety(e.relation_ideal()).dim == 1);
}
