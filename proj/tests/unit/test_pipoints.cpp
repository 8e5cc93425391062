#include "blockscope/errors.hpp"
#include "blockscope/pipoints.hpp"
#include "doctest.h"

using namespace blockscope;

namespace {

GroupTable e2() { return GroupTable::direct_product(GroupTable::cyclic(2), GroupTable::cyclic(2)); }

bool all_pass(const Report& r) {
  if (!r.ok()) MESSAGE(r.to_json().dump());
  return r.ok();
}

Vec unit_diff(int dim, int g, int identity, const Field& f) {
  Vec u(dim, 0);
  u[g] = 1;
  u[identity] = f.sub(u[identity], 1);
  return u;
}

}  // namespace

TEST_CASE("jordan types and flatness") {
  const Field& f2 = Field::get(2);
  HopfAlgebra z4 = group_algebra(GroupTable::cyclic(4), f2);
  Vec u(4, 0);
  u[0] = 1;
  u[2] = 1;  // 1 + g^2
  FlatMap fm = flat_test(z4, u);
  CHECK(fm.jordan_type == std::vector<int>{2, 2});
  CHECK(fm.flat);
  CHECK(fm.criteria_agree);
  Vec v(4, 0);
  v[0] = v[1] = 1;  // 1 + g: (1+g)^2 = 1 + g^2 != 0
  CHECK_THROWS_AS(flat_test(z4, v), PreconditionError);

  // The norm element of the Klein four group: p-nilpotent, type [2,1,1], not flat.
  HopfAlgebra e = group_algebra(e2(), f2);
  Vec n(4, 1);
  FlatMap fn = flat_test(e, n);
  CHECK(fn.jordan_type == std::vector<int>{2, 1, 1});
  CHECK_FALSE(fn.flat);
  CHECK(fn.criteria_agree);

  Mat shift(f2, 3, 3);
  shift(1, 0) = shift(2, 1) = 1;
  CHECK(jordan_type(shift) == std::vector<int>{3});
}

TEST_CASE("x + N on D8 and Q8") {
  for (auto g : {GroupTable::dihedral(4), GroupTable::quaternion()}) {
    HopfAlgebra h = group_algebra(g, Field::get(2));
    XNExample ex = example_xN(h);
    CHECK(ex.fm.flat);
    CHECK(ex.fm.jordan_type == std::vector<int>{2, 2, 2, 2});
    CHECK(ex.outside_all);
    CHECK(ex.subgroups_tested == static_cast<int>(g.subgroups().size()) - 1);
    CHECK(is_p_point(h, ex.fm).verdict == Verdict::fail);
    CHECK(all_pass(verify_xn_example(h)));
  }
  CHECK(GroupTable::dihedral(4).subgroups().size() == 10);
  CHECK_THROWS_AS(example_xN(group_algebra(e2(), Field::get(2))), PreconditionError);
}

TEST_CASE("coinduction and the adjunction") {
  const Field& f2 = Field::get(2);
  HopfAlgebra h = group_algebra(GroupTable::dihedral(4), f2);
  XNExample ex = example_xN(h);
  ModuleRep c = coinduce(h, ex.fm);
  CHECK(c.dim == 4);
  check_module(h, c);
  // dim Hom_{k[t]/t^p}(alpha^* M, k) = dim Hom_A(M, k^alpha).
  std::vector<ModuleRep> tests{trivial_module(h), regular_module(h), c};
  for (auto& m : tests) {
    const int lhs = m.dim - module_rank_of_action(m, ex.fm.u);
    const int rhs = hom_space(m, c, algebra_generators(h)).rows();
    CHECK(lhs == rhs);
  }
  CHECK_FALSE(restricts_projectively(c, ex.fm.u, 2));
  CHECK(restricts_projectively(regular_module(h), ex.fm.u, 2));
}

TEST_CASE("p-point factorization") {
  const Field& f2 = Field::get(2);
  GroupTable g = GroupTable::dihedral(4);
  HopfAlgebra h = group_algebra(g, f2);
  const int z = g.center()[1];
  PPointVerdict v = is_p_point(h, flat_test(h, unit_diff(8, z, g.identity(), f2)));
  CHECK(v.verdict == Verdict::pass);
  CHECK(v.witness.size() == 2);
  HopfAlgebra t = truncated_poly(3, Field::get(3));
  Vec u(3, 0);
  u[1] = 1;
  CHECK(is_p_point(t, flat_test(t, u)).verdict == Verdict::pass);
}

TEST_CASE("equivalence on a witness family") {
  const Field& f2 = Field::get(2);
  GroupTable g = e2();
  HopfAlgebra h = group_algebra(g, f2);
  CohomologyEngine e(h, 6);
  PiPoints pp(e);
  Vec a = unit_diff(4, 1, 0, f2), b = unit_diff(4, 2, 0, f2);
  CHECK(equivalent(pp.family(), a, a, 2).equivalent);
  EquivalenceVerdict v = equivalent(pp.family(), a, b, 2);
  CHECK_FALSE(v.equivalent);
  bool carlson_separates = false;
  for (size_t i = 0; i < v.family.size(); ++i)
    if (v.family[i].rfind("L(", 0) == 0 && v.a[i] != v.b[i]) carlson_separates = true;
  CHECK(carlson_separates);
  CHECK_THROWS_AS(equivalent({}, a, b, 2), PreconditionError);
}

TEST_CASE("flat kernel classes of the Klein four group") {
  const Field& f2 = Field::get(2);
  CohomologyEngine e(group_algebra(e2(), f2), 6);
  PiPoints pp(e);
  bool exhaustive = false;
  const auto& classes = pp.flat_classes(&exhaustive);
  CHECK(exhaustive);
  REQUIRE(classes.size() == 3);
  // Each kernel is generated by one linear form; the three forms are the
  // three F_2-points of P^1.
  std::vector<Mat> lines;
  for (auto& c : classes) {
    CHECK(c.kernel.gens.size() == 1);
    for (int n = 1; n <= 6; ++n) CHECK(c.kernel.pieces.at(n).rows() == n);
    lines.push_back(c.kernel.pieces.at(1));
  }
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = i + 1; j < 3; ++j) {
      Mat both = lines[i];
      both.append_rows(lines[j]);
      CHECK(rank(both) == 2);
    }
  // Rank-variety oracle: L_zeta for zeta in ker(alpha) is non-projective
  // along alpha exactly.
  for (size_t i = 0; i < 3; ++i) {
    Vec row(lines[i].row(0), lines[i].row(0) + lines[i].cols());
    Vec zeta(e.monomial_cocycles(1).cols(), 0);
    for (int k = 0; k < e.monomial_cocycles(1).rows(); ++k)
      if (row[k]) axpy(f2, zeta.data(), e.monomial_cocycles(1).row(k), row[k], static_cast<int>(zeta.size()));
    ModuleRep l = carlson_module(e.resolution(), e.cochains(), 1, zeta);
    for (size_t j = 0; j < 3; ++j) CHECK(restricts_projectively(l, classes[j].rep, 2) == (i != j));
  }
  CHECK(pp.p_point_classes().size() == 3);
  CHECK(all_pass(verify_kernel_lemma(pp)));
  CHECK(all_pass(verify_injective(pp, 0)));
  CHECK(all_pass(verify_homeo_local(pp)));
  CHECK(all_pass(verify_equiv(pp)));
}

TEST_CASE("pi-supports of the S3 blocks") {
  CohomologyEngine e(group_algebra(GroupTable::symmetric3(), Field::get(2)), 6);
  PiPoints pp(e);
  PiSupportSample b0 = pp.block_pi_support(0), b1 = pp.block_pi_support(1);
  REQUIRE(b0.classes.size() == 1);
  CHECK(b0.in_block[0]);
  CHECK_FALSE(b1.in_block[0]);
  FlatPointSample f0 = pp.flat_points_of_block(0);
  CHECK(f0.exhaustive);
  CHECK(f0.classes.size() == 1);
  CHECK(pp.flat_points_of_block(1).classes.empty());
  CHECK(all_pass(verify_injective(pp, 0)));
  CHECK(all_pass(verify_injective(pp, 1)));
  CHECK(all_pass(verify_homeo_local(pp)));
  CHECK(all_pass(verify_defect(pp, 0)));
  CHECK(all_pass(verify_defect(pp, 1)));
  CHECK(all_pass(verify_rep_type(e)));
  CHECK(all_pass(verify_localunipotent(e.hopf())));
  CHECK(verify_equiv(pp).verdict == Verdict::unsupported);
}

TEST_CASE("D8 and Q8 equivalence with a p-point") {
  for (auto g : {GroupTable::dihedral(4), GroupTable::quaternion()}) {
    CohomologyEngine e(group_algebra(g, Field::get(2)), 6);
    PiPoints pp(e);
    Report r = verify_equiv(pp);
    CHECK(all_pass(r));
    CHECK(r.data["alpha_is_p_point"] == false);
    CHECK(all_pass(verify_kernel_lemma(pp)));
    CHECK(all_pass(verify_injective(pp, 0)));
  }
}

TEST_CASE("Steinberg block has no flat points") {
  CohomologyEngine e(u_sl2(Field::get(3)), 4);
  PiPoints pp(e);
  const Analysis& an = e.analysis();
  int steinberg = -1;
  for (size_t b = 0; b < an.blocks.blocks.size(); ++b)
    if (an.blocks.blocks[b].dim == 9) steinberg = static_cast<int>(b);
  REQUIRE(steinberg >= 0);
  FlatPointSample s = pp.flat_points_of_block(steinberg);
  CHECK(s.exhaustive);
  CHECK(s.classes.empty());
  CHECK_THROWS_AS(pp.p_point_classes(), UnsupportedError);
  CHECK(verify_injective(pp, 0).verdict == Verdict::unsupported);
  CHECK(all_pass(verify_rep_type(e)));
}

TEST_CASE("sampled flatness criteria agree") {
  CohomologyEngine e(u_sl2(Field::get(3)), 4);
  PiPoints pp(e);
  auto sample = pp.sample_p_nilpotents(500, 7);
  CHECK(sample.size() == 500);
  for (auto& u : sample) CHECK(flat_test(e.hopf(), u).criteria_agree);
}
