#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blockscope/cohomology.hpp"
#include "blockscope/report.hpp"

namespace blockscope {

/// Algebra map k[t]/(t^p) -> A given by the image u of t.
struct FlatMap {
  Vec u;
  std::vector<int> jordan_type;  // block sizes of left multiplication by u, decreasing
  bool flat = false;
  /// all-p Jordan type, rank(u) = dim (p-1)/p and rank(u^{p-1}) = dim/p agree.
  bool criteria_agree = true;
};

/// Jordan block sizes of a nilpotent operator from the ranks of its powers.
std::vector<int> jordan_type(const Mat& op);
bool is_p_nilpotent(const Algebra& a, const Vec& u);
/// Throws PreconditionError if u^p != 0.
FlatMap flat_test(const Algebra& a, const Vec& u);
/// alpha^*(M) is free over k[t]/(t^p).
bool restricts_projectively(const ModuleRep& m, const Vec& u, int p);

/// k^alpha = Hom_{k[t]/(t^p)}(A, k) with (x.f)(a) = f(a x); dim A / p.
ModuleRep coinduce(const Algebra& a, const FlatMap& fm);

/// x + N for a nonabelian p-group (x = 1 - g1, g1 central of order p,
/// N = sum of all group elements), with membership tests against every
/// proper subgroup algebra.
struct XNExample {
  FlatMap fm;
  int central_element = -1;
  int subgroups_tested = 0;
  bool outside_all = false;
};
XNExample example_xN(const HopfAlgebra& h);

/// Factorization through an abelian p-subgroup (constant groups only;
/// commutative local targets always factor).
struct PPointVerdict {
  Verdict verdict = Verdict::fail;  // pass: is a p-point
  std::vector<int> witness;         // subgroup elements
};
PPointVerdict is_p_point(const HopfAlgebra& h, const FlatMap& fm);

struct NamedModule {
  std::string name;
  ModuleRep module;
};

struct EquivalenceVerdict {
  std::vector<std::string> family;
  std::vector<bool> a, b;  // projectivity of the restrictions
  bool equivalent = false;
};
EquivalenceVerdict equivalent(const std::vector<NamedModule>& family, const Vec& a, const Vec& b, int p);

/// Flat p-point classes up to equality of induced kernels.
struct PointClass {
  Vec rep;
  GradedIdeal kernel;
  std::vector<int> witness;  // abelian subgroup the representative lives in
  int hits = 0;
};

struct PiSupportSample {
  std::vector<PointClass> classes;
  std::vector<bool> in_block;  // per class: detects some simple of the block
  bool exhaustive = false;
  long long candidates = 0;
};

/// Flat points of a block up to verdict vectors on the block's family.
struct FlatClass {
  Vec rep;  // ambient coordinates
  std::vector<bool> projective;
  int hits = 0;
};

struct FlatPointSample {
  std::vector<std::string> family;
  std::vector<FlatClass> classes;
  int discarded = 0;  // flat classes on which the whole family is projective
  bool exhaustive = false;
  long long candidates = 0;
};

/// Everything about flat maps into one Hopf algebra, on top of its
/// cohomology engine. Search spaces of at most 2^20 elements are enumerated
/// exhaustively; larger ones are sampled with a fixed seed, stopping after
/// `budget` candidates or 200 consecutive flat hits without a new class.
class PiPoints {
 public:
  PiPoints(const CohomologyEngine& e, long long budget = 20000, std::uint64_t seed = 0xB10C);

  const CohomologyEngine& engine() const { return e_; }
  bool constant_group() const { return e_.hopf().group() != nullptr; }

  /// Kernel of alpha^*: H^*(G,k) -> H^*(k[t]/(t^p), k) through the cap.
  GradedIdeal induced_kernel(const Vec& u) const;
  bool kernel_lemma_holds(const GradedIdeal& kernel) const;

  /// Simples, their syzygies to degree 4, Carlson modules of the degree <= 2
  /// generators and the projective indecomposables.
  const std::vector<NamedModule>& family() const;
  /// Same, restricted to block b (e-components of the Carlson-tensor
  /// witnesses e.(L_zeta (x) S) included).
  const std::vector<NamedModule>& block_family(int b) const;

  /// Throws UnsupportedError for non-constant groups with noncommutative
  /// algebra.
  const std::vector<PointClass>& p_point_classes() const;
  PiSupportSample block_pi_support(int b) const;
  FlatPointSample flat_points_of_block(int b, const std::vector<NamedModule>& extra = {}) const;
  /// e.u, the composite with the block projection.
  Vec rho_star(const Vec& u, int b) const;

  /// p-nilpotent candidates for sampling (subgroup augmentation ideals,
  /// the radical, and the span of the algebra generators).
  std::vector<Vec> sample_p_nilpotents(int count, std::uint64_t seed) const;
  /// All flat elements of A when enumerable, else a sample.
  std::vector<Vec> flat_elements(bool& exhaustive) const;
  /// Flat elements of A up to equality of induced kernels: the closed points
  /// of the variety reached over the base field, including those whose
  /// p-points need a field extension.
  const std::vector<PointClass>& flat_classes(bool* exhaustive = nullptr) const;

 private:
  const CohomologyEngine& e_;
  long long budget_;
  std::uint64_t seed_;
  mutable std::vector<NamedModule> family_;
  mutable std::map<int, std::vector<NamedModule>> block_family_;
  mutable std::vector<PointClass> classes_;
  mutable bool have_classes_ = false;
  mutable std::vector<PointClass> flat_classes_;
  mutable bool have_flat_ = false, flat_exhaustive_ = false;
};

Report verify_kernel_lemma(const PiPoints& pp);
Report verify_xn_example(const HopfAlgebra& h);
Report verify_equiv(const PiPoints& pp);
Report verify_injective(const PiPoints& pp, int block);
Report verify_homeo_local(const PiPoints& pp);
Report verify_defect(const PiPoints& pp, int block);
Report verify_rep_type(const CohomologyEngine& e);
Report verify_localunipotent(const HopfAlgebra& h);

}  // namespace blockscope
