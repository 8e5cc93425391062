#pragma once

#include <cstdint>
#include <vector>

#include "blockscope/cohomology.hpp"
#include "blockscope/report.hpp"

namespace blockscope {

/// A block (or the whole algebra) under x.b = sum x1 b s(x2). Module
/// coordinates are taken w.r.t. the rows of `basis` (vectors of A).
struct AdjointModule {
  int block = -1;  // -1: the whole algebra
  Mat basis;
  ModuleRep module;
  Vec idempotent;  // the unit of the block, in module coordinates
};

/// Adjoint action on the span of `basis` (a two-sided ideal of h with unit
/// `unit`). Verifies that multiplication is a module map on basis pairs.
AdjointModule adjoint_module(const HopfAlgebra& h, const Mat& basis, const Vec& unit, int block = -1);
AdjointModule adjoint_module(const Analysis& an, int block);

/// {v : x.v = eps(x) v}, rows in module coordinates.
Mat fixed_points(const HopfAlgebra& h, const ModuleRep& m);

struct Summand {
  Mat basis;  // rows in the coordinates of the decomposed module
  ModuleRep module;
};

/// Krull-Schmidt decomposition by splitting idempotents of End_A(M) found
/// from minimal polynomials of random endomorphisms (Fitting). A summand is
/// declared indecomposable after `trials` consecutive non-splitting samples.
std::vector<Summand> indecomposable_summands(const Algebra& a, const ModuleRep& m, std::uint64_t seed = 0xB10C,
                                             int trials = 64);

/// delta = (Id (x) s) o Delta : A -> A (x) A^op, with A (x) A^op restricted
/// along delta. A (x) A^op is kept implicit (pairs of left/right actions)
/// since its structure constants have dim^6 entries.
struct EnvelopingSetup {
  int dim = 0;
  Mat delta;  // dim^2 x dim, column i = delta(b_i), index l * dim + r
  bool injective = false;
  bool algebra_map = false;
  bool projective = false;  // A (x) A^op is projective over delta(A)
  bool projectivity_checked = false;
};

EnvelopingSetup enveloping_setup(const Analysis& an, bool check_projective = true);

/// A as a left A (x) A^op-module: left(i) and right(i) actions.
CoefModule bimodule_coefficients(const EnvelopeKit& env, const Algebra& a);

/// dim HH^n(A) for n = 0..cap by a minimal bimodule resolution.
std::vector<int> hochschild_dims(const Algebra& a, const std::vector<ModuleRep>& simples, const Mat& radical, int cap);
std::vector<int> hochschild_dims(const Analysis& an, int cap);
std::vector<int> hochschild_block_dims(const Analysis& an, int block, int cap);

/// dim H^n(G, M) for n = 0..cap on the engine's resolution of k.
std::vector<int> group_cohomology_dims(const CohomologyEngine& e, const ModuleRep& m);

/// Growth exponent of sum_{n < N} h_n: least-squares slope of log S(N)
/// against log N over the upper half of N = 1..len.
struct GrowthFit {
  double slope = 0;
  int degree = 0;
  bool ambiguous = false;
};
GrowthFit growth_degree(const std::vector<int>& dims, double tolerance = 0.25);

/// H^*(G, Y) for a G-algebra Y (a module whose multiplication is a module
/// map), with cup products computed by lifting into P_* (x) Y.
class AlgebraCohomology {
 public:
  /// `mult` is Y's algebra structure in the module's coordinates.
  AlgebraCohomology(const CohomologyEngine& e, const ModuleRep& y, const Algebra& mult);
  ~AlgebraCohomology();
  AlgebraCohomology(const AlgebraCohomology&) = delete;
  AlgebraCohomology& operator=(const AlgebraCohomology&) = delete;

  const Cochains& cochains() const { return *cochains_; }
  const ExtSpace& ext(int n) const;
  /// Cocycle of z1 * z2 in degree a + b (needs a + b <= cap).
  Vec product(int a, const Vec& z1, int b, const Vec& z2) const;

 private:
  class Target;
  const CohomologyEngine& e_;
  ModuleRep y_;
  Algebra mult_;
  CoefModule coef_;
  std::unique_ptr<Cochains> cochains_;
  std::unique_ptr<Target> target_;
  mutable std::map<int, ExtSpace> ext_;
};

/// Smallest m with every product of m elements of the subalgebra spanned
/// by `rows` equal to zero; 0 if the span is not nilpotent.
int nilpotency_of_span(const Algebra& a, const Mat& rows);

Report verify_center(const Analysis& an);
Report verify_theorem_same(const CohomologyEngine& e, int block);
Report verify_relative(const CohomologyEngine& e);
Report verify_eckmann_shapiro(const CohomologyEngine& e);
Report verify_krull(const CohomologyEngine& e, int block);
Report verify_nilpotents(const CohomologyEngine& e);

}  // namespace blockscope
