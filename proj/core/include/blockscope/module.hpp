#pragma once

#include <string>
#include <vector>

#include "blockscope/hopf.hpp"

namespace blockscope {

/// Left module: one action matrix (column convention) per algebra basis
/// element, so action[i] * v = b_i . v.
struct ModuleRep {
  const Field* field = nullptr;
  int dim = 0;
  std::vector<Mat> action;

  ModuleRep() = default;
  ModuleRep(const Field& f, int d, std::vector<Mat> act) : field(&f), dim(d), action(std::move(act)) {}

  Mat act(const Vec& x) const;  // action of an algebra element
  /// Fingerprint of the action matrices (basis dependent).
  std::string fingerprint() const;
};

/// Greedy generating set of the algebra (basis indices), in index order.
std::vector<int> algebra_generators(const Algebra& a);

ModuleRep regular_module(const Algebra& a);
ModuleRep trivial_module(const HopfAlgebra& h);
ModuleRep zero_module(const Algebra& a);
/// Throws PreconditionError if the action does not respect the structure.
void check_module(const Algebra& a, const ModuleRep& m);

ModuleRep direct_sum(const ModuleRep& m, const ModuleRep& n);
ModuleRep tensor_diagonal(const HopfAlgebra& h, const ModuleRep& m, const ModuleRep& n);
ModuleRep dual_module(const HopfAlgebra& h, const ModuleRep& m);
/// Hom_k(M, N) with x.f = sum x1 f s(x2); vec index r*dim M + c for f(r,c).
ModuleRep hom_module(const HopfAlgebra& h, const ModuleRep& m, const ModuleRep& n);

/// phi: dim(A) x dim(A') matrix, column i = image of b'_i; verified to be a
/// unital algebra map.
ModuleRep restrict_module(const Algebra& target, const Algebra& source, const Mat& phi, const ModuleRep& m);
void check_algebra_map(const Algebra& target, const Algebra& source, const Mat& phi);

/// Submodule spanned by rows of `basis` (must be invariant).
ModuleRep submodule(const ModuleRep& m, const Mat& basis);
/// Quotient by the invariant subspace; complement basis = non-pivot unit vectors.
ModuleRep quotient_module(const ModuleRep& m, const Subspace& sub);
/// Smallest submodule containing the rows of `vectors`.
Subspace spin(const ModuleRep& m, const Mat& vectors, const std::vector<int>& gens);
Subspace spin(const ModuleRep& m, const Mat& vectors);
bool is_invariant(const ModuleRep& m, const Subspace& s);

/// Basis (rows, vec of N x M matrices) of Hom_A(M, N) using algebra generators.
Mat hom_space(const ModuleRep& m, const ModuleRep& n, const std::vector<int>& gens);
/// Commutant End_A(M) as a list of matrices.
std::vector<Mat> endomorphism_basis(const ModuleRep& m, const std::vector<int>& gens);
Mat unvec(const Field& f, const Elem* data, int rows, int cols);

/// Rank of the action of x on M.
int module_rank_of_action(const ModuleRep& m, const Vec& x);

}  // namespace blockscope
