#pragma once

#include <vector>

#include "blockscope/module.hpp"

namespace blockscope {

/// Primitive idempotent e_s with e_s acting as a rank-one idempotent on
/// simple s and as zero on the others.
Vec primitive_idempotent(const Algebra& a, const std::vector<ModuleRep>& simples, int s);

/// Indecomposable projectives Q_t = A e_t of an algebra, represented through
/// their mutual action matrices. Q_t[0] = e_t.
struct ProjKit {
  const Field* field = nullptr;
  int ntypes = 0;
  std::vector<int> qdim;
  /// act[src][b][dst]: action on Q_dst (column convention) of the basis
  /// element b of Q_src.
  std::vector<std::vector<std::vector<Mat>>> act;
  /// rad[g][dst]: action on Q_dst of generator g of the radical (generates
  /// J both as a left and as a right ideal).
  std::vector<std::vector<Mat>> rad;
  int trivial_type = -1;

  // Present for kits of an ordinary algebra (not an enveloping kit).
  const Algebra* algebra = nullptr;
  std::vector<Mat> qbasis;  // rows: basis of Q_t inside A
  std::vector<LinearSolver> qsolver;
  Mat radical_gens;  // rows

  /// Action of an arbitrary algebra element on Q_dst (algebra kits only).
  Mat element_action(const Vec& x, int dst) const;
  int total_qdim() const;
};

/// Index of the simple module given by the counit.
int trivial_simple_index(const HopfAlgebra& h, const std::vector<ModuleRep>& simples);

/// `algebra` must outlive the kit.
ProjKit make_kit(const Algebra& a, const std::vector<ModuleRep>& simples, const Mat& radical, int trivial_simple = -1);

/// Kit of A (x) A^op with types (s1, s2) -> index s1 * n + s2 and
/// Q = A e_{s1} (x) e_{s2} A, basis index c1 * dim(e_{s2}A) + c2.
struct EnvelopeKit {
  ProjKit kit;
  int nsimples = 0;
  std::vector<Mat> left_basis;   // A e_s
  std::vector<Mat> right_basis;  // e_s A
};
EnvelopeKit make_envelope_kit(const Algebra& a, const std::vector<ModuleRep>& simples, const Mat& radical);

/// Coefficient module X seen through a kit: actions of the Q basis
/// elements, radical generators, and bases of e_t X.
struct CoefModule {
  const Field* field = nullptr;
  int dim = 0;
  std::vector<std::vector<Mat>> qrho;  // qrho[t][b]
  std::vector<Mat> radrho;
  std::vector<Mat> eps_basis;  // rows: basis of e_t X
  std::vector<LinearSolver> eps_solver;

  void finish();  // fills eps_basis/eps_solver from qrho[t][0]
};

CoefModule coef_module(const ProjKit& kit, const ModuleRep& m);
/// Bimodule with commuting left/right actions given per algebra basis
/// element (right[i] * v = v . b_i).
CoefModule coef_bimodule(const EnvelopeKit& env, const std::vector<Mat>& left, const std::vector<Mat>& right);

}  // namespace blockscope
