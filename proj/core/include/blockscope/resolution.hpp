#pragma once

#include <vector>

#include "blockscope/projective.hpp"

namespace blockscope {

/// Minimal projective resolution ... -> P_1 -> P_0 -> M -> 0 whose terms are
/// sums of the kit's indecomposable projectives. A vector in P_n is the
/// concatenation of Q-coordinates of its generator components.
struct Resolution {
  const ProjKit* kit = nullptr;
  CoefModule top;  // M
  std::vector<std::vector<int>> gens;     // gens[n]: generator types of P_n
  std::vector<std::vector<int>> offsets;  // start of generator k inside P_n
  std::vector<int> dims;                  // dim P_n
  /// images[0]: rows = augmentation images of P_0 generators (vectors in M);
  /// images[n]: rows = d(generator) in P_{n-1}.
  std::vector<Mat> images;
  /// D[0]: P_0 -> M; D[n]: P_n -> P_{n-1} (row convention: v -> v * D).
  std::vector<Mat> D;
  std::vector<Mat> kernels;  // kernels[n] = ker D[n] (rows), i.e. Omega^{n+1}(M)
  std::vector<LinearSolver> solvers;

  int length() const { return static_cast<int>(gens.size()) - 1; }
  /// Action of Q_s[b] on a vector of P_n.
  Vec act(int s, int b, int n, const Vec& v) const;
  Vec act_rad(int g, int n, const Vec& v) const;
};

Resolution minimal_resolution(const ProjKit& kit, const CoefModule& m, int length);
/// Computes further terms up to `length`.
void extend(Resolution& r, int length);

/// Module structure of Omega^{n+1}(M) = ker D[n] as a ModuleRep (algebra kits
/// only); syzygy(r, 0) is Omega^1.
ModuleRep syzygy_module(const Resolution& r, int n);
/// P_n as a ModuleRep over the kit's algebra.
ModuleRep term_module(const Resolution& r, int n);

/// Hom_A(P_•, X): C^n = sum over generators k of e_{t_k} X.
class Cochains {
 public:
  Cochains(const Resolution& r, const CoefModule& x);
  int dim(int n) const;
  int offset(int n, int k) const { return offs_[n][k]; }
  /// delta^n: C^n -> C^{n+1}, row convention. Needs P_{n+1}.
  const Mat& delta(int n) const;
  /// Values of a cochain on P_n as a linear map: rows = images of P_n basis
  /// vectors in X.
  Mat as_map(int n, const Vec& c) const;
  /// Evaluates a cochain on a vector of P_n.
  Vec evaluate(int n, const Vec& c, const Vec& v) const;
  /// Cochain given by values at the generators (rows of `values`, each in
  /// e_t X).
  Vec from_values(int n, const Mat& values) const;
  const Resolution& resolution() const { return *res_; }
  const CoefModule& coef() const { return *x_; }

 private:
  const Resolution* res_;
  const CoefModule* x_;
  std::vector<std::vector<int>> offs_;
  mutable std::vector<Mat> delta_;
  mutable std::vector<bool> have_;
};

/// Ext^n as cocycles modulo coboundaries with a complement basis.
struct ExtSpace {
  int degree = 0;
  Mat reps;                // rows: cocycle representatives of a basis
  Mat boundaries;          // rows: basis of B^n
  LinearSolver combined;   // solver for [boundaries; reps]
  int dim() const { return reps.rows(); }
  /// Coordinates of a cocycle in the basis `reps`.
  std::vector<Elem> coords(const Vec& cocycle) const;
  bool is_zero_class(const Vec& cocycle) const;
};

ExtSpace ext_space(const Cochains& c, int n);
int ext_dim(const Cochains& c, int n);

/// A complex C_j -> ... -> C_0 -> Y augmented onto Y, exact and made of
/// projectives, into which cocycles on a resolution can be lifted.
class LiftTarget {
 public:
  virtual ~LiftTarget() = default;
  virtual Vec act(int s, int b, int j, const Vec& v) const = 0;
  /// Some w with d_j(w) = v (j = 0: augmentation). Throws if v is not in
  /// the image.
  virtual Vec preimage(int j, const Vec& v) const = 0;
};

class ResolutionTarget : public LiftTarget {
 public:
  explicit ResolutionTarget(const Resolution& r) : r_(r) {}
  Vec act(int s, int b, int j, const Vec& v) const override { return r_.act(s, b, j, v); }
  Vec preimage(int j, const Vec& v) const override;

 private:
  const Resolution& r_;
};

/// Lifts a map P_m -> Y (values at the generators of P_m, rows) to chain
/// maps P_{m+j} -> C_j for j = 0..steps; returns the values at generators of
/// P_{m+steps} (rows, vectors in C_steps).
Mat lift_chain_map(const Resolution& src, int m, const Mat& values, const LiftTarget& target, int steps);

/// Values at generators of a cocycle (rows, vectors in e_t X).
Mat cocycle_values(const Cochains& c, int n, const Vec& cocycle);

/// Yoneda product eta * zeta: zeta in Ext^m(M, N) on the resolution of M
/// (cochains `cz` with coefficients N), eta in Ext^n(N, X) on the resolution
/// of N (cochains `ce`). Result in Ext^{m+n}(M, X) as a cochain on `cz`'s
/// resolution, with coefficients X of `ce`. `zeta` values must be vectors of
/// N, so cz's coefficient module must be N itself.
Vec yoneda(const Cochains& ce, int n, const Vec& eta, const Cochains& cz, int m, const Vec& zeta,
           const Cochains& out);

bool is_projective(const ProjKit& kit, const CoefModule& m);

/// Carlson module L_zeta = kernel of a surjective representative
/// Omega^n(k) -> k of a nonzero class zeta in H^n(G, k). `r` resolves k.
ModuleRep carlson_module(const Resolution& r, const Cochains& c, int n, const Vec& zeta);

}  // namespace blockscope
