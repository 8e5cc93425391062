#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "blockscope/blocks.hpp"
#include "blockscope/poly.hpp"
#include "blockscope/resolution.hpp"

namespace blockscope {

/// Homogeneous ideal of the polynomial model truncated at the cap: the full
/// degree-n pieces (rows in the monomial basis of degree n) and a minimal
/// generating set.
struct GradedIdeal {
  std::map<int, Mat> pieces;
  std::vector<Poly> gens;
};

struct SupportVariety {
  std::vector<Poly> ideal;
  int dim = 0;
  ProjConnectivity connectivity;
};

struct RingGenerator {
  int degree = 0;
  Vec cocycle;
};

/// Everything cohomological about one Hopf algebra: splitting data, the
/// projective kit, the minimal resolution of k through cap + 1, and the
/// presented cohomology ring H^*(G,k) (even part when p is odd).
class CohomologyEngine {
 public:
  CohomologyEngine(const HopfAlgebra& h, int cap, std::uint64_t seed = 0xB10C);
  CohomologyEngine(const CohomologyEngine&) = delete;
  CohomologyEngine& operator=(const CohomologyEngine&) = delete;

  const Analysis& analysis() const { return *an_; }
  const HopfAlgebra& hopf() const { return an_->h; }
  const Field& field() const { return an_->field(); }
  const ProjKit& kit() const { return kit_; }
  const Resolution& resolution() const { return res_; }
  const Cochains& cochains() const { return *cochains_; }
  const CoefModule& trivial() const { return k_; }
  int cap() const { return cap_; }
  bool even_only() const { return even_only_; }
  /// Degrees in which the ring lives: 0..cap, even ones only for odd p.
  const std::vector<int>& degrees() const { return degrees_; }

  const PolyRing& ring() const { return ring_; }
  const std::vector<RingGenerator>& generators() const { return gens_; }
  const std::vector<Poly>& relations() const { return relations_; }
  /// dim H^n(G,k) for n = 0..cap (0 in skipped odd degrees).
  const std::vector<int>& piece_dims() const { return piece_dims_; }
  const ExtSpace& ext(int n) const { return ext_.at(n); }
  const std::vector<Monomial>& monomials(int n) const { return monomials_.at(n); }
  /// Rows: cocycles of the degree-n monomials.
  const Mat& monomial_cocycles(int n) const { return mono_cocycles_.at(n); }
  int monomial_index(int n, const Monomial& m) const;
  /// Cocycle of a homogeneous polynomial of degree n.
  Vec class_of(const Poly& p, int n) const;
  Vec monomial_vector(int n, const Poly& p) const;
  Poly polynomial(int n, const Elem* coords) const;

  /// Kernel of H^*(G,k) -> H^*(G,X) induced by k -> X, 1 -> x0 (x0 fixed).
  GradedIdeal kernel_ideal(const CoefModule& x, const Vec& x0) const;
  /// I_G(M): kernel of H^*(G,k) -> Ext^*(M,M) = H^*(G, End M).
  GradedIdeal annihilator(const ModuleRep& m) const;
  CoefModule coef(const ModuleRep& m) const { return coef_module(kit_, m); }

  GradedIdeal make_ideal(std::map<int, Mat> pieces) const;
  GradedIdeal intersect(const GradedIdeal& a, const GradedIdeal& b) const;
  bool equal(const GradedIdeal& a, const GradedIdeal& b) const;
  GradedIdeal whole_irrelevant() const;
  SupportVariety variety(const GradedIdeal& i) const;
  /// The ideal of V_G: the relations.
  GradedIdeal relation_ideal() const;

  /// V_G(B): intersection of I_G(S) over the simples of block b.
  GradedIdeal block_ideal(int b) const;

 private:
  void build_ring();

  std::unique_ptr<Analysis> an_;
  int cap_;
  bool even_only_;
  ProjKit kit_;
  CoefModule k_;
  Resolution res_;
  std::unique_ptr<Cochains> cochains_;
  std::vector<int> degrees_;
  PolyRing ring_;
  std::vector<RingGenerator> gens_;
  std::vector<Poly> relations_;
  std::vector<int> piece_dims_;
  std::map<int, ExtSpace> ext_;
  std::map<int, std::vector<Monomial>> monomials_;
  std::map<int, std::map<Monomial, int>> mono_index_;
  std::map<int, Mat> mono_cocycles_;
  std::map<int, Mat> relation_pieces_;
  mutable std::map<int, GradedIdeal> block_ideals_;
};

/// Identity of End(M) in hom_module coordinates.
Vec identity_vector(const Field& f, int dim);

}  // namespace blockscope
