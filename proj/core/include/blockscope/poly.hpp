#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blockscope/field.hpp"

namespace blockscope {

using Monomial = std::vector<int>;

/// Graded polynomial ring over a finite field; variables carry positive
/// weights. Term order: weighted degree, then reverse lexicographic.
struct PolyRing {
  const Field* field = nullptr;
  std::vector<int> weights;
  std::vector<std::string> names;

  int nvars() const { return static_cast<int>(weights.size()); }
  int weight(const Monomial& m) const;
  /// True if a > b in the term order.
  bool greater(const Monomial& a, const Monomial& b) const;
  /// Ring with one extra variable of weight 1 appended.
  PolyRing with_extra(const std::string& name) const;
  /// All monomials of weighted degree d, in decreasing term order.
  std::vector<Monomial> monomials_of_degree(int d) const;
};

struct Term {
  Monomial m;
  Elem c;
};

/// Terms sorted decreasingly in the ring's term order, no zero coefficients.
struct Poly {
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  const Term& lead() const { return terms.front(); }
  bool operator==(const Poly& o) const;
};

namespace poly {

Poly constant(const PolyRing& r, Elem c);
Poly variable(const PolyRing& r, int i);
Poly from_terms(const PolyRing& r, std::vector<Term> terms);  // sorts and merges
Poly add(const PolyRing& r, const Poly& a, const Poly& b);
Poly sub(const PolyRing& r, const Poly& a, const Poly& b);
Poly scale(const PolyRing& r, const Poly& a, Elem c);
Poly mul(const PolyRing& r, const Poly& a, const Poly& b);
Poly mul_term(const PolyRing& r, const Poly& a, const Monomial& m, Elem c);
Poly monic(const PolyRing& r, const Poly& a);
bool is_homogeneous(const PolyRing& r, const Poly& a);
/// Embeds into a ring with extra trailing variables.
Poly widen(const Poly& a, int nvars);
std::string to_string(const PolyRing& r, const Poly& a);

}  // namespace poly

/// Reduced Groebner basis in the ring's term order.
std::vector<Poly> groebner(const PolyRing& r, std::vector<Poly> gens);
/// Remainder of f modulo a Groebner basis.
Poly normal_form(const PolyRing& r, const Poly& f, const std::vector<Poly>& gb);
bool ideal_contains(const PolyRing& r, const std::vector<Poly>& gb, const Poly& f);

/// Krull dimension of R/I; -1 when I is the unit ideal.
int ideal_dim(const PolyRing& r, const std::vector<Poly>& gens);
/// f in rad(I), by the Rabinowitsch trick.
bool in_radical(const PolyRing& r, const std::vector<Poly>& gens, const Poly& f);
bool radical_equal(const PolyRing& r, const std::vector<Poly>& a, const std::vector<Poly>& b);
/// Ideal generated by all variables of positive weight.
std::vector<Poly> irrelevant_ideal(const PolyRing& r);

/// Minimal primes of rad(I) when they are all generated by homogeneous
/// linear forms (each form in variables of a single weight). nullopt when
/// the search space is too large or rad(I) is not such an intersection.
std::optional<std::vector<std::vector<Poly>>> linear_components(const PolyRing& r, const std::vector<Poly>& gens);

enum class Connectivity { connected, disconnected, unsupported };
std::string to_string(Connectivity c);

struct ProjConnectivity {
  Connectivity verdict = Connectivity::unsupported;
  std::vector<std::vector<Poly>> components;  // excluding the irrelevant one
  std::string reason;
};
ProjConnectivity proj_connected(const PolyRing& r, const std::vector<Poly>& gens);

enum class RepType { simple_algebra, unknown_small, infinite_type, wild };
RepType rep_type_classify(int variety_dim);
std::string to_string(RepType t);

}  // namespace blockscope
