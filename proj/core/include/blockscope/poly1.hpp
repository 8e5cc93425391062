#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "blockscope/matrix.hpp"

namespace blockscope::upoly {

/// Univariate polynomial over a finite field, coefficients low-to-high,
/// trimmed so the leading coefficient is nonzero (zero polynomial = {}).
using Poly = std::vector<Elem>;

void trim(Poly& a);
int degree(const Poly& a);  // -1 for zero
Poly add(const Field& f, const Poly& a, const Poly& b);
Poly sub(const Field& f, const Poly& a, const Poly& b);
Poly mul(const Field& f, const Poly& a, const Poly& b);
std::pair<Poly, Poly> divmod(const Field& f, const Poly& a, const Poly& b);
Poly rem(const Field& f, const Poly& a, const Poly& b);
Poly monic(const Field& f, const Poly& a);
Poly gcd(const Field& f, Poly a, Poly b);
/// Extended gcd: returns (g, s, t) with s a + t b = g, g monic.
struct Xgcd {
  Poly g, s, t;
};
Xgcd xgcd(const Field& f, const Poly& a, const Poly& b);
Poly derivative(const Field& f, const Poly& a);
Poly powmod(const Field& f, const Poly& base, std::uint64_t e, const Poly& m);

struct Factor {
  Poly poly;  // monic irreducible
  int multiplicity;
};

/// Factorization into monic irreducibles, sorted by (degree, coefficients).
/// Deterministic: equal-degree splitting uses a fixed-seed generator.
std::vector<Factor> factor(const Field& f, const Poly& a);

/// Roots in the field (exhaustive evaluation).
std::vector<Elem> roots(const Field& f, const Poly& a);
Elem eval(const Field& f, const Poly& a, Elem x);

/// Evaluates a polynomial at a square matrix.
Mat eval_matrix(const Poly& a, const Mat& m);

/// Minimal polynomial of a square matrix (monic).
Poly minimal_polynomial(const Mat& m);

/// Minimal polynomial of the operator restricted to the cyclic span of v.
Poly local_minimal_polynomial(const Mat& m, const std::vector<Elem>& v);

}  // namespace blockscope::upoly
