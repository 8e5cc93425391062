#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "blockscope/module.hpp"

namespace blockscope {

/// Seeded MeatAxe: Norton's irreducibility test with random algebra elements.
class MeatAxe {
 public:
  explicit MeatAxe(std::uint64_t seed = 0xB10C) : rng_(seed) {}

  /// A proper nonzero submodule, or nullopt when M is irreducible over the
  /// current field.
  std::optional<Subspace> find_submodule(const ModuleRep& m, const std::vector<int>& gens);
  std::vector<ModuleRep> composition_factors(const ModuleRep& m, const std::vector<int>& gens);

 private:
  std::mt19937_64 rng_;
};

/// Simple modules that are all absolutely irreducible, sorted by
/// (dimension, trace vector). Throws FieldTooSmall(d) when some simple has
/// an endomorphism field of degree d > 1.
std::vector<ModuleRep> simple_modules(const Algebra& a, std::uint64_t seed = 0xB10C);

bool isomorphic_simples(const ModuleRep& s, const ModuleRep& t, const std::vector<int>& gens);
/// Index of the simple isomorphic to s, or -1.
int match_simple(const ModuleRep& s, const std::vector<ModuleRep>& simples, const std::vector<int>& gens);
/// Composition multiplicity of each simple in M.
std::vector<int> composition_multiplicities(const ModuleRep& m, const std::vector<ModuleRep>& simples,
                                            const std::vector<int>& gens, std::uint64_t seed = 0xB10C);

/// Jacobson radical (rows) as the common kernel of the simple
/// representations; nilpotency is certified, InternalError otherwise.
Mat radical(const Algebra& a, const std::vector<ModuleRep>& simples);
/// Least n with J^n = 0.
int nilpotency_index(const Algebra& a, const Mat& j);
/// Rows spanning J^n.
Mat radical_power(const Algebra& a, const Mat& j, int n);
/// J . M as a subspace of M.
Subspace radical_of_module(const ModuleRep& m, const Mat& j);

/// Traces of the basis actions (a canonical isomorphism invariant for
/// sorting; not a complete invariant).
Vec trace_vector(const ModuleRep& m);

}  // namespace blockscope
