#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blockscope/meataxe.hpp"

namespace blockscope {

/// Basis (rows) of Z(A).
Mat center(const Algebra& a);

struct Block {
  Vec idempotent;
  Mat basis;  // rows span A e
  int dim = 0;
};

struct BlockDecomposition {
  std::vector<Block> blocks;
  int principal_index = 0;
  /// One line per splitting step: element index, minimal polynomial
  /// factor degrees and multiplicities.
  std::vector<std::string> certificate;
};

/// Finest central idempotent decomposition over the algebra's field.
/// Throws FieldTooSmall(d) when a central element has an irreducible
/// factor of degree d > 1 in its minimal polynomial.
/// Block 0 is the principal block when `h` is Hopf; the rest are ordered by
/// idempotent coordinates.
BlockDecomposition block_decompose(const Algebra& a, const Vec* counit = nullptr);
BlockDecomposition block_decompose(const HopfAlgebra& h);

bool lies_in_block(const ModuleRep& m, const BlockDecomposition& d, int i);
bool is_linearly_reductive(const Algebra& a, std::uint64_t seed = 0xB10C);

/// Evaluates a polynomial at an algebra element.
Vec eval_poly_element(const Algebra& a, const std::vector<Elem>& poly, const Vec& z);

/// Everything that depends on having a splitting field: the algebra is
/// base-changed until block idempotents and simple modules split.
struct Analysis {
  HopfAlgebra h;
  int extension = 1;  // degree over the input field
  std::vector<int> gens;
  BlockDecomposition blocks;
  std::vector<ModuleRep> simples;
  std::vector<int> simple_block;  // block index of each simple
  Mat radical;
  int radical_nilpotency = 1;
  std::vector<Algebra> block_algebras;

  std::vector<int> simples_in_block(int b) const;
  const Field& field() const { return h.field(); }
};

Analysis analyze(const HopfAlgebra& h, std::uint64_t seed = 0xB10C);

struct LocalBlockReport {
  std::vector<int> normal_subgroup;
  bool quotient_unipotent = false;
  bool kn_semisimple = false;
  bool iso_check = false;
  bool containment = false;  // augmentation ideal of kN inside the non-principal blocks
  int principal_dim = 0;
  int quotient_order = 0;
  bool ok() const { return quotient_unipotent && kn_semisimple && iso_check && containment; }
};

/// Requires the principal block of kG to be local.
LocalBlockReport local_principal_structure(const GroupTable& g, const Field& f, std::uint64_t seed = 0xB10C);

}  // namespace blockscope
