#pragma once

#include <memory>
#include <string>
#include <vector>

#include "blockscope/group.hpp"
#include "blockscope/matrix.hpp"

namespace blockscope {

using Vec = std::vector<Elem>;

/// Finite-dimensional associative unital algebra given by structure
/// constants b_i b_j = sum_k c(i,j,k) b_k.
class Algebra {
 public:
  Algebra() = default;
  Algebra(const Field& f, int dim, std::vector<Elem> mult, Vec unit, std::vector<std::string> labels = {});

  const Field& field() const { return *field_; }
  const Field* field_ptr() const { return field_; }
  int dim() const { return dim_; }
  Elem c(int i, int j, int k) const { return mult_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k]; }
  const std::vector<Elem>& structure_constants() const { return mult_; }
  const Vec& unit() const { return unit_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Left/right multiplication by basis element i (column convention):
  /// left(i) * coords(x) = coords(b_i x).
  const Mat& left(int i) const { return left_[i]; }
  const Mat& right(int i) const { return right_[i]; }
  Mat left_mult(const Vec& x) const;
  Mat right_mult(const Vec& x) const;
  Vec mul(const Vec& x, const Vec& y) const;
  Vec basis_vector(int i) const;
  Vec zero() const { return Vec(dim_, 0); }
  bool is_commutative() const;

  /// Closed subspace with its own unit (e.g. a block A e); structure
  /// constants are expressed in coordinates w.r.t. the rows of `basis`.
  Algebra subalgebra(const Mat& basis, const Vec& unit_in_ambient) const;

 protected:
  const Field* field_ = nullptr;
  int dim_ = 0;
  std::vector<Elem> mult_;
  Vec unit_;
  std::vector<std::string> labels_;
  std::vector<Mat> left_, right_;
};

/// Cocommutative Hopf algebra: comult is dim^2 x dim (column i = Delta(b_i),
/// index j*dim+k for b_j (x) b_k), counit 1 x dim, antipode dim x dim.
class HopfAlgebra : public Algebra {
 public:
  struct Term {
    int left, right;
    Elem coeff;
  };

  HopfAlgebra() = default;
  HopfAlgebra(Algebra alg, Mat comult, Mat counit, Mat antipode, std::string name = {});

  const Mat& comult() const { return comult_; }
  const Mat& counit() const { return counit_; }
  const Mat& antipode() const { return antipode_; }
  const std::vector<Term>& coproduct(int i) const { return terms_[i]; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  /// Present when built by group_algebra (basis = group elements).
  const GroupTable* group() const { return group_.get(); }
  void set_group(std::shared_ptr<const GroupTable> g) { group_ = std::move(g); }

  Elem counit_of(const Vec& x) const;
  Vec antipode_of(const Vec& x) const;

  /// Stable hex hash of field + all structure data.
  std::string fingerprint() const;

 private:
  Mat comult_, counit_, antipode_;
  std::vector<std::vector<Term>> terms_;
  std::string name_;
  std::shared_ptr<const GroupTable> group_;
};

struct AxiomResult {
  std::string name;
  bool pass = true;
  std::string witness;  // first failing basis tuple
};

struct HopfVerdict {
  std::vector<AxiomResult> axioms;
  bool ok() const;
  const AxiomResult& operator[](const std::string& name) const;
};

HopfVerdict validate_hopf(const HopfAlgebra& h);

HopfAlgebra group_algebra(const GroupTable& g, const Field& f);
HopfAlgebra truncated_poly(int p, const Field& f);
HopfAlgebra product_hopf(const HopfAlgebra& a, const HopfAlgebra& b);
HopfAlgebra trivial_hopf(const Field& f);
/// Restricted enveloping algebra of sl2 in characteristic 3, PBW basis
/// e^a h^b f^c at index 9a + 3b + c.
HopfAlgebra u_sl2(const Field& f);

/// Same structure constants read in a larger field.
Algebra base_change(const Algebra& a, const Field& to);
HopfAlgebra base_change(const HopfAlgebra& h, const Field& to);

/// Maps a vector/matrix of scalars along the canonical embedding.
Vec embed_vec(const Vec& v, const Field& from, const Field& to);
Mat embed_mat(const Mat& m, const Field& to);

}  // namespace blockscope
