#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace blockscope {

/// Field element encoded as the integer sum c_i p^i of its coefficients
/// in the polynomial basis 1, a, a^2, ... over the prime subfield.
using Elem = std::uint16_t;

struct FieldSpec {
  int p = 2;
  int e = 1;
  std::vector<int> modulus;  // monic, low-to-high, size e + 1

  bool operator==(const FieldSpec&) const = default;
  std::string to_string() const;
};

/// Finite field F_q with q = p^e <= 1024, realized through full addition
/// and multiplication tables. Instances are interned and live for the
/// whole process, so raw pointers to them are stable.
class Field {
 public:
  static constexpr int kMaxOrder = 1024;

  /// Field of order p^e with the lexicographically first irreducible
  /// modulus (lowest coefficient varies fastest).
  static const Field& get(int p, int e = 1);
  static const Field& with_modulus(int p, const std::vector<int>& modulus);
  static const Field& from_spec(const FieldSpec& spec);

  int p() const { return p_; }
  int degree() const { return e_; }
  int size() const { return q_; }
  bool is_prime() const { return e_ == 1; }
  const std::vector<int>& modulus() const { return modulus_; }
  FieldSpec spec() const { return {p_, e_, modulus_}; }

  Elem add(Elem a, Elem b) const { return add_[index(a, b)]; }
  Elem sub(Elem a, Elem b) const { return add_[index(a, neg_[b])]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem mul(Elem a, Elem b) const { return mul_[index(a, b)]; }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, long long n) const;

  /// Row of the multiplication table for a fixed left factor.
  const Elem* mul_row(Elem a) const { return mul_.data() + static_cast<size_t>(a) * q_; }
  const Elem* add_row(Elem a) const { return add_.data() + static_cast<size_t>(a) * q_; }

  Elem from_int(long long v) const;
  Elem generator() const;  // the class of the indeterminate a
  std::vector<int> coeffs(Elem a) const;
  Elem from_coeffs(const std::vector<int>& c) const;

  /// Polynomial string over the prime subfield, e.g. "a^2+2" or "1".
  std::string format(Elem a) const;

 private:
  Field(int p, std::vector<int> modulus);
  size_t index(Elem a, Elem b) const { return static_cast<size_t>(a) * q_ + b; }

  int p_;
  int e_;
  int q_;
  std::vector<int> modulus_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
};

bool is_prime_number(int n);

/// Irreducibility of a monic polynomial over F_p (coefficients low-to-high).
bool is_irreducible_mod_p(int p, const std::vector<int>& poly);

struct FieldExtension {
  const Field* field;
  /// Row i is the image of a^i (old generator powers) in the new field,
  /// expanded over the prime subfield: e_old x e_new matrix of F_p digits.
  std::vector<std::vector<int>> embedding;
  /// Image of every old element, indexed by its encoding.
  std::vector<Elem> image;
};

/// F_{q^d} together with an embedding of F_q as a ring map.
FieldExtension extend_field(const Field& f, int d);

/// Ring embedding between two fields of the same characteristic, when the
/// degree of `from` divides the degree of `to`.
std::vector<Elem> field_embedding(const Field& from, const Field& to);

}  // namespace blockscope
