#pragma once

#include <cstdint>
#include <vector>

namespace covlab {

// Finite field of order q in {2,3,4,5,7,8,9}, elements 0..q-1 with 0 and 1 the
// identities. Prime orders use residues; prime powers use polynomial
// coefficients in base p (x^2+x+1 for GF(4), x^3+x+1 for GF(8), x^2+1 for
// GF(9)). The tables are checked against the field axioms on construction.
class FiniteField {
 public:
  explicit FiniteField(int q);

  int order() const { return q_; }
  int characteristic() const { return p_; }
  int add(int a, int b) const { return add_[index(a, b)]; }
  int mul(int a, int b) const { return mul_[index(a, b)]; }
  int neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  int sub(int a, int b) const { return add(a, neg(b)); }

 private:
  std::size_t index(int a, int b) const { return static_cast<std::size_t>(a * q_ + b); }
  void verify_axioms() const;

  int q_;
  int p_;
  std::vector<std::uint8_t> add_;
  std::vector<std::uint8_t> mul_;
  std::vector<int> neg_;
  std::vector<int> inv_;
};

bool is_supported_field_order(int q);

}  // namespace covlab
