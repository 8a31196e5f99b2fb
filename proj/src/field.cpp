#include "covlab/field.hpp"

#include <string>

#include "covlab/error.hpp"

namespace covlab {

namespace {

struct FieldSpec {
  int q;
  int p;
  int degree;
  // Monic modulus coefficients c_0..c_{degree-1}: x^degree = -(sum c_i x^i).
  std::vector<int> modulus;
};

FieldSpec spec_for(int q) {
  switch (q) {
    case 2: return {2, 2, 1, {}};
    case 3: return {3, 3, 1, {}};
    case 5: return {5, 5, 1, {}};
    case 7: return {7, 7, 1, {}};
    case 4: return {4, 2, 2, {1, 1}};     // x^2 + x + 1
    case 8: return {8, 2, 3, {1, 1, 0}};  // x^3 + x + 1
    case 9: return {9, 3, 2, {1, 0}};     // x^2 + 1
    default: throw Error(ErrorCode::UnsupportedOrder, "no field of order " + std::to_string(q) + " available");
  }
}

std::vector<int> digits(int a, int p, int degree) {
  std::vector<int> d(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) {
    d[static_cast<std::size_t>(i)] = a % p;
    a /= p;
  }
  return d;
}

int value(const std::vector<int>& d, int p) {
  int a = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) a = a * p + *it;
  return a;
}

}  // namespace

bool is_supported_field_order(int q) { return q == 2 || q == 3 || q == 4 || q == 5 || q == 7 || q == 8 || q == 9; }

FiniteField::FiniteField(int q) : q_(q) {
  const FieldSpec fs = spec_for(q);
  p_ = fs.p;
  const auto size = static_cast<std::size_t>(q * q);
  add_.resize(size);
  mul_.resize(size);
  for (int a = 0; a < q; ++a) {
    const auto da = digits(a, p_, fs.degree);
    for (int b = 0; b < q; ++b) {
      const auto db = digits(b, p_, fs.degree);
      std::vector<int> sum(static_cast<std::size_t>(fs.degree));
      for (int i = 0; i < fs.degree; ++i) {
        sum[static_cast<std::size_t>(i)] = (da[static_cast<std::size_t>(i)] + db[static_cast<std::size_t>(i)]) % p_;
      }
      add_[index(a, b)] = static_cast<std::uint8_t>(value(sum, p_));

      // Schoolbook product, then reduce the high coefficients.
      std::vector<int> prod(static_cast<std::size_t>(2 * fs.degree - 1), 0);
      for (int i = 0; i < fs.degree; ++i) {
        for (int j = 0; j < fs.degree; ++j) {
          prod[static_cast<std::size_t>(i + j)] += da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)];
        }
      }
      for (int k = 2 * fs.degree - 2; k >= fs.degree; --k) {
        const int c = prod[static_cast<std::size_t>(k)] % p_;
        prod[static_cast<std::size_t>(k)] = 0;
        for (int i = 0; i < fs.degree; ++i) {
          prod[static_cast<std::size_t>(k - fs.degree + i)] += (p_ - fs.modulus[static_cast<std::size_t>(i)]) % p_ * c;
        }
      }
      prod.resize(static_cast<std::size_t>(fs.degree));
      for (int& c : prod) c %= p_;
      mul_[index(a, b)] = static_cast<std::uint8_t>(value(prod, p_));
    }
  }
  neg_.assign(static_cast<std::size_t>(q), -1);
  inv_.assign(static_cast<std::size_t>(q), -1);
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (add(a, b) == 0) neg_[static_cast<std::size_t>(a)] = b;
      if (mul(a, b) == 1) inv_[static_cast<std::size_t>(a)] = b;
    }
  }
  verify_axioms();
}

void FiniteField::verify_axioms() const {
  auto fail = [&](const char* what) {
    throw Error(ErrorCode::UnsupportedOrder, "GF(" + std::to_string(q_) + ") tables violate " + what);
  };
  for (int a = 0; a < q_; ++a) {
    if (add(a, 0) != a || mul(a, 1) != a) fail("identities");
    if (neg_[static_cast<std::size_t>(a)] < 0) fail("additive inverses");
    if (a != 0 && inv_[static_cast<std::size_t>(a)] < 0) fail("multiplicative inverses");
    for (int b = 0; b < q_; ++b) {
      if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a)) fail("commutativity");
      for (int c = 0; c < q_; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c))) fail("additive associativity");
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail("multiplicative associativity");
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) fail("distributivity");
      }
    }
  }
}

}  // namespace covlab
