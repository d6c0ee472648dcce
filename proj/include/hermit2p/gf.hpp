// Finite field arithmetic GF(p^m) for orders up to 2^16.
//
// Elements are encoded as integers: the polynomial c0 + c1*x + ... + c_{m-1}*x^{m-1}
// over GF(p) is stored as c0 + c1*p + ... + c_{m-1}*p^{m-1}. Multiplication and
// division go through log/antilog tables built once per field from a primitive
// element; addition is an XOR for p = 2, a lookup table for small odd-p orders
// and digit arithmetic otherwise.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace hermit2p {

using Elem = std::uint16_t;

class Field {
 public:
  // Modulus chosen from the built-in table (orders 4, 9, 16, 64), or the
  // lexicographically smallest monic irreducible of degree m otherwise.
  Field(unsigned characteristic, unsigned degree);
  // Explicit monic modulus, little-endian coefficients, length degree+1.
  Field(unsigned characteristic, unsigned degree, std::vector<unsigned> modulus);

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  // Process-wide cache; returned references stay valid for the program lifetime.
  static const Field& get(unsigned characteristic, unsigned degree);
  static const Field& of_order(std::uint32_t order);

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return m_; }
  std::uint32_t order() const { return order_; }
  const std::vector<unsigned>& modulus() const { return modulus_; }
  Elem generator() const { return generator_; }

  Elem add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    if (!add_.empty()) return add_[std::size_t(a) * order_ + b];
    return add_digits(a, b);
  }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg_[b]); }
  Elem mul(Elem a, Elem b) const {
    return (a && b) ? exp_[std::uint32_t(log_[a]) + log_[b]] : 0;
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const;
  Elem pow(Elem a, long long e) const;

  // Frobenius power a -> a^s where order == s^2.
  Elem conjugate(Elem a, std::uint32_t subfield_order) const;
  bool in_subfield(Elem a, std::uint32_t subfield_order) const;

  // Reference multiplication through polynomial arithmetic, no tables.
  Elem mul_slow(Elem a, Elem b) const;

  std::vector<unsigned> coefficients(Elem a) const;
  Elem from_coefficients(std::span<const unsigned> coeffs) const;
  // Range-checked decode of an integer encoding.
  Elem element(std::uint32_t encoded) const;

  bool same_spec(const Field& other) const {
    return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
  }

  // Raw tables for enumeration-heavy callers. add_table() is null when the
  // field has no materialized addition table (p = 2 or large odd-p orders).
  const Elem* add_table() const { return add_.empty() ? nullptr : add_.data(); }
  const Elem* exp_table() const { return exp_.data(); }
  const std::uint32_t* log_table() const { return log_.data(); }

 private:
  void build(std::vector<unsigned> modulus);
  Elem add_digits(Elem a, Elem b) const;

  unsigned p_ = 0;
  unsigned m_ = 0;
  std::uint32_t order_ = 0;
  std::vector<unsigned> modulus_;
  Elem generator_ = 0;
  std::vector<Elem> exp_;          // size 2*(order-1), doubled to skip a modulo
  std::vector<std::uint32_t> log_; // log_[0] is a sentinel, never read
  std::vector<Elem> neg_;
  std::vector<Elem> add_;          // order x order, only for odd p and order <= 256
};

// Value wrapper tying an element to its field; operations check that both
// operands come from the same field spec.
class FieldElement {
 public:
  FieldElement(const Field& field, Elem value);

  const Field& field() const { return *field_; }
  Elem value() const { return value_; }
  std::vector<unsigned> coefficients() const { return field_->coefficients(value_); }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  const Field* field_;
  Elem value_;
};

}  // namespace hermit2p
