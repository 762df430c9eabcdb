#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "kuelsh/errors.hpp"

namespace kuelsh {

/// Exact arithmetic in F_{p^k}.
///
/// Elements are packed codes: the element with coordinates (c_0, ..., c_{k-1})
/// in the power basis of the modulus root g is encoded as the integer
/// sum c_i * p^i.  Code 0 is the zero element, code 1 the unit.
///
/// Instances are interned per (p, k) and immutable, so descriptor identity is
/// pointer identity and all operations are reentrant.
class Field {
 public:
  /// Interned descriptor for F_{p^k}.  The modulus is the lexicographically
  /// smallest irreducible monic polynomial of degree k over F_p, coefficient
  /// list ordered low-to-high, so equal (p, k) always yield identical
  /// element encodings.
  ///
  /// Throws NotPrime, DegreeZero, SizeOverflow (p^k must fit in 62 bits).
  static const Field& get(std::uint64_t p, std::uint64_t k);

  std::uint64_t p() const noexcept { return p_; }
  std::uint64_t k() const noexcept { return k_; }
  /// Number of elements q = p^k.
  std::uint64_t size() const noexcept { return q_; }
  /// Coefficients c_0..c_{k-1} of the monic modulus x^k + sum c_i x^i.
  const std::vector<std::uint64_t>& modulus() const noexcept { return mod_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg(std::uint64_t a) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t inv(std::uint64_t a) const;  // throws DivisionByZero on 0
  std::uint64_t div(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

  /// a^(p^n).  Total on all elements; periodic in n with period k.
  std::uint64_t frobenius(std::uint64_t a, std::uint64_t n) const;
  /// The unique b with b^(p^n) = a (finite fields are perfect).
  std::uint64_t frobenius_inverse(std::uint64_t a, std::uint64_t n) const;

  /// The constant n mod p.
  std::uint64_t from_int(std::uint64_t n) const { return n % p_; }
  std::uint64_t generator() const;  // the class of g; throws for k == 1

  /// Polynomial-in-g syntax: "0", "1", "g+1", "2*g^2+1".  format and parse
  /// round-trip bit-exactly.
  std::uint64_t parse(std::string_view text) const;
  std::string format(std::uint64_t a) const;

  bool is(const Field& other) const noexcept { return this == &other; }

  /// Fast lookup tables, present when size() <= table_limit.
  static constexpr std::uint64_t table_limit = 256;
  bool has_tables() const noexcept { return !mul_tbl_.empty(); }
  const std::uint16_t* add_table() const noexcept { return add_tbl_.data(); }
  const std::uint16_t* mul_table() const noexcept { return mul_tbl_.data(); }

 private:
  Field(std::uint64_t p, std::uint64_t k);

  std::vector<std::uint64_t> decode(std::uint64_t a) const;
  std::uint64_t encode(const std::vector<std::uint64_t>& c) const;
  std::uint64_t mul_nocache(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t add_nocache(std::uint64_t a, std::uint64_t b) const;

  std::uint64_t p_, k_, q_;
  std::vector<std::uint64_t> mod_;
  std::vector<std::uint16_t> add_tbl_, mul_tbl_;
  std::vector<std::uint16_t> inv_tbl_, neg_tbl_, frob_tbl_;
};

/// Element with an attached descriptor; arithmetic checks MixedFields.
struct FieldElem {
  const Field* field = nullptr;
  std::uint64_t code = 0;

  FieldElem() = default;
  FieldElem(const Field& f, std::uint64_t c) : field(&f), code(c) {}

  friend FieldElem operator+(FieldElem a, FieldElem b) {
    check_same(a, b);
    return {*a.field, a.field->add(a.code, b.code)};
  }
  friend FieldElem operator-(FieldElem a, FieldElem b) {
    check_same(a, b);
    return {*a.field, a.field->sub(a.code, b.code)};
  }
  friend FieldElem operator*(FieldElem a, FieldElem b) {
    check_same(a, b);
    return {*a.field, a.field->mul(a.code, b.code)};
  }
  friend FieldElem operator/(FieldElem a, FieldElem b) {
    check_same(a, b);
    return {*a.field, a.field->div(a.code, b.code)};
  }
  FieldElem operator-() const { return {*field, field->neg(code)}; }
  bool operator==(const FieldElem& o) const = default;

  static void check_same(const FieldElem& a, const FieldElem& b) {
    if (a.field != b.field)
      fail(errc::mixed_fields, "operands belong to different fields");
  }
};

/// Parses a field-element expression: + - * / ^, parentheses, integer
/// literals, the generator g, and identifiers supplied by `lookup`.
/// Used for DSL coefficients; Field::parse wires a null lookup.
std::uint64_t parse_field_expr(
    const Field& f, std::string_view text,
    const std::function<const std::uint64_t*(std::string_view)>& lookup);

}  // namespace kuelsh
