#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "splitorder/errors.hpp"
#include "splitorder/rational.hpp"

namespace splitorder {

// One stage coefficient of a splitting scheme: a_j or b_j, stage j >= 1.
struct SymbolId {
  enum class Kind : std::uint8_t { a = 0, b = 1 };

  Kind kind = Kind::a;
  int stage = 1;

  static SymbolId a(int stage) { return {Kind::a, stage}; }
  static SymbolId b(int stage) { return {Kind::b, stage}; }

  // Position in the variable order a1 < b1 < a2 < b2 < ...
  [[nodiscard]] int rank() const { return 2 * (stage - 1) + static_cast<int>(kind); }
  static SymbolId from_rank(int rank) { return {static_cast<Kind>(rank % 2), rank / 2 + 1}; }

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const SymbolId&, const SymbolId&) = default;
  friend auto operator<=>(const SymbolId& lhs, const SymbolId& rhs) { return lhs.rank() <=> rhs.rank(); }
};

// Power product of symbols. Exponents are positive; absent symbols have
// exponent zero. Factors are kept sorted by SymbolId::rank.
class Monomial {
 public:
  using Factor = std::pair<SymbolId, unsigned>;

  Monomial() = default;
  explicit Monomial(SymbolId symbol, unsigned exponent = 1);

  [[nodiscard]] const std::vector<Factor>& factors() const { return factors_; }
  [[nodiscard]] unsigned degree() const { return degree_; }
  [[nodiscard]] bool is_one() const { return factors_.empty(); }
  [[nodiscard]] unsigned exponent(SymbolId symbol) const;

  friend Monomial operator*(const Monomial& lhs, const Monomial& rhs);
  friend bool operator==(const Monomial& lhs, const Monomial& rhs) { return lhs.factors_ == rhs.factors_; }

  // "a1^2*b3"; empty string for the unit monomial.
  [[nodiscard]] std::string to_string() const;

 private:
  std::vector<Factor> factors_;
  unsigned degree_ = 0;
};

// Graded lexicographic order, descending: higher total degree first, then
// the monomial with the larger exponent on the earliest differing variable.
struct GrlexDescending {
  bool operator()(const Monomial& lhs, const Monomial& rhs) const;
};

using Assignment = std::map<SymbolId, Rational>;

// Commutative polynomial in the stage symbols with exact rational
// coefficients. Zero coefficients are never stored.
class CoeffPoly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexDescending>;

  CoeffPoly() = default;
  CoeffPoly(Rational constant);  // NOLINT(google-explicit-constructor)
  CoeffPoly(int constant) : CoeffPoly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit CoeffPoly(SymbolId symbol);
  CoeffPoly(Monomial monomial, Rational coefficient);

  static CoeffPoly symbol(SymbolId id) { return CoeffPoly(id); }

  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const;
  // Constant term (coefficient of the unit monomial).
  [[nodiscard]] Rational constant_term() const;
  [[nodiscard]] Rational coefficient(const Monomial& monomial) const;
  [[nodiscard]] unsigned total_degree() const;
  // Largest stage index among the symbols that occur, 0 for constants.
  [[nodiscard]] int max_stage() const;

  CoeffPoly& operator+=(const CoeffPoly& rhs);
  CoeffPoly& operator-=(const CoeffPoly& rhs);
  CoeffPoly& operator*=(const CoeffPoly& rhs);
  CoeffPoly& operator*=(const Rational& scalar);

  friend CoeffPoly operator+(CoeffPoly lhs, const CoeffPoly& rhs) { return lhs += rhs; }
  friend CoeffPoly operator-(CoeffPoly lhs, const CoeffPoly& rhs) { return lhs -= rhs; }
  friend CoeffPoly operator*(const CoeffPoly& lhs, const CoeffPoly& rhs);
  friend CoeffPoly operator*(CoeffPoly lhs, const Rational& rhs) { return lhs *= rhs; }
  friend CoeffPoly operator*(const Rational& lhs, CoeffPoly rhs) { return rhs *= lhs; }
  CoeffPoly operator-() const;

  friend bool operator==(const CoeffPoly& lhs, const CoeffPoly& rhs) { return lhs.terms_ == rhs.terms_; }

  // Terms in canonical order, e.g. "1/2*a1*b2 - a2*b1"; "0" for zero.
  [[nodiscard]] std::string to_string() const;

  // Exact value at a point. Throws MissingAssignment if a symbol of the
  // polynomial has no value.
  [[nodiscard]] Rational evaluate(const Assignment& point) const;

  // Value in another field (double, std::complex<double>, ...).
  // `value_of` maps each occurring symbol to a field element.
  template <class Field, class Lookup>
  [[nodiscard]] Field evaluate_as(Lookup&& value_of) const;

 private:
  void add_term(const Monomial& monomial, const Rational& coefficient);

  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const CoeffPoly& poly);

// Result kinds of poly_arith.
enum class PolyOp { add, sub, mul };

CoeffPoly poly_arith(const CoeffPoly& lhs, const CoeffPoly& rhs, PolyOp op);
Rational poly_eval(const CoeffPoly& poly, const Assignment& point);
inline bool poly_is_zero(const CoeffPoly& poly) { return poly.is_zero(); }

template <class Field, class Lookup>
Field CoeffPoly::evaluate_as(Lookup&& value_of) const {
  Field total{0};
  for (const auto& [monomial, coefficient] : terms_) {
    Field term{coefficient.to_double()};
    for (const auto& [symbol, exponent] : monomial.factors()) {
      const Field base = value_of(symbol);
      for (unsigned k = 0; k < exponent; ++k) term *= base;
    }
    total += term;
  }
  return total;
}

}  // namespace splitorder
