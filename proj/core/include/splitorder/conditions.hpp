#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "splitorder/lyndon.hpp"
#include "splitorder/poly.hpp"
#include "splitorder/series.hpp"

namespace splitorder {

struct SchemeShape {
  int stages = 1;

  // Throws InvalidArgument for stages < 1.
  explicit SchemeShape(int stages);

  friend bool operator==(const SchemeShape&, const SchemeShape&) = default;
};

// Coefficients of e^{a_1 A t} e^{b_1 B t} ... e^{a_s A t} e^{b_s B t} as
// polynomials. The generic scheme has a_j, b_j equal to the symbols.
struct SymbolicScheme {
  SchemeShape shape;
  std::vector<CoeffPoly> a;
  std::vector<CoeffPoly> b;

  static SymbolicScheme generic(SchemeShape shape);
};

struct ConcreteScheme {
  SchemeShape shape;
  std::vector<Rational> a;
  std::vector<Rational> b;
  std::string name;

  // Throws InvalidArgument unless |a| == |b| >= 1.
  ConcreteScheme(std::vector<Rational> a, std::vector<Rational> b, std::string name = {});

  // Same scheme with trailing zero stages up to `stages` (no-op if already that long).
  [[nodiscard]] ConcreteScheme padded(int stages) const;
  [[nodiscard]] SymbolicScheme as_symbolic() const;
  // a_j, b_j as a point for evaluating condition polynomials.
  [[nodiscard]] Assignment assignment() const;
};

enum class Route { taylor, bch };

std::string to_string(Route route);
// "taylor" / "bch". Throws ParseError.
Route parse_route(const std::string& text);

struct Condition {
  unsigned degree = 0;
  LyndonWord lyndon;
  CoeffPoly polynomial;
  Rational rhs;
};

// Order conditions polynomial(a, b) = rhs, sorted by (degree, Lyndon word).
struct ConditionSystem {
  int stages = 0;
  int target_order = 0;
  Route route = Route::bch;
  std::vector<Condition> entries;
};

// Ordered product of exp(a_j A) exp(b_j B), truncated at `truncation`.
NCSeries splitting_product(const SymbolicScheme& scheme, unsigned truncation);

// splitting_product - exp(A + B); its degree-0 part vanishes.
NCSeries local_error_series(const SymbolicScheme& scheme, unsigned truncation);

// q-th derivative of the local error at t = 0, built directly from the
// multinomial expansion
//   sum_{|k|=q} q!/(k_1!...k_s!) prod_j sum_l C(k_j,l) (a_j A)^l (b_j B)^{k_j-l} - (A+B)^q.
// Result is homogeneous of degree q with truncation q.
NCSeries taylor_derivative(const SymbolicScheme& scheme, unsigned q);

// One entry per Lyndon word w of degree 1..p: coefficient of the word w in
// taylor_derivative(q). No lower-order substitution is applied.
ConditionSystem conditions_taylor(SchemeShape shape, int p);

// One entry per Lyndon word w of degree 1..p: Lyndon coordinate of
// log(splitting_product) - (A + B). Propagates NotALieElement (never
// expected; it would indicate an engine bug).
ConditionSystem conditions_bch(SchemeShape shape, int p);

ConditionSystem generate_conditions(SchemeShape shape, int p, Route route);

struct Residual {
  unsigned degree = 0;
  LyndonWord lyndon;
  Rational value;
};

struct VerificationResult {
  bool satisfied = false;
  std::vector<Residual> residuals;  // every entry, zero or not
};

// polynomial(point) - rhs for each entry. The scheme may have fewer stages
// than the system; missing stages are zero.
VerificationResult evaluate_system(const ConditionSystem& system, const ConcreteScheme& scheme);

VerificationResult verify_scheme(const ConcreteScheme& scheme, int p, Route route);

// Approximate point for falsification checks (numerically refined roots).
struct NumericWitness {
  std::vector<std::complex<double>> a;
  std::vector<std::complex<double>> b;
};

struct WitnessVerdict {
  std::string label;
  bool satisfies_first = false;
  bool satisfies_second = false;
  std::vector<double> residuals_first;  // |polynomial(point) - rhs| per entry
  std::vector<double> residuals_second;

  [[nodiscard]] bool agree() const { return satisfies_first == satisfies_second; }
};

struct EquivalenceReport {
  std::vector<WitnessVerdict> verdicts;

  [[nodiscard]] bool all_agree() const;
  [[nodiscard]] std::size_t disagreements() const;
};

// Falsification harness: every witness must satisfy both systems or
// neither. Exact witnesses are judged with exact arithmetic; numeric ones
// satisfy a system when every residual magnitude is <= tolerance.
EquivalenceReport systems_equivalent(const ConditionSystem& first, const ConditionSystem& second,
                                     const std::vector<ConcreteScheme>& exact_witnesses,
                                     const std::vector<NumericWitness>& numeric_witnesses = {},
                                     double tolerance = 1e-9);

// |polynomial(point) - rhs| for each entry of the system.
std::vector<double> numeric_residuals(const ConditionSystem& system, const NumericWitness& point);

// Lyndon coordinates of the degree-(p+1) part of the local error of a
// scheme of order p. Throws NotOrderP if the local error has a nonzero
// part of degree 1..p.
LieDecomposition leading_error_term(const ConcreteScheme& scheme, int p);

// Largest p such that the local error vanishes through degree p, searched
// up to max_order (returns max_order if all vanish).
int scheme_order(const ConcreteScheme& scheme, int max_order);

}  // namespace splitorder
