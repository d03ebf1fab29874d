#include "splitorder/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace splitorder {

namespace {

constexpr unsigned kAlphabet = 2;

Rational factorial(unsigned n) {
  Rational out(1);
  for (unsigned k = 2; k <= n; ++k) out *= Rational(static_cast<long>(k));
  return out;
}

CoeffPoly power(const CoeffPoly& base, unsigned exponent) {
  CoeffPoly out(1);
  for (unsigned k = 0; k < exponent; ++k) out *= base;
  return out;
}

// Calls visit(k) for every k in N_0^parts with |k| = total.
void for_each_composition(unsigned total, int parts, const std::function<void(const std::vector<unsigned>&)>& visit) {
  std::vector<unsigned> k(static_cast<std::size_t>(parts), 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t pos, unsigned left) {
    if (pos + 1 == k.size()) {
      k[pos] = left;
      visit(k);
      return;
    }
    for (unsigned v = 0; v <= left; ++v) {
      k[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, total);
}

NCSeries sum_of_letters(unsigned truncation) {
  return NCSeries::letter(kAlphabet, truncation, kA) + NCSeries::letter(kAlphabet, truncation, kB);
}

}  // namespace

SchemeShape::SchemeShape(int stages) : stages(stages) {
  if (stages < 1) throw InvalidArgument("a splitting scheme needs at least one stage");
}

SymbolicScheme SymbolicScheme::generic(SchemeShape shape) {
  SymbolicScheme out{shape, {}, {}};
  for (int j = 1; j <= shape.stages; ++j) {
    out.a.emplace_back(SymbolId::a(j));
    out.b.emplace_back(SymbolId::b(j));
  }
  return out;
}

ConcreteScheme::ConcreteScheme(std::vector<Rational> a_, std::vector<Rational> b_, std::string name_)
    : shape(static_cast<int>(std::max<std::size_t>(a_.size(), 1))), a(std::move(a_)), b(std::move(b_)),
      name(std::move(name_)) {
  if (a.empty() || a.size() != b.size()) {
    throw InvalidArgument("scheme needs equally many a and b coefficients (got " + std::to_string(a.size()) + " and " +
                          std::to_string(b.size()) + ")");
  }
}

ConcreteScheme ConcreteScheme::padded(int stages) const {
  ConcreteScheme out = *this;
  if (stages > shape.stages) {
    out.a.resize(static_cast<std::size_t>(stages));
    out.b.resize(static_cast<std::size_t>(stages));
    out.shape = SchemeShape(stages);
  }
  return out;
}

SymbolicScheme ConcreteScheme::as_symbolic() const {
  SymbolicScheme out{shape, {}, {}};
  for (std::size_t j = 0; j < a.size(); ++j) {
    out.a.emplace_back(a[j]);
    out.b.emplace_back(b[j]);
  }
  return out;
}

Assignment ConcreteScheme::assignment() const {
  Assignment point;
  for (std::size_t j = 0; j < a.size(); ++j) {
    point.emplace(SymbolId::a(static_cast<int>(j) + 1), a[j]);
    point.emplace(SymbolId::b(static_cast<int>(j) + 1), b[j]);
  }
  return point;
}

std::string to_string(Route route) { return route == Route::taylor ? "taylor" : "bch"; }

Route parse_route(const std::string& text) {
  if (text == "taylor") return Route::taylor;
  if (text == "bch") return Route::bch;
  throw ParseError("unknown route '" + text + "' (expected taylor or bch)");
}

NCSeries splitting_product(const SymbolicScheme& scheme, unsigned truncation) {
  NCSeries product = NCSeries::one(kAlphabet, truncation);
  for (std::size_t j = 0; j < scheme.a.size(); ++j) {
    product = product * nc_exp(NCSeries::letter(kAlphabet, truncation, kA, scheme.a[j]));
    product = product * nc_exp(NCSeries::letter(kAlphabet, truncation, kB, scheme.b[j]));
  }
  return product;
}

NCSeries local_error_series(const SymbolicScheme& scheme, unsigned truncation) {
  return splitting_product(scheme, truncation) - nc_exp(sum_of_letters(truncation));
}

NCSeries taylor_derivative(const SymbolicScheme& scheme, unsigned q) {
  const int s = static_cast<int>(scheme.a.size());
  const Rational q_factorial = factorial(q);
  NCSeries total(kAlphabet, q);
  for_each_composition(q, s, [&](const std::vector<unsigned>& k) {
    Rational multinomial = q_factorial;
    for (unsigned kj : k) multinomial /= factorial(kj);
    NCSeries product = NCSeries::monomial(kAlphabet, q, Word{}, CoeffPoly(multinomial));
    for (std::size_t j = 0; j < k.size(); ++j) {
      NCSeries factor(kAlphabet, q);
      for (unsigned l = 0; l <= k[j]; ++l) {
        std::vector<Letter> letters(l, kA);
        letters.insert(letters.end(), k[j] - l, kB);
        const Rational binom = factorial(k[j]) / (factorial(l) * factorial(k[j] - l));
        factor.add_term(Word(std::move(letters)),
                        binom * power(scheme.a[j], l) * power(scheme.b[j], k[j] - l));
      }
      product = product * factor;
    }
    total += product;
  });
  // (A + B)^q: every word of length q with coefficient 1.
  NCSeries sum_power = NCSeries::one(kAlphabet, q);
  for (unsigned k = 0; k < q; ++k) sum_power = sum_power * sum_of_letters(q);
  return total - sum_power;
}

ConditionSystem conditions_taylor(SchemeShape shape, int p) {
  if (p < 1) throw InvalidArgument("target order must be at least 1");
  const SymbolicScheme scheme = SymbolicScheme::generic(shape);
  ConditionSystem system{shape.stages, p, Route::taylor, {}};
  for (unsigned q = 1; q <= static_cast<unsigned>(p); ++q) {
    const NCSeries derivative = taylor_derivative(scheme, q);
    for (auto& w : lyndon_words_of_degree(kAlphabet, q)) {
      CoeffPoly polynomial = derivative.coefficient(w.word());
      system.entries.push_back({q, std::move(w), std::move(polynomial), Rational{}});
    }
  }
  return system;
}

ConditionSystem conditions_bch(SchemeShape shape, int p) {
  if (p < 1) throw InvalidArgument("target order must be at least 1");
  const auto truncation = static_cast<unsigned>(p);
  const NCSeries z = nc_log(splitting_product(SymbolicScheme::generic(shape), truncation)) -
                     sum_of_letters(truncation);
  ConditionSystem system{shape.stages, p, Route::bch, {}};
  for (unsigned q = 1; q <= truncation; ++q) {
    LieDecomposition part = lie_decompose(homogeneous_part(z, q), q);
    for (auto& [w, coefficient] : part.coefficients) system.entries.push_back({q, w, coefficient, Rational{}});
  }
  return system;
}

ConditionSystem generate_conditions(SchemeShape shape, int p, Route route) {
  return route == Route::taylor ? conditions_taylor(shape, p) : conditions_bch(shape, p);
}

VerificationResult evaluate_system(const ConditionSystem& system, const ConcreteScheme& scheme) {
  if (scheme.shape.stages > system.stages) {
    throw InvalidArgument("scheme has " + std::to_string(scheme.shape.stages) + " stages, system only " +
                          std::to_string(system.stages));
  }
  const Assignment point = scheme.padded(system.stages).assignment();
  VerificationResult out;
  out.satisfied = true;
  for (const auto& entry : system.entries) {
    Rational value = entry.polynomial.evaluate(point) - entry.rhs;
    if (!value.is_zero()) out.satisfied = false;
    out.residuals.push_back({entry.degree, entry.lyndon, std::move(value)});
  }
  return out;
}

VerificationResult verify_scheme(const ConcreteScheme& scheme, int p, Route route) {
  return evaluate_system(generate_conditions(scheme.shape, p, route), scheme);
}

std::vector<double> numeric_residuals(const ConditionSystem& system, const NumericWitness& point) {
  using C = std::complex<double>;
  auto value_of = [&](SymbolId id) -> C {
    const auto& coords = id.kind == SymbolId::Kind::a ? point.a : point.b;
    const auto idx = static_cast<std::size_t>(id.stage - 1);
    return idx < coords.size() ? coords[idx] : C{0.0};
  };
  std::vector<double> out;
  out.reserve(system.entries.size());
  for (const auto& entry : system.entries) {
    out.push_back(std::abs(entry.polynomial.evaluate_as<C>(value_of) - C{entry.rhs.to_double()}));
  }
  return out;
}

bool EquivalenceReport::all_agree() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const WitnessVerdict& v) { return v.agree(); });
}

std::size_t EquivalenceReport::disagreements() const {
  return static_cast<std::size_t>(
      std::count_if(verdicts.begin(), verdicts.end(), [](const WitnessVerdict& v) { return !v.agree(); }));
}

EquivalenceReport systems_equivalent(const ConditionSystem& first, const ConditionSystem& second,
                                     const std::vector<ConcreteScheme>& exact_witnesses,
                                     const std::vector<NumericWitness>& numeric_witnesses, double tolerance) {
  EquivalenceReport report;
  auto magnitudes = [](const VerificationResult& r) {
    std::vector<double> out;
    for (const auto& residual : r.residuals) out.push_back(std::abs(residual.value.to_double()));
    return out;
  };
  for (const auto& witness : exact_witnesses) {
    const VerificationResult r1 = evaluate_system(first, witness);
    const VerificationResult r2 = evaluate_system(second, witness);
    report.verdicts.push_back({witness.name, r1.satisfied, r2.satisfied, magnitudes(r1), magnitudes(r2)});
  }
  auto within = [tolerance](const std::vector<double>& residuals) {
    return std::all_of(residuals.begin(), residuals.end(), [tolerance](double r) { return r <= tolerance; });
  };
  for (std::size_t i = 0; i < numeric_witnesses.size(); ++i) {
    std::vector<double> r1 = numeric_residuals(first, numeric_witnesses[i]);
    std::vector<double> r2 = numeric_residuals(second, numeric_witnesses[i]);
    const bool s1 = within(r1);
    const bool s2 = within(r2);
    report.verdicts.push_back({"numeric#" + std::to_string(i), s1, s2, std::move(r1), std::move(r2)});
  }
  return report;
}

LieDecomposition leading_error_term(const ConcreteScheme& scheme, int p) {
  if (p < 1) throw InvalidArgument("target order must be at least 1");
  const auto truncation = static_cast<unsigned>(p + 1);
  const NCSeries error = local_error_series(scheme.as_symbolic(), truncation);
  if (!degree_range(error, 1, truncation - 1).is_zero()) {
    throw NotOrderP("scheme '" + scheme.name + "' is not of order " + std::to_string(p));
  }
  return lie_decompose(homogeneous_part(error, truncation), truncation);
}

int scheme_order(const ConcreteScheme& scheme, int max_order) {
  const NCSeries error = local_error_series(scheme.as_symbolic(), static_cast<unsigned>(max_order + 1));
  const unsigned first = error.order();
  return std::min(max_order, static_cast<int>(first) - 1);
}

}  // namespace splitorder
