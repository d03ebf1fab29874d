#include "splitorder/poly.hpp"

#include <algorithm>
#include <ostream>

namespace splitorder {

std::string SymbolId::to_string() const {
  return (kind == Kind::a ? "a" : "b") + std::to_string(stage);
}

Monomial::Monomial(SymbolId symbol, unsigned exponent) : degree_(exponent) {
  if (exponent > 0) factors_.emplace_back(symbol, exponent);
}

unsigned Monomial::exponent(SymbolId symbol) const {
  for (const auto& [s, e] : factors_) {
    if (s == symbol) return e;
  }
  return 0;
}

Monomial operator*(const Monomial& lhs, const Monomial& rhs) {
  Monomial out;
  out.factors_.reserve(lhs.factors_.size() + rhs.factors_.size());
  auto i = lhs.factors_.begin();
  auto j = rhs.factors_.begin();
  while (i != lhs.factors_.end() || j != rhs.factors_.end()) {
    if (j == rhs.factors_.end() || (i != lhs.factors_.end() && i->first.rank() < j->first.rank())) {
      out.factors_.push_back(*i++);
    } else if (i == lhs.factors_.end() || j->first.rank() < i->first.rank()) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  out.degree_ = lhs.degree_ + rhs.degree_;
  return out;
}

std::string Monomial::to_string() const {
  // Printed as a's then b's.
  auto printed = factors_;
  std::stable_sort(printed.begin(), printed.end(),
                   [](const auto& l, const auto& r) { return l.first.kind < r.first.kind; });
  std::string out;
  for (const auto& [symbol, exponent] : printed) {
    if (!out.empty()) out += '*';
    out += symbol.to_string();
    if (exponent > 1) out += '^' + std::to_string(exponent);
  }
  return out;
}

bool GrlexDescending::operator()(const Monomial& lhs, const Monomial& rhs) const {
  if (lhs.degree() != rhs.degree()) return lhs.degree() > rhs.degree();
  // Walk both sorted factor lists; the first variable where exponents
  // differ decides, larger exponent first.
  const auto& l = lhs.factors();
  const auto& r = rhs.factors();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < l.size() && j < r.size()) {
    const int lr = l[i].first.rank();
    const int rr = r[j].first.rank();
    if (lr != rr) return lr < rr;
    if (l[i].second != r[j].second) return l[i].second > r[j].second;
    ++i;
    ++j;
  }
  return i < l.size() && j == r.size();
}

CoeffPoly::CoeffPoly(Rational constant) {
  if (!constant.is_zero()) terms_.emplace(Monomial{}, std::move(constant));
}

CoeffPoly::CoeffPoly(SymbolId symbol) { terms_.emplace(Monomial(symbol), Rational(1)); }

CoeffPoly::CoeffPoly(Monomial monomial, Rational coefficient) {
  if (!coefficient.is_zero()) terms_.emplace(std::move(monomial), std::move(coefficient));
}

bool CoeffPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational CoeffPoly::constant_term() const { return coefficient(Monomial{}); }

Rational CoeffPoly::coefficient(const Monomial& monomial) const {
  const auto it = terms_.find(monomial);
  return it == terms_.end() ? Rational{} : it->second;
}

unsigned CoeffPoly::total_degree() const {
  // Grlex descending puts the highest degree first.
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

int CoeffPoly::max_stage() const {
  int stage = 0;
  for (const auto& [monomial, coefficient] : terms_) {
    for (const auto& [symbol, exponent] : monomial.factors()) stage = std::max(stage, symbol.stage);
  }
  return stage;
}

void CoeffPoly::add_term(const Monomial& monomial, const Rational& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(monomial, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CoeffPoly& CoeffPoly::operator+=(const CoeffPoly& rhs) {
  for (const auto& [monomial, coefficient] : rhs.terms_) add_term(monomial, coefficient);
  return *this;
}

CoeffPoly& CoeffPoly::operator-=(const CoeffPoly& rhs) {
  for (const auto& [monomial, coefficient] : rhs.terms_) add_term(monomial, -coefficient);
  return *this;
}

CoeffPoly operator*(const CoeffPoly& lhs, const CoeffPoly& rhs) {
  CoeffPoly out;
  for (const auto& [lm, lc] : lhs.terms_) {
    for (const auto& [rm, rc] : rhs.terms_) out.add_term(lm * rm, lc * rc);
  }
  return out;
}

CoeffPoly& CoeffPoly::operator*=(const CoeffPoly& rhs) { return *this = *this * rhs; }

CoeffPoly& CoeffPoly::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [monomial, coefficient] : terms_) coefficient *= scalar;
  return *this;
}

CoeffPoly CoeffPoly::operator-() const {
  CoeffPoly out = *this;
  for (auto& [monomial, coefficient] : out.terms_) coefficient = -coefficient;
  return out;
}

std::string CoeffPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [monomial, coefficient] : terms_) {
    const bool negative = coefficient.sign() < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = abs(coefficient);
    if (monomial.is_one()) {
      out += magnitude.to_string();
    } else {
      if (!magnitude.is_one()) out += magnitude.to_string() + '*';
      out += monomial.to_string();
    }
    first = false;
  }
  return out;
}

Rational CoeffPoly::evaluate(const Assignment& point) const {
  Rational total;
  for (const auto& [monomial, coefficient] : terms_) {
    Rational term = coefficient;
    for (const auto& [symbol, exponent] : monomial.factors()) {
      const auto it = point.find(symbol);
      if (it == point.end()) throw MissingAssignment("no value assigned to " + symbol.to_string());
      for (unsigned k = 0; k < exponent; ++k) term *= it->second;
    }
    total += term;
  }
  return total;
}

std::ostream& operator<<(std::ostream& os, const CoeffPoly& poly) { return os << poly.to_string(); }

CoeffPoly poly_arith(const CoeffPoly& lhs, const CoeffPoly& rhs, PolyOp op) {
  switch (op) {
    case PolyOp::add:
      return lhs + rhs;
    case PolyOp::sub:
      return lhs - rhs;
    case PolyOp::mul:
      return lhs * rhs;
  }
  return {};
}

Rational poly_eval(const CoeffPoly& poly, const Assignment& point) { return poly.evaluate(point); }

}  // namespace splitorder
