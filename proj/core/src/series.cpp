#include "splitorder/series.hpp"

#include <algorithm>
#include <ostream>

namespace splitorder {

Word Word::parse(std::string_view text) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) {
    if (c < 'A' || c > 'Z') throw ParseError("invalid letter '" + std::string(1, c) + "' in word");
    letters.push_back(Letter{static_cast<std::uint8_t>(c - 'A')});
  }
  return Word(std::move(letters));
}

unsigned Word::alphabet_span() const {
  unsigned span = 0;
  for (Letter l : letters_) span = std::max<unsigned>(span, l.index + 1u);
  return span;
}

Word Word::substr(std::size_t pos, std::size_t len) const {
  const std::size_t end = len == std::string::npos ? letters_.size() : std::min(letters_.size(), pos + len);
  return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                  letters_.begin() + static_cast<std::ptrdiff_t>(end)));
}

Word operator+(const Word& lhs, const Word& rhs) {
  std::vector<Letter> letters = lhs.letters_;
  letters.insert(letters.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(std::move(letters));
}

std::string Word::to_string() const {
  std::string out;
  out.reserve(letters_.size());
  for (Letter l : letters_) out += l.to_char();
  return out;
}

NCSeries::NCSeries(unsigned alphabet_size, unsigned truncation)
    : alphabet_size_(alphabet_size), truncation_(truncation) {
  if (alphabet_size == 0) throw InvalidArgument("series alphabet must be non-empty");
}

NCSeries NCSeries::one(unsigned alphabet_size, unsigned truncation) {
  return monomial(alphabet_size, truncation, Word{}, 1);
}

NCSeries NCSeries::monomial(unsigned alphabet_size, unsigned truncation, const Word& word, CoeffPoly coefficient) {
  NCSeries out(alphabet_size, truncation);
  if (word.alphabet_span() > alphabet_size) throw AlphabetMismatch("word '" + word.to_string() + "' outside alphabet");
  if (word.degree() <= truncation && !coefficient.is_zero()) out.terms_.emplace(word, std::move(coefficient));
  return out;
}

NCSeries NCSeries::letter(unsigned alphabet_size, unsigned truncation, Letter letter, CoeffPoly coefficient) {
  return monomial(alphabet_size, truncation, Word{letter}, std::move(coefficient));
}

CoeffPoly NCSeries::coefficient(const Word& word) const {
  const auto it = terms_.find(word);
  return it == terms_.end() ? CoeffPoly{} : it->second;
}

unsigned NCSeries::order() const {
  return terms_.empty() ? truncation_ + 1 : static_cast<unsigned>(terms_.begin()->first.degree());
}

void NCSeries::add_term(const Word& word, const CoeffPoly& coefficient) {
  if (word.degree() > truncation_) {
    throw DegreeBeyondTruncation("word '" + word.to_string() + "' exceeds truncation " + std::to_string(truncation_));
  }
  if (word.alphabet_span() > alphabet_size_) throw AlphabetMismatch("word '" + word.to_string() + "' outside alphabet");
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(word, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void NCSeries::check_compatible(const NCSeries& rhs) const {
  if (truncation_ != rhs.truncation_) {
    throw TruncationMismatch("truncation " + std::to_string(truncation_) + " vs " + std::to_string(rhs.truncation_));
  }
  if (alphabet_size_ != rhs.alphabet_size_) {
    throw AlphabetMismatch("alphabet size " + std::to_string(alphabet_size_) + " vs " +
                           std::to_string(rhs.alphabet_size_));
  }
}

NCSeries& NCSeries::operator+=(const NCSeries& rhs) {
  check_compatible(rhs);
  for (const auto& [word, coefficient] : rhs.terms_) add_term(word, coefficient);
  return *this;
}

NCSeries& NCSeries::operator-=(const NCSeries& rhs) {
  check_compatible(rhs);
  for (const auto& [word, coefficient] : rhs.terms_) add_term(word, -coefficient);
  return *this;
}

NCSeries& NCSeries::operator*=(const CoeffPoly& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= scalar;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

NCSeries operator*(const NCSeries& lhs, const NCSeries& rhs) {
  lhs.check_compatible(rhs);
  NCSeries out(lhs.alphabet_size_, lhs.truncation_);
  for (const auto& [u, cu] : lhs.terms_) {
    const std::size_t room = lhs.truncation_ - u.degree();
    for (const auto& [v, cv] : rhs.terms_) {
      // Terms are ordered by degree, so nothing later fits either.
      if (v.degree() > room) break;
      out.add_term(u + v, cu * cv);
    }
  }
  return out;
}

NCSeries NCSeries::operator-() const {
  NCSeries out = *this;
  for (auto& [word, coefficient] : out.terms_) coefficient = -coefficient;
  return out;
}

bool operator==(const NCSeries& lhs, const NCSeries& rhs) {
  return lhs.alphabet_size_ == rhs.alphabet_size_ && lhs.truncation_ == rhs.truncation_ && lhs.terms_ == rhs.terms_;
}

std::string NCSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [word, coefficient] : terms_) {
    std::string c = coefficient.to_string();
    bool negative = false;
    if (coefficient.terms().size() == 1) {
      negative = coefficient.terms().begin()->second.sign() < 0;
      if (negative) c = (-coefficient).to_string();
    } else {
      c = "(" + c + ")";
    }
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (word.empty()) {
      out += c;
    } else {
      if (c != "1") out += c + '*';
      out += word.to_string();
    }
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const NCSeries& series) { return os << series.to_string(); }

NCSeries nc_mul(const NCSeries& f, const NCSeries& g) { return f * g; }

NCSeries nc_exp(const NCSeries& g) {
  if (!g.constant_term().is_zero()) {
    throw NonzeroConstantTerm("exp requires a series without constant term, got " + g.constant_term().to_string());
  }
  const unsigned n = g.truncation();
  const NCSeries unit = NCSeries::one(g.alphabet_size(), n);
  // Horner: 1 + g(1 + g/2(1 + g/3(...(1 + g/N)))).
  NCSeries acc = unit;
  for (unsigned j = n; j >= 1; --j) {
    acc = unit + (g * acc) * CoeffPoly(Rational(1, static_cast<long>(j)));
  }
  return acc;
}

NCSeries nc_log(const NCSeries& f) {
  if (f.constant_term() != CoeffPoly(1)) {
    throw ConstantTermNotOne("log requires constant term 1, got " + f.constant_term().to_string());
  }
  const unsigned n = f.truncation();
  const NCSeries x = f - NCSeries::one(f.alphabet_size(), n);
  if (n == 0) return NCSeries::zero(f.alphabet_size(), n);
  // Horner: x(1 - x(1/2 - x(1/3 - ... x/N))).
  NCSeries acc = NCSeries::monomial(f.alphabet_size(), n, Word{}, Rational(1, static_cast<long>(n)));
  for (unsigned j = n - 1; j >= 1; --j) {
    acc = NCSeries::monomial(f.alphabet_size(), n, Word{}, Rational(1, static_cast<long>(j))) - x * acc;
  }
  return x * acc;
}

NCSeries homogeneous_part(const NCSeries& f, unsigned degree) { return degree_range(f, degree, degree); }

NCSeries degree_range(const NCSeries& f, unsigned lo, unsigned hi) {
  if (hi > f.truncation()) {
    throw DegreeBeyondTruncation("degree " + std::to_string(hi) + " beyond truncation " +
                                 std::to_string(f.truncation()));
  }
  NCSeries out(f.alphabet_size(), f.truncation());
  for (const auto& [word, coefficient] : f.terms()) {
    if (word.degree() >= lo && word.degree() <= hi) out.add_term(word, coefficient);
  }
  return out;
}

}  // namespace splitorder
