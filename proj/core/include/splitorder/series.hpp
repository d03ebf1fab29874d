#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "splitorder/errors.hpp"
#include "splitorder/poly.hpp"

namespace splitorder {

// Generator of the free algebra. Index 0 renders as 'A', 1 as 'B', ...
struct Letter {
  std::uint8_t index = 0;

  [[nodiscard]] char to_char() const { return static_cast<char>('A' + index); }

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

inline constexpr Letter kA{0};
inline constexpr Letter kB{1};

// Associative word. Comparison is plain lexicographic (a proper prefix is
// smaller), which is the order Lyndon words are defined in.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  // "AAB" -> {A, A, B}. Throws ParseError on characters outside 'A'..'Z'.
  static Word parse(std::string_view text);

  [[nodiscard]] const std::vector<Letter>& letters() const { return letters_; }
  [[nodiscard]] std::size_t degree() const { return letters_.size(); }
  [[nodiscard]] bool empty() const { return letters_.empty(); }
  [[nodiscard]] Letter operator[](std::size_t i) const { return letters_[i]; }
  // Largest letter index + 1, or 0 for the empty word.
  [[nodiscard]] unsigned alphabet_span() const;

  [[nodiscard]] Word substr(std::size_t pos, std::size_t len = std::string::npos) const;
  friend Word operator+(const Word& lhs, const Word& rhs);

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& lhs, const Word& rhs) { return lhs.letters_ <=> rhs.letters_; }

 private:
  std::vector<Letter> letters_;
};

// Words ordered by degree, then lexicographically.
struct DegreeLex {
  bool operator()(const Word& lhs, const Word& rhs) const {
    if (lhs.degree() != rhs.degree()) return lhs.degree() < rhs.degree();
    return lhs < rhs;
  }
};

// Truncated formal power series in non-commuting letters with CoeffPoly
// coefficients. Word degree plays the role of the power of the step size t.
//
// The truncation degree is fixed at construction: every operation keeps it,
// and mixing series of different truncation (or alphabet) is an error
// rather than an implicit re-truncation.
class NCSeries {
 public:
  using TermMap = std::map<Word, CoeffPoly, DegreeLex>;

  NCSeries(unsigned alphabet_size, unsigned truncation);

  static NCSeries zero(unsigned alphabet_size, unsigned truncation) { return {alphabet_size, truncation}; }
  static NCSeries one(unsigned alphabet_size, unsigned truncation);
  // coefficient * word; dropped if the word exceeds the truncation.
  static NCSeries monomial(unsigned alphabet_size, unsigned truncation, const Word& word, CoeffPoly coefficient);
  static NCSeries letter(unsigned alphabet_size, unsigned truncation, Letter letter, CoeffPoly coefficient = 1);

  [[nodiscard]] unsigned alphabet_size() const { return alphabet_size_; }
  [[nodiscard]] unsigned truncation() const { return truncation_; }
  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  [[nodiscard]] CoeffPoly coefficient(const Word& word) const;
  [[nodiscard]] CoeffPoly constant_term() const { return coefficient(Word{}); }
  // Lowest degree with a nonzero term, or truncation + 1 for the zero series.
  [[nodiscard]] unsigned order() const;

  // Adds coefficient * word in place. Throws DegreeBeyondTruncation.
  void add_term(const Word& word, const CoeffPoly& coefficient);

  NCSeries& operator+=(const NCSeries& rhs);
  NCSeries& operator-=(const NCSeries& rhs);
  NCSeries& operator*=(const CoeffPoly& scalar);
  friend NCSeries operator+(NCSeries lhs, const NCSeries& rhs) { return lhs += rhs; }
  friend NCSeries operator-(NCSeries lhs, const NCSeries& rhs) { return lhs -= rhs; }
  friend NCSeries operator*(NCSeries lhs, const CoeffPoly& rhs) { return lhs *= rhs; }
  friend NCSeries operator*(const CoeffPoly& lhs, NCSeries rhs) { return rhs *= lhs; }
  friend NCSeries operator*(const NCSeries& lhs, const NCSeries& rhs);
  NCSeries operator-() const;

  friend bool operator==(const NCSeries& lhs, const NCSeries& rhs);

  // Coefficients mapped through `fn` (zero results dropped).
  template <class Fn>
  [[nodiscard]] NCSeries map_coefficients(Fn&& fn) const;

  // "1 + a1*A + 1/2*a1^2*AA"; "0" for the zero series. Non-monomial
  // coefficients are parenthesised.
  [[nodiscard]] std::string to_string() const;

 private:
  void check_compatible(const NCSeries& rhs) const;

  unsigned alphabet_size_;
  unsigned truncation_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const NCSeries& series);

// Truncated product. Throws TruncationMismatch / AlphabetMismatch.
NCSeries nc_mul(const NCSeries& f, const NCSeries& g);

// sum_{j=0}^{N} g^j / j!. Throws NonzeroConstantTerm.
NCSeries nc_exp(const NCSeries& g);

// sum_{j=1}^{N} (-1)^{j+1} (f - 1)^j / j. Throws ConstantTermNotOne.
NCSeries nc_log(const NCSeries& f);

// Degree-j part, same truncation as f. Throws DegreeBeyondTruncation for j > N.
NCSeries homogeneous_part(const NCSeries& f, unsigned degree);

// Sum of the parts of degree lo..hi (inclusive).
NCSeries degree_range(const NCSeries& f, unsigned lo, unsigned hi);

template <class Fn>
NCSeries NCSeries::map_coefficients(Fn&& fn) const {
  NCSeries out(alphabet_size_, truncation_);
  for (const auto& [word, coefficient] : terms_) {
    CoeffPoly mapped = fn(coefficient);
    if (!mapped.is_zero()) out.terms_.emplace(word, std::move(mapped));
  }
  return out;
}

}  // namespace splitorder
