#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "splitorder/errors.hpp"
#include "splitorder/series.hpp"

namespace splitorder {

// A word strictly smaller than each of its proper rotations.
class LyndonWord {
 public:
  // Throws InvalidArgument if `word` is not Lyndon.
  explicit LyndonWord(Word word);

  static bool is_lyndon(const Word& word);

  [[nodiscard]] const Word& word() const { return word_; }
  [[nodiscard]] std::size_t degree() const { return word_.degree(); }
  [[nodiscard]] std::string to_string() const { return word_.to_string(); }

  friend bool operator==(const LyndonWord&, const LyndonWord&) = default;
  friend auto operator<=>(const LyndonWord& lhs, const LyndonWord& rhs) { return lhs.word_ <=> rhs.word_; }

 private:
  Word word_;
};

// Commutator tree: a leaf letter or [left, right]. Nodes are immutable and
// shared between copies.
class BracketTree {
 public:
  explicit BracketTree(Letter leaf);
  BracketTree(BracketTree left, BracketTree right);

  [[nodiscard]] bool is_leaf() const { return std::holds_alternative<Letter>(*node_); }
  [[nodiscard]] Letter leaf() const { return std::get<Letter>(*node_); }
  [[nodiscard]] const BracketTree& left() const { return std::get<Pair>(*node_).first; }
  [[nodiscard]] const BracketTree& right() const { return std::get<Pair>(*node_).second; }

  [[nodiscard]] std::size_t degree() const;
  // Left-to-right leaf sequence.
  [[nodiscard]] Word foliage() const;
  // "[A,[A,B]]"; a leaf prints as its letter.
  [[nodiscard]] std::string to_string() const;

 private:
  using Pair = std::pair<BracketTree, BracketTree>;
  using Node = std::variant<Letter, Pair>;

  std::shared_ptr<const Node> node_;
};

// Lyndon words of length 1..max_degree over `alphabet_size` letters, in
// lexicographic order (Duval's algorithm).
std::vector<LyndonWord> generate_lyndon(unsigned alphabet_size, unsigned max_degree);

// Lyndon words of exactly `degree` letters, lexicographic.
std::vector<LyndonWord> lyndon_words_of_degree(unsigned alphabet_size, unsigned degree);

// Number of Lyndon words of length n over m letters, (1/n) sum_{d|n} mu(d) m^{n/d}.
unsigned long long witt_count(unsigned alphabet_size, unsigned length);

// w = u v with v the longest proper suffix of w that is Lyndon.
// Throws SingleLetter for |w| = 1.
std::pair<LyndonWord, LyndonWord> standard_factorization(const LyndonWord& w);

// Standard bracketing: a letter for |w| = 1, else [bracket(u), bracket(v)].
BracketTree bracketing(const LyndonWord& w);

// Commutators expanded as associative polynomials: [x, y] = xy - yx.
// Throws DegreeBeyondTruncation if the tree has more leaves than `truncation`.
NCSeries expand(const BracketTree& tree, unsigned truncation, unsigned alphabet_size = 2);

// Coordinates of a homogeneous Lie element in the Lyndon basis.
struct LieDecomposition {
  unsigned degree = 0;
  std::map<LyndonWord, CoeffPoly> coefficients;

  [[nodiscard]] bool is_zero() const;
  // Sum over the basis of coefficient * expand(bracketing(w)).
  [[nodiscard]] NCSeries reconstruct(unsigned truncation, unsigned alphabet_size = 2) const;
};

// Raised when a homogeneous series f of degree q is not a Lie polynomial.
// residual() is f - theta(f)/q, theta the Dynkin left-normed bracketing;
// for AB that is (AB + BA)/2.
class NotALieElement : public Error {
 public:
  explicit NotALieElement(NCSeries residual);

  [[nodiscard]] const NCSeries& residual() const { return residual_; }

 private:
  NCSeries residual_;
};

// Decomposes a series supported on degree q into the Lyndon basis.
// Lyndon words are eliminated in increasing lexicographic order: the
// expanded bracketing of w has w as its smallest word with coefficient 1,
// so the residual coefficient of w is exactly its basis coordinate.
// Throws InvalidArgument if f has terms of another degree,
// NotALieElement if a nonzero residual remains.
LieDecomposition lie_decompose(const NCSeries& f, unsigned degree);

}  // namespace splitorder
