#include "splitorder/lyndon.hpp"

#include <algorithm>
#include <map>

namespace splitorder {

LyndonWord::LyndonWord(Word word) : word_(std::move(word)) {
  if (!is_lyndon(word_)) throw InvalidArgument("'" + word_.to_string() + "' is not a Lyndon word");
}

bool LyndonWord::is_lyndon(const Word& word) {
  // A non-empty word is Lyndon iff it is strictly smaller than all of its
  // proper suffixes.
  const std::size_t n = word.degree();
  if (n == 0) return false;
  const auto& letters = word.letters();
  for (std::size_t i = 1; i < n; ++i) {
    if (!std::lexicographical_compare(letters.begin(), letters.end(), letters.begin() + static_cast<std::ptrdiff_t>(i),
                                      letters.end())) {
      return false;
    }
  }
  return true;
}

BracketTree::BracketTree(Letter leaf) : node_(std::make_shared<const Node>(leaf)) {}

BracketTree::BracketTree(BracketTree left, BracketTree right)
    : node_(std::make_shared<const Node>(Pair(std::move(left), std::move(right)))) {}

std::size_t BracketTree::degree() const { return is_leaf() ? 1 : left().degree() + right().degree(); }

Word BracketTree::foliage() const { return is_leaf() ? Word{leaf()} : left().foliage() + right().foliage(); }

std::string BracketTree::to_string() const {
  if (is_leaf()) return std::string(1, leaf().to_char());
  return "[" + left().to_string() + "," + right().to_string() + "]";
}

std::vector<LyndonWord> generate_lyndon(unsigned alphabet_size, unsigned max_degree) {
  std::vector<LyndonWord> out;
  if (alphabet_size == 0 || max_degree == 0) return out;
  // Duval: successor of w is obtained by repeating w up to length n,
  // dropping trailing maximal letters and incrementing the last one.
  const auto top = static_cast<std::uint8_t>(alphabet_size - 1);
  std::vector<Letter> w{Letter{0}};
  while (!w.empty()) {
    out.emplace_back(Word(w));
    const std::size_t m = w.size();
    while (w.size() < max_degree) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back().index == top) w.pop_back();
    if (!w.empty()) ++w.back().index;
  }
  return out;
}

std::vector<LyndonWord> lyndon_words_of_degree(unsigned alphabet_size, unsigned degree) {
  std::vector<LyndonWord> out;
  for (auto& w : generate_lyndon(alphabet_size, degree)) {
    if (w.degree() == degree) out.push_back(std::move(w));
  }
  return out;
}

namespace {

int moebius(unsigned n) {
  int mu = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

}  // namespace

unsigned long long witt_count(unsigned alphabet_size, unsigned length) {
  if (length == 0) return 0;
  long long sum = 0;
  for (unsigned d = 1; d <= length; ++d) {
    if (length % d != 0) continue;
    long long power = 1;
    for (unsigned k = 0; k < length / d; ++k) power *= alphabet_size;
    sum += moebius(d) * power;
  }
  return static_cast<unsigned long long>(sum / length);
}

std::pair<LyndonWord, LyndonWord> standard_factorization(const LyndonWord& w) {
  const std::size_t n = w.degree();
  if (n < 2) throw SingleLetter("single-letter Lyndon word '" + w.to_string() + "' has no factorization");
  for (std::size_t split = 1; split < n; ++split) {
    Word suffix = w.word().substr(split);
    if (LyndonWord::is_lyndon(suffix)) return {LyndonWord(w.word().substr(0, split)), LyndonWord(std::move(suffix))};
  }
  // The last letter is always a Lyndon suffix.
  throw Error("unreachable: no Lyndon suffix for '" + w.to_string() + "'");
}

BracketTree bracketing(const LyndonWord& w) {
  if (w.degree() == 1) return BracketTree(w.word()[0]);
  auto [u, v] = standard_factorization(w);
  return BracketTree(bracketing(u), bracketing(v));
}

NCSeries expand(const BracketTree& tree, unsigned truncation, unsigned alphabet_size) {
  if (tree.degree() > truncation) {
    throw DegreeBeyondTruncation("bracket of degree " + std::to_string(tree.degree()) + " beyond truncation " +
                                 std::to_string(truncation));
  }
  if (tree.is_leaf()) return NCSeries::letter(alphabet_size, truncation, tree.leaf());
  const NCSeries x = expand(tree.left(), truncation, alphabet_size);
  const NCSeries y = expand(tree.right(), truncation, alphabet_size);
  return x * y - y * x;
}

bool LieDecomposition::is_zero() const {
  return std::all_of(coefficients.begin(), coefficients.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

NCSeries LieDecomposition::reconstruct(unsigned truncation, unsigned alphabet_size) const {
  NCSeries out(alphabet_size, truncation);
  for (const auto& [w, c] : coefficients) out += c * expand(bracketing(w), truncation, alphabet_size);
  return out;
}

NotALieElement::NotALieElement(NCSeries residual)
    : Error("not a Lie element; residual " + residual.to_string()), residual_(std::move(residual)) {}

namespace {

// Left-normed bracket [..[[l1,l2],l3],..,lq] of the letters of `w`, as
// signed words.
std::map<Word, long> left_normed(const Word& w) {
  std::map<Word, long> acc{{w.substr(0, 1), 1}};
  for (std::size_t i = 1; i < w.degree(); ++i) {
    const Word x = w.substr(i, 1);
    std::map<Word, long> next;
    for (const auto& [u, c] : acc) {
      next[u + x] += c;
      next[x + u] -= c;
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    acc = std::move(next);
  }
  return acc;
}

// f - theta(f)/q, theta the Dynkin map; zero exactly when f is Lie.
NCSeries non_lie_part(const NCSeries& f, unsigned degree) {
  NCSeries lie = NCSeries::zero(f.alphabet_size(), f.truncation());
  for (const auto& [word, coefficient] : f.terms()) {
    for (const auto& [u, c] : left_normed(word)) lie.add_term(u, CoeffPoly(Rational(c)) * coefficient);
  }
  return f - lie * CoeffPoly(Rational(1, static_cast<long>(degree)));
}

}  // namespace

LieDecomposition lie_decompose(const NCSeries& f, unsigned degree) {
  for (const auto& [word, coefficient] : f.terms()) {
    if (word.degree() != degree) {
      throw InvalidArgument("lie_decompose expects a series homogeneous of degree " + std::to_string(degree) +
                            ", found word '" + word.to_string() + "'");
    }
  }
  if (degree > f.truncation()) {
    throw DegreeBeyondTruncation("degree " + std::to_string(degree) + " beyond truncation " +
                                 std::to_string(f.truncation()));
  }
  LieDecomposition out;
  out.degree = degree;
  NCSeries residual = f;
  for (const auto& w : lyndon_words_of_degree(f.alphabet_size(), degree)) {
    CoeffPoly lambda = residual.coefficient(w.word());
    if (!lambda.is_zero()) residual -= lambda * expand(bracketing(w), f.truncation(), f.alphabet_size());
    out.coefficients.emplace(w, std::move(lambda));
  }
  if (!residual.is_zero()) throw NotALieElement(non_lie_part(f, degree));
  return out;
}

}  // namespace splitorder
