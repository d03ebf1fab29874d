// One line per criterion: "[PASS] n name (ms)" or "[FAIL] n name: reason".
// Exit status is the number of failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "bch_oracle.hpp"
#include "generators.hpp"
#include "registry.hpp"
#include "splitorder/splitorder.hpp"
#include "witness_oracle.hpp"

namespace {

using namespace splitorder;
using splitorder::testing::Gen;

struct Failure {
  std::string what;
};

void check(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

CoeffPoly c(Rational r) { return CoeffPoly(std::move(r)); }
CoeffPoly a(int j) { return CoeffPoly(SymbolId::a(j)); }
CoeffPoly b(int j) { return CoeffPoly(SymbolId::b(j)); }
LyndonWord lw(const char* w) { return LyndonWord(Word::parse(w)); }
NCSeries word(const char* w, unsigned n, CoeffPoly coeff) {
  return NCSeries::monomial(2, n, Word::parse(w), std::move(coeff));
}

ConcreteScheme registry_scheme(const char* name) { return cli::find_scheme(name)->scheme; }

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void bch_golden_terms() {
  const auto start = std::chrono::steady_clock::now();
  const NCSeries x = NCSeries::letter(2, 3, kA, a(1));
  const NCSeries y = NCSeries::letter(2, 3, kB, b(1));
  const NCSeries z = nc_log(nc_exp(x) * nc_exp(y));
  // X + Y + [X,Y]/2 + ([X,[X,Y]] + [Y,[Y,X]])/12 with X = a1 A, Y = b1 B.
  const CoeffPoly ab = a(1) * b(1);
  const NCSeries expected = x + y + c(Rational(1, 2)) * ab * expand(bracketing(lw("AB")), 3) +
                            c(Rational(1, 12)) * ab * a(1) * expand(bracketing(lw("AAB")), 3) +
                            c(Rational(1, 12)) * ab * b(1) * expand(bracketing(lw("ABB")), 3);
  check(z == expected, "log(e^X e^Y) = " + z.to_string());
  const LieDecomposition third = lie_decompose(homogeneous_part(z, 3), 3);
  check(third.coefficients.at(lw("AAB")) == c(Rational(1, 12)) * a(1) * a(1) * b(1), "[X,[X,Y]] coefficient");
  // [Y,[Y,X]] = [[X,Y],Y] = ABB bracket.
  check(third.coefficients.at(lw("ABB")) == c(Rational(1, 12)) * a(1) * b(1) * b(1), "[Y,[Y,X]] coefficient");
  check(elapsed_ms(start) < 1000.0, "slower than 1 s");
}

void closed_form_oracle() {
  Gen gen(20240607);
  auto build = [](const testing::LieParams& p) {
    return word("A", 3, c(p.a)) + word("B", 3, c(p.b)) + c(p.c) * expand(bracketing(lw("AB")), 3) +
           c(p.d) * expand(bracketing(lw("AAB")), 3) + c(p.e) * expand(bracketing(lw("ABB")), 3);
  };
  for (int i = 0; i < 100; ++i) {
    const testing::LieParams x{gen.rational(), gen.rational(), gen.rational(), gen.rational(), gen.rational()};
    const testing::LieParams y{gen.rational(), gen.rational(), gen.rational(), gen.rational(), gen.rational()};
    const NCSeries h = nc_log(nc_exp(build(x)) * nc_exp(build(y)));
    const auto want = testing::bch_closed_form(x, y);
    const LieDecomposition d2 = lie_decompose(homogeneous_part(h, 2), 2);
    const LieDecomposition d3 = lie_decompose(homogeneous_part(h, 3), 3);
    const std::string tag = "tuple " + std::to_string(i);
    check(h.coefficient(Word::parse("A")) == c(want[0]), tag + " H1");
    check(h.coefficient(Word::parse("B")) == c(want[1]), tag + " H2");
    check(d2.coefficients.at(lw("AB")) == c(want[2]), tag + " H3");
    check(d3.coefficients.at(lw("AAB")) == c(want[3]), tag + " H4");
    check(d3.coefficients.at(lw("ABB")) == c(want[4]), tag + " H5");
  }
}

void solution_verification() {
  const ConcreteScheme order3({Rational(7, 24), Rational(3, 4), Rational(-1, 24)},
                              {Rational(2, 3), Rational(-2, 3), Rational(1)}, "order3");
  for (Route route : {Route::taylor, Route::bch}) {
    auto start = std::chrono::steady_clock::now();
    const VerificationResult r = verify_scheme(order3, 3, route);
    check(r.satisfied, "order-3 scheme fails " + to_string(route));
    for (const auto& x : r.residuals) check(x.value.is_zero(), "nonzero residual " + x.lyndon.to_string());
    check(elapsed_ms(start) < 1000.0, "order-3 verification slower than 1 s");

    start = std::chrono::steady_clock::now();
    check(!verify_scheme(registry_scheme("strang"), 3, route).satisfied, "strang passes p=3 " + to_string(route));
    check(elapsed_ms(start) < 1000.0, "strang verification slower than 1 s");

    start = std::chrono::steady_clock::now();
    check(!verify_scheme(registry_scheme("lie-trotter"), 2, route).satisfied,
          "lie-trotter passes p=2 " + to_string(route));
    check(elapsed_ms(start) < 1000.0, "lie-trotter verification slower than 1 s");
  }
}

std::vector<ConcreteScheme> padded_registry(int stages) {
  std::vector<ConcreteScheme> out;
  for (const auto& e : cli::registry()) {
    if (static_cast<int>(e.scheme.a.size()) <= stages) out.push_back(e.scheme.padded(stages));
  }
  return out;
}

ConditionSystem low_degree_part(const ConditionSystem& sys, unsigned max_degree) {
  ConditionSystem out{sys.stages, sys.target_order, sys.route, {}};
  for (const auto& e : sys.entries) {
    if (e.degree <= max_degree) out.entries.push_back(e);
  }
  return out;
}

void route_equivalence() {
  std::uint64_t seed = 77;
  for (const auto& [s, p] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}}) {
    const ConditionSystem taylor = conditions_taylor(SchemeShape(s), p);
    const ConditionSystem bch = conditions_bch(SchemeShape(s), p);
    const std::string tag = "(" + std::to_string(s) + "," + std::to_string(p) + ")";
    std::vector<NumericWitness> points;
    if (s == 2 && p == 3) {
      // The system has no roots; use refinement end points and roots of the
      // degree <= 2 conditions instead.
      for (const auto* sys : {&taylor, &bch}) {
        for (auto& r : testing::refinement_endpoints(*sys, 20, ++seed)) points.push_back(std::move(r.point));
        const auto low = testing::sample_roots(low_degree_part(*sys, 2), 20, ++seed);
        check(low.size() == 20, tag + " too few degree<=2 roots");
        points.insert(points.end(), low.begin(), low.end());
      }
    } else {
      for (const auto* sys : {&taylor, &bch}) {
        const auto roots = testing::sample_roots(*sys, 20, ++seed);
        check(roots.size() == 20, tag + " found only " + std::to_string(roots.size()) + " roots");
        points.insert(points.end(), roots.begin(), roots.end());
      }
    }
    const EquivalenceReport report = systems_equivalent(taylor, bch, padded_registry(s), points);
    check(report.all_agree(), tag + ": " + std::to_string(report.disagreements()) + " disagreements");
  }
}

Rational factorial(unsigned n) {
  Rational f(1);
  for (unsigned k = 2; k <= n; ++k) f *= Rational(static_cast<long>(k));
  return f;
}

void taylor_cross_check() {
  for (int s = 1; s <= 3; ++s) {
    const SymbolicScheme scheme = SymbolicScheme::generic(SchemeShape(s));
    const NCSeries error = local_error_series(scheme, 5);
    for (unsigned q = 1; q <= 5; ++q) {
      check(taylor_derivative(scheme, q).terms() == (homogeneous_part(error, q) * c(factorial(q))).terms(),
            "s=" + std::to_string(s) + " q=" + std::to_string(q));
    }
  }
  const SymbolicScheme s3 = SymbolicScheme::generic(SchemeShape(3));
  const CoeffPoly sa = a(1) + a(2) + a(3);
  const CoeffPoly sb = b(1) + b(2) + b(3);
  const NCSeries d1 = taylor_derivative(s3, 1);
  check(d1.coefficient(Word::parse("A")) == sa - c(1), "q=1 A");
  check(d1.coefficient(Word::parse("B")) == sb - c(1), "q=1 B");
  const NCSeries d2 = taylor_derivative(s3, 2);
  check(d2.coefficient(Word::parse("AA")) == sa * sa - c(1), "q=2 AA");
  check(d2.coefficient(Word::parse("BB")) == sb * sb - c(1), "q=2 BB");
  check(d2.coefficient(Word::parse("AB")) ==
            c(2) * a(1) * sb + c(2) * a(2) * (b(2) + b(3)) + c(2) * a(3) * b(3) - c(1),
        "q=2 AB");
  check(d2.coefficient(Word::parse("BA")) == c(2) * a(2) * b(1) + c(2) * a(3) * (b(1) + b(2)) - c(1), "q=2 BA");
  check(d2.terms().size() == 4, "q=2 has extra words");
}

bool rotation_minimal(const Word& w) {
  const std::string s = w.to_string();
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (s.substr(k) + s.substr(0, k) <= s) return false;
  }
  return true;
}

void lyndon_suite() {
  std::set<std::string> expected;
  for (unsigned len = 1; len <= 10; ++len) {
    for (unsigned bits = 0; bits < (1u << len); ++bits) {
      std::string s;
      for (unsigned i = 0; i < len; ++i) s += (bits >> (len - 1 - i)) & 1u ? 'B' : 'A';
      if (rotation_minimal(Word::parse(s))) expected.insert(s);
    }
  }
  std::set<std::string> got;
  for (const auto& w : generate_lyndon(2, 10)) {
    check(rotation_minimal(w.word()), "not rotation-minimal: " + w.to_string());
    got.insert(w.to_string());
  }
  check(got == expected, "Duval output differs from brute force");

  std::vector<int> counts(7, 0);
  for (const auto& w : generate_lyndon(2, 6)) ++counts[w.degree()];
  check(std::vector<int>(counts.begin() + 1, counts.end()) == std::vector<int>{2, 1, 2, 3, 6, 9}, "per-length counts");
  for (unsigned n = 1; n <= 10; ++n) {
    check(lyndon_words_of_degree(2, n).size() == witt_count(2, n), "necklace count at " + std::to_string(n));
  }

  for (const auto& w : generate_lyndon(2, 6)) {
    const NCSeries e = expand(bracketing(w), 6);
    check(!e.is_zero(), "zero bracket " + w.to_string());
    const auto lead = std::min_element(e.terms().begin(), e.terms().end(),
                                       [](const auto& l, const auto& r) { return l.first < r.first; });
    check(lead->first == w.word(), "leading word of " + w.to_string());
    check(lead->second == c(1), "leading coefficient of " + w.to_string());
  }
}

void lie_round_trip() {
  Gen gen(4242);
  for (unsigned q = 1; q <= 6; ++q) {
    for (int trial = 0; trial < 10; ++trial) {
      LieDecomposition want;
      want.degree = q;
      for (const auto& w : lyndon_words_of_degree(2, q)) {
        want.coefficients.emplace(w, gen.coin() ? gen.poly(3, 2, 3) : CoeffPoly());
      }
      check(lie_decompose(want.reconstruct(q), q).coefficients == want.coefficients, "q=" + std::to_string(q));
    }
  }
  try {
    lie_decompose(word("AB", 2, c(1)), 2);
    throw Failure{"AB accepted as a Lie element"};
  } catch (const NotALieElement& e) {
    check(e.residual() == word("AB", 2, c(Rational(1, 2))) + word("BA", 2, c(Rational(1, 2))),
          "residual " + e.residual().to_string());
  }
}

void numeric_convergence() {
  const auto start = std::chrono::steady_clock::now();
  for (const auto& [name, order, tol] :
       {std::tuple{"lie-trotter", 2.0, 0.15}, std::tuple{"strang", 3.0, 0.15}, std::tuple{"paper-order3", 4.0, 0.2}}) {
    const ConvergenceReport r = empirical_order(registry_scheme(name), 4, 1);
    std::ostringstream msg;
    msg << name << " slope " << r.slope;
    check(std::abs(r.slope - order) <= tol, msg.str());
  }
  check(elapsed_ms(start) < 10000.0, "slower than 10 s");
}

void exp_log_properties() {
  Gen gen(9001);
  const auto one = [](unsigned n) { return NCSeries::one(2, n); };
  for (int i = 0; i < 200; ++i) {
    const auto n = static_cast<unsigned>(gen.integer(2, 5));
    const auto p = static_cast<unsigned>(gen.integer(1, static_cast<int>(n) - 1));
    const std::string tag = "case " + std::to_string(i);

    // Vanishing through degree p is shared by h and e^h.
    const NCSeries h = gen.rational_series(2, n, p + 1);
    check(degree_range(nc_exp(h), 1, p).is_zero(), tag + " exp keeps low degrees zero");
    const NCSeries f = one(n) + gen.rational_series(2, n, p + 1);
    check(degree_range(nc_log(f), 1, p).is_zero(), tag + " log keeps low degrees zero");
    NCSeries bumped = h;
    bumped.add_term(gen.word(2, static_cast<unsigned>(gen.integer(1, static_cast<int>(p)))), gen.nonzero_rational());
    check(!degree_range(nc_exp(bumped), 1, p).is_zero(), tag + " low-degree term lost by exp");

    // Agreement through degree p is shared likewise.
    const NCSeries x = gen.rational_series(2, n, 1);
    const NCSeries y = x + gen.rational_series(2, n, p + 1);
    check(degree_range(nc_exp(x), 1, p) == degree_range(nc_exp(y), 1, p), tag + " exp agreement");
    const NCSeries g1 = one(n) + gen.rational_series(2, n, 1);
    const NCSeries g2 = g1 + gen.rational_series(2, n, p + 1);
    check(degree_range(nc_log(g1), 1, p) == degree_range(nc_log(g2), 1, p), tag + " log agreement");
    NCSeries y2 = x;
    const auto j = static_cast<unsigned>(gen.integer(1, static_cast<int>(p)));
    y2.add_term(gen.word(2, j), gen.nonzero_rational());
    check(degree_range(nc_exp(x), 1, j) != degree_range(nc_exp(y2), 1, j), tag + " exp disagreement");

    check(nc_log(nc_exp(x)) == x, tag + " log(exp)");
    check(nc_exp(nc_log(g1)) == g1, tag + " exp(log)");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void()>>> criteria = {
      {"bch golden terms", bch_golden_terms},
      {"two-factor closed form", closed_form_oracle},
      {"scheme verification", solution_verification},
      {"route equivalence", route_equivalence},
      {"taylor formula cross-check", taylor_cross_check},
      {"lyndon suite", lyndon_suite},
      {"lie decomposition round trip", lie_round_trip},
      {"numeric convergence", numeric_convergence},
      {"exp/log properties", exp_log_properties},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, body] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    std::string reason;
    try {
      body();
    } catch (const Failure& f) {
      reason = f.what;
    } catch (const std::exception& e) {
      reason = std::string("exception: ") + e.what();
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1f ms", elapsed_ms(start));
    if (reason.empty()) {
      std::cout << "[PASS] " << index << " " << name << " (" << timing << ")\n";
    } else {
      ++failures;
      std::cout << "[FAIL] " << index << " " << name << ": " << reason << " (" << timing << ")\n";
    }
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures;
}
