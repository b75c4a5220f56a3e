#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <random>

#include "gluckkit/errors.hpp"
#include "gluckkit/skein.hpp"
#include "oracle/state_sum_oracle.hpp"

using gluckkit::BraidWord;
using gluckkit::EBasisElement;
using gluckkit::EPrimeVector;
using gluckkit::LaurentPolynomial;
using gluckkit::Parity;
using gluckkit::SkeinElement;
using gluckkit::Smoothing;
using gluckkit::SolidTorusElement;

namespace {

LaurentPolynomial mono(long c, long e) { return LaurentPolynomial::monomial(c, e); }

LaurentPolynomial invert_a(const LaurentPolynomial& p) {
  LaurentPolynomial out;
  for (const auto& [e, c] : p.terms()) out += LaurentPolynomial::monomial(c, -e);
  return out;
}

LaurentPolynomial random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(0, 4);
  std::uniform_int_distribution<int> exps(-15, 15);
  std::uniform_int_distribution<long> coeffs(-6, 6);
  LaurentPolynomial p;
  for (int t = terms(rng); t > 0; --t) p += mono(coeffs(rng), exps(rng));
  return p;
}

template <class Vec>
Vec random_vector(std::mt19937_64& rng, int max_index) {
  std::uniform_int_distribution<int> index(0, max_index);
  Vec v;
  for (int t = 0; t < 5; ++t) v.add(index(rng), random_poly(rng));
  return v;
}

BraidWord random_braid(std::mt19937_64& rng, int max_strands, int max_letters) {
  const int n = std::uniform_int_distribution<int>(1, max_strands)(rng);
  const int c = n == 1 ? 0 : std::uniform_int_distribution<int>(0, max_letters)(rng);
  std::vector<int> letters;
  for (int k = 0; k < c; ++k) {
    const int i = std::uniform_int_distribution<int>(1, n - 1)(rng);
    letters.push_back(std::uniform_int_distribution<int>(0, 1)(rng) ? i : -i);
  }
  return BraidWord(n, letters);
}

std::map<std::int64_t, LaurentPolynomial> oracle_of(const BraidWord& b, bool mirror = false) {
  return oracle::bracket_by_enumeration(b.strands(), {b.letters().begin(), b.letters().end()}, mirror);
}

// Every braid word on n strands with exactly c letters.
void for_each_word(int n, int c, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> alphabet;
  for (int i = 1; i < n; ++i) {
    alphabet.push_back(i);
    alphabet.push_back(-i);
  }
  if (c > 0 && alphabet.empty()) return;
  std::vector<std::size_t> digits(c, 0);
  while (true) {
    std::vector<int> word;
    for (auto d : digits) word.push_back(alphabet[d]);
    visit(word);
    int pos = 0;
    while (pos < c && ++digits[pos] == alphabet.size()) digits[pos++] = 0;
    if (pos == c) return;
  }
}

}  // namespace

TEST_CASE("braid words") {
  CHECK_THROWS_AS(BraidWord(2, {2}), gluckkit::PreconditionError);
  CHECK_THROWS_AS(BraidWord(3, {0}), gluckkit::PreconditionError);
  CHECK_THROWS_AS(BraidWord(0, {}), gluckkit::PreconditionError);
  const auto b = BraidWord::parse(3, " 1 1  -2 ");
  CHECK(std::vector<int>(b.letters().begin(), b.letters().end()) == std::vector<int>{1, 1, -2});
  CHECK_THROWS_AS(BraidWord::parse(3, "1 x"), gluckkit::PreconditionError);
  CHECK_THROWS_AS(gluckkit::bracket_of_closure(BraidWord(2, std::vector<int>(25, 1))), gluckkit::PreconditionError);
}

TEST_CASE("bracket examples") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(gluckkit::bracket_of_closure(BraidWord(n, {}), Smoothing::Standard) == SolidTorusElement::basis(n));
  }
  const auto s1 = gluckkit::bracket_of_closure(BraidWord(2, {1}), Smoothing::Standard);
  CHECK(s1 == SolidTorusElement::basis(2, mono(1, 1)) + SolidTorusElement::basis(0, mono(-1, 1) + mono(-1, -3)));
  const auto s11 = gluckkit::bracket_of_closure(BraidWord(2, {1, 1}), Smoothing::Standard);
  CHECK(s11 == SolidTorusElement::basis(2, mono(1, 2)) + SolidTorusElement::basis(0, mono(-1, 2) + mono(1, -6)));
}

TEST_CASE("bracket agrees with the state-enumeration oracle") {
  for (int n = 1; n <= 3; ++n) {
    for (int c = 0; c <= 4; ++c) {
      for_each_word(n, c, [n](const std::vector<int>& word) {
        const BraidWord b(n, word);
        for (Smoothing sm : {Smoothing::Standard, Smoothing::Mirror}) {
          const auto engine = gluckkit::bracket_of_closure(b, sm);
          CHECK(engine.coefficients() == oracle_of(b, sm == Smoothing::Mirror));
        }
      });
    }
  }
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const auto b = random_braid(rng, 5, 10);
    CHECK(gluckkit::bracket_of_closure(b, Smoothing::Standard).coefficients() == oracle_of(b));
  }
}

TEST_CASE("mirror smoothing is the A -> A^-1 image") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto b = random_braid(rng, 4, 8);
    const auto standard = gluckkit::bracket_of_closure(b, Smoothing::Standard);
    SolidTorusElement flipped;
    for (const auto& [i, c] : standard.coefficients()) flipped.add(i, invert_a(c));
    CHECK(gluckkit::bracket_of_closure(b, Smoothing::Mirror) == flipped);
  }
}

TEST_CASE("Reidemeister II at the bracket level") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const auto rest = random_braid(rng, 4, 6);
    if (rest.strands() < 2) continue;
    const int i = std::uniform_int_distribution<int>(1, rest.strands() - 1)(rng);
    std::vector<int> word{i, -i};
    word.insert(word.end(), rest.letters().begin(), rest.letters().end());
    CHECK(gluckkit::bracket_of_closure(BraidWord(rest.strands(), word)) == gluckkit::bracket_of_closure(rest));
    std::vector<int> swapped{-i, i};
    swapped.insert(swapped.end(), rest.letters().begin(), rest.letters().end());
    CHECK(gluckkit::bracket_of_closure(BraidWord(rest.strands(), swapped)) == gluckkit::bracket_of_closure(rest));
  }
}

TEST_CASE("basis changes") {
  CHECK(gluckkit::z_to_e(SolidTorusElement::basis(2)) == EBasisElement::basis(2) + EBasisElement::basis(0));
  CHECK(gluckkit::e_to_z(EBasisElement::basis(3)) ==
        SolidTorusElement::basis(3) + SolidTorusElement::basis(1, -2));
  CHECK(gluckkit::z_to_e(SolidTorusElement::basis(0)) == EBasisElement::basis(0));

  CHECK(gluckkit::e_to_eprime(EBasisElement::basis(3)) == EPrimeVector::basis(3) - EPrimeVector::basis(1));
  CHECK(gluckkit::eprime_to_e(EPrimeVector::basis(4)) == EBasisElement::basis(4) + EBasisElement::basis(2));
  CHECK(gluckkit::eprime_to_e(EPrimeVector::basis(5)) ==
        EBasisElement::basis(5) + EBasisElement::basis(3) + EBasisElement::basis(1));
  CHECK(gluckkit::e_to_eprime(EBasisElement::basis(1)) == EPrimeVector::basis(1));
  CHECK(gluckkit::e_to_eprime(EBasisElement::basis(2)) == EPrimeVector::basis(2));
  CHECK(gluckkit::e_to_eprime(EBasisElement::basis(0)) == EPrimeVector::basis(0));
}

TEST_CASE("basis round trips") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const auto s = random_vector<SolidTorusElement>(rng, 12);
    CHECK(gluckkit::e_to_z(gluckkit::z_to_e(s)) == s);
    const auto x = random_vector<EBasisElement>(rng, 12);
    CHECK(gluckkit::eprime_to_e(gluckkit::e_to_eprime(x)) == x);
    CHECK(gluckkit::z_to_e(gluckkit::e_to_z(x)) == x);
  }
}

TEST_CASE("normal form") {
  CHECK(SkeinElement::basis(1, mono(1, 6)) == SkeinElement::basis(1));
  CHECK(SkeinElement::basis(1, mono(1, 12)) == SkeinElement::basis(1));
  CHECK(SkeinElement::basis(0, mono(1, -6)).coefficient(0) == mono(1, -6));
  CHECK(SkeinElement::basis(2, mono(1, -1)).coefficient(2) == mono(1, 7));
  CHECK(gluckkit::eprime_modulus(0) == 0);
  CHECK(gluckkit::eprime_modulus(1) == 6);
  CHECK(gluckkit::eprime_modulus(5) == 14);

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = gluckkit::normalize(random_vector<EPrimeVector>(rng, 10));
    CHECK(gluckkit::normalize(x.vector()) == x);
    for (const auto& [i, c] : x.coefficients()) {
      if (i == 0) continue;
      CHECK(c.min_exponent() >= 0);
      CHECK(c.max_exponent() < 2 * i + 4);
    }
  }
}

TEST_CASE("gluck eigenvalues") {
  CHECK(gluckkit::gluck_eigenvalue_e(0) == LaurentPolynomial(1));
  CHECK(gluckkit::gluck_eigenvalue_e(1) == mono(-1, 3));
  CHECK(gluckkit::gluck_eigenvalue_e(2) == mono(1, 8));
  CHECK(gluckkit::gluck_eigenvalue_eprime(1) == mono(-1, 3));
  CHECK(gluckkit::gluck_eigenvalue_eprime(2) == LaurentPolynomial(1));
  CHECK(gluckkit::gluck_eigenvalue_eprime(3) == mono(-1, 5));
}

TEST_CASE("e' eigenvalues follow from the e eigenvalues") {
  // Apply G through the e-basis to e'_i, return to e', and normalize.
  for (std::int64_t i = 0; i <= 12; ++i) {
    const EBasisElement expanded = gluckkit::eprime_to_e(EPrimeVector::basis(i));
    const EBasisElement image = gluckkit::gluck_action(expanded);
    const SkeinElement reduced = gluckkit::normalize(gluckkit::e_to_eprime(image));
    CHECK(reduced == SkeinElement::basis(i, gluckkit::gluck_eigenvalue_eprime(i)));
  }
}

TEST_CASE("gluck action on normal forms") {
  CHECK(gluckkit::gluck_action(SkeinElement::basis(1)) == SkeinElement::basis(1, mono(-1, 3)));
  CHECK(gluckkit::gluck_action(SkeinElement::basis(2)) == SkeinElement::basis(2));
  const auto s11 = gluckkit::to_skein(gluckkit::bracket_of_closure(BraidWord(2, {1, 1}), Smoothing::Standard));
  CHECK(s11 == SkeinElement::basis(2, mono(1, 2)) + SkeinElement::basis(0, mono(1, -6)));
  CHECK(gluckkit::gluck_action(s11) == s11);

  std::mt19937_64 rng(500);
  for (int trial = 0; trial < 500; ++trial) {
    const auto x = gluckkit::normalize(random_vector<EPrimeVector>(rng, 10));
    CHECK(gluckkit::gluck_action(gluckkit::gluck_action(x)) == x);
  }
}

TEST_CASE("framing twists") {
  std::mt19937_64 rng(2);
  const auto x = gluckkit::normalize(random_vector<EPrimeVector>(rng, 6));
  CHECK(gluckkit::framing_twist(x, 0) == x);
  CHECK(gluckkit::framing_twist(SkeinElement::basis(1), 2) == SkeinElement::basis(1));
  CHECK(gluckkit::framing_twist(SolidTorusElement::basis(1), 1) == SolidTorusElement::basis(1, mono(-1, 3)));
  CHECK(gluckkit::framing_twist_factor(-1) == mono(-1, -3));
  CHECK(gluckkit::framing_twist_factor(-2) == mono(1, -6));
  CHECK(gluckkit::framing_twist(gluckkit::framing_twist(x, 5), -5) == x);
}

TEST_CASE("Hopf class: the Gluck twist is one framing twist") {
  const auto hopf = gluckkit::to_skein(gluckkit::bracket_of_closure(BraidWord(1, {})));
  CHECK(hopf == SkeinElement::basis(1));
  CHECK(gluckkit::gluck_action(hopf) == gluckkit::framing_twist(hopf, 1));
}

TEST_CASE("parity support") {
  const auto s11 = gluckkit::to_skein(gluckkit::bracket_of_closure(BraidWord(2, {1, 1})));
  CHECK(gluckkit::parity_support(s11, 2));
  CHECK(gluckkit::parity_support(SkeinElement::basis(1), 1));
  const auto mixed = SkeinElement::basis(0) + SkeinElement::basis(1);
  for (std::int64_t w = -3; w <= 3; ++w) CHECK_FALSE(gluckkit::parity_support(mixed, w));

  std::mt19937_64 rng(200);
  for (int trial = 0; trial < 200; ++trial) {
    const auto b = random_braid(rng, 4, 8);
    const auto bracket = gluckkit::bracket_of_closure(b);
    CHECK(gluckkit::parity_support(bracket, b.strands()));
    CHECK(gluckkit::parity_support(gluckkit::to_skein(bracket), b.strands()));
  }
}

TEST_CASE("gluck invariance") {
  auto check = gluckkit::verify_gluck_invariance(SkeinElement::basis(1), Parity::Odd);
  CHECK(check.holds);
  CHECK(check.f_used == 3);

  check = gluckkit::verify_gluck_invariance(SkeinElement::basis(1) + SkeinElement::basis(3), Parity::Odd);
  CHECK(check.holds);
  CHECK(check.f_used == 15);

  const auto even = SkeinElement::basis(2, mono(1, 2)) + SkeinElement::basis(0, mono(1, -6));
  check = gluckkit::verify_gluck_invariance(even, Parity::Even);
  CHECK(check.holds);
  CHECK_FALSE(check.f_used.has_value());

  CHECK_THROWS_AS(gluckkit::verify_gluck_invariance(SkeinElement::basis(0) + SkeinElement::basis(1), Parity::Odd),
                  gluckkit::PreconditionError);
  CHECK_THROWS_AS(gluckkit::verify_gluck_invariance(SkeinElement::basis(1), Parity::Even),
                  gluckkit::PreconditionError);

  // Every braid closure satisfies the invariance for its strand parity.
  std::mt19937_64 rng(64);
  for (int trial = 0; trial < 100; ++trial) {
    const auto b = random_braid(rng, 5, 8);
    const auto x = gluckkit::to_skein(gluckkit::bracket_of_closure(b));
    const auto parity = b.strands() % 2 == 0 ? Parity::Even : Parity::Odd;
    CHECK(gluckkit::verify_gluck_invariance(x, parity).holds);
  }
}
