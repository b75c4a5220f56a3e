#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "gluckkit/errors.hpp"
#include "gluckkit/surgery_diagram.hpp"

using gluckkit::DiagramClass;
using gluckkit::FirstHomology;
using gluckkit::FramingSolution;
using gluckkit::HomologyAction;
using gluckkit::Integer;
using gluckkit::IntMatrix;
using gluckkit::IsotopyVerdict;

namespace {

void check_smith(const IntMatrix& m) {
  const auto snf = gluckkit::smith_normal_form(m);
  CHECK(snf.left * m * snf.right == snf.diagonal);
  const Integer det_u = gluckkit::determinant(snf.left);
  const Integer det_v = gluckkit::determinant(snf.right);
  CHECK((det_u == 1 || det_u == -1));
  CHECK((det_v == 1 || det_v == -1));
  Integer previous = 1;
  bool seen_zero = false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (i != j) CHECK(snf.diagonal(i, j) == 0);
    }
    if (i >= m.cols()) continue;
    const Integer& d = snf.diagonal(i, i);
    CHECK(d >= 0);
    if (d == 0) {
      seen_zero = true;
    } else {
      CHECK_FALSE(seen_zero);
      CHECK(mpz_divisible_p(d.get_mpz_t(), previous.get_mpz_t()) != 0);
      previous = d;
    }
  }
}

// Whether the integer row vector v lies in the row lattice of the
// nonsingular 2x2 matrix m, by Cramer's rule.
bool in_row_lattice(const IntMatrix& m, const Integer& v0, const Integer& v1) {
  const Integer det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  // x * m = v  =>  x = v * adj(m) / det.
  const Integer x0 = v0 * m(1, 1) - v1 * m(1, 0);
  const Integer x1 = -v0 * m(0, 1) + v1 * m(0, 0);
  return mpz_divisible_p(x0.get_mpz_t(), det.get_mpz_t()) && mpz_divisible_p(x1.get_mpz_t(), det.get_mpz_t());
}

}  // namespace

TEST_CASE("gluck twist") {
  auto move = gluckkit::gluck_twist({3, 0});
  CHECK(move.diagram == DiagramClass{3, 9});
  CHECK(move.action == HomologyAction::shear(3));
  CHECK(move.action.at(0, 0) == 1);
  CHECK(move.action.at(1, 1) == 1);

  move = gluckkit::gluck_twist({0, 5});
  CHECK(move.diagram == DiagramClass{0, 5});
  CHECK(move.action == HomologyAction::identity());

  move = gluckkit::gluck_twist({-2, 1});
  CHECK(move.diagram == DiagramClass{-2, 5});
  CHECK(move.action.h_shift() == -2);
}

TEST_CASE("handleslides") {
  auto move = gluckkit::handleslide({2, 1}, -1);
  CHECK(move.diagram == DiagramClass{2, -3});
  CHECK(move.action.h_shift() == -1);

  move = gluckkit::handleslide({0, 7}, 1);
  CHECK(move.diagram == DiagramClass{0, 7});
  CHECK(move.action.h_shift() == 1);

  const auto up = gluckkit::handleslide({5, 4}, 1);
  const auto down = gluckkit::handleslide(up.diagram, -1);
  CHECK(down.diagram == DiagramClass{5, 4});
  CHECK(down.action.after(up.action) == HomologyAction::identity());

  CHECK_THROWS_AS(gluckkit::handleslide({1, 1}, 2), gluckkit::PreconditionError);
  CHECK_THROWS_AS(HomologyAction(2, 0, 0, 1), gluckkit::PreconditionError);
}

TEST_CASE("gluck twist then k handleslides") {
  for (std::int64_t w = -10; w <= 10; ++w) {
    for (std::int64_t f = -10; f <= 10; ++f) {
      for (std::int64_t k = -10; k <= 10; ++k) {
        auto move = gluckkit::gluck_twist({w, f});
        const int sign = k >= 0 ? 1 : -1;
        for (std::int64_t s = 0; s < (k >= 0 ? k : -k); ++s) {
          const auto slide = gluckkit::handleslide(move.diagram, sign);
          move = {slide.diagram, slide.action.after(move.action)};
        }
        CHECK(move.diagram == DiagramClass{w, f + w * w + 2 * k * w});
        CHECK(move.action == HomologyAction::shear(w + k));
      }
    }
  }
}

TEST_CASE("framing equation") {
  CHECK(gluckkit::solve_framing_equation(4) == FramingSolution{FramingSolution::Kind::Unique, -2});
  CHECK(gluckkit::solve_framing_equation(-6) == FramingSolution{FramingSolution::Kind::Unique, 3});
  CHECK(gluckkit::solve_framing_equation(3).kind == FramingSolution::Kind::None);
  CHECK(gluckkit::solve_framing_equation(0).kind == FramingSolution::Kind::AllIntegers);
  for (std::int64_t w = -30; w <= 30; ++w) {
    const auto sol = gluckkit::solve_framing_equation(w);
    for (std::int64_t k = -40; k <= 40; ++k) {
      const bool solves = w * w + 2 * k * w == 0;
      switch (sol.kind) {
        case FramingSolution::Kind::None: CHECK_FALSE(solves); break;
        case FramingSolution::Kind::Unique: CHECK(solves == (k == sol.k)); break;
        case FramingSolution::Kind::AllIntegers: CHECK(solves); break;
      }
    }
  }
}

TEST_CASE("odd winding verdict") {
  CHECK(gluckkit::odd_winding_verdict(5) == IsotopyVerdict::NotIsotopic);
  CHECK(gluckkit::odd_winding_verdict(1) == IsotopyVerdict::Indeterminate);
  CHECK(gluckkit::odd_winding_verdict(-1) == IsotopyVerdict::Indeterminate);
  CHECK(gluckkit::odd_winding_verdict(-3) == IsotopyVerdict::NotIsotopic);
  for (std::int64_t w = 3; w < 200; w += 2) {
    CHECK(gluckkit::odd_winding_verdict(w) == IsotopyVerdict::NotIsotopic);
    CHECK(gluckkit::odd_winding_verdict(-w) == IsotopyVerdict::NotIsotopic);
  }
  CHECK_THROWS_AS(gluckkit::odd_winding_verdict(4), gluckkit::PreconditionError);
}

TEST_CASE("smith normal form examples") {
  auto snf = gluckkit::smith_normal_form(IntMatrix{{2, 0}, {1, 2}});
  CHECK(snf.diagonal == IntMatrix({{1, 0}, {0, 4}}));
  snf = gluckkit::smith_normal_form(IntMatrix::identity(3));
  CHECK(snf.diagonal == IntMatrix::identity(3));
  snf = gluckkit::smith_normal_form(IntMatrix{{0, 0}, {0, 0}});
  CHECK(snf.diagonal == IntMatrix({{0, 0}, {0, 0}}));
  snf = gluckkit::smith_normal_form(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  CHECK(snf.diagonal == IntMatrix({{2, 0, 0}, {0, 6, 0}, {0, 0, 12}}));
  check_smith(IntMatrix{{0, 3}, {0, 0}, {5, 0}});
}

TEST_CASE("smith normal form round trip on random matrices") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<long> entry(-50, 50);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = trial % 2 == 0 ? 2 : 3;
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
    }
    check_smith(m);
    const auto first = gluckkit::smith_normal_form(m);
    const auto second = gluckkit::smith_normal_form(m);
    CHECK(first.left == second.left);
    CHECK(first.right == second.right);
    // |product of invariant factors| = |det|.
    Integer product = 1;
    for (std::size_t i = 0; i < n; ++i) product *= first.diagonal(i, i);
    const Integer det = gluckkit::determinant(m);
    CHECK(product == (det < 0 ? Integer(-det) : det));
  }
}

TEST_CASE("surgery homology") {
  CHECK(gluckkit::surgery_homology({2, 1}) == FirstHomology{0, {Integer(4)}});
  CHECK(gluckkit::surgery_homology({4, -1}) == FirstHomology{0, {Integer(16)}});
  CHECK(gluckkit::surgery_homology({0, 0}) == FirstHomology{2, {}});
  CHECK(gluckkit::surgery_homology({0, 3}) == FirstHomology{1, {Integer(3)}});
  CHECK(gluckkit::surgery_homology({0, -1}) == FirstHomology{1, {}});
  CHECK(gluckkit::surgery_homology({2, 0}) == FirstHomology{0, {Integer(2), Integer(2)}});

  for (std::int64_t w = -12; w <= 12; ++w) {
    for (std::int64_t f = -12; f <= 12; ++f) {
      const auto h = gluckkit::surgery_homology({w, f});
      const Integer det = gluckkit::determinant(gluckkit::relation_matrix({w, f}));
      CHECK(det == Integer(w * w));
      if (w != 0) {
        CHECK(h.free_rank == 0);
        Integer order = 1;
        for (const auto& factor : h.invariant_factors) order *= factor;
        CHECK(order == Integer(w * w));
      }
      CHECK((h.free_rank == 1) == (w == 0 && f != 0));
      CHECK((h.free_rank == 2) == (w == 0 && f == 0));
      for (std::size_t i = 0; i + 1 < h.invariant_factors.size(); ++i) {
        CHECK(mpz_divisible_p(h.invariant_factors[i + 1].get_mpz_t(), h.invariant_factors[i].get_mpz_t()));
      }
    }
  }
}

TEST_CASE("action on the generator of H_1") {
  auto c = gluckkit::homology_action_on_generator({2, 1}, -1);
  REQUIRE(c.has_value());
  CHECK(c->modulus == 4);
  CHECK(c->multiplier == 3);

  c = gluckkit::homology_action_on_generator({4, -1}, -2);
  REQUIRE(c.has_value());
  CHECK(c->modulus == 16);
  CHECK(c->multiplier == 9);

  // [m] = -2[h] in Z/4, so [h] + 2[m] = -3[h] = [h].
  c = gluckkit::homology_action_on_generator({2, 1}, 0);
  REQUIRE(c.has_value());
  CHECK(c->multiplier == 1);

  CHECK_FALSE(gluckkit::homology_action_on_generator({4, 2}, 0).has_value());
  CHECK_FALSE(gluckkit::homology_action_on_generator({0, 0}, 0).has_value());

  c = gluckkit::homology_action_on_generator({0, 1}, 5);
  REQUIRE(c.has_value());
  CHECK(c->modulus == 0);
  CHECK(c->multiplier == 1);
}

TEST_CASE("generator multiplier agrees with the relation lattice") {
  // phi_*[h] - c[h] = (w + k)[m] + (1 - c)[h] must vanish in H_1.
  for (std::int64_t w = -9; w <= 9; ++w) {
    if (w == 0) continue;
    for (std::int64_t f = -9; f <= 9; ++f) {
      for (std::int64_t k = -6; k <= 6; ++k) {
        const auto c = gluckkit::homology_action_on_generator({w, f}, k);
        CHECK(c.has_value() == (std::gcd(w, f) == 1));
        if (!c) continue;
        CHECK(c->multiplier >= 0);
        CHECK(c->multiplier < std::max<Integer>(c->modulus, Integer(1)));
        const IntMatrix m = gluckkit::relation_matrix({w, f});
        CHECK(in_row_lattice(m, Integer(w + k), Integer(1) - c->multiplier));
      }
    }
  }
}
