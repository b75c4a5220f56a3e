#pragma once

// Framing calculus for knots in S^1 x S^2 drawn as diagrams D in the
// complement of a 0-framed unknot U, and the first homology of the surgered
// manifolds M(D, f).
//
// Homology is written in the ordered basis ([m], [h]) where m is the
// meridian of D and h the meridian of U. The relation matrix of M(D, f) has
// rows
//
//   U:  w [m]         = 0
//   D:  f [m] + w [h] = 0
//
// so that at f = -1 it reads [m] = w [h].

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "gluckkit/laurent.hpp"

namespace gluckkit {

struct DiagramClass {
  std::int64_t w;  // algebraic winding number
  std::int64_t f;  // framing relative to the diagram's preferred longitude

  friend bool operator==(const DiagramClass&, const DiagramClass&) = default;
};

// Unimodular action on ([m], [h]). Column j holds the image of basis
// vector j, so images compose by matrix multiplication.
class HomologyAction {
 public:
  HomologyAction() : entries_{1, 0, 0, 1} {}
  HomologyAction(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

  static HomologyAction identity() { return {}; }
  // [m] -> [m], [h] -> [h] + shift [m].
  static HomologyAction shear(std::int64_t shift) { return {1, shift, 0, 1}; }

  std::int64_t at(int row, int col) const { return entries_[2 * row + col]; }
  std::int64_t determinant() const { return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0); }
  // Coefficient of [m] in the image of [h].
  std::int64_t h_shift() const { return at(0, 1); }

  // Apply `this` after `first`.
  HomologyAction after(const HomologyAction& first) const;

  friend bool operator==(const HomologyAction&, const HomologyAction&) = default;

 private:
  std::array<std::int64_t, 4> entries_;
};

struct DiagramMove {
  DiagramClass diagram;
  HomologyAction action;
};

struct FirstHomology {
  std::int64_t free_rank = 0;
  std::vector<Integer> invariant_factors;  // each >= 2, each dividing the next

  friend bool operator==(const FirstHomology&, const FirstHomology&) = default;
};

class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Integer> data_;
};

// Exact determinant by fraction-free (Bareiss) elimination; square input only.
Integer determinant(const IntMatrix& m);

// left * m * right == diagonal.
struct SmithDecomposition {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;
};

DiagramMove gluck_twist(const DiagramClass& d);

// sign = +1 or -1.
DiagramMove handleslide(const DiagramClass& d, int sign);

struct FramingSolution {
  enum class Kind { None, Unique, AllIntegers };
  Kind kind;
  std::int64_t k = 0;  // meaningful only for Unique

  friend bool operator==(const FramingSolution&, const FramingSolution&) = default;
};

// Integer solutions k of w^2 + 2kw = 0.
FramingSolution solve_framing_equation(std::int64_t w);

enum class IsotopyVerdict { NotIsotopic, Indeterminate };

const char* to_string(IsotopyVerdict verdict);

// For odd w: a knot isotopic to its Gluck image has geometric winding 1,
// which |w| >= 3 rules out.
IsotopyVerdict odd_winding_verdict(std::int64_t w);

// Deterministic: pivots are the smallest-magnitude nonzero entry of the
// remaining block, ties broken in row-major order.
SmithDecomposition smith_normal_form(const IntMatrix& m);

IntMatrix relation_matrix(const DiagramClass& d);

FirstHomology surgery_homology(const DiagramClass& d);

struct GeneratorAction {
  Integer modulus;     // order of H_1; 0 when H_1 is infinite cyclic
  Integer multiplier;  // phi_*[h] = multiplier [h], reduced mod modulus
};

// Action of phi_* ([h] -> [h] + (w + k)[m]) on the generator [h] of the
// cyclic group H_1(M(D, f)). Empty unless gcd(w, f) = 1.
std::optional<GeneratorAction> homology_action_on_generator(const DiagramClass& d, std::int64_t k);

}  // namespace gluckkit
