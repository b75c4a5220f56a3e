#pragma once

// Spin^c bookkeeping and Heegaard Floer correction terms of positive integer
// surgeries on knots in S^3, plus the even-winding Gluck obstruction built on
// them.
//
// Spin^c structures on S^3_n(K) are labelled t_i, i in Z/n, with the meridian
// acting by t_i + PD[mu] = t_{i+1}. The correction terms come from
//
//   d(S^3_n(U), t_i) = (n - 2i)^2 / 4n - 1/4
//   d(S^3_n(K), t_i) = d(S^3_n(U), t_i) - 2 max{V_i(K), V_{n-i}(K)}
//
// and everything is carried out in exact rationals.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gluckkit/laurent.hpp"
#include "gluckkit/semigroup.hpp"

namespace gluckkit {

class SpinCLabel {
 public:
  // Reduces i into [0, n). Throws UnsupportedSurgeryError if n <= 0.
  SpinCLabel(std::int64_t n, std::int64_t i);

  std::int64_t n() const { return n_; }
  std::int64_t i() const { return i_; }

  friend bool operator==(const SpinCLabel&, const SpinCLabel&) = default;

 private:
  std::int64_t n_;
  std::int64_t i_;
};

struct SurgeryDescriptor {
  VSequence v;
  std::int64_t n;
  std::string label;
};

// The fixed residue of psi^*(t_0) under one spin-fixing assumption, and the
// labels i where d(t_i) != d(psi^*(t_i)).
struct Violation {
  std::int64_t i;
  std::int64_t image;
  Rational d_i;
  Rational d_image;
};

struct SpinBranch {
  std::int64_t base;  // psi^*(t_0) = t_base
  std::vector<Violation> violations;
};

enum class Verdict { Obstructed, NotObstructed, Inconclusive };

const char* to_string(Verdict verdict);

struct ObstructionReport {
  std::int64_t w;
  std::int64_t n;
  std::string label;
  std::int64_t multiplier;
  std::vector<Rational> d_table;  // indexed by Spin^c label i
  bool spin_distinguished;
  // One entry per admissible spin-fixing assumption; branches[0] is t_0 -> t_0.
  std::vector<SpinBranch> branches;
  Verdict verdict;

  // Violations under the t_0 -> t_0 assumption.
  const std::vector<Violation>& violations() const { return branches.front().violations; }
};

Rational d_lens(std::int64_t n, std::int64_t i);
Rational d_surgery(const SurgeryDescriptor& s, std::int64_t i);
std::vector<Rational> d_table(const SurgeryDescriptor& s);

// t_0 and t_{n/2} for even n.
std::pair<SpinCLabel, SpinCLabel> spin_structures(std::int64_t n);

SpinCLabel spinc_translate(const SpinCLabel& t, std::int64_t k);

// Checks whether a self-homeomorphism of S^3_n(K) acting on H_1 by
// [mu] -> c [mu] is compatible with the correction terms. Requires n even
// when the spin structures are not distinguished by d.
ObstructionReport obstruct_gluck(const SurgeryDescriptor& s, std::int64_t multiplier,
                                 std::int64_t w = 0);

// The K_w obstruction: S^3_{w^2}(T_{w,w+1}) with multiplier w^2/2 + 1.
ObstructionReport obstruct_even_gluck(std::int64_t w);

}  // namespace gluckkit
