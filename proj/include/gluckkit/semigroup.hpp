#pragma once

// Numerical semigroups <p, q>, their gap-counting function, and the
// V-sequences of torus knots derived from it.

#include <cstdint>
#include <span>
#include <vector>

namespace gluckkit {

// Parameters of the torus knot T_{p,q}; p, q >= 1 and coprime.
class TorusKnotParams {
 public:
  TorusKnotParams(std::int64_t p, std::int64_t q);

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  // pq - p - q; negative when the semigroup has no gaps (p or q is 1).
  std::int64_t frobenius_number() const { return p_ * q_ - p_ - q_; }
  // (p - 1)(q - 1) / 2, the index shift between V_j and the gap count.
  std::int64_t genus() const { return (p_ - 1) * (q_ - 1) / 2; }

 private:
  std::int64_t p_;
  std::int64_t q_;
};

// Non-increasing, non-negative, eventually zero. The stored prefix always
// ends in 0 and every index past it reads as 0.
class VSequence {
 public:
  // Validates the invariants; trailing zeros beyond the first are kept.
  explicit VSequence(std::vector<std::int64_t> values);

  std::int64_t at(std::size_t index) const {
    return index < values_.size() ? values_[index] : 0;
  }
  std::span<const std::int64_t> values() const { return values_; }
  std::size_t stored_size() const { return values_.size(); }
  // The first `count` entries, zero-extended as needed.
  std::vector<std::int64_t> prefix(std::size_t count) const;

  friend bool operator==(const VSequence&, const VSequence&) = default;

 private:
  std::vector<std::int64_t> values_;
};

bool semigroup_contains(const TorusKnotParams& params, std::int64_t x);

// #(Z_{>=j} \ <p,q>).
std::int64_t gap_count(const TorusKnotParams& params, std::int64_t j);

// V_j(T_{p,q}) = gap_count(j + genus) for j in [0, max_index]. The stored
// prefix is extended past max_index until it reaches 0.
VSequence v_sequence(const TorusKnotParams& params, std::int64_t max_index);

struct EvenTorusVValues {
  std::int64_t v0;
  std::int64_t v1;
  std::int64_t v_half_minus_one;  // V_{w^2/2 - 1}
  std::int64_t v_half;            // V_{w^2/2}

  friend bool operator==(const EvenTorusVValues&, const EvenTorusVValues&) = default;
};

// Closed forms for T_{w,w+1} with w even and positive.
EvenTorusVValues v_closed_form_even(std::int64_t w);

}  // namespace gluckkit
