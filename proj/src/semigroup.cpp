#include "gluckkit/semigroup.hpp"

#include <numeric>
#include <string>

#include "gluckkit/errors.hpp"

namespace gluckkit {

namespace {

// Largest p*q accepted; keeps the membership sieve at desk scale.
constexpr std::int64_t kMaxSieveProduct = std::int64_t{1} << 26;

// member[x] for 0 <= x <= frobenius number.
std::vector<bool> membership_sieve(const TorusKnotParams& params) {
  const std::int64_t limit = params.frobenius_number();
  if (limit < 0) return {};
  std::vector<bool> member(static_cast<std::size_t>(limit) + 1, false);
  member[0] = true;
  for (std::int64_t x = 1; x <= limit; ++x) {
    member[x] = (x >= params.p() && member[x - params.p()]) ||
                (x >= params.q() && member[x - params.q()]);
  }
  return member;
}

}  // namespace

TorusKnotParams::TorusKnotParams(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
  if (p < 1 || q < 1) throw PreconditionError("torus knot parameters must satisfy p >= 1 and q >= 1");
  if (std::gcd(p, q) != 1) throw PreconditionError("torus knot parameters must satisfy gcd(p, q) = 1");
  if (p > kMaxSieveProduct / q) {
    throw PreconditionError("torus knot parameters too large: p*q must be at most " +
                            std::to_string(kMaxSieveProduct));
  }
}

VSequence::VSequence(std::vector<std::int64_t> values) : values_(std::move(values)) {
  if (values_.empty() || values_.back() != 0) {
    throw PreconditionError("V-sequence must end in 0");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 0) throw PreconditionError("V-sequence entries must be non-negative");
    if (i + 1 < values_.size() && values_[i] < values_[i + 1]) {
      throw PreconditionError("V-sequence must be non-increasing");
    }
  }
}

std::vector<std::int64_t> VSequence::prefix(std::size_t count) const {
  std::vector<std::int64_t> out(count, 0);
  for (std::size_t i = 0; i < count && i < values_.size(); ++i) out[i] = values_[i];
  return out;
}

bool semigroup_contains(const TorusKnotParams& params, std::int64_t x) {
  if (x < 0) throw PreconditionError("semigroup_contains: x must be >= 0");
  if (x > params.frobenius_number()) return true;
  return membership_sieve(params)[x];
}

std::int64_t gap_count(const TorusKnotParams& params, std::int64_t j) {
  if (j < 0) throw PreconditionError("gap_count: j must be >= 0");
  const auto member = membership_sieve(params);
  std::int64_t gaps = 0;
  for (std::int64_t x = j; x < static_cast<std::int64_t>(member.size()); ++x) {
    if (!member[x]) ++gaps;
  }
  return gaps;
}

VSequence v_sequence(const TorusKnotParams& params, std::int64_t max_index) {
  if (max_index < 0) throw PreconditionError("v_sequence: max_index must be >= 0");
  const auto member = membership_sieve(params);
  const auto size = static_cast<std::int64_t>(member.size());

  // suffix[x] = gaps in [x, size).
  std::vector<std::int64_t> suffix(member.size() + 1, 0);
  for (std::int64_t x = size - 1; x >= 0; --x) suffix[x] = suffix[x + 1] + (member[x] ? 0 : 1);

  std::vector<std::int64_t> values;
  for (std::int64_t j = 0;; ++j) {
    const std::int64_t x = j + params.genus();
    const std::int64_t v = x < size ? suffix[x] : 0;
    values.push_back(v);
    if (j >= max_index && v == 0) break;
  }
  return VSequence(std::move(values));
}

EvenTorusVValues v_closed_form_even(std::int64_t w) {
  if (w < 2 || w % 2 != 0) throw PreconditionError("v_closed_form_even: w must be even and >= 2");
  const std::int64_t v0 = (w * w + 2 * w) / 8;
  return {v0, v0 - 1, 0, 0};
}

}  // namespace gluckkit
