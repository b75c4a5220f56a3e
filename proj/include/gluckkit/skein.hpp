#pragma once

// Kauffman bracket skein module of S^1 x S^2.
//
// Braid closures live in the solid torus S^1 x D^2, whose skein module is
// free on z^0, z^1, z^2, ... (z = the core). Two further bases are used:
//
//   e_0 = 1, e_1 = z, e_i = z e_{i-1} - e_{i-2}
//   e'_0 = e_0, e'_1 = e_1, e'_2 = e_2, e'_i = e_i + e'_{i-2}  (i >= 3)
//
// Gluing in the second solid torus makes e'_0 free and e'_i (i >= 1) span a
// copy of Z[A^{+-1}]/(1 - A^{2i+4}). A SkeinElement stores its e'
// coefficients in that normal form.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gluckkit/laurent.hpp"

namespace gluckkit {

// A-smoothing of a positive crossing sigma_i: Standard keeps the strands
// vertical (identity), Mirror swaps A and A^-1 throughout.
enum class Smoothing { Standard, Mirror };

#ifdef GLUCKKIT_MIRROR_SMOOTHING
inline constexpr Smoothing kDefaultSmoothing = Smoothing::Mirror;
#else
inline constexpr Smoothing kDefaultSmoothing = Smoothing::Standard;
#endif

const char* to_string(Smoothing smoothing);

// Exhaustive state sums are limited to this many crossings.
inline constexpr std::size_t kMaxCrossings = 24;

class BraidWord {
 public:
  // Letter +-i is sigma_i^{+-1}; requires 1 <= |i| <= strands - 1.
  BraidWord(int strands, std::vector<int> letters);

  // Whitespace-separated signed integers, e.g. "1 1 -2".
  static BraidWord parse(int strands, std::string_view letters);

  int strands() const { return strands_; }
  std::span<const int> letters() const { return letters_; }

 private:
  int strands_;
  std::vector<int> letters_;
};

// Finitely supported map from a basis index to a Laurent coefficient. The
// tag fixes which basis the indices refer to.
template <class Tag>
class BasisVector {
 public:
  using Map = std::map<std::int64_t, LaurentPolynomial>;

  BasisVector() = default;

  static BasisVector basis(std::int64_t index, const LaurentPolynomial& coefficient = 1) {
    BasisVector v;
    v.add(index, coefficient);
    return v;
  }

  const Map& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  LaurentPolynomial coefficient(std::int64_t index) const {
    auto it = coeffs_.find(index);
    return it == coeffs_.end() ? LaurentPolynomial{} : it->second;
  }
  std::int64_t max_index() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

  void add(std::int64_t index, const LaurentPolynomial& coefficient);

  BasisVector scaled(const LaurentPolynomial& factor) const {
    BasisVector out;
    for (const auto& [i, c] : coeffs_) out.add(i, c * factor);
    return out;
  }

  BasisVector& operator+=(const BasisVector& o) {
    for (const auto& [i, c] : o.coeffs_) add(i, c);
    return *this;
  }
  BasisVector& operator-=(const BasisVector& o) {
    for (const auto& [i, c] : o.coeffs_) add(i, -c);
    return *this;
  }
  friend BasisVector operator+(BasisVector a, const BasisVector& b) { return a += b; }
  friend BasisVector operator-(BasisVector a, const BasisVector& b) { return a -= b; }
  friend bool operator==(const BasisVector& a, const BasisVector& b) { return a.coeffs_ == b.coeffs_; }

 private:
  Map coeffs_;  // no zero coefficients
};

void throw_negative_basis_index();

template <class Tag>
void BasisVector<Tag>::add(std::int64_t index, const LaurentPolynomial& coefficient) {
  if (index < 0) throw_negative_basis_index();
  if (coefficient.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(index, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

struct ZBasisTag {};
struct EBasisTag {};
struct EPrimeBasisTag {};

// z-basis: the skein module of the solid torus.
using SolidTorusElement = BasisVector<ZBasisTag>;
using EBasisElement = BasisVector<EBasisTag>;
// e'-basis before quotient reduction.
using EPrimeVector = BasisVector<EPrimeBasisTag>;

class SkeinElement;
SkeinElement normalize(const EPrimeVector& x);

// An element of S(S^1 x S^2) in e'-normal form: the coefficient of e'_i,
// i >= 1, has every exponent in [0, 2i + 4).
class SkeinElement {
 public:
  SkeinElement() = default;

  static SkeinElement basis(std::int64_t index, const LaurentPolynomial& coefficient = 1) {
    return normalize(EPrimeVector::basis(index, coefficient));
  }

  const EPrimeVector& vector() const { return vec_; }
  const EPrimeVector::Map& coefficients() const { return vec_.coefficients(); }
  LaurentPolynomial coefficient(std::int64_t index) const { return vec_.coefficient(index); }
  bool is_zero() const { return vec_.is_zero(); }

  friend SkeinElement operator+(const SkeinElement& a, const SkeinElement& b) {
    return normalize(a.vec_ + b.vec_);
  }
  friend bool operator==(const SkeinElement&, const SkeinElement&) = default;

 private:
  friend SkeinElement normalize(const EPrimeVector& x);
  EPrimeVector vec_;
};

// Sum over all 2^c smoothings of A^{a-b} z^{essential} delta^{inessential}.
SolidTorusElement bracket_of_closure(const BraidWord& braid, Smoothing smoothing = kDefaultSmoothing);

EBasisElement z_to_e(const SolidTorusElement& s);
SolidTorusElement e_to_z(const EBasisElement& x);
EPrimeVector e_to_eprime(const EBasisElement& x);
EBasisElement eprime_to_e(const EPrimeVector& x);

// z-basis element -> normal form in S(S^1 x S^2).
SkeinElement to_skein(const SolidTorusElement& s);

// Modulus d of the cyclic quotient on e'_index; 0 for the free summand e'_0.
std::int64_t eprime_modulus(std::int64_t index);

// G(e_i) = (-1)^i A^{i^2 + 2i} e_i.
LaurentPolynomial gluck_eigenvalue_e(std::int64_t i);
// G(e'_{2k}) = e'_{2k}, G(e'_{2k+1}) = -A^{2k+3} e'_{2k+1}.
LaurentPolynomial gluck_eigenvalue_eprime(std::int64_t i);

// Gluck action on the solid-torus e-basis via the e_i eigenvalues.
EBasisElement gluck_action(const EBasisElement& x);
SkeinElement gluck_action(const SkeinElement& x);

// (-A^3)^f.
LaurentPolynomial framing_twist_factor(std::int64_t f);

template <class Tag>
BasisVector<Tag> framing_twist(const BasisVector<Tag>& x, std::int64_t f) {
  return x.scaled(framing_twist_factor(f));
}
SkeinElement framing_twist(const SkeinElement& x, std::int64_t f);

enum class Parity { Even, Odd };

const char* to_string(Parity parity);

template <class Tag>
bool parity_support(const BasisVector<Tag>& x, std::int64_t w) {
  for (const auto& [i, c] : x.coefficients()) {
    if (((i - w) % 2 + 2) % 2 != 0) return false;
  }
  return true;
}
inline bool parity_support(const SkeinElement& x, std::int64_t w) { return parity_support(x.vector(), w); }

struct InvarianceCheck {
  bool holds;
  std::optional<std::int64_t> f_used;
};

// Even parity: G(x) == x. Odd parity: G(x)^f == x with
// f = lcm{2i + 3 : e'_{2i+1} up to the top index}. Rejects x whose support
// is not of the given parity.
InvarianceCheck verify_gluck_invariance(const SkeinElement& x, Parity parity);

}  // namespace gluckkit
