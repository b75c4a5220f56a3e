#include "gluckkit/skein.hpp"

#include <numeric>
#include <sstream>
#include <string>

#include "gluckkit/errors.hpp"
#include "temperley_lieb.hpp"

namespace gluckkit {

using detail::TLDiagram;

namespace {

// Expansions of z^k in the e-basis (or e_k in the z-basis) for k <= max_degree.
using IntegerRow = std::map<std::int64_t, Integer>;

std::vector<IntegerRow> z_powers_in_e(std::int64_t max_degree) {
  std::vector<IntegerRow> rows{{{0, Integer(1)}}};
  for (std::int64_t k = 1; k <= max_degree; ++k) {
    IntegerRow next;
    // z e_0 = e_1, z e_i = e_{i+1} + e_{i-1}.
    for (const auto& [i, a] : rows.back()) {
      next[i + 1] += a;
      if (i >= 1) next[i - 1] += a;
    }
    rows.push_back(std::move(next));
  }
  return rows;
}

std::vector<IntegerRow> e_in_z_powers(std::int64_t max_degree) {
  std::vector<IntegerRow> rows{{{0, Integer(1)}}};
  if (max_degree >= 1) rows.push_back({{1, Integer(1)}});
  for (std::int64_t k = 2; k <= max_degree; ++k) {
    IntegerRow next;
    for (const auto& [i, a] : rows[k - 1]) next[i + 1] += a;
    for (const auto& [i, a] : rows[k - 2]) next[i] -= a;
    rows.push_back(std::move(next));
  }
  return rows;
}

template <class Out, class In>
Out change_basis(const In& x, const std::vector<IntegerRow>& table) {
  Out out;
  for (const auto& [k, c] : x.coefficients()) {
    for (const auto& [i, a] : table[k]) {
      if (a != 0) out.add(i, c * LaurentPolynomial(a));
    }
  }
  return out;
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  const std::int64_t g = std::gcd(a, b);
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a / g, b, &out)) {
    throw PreconditionError("framing exponent lcm overflows 64 bits");
  }
  return out;
}

}  // namespace

void throw_negative_basis_index() { throw PreconditionError("basis index must be >= 0"); }

const char* to_string(Smoothing smoothing) {
  return smoothing == Smoothing::Standard ? "standard" : "mirror";
}

const char* to_string(Parity parity) { return parity == Parity::Even ? "even" : "odd"; }

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw PreconditionError("braid must have at least one strand");
  for (int letter : letters_) {
    if (letter == 0 || letter >= strands_ || -letter >= strands_) {
      throw PreconditionError("braid letter " + std::to_string(letter) + " must satisfy 1 <= |j| <= " +
                              std::to_string(strands_ - 1));
    }
  }
}

BraidWord BraidWord::parse(int strands, std::string_view letters) {
  std::istringstream is{std::string(letters)};
  std::vector<int> parsed;
  std::string token;
  while (is >> token) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || used == 0) {
      throw PreconditionError("braid letter '" + token + "' is not an integer");
    }
    parsed.push_back(value);
  }
  return BraidWord(strands, std::move(parsed));
}

SolidTorusElement bracket_of_closure(const BraidWord& braid, Smoothing smoothing) {
  if (braid.letters().size() > kMaxCrossings) {
    throw PreconditionError("braid has " + std::to_string(braid.letters().size()) +
                            " crossings; the state sum is limited to " + std::to_string(kMaxCrossings));
  }
  const int n = braid.strands();
  const LaurentPolynomial delta = LaurentPolynomial::delta();

  // Partial state sums grouped by the crossingless diagram they smooth to.
  std::map<TLDiagram, LaurentPolynomial> states{{TLDiagram::identity(n), LaurentPolynomial(1)}};
  for (int letter : braid.letters()) {
    const int i = (letter > 0 ? letter : -letter) - 1;
    const bool positive = letter > 0;
    const Exponent identity_exponent = (positive == (smoothing == Smoothing::Standard)) ? 1 : -1;
    const TLDiagram cup_cap = TLDiagram::cup_cap(n, i);

    std::map<TLDiagram, LaurentPolynomial> next;
    for (const auto& [diagram, coefficient] : states) {
      next[diagram] += coefficient.shifted(identity_exponent);
      auto [joined, loops] = diagram.then(cup_cap);
      next[joined] += coefficient.shifted(-identity_exponent) * delta.pow(static_cast<unsigned>(loops));
    }
    std::erase_if(next, [](const auto& entry) { return entry.second.is_zero(); });
    states = std::move(next);
  }

  SolidTorusElement out;
  for (const auto& [diagram, coefficient] : states) {
    const auto closure = diagram.close();
    out.add(closure.essential, coefficient * delta.pow(static_cast<unsigned>(closure.inessential)));
  }
  return out;
}

EBasisElement z_to_e(const SolidTorusElement& s) {
  return change_basis<EBasisElement>(s, z_powers_in_e(s.max_index()));
}

SolidTorusElement e_to_z(const EBasisElement& x) {
  return change_basis<SolidTorusElement>(x, e_in_z_powers(x.max_index()));
}

EPrimeVector e_to_eprime(const EBasisElement& x) {
  EPrimeVector out;
  for (const auto& [i, c] : x.coefficients()) {
    out.add(i, c);
    if (i >= 3) out.add(i - 2, -c);
  }
  return out;
}

EBasisElement eprime_to_e(const EPrimeVector& x) {
  EBasisElement out;
  for (const auto& [i, c] : x.coefficients()) {
    out.add(i, c);
    for (std::int64_t j = i - 2; i >= 3 && j >= 1; j -= 2) out.add(j, c);
  }
  return out;
}

std::int64_t eprime_modulus(std::int64_t index) { return index == 0 ? 0 : 2 * index + 4; }

SkeinElement normalize(const EPrimeVector& x) {
  SkeinElement out;
  for (const auto& [i, c] : x.coefficients()) {
    out.vec_.add(i, i == 0 ? c : reduce_cyclic(c, eprime_modulus(i)));
  }
  return out;
}

SkeinElement to_skein(const SolidTorusElement& s) { return normalize(e_to_eprime(z_to_e(s))); }

LaurentPolynomial gluck_eigenvalue_e(std::int64_t i) {
  if (i < 0) throw_negative_basis_index();
  return LaurentPolynomial::monomial(i % 2 == 0 ? 1 : -1, i * i + 2 * i);
}

LaurentPolynomial gluck_eigenvalue_eprime(std::int64_t i) {
  if (i < 0) throw_negative_basis_index();
  if (i % 2 == 0) return 1;
  return LaurentPolynomial::monomial(-1, i + 2);
}

EBasisElement gluck_action(const EBasisElement& x) {
  EBasisElement out;
  for (const auto& [i, c] : x.coefficients()) out.add(i, c * gluck_eigenvalue_e(i));
  return out;
}

SkeinElement gluck_action(const SkeinElement& x) {
  EPrimeVector out;
  for (const auto& [i, c] : x.coefficients()) out.add(i, c * gluck_eigenvalue_eprime(i));
  return normalize(out);
}

LaurentPolynomial framing_twist_factor(std::int64_t f) {
  std::int64_t exponent = 0;
  if (__builtin_mul_overflow(f, std::int64_t{3}, &exponent)) {
    throw PreconditionError("framing twist count overflows 64 bits");
  }
  return LaurentPolynomial::monomial(f % 2 == 0 ? 1 : -1, exponent);
}

SkeinElement framing_twist(const SkeinElement& x, std::int64_t f) {
  return normalize(x.vector().scaled(framing_twist_factor(f)));
}

InvarianceCheck verify_gluck_invariance(const SkeinElement& x, Parity parity) {
  const std::int64_t w = parity == Parity::Even ? 0 : 1;
  if (!parity_support(x, w)) {
    throw PreconditionError(std::string("verify_gluck_invariance: element is not supported on ") +
                            to_string(parity) + " indices");
  }
  const SkeinElement image = gluck_action(x);
  if (parity == Parity::Even) return {image == x, std::nullopt};

  std::int64_t f = 1;
  for (std::int64_t i = 0; 2 * i + 1 <= x.vector().max_index(); ++i) f = checked_lcm(f, 2 * i + 3);
  return {framing_twist(image, f) == x, f};
}

}  // namespace gluckkit
