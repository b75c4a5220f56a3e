#include "gluckkit/laurent.hpp"

#include <cctype>
#include <sstream>

#include "gluckkit/errors.hpp"

namespace gluckkit {

LaurentPolynomial::LaurentPolynomial(long constant) {
  add_term(0, Integer(constant));
}

LaurentPolynomial::LaurentPolynomial(const Integer& constant) {
  add_term(0, constant);
}

LaurentPolynomial LaurentPolynomial::monomial(const Integer& coefficient, Exponent exponent) {
  LaurentPolynomial p;
  p.add_term(exponent, coefficient);
  return p;
}

LaurentPolynomial LaurentPolynomial::from_terms(
    const std::vector<std::pair<Exponent, Integer>>& terms) {
  LaurentPolynomial p;
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

LaurentPolynomial LaurentPolynomial::A() { return monomial(1, 1); }

LaurentPolynomial LaurentPolynomial::delta() {
  return from_terms({{2, Integer(-1)}, {-2, Integer(-1)}});
}

Integer LaurentPolynomial::coefficient(Exponent exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

Exponent LaurentPolynomial::min_exponent() const { return terms_.begin()->first; }
Exponent LaurentPolynomial::max_exponent() const { return terms_.rbegin()->first; }

void LaurentPolynomial::add_term(Exponent exponent, const Integer& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial LaurentPolynomial::shifted(Exponent k) const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
  return out;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned exponent) const {
  LaurentPolynomial result(1);
  LaurentPolynomial base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& lhs, const LaurentPolynomial& rhs) {
  LaurentPolynomial out;
  for (const auto& [e1, c1] : lhs.terms_) {
    for (const auto& [e2, c2] : rhs.terms_) out.add_term(e1 + e2, c1 * c2);
  }
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other) {
  *this = *this * other;
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Exponent e = it->first;
    Integer c = it->second;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (c < 0) c = -c;
    if (e == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str();
    os << 'A';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

LaurentPolynomial add(const LaurentPolynomial& p, const LaurentPolynomial& q) { return p + q; }
LaurentPolynomial mul(const LaurentPolynomial& p, const LaurentPolynomial& q) { return p * q; }

LaurentPolynomial reduce_cyclic(const LaurentPolynomial& p, Exponent d) {
  if (d < 1) throw PreconditionError("reduce_cyclic: modulus d must be >= 1");
  LaurentPolynomial out;
  for (const auto& [e, c] : p.terms()) {
    Exponent r = e % d;
    if (r < 0) r += d;
    out += LaurentPolynomial::monomial(c, r);
  }
  return out;
}

namespace {

[[noreturn]] void bad_polynomial(std::string_view text) {
  throw PreconditionError("malformed Laurent polynomial: '" + std::string(text) + "'");
}

}  // namespace

LaurentPolynomial parse_laurent(std::string_view text) {
  std::string s;
  bool gap = false;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) {
      gap = !s.empty();
      continue;
    }
    // "2 3" is two adjacent numbers, not 23.
    const bool glued = gap && std::isalnum(static_cast<unsigned char>(ch)) &&
                       std::isalnum(static_cast<unsigned char>(s.back()));
    if (glued) bad_polynomial(text);
    gap = false;
    s.push_back(ch);
  }
  if (s.empty()) bad_polynomial(text);
  if (s == "0") return {};

  LaurentPolynomial out;
  std::size_t pos = 0;
  auto read_digits = [&](std::string& digits) {
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) digits.push_back(s[pos++]);
  };
  bool first = true;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (!first) {
      bad_polynomial(text);
    }
    first = false;
    std::string digits;
    read_digits(digits);
    Integer coefficient = digits.empty() ? Integer(1) : Integer(digits);
    Exponent exponent = 0;
    if (pos < s.size() && s[pos] == 'A') {
      ++pos;
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        bool neg_exp = false;
        if (pos < s.size() && s[pos] == '-') {
          neg_exp = true;
          ++pos;
        }
        std::string exp_digits;
        read_digits(exp_digits);
        if (exp_digits.empty()) bad_polynomial(text);
        exponent = std::stoll(exp_digits);
        if (neg_exp) exponent = -exponent;
      }
    } else if (digits.empty()) {
      bad_polynomial(text);
    }
    if (coefficient == 0) bad_polynomial(text);
    out += LaurentPolynomial::monomial(negative ? Integer(-coefficient) : coefficient, exponent);
  }
  return out;
}

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw PreconditionError("rational denominator must be nonzero");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.value_ == 0) throw PreconditionError("division by zero rational");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.value_ = -r.value_;
  return r;
}

std::string Rational::to_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

}  // namespace gluckkit
