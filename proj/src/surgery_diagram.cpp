#include "gluckkit/surgery_diagram.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "gluckkit/errors.hpp"

namespace gluckkit {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw PreconditionError("framing arithmetic overflows 64 bits");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw PreconditionError("framing arithmetic overflows 64 bits");
  return out;
}

Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Row/column operations applied simultaneously to the working matrix and
// the accumulated transform.
struct SmithState {
  IntMatrix s;
  IntMatrix u;
  IntMatrix v;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < s.cols(); ++j) std::swap(s(a, j), s(b, j));
    for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u(a, j), u(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < s.rows(); ++i) std::swap(s(i, a), s(i, b));
    for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v(i, a), v(i, b));
  }
  // row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& factor) {
    for (std::size_t j = 0; j < s.cols(); ++j) s(dst, j) += factor * s(src, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u(dst, j) += factor * u(src, j);
  }
  // col[dst] += factor * col[src]
  void add_col(std::size_t dst, std::size_t src, const Integer& factor) {
    for (std::size_t i = 0; i < s.rows(); ++i) s(i, dst) += factor * s(i, src);
    for (std::size_t i = 0; i < v.rows(); ++i) v(i, dst) += factor * v(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < s.cols(); ++j) s(r, j) = -s(r, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u(r, j) = -u(r, j);
  }
};

}  // namespace

HomologyAction::HomologyAction(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
    : entries_{a, b, c, d} {
  const std::int64_t det = determinant();
  if (det != 1 && det != -1) throw PreconditionError("homology action must be unimodular");
}

HomologyAction HomologyAction::after(const HomologyAction& first) const {
  auto entry = [&](int r, int c) {
    return checked_add(checked_mul(at(r, 0), first.at(0, c)), checked_mul(at(r, 1), first.at(1, c)));
  };
  return {entry(0, 0), entry(0, 1), entry(1, 0), entry(1, 1)};
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw PreconditionError("matrix rows must have equal length");
    for (long x : row) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw PreconditionError("matrix dimensions do not agree");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant requires a square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && a(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_with, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

DiagramMove gluck_twist(const DiagramClass& d) {
  const std::int64_t framing = checked_add(d.f, checked_mul(d.w, d.w));
  return {{d.w, framing}, HomologyAction::shear(d.w)};
}

DiagramMove handleslide(const DiagramClass& d, int sign) {
  if (sign != 1 && sign != -1) throw PreconditionError("handleslide sign must be +1 or -1");
  const std::int64_t framing = checked_add(d.f, checked_mul(2 * sign, d.w));
  return {{d.w, framing}, HomologyAction::shear(sign)};
}

FramingSolution solve_framing_equation(std::int64_t w) {
  if (w == 0) return {FramingSolution::Kind::AllIntegers, 0};
  if (w % 2 != 0) return {FramingSolution::Kind::None, 0};
  return {FramingSolution::Kind::Unique, -w / 2};
}

const char* to_string(IsotopyVerdict verdict) {
  return verdict == IsotopyVerdict::NotIsotopic ? "NotIsotopic" : "Indeterminate";
}

IsotopyVerdict odd_winding_verdict(std::int64_t w) {
  if (w % 2 == 0) throw PreconditionError("odd_winding_verdict: w must be odd");
  return (w == 1 || w == -1) ? IsotopyVerdict::Indeterminate : IsotopyVerdict::NotIsotopic;
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  SmithState st{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t steps = std::min(rows, cols);

  for (std::size_t t = 0; t < steps; ++t) {
    bool block_is_zero = false;
    while (true) {
      std::size_t pr = rows;
      std::size_t pc = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (st.s(i, j) == 0) continue;
          if (pr == rows || abs_value(st.s(i, j)) < abs_value(st.s(pr, pc))) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == rows) {
        block_is_zero = true;
        break;
      }
      st.swap_rows(t, pr);
      st.swap_cols(t, pc);

      bool cleared = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (st.s(i, t) == 0) continue;
        st.add_row(i, t, -floor_div(st.s(i, t), st.s(t, t)));
        if (st.s(i, t) != 0) cleared = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (st.s(t, j) == 0) continue;
        st.add_col(j, t, -floor_div(st.s(t, j), st.s(t, t)));
        if (st.s(t, j) != 0) cleared = false;
      }
      if (!cleared) continue;

      // The pivot must divide the rest of the block.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(st.s(i, j).get_mpz_t(), st.s(t, t).get_mpz_t())) {
            st.add_row(t, i, 1);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (block_is_zero) break;
    if (st.s(t, t) < 0) st.negate_row(t);
  }
  return {std::move(st.u), std::move(st.s), std::move(st.v)};
}

IntMatrix relation_matrix(const DiagramClass& d) {
  IntMatrix m(2, 2);
  m(0, 0) = Integer(static_cast<long>(d.w));
  m(0, 1) = 0;
  m(1, 0) = Integer(static_cast<long>(d.f));
  m(1, 1) = Integer(static_cast<long>(d.w));
  return m;
}

FirstHomology surgery_homology(const DiagramClass& d) {
  const SmithDecomposition snf = smith_normal_form(relation_matrix(d));
  FirstHomology h;
  const std::size_t generators = snf.diagonal.cols();
  std::size_t nonzero = 0;
  for (std::size_t t = 0; t < std::min(snf.diagonal.rows(), generators); ++t) {
    const Integer& entry = snf.diagonal(t, t);
    if (entry == 0) continue;
    ++nonzero;
    if (entry > 1) h.invariant_factors.push_back(entry);
  }
  h.free_rank = static_cast<std::int64_t>(generators - nonzero);
  return h;
}

std::optional<GeneratorAction> homology_action_on_generator(const DiagramClass& d, std::int64_t k) {
  if (std::gcd(d.w, d.f) != 1) return std::nullopt;
  const Integer w(static_cast<long>(d.w));
  const Integer f(static_cast<long>(d.f));
  const Integer shift = w + Integer(static_cast<long>(k));

  if (d.w == 0) {
    // f = +-1 kills [m]; H_1 = Z generated by [h].
    return GeneratorAction{0, 1};
  }
  const Integer modulus = w * w;
  Integer f_inverse;
  Integer f_reduced;
  mpz_mod(f_reduced.get_mpz_t(), f.get_mpz_t(), modulus.get_mpz_t());
  if (modulus == 1) {
    f_inverse = 0;
  } else if (mpz_invert(f_inverse.get_mpz_t(), f_reduced.get_mpz_t(), modulus.get_mpz_t()) == 0) {
    return std::nullopt;
  }
  // f [m] + w [h] = 0  =>  [m] = -f^{-1} w [h].
  const Integer m_in_h = -f_inverse * w;
  Integer c = 1 + shift * m_in_h;
  Integer reduced;
  mpz_mod(reduced.get_mpz_t(), c.get_mpz_t(), modulus.get_mpz_t());
  return GeneratorAction{modulus, reduced};
}

}  // namespace gluckkit
