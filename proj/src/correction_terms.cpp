#include "gluckkit/correction_terms.hpp"

#include <algorithm>
#include <string>

#include "gluckkit/errors.hpp"

namespace gluckkit {

namespace {

void require_positive_surgery(std::int64_t n) {
  if (n <= 0) {
    throw UnsupportedSurgeryError("surgery coefficient n must be a positive integer (got " +
                                  std::to_string(n) + ")");
  }
}

void require_label(std::int64_t n, std::int64_t i) {
  require_positive_surgery(n);
  if (i < 0 || i >= n) {
    throw PreconditionError("Spin^c label i must satisfy 0 <= i < n (got i=" + std::to_string(i) +
                            ", n=" + std::to_string(n) + ")");
  }
}

std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

// (a * b) mod n without overflow for |a|, |b| < 2^62.
std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t n) {
  return static_cast<std::int64_t>((static_cast<__int128>(mod(a, n)) * mod(b, n)) % n);
}

SpinBranch check_branch(const std::vector<Rational>& table, std::int64_t base,
                        std::int64_t multiplier) {
  const auto n = static_cast<std::int64_t>(table.size());
  SpinBranch branch{base, {}};
  for (std::int64_t i = 0; i < n; ++i) {
    const std::int64_t image = mod(base + mulmod(multiplier, i, n), n);
    if (!(table[i] == table[image])) {
      branch.violations.push_back({i, image, table[i], table[image]});
    }
  }
  return branch;
}

}  // namespace

SpinCLabel::SpinCLabel(std::int64_t n, std::int64_t i) : n_(n), i_(0) {
  require_positive_surgery(n);
  i_ = mod(i, n);
}

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Obstructed: return "Obstructed";
    case Verdict::NotObstructed: return "NotObstructed";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

Rational d_lens(std::int64_t n, std::int64_t i) {
  require_label(n, i);
  const Integer diff = Integer(n) - 2 * Integer(i);
  return Rational(diff * diff, 4 * Integer(n)) - Rational(1, 4);
}

Rational d_surgery(const SurgeryDescriptor& s, std::int64_t i) {
  require_label(s.n, i);
  const auto vi = s.v.at(static_cast<std::size_t>(i));
  const auto vni = s.v.at(static_cast<std::size_t>(s.n - i));
  return d_lens(s.n, i) - Rational(2 * std::max(vi, vni));
}

std::vector<Rational> d_table(const SurgeryDescriptor& s) {
  require_positive_surgery(s.n);
  std::vector<Rational> table;
  table.reserve(static_cast<std::size_t>(s.n));
  for (std::int64_t i = 0; i < s.n; ++i) table.push_back(d_surgery(s, i));
  return table;
}

std::pair<SpinCLabel, SpinCLabel> spin_structures(std::int64_t n) {
  require_positive_surgery(n);
  if (n % 2 != 0) throw PreconditionError("spin_structures: n must be even");
  return {SpinCLabel(n, 0), SpinCLabel(n, n / 2)};
}

SpinCLabel spinc_translate(const SpinCLabel& t, std::int64_t k) {
  return SpinCLabel(t.n(), mod(t.i() + mod(k, t.n()), t.n()));
}

ObstructionReport obstruct_gluck(const SurgeryDescriptor& s, std::int64_t multiplier,
                                 std::int64_t w) {
  require_positive_surgery(s.n);
  ObstructionReport report;
  report.w = w;
  report.n = s.n;
  report.label = s.label;
  report.multiplier = multiplier;
  report.d_table = d_table(s);

  const std::int64_t half = s.n / 2;
  report.spin_distinguished = s.n % 2 == 0 && !(report.d_table[0] == report.d_table[half]);

  report.branches.push_back(check_branch(report.d_table, 0, multiplier));
  if (report.spin_distinguished || s.n % 2 != 0) {
    // Odd n has a single spin structure, so t_0 is fixed outright.
    report.verdict = report.branches[0].violations.empty() ? Verdict::NotObstructed
                                                           : Verdict::Obstructed;
    return report;
  }

  report.branches.push_back(check_branch(report.d_table, half, multiplier));
  const bool every_branch_fails = std::all_of(
      report.branches.begin(), report.branches.end(),
      [](const SpinBranch& b) { return !b.violations.empty(); });
  report.verdict = every_branch_fails ? Verdict::Obstructed : Verdict::Inconclusive;
  return report;
}

ObstructionReport obstruct_even_gluck(std::int64_t w) {
  if (w < 2 || w % 2 != 0) throw PreconditionError("gluck obstruction: w must be even and >= 2");
  if (w > 1000) throw PreconditionError("gluck obstruction: w must be at most 1000");
  const std::int64_t n = w * w;
  const TorusKnotParams torus(w, w + 1);
  SurgeryDescriptor s{v_sequence(torus, n), n,
                      "T_{" + std::to_string(w) + "," + std::to_string(w + 1) + "}"};
  return obstruct_gluck(s, n / 2 + 1, w);
}

}  // namespace gluckkit
