#include "temperley_lieb.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace gluckkit::detail {

TLDiagram TLDiagram::identity(int strands) {
  std::vector<int> partner(2 * strands);
  for (int j = 0; j < strands; ++j) {
    partner[j] = strands + j;
    partner[strands + j] = j;
  }
  return TLDiagram(std::move(partner));
}

TLDiagram TLDiagram::cup_cap(int strands, int i) {
  TLDiagram d = identity(strands);
  d.partner_[i] = i + 1;
  d.partner_[i + 1] = i;
  d.partner_[strands + i] = strands + i + 1;
  d.partner_[strands + i + 1] = strands + i;
  return d;
}

int TLDiagram::through_strands() const {
  const int n = strands();
  int count = 0;
  for (int j = 0; j < n; ++j) {
    if (partner_[j] >= n) ++count;
  }
  return count;
}

std::pair<TLDiagram, int> TLDiagram::then(const TLDiagram& upper) const {
  const int n = strands();
  const std::vector<int>& lower = partner_;
  const std::vector<int>& up = upper.partner_;
  std::vector<int> result(2 * n, -1);
  std::vector<bool> middle_seen(n, false);

  // Walks from an outer endpoint until another outer endpoint is reached.
  // Result indices: bottom j -> j (lower's bottom), top j -> n + j (upper's top).
  for (int start = 0; start < 2 * n; ++start) {
    if (result[start] != -1) continue;
    bool in_lower = start < n;
    int cur = in_lower ? lower[start] : up[start];
    int end = -1;
    while (end == -1) {
      if (in_lower) {
        if (cur < n) {
          end = cur;
        } else {
          const int m = cur - n;
          middle_seen[m] = true;
          cur = up[m];
          in_lower = false;
        }
      } else {
        if (cur >= n) {
          end = cur;
        } else {
          const int m = cur;
          middle_seen[m] = true;
          cur = lower[n + m];
          in_lower = true;
        }
      }
    }
    result[start] = end;
    result[end] = start;
  }

  int loops = 0;
  for (int m = 0; m < n; ++m) {
    if (middle_seen[m]) continue;
    ++loops;
    int cur = m;
    do {
      middle_seen[cur] = true;
      // Leave through the lower diagram's top row, return through the upper's bottom row.
      const int via_lower = lower[n + cur] - n;
      middle_seen[via_lower] = true;
      cur = up[via_lower];
    } while (cur != m);
  }
  return {TLDiagram(std::move(result)), loops};
}

TLDiagram::Closure TLDiagram::close() const {
  const int n = strands();
  std::vector<bool> seen(2 * n, false);
  Closure out{0, 0};
  for (int start = 0; start < 2 * n; ++start) {
    if (seen[start]) continue;
    int winding = 0;
    int cur = start;
    do {
      seen[cur] = true;
      const int other = partner_[cur];
      seen[other] = true;
      // Closure arc: top j continues to bottom j going once around the
      // annulus; bottom to top goes back.
      if (other >= n) {
        cur = other - n;
        ++winding;
      } else {
        cur = other + n;
        --winding;
      }
    } while (cur != start);
    if (std::abs(winding) > 1) {
      throw std::logic_error("closure produced a loop with winding number " + std::to_string(winding));
    }
    if (winding == 0) {
      ++out.inessential;
    } else {
      ++out.essential;
    }
  }
  return out;
}

}  // namespace gluckkit::detail
