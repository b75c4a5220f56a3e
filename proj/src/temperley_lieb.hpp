#pragma once

// Crossingless matchings of n bottom and n top points (Temperley-Lieb
// diagrams). Points 0..n-1 are the bottom row left to right, n..2n-1 the
// top row.

#include <compare>
#include <utility>
#include <vector>

namespace gluckkit::detail {

class TLDiagram {
 public:
  static TLDiagram identity(int strands);
  // Cap joining bottom points i, i+1 and cup joining top points i, i+1.
  static TLDiagram cup_cap(int strands, int i);

  int strands() const { return static_cast<int>(partner_.size() / 2); }
  int partner(int point) const { return partner_[point]; }
  int through_strands() const;

  // Stack `upper` on top of this diagram. Returns the composite and the
  // number of closed loops formed in the middle row.
  std::pair<TLDiagram, int> then(const TLDiagram& upper) const;

  struct Closure {
    int essential;
    int inessential;
  };
  // Close in the annulus by joining top point j to bottom point j.
  Closure close() const;

  friend auto operator<=>(const TLDiagram&, const TLDiagram&) = default;

 private:
  explicit TLDiagram(std::vector<int> partner) : partner_(std::move(partner)) {}
  std::vector<int> partner_;
};

}  // namespace gluckkit::detail
