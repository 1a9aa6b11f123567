#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "schur/bits.hpp"
#include "schur/error.hpp"

namespace schur {

/// Colors are 1-based everywhere, matching the external formats.
using Color = int;

enum class EmptySubsets { forbid, allow };

/// A total assignment of colors 1..n to the integers 1..p.
///
/// The invariants are checked on construction, so every Coloring value is
/// well formed: entries lie in 1..num_colors, the length is positive and,
/// unless EmptySubsets::allow was requested, every color is used.
class Coloring {
 public:
  Coloring(std::vector<Color> colors, int num_colors, EmptySubsets empty = EmptySubsets::forbid)
      : colors_(std::move(colors)), num_colors_(num_colors), allow_empty_(empty == EmptySubsets::allow) {
    if (colors_.empty()) throw MalformedColoring("coloring must cover at least one integer");
    if (num_colors_ < 1) throw MalformedColoring("coloring needs at least one color");
    std::vector<bool> seen(num_colors_ + 1, false);
    for (std::size_t i = 0; i < colors_.size(); ++i) {
      const Color c = colors_[i];
      if (c < 1 || c > num_colors_) {
        throw MalformedColoring("integer " + std::to_string(i + 1) + " has color " + std::to_string(c) +
                                " outside 1.." + std::to_string(num_colors_));
      }
      seen[c] = true;
    }
    if (!allow_empty_) {
      for (Color c = 1; c <= num_colors_; ++c) {
        if (!seen[c]) throw MalformedColoring("color " + std::to_string(c) + " has an empty subset");
      }
    }
  }

  int length() const noexcept { return static_cast<int>(colors_.size()); }
  int num_colors() const noexcept { return num_colors_; }
  bool allows_empty() const noexcept { return allow_empty_; }

  /// Color of the integer x, for x in [1, length()].
  Color operator()(int x) const { return colors_[x - 1]; }

  std::span<const Color> colors() const noexcept { return colors_; }

  /// Elements of A_c in increasing order.
  std::vector<int> subset(Color c) const {
    std::vector<int> out;
    for (int x = 1; x <= length(); ++x) {
      if ((*this)(x) == c) out.push_back(x);
    }
    return out;
  }

  friend bool operator==(const Coloring& l, const Coloring& r) {
    return l.num_colors_ == r.num_colors_ && l.colors_ == r.colors_;
  }

 private:
  std::vector<Color> colors_;
  int num_colors_;
  bool allow_empty_;
};

/// Which condition a witness violates.
enum class Clause {
  sum_free,
  weakly_sum_free,
  s_wrap,
  ws_row_sum_free,
  ws_special_wrap,
  ws_regular_wrap,
};

inline std::string_view to_string(Clause c) {
  switch (c) {
    case Clause::sum_free: return "sum-free";
    case Clause::weakly_sum_free: return "weakly-sum-free";
    case Clause::s_wrap: return "s-wrap";
    case Clause::ws_row_sum_free: return "ws-row-sumfree";
    case Clause::ws_special_wrap: return "ws-special-wrap";
    case Clause::ws_regular_wrap: return "ws-regular-wrap";
  }
  return "?";
}

/// Certificate of non-compliance: x and y share `color` and so does
/// `sum_image` (x + y, or its wrapped image for the template clauses).
struct Violation {
  int x = 0;
  int y = 0;
  int sum_image = 0;
  Color color = 0;
  Clause clause = Clause::sum_free;

  friend bool operator==(const Violation&, const Violation&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Violation& v) {
  return os << to_string(v.clause) << " violation: x=" << v.x << " y=" << v.y << " image=" << v.sum_image
            << " color=" << v.color;
}

inline std::string describe(const Violation& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

namespace detail {

inline std::vector<Bits> subsets_as_bits(const Coloring& c) {
  std::vector<Bits> bits(c.num_colors() + 1, Bits(c.length() + 1));
  for (int x = 1; x <= c.length(); ++x) bits[c(x)].set(x);
  return bits;
}

inline std::optional<Violation> verify_sums(const Coloring& c, bool weak) {
  const auto bits = subsets_as_bits(c);
  const int p = c.length();
  for (int x = 1; 2 * x + (weak ? 1 : 0) <= p; ++x) {
    const Bits& a = bits[c(x)];
    const int y = first_match(a, a, x, weak ? x + 1 : x, p - x);
    if (y >= 0) return Violation{x, y, x + y, c(x), weak ? Clause::weakly_sum_free : Clause::sum_free};
  }
  return std::nullopt;
}

}  // namespace detail

/// Checks that every subset is sum-free (x = y pairs included). Returns the
/// lexicographically smallest witness (x <= y) on failure.
inline std::optional<Violation> verify_sum_free(const Coloring& c) { return detail::verify_sums(c, false); }

/// Checks that every subset is weakly sum-free (only x < y pairs count).
inline std::optional<Violation> verify_weakly_sum_free(const Coloring& c) { return detail::verify_sums(c, true); }

/// m_i = min(A_i) for every color.
inline std::vector<int> min_elements(const Coloring& c) {
  std::vector<int> mins(c.num_colors(), 0);
  for (int x = c.length(); x >= 1; --x) mins[c(x) - 1] = x;
  for (int i = 0; i < c.num_colors(); ++i) {
    if (mins[i] == 0) throw MalformedColoring("color " + std::to_string(i + 1) + " has an empty subset");
  }
  return mins;
}

/// The permutation `perm` (perm[old - 1] = new) that orders subsets by
/// their minimum element.
inline std::vector<Color> ordering_permutation(const Coloring& c) {
  const auto mins = min_elements(c);
  std::vector<Color> by_min(c.num_colors());
  std::iota(by_min.begin(), by_min.end(), 1);
  std::sort(by_min.begin(), by_min.end(), [&](Color l, Color r) { return mins[l - 1] < mins[r - 1]; });
  std::vector<Color> perm(c.num_colors());
  for (int rank = 0; rank < c.num_colors(); ++rank) perm[by_min[rank] - 1] = rank + 1;
  return perm;
}

inline Coloring recolor(const Coloring& c, std::span<const Color> perm) {
  std::vector<Color> out(c.colors().begin(), c.colors().end());
  for (Color& col : out) col = perm[col - 1];
  return Coloring(std::move(out), c.num_colors(), c.allows_empty() ? EmptySubsets::allow : EmptySubsets::forbid);
}

/// Relabels colors so that m_1 < m_2 < ... < m_n.
inline Coloring order_subsets(const Coloring& c) { return recolor(c, ordering_permutation(c)); }

/// x and p + 1 - x share a color for every x (the middle element is exempt).
inline bool is_symmetric(const Coloring& c) {
  const int p = c.length();
  for (int x = 1; 2 * x <= p; ++x) {
    if (c(x) != c(p + 1 - x)) return false;
  }
  return true;
}

}  // namespace schur
