#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "schur/coloring.hpp"
#include "schur/doc.hpp"
#include "schur/error.hpp"

namespace schur {

/// Floored quotient and remainder (toward minus infinity).
inline long long floor_div(long long x, long long d) {
  long long q = x / d;
  if ((x % d != 0) && ((x < 0) != (d < 0))) --q;
  return q;
}

inline long long floor_mod(long long x, long long d) { return x - d * floor_div(x, d); }

inline void check_row_layout(long long a, long long b) {
  if (b < 1 || a <= b) {
    throw DomainError("row layout needs a > b >= 1 (got a=" + std::to_string(a) + ", b=" + std::to_string(b) + ")");
  }
}

/// Column projection onto [b+1, a+b]: the unique representative of x mod a there.
inline long long pi(long long a, long long b, long long x) {
  check_row_layout(a, b);
  const long long r = floor_mod(x, a);
  return r <= b ? r + a : r;
}

/// Row index of x in the width-a, tail-b layout; x = a*lam + pi - a.
inline long long lam(long long a, long long b, long long x) {
  check_row_layout(a, b);
  return 1 + floor_div(x - b - 1, a);
}

/// Thrown by the make_* helpers when the candidate fails verification.
class VerificationError : public Error {
 public:
  explicit VerificationError(const Violation& v) : Error(describe(v)), violation_(v) {}
  const Violation& violation() const noexcept { return violation_; }

 private:
  Violation violation_;
};

class STemplate;
class WSTemplate;
std::variant<STemplate, Violation> verify_s_template(const Coloring& c, Color special);
std::variant<WSTemplate, Violation> verify_ws_template(const Coloring& c, int width, int tail, Color special);

/// A verified S-template: every subset sum-free, every non-special subset
/// closed under the mod-width wrap condition.
class STemplate {
 public:
  const Coloring& coloring() const noexcept { return coloring_; }
  int width() const noexcept { return coloring_.length(); }
  int num_colors() const noexcept { return coloring_.num_colors(); }
  Color special() const noexcept { return special_; }
  /// Smallest element of the special subset.
  int special_min() const { return min_elements(coloring_)[special_ - 1]; }

  friend bool operator==(const STemplate&, const STemplate&) = default;

 private:
  STemplate(Coloring c, Color special) : coloring_(std::move(c)), special_(special) {}
  friend std::variant<STemplate, Violation> verify_s_template(const Coloring& c, Color special);

  Coloring coloring_;
  Color special_;
};

/// A verified b-WS-template of width a over [1, a+b].
class WSTemplate {
 public:
  const Coloring& coloring() const noexcept { return coloring_; }
  int width() const noexcept { return width_; }
  int tail() const noexcept { return tail_; }
  int num_colors() const noexcept { return coloring_.num_colors(); }
  Color special() const noexcept { return special_; }

  friend bool operator==(const WSTemplate&, const WSTemplate&) = default;

 private:
  WSTemplate(Coloring c, int width, int tail, Color special)
      : coloring_(std::move(c)), width_(width), tail_(tail), special_(special) {}
  friend std::variant<WSTemplate, Violation> verify_ws_template(const Coloring& c, int width, int tail,
                                                                Color special);

  Coloring coloring_;
  int width_;
  int tail_;
  Color special_;
};

namespace detail {

inline void check_special(const Coloring& c, Color special) {
  if (special < 1 || special > c.num_colors()) {
    throw DomainError("special color " + std::to_string(special) + " outside 1.." + std::to_string(c.num_colors()));
  }
}

}  // namespace detail

/// Checks the S-template conditions. Clauses are checked in the order
/// sum-free, s-wrap; the witness is the lexicographically smallest (x, y)
/// with x <= y for the first failing clause.
inline std::variant<STemplate, Violation> verify_s_template(const Coloring& c, Color special) {
  detail::check_special(c, special);
  if (auto v = verify_sum_free(c)) return *v;
  const int p = c.length();
  const auto bits = detail::subsets_as_bits(c);
  for (int x = 1; x <= p; ++x) {
    const Color col = c(x);
    if (col == special) continue;
    const detail::Bits& s = bits[col];
    const int y = detail::first_match(s, s, static_cast<long>(x) - p, std::max(x, p + 1 - x), p);
    if (y >= 0) return Violation{x, y, x + y - p, col, Clause::s_wrap};
  }
  return STemplate(c, special);
}

/// Checks the four WS-template conditions in the order weakly-sum-free,
/// ws-row-sumfree, ws-special-wrap, ws-regular-wrap.
inline std::variant<WSTemplate, Violation> verify_ws_template(const Coloring& c, int width, int tail,
                                                              Color special) {
  check_row_layout(width, tail);
  const int a = width;
  const int b = tail;
  const int len = a + b;
  if (c.length() != len) {
    throw DomainError("ws-template over [1," + std::to_string(c.length()) + "] but width+tail = " +
                      std::to_string(len));
  }
  detail::check_special(c, special);
  if (auto v = verify_weakly_sum_free(c)) return *v;

  const auto bits = detail::subsets_as_bits(c);
  std::vector<detail::Bits> rows = bits;
  for (auto& r : rows) {
    for (int x = 1; x <= b && x < r.size(); ++x) r.reset(x);
  }
  for (int x = b + 1; 2 * x <= len; ++x) {
    const detail::Bits& r = rows[c(x)];
    const int y = detail::first_match(r, r, x, x, len - x);
    if (y >= 0) return Violation{x, y, x + y, c(x), Clause::ws_row_sum_free};
  }

  const detail::Bits& s = bits[special];
  for (int x = 1; x <= len; ++x) {
    if (c(x) != special) continue;
    const int y = detail::first_match(s, s, static_cast<long>(x) - 2L * a, std::max(x, b + 2 * a + 1 - x), len);
    if (y >= 0) return Violation{x, y, x + y - 2 * a, special, Clause::ws_special_wrap};
  }

  for (int x = 1; x <= len; ++x) {
    const Color col = c(x);
    if (col == special) continue;
    const detail::Bits& r = bits[col];
    // x + y in [a+b+1, 2a+b] projects to x + y - a, beyond that to x + y - 2a.
    int y = detail::first_match(r, r, static_cast<long>(x) - a, std::max(x, len + 1 - x), std::min(len, 2 * a + b - x));
    if (y >= 0) return Violation{x, y, x + y - a, col, Clause::ws_regular_wrap};
    y = detail::first_match(r, r, static_cast<long>(x) - 2L * a, std::max(x, 2 * a + b + 1 - x), len);
    if (y >= 0) return Violation{x, y, x + y - 2 * a, col, Clause::ws_regular_wrap};
  }
  return WSTemplate(c, width, tail, special);
}

inline STemplate make_s_template(const Coloring& c, Color special) {
  auto r = verify_s_template(c, special);
  if (auto* v = std::get_if<Violation>(&r)) throw VerificationError(*v);
  return std::get<STemplate>(std::move(r));
}

inline WSTemplate make_ws_template(const Coloring& c, int width, int tail, Color special) {
  auto r = verify_ws_template(c, width, tail, special);
  if (auto* v = std::get_if<Violation>(&r)) throw VerificationError(*v);
  return std::get<WSTemplate>(std::move(r));
}

inline PartitionDoc to_doc(const STemplate& t, std::vector<std::string> comments = {}) {
  return PartitionDoc{DocKind::s_template, t.coloring(), t.width(), std::nullopt, t.special(), std::nullopt,
                      std::move(comments)};
}

inline PartitionDoc to_doc(const WSTemplate& t, std::vector<std::string> comments = {}) {
  return PartitionDoc{DocKind::ws_template, t.coloring(), t.width(), t.tail(), t.special(), std::nullopt,
                      std::move(comments)};
}

inline STemplate s_template_from_doc(const PartitionDoc& d) {
  if (d.kind != DocKind::s_template) throw DomainError("expected kind s-template, got " + std::string(to_string(d.kind)));
  return make_s_template(d.coloring, d.special.value());
}

inline WSTemplate ws_template_from_doc(const PartitionDoc& d) {
  if (d.kind != DocKind::ws_template) throw DomainError("expected kind ws-template, got " + std::string(to_string(d.kind)));
  return make_ws_template(d.coloring, d.width.value(), d.tail.value(), d.special.value());
}

}  // namespace schur
