#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "schur/coloring.hpp"
#include "schur/doc.hpp"
#include "schur/error.hpp"
#include "schur/templates.hpp"

namespace schur {

/// Provenance of a construction output. Outputs are always re-verified;
/// a failing re-verification throws instead of producing a report.
struct ExpansionReport {
  std::string operation;
  std::vector<std::string> inputs;
  long long claimed_length = 0;
  long long multiplier = 0;  // the a of "X(n+k) >= a*S(n) + b" instantiated here
  long long constant = 0;    // the b
  std::vector<std::string> notes;
  bool verified = false;

  std::vector<std::string> provenance() const {
    std::vector<std::string> out;
    out.push_back("operation: " + operation);
    for (const auto& in : inputs) out.push_back("input: " + in);
    out.push_back("length: " + std::to_string(claimed_length) + " = " + std::to_string(multiplier) + "*p + " +
                  std::to_string(constant));
    for (const auto& n : notes) out.push_back("note: " + n);
    out.push_back(std::string("verified: ") + (verified ? "ok" : "no"));
    return out;
  }
};

template <class T>
struct Certified {
  T value;
  ExpansionReport report;
};

/// A tail coloring that fails one of the last-row predicates.
class TailPredicateError : public Error {
 public:
  TailPredicateError(int predicate, int x, int y, int image, Color color)
      : Error("tail predicate " + std::to_string(predicate) + " fails: x=" + std::to_string(x) +
              " y=" + std::to_string(y) + " image=" + std::to_string(image) + " color=" + std::to_string(color)),
        predicate_(predicate), x_(x), y_(y), image_(image), color_(color) {}

  int predicate() const noexcept { return predicate_; }
  int x() const noexcept { return x_; }
  int y() const noexcept { return y_; }
  int image() const noexcept { return image_; }
  Color color() const noexcept { return color_; }

 private:
  int predicate_, x_, y_, image_;
  Color color_;
};

inline std::string describe_input(const STemplate& t) {
  return "s-template width=" + std::to_string(t.width()) + " n=" + std::to_string(t.num_colors()) +
         " special=" + std::to_string(t.special()) + " special_min=" + std::to_string(t.special_min());
}

inline std::string describe_input(const WSTemplate& t) {
  return "ws-template width=" + std::to_string(t.width()) + " tail=" + std::to_string(t.tail()) +
         " n=" + std::to_string(t.num_colors()) + " special=" + std::to_string(t.special());
}

inline std::string describe_input(const Coloring& g, std::string_view kind) {
  return std::string(kind) + " p=" + std::to_string(g.length()) + " n=" + std::to_string(g.num_colors());
}

inline PartitionDoc to_doc(const Certified<Coloring>& c, DocKind kind) {
  return PartitionDoc{kind, c.value, std::nullopt, std::nullopt, std::nullopt, std::nullopt, c.report.provenance()};
}

inline PartitionDoc to_doc(const Certified<STemplate>& c) { return to_doc(c.value, c.report.provenance()); }
inline PartitionDoc to_doc(const Certified<WSTemplate>& c) { return to_doc(c.value, c.report.provenance()); }

namespace detail {

/// Maps the non-special colors of a template onto 1..n-1 preserving order;
/// the special color maps to 0.
inline std::vector<Color> squeeze_special(int num_colors, Color special) {
  std::vector<Color> map(num_colors + 1, 0);
  Color next = 1;
  for (Color c = 1; c <= num_colors; ++c) {
    if (c != special) map[c] = next++;
  }
  return map;
}

inline Coloring require_sum_free_ordered(const Coloring& g) {
  if (auto v = verify_sum_free(g)) throw VerificationError(*v);
  return order_subsets(g);
}

inline std::string relabel_note(const std::vector<Color>& map, Color special, Color special_image, const char* who) {
  std::string s = std::string(who) + " colors";
  for (std::size_t c = 1; c < map.size(); ++c) {
    if (static_cast<Color>(c) == special) continue;
    s += " " + std::to_string(c) + "->" + std::to_string(map[c]);
  }
  s += ", special " + std::to_string(special) + "->" + std::to_string(special_image);
  return s;
}

inline void check_tail_colors(std::span<const Color> tail, int num_colors, Color special) {
  for (std::size_t i = 0; i < tail.size(); ++i) {
    if (tail[i] < 1 || tail[i] > num_colors) {
      throw DomainError("tail entry " + std::to_string(i + 1) + " has color " + std::to_string(tail[i]) +
                        " outside 1.." + std::to_string(num_colors));
    }
    if (tail[i] == special) throw DomainError("tail entry " + std::to_string(i + 1) + " uses the special color");
  }
}

}  // namespace detail

/// Checks the last-row predicates for a Schur tail of length tail.size()
/// against template t. Returns the failure, if any.
inline std::optional<TailPredicateError> check_schur_tail(const STemplate& t, std::span<const Color> tail) {
  const int q = t.width();
  const int bp = static_cast<int>(tail.size());
  if (bp >= q) throw DomainError("tail length must be smaller than the template width");
  detail::check_tail_colors(tail, t.num_colors(), t.special());
  const Coloring& f = t.coloring();
  for (int u = 1; u <= q; ++u) {
    for (int v = u; v <= q; ++v) {
      if (f(u) != f(v)) continue;
      const int r = (u + v) % q;
      if (r >= 1 && r <= bp && tail[r - 1] == f(u)) return TailPredicateError(1, u, v, r, f(u));
    }
  }
  for (int u = 1; u <= q; ++u) {
    for (int v = 1; u + v <= bp; ++v) {
      if (f(u) == tail[v - 1] && tail[u + v - 1] == f(u)) return TailPredicateError(2, u, v, u + v, f(u));
    }
  }
  return std::nullopt;
}

/// Checks the last-row predicates for a weak tail coloring positions
/// [b+1, b+tail.size()] of template t.
inline std::optional<TailPredicateError> check_weak_tail(const WSTemplate& t, std::span<const Color> tail) {
  const int a = t.width();
  const int b = t.tail();
  const int c = static_cast<int>(tail.size());
  if (c > a) throw DomainError("weak tail longer than the template width");
  detail::check_tail_colors(tail, t.num_colors(), t.special());
  const Coloring& f = t.coloring();
  auto g = [&](int z) { return tail[z - b - 1]; };
  for (int x = 1; x <= a + b; ++x) {
    for (int y = b + 1; y <= a + b; ++y) {
      if (f(x) != f(y)) continue;
      const int z = static_cast<int>(pi(a, b, x + y));
      if (z <= b + c && g(z) == f(x)) return TailPredicateError(1, x, y, z, f(x));
    }
  }
  for (int x = 1; x <= a + b; ++x) {
    for (int y = b + 1; y <= b + c; ++y) {
      if (f(x) != g(y)) continue;
      const int z = static_cast<int>(pi(a, b, x + y));
      if (z <= b + c && g(z) == f(x)) return TailPredicateError(2, x, y, z, f(x));
    }
  }
  return std::nullopt;
}

/// Row expansion of an S-template t (n+1 colors, width q) by a sum-free
/// k-coloring g of [1,p]. The last partial row is given by `tail`
/// (template colors, non-special); nullopt means the template's own prefix
/// up to the special minimum.
inline Certified<Coloring> expand_schur_impl(const STemplate& t, const Coloring& g_in,
                                             std::optional<std::span<const Color>> tail) {
  const Coloring g = detail::require_sum_free_ordered(g_in);
  const Coloring& f = t.coloring();
  const int q = t.width();
  const int n = t.num_colors() - 1;
  const int p = g.length();
  const int m = t.special_min();
  std::vector<Color> last_row;
  if (tail) {
    if (auto err = check_schur_tail(t, *tail)) throw *err;
    last_row.assign(tail->begin(), tail->end());
  } else {
    for (int u = 1; u < m; ++u) last_row.push_back(f(u));
  }
  const auto map = detail::squeeze_special(t.num_colors(), t.special());
  const long long len = static_cast<long long>(p) * q + static_cast<long long>(last_row.size());
  std::vector<Color> h(len);
  for (long long x = 1; x <= static_cast<long long>(p) * q; ++x) {
    const int alpha = static_cast<int>((x - 1) / q) + 1;
    const int u = static_cast<int>((x - 1) % q) + 1;
    h[x - 1] = f(u) == t.special() ? n + g(alpha) : map[f(u)];
  }
  for (std::size_t j = 0; j < last_row.size(); ++j) h[static_cast<long long>(p) * q + j] = map[last_row[j]];

  ExpansionReport r;
  r.operation = tail ? "schur expansion with last-row tail" : "schur expansion";
  r.inputs = {describe_input(t), describe_input(g, "sumfree")};
  r.claimed_length = len;
  r.multiplier = q;
  r.constant = static_cast<long long>(last_row.size());
  r.notes.push_back(detail::relabel_note(map, t.special(), n + 1, "template") + "..." + std::to_string(n + g.num_colors()) +
                    " by row");
  Coloring out(std::move(h), n + g.num_colors(), EmptySubsets::allow);
  if (auto v = verify_sum_free(out)) throw VerificationError(*v);
  r.verified = true;
  return {std::move(out), std::move(r)};
}

inline Certified<Coloring> expand_schur(const STemplate& t, const Coloring& g) {
  return expand_schur_impl(t, g, std::nullopt);
}

inline Certified<Coloring> expand_schur_with_tail(const STemplate& t, const Coloring& g, std::span<const Color> tail) {
  return expand_schur_impl(t, g, tail);
}

/// Composition of S-templates: t1 (n+1 colors, width q) laid out row by row
/// with t2 (k colors, width p) coloring the special rows. The result has
/// n+k colors, width p*q, and its special color is n+k (the image of t2's).
inline Certified<STemplate> compose_s_templates(const STemplate& t1, const STemplate& t2) {
  const Coloring& f = t1.coloring();
  const Coloring& g = t2.coloring();
  const int q = t1.width();
  const int p = t2.width();
  const int n = t1.num_colors() - 1;
  const int k = t2.num_colors();
  const auto map1 = detail::squeeze_special(t1.num_colors(), t1.special());
  auto map2 = detail::squeeze_special(k, t2.special());
  map2[t2.special()] = k;
  std::vector<Color> h(static_cast<std::size_t>(p) * q);
  for (int x = 1; x <= p * q; ++x) {
    const int alpha = (x - 1) / q + 1;
    const int u = (x - 1) % q + 1;
    h[x - 1] = f(u) == t1.special() ? n + map2[g(alpha)] : map1[f(u)];
  }
  ExpansionReport r;
  r.operation = "s-template composition";
  r.inputs = {describe_input(t1), describe_input(t2)};
  r.claimed_length = static_cast<long long>(p) * q;
  r.multiplier = static_cast<long long>(p) * q;
  r.constant = 0;
  r.notes.push_back(detail::relabel_note(map1, t1.special(), 0, "outer") + " (rows)");
  {
    std::vector<Color> shifted(map2);
    for (std::size_t c = 1; c < shifted.size(); ++c) shifted[c] += n;
    r.notes.push_back(detail::relabel_note(shifted, t2.special(), n + k, "inner"));
  }
  Coloring out(std::move(h), n + k);
  auto res = verify_s_template(out, n + k);
  if (auto* v = std::get_if<Violation>(&res)) throw VerificationError(*v);
  r.verified = true;
  return {std::get<STemplate>(std::move(res)), std::move(r)};
}

/// Lifts a weakly sum-free n-coloring f of [1,q] to an (n+1)-color
/// WS-template of width q + ceil(q/2) + 1 and tail q.
inline Certified<WSTemplate> lift_weak_to_ws_template(const Coloring& f) {
  if (auto v = verify_weakly_sum_free(f)) throw VerificationError(*v);
  const int q = f.length();
  const int a = q + (q + 1) / 2 + 1;
  const int b = q;
  const int special = f.num_colors() + 1;
  std::vector<Color> g(a + b);
  for (int x = 1; x <= a + b; ++x) {
    if (x <= b) g[x - 1] = f(x);
    else if (x <= 2 * b + 1) g[x - 1] = special;
    else g[x - 1] = f(x - a);
  }
  ExpansionReport r;
  r.operation = "lift of weakly sum-free coloring";
  r.inputs = {describe_input(f, "weakly-sumfree")};
  r.claimed_length = a + b;
  r.multiplier = a;
  r.constant = b;
  Coloring out(std::move(g), special);
  auto res = verify_ws_template(out, a, b, special);
  if (auto* v = std::get_if<Violation>(&res)) throw VerificationError(*v);
  r.verified = true;
  return {std::get<WSTemplate>(std::move(res)), std::move(r)};
}

namespace detail {

/// The weak row layout: h = f on [1,b] (special tail elements take inner
/// color g(1)), f(pi(x)) on non-special columns, n + g(lam(x)) on special ones.
inline std::vector<Color> weak_layout(const WSTemplate& t, const Coloring& g, const std::vector<Color>& map) {
  const Coloring& f = t.coloring();
  const int a = t.width();
  const int b = t.tail();
  const int n = t.num_colors() - 1;
  const long long len = static_cast<long long>(g.length()) * a + b;
  std::vector<Color> h(len);
  for (long long x = 1; x <= len; ++x) {
    if (x <= b) {
      h[x - 1] = f(static_cast<int>(x)) == t.special() ? n + g(1) : map[f(static_cast<int>(x))];
      continue;
    }
    const int u = static_cast<int>(pi(a, b, x));
    h[x - 1] = f(u) == t.special() ? n + g(static_cast<int>(lam(a, b, x))) : map[f(u)];
  }
  return h;
}

}  // namespace detail

inline Certified<Coloring> expand_weak_impl(const WSTemplate& t, const Coloring& g_in,
                                            std::span<const Color> tail) {
  const Coloring g = detail::require_sum_free_ordered(g_in);
  if (!tail.empty()) {
    if (auto err = check_weak_tail(t, tail)) throw *err;
  }
  const int n = t.num_colors() - 1;
  const auto map = detail::squeeze_special(t.num_colors(), t.special());
  std::vector<Color> h = detail::weak_layout(t, g, map);
  for (Color c : tail) h.push_back(map[c]);

  ExpansionReport r;
  r.operation = tail.empty() ? "weak expansion" : "weak expansion with last-row tail";
  r.inputs = {describe_input(t), describe_input(g, "sumfree")};
  r.claimed_length = static_cast<long long>(h.size());
  r.multiplier = t.width();
  r.constant = t.tail() + static_cast<long long>(tail.size());
  r.notes.push_back(detail::relabel_note(map, t.special(), n + 1, "template") + "..." +
                    std::to_string(n + g.num_colors()) + " by row");
  Coloring out(std::move(h), n + g.num_colors(), EmptySubsets::allow);
  if (auto v = verify_weakly_sum_free(out)) throw VerificationError(*v);
  r.verified = true;
  return {std::move(out), std::move(r)};
}

/// Weak expansion of a WS-template (n+1 colors, width a, tail b) by a
/// sum-free k-coloring of [1,p]: a weakly sum-free (n+k)-coloring of [1, p*a+b].
inline Certified<Coloring> expand_weak(const WSTemplate& t, const Coloring& g) { return expand_weak_impl(t, g, {}); }

/// As expand_weak, extended by a last partial row: position p*a + b + j gets
/// tail[j-1], given in template colors for template positions b+1..b+c.
inline Certified<Coloring> expand_weak_with_tail(const WSTemplate& t, const Coloring& g, std::span<const Color> tail) {
  return expand_weak_impl(t, g, tail);
}

/// Composition of an S-template s (k+1 colors, width p) with a WS-template
/// w (n colors, width a, tail b): w's weak layout with s coloring the rows.
/// The result has n+k colors, width p*a, tail b; its special color is n+k.
inline Certified<WSTemplate> compose_s_ws_templates(const STemplate& s, const WSTemplate& w) {
  const int p = s.width();
  const int a = w.width();
  const int b = w.tail();
  const int n = w.num_colors();
  const int k = s.num_colors() - 1;
  auto smap = detail::squeeze_special(s.num_colors(), s.special());
  smap[s.special()] = k + 1;
  std::vector<Color> rows(p);
  for (int x = 1; x <= p; ++x) rows[x - 1] = smap[s.coloring()(x)];
  const Coloring g(std::move(rows), k + 1);
  const auto wmap = detail::squeeze_special(n, w.special());
  std::vector<Color> h = detail::weak_layout(w, g, wmap);
  // weak_layout covers [1, p*a + b], which is the composite's domain.
  ExpansionReport r;
  r.operation = "s-template / ws-template composition";
  r.inputs = {describe_input(s), describe_input(w)};
  r.claimed_length = static_cast<long long>(p) * a + b;
  r.multiplier = static_cast<long long>(p) * a;
  r.constant = b;
  r.notes.push_back(detail::relabel_note(wmap, w.special(), 0, "ws-template") + " (rows)");
  {
    std::vector<Color> shifted(smap);
    for (std::size_t c = 1; c < shifted.size(); ++c) shifted[c] += n - 1;
    r.notes.push_back(detail::relabel_note(shifted, s.special(), n + k, "s-template"));
  }
  r.notes.push_back("composite tail is b (not p*b); the p*b reading fails verification");
  Coloring out(std::move(h), n + k);
  auto res = verify_ws_template(out, p * a, b, n + k);
  if (auto* v = std::get_if<Violation>(&res)) throw VerificationError(*v);
  r.verified = true;
  return {std::get<WSTemplate>(std::move(res)), std::move(r)};
}

/// Largest additive constant available from t for weak expansion: the max
/// over tails b' for which t restricted to [1, a+b'] is still a valid
/// b'-WS-template of width a, of min(A_special \ [1,b']) - 1.
inline int best_additive_constant(const WSTemplate& t) {
  const Coloring& f = t.coloring();
  const int a = t.width();
  int best = -1;
  for (int bp = 1; bp <= t.tail(); ++bp) {
    std::vector<Color> prefix(f.colors().begin(), f.colors().begin() + a + bp);
    Coloring c(std::move(prefix), f.num_colors(), EmptySubsets::allow);
    bool special_present = false;
    for (int x = bp + 1; x <= a + bp; ++x) special_present |= c(x) == t.special();
    if (!special_present) continue;
    if (!std::holds_alternative<WSTemplate>(verify_ws_template(c, a, bp, t.special()))) continue;
    int m = 0;
    for (int x = bp + 1; x <= a + bp; ++x) {
      if (c(x) == t.special()) {
        m = x;
        break;
      }
    }
    best = std::max(best, m - 1);
  }
  return best;
}

/// As above, also accounting for a last-row tail of c numbers: b + c when the
/// tail passes the predicates.
inline int best_additive_constant(const WSTemplate& t, std::span<const Color> tail) {
  const int base = best_additive_constant(t);
  if (tail.empty() || check_weak_tail(t, tail)) return base;
  return std::max(base, t.tail() + static_cast<int>(tail.size()));
}

}  // namespace schur
