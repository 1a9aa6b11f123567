#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schur/error.hpp"

namespace schur {

enum class RuleKind { s_from_s, ws_from_s };
enum class SeriesKind { s, ws };

/// X(n+k) >= a*S(n) + b, with X = S or WS according to `kind`.
struct BoundRule {
  RuleKind kind;
  int k;
  std::int64_t a;
  std::int64_t b;
  std::string provenance;

  std::string id() const { return std::to_string(a) + "x+" + std::to_string(b); }
};

struct BaseValue {
  int n;
  std::int64_t value;
  bool exact;
  std::string citation;
};

inline const std::vector<BoundRule>& default_rules() {
  static const std::vector<BoundRule> rules = {
      {RuleKind::s_from_s, 1, 3, 1, "S(n+1) >= 3S(n) + 1 (classical)"},
      {RuleKind::s_from_s, 2, 9, 4, "S-template of width 9, 3 colors"},
      {RuleKind::s_from_s, 3, 33, 6, "S-template of width 33, 4 colors (table5)"},
      {RuleKind::s_from_s, 4, 111, 43, "S-template of width 111, 5 colors (table6, repaired)"},
      {RuleKind::s_from_s, 5, 380, 148, "S-template of width 380, 6 colors (table7)"},
      {RuleKind::s_from_s, 6, 1160, 536, "S-template of width 1160, 7 colors (not printed)"},
      {RuleKind::ws_from_s, 1, 4, 2, "lift of the weak partition {1,2}"},
      {RuleKind::ws_from_s, 2, 13, 8, "lift of a weakly sum-free 2-coloring of [1,8]"},
      {RuleKind::ws_from_s, 3, 42, 24, "23-WS-template of width 42 plus one tail number (table8)"},
      {RuleKind::ws_from_s, 4, 132, 26, "table5 composed with the lift of {1,2}"},
  };
  return rules;
}

inline const std::vector<BaseValue>& default_s_bases() {
  static const std::vector<BaseValue> bases = {
      {1, 1, true, "exact"},
      {2, 4, true, "exact"},
      {3, 13, true, "exact"},
      {4, 44, true, "exact"},
      {5, 160, true, "exact"},
      {6, 536, false, "best known lower bound"},
      {7, 1696, false, "best known lower bound"},
      {8, 5286, false, "best known lower bound"},
  };
  return bases;
}

inline const std::vector<BaseValue>& default_ws_bases() {
  static const std::vector<BaseValue> bases = {
      {1, 2, true, "exact"},
      {2, 8, true, "exact"},
      {3, 23, true, "exact"},
      {4, 66, true, "exact"},
      {5, 196, false, "best known lower bound"},
      {6, 646, false, "lower bound, weakly sum-free partition of [1,646] (table9)"},
  };
  return bases;
}

struct LedgerEntry {
  std::int64_t value = 0;
  bool exact = false;
  std::optional<std::size_t> rule;  // index into the rule list; nullopt for a base entry
  int pred = 0;                     // n of the S predecessor for rule entries
  std::string citation;             // for base entries
};

struct BoundsLedger {
  std::vector<BoundRule> rules;
  std::map<int, LedgerEntry> s;
  std::map<int, LedgerEntry> ws;

  const std::map<int, LedgerEntry>& series(SeriesKind k) const { return k == SeriesKind::s ? s : ws; }
};

namespace detail {

inline std::int64_t checked_affine(std::int64_t a, std::int64_t x, std::int64_t b) {
  std::int64_t prod = 0;
  std::int64_t sum = 0;
  if (__builtin_mul_overflow(a, x, &prod) || __builtin_add_overflow(prod, b, &sum)) {
    throw DomainError("bound value overflows 64 bits");
  }
  return sum;
}

// Candidate ranks: exact base > larger value > rule over non-exact base > lower k > lower rule index.
struct Candidate {
  LedgerEntry entry;
  int k = 0;
  std::size_t index = 0;
};

inline bool better(const Candidate& c, const Candidate& best) {
  if (c.entry.value != best.entry.value) return c.entry.value > best.entry.value;
  const bool c_base = !c.entry.rule;
  const bool b_base = !best.entry.rule;
  if (c_base && c.entry.exact) return !(b_base && best.entry.exact);
  if (b_base && best.entry.exact) return false;
  if (c_base != b_base) return !c_base;
  if (c.k != best.k) return c.k < best.k;
  return c.index < best.index;
}

inline void fill_series(std::map<int, LedgerEntry>& out, int max_n, const std::vector<BoundRule>& rules, RuleKind kind,
                        const std::vector<BaseValue>& bases, const std::map<int, LedgerEntry>& s_ledger) {
  for (int n = 1; n <= max_n; ++n) {
    std::optional<Candidate> best;
    for (const auto& base : bases) {
      if (base.n != n) continue;
      Candidate c{LedgerEntry{base.value, base.exact, std::nullopt, 0, base.citation}, 0, 0};
      if (!best || better(c, *best)) best = c;
    }
    for (std::size_t i = 0; i < rules.size(); ++i) {
      const auto& r = rules[i];
      if (r.kind != kind || n - r.k < 1) continue;
      auto it = s_ledger.find(n - r.k);
      if (it == s_ledger.end()) continue;
      Candidate c{LedgerEntry{checked_affine(r.a, it->second.value, r.b), false, i, n - r.k, ""}, r.k, i};
      if (!best || better(c, *best)) best = c;
    }
    if (!best) {
      throw DomainError(std::string(kind == RuleKind::s_from_s ? "S" : "WS") + "(" + std::to_string(n) +
                        ") is covered by neither a base value nor a rule");
    }
    out[n] = best->entry;
  }
}

}  // namespace detail

/// Best lower bounds for S(1..max_n) and WS(1..max_n). Each value is the max
/// over base values and rules; ties go to an exact base, then to a rule over
/// a non-exact base, then to the lowest k, then to the lowest rule index.
inline BoundsLedger best_bounds(int max_n, const std::vector<BoundRule>& rules = default_rules(),
                                const std::vector<BaseValue>& s_bases = default_s_bases(),
                                const std::vector<BaseValue>& ws_bases = default_ws_bases()) {
  for (const auto& r : rules) {
    if (r.a < 1 || r.k < 1 || r.b < 0) throw DomainError("malformed rule " + r.id());
  }
  BoundsLedger ledger;
  ledger.rules = rules;
  detail::fill_series(ledger.s, max_n, rules, RuleKind::s_from_s, s_bases, ledger.s);
  detail::fill_series(ledger.ws, max_n, rules, RuleKind::ws_from_s, ws_bases, ledger.s);
  return ledger;
}

/// Recomputes every rule-derived entry from its predecessor; returns the
/// first n (with series) whose stored value disagrees, if any.
inline std::optional<std::pair<SeriesKind, int>> audit(const BoundsLedger& l) {
  for (SeriesKind k : {SeriesKind::s, SeriesKind::ws}) {
    for (const auto& [n, e] : l.series(k)) {
      if (!e.rule) continue;
      const auto& r = l.rules.at(*e.rule);
      if (e.pred != n - r.k || detail::checked_affine(r.a, l.s.at(e.pred).value, r.b) != e.value) {
        return std::make_pair(k, n);
      }
    }
  }
  return std::nullopt;
}

/// One line per entry, WS series first: `S 10 60948 rule:380x+148 pred:5` or `S 5 160 base pred:-`.
inline std::string ledger_lines(const BoundsLedger& l) {
  std::string out;
  for (SeriesKind k : {SeriesKind::ws, SeriesKind::s}) {
    for (const auto& [n, e] : l.series(k)) {
      out += (k == SeriesKind::s ? "S " : "WS ") + std::to_string(n) + " " + std::to_string(e.value) + " ";
      out += e.rule ? "rule:" + l.rules[*e.rule].id() + " pred:" + std::to_string(e.pred) : std::string("base pred:-");
      out += "\n";
    }
  }
  return out;
}

struct TableCell {
  int table;  // 3 or 4
  int n;
  BoundRule rule;
  std::int64_t computed;
  std::int64_t printed;
  bool highlighted_computed;  // this rule attains the column maximum
  bool highlighted_printed;   // the printed table marks this cell as the column maximum
};

struct TablesReport {
  std::vector<TableCell> cells;
  std::size_t mismatches() const {
    std::size_t m = 0;
    for (const auto& c : cells) m += (c.computed != c.printed) + (c.highlighted_computed != c.highlighted_printed);
    return m;
  }
};

/// Recomputes the lower-bound tables for n in 8..15 from the S ledger and
/// compares every cell and the per-column maximum with the printed values.
inline TablesReport reproduce_tables() {
  struct Printed {
    int table;
    std::int64_t a;
    std::int64_t b;
    int k;
    RuleKind kind;
    std::int64_t values[8];
  };
  static const Printed printed[] = {
      {3, 33, 6, 3, RuleKind::s_from_s, {5286, 17694, 55974, 174444, 587505, 2011290, 6726330, 21272730}},
      {3, 111, 43, 4, RuleKind::s_from_s, {4927, 17803, 59539, 188299, 586789, 1976176, 6765271, 22624951}},
      {3, 380, 148, 5, RuleKind::s_from_s, {5088, 16868, 60948, 203828, 644628, 2008828, 6765288, 23160388}},
      {4, 4, 2, 1, RuleKind::ws_from_s, {6786, 21146, 71214, 243794, 815314, 2578514, 8045162, 27061154}},
      {4, 13, 8, 2, RuleKind::ws_from_s, {6976, 22056, 68726, 231447, 792332, 2649772, 8380172, 26146778}},
      {4, 42, 24, 3, RuleKind::ws_from_s, {6744, 22536, 71256, 222036, 747750, 2559840, 8560800, 27074400}},
  };
  // Highlighted multiplier per column n = 8..15.
  static const std::int64_t highlight3[8] = {33, 111, 380, 380, 380, 33, 380, 380};
  static const std::int64_t highlight4[8] = {13, 42, 42, 4, 4, 13, 42, 42};

  const BoundsLedger ledger = best_bounds(15);
  TablesReport rep;
  for (const auto& row : printed) {
    for (int n = 8; n <= 15; ++n) {
      const std::int64_t v = detail::checked_affine(row.a, ledger.s.at(n - row.k).value, row.b);
      const std::int64_t hl = (row.table == 3 ? highlight3 : highlight4)[n - 8];
      rep.cells.push_back(TableCell{row.table, n,
                                    BoundRule{row.kind, row.k, row.a, row.b, ""},
                                    v, row.values[n - 8], false, hl == row.a});
    }
  }
  for (auto& c : rep.cells) {
    std::int64_t best = 0;
    for (const auto& o : rep.cells) {
      if (o.table == c.table && o.n == c.n) best = std::max(best, o.computed);
    }
    c.highlighted_computed = c.computed == best;
  }
  return rep;
}

/// a^(1/k) for an S-from-S rule: a lower bound on the growth rate of S(n)^(1/n).
inline double growth_rate(const BoundRule& r) {
  if (r.kind != RuleKind::s_from_s) throw DomainError("growth rate is defined for S-from-S rules");
  return static_cast<double>(std::pow(static_cast<long double>(r.a), 1.0L / r.k));
}

struct SandwichResult {
  bool ok = true;
  std::int64_t lower = 0;
  std::optional<std::int64_t> upper;  // absent when the series value at n is not exact
  std::string message;
};

/// Checks a template width against 2S(n-1)+1 <= w <= S(n) (S-templates with
/// n colors) or ceil(3 WS(n-1) / 2) + 1 <= w <= WS(n) (WS-templates).
/// The upper side is checked only when the value at n is exact.
inline SandwichResult sandwich_check(SeriesKind kind, int n, std::int64_t width,
                                     const BoundsLedger& ledger = best_bounds(8)) {
  if (n < 2) throw DomainError("sandwich check needs n >= 2");
  const auto& series = ledger.series(kind);
  const auto& prev = series.at(n - 1);
  if (!prev.exact) throw DomainError("sandwich check needs an exact value at n-1");
  SandwichResult r;
  r.lower = kind == SeriesKind::s ? 2 * prev.value + 1 : (3 * prev.value + 1) / 2 + 1;
  const auto& cur = series.at(n);
  if (cur.exact) r.upper = cur.value;
  r.ok = width >= r.lower && (!r.upper || width <= *r.upper);
  r.message = std::to_string(r.lower) + " <= " + std::to_string(width) +
              (r.upper ? " <= " + std::to_string(*r.upper) : std::string(" (upper side not exact, skipped)")) +
              (r.ok ? " ok" : " violated");
  return r;
}

}  // namespace schur
