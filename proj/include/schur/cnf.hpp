#pragma once

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "schur/coloring.hpp"
#include "schur/doc.hpp"
#include "schur/error.hpp"
#include "schur/search.hpp"
#include "schur/templates.hpp"

namespace schur {

struct CnfOptions {
  bool at_most_one = true;   // pairwise at-most-one-color clauses
  bool allow_empty = false;  // omit the every-color-used clauses
};

/// var(i, c) = (i - 1) * n + c for the coloring variables. Symmetric
/// s-templates add selector variables M_m = L*n + m ("the special subset
/// starts at m") for m in 1..L.
struct CnfInstance {
  SearchSpec spec;
  CnfOptions options;
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;

  int domain() const { return spec.domain(); }
  int var(int i, Color c) const { return (i - 1) * spec.num_colors + c; }
  int selector(int m) const { return domain() * spec.num_colors + m; }
};

/// A model that does not satisfy its instance or does not decode.
class DecodeError : public Error {
 public:
  explicit DecodeError(const std::string& what, long clause = -1) : Error(what), clause_(clause) {}
  /// 0-based index of the first unsatisfied clause, or -1.
  long clause() const noexcept { return clause_; }

 private:
  long clause_;
};

namespace detail {

inline void add_clause(CnfInstance& inst, std::vector<int> lits) {
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  for (std::size_t i = 0; i + 1 < lits.size(); ++i) {
    for (std::size_t j = i + 1; j < lits.size(); ++j) {
      if (lits[i] == -lits[j]) return;  // tautology
    }
  }
  inst.clauses.push_back(std::move(lits));
}

inline void add_equal(CnfInstance& inst, int u, int v) {
  if (u == v) return;
  add_clause(inst, {-u, v});
  add_clause(inst, {u, -v});
}

}  // namespace detail

inline CnfInstance encode_cnf(const SearchSpec& spec, const CnfOptions& opts = {}) {
  spec.validate();
  if (spec.length < 1) throw DomainError("encoding needs a fixed length");
  const Color special = spec.special_color();
  if (spec.is_template() && special == 0) throw DomainError("encoding a template needs a fixed or last special color");

  CnfInstance inst;
  inst.spec = spec;
  inst.options = opts;
  const int L = spec.domain();
  const int n = spec.num_colors;
  const bool sym_template = spec.kind == TargetKind::s_template && spec.symmetric;
  inst.num_vars = L * n + (sym_template ? L : 0);
  auto v = [&](int i, Color c) { return inst.var(i, c); };

  for (int i = 1; i <= L; ++i) {
    std::vector<int> alo;
    for (Color c = 1; c <= n; ++c) alo.push_back(v(i, c));
    detail::add_clause(inst, alo);
    if (opts.at_most_one) {
      for (Color c = 1; c <= n; ++c) {
        for (Color d = c + 1; d <= n; ++d) detail::add_clause(inst, {-v(i, c), -v(i, d)});
      }
    }
  }
  if (!opts.allow_empty) {
    for (Color c = 1; c <= n; ++c) {
      std::vector<int> some;
      for (int i = 1; i <= L; ++i) some.push_back(v(i, c));
      detail::add_clause(inst, some);
    }
  }

  const bool weak = spec.kind == TargetKind::weak_partition || spec.kind == TargetKind::ws_template;
  for (Color c = 1; c <= n; ++c) {
    for (int x = 1; x <= L; ++x) {
      for (int y = weak ? x + 1 : x; x + y <= L; ++y) detail::add_clause(inst, {-v(x, c), -v(y, c), -v(x + y, c)});
    }
  }

  if (spec.kind == TargetKind::s_template) {
    const int p = L;
    for (Color c = 1; c <= n; ++c) {
      if (c == special) continue;
      for (int x = 1; x <= p; ++x) {
        for (int y = std::max(x, p + 1 - x); y <= p; ++y) {
          detail::add_clause(inst, {-v(x, c), -v(y, c), -v(x + y - p, c)});
        }
      }
    }
  }

  if (spec.kind == TargetKind::ws_template) {
    const int a = spec.length;
    const int b = spec.tail;
    for (Color c = 1; c <= n; ++c) {
      for (int x = b + 1; 2 * x <= L; ++x) detail::add_clause(inst, {-v(x, c), -v(2 * x, c)});
      for (int x = 1; x <= L; ++x) {
        for (int y = x; y <= L; ++y) {
          const int s = x + y;
          if (c == special) {
            if (s > b + 2 * a) detail::add_clause(inst, {-v(x, c), -v(y, c), -v(s - 2 * a, c)});
          } else if (s > a + b) {
            detail::add_clause(inst, {-v(x, c), -v(y, c), -v(static_cast<int>(pi(a, b, s)), c)});
          }
        }
      }
    }
  }

  if (spec.symmetric && !spec.is_template()) {
    for (int x = 1; 2 * x <= L; ++x) {
      for (Color c = 1; c <= n; ++c) detail::add_equal(inst, v(x, c), v(L + 1 - x, c));
    }
  }

  if (sym_template) {
    const int p = L;
    // M_m <-> m is special and no smaller integer is.
    std::vector<int> some;
    for (int m = 1; m <= p; ++m) {
      const int M = inst.selector(m);
      some.push_back(M);
      detail::add_clause(inst, {-M, v(m, special)});
      std::vector<int> define{-v(m, special), M};
      for (int y = 1; y < m; ++y) {
        detail::add_clause(inst, {-M, -v(y, special)});
        define.push_back(v(y, special));
      }
      detail::add_clause(inst, define);
      // Under M_m the coloring extended to [1, p+m-1] by f(y - p) is symmetric.
      const int ext = p + m - 1;
      auto src = [&](int y) { return y <= p ? y : y - p; };
      for (int y = 1; 2 * y <= ext; ++y) {
        const int z = ext + 1 - y;
        if (y == z || src(y) == src(z)) continue;
        for (Color c = 1; c <= n; ++c) {
          detail::add_clause(inst, {-M, -v(src(y), c), v(src(z), c)});
          detail::add_clause(inst, {-M, v(src(y), c), -v(src(z), c)});
        }
      }
    }
    detail::add_clause(inst, some);
  }

  if (!spec.min_element.empty()) {
    for (Color c = 1; c <= n; ++c) {
      for (int x = 1; x < spec.min_element[c - 1] && x <= L; ++x) detail::add_clause(inst, {-v(x, c)});
    }
  }
  for (std::size_t i = 0; i < spec.fixed_prefix.size(); ++i) {
    detail::add_clause(inst, {v(static_cast<int>(i) + 1, spec.fixed_prefix[i])});
  }
  return inst;
}

inline std::string spec_echo(const CnfInstance& inst) {
  const auto& s = inst.spec;
  std::ostringstream os;
  os << "kind=" << to_string(s.kind) << " length=" << s.length << " tail=" << s.tail << " colors=" << s.num_colors
     << " special=" << s.special_color() << " symmetric=" << (s.symmetric ? 1 : 0)
     << " amo=" << (inst.options.at_most_one ? 1 : 0) << " allow_empty=" << (inst.options.allow_empty ? 1 : 0);
  if (!s.min_element.empty()) {
    os << " min=";
    for (std::size_t i = 0; i < s.min_element.size(); ++i) os << (i ? "," : "") << s.min_element[i];
  }
  if (!s.fixed_prefix.empty()) {
    os << " prefix=";
    for (Color c : s.fixed_prefix) os << c << (s.num_colors > 9 ? "," : "");
  }
  return os.str();
}

inline std::string write_dimacs(const CnfInstance& inst) {
  std::ostringstream os;
  const int n = inst.spec.num_colors;
  os << "c schur cnf v1\n";
  os << "c spec " << spec_echo(inst) << "\n";
  os << "c var(i,c) = (i-1)*" << n << " + c for i in 1.." << inst.domain() << ", c in 1.." << n << "\n";
  if (inst.num_vars > inst.domain() * n) {
    os << "c var " << inst.domain() * n << " + m: the special subset starts at m\n";
  }
  os << "p cnf " << inst.num_vars << " " << inst.clauses.size() << "\n";
  for (const auto& cl : inst.clauses) {
    for (int lit : cl) os << lit << ' ';
    os << "0\n";
  }
  return os.str();
}

namespace detail {

inline SearchSpec parse_spec_echo(std::string_view line) {
  SearchSpec s;
  bool have_kind = false;
  for (auto tok : split_tokens(line, " \t")) {
    auto eq = tok.find('=');
    if (eq == std::string_view::npos) throw ParseError("malformed spec echo field '" + std::string(tok) + "'");
    auto key = tok.substr(0, eq);
    auto val = tok.substr(eq + 1);
    if (key == "kind") {
      have_kind = true;
      if (val == "sumfree") s.kind = TargetKind::sumfree_partition;
      else if (val == "weak") s.kind = TargetKind::weak_partition;
      else if (val == "s-template") s.kind = TargetKind::s_template;
      else if (val == "ws-template") s.kind = TargetKind::ws_template;
      else throw ParseError("unknown kind in spec echo");
      continue;
    }
    if (key == "prefix") {
      if (val.find(',') != std::string_view::npos) {
        for (auto m : split_tokens(val, ",")) {
          auto iv = parse_int(m);
          if (!iv) throw ParseError("malformed prefix in spec echo");
          s.fixed_prefix.push_back(static_cast<Color>(*iv));
        }
      } else {
        for (char ch : val) {
          if (ch < '1' || ch > '9') throw ParseError("malformed prefix in spec echo");
          s.fixed_prefix.push_back(ch - '0');
        }
      }
      continue;
    }
    if (key == "min") {
      for (auto m : split_tokens(val, ",")) {
        auto iv = parse_int(m);
        if (!iv) throw ParseError("malformed min bound in spec echo");
        s.min_element.push_back(static_cast<int>(*iv));
      }
      continue;
    }
    auto iv = parse_int(val);
    if (!iv) throw ParseError("spec echo field '" + std::string(key) + "' is not an integer");
    const int x = static_cast<int>(*iv);
    if (key == "length") s.length = x;
    else if (key == "tail") s.tail = x;
    else if (key == "colors") s.num_colors = x;
    else if (key == "special") {
      s.special = x;
      s.special_policy = x > 0 ? SpecialPolicy::fixed : SpecialPolicy::any;
    } else if (key == "symmetric") s.symmetric = x != 0;
    else if (key != "amo" && key != "allow_empty") throw ParseError("unknown spec echo field '" + std::string(key) + "'");
  }
  if (!have_kind) throw ParseError("spec echo lacks a kind");
  return s;
}

}  // namespace detail

/// Parses DIMACS text written by write_dimacs (the `c spec` line is needed
/// to decode models against it).
inline CnfInstance parse_dimacs(std::string_view text) {
  CnfInstance inst;
  bool have_spec = false;
  bool have_header = false;
  long declared = 0;
  std::vector<int> current;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view l = detail::trim(line);
    if (l.empty()) continue;
    if (l.front() == 'c') {
      if (l.rfind("c spec ", 0) == 0) {
        const std::string_view body = l.substr(7);
        inst.spec = detail::parse_spec_echo(body);
        for (auto tok : detail::split_tokens(body, " \t")) {
          if (tok == "amo=0") inst.options.at_most_one = false;
          if (tok == "allow_empty=1") inst.options.allow_empty = true;
        }
        have_spec = true;
      }
      continue;
    }
    if (l.front() == 'p') {
      auto toks = detail::split_tokens(l, " \t");
      if (toks.size() != 4 || toks[1] != "cnf") throw ParseError("malformed problem line", line_no);
      auto v = detail::parse_int(toks[2]);
      auto c = detail::parse_int(toks[3]);
      if (!v || !c || *v < 0 || *c < 0) throw ParseError("malformed problem line", line_no);
      inst.num_vars = static_cast<int>(*v);
      declared = *c;
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError("clause before the problem line", line_no);
    for (auto tok : detail::split_tokens(l, " \t")) {
      auto lit = detail::parse_int(tok);
      if (!lit) throw ParseError("'" + std::string(tok) + "' is not a literal", line_no);
      if (*lit == 0) {
        inst.clauses.push_back(current);
        current.clear();
        continue;
      }
      if (std::labs(*lit) > inst.num_vars) throw ParseError("literal out of range", line_no);
      current.push_back(static_cast<int>(*lit));
    }
  }
  if (!have_header) throw ParseError("missing problem line");
  if (!current.empty()) throw ParseError("unterminated final clause");
  if (static_cast<long>(inst.clauses.size()) != declared) throw ParseError("clause count differs from the problem line");
  if (!have_spec) throw ParseError("missing 'c spec' line; cannot decode without the spec");
  inst.spec.validate();
  if (inst.num_vars < inst.spec.domain() * inst.spec.num_colors) throw ParseError("too few variables for the spec");
  return inst;
}

/// Parses solver output: `v` lines of signed literals (an `s` status line
/// is honored), or bare literal lines optionally preceded by SAT/UNSAT.
/// Unmentioned variables are false. Index 0 is unused.
inline std::vector<bool> parse_model(std::string_view text, int num_vars) {
  std::vector<bool> a(num_vars + 1, false);
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool any = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view l = detail::trim(line);
    if (l.empty() || l.front() == 'c') continue;
    if (l.front() == 's' || l == "SAT" || l == "UNSAT" || l == "SATISFIABLE" || l == "UNSATISFIABLE") {
      if (l.find("UNSAT") != std::string_view::npos) throw ParseError("model file reports an unsatisfiable instance", line_no);
      continue;
    }
    if (l.front() == 'v') l = l.substr(1);
    for (auto tok : detail::split_tokens(l, " \t")) {
      auto lit = detail::parse_int(tok);
      if (!lit) throw ParseError("'" + std::string(tok) + "' is not a literal", line_no);
      if (*lit == 0) continue;
      if (std::labs(*lit) > num_vars) throw ParseError("literal " + std::to_string(*lit) + " out of range", line_no);
      a[std::labs(*lit)] = *lit > 0;
      any = true;
    }
  }
  if (!any) throw ParseError("model file contains no literals");
  return a;
}

/// Checks the assignment against every clause, reads each integer's lowest
/// true color and re-verifies the result against the spec.
inline Found decode_model(const CnfInstance& inst, const std::vector<bool>& a) {
  if (static_cast<int>(a.size()) < inst.num_vars + 1) throw DecodeError("assignment shorter than the variable count");
  for (std::size_t k = 0; k < inst.clauses.size(); ++k) {
    const auto& cl = inst.clauses[k];
    const bool sat = std::any_of(cl.begin(), cl.end(), [&](int lit) { return a[std::abs(lit)] == (lit > 0); });
    if (!sat) throw DecodeError("clause " + std::to_string(k + 1) + " is not satisfied", static_cast<long>(k));
  }
  const auto& s = inst.spec;
  const int L = s.domain();
  std::vector<Color> colors(L, 0);
  for (int i = 1; i <= L; ++i) {
    for (Color c = 1; c <= s.num_colors; ++c) {
      if (a[inst.var(i, c)]) {
        colors[i - 1] = c;
        break;
      }
    }
    if (colors[i - 1] == 0) throw DecodeError("integer " + std::to_string(i) + " has no color");
  }
  if (!inst.options.allow_empty) {
    for (Color c = 1; c <= s.num_colors; ++c) {
      if (std::find(colors.begin(), colors.end(), c) == colors.end()) {
        throw DecodeError("color " + std::to_string(c) + " is empty after taking the lowest true color");
      }
    }
  }
  Coloring c(std::move(colors), s.num_colors, inst.options.allow_empty ? EmptySubsets::allow : EmptySubsets::forbid);
  const Color special = s.special_color();
  std::optional<Violation> bad;
  switch (s.kind) {
    case TargetKind::sumfree_partition: bad = verify_sum_free(c); break;
    case TargetKind::weak_partition: bad = verify_weakly_sum_free(c); break;
    case TargetKind::s_template: {
      auto r = verify_s_template(c, special);
      if (auto* v = std::get_if<Violation>(&r)) bad = *v;
      break;
    }
    case TargetKind::ws_template: {
      auto r = verify_ws_template(c, s.length, s.tail, special);
      if (auto* v = std::get_if<Violation>(&r)) bad = *v;
      break;
    }
  }
  if (bad) throw DecodeError("decoded coloring fails verification: " + describe(*bad));
  if (s.symmetric && !s.is_template() && !is_symmetric(c)) throw DecodeError("decoded coloring is not symmetric");
  return Found{std::move(c), special};
}

/// The assignment that encodes a known coloring (selector variables set to
/// match the special minimum for symmetric s-templates).
inline std::vector<bool> encode_assignment(const CnfInstance& inst, const Coloring& c) {
  if (c.length() != inst.domain() || c.num_colors() != inst.spec.num_colors) {
    throw DomainError("coloring does not match the instance");
  }
  std::vector<bool> a(inst.num_vars + 1, false);
  for (int i = 1; i <= c.length(); ++i) a[inst.var(i, c(i))] = true;
  if (inst.num_vars > inst.domain() * inst.spec.num_colors) {
    const Color special = inst.spec.special_color();
    for (int i = 1; i <= c.length(); ++i) {
      if (c(i) == special) {
        a[inst.selector(i)] = true;
        break;
      }
    }
  }
  return a;
}

}  // namespace schur
