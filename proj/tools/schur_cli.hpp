#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "schur/schur.hpp"

namespace schur::cli {

enum Exit : int { ok = 0, violation = 1, usage = 2 };

/// Usage or input problems that map to exit status 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

inline PartitionDoc load_doc(const std::string& path) { return parse_doc(read_file(path)); }

/// FNV-1a, 64 bit.
inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

inline void print_parse_error(const ParseError& e, std::ostream& err) {
  err << "parse error: " << e.what() << "\n";
  for (const auto& d : e.defects()) err << "  " << describe(d) << "\n";
}

/// Result of checking one document against the verifier for its kind.
struct VerifyOutcome {
  bool ok = false;
  std::string message;
};

inline VerifyOutcome verify_doc(const PartitionDoc& d) {
  VerifyOutcome r;
  const Coloring& c = d.coloring;
  std::ostringstream os;
  os << to_string(d.kind) << " p=" << c.length() << " n=" << c.num_colors();
  switch (d.kind) {
    case DocKind::sumfree:
    case DocKind::weakly_sumfree: {
      auto v = d.kind == DocKind::sumfree ? verify_sum_free(c) : verify_weakly_sum_free(c);
      if (v) {
        r.message = describe(*v);
        return r;
      }
      break;
    }
    case DocKind::s_template: {
      auto res = verify_s_template(c, d.special.value());
      if (auto* v = std::get_if<Violation>(&res)) {
        r.message = describe(*v);
        return r;
      }
      const auto& t = std::get<STemplate>(res);
      os << " special=" << t.special() << " special-min=" << t.special_min() << " constants=(" << t.width() << ","
         << t.special_min() - 1 << ")";
      break;
    }
    case DocKind::ws_template: {
      auto res = verify_ws_template(c, d.width.value(), d.tail.value(), d.special.value());
      if (auto* v = std::get_if<Violation>(&res)) {
        r.message = describe(*v);
        return r;
      }
      const auto& t = std::get<WSTemplate>(res);
      os << " width=" << t.width() << " tail=" << t.tail() << " special=" << t.special()
         << " constants=(" << t.width() << "," << best_additive_constant(t) << ")";
      break;
    }
    case DocKind::tail:
      os << " offset=" << d.offset.value_or(0);
      break;
  }
  r.ok = true;
  r.message = os.str();
  return r;
}

/// Applies command-line metadata overrides to a parsed document.
inline PartitionDoc reinterpret(PartitionDoc d, const std::string& kind, std::optional<int> width,
                                std::optional<int> tail, std::optional<int> special) {
  if (!kind.empty()) {
    auto k = doc_kind_from_string(kind);
    if (!k) throw UsageError("unknown kind '" + kind + "'");
    d.kind = *k;
  }
  if (width) d.width = width;
  if (tail) d.tail = tail;
  if (special) d.special = special;
  if (d.kind == DocKind::s_template) d.width = d.coloring.length();
  if ((d.kind == DocKind::s_template || d.kind == DocKind::ws_template) && !d.special) {
    throw UsageError("kind " + std::string(to_string(d.kind)) + " needs a special color");
  }
  if (d.kind == DocKind::ws_template && (!d.width || !d.tail)) throw UsageError("kind ws-template needs width and tail");
  return d;
}

struct CorpusEntry {
  std::string id;
  std::string file;
  DocKind kind;
  bool expect_ok;
  std::string expect;  // expected report fragment, or expected failure note
};

inline const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = {
      {"table5", "table5.schur", DocKind::s_template, true, "constants=(33,6)"},
      {"table6_printed", "table6_printed.schur", DocKind::s_template, false,
       "transcription defects: missing 8, duplicate 18, missing 49"},
      {"table6", "table6.schur", DocKind::s_template, true, "constants=(111,43)"},
      {"table7", "table7.schur", DocKind::s_template, true, "constants=(380,148)"},
      {"table8_printed", "table8_printed.schur", DocKind::weakly_sumfree, true, "p=42"},
      {"table8", "table8.schur", DocKind::ws_template, true, "width=42 tail=23"},
      {"table8_tail", "table8_tail.schur", DocKind::tail, true, "offset=23"},
      {"table9", "table9.schur", DocKind::weakly_sumfree, true, "p=646 n=6"},
      {"s3_13", "s3_13.schur", DocKind::sumfree, true, "p=13 n=3"},
      {"s4_44", "s4_44.schur", DocKind::sumfree, true, "p=44 n=4"},
      {"s5_160", "s5_160.schur", DocKind::sumfree, true, "p=160 n=5"},
  };
  return entries;
}

/// Parses a MANIFEST of `<fnv1a64-hex>  <file>` lines.
inline std::map<std::string, std::string> read_manifest(const std::filesystem::path& dir) {
  std::map<std::string, std::string> m;
  std::istringstream in(read_file((dir / "MANIFEST").string()));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string sum, file;
    if (!(ls >> sum >> file)) throw UsageError("malformed MANIFEST line: " + line);
    m[file] = sum;
  }
  return m;
}

inline SearchSpec spec_from_flags(const std::string& kind, int length, int tail, int colors, int special,
                                  bool special_last, bool symmetric, const std::vector<int>& min_element,
                                  const std::string& prefix) {
  SearchSpec s;
  if (kind == "sumfree") s.kind = TargetKind::sumfree_partition;
  else if (kind == "weak") s.kind = TargetKind::weak_partition;
  else if (kind == "s-template") s.kind = TargetKind::s_template;
  else if (kind == "ws-template") s.kind = TargetKind::ws_template;
  else throw UsageError("unknown search kind '" + kind + "' (sumfree, weak, s-template, ws-template)");
  s.length = length;
  s.tail = tail;
  s.num_colors = colors;
  if (special_last) s.special_policy = SpecialPolicy::last;
  else if (special > 0) {
    s.special_policy = SpecialPolicy::fixed;
    s.special = special;
  }
  s.symmetric = symmetric;
  s.min_element = min_element;
  for (char ch : prefix) {
    if (ch == ',' || ch == ' ') continue;
    if (ch < '1' || ch > '9') throw UsageError("prefix must be a string of colors 1..9");
    s.fixed_prefix.push_back(ch - '0');
  }
  s.validate();
  return s;
}

inline DocKind doc_kind_for(TargetKind k) {
  switch (k) {
    case TargetKind::sumfree_partition: return DocKind::sumfree;
    case TargetKind::weak_partition: return DocKind::weakly_sumfree;
    case TargetKind::s_template: return DocKind::s_template;
    case TargetKind::ws_template: return DocKind::ws_template;
  }
  return DocKind::sumfree;
}

inline PartitionDoc doc_for_found(const SearchSpec& spec, const Found& f, std::vector<std::string> comments) {
  PartitionDoc d{doc_kind_for(spec.kind), f.coloring, std::nullopt, std::nullopt, std::nullopt, std::nullopt,
                 std::move(comments)};
  if (spec.is_template()) d.special = f.special;
  if (spec.kind == TargetKind::ws_template) {
    d.width = spec.length;
    d.tail = spec.tail;
  }
  return d;
}

inline std::string coloring_string(const Coloring& c) {
  std::string s;
  for (Color x : c.colors()) s += std::to_string(x) + (c.num_colors() > 9 ? "," : "");
  return s;
}

/// Runs one command. `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sum-free and weakly sum-free partitions: verification, constructions, bounds, search", "schur"};
  app.require_subcommand(1);
  int status = Exit::ok;

  // verify
  std::string v_path, v_kind;
  std::optional<int> v_width, v_tail, v_special;
  auto* verify = app.add_subcommand("verify", "Verify a partition or template file");
  verify->add_option("path", v_path, "partition file")->required();
  verify->add_option("--kind", v_kind, "reinterpret as kind (sumfree, weakly-sumfree, s-template, ws-template)");
  verify->add_option("--width", v_width, "template width");
  verify->add_option("--tail", v_tail, "ws-template tail");
  verify->add_option("--special", v_special, "special color");

  // expand
  std::string e_template, e_partition, e_tail, e_out;
  auto* expand = app.add_subcommand("expand", "Expand a template by a sum-free partition");
  expand->add_option("template", e_template, "s-template or ws-template file")->required();
  expand->add_option("partition", e_partition, "sum-free partition file")->required();
  expand->add_option("--tail", e_tail, "last-row tail file (kind=tail)");
  expand->add_option("-o,--output", e_out, "output file (default stdout)");

  // compose
  std::string c_outer, c_inner, c_out;
  auto* compose = app.add_subcommand("compose", "Compose an s-template with an s-template or ws-template");
  compose->add_option("outer", c_outer, "s-template laid out by rows (s o s) or coloring the rows (s o ws)")->required();
  compose->add_option("inner", c_inner, "s-template or ws-template")->required();
  compose->add_option("-o,--output", c_out, "output file (default stdout)");

  // lift
  std::string l_path, l_out;
  auto* lift = app.add_subcommand("lift", "Lift a weakly sum-free partition to a ws-template");
  lift->add_option("partition", l_path, "weakly sum-free partition file")->required();
  lift->add_option("-o,--output", l_out, "output file (default stdout)");

  // complete
  std::string k_path, k_tail_path, k_out;
  int k_tail = 0, k_special = 0;
  auto* complete = app.add_subcommand(
      "complete", "Extend a width-a coloring of [1,a] to the least ws-template over [1,a+b] (optionally admitting a tail)");
  complete->add_option("partition", k_path, "coloring of [1,a]")->required();
  complete->add_option("--tail", k_tail, "tail length b")->required();
  complete->add_option("--special", k_special, "special color")->required();
  complete->add_option("--tail-file", k_tail_path, "last-row tail the completion must admit (kind=tail)");
  complete->add_option("-o,--output", k_out, "output file (default stdout)");

  // bounds
  int b_max = 15;
  bool b_t3 = false, b_t4 = false;
  auto* bounds = app.add_subcommand("bounds", "Print the lower-bound ledger");
  bounds->add_option("max_n", b_max, "largest n")->check(CLI::Range(1, 60));
  bounds->add_flag("--table3", b_t3, "S-from-S lower-bound table, n = 8..15");
  bounds->add_flag("--table4", b_t4, "WS-from-S lower-bound table, n = 8..15");

  // shared spec flags for encode and search
  struct SpecFlags {
    std::string kind = "sumfree";
    int length = 0, tail = 0, colors = 1, special = 0;
    bool special_last = false, symmetric = false;
    std::vector<int> min_element;
    std::string prefix;
  };
  SpecFlags enc, srch;
  auto add_spec = [](CLI::App* sc, SpecFlags& f) {
    sc->add_option("--kind", f.kind, "sumfree, weak, s-template, ws-template");
    sc->add_option("--length,--width", f.length, "p for partitions, width for templates");
    sc->add_option("--tail", f.tail, "ws-template tail");
    sc->add_option("--colors", f.colors, "number of colors")->required();
    sc->add_option("--special", f.special, "special color");
    sc->add_flag("--special-last", f.special_last, "special color is the last to appear");
    sc->add_flag("--symmetric", f.symmetric, "require symmetry");
    sc->add_option("--min", f.min_element, "per-color lower bounds on the subset minima")->delimiter(',');
    sc->add_option("--prefix", f.prefix, "colors of 1, 2, ... fixed in advance");
  };
  bool enc_no_amo = false, enc_allow_empty = false;
  auto* encode = app.add_subcommand("encode", "Emit a DIMACS CNF for a search spec");
  add_spec(encode, enc);
  encode->add_flag("--no-amo", enc_no_amo, "omit at-most-one-color clauses");
  encode->add_flag("--allow-empty", enc_allow_empty, "allow empty color classes");

  std::string d_cnf, d_model, d_out;
  auto* decode = app.add_subcommand("decode", "Decode a solver model into a verified partition file");
  decode->add_option("cnf", d_cnf, "instance written by encode")->required();
  decode->add_option("model", d_model, "solver output (v-lines)")->required();
  decode->add_option("-o,--output", d_out, "output file (default stdout)");

  double s_limit = 1e9;
  std::string s_out;
  auto* search = app.add_subcommand("search", "Exhaustive search for partitions and templates");
  add_spec(search, srch);
  search->add_option("--node-limit", s_limit, "refuse searches estimated above this many nodes");
  search->add_option("-o,--output", s_out, "witness file (default stdout)");

  std::string corpus_dir = "data";
  auto* corpus_cmd = app.add_subcommand("corpus", "Check the shipped corpus against its expectations");
  corpus_cmd->add_option("--data", corpus_dir, "corpus directory");
  bool write_manifest = false;
  corpus_cmd->add_flag("--write-manifest", write_manifest, "rewrite MANIFEST from the current files");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    const int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? Exit::ok : Exit::usage;
  }

  try {
    if (*verify) {
      PartitionDoc d = reinterpret(load_doc(v_path), v_kind, v_width, v_tail, v_special);
      auto r = verify_doc(d);
      out << (r.ok ? "ok: " : "violation: ") << r.message << "\n";
      status = r.ok ? Exit::ok : Exit::violation;
    } else if (*expand) {
      const PartitionDoc t = load_doc(e_template);
      const PartitionDoc g = load_doc(e_partition);
      if (g.kind != DocKind::sumfree) {
        throw UsageError("kind mismatch: expansion needs a sumfree inner partition, got " + std::string(to_string(g.kind)));
      }
      std::optional<PartitionDoc> tail;
      if (!e_tail.empty()) {
        tail = load_doc(e_tail);
        if (tail->kind != DocKind::tail) throw UsageError("kind mismatch: --tail needs a file of kind tail");
      }
      Certified<Coloring> res = [&] {
        if (t.kind == DocKind::s_template) {
          const STemplate st = s_template_from_doc(t);
          if (!tail) return expand_schur(st, g.coloring);
          if (tail->offset.value_or(0) != 0) throw UsageError("schur tails start at offset 0");
          return expand_schur_with_tail(st, g.coloring, tail->coloring.colors());
        }
        if (t.kind == DocKind::ws_template) {
          const WSTemplate wt = ws_template_from_doc(t);
          if (!tail) return expand_weak(wt, g.coloring);
          if (tail->offset.value_or(0) != wt.tail()) throw UsageError("weak tails start at offset b");
          return expand_weak_with_tail(wt, g.coloring, tail->coloring.colors());
        }
        throw UsageError("kind mismatch: expand needs an s-template or ws-template, got " +
                         std::string(to_string(t.kind)));
      }();
      const DocKind k = t.kind == DocKind::s_template ? DocKind::sumfree : DocKind::weakly_sumfree;
      write_output(e_out, serialize_doc(to_doc(res, k)), out);
      if (!e_out.empty()) out << "ok: wrote " << to_string(k) << " p=" << res.value.length() << " to " << e_out << "\n";
    } else if (*compose) {
      const PartitionDoc a = load_doc(c_outer);
      const PartitionDoc b = load_doc(c_inner);
      if (a.kind != DocKind::s_template) throw UsageError("kind mismatch: the outer argument must be an s-template");
      const STemplate s = s_template_from_doc(a);
      PartitionDoc res = [&] {
        if (b.kind == DocKind::s_template) return to_doc(compose_s_templates(s, s_template_from_doc(b)));
        if (b.kind == DocKind::ws_template) return to_doc(compose_s_ws_templates(s, ws_template_from_doc(b)));
        throw UsageError("kind mismatch: the inner argument must be a template");
      }();
      write_output(c_out, serialize_doc(res), out);
      if (!c_out.empty()) out << "ok: wrote " << to_string(res.kind) << " p=" << res.coloring.length() << " to " << c_out << "\n";
    } else if (*lift) {
      const PartitionDoc f = load_doc(l_path);
      if (f.kind != DocKind::weakly_sumfree && f.kind != DocKind::sumfree) {
        throw UsageError("kind mismatch: lift needs a partition");
      }
      auto res = to_doc(lift_weak_to_ws_template(f.coloring));
      write_output(l_out, serialize_doc(res), out);
      if (!l_out.empty()) out << "ok: wrote ws-template p=" << res.coloring.length() << " to " << l_out << "\n";
    } else if (*complete) {
      const PartitionDoc f = load_doc(k_path);
      std::vector<Color> tail_colors;
      if (!k_tail_path.empty()) {
        const PartitionDoc td = load_doc(k_tail_path);
        if (td.kind != DocKind::tail || td.offset.value_or(0) != k_tail) {
          throw UsageError("--tail-file needs kind tail at offset b");
        }
        tail_colors.assign(td.coloring.colors().begin(), td.coloring.colors().end());
      }
      SearchSpec spec;
      spec.kind = TargetKind::ws_template;
      spec.length = f.coloring.length();
      spec.tail = k_tail;
      spec.num_colors = f.coloring.num_colors();
      spec.special_policy = SpecialPolicy::fixed;
      spec.special = k_special;
      spec.fixed_prefix.assign(f.coloring.colors().begin(), f.coloring.colors().end());
      SearchOptions opts;
      opts.canonical_colors = false;
      std::optional<Found> hit;
      enumerate_colorings(spec, opts, [&](const Found& c) {
        if (!tail_colors.empty()) {
          const WSTemplate t = make_ws_template(c.coloring, spec.length, spec.tail, spec.special);
          if (check_weak_tail(t, tail_colors)) return true;
        }
        hit = c;
        return false;
      });
      if (!hit) {
        out << "violation: no completion exists\n";
        return Exit::violation;
      }
      const WSTemplate t = make_ws_template(hit->coloring, spec.length, spec.tail, spec.special);
      const int constant = tail_colors.empty() ? best_additive_constant(t) : best_additive_constant(t, tail_colors);
      PartitionDoc res = to_doc(t, {"least completion of " + k_path + " to [1," + std::to_string(spec.domain()) + "]",
                                    "positions 1.." + std::to_string(spec.length) + " fixed, colors ascending",
                                    "constants: (" + std::to_string(spec.length) + "," + std::to_string(constant) + ")"});
      write_output(k_out, serialize_doc(res), out);
      if (!k_out.empty()) out << "ok: wrote ws-template constants=(" << spec.length << "," << constant << ") to " << k_out << "\n";
    } else if (*bounds) {
      const BoundsLedger l = best_bounds(b_max);
      if (b_t3 || b_t4) {
        const TablesReport rep = reproduce_tables();
        for (int table : {3, 4}) {
          if ((table == 3 && !b_t3) || (table == 4 && !b_t4)) continue;
          out << (table == 3 ? "S(n+k) >= a S(n) + b" : "WS(n+k) >= a S(n) + b") << "\n";
          out << std::setw(12) << "rule";
          for (int n = 8; n <= 15; ++n) out << std::setw(11) << ("n=" + std::to_string(n));
          out << "\n";
          std::string row_id;
          for (const auto& c : rep.cells) {
            if (c.table != table) continue;
            if (c.rule.id() != row_id) {
              if (!row_id.empty()) out << "\n";
              row_id = c.rule.id();
              out << std::setw(12) << row_id;
            }
            out << std::setw(10) << c.computed << (c.highlighted_computed ? "*" : " ");
          }
          out << "\n";
          std::size_t bad = 0;
          for (const auto& c : rep.cells) {
            if (c.table == table) bad += (c.computed != c.printed) + (c.highlighted_computed != c.highlighted_printed);
          }
          out << "mismatches against the printed table: " << bad << "\n";
          if (bad) status = Exit::violation;
        }
      } else {
        for (SeriesKind k : {SeriesKind::s, SeriesKind::ws}) {
          out << std::left << std::setw(4) << (k == SeriesKind::s ? "S" : "WS") << std::right << std::setw(4) << "n"
              << std::setw(16) << "value" << "  source\n";
          for (const auto& [n, e] : l.series(k)) {
            out << std::setw(8) << n << std::setw(16) << e.value << "  "
                << (e.rule ? "rule " + l.rules[*e.rule].id() + " from n=" + std::to_string(e.pred)
                           : (e.exact ? "exact: " : "base: ") + e.citation)
                << "\n";
          }
        }
        out << ledger_lines(l);
        if (auto bad = audit(l)) {
          err << "audit failed at n=" << bad->second << "\n";
          status = Exit::violation;
        }
      }
    } else if (*encode) {
      const SearchSpec s = spec_from_flags(enc.kind, enc.length, enc.tail, enc.colors, enc.special, enc.special_last,
                                           enc.symmetric, enc.min_element, enc.prefix);
      CnfOptions o;
      o.at_most_one = !enc_no_amo;
      o.allow_empty = enc_allow_empty;
      out << write_dimacs(encode_cnf(s, o));
    } else if (*decode) {
      const CnfInstance inst = parse_dimacs(read_file(d_cnf));
      const auto model = parse_model(read_file(d_model), inst.num_vars);
      const Found f = decode_model(inst, model);
      PartitionDoc res = doc_for_found(inst.spec, f, {"decoded from " + d_cnf + " with model " + d_model,
                                                      "spec: " + spec_echo(inst), "verified: ok"});
      write_output(d_out, serialize_doc(res), out);
      if (!d_out.empty()) out << "ok: wrote " << to_string(res.kind) << " p=" << res.coloring.length() << " to " << d_out << "\n";
    } else if (*search) {
      SearchSpec s = spec_from_flags(srch.kind, srch.length, srch.tail, srch.colors, srch.special, srch.special_last,
                                     srch.symmetric, srch.min_element, srch.prefix);
      SearchOptions opts;
      opts.node_limit = s_limit;
      std::vector<std::string> comments;
      std::optional<Found> witness;
      const char* name = s.kind == TargetKind::sumfree_partition ? "S" : "WS";
      if (s.length == 0 && !s.is_template()) {
        if (s.symmetric || !s.min_element.empty() || !s.fixed_prefix.empty()) {
          throw UsageError("maximum search over partitions takes no extra constraints");
        }
        const ExactResult r = s.kind == TargetKind::sumfree_partition ? brute_force_schur(s.num_colors, opts)
                                                                      : brute_force_weak_schur(s.num_colors, opts);
        out << name << "(" << s.num_colors << ") " << (r.exact ? "= " : ">= ") << r.value << "\n";
        comments.push_back(std::string(name) + "(" + std::to_string(s.num_colors) + ") " + (r.exact ? "= " : ">= ") +
                           std::to_string(r.value) + (r.exact ? ", infeasibility of the next length exhausted" : ""));
        s.length = r.value;
        witness = Found{r.witness, 0};
      } else if (s.is_template()) {
        const TemplateResult r = brute_force_template(s, opts);
        if (!r.witness) {
          out << "none: no " << to_string(s.kind) << " found\n";
          return Exit::violation;
        }
        out << "max width " << r.max_width << "\n";
        comments.push_back(std::string(to_string(s.kind)) + " of width " + std::to_string(r.max_width) +
                           (s.length == 0 ? ", the maximum for this spec" : ""));
        s.length = r.max_width;
        witness = r.witness;
      } else {
        witness = find_first(s, opts);
        if (!witness) {
          out << "none: no " << to_string(s.kind) << " coloring of [1," << s.length << "]\n";
          return Exit::violation;
        }
        out << "found " << to_string(s.kind) << " coloring of [1," << s.length << "]\n";
        comments.push_back("first coloring in lexicographic order");
      }
      write_output(s_out, serialize_doc(doc_for_found(s, *witness, comments)), out);
    } else if (*corpus_cmd) {
      const std::filesystem::path dir(corpus_dir);
      if (write_manifest) {
        std::string m = "# fnv1a64  file\n";
        for (const auto& e : corpus()) m += hex64(fnv1a64(read_file((dir / e.file).string()))) + "  " + e.file + "\n";
        write_output((dir / "MANIFEST").string(), m, out);
        out << "wrote " << (dir / "MANIFEST").string() << "\n";
      }
      const auto manifest = read_manifest(dir);
      int failures = 0;
      for (const auto& e : corpus()) {
        const std::string text = read_file((dir / e.file).string());
        const auto it = manifest.find(e.file);
        std::string line = e.id + ": ";
        bool good = true;
        if (it == manifest.end() || it->second != hex64(fnv1a64(text))) {
          good = false;
          line += "checksum mismatch; ";
        }
        try {
          const PartitionDoc d = parse_doc(text);
          if (d.kind != e.kind) {
            good = false;
            line += "unexpected kind " + std::string(to_string(d.kind)) + "; ";
          }
          const auto r = verify_doc(d);
          line += (r.ok ? "ok " : "violation ") + r.message;
          if (r.ok != e.expect_ok || (r.ok && r.message.find(e.expect) == std::string::npos)) good = false;
          if (d.kind == DocKind::ws_template && r.ok) {
            auto tail_it = std::find_if(corpus().begin(), corpus().end(),
                                        [&](const CorpusEntry& c) { return c.id == e.id + "_tail"; });
            if (tail_it != corpus().end()) {
              const PartitionDoc td = parse_doc(read_file((dir / tail_it->file).string()));
              const WSTemplate t = ws_template_from_doc(d);
              line += " with-tail-constant=" + std::to_string(best_additive_constant(t, td.coloring.colors()));
            }
          }
        } catch (const ParseError& pe) {
          line += std::string("parse error ") + pe.what() + " [";
          for (std::size_t i = 0; i < pe.defects().size(); ++i) line += (i ? "; " : "") + describe(pe.defects()[i]);
          line += "]";
          if (e.expect_ok) good = false;
        }
        if (!e.expect_ok) line += " (expected: " + e.expect + ")";
        out << (good ? "PASS " : "FAIL ") << line << "\n";
        failures += !good;
      }
      out << (failures ? "corpus: " + std::to_string(failures) + " unexpected results\n" : std::string("corpus: all as expected\n"));
      status = failures ? Exit::violation : Exit::ok;
    }
  } catch (const ParseError& e) {
    print_parse_error(e, err);
    return Exit::usage;
  } catch (const VerificationError& e) {
    out << "violation: " << e.what() << "\n";
    return Exit::violation;
  } catch (const TailPredicateError& e) {
    out << "violation: " << e.what() << "\n";
    return Exit::violation;
  } catch (const DecodeError& e) {
    err << "decode error: " << e.what() << "\n";
    return Exit::usage;
  } catch (const IntractableError& e) {
    err << "refused: " << e.what() << " (estimated nodes: " << e.estimated_nodes() << ")\n";
    return Exit::usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return Exit::usage;
  } catch (const std::bad_optional_access&) {
    err << "error: missing metadata for this kind\n";
    return Exit::usage;
  }
  return status;
}

}  // namespace schur::cli
