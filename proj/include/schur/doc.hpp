#pragma once

// Canonical text format for partitions and templates:
//
//   # free-form comment / provenance lines
//   schur v1 kind=<tag> p=<len> n=<colors> [width=<a>] [tail=<b>] [special=<c>] [offset=<o>]
//   1: 1 4
//   2: 2 3
//
// Colors are 1-based. Each subset line lists integers; commas are accepted as
// separators on input, the canonical output uses single spaces in increasing
// order. Kind `tail` describes a partial coloring of [offset+1, offset+p]
// (empty subsets allowed); every other kind covers [1, p] exactly.

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "schur/coloring.hpp"
#include "schur/error.hpp"

namespace schur {

enum class DocKind { sumfree, weakly_sumfree, s_template, ws_template, tail };

inline std::string_view to_string(DocKind k) {
  switch (k) {
    case DocKind::sumfree: return "sumfree";
    case DocKind::weakly_sumfree: return "weakly-sumfree";
    case DocKind::s_template: return "s-template";
    case DocKind::ws_template: return "ws-template";
    case DocKind::tail: return "tail";
  }
  return "?";
}

inline std::optional<DocKind> doc_kind_from_string(std::string_view s) {
  for (DocKind k : {DocKind::sumfree, DocKind::weakly_sumfree, DocKind::s_template, DocKind::ws_template,
                    DocKind::tail}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

/// Structural problem with the subset listing of a document.
struct Defect {
  enum class Kind { duplicate, missing, out_of_range };
  Kind kind;
  int integer;
  std::vector<Color> colors;  // subsets that list the integer (empty for `missing`)

  friend bool operator==(const Defect&, const Defect&) = default;
};

inline std::string describe(const Defect& d) {
  std::string s;
  switch (d.kind) {
    case Defect::Kind::duplicate: s = "duplicate integer " + std::to_string(d.integer) + " in subsets"; break;
    case Defect::Kind::missing: s = "missing integer " + std::to_string(d.integer); break;
    case Defect::Kind::out_of_range: s = "integer " + std::to_string(d.integer) + " out of range in subset"; break;
  }
  for (std::size_t i = 0; i < d.colors.size(); ++i) s += (i ? "," : " ") + std::to_string(d.colors[i]);
  return s;
}

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, int line = 0, std::vector<Defect> defects = {})
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line),
        defects_(std::move(defects)) {}

  int line() const noexcept { return line_; }
  /// Every structural defect found, in increasing integer order.
  const std::vector<Defect>& defects() const noexcept { return defects_; }

 private:
  int line_;
  std::vector<Defect> defects_;
};

struct PartitionDoc {
  DocKind kind;
  Coloring coloring;
  std::optional<int> width;
  std::optional<int> tail;
  std::optional<Color> special;
  std::optional<int> offset;
  std::vector<std::string> comments;

  friend bool operator==(const PartitionDoc&, const PartitionDoc&) = default;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline std::optional<long> parse_int(std::string_view s) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

inline std::vector<std::string_view> split_tokens(std::string_view s, std::string_view seps) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && seps.find(s[i]) != std::string_view::npos) ++i;
    std::size_t j = i;
    while (j < s.size() && seps.find(s[j]) == std::string_view::npos) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline int require_positive(const std::map<std::string, long, std::less<>>& meta, const char* key, int line,
                            long min_value = 1) {
  auto it = meta.find(key);
  if (it == meta.end()) throw ParseError(std::string("missing required metadata '") + key + "'", line);
  if (it->second < min_value) throw ParseError(std::string("metadata '") + key + "' out of range", line);
  return static_cast<int>(it->second);
}

}  // namespace detail

inline PartitionDoc parse_doc(std::string_view text) {
  using detail::trim;
  std::vector<std::string> comments;
  std::optional<DocKind> kind;
  std::map<std::string, long, std::less<>> meta;
  int header_line = 0;
  // color -> listed integers, with the line each subset came from
  std::map<Color, std::vector<long>> listed;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (line.front() == '#') {
      std::string_view body = line.substr(1);
      if (!body.empty() && body.front() == ' ') body.remove_prefix(1);
      comments.emplace_back(body);
      continue;
    }
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = trim(line.substr(0, hash));

    if (!kind) {
      auto tokens = detail::split_tokens(line, " \t");
      if (tokens.size() < 2 || tokens[0] != "schur" || tokens[1] != "v1") {
        throw ParseError("expected header 'schur v1 kind=... p=... n=...'", line_no);
      }
      for (std::size_t i = 2; i < tokens.size(); ++i) {
        auto eq = tokens[i].find('=');
        if (eq == std::string_view::npos) throw ParseError("malformed header field '" + std::string(tokens[i]) + "'", line_no);
        std::string key(tokens[i].substr(0, eq));
        std::string_view value = tokens[i].substr(eq + 1);
        if (meta.count(key) || (key == "kind" && kind)) throw ParseError("duplicate header field '" + key + "'", line_no);
        if (key == "kind") {
          kind = doc_kind_from_string(value);
          if (!kind) throw ParseError("unknown kind tag '" + std::string(value) + "'", line_no);
          continue;
        }
        if (key != "p" && key != "n" && key != "width" && key != "tail" && key != "special" && key != "offset") {
          throw ParseError("unknown header field '" + key + "'", line_no);
        }
        auto v = detail::parse_int(value);
        if (!v) throw ParseError("header field '" + key + "' is not an integer", line_no);
        meta[key] = *v;
      }
      if (!kind) throw ParseError("missing required metadata 'kind'", line_no);
      header_line = line_no;
      continue;
    }

    auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected '<color>: <integers>'", line_no);
    auto color = detail::parse_int(trim(line.substr(0, colon)));
    if (!color) throw ParseError("subset color is not an integer", line_no);
    if (listed.count(static_cast<Color>(*color))) {
      throw ParseError("subset " + std::to_string(*color) + " listed twice", line_no);
    }
    auto& ints = listed[static_cast<Color>(*color)];
    for (auto tok : detail::split_tokens(line.substr(colon + 1), " \t,")) {
      auto v = detail::parse_int(tok);
      if (!v) throw ParseError("'" + std::string(tok) + "' is not an integer", line_no);
      ints.push_back(*v);
    }
  }
  if (!kind) throw ParseError("empty document: missing header");

  const int p = detail::require_positive(meta, "p", header_line);
  const int n = detail::require_positive(meta, "n", header_line);
  auto allowed = [&](std::initializer_list<const char*> keys) {
    for (const auto& [key, value] : meta) {
      if (key == "p" || key == "n") continue;
      if (std::none_of(keys.begin(), keys.end(), [&](const char* k) { return key == k; })) {
        throw ParseError("metadata '" + key + "' not allowed for kind " + std::string(to_string(*kind)), header_line);
      }
    }
  };

  std::optional<int> width, tail, special, offset;
  switch (*kind) {
    case DocKind::sumfree:
    case DocKind::weakly_sumfree:
      allowed({});
      break;
    case DocKind::s_template:
      allowed({"width", "special"});
      special = detail::require_positive(meta, "special", header_line);
      width = meta.count("width") ? static_cast<int>(meta.at("width")) : p;
      if (*width != p) throw ParseError("s-template width must equal p", header_line);
      break;
    case DocKind::ws_template:
      allowed({"width", "tail", "special"});
      width = detail::require_positive(meta, "width", header_line);
      tail = detail::require_positive(meta, "tail", header_line);
      special = detail::require_positive(meta, "special", header_line);
      if (*width <= *tail) throw ParseError("ws-template needs width > tail", header_line);
      if (*width + *tail != p) throw ParseError("ws-template needs p = width + tail", header_line);
      break;
    case DocKind::tail:
      allowed({"offset"});
      offset = detail::require_positive(meta, "offset", header_line, 0);
      break;
  }
  if (special && *special > n) throw ParseError("special color out of range", header_line);

  const int lo = offset.value_or(0) + 1;
  const int hi = offset.value_or(0) + p;
  std::vector<Color> colors(p, 0);
  std::map<int, std::vector<Color>> owners;
  std::vector<Defect> defects;
  for (const auto& [color, ints] : listed) {
    if (color < 1 || color > n) throw ParseError("subset color " + std::to_string(color) + " outside 1.." + std::to_string(n));
    for (long v : ints) {
      if (v < lo || v > hi) {
        defects.push_back({Defect::Kind::out_of_range, static_cast<int>(v), {color}});
        continue;
      }
      owners[static_cast<int>(v)].push_back(color);
      colors[v - lo] = color;
    }
  }
  for (auto& [v, cs] : owners) {
    if (cs.size() > 1) defects.push_back({Defect::Kind::duplicate, v, cs});
  }
  for (int v = lo; v <= hi; ++v) {
    if (!owners.count(v)) defects.push_back({Defect::Kind::missing, v, {}});
  }
  if (!defects.empty()) {
    std::stable_sort(defects.begin(), defects.end(), [](const Defect& l, const Defect& r) { return l.integer < r.integer; });
    std::string msg = describe(defects.front());
    if (defects.size() > 1) msg += " (and " + std::to_string(defects.size() - 1) + " more defects)";
    throw ParseError(msg, 0, std::move(defects));
  }

  try {
    Coloring coloring(std::move(colors), n, *kind == DocKind::tail ? EmptySubsets::allow : EmptySubsets::forbid);
    return PartitionDoc{*kind, std::move(coloring), width, tail, special, offset, std::move(comments)};
  } catch (const MalformedColoring& e) {
    throw ParseError(e.what());
  }
}

inline std::string serialize_doc(const PartitionDoc& doc) {
  std::ostringstream os;
  for (const auto& c : doc.comments) os << (c.empty() ? "#" : "# " + c) << '\n';
  const Coloring& col = doc.coloring;
  os << "schur v1 kind=" << to_string(doc.kind) << " p=" << col.length() << " n=" << col.num_colors();
  if (doc.kind == DocKind::s_template) os << " width=" << col.length();
  if (doc.kind == DocKind::ws_template) os << " width=" << doc.width.value() << " tail=" << doc.tail.value();
  if (doc.special) os << " special=" << *doc.special;
  if (doc.kind == DocKind::tail) os << " offset=" << doc.offset.value_or(0);
  os << '\n';
  const int base = doc.kind == DocKind::tail ? doc.offset.value_or(0) : 0;
  for (Color c = 1; c <= col.num_colors(); ++c) {
    auto members = col.subset(c);
    if (members.empty()) continue;
    os << c << ':';
    for (int x : members) os << ' ' << (x + base);
    os << '\n';
  }
  return os.str();
}

}  // namespace schur
