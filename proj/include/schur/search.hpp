#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "schur/coloring.hpp"
#include "schur/error.hpp"
#include "schur/templates.hpp"

namespace schur {

enum class TargetKind { sumfree_partition, weak_partition, s_template, ws_template };

inline std::string_view to_string(TargetKind k) {
  switch (k) {
    case TargetKind::sumfree_partition: return "sumfree";
    case TargetKind::weak_partition: return "weak";
    case TargetKind::s_template: return "s-template";
    case TargetKind::ws_template: return "ws-template";
  }
  return "?";
}

/// Which color plays the special role in a template search. With canonical
/// colors, color c is the c-th color to appear, so `last` means the special
/// color is the last one by order of appearance.
enum class SpecialPolicy { any, fixed, last };

struct SearchSpec {
  TargetKind kind = TargetKind::sumfree_partition;
  int length = 0;  // p for partitions, width for templates; 0 asks for the maximum
  int tail = 0;    // b, ws-template only
  int num_colors = 1;
  SpecialPolicy special_policy = SpecialPolicy::any;
  Color special = 0;  // for SpecialPolicy::fixed
  bool symmetric = false;
  std::vector<int> min_element;  // optional per-color lower bounds on m_c (0 = none)
  std::vector<Color> fixed_prefix;  // optional colors of 1, 2, ... fixed in advance

  bool is_template() const { return kind == TargetKind::s_template || kind == TargetKind::ws_template; }

  /// Length of the colored domain: p, or a + b for ws-templates.
  int domain() const { return kind == TargetKind::ws_template ? length + tail : length; }

  Color special_color() const {
    if (special_policy == SpecialPolicy::fixed) return special;
    if (special_policy == SpecialPolicy::last) return num_colors;
    return 0;
  }

  void validate() const {
    if (num_colors < 1) throw DomainError("search needs at least one color");
    if (length < 0) throw DomainError("negative length");
    if (kind != TargetKind::ws_template && tail != 0) throw DomainError("tail is only meaningful for ws-templates");
    if (kind == TargetKind::ws_template && tail < 1) throw DomainError("ws-template search needs tail >= 1");
    if (kind == TargetKind::ws_template && length != 0 && length <= tail) throw DomainError("ws-template needs width > tail");
    if (kind == TargetKind::ws_template && symmetric) throw DomainError("symmetric ws-template search is not supported");
    if (special_policy == SpecialPolicy::fixed && (special < 1 || special > num_colors)) {
      throw DomainError("special color outside 1..n");
    }
    if (!is_template() && special_policy != SpecialPolicy::any) throw DomainError("special color given for a partition");
    if (kind == TargetKind::s_template && symmetric && special_policy == SpecialPolicy::any) {
      throw DomainError("symmetric s-template search needs a fixed or last special color");
    }
    if (!min_element.empty() && static_cast<int>(min_element.size()) != num_colors) {
      throw DomainError("min-element bounds need one entry per color");
    }
    if (length > 0 && static_cast<int>(fixed_prefix.size()) > domain()) throw DomainError("fixed prefix longer than the domain");
    for (Color c : fixed_prefix) {
      if (c < 1 || c > num_colors) throw DomainError("fixed prefix color outside 1..n");
    }
  }
};

struct SearchOptions {
  bool canonical_colors = true;   // color c may appear only after colors 1..c-1
  double node_limit = 1e9;        // refuse exhaustive runs estimated above this
  int estimator_probes = 2000;
  std::uint64_t seed = 12345;
  int workers = 0;                // 0: SCHUR_WORKERS or 1
};

struct Found {
  Coloring coloring;
  Color special = 0;  // 0 for partitions
};

inline int worker_count(const SearchOptions& o) {
  if (o.workers > 0) return o.workers;
  if (const char* env = std::getenv("SCHUR_WORKERS")) {
    const int w = std::atoi(env);
    if (w > 0) return w;
  }
  return 1;
}

namespace detail {

/// Depth-first search in increasing integer order with incremental checks.
/// Used for templates, symmetric partitions, full enumeration and sampling.
class OrderedDfs {
 public:
  OrderedDfs(const SearchSpec& spec, const SearchOptions& opts)
      : spec_(spec), opts_(opts), L_(spec.domain()), n_(spec.num_colors), col_(L_ + 2, 0),
        members_(n_ + 1), cannot_(n_ + 1, 0) {
    fixed_special_ = spec.special_color();
    if (spec.kind == TargetKind::ws_template) {
      a_ = spec.length;
      b_ = spec.tail;
    }
  }

  using Visitor = std::function<bool(const Found&)>;

  /// Visits every solution in order; the visitor returns false to stop.
  void run(const Visitor& visit) {
    visit_ = &visit;
    stop_ = false;
    rng_ = nullptr;
    dfs(1);
  }

  /// As run, but tries colors in a random order and gives up after
  /// `budget` nodes.
  std::optional<Found> sample(std::mt19937_64& rng, std::uint64_t budget) {
    std::optional<Found> out;
    Visitor v = [&](const Found& f) {
      out = f;
      return false;
    };
    visit_ = &v;
    stop_ = false;
    rng_ = &rng;
    budget_ = budget;
    dfs(1);
    return out;
  }

  /// Knuth's random-probe estimate of the search-tree size.
  double estimate(int probes, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    double total = 0;
    for (int i = 0; i < probes; ++i) {
      double weight = 1;
      double sum = 1;
      std::vector<std::pair<int, Undo>> path;
      for (int x = 1; x <= L_; ++x) {
        std::vector<std::pair<Color, Undo>> kids;
        for (Color c : candidates(x)) {
          Undo u;
          if (try_assign(x, c, u)) {
            kids.emplace_back(c, u);
            undo(x, c, u);
          }
        }
        if (kids.empty()) break;
        weight *= static_cast<double>(kids.size());
        sum += weight;
        auto [c, u0] = kids[rng() % kids.size()];
        Undo u;
        try_assign(x, c, u);
        path.emplace_back(c, u);
      }
      for (int x = static_cast<int>(path.size()); x >= 1; --x) undo(x, path[x - 1].first, path[x - 1].second);
      total += sum;
    }
    return total / std::max(1, probes);
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  struct Undo {
    Color prev_must = 0;
    bool set_cannot = false;
    int prev_m = 0;
    bool opened_color = false;
  };

  std::vector<Color> candidates(int x) const {
    std::vector<Color> out;
    // Symmetric partitions force the mirror color.
    if (spec_.symmetric && !spec_.is_template()) {
      const int z = L_ + 1 - x;
      if (z < x) {
        out.push_back(col_[z]);
        return out;
      }
    }
    const int top = opts_.canonical_colors ? std::min(used_ + 1, n_) : n_;
    for (Color c = 1; c <= top; ++c) {
      if (!spec_.min_element.empty() && x < spec_.min_element[c - 1]) continue;
      if (x <= static_cast<int>(spec_.fixed_prefix.size()) && spec_.fixed_prefix[x - 1] != c) continue;
      out.push_back(c);
    }
    return out;
  }

  Color color_of(int w, int x, Color c) const { return w == x ? c : col_[w]; }

  bool sum_ok(int x, Color c) const {
    const bool weak = spec_.kind != TargetKind::sumfree_partition && spec_.kind != TargetKind::s_template;
    for (int y : members_[c]) {
      if (2 * y > x) break;
      if (weak && 2 * y == x) continue;
      if (col_[x - y] == c) return false;
    }
    if (spec_.kind == TargetKind::ws_template && x % 2 == 0 && x / 2 > b_ && col_[x / 2] == c) return false;
    return true;
  }

  // True when adding x to A_c breaks the mod-width wrap condition for c.
  bool s_wrap_violated(int x, Color c) const {
    const int p = L_;
    auto check = [&](int y) {
      const int w = x + y - p;
      return w >= 1 && color_of(w, x, c) == c;
    };
    for (int y : members_[c]) {
      if (check(y)) return true;
    }
    return check(x);
  }

  bool ws_special_violated(int x, Color c) const {
    auto check = [&](int y) {
      if (x + y <= b_ + 2 * a_) return false;
      const int w = x + y - 2 * a_;
      return color_of(w, x, c) == c;
    };
    for (int y : members_[c]) {
      if (check(y)) return true;
    }
    return check(x);
  }

  bool ws_regular_violated(int x, Color c) const {
    const int len = a_ + b_;
    auto image = [&](int s) { return s <= 2 * a_ + b_ ? s - a_ : s - 2 * a_; };
    auto pair_check = [&](int y) {
      const int s = x + y;
      if (s <= len) return false;
      const int w = image(s);
      return w <= x && color_of(w, x, c) == c;
    };
    for (int y : members_[c]) {
      if (pair_check(y)) return true;
    }
    if (pair_check(x)) return true;
    // x as the image of an earlier pair.
    auto image_check = [&](int target) {
      for (int y : members_[c]) {
        const int z = target - y;
        if (z < y) break;
        if (z <= x && color_of(z, x, c) == c) return true;
      }
      return false;
    };
    if (x >= b_ + 1 && image_check(x + a_)) return true;
    if (x >= b_ + 1 && x <= 2 * b_ && image_check(x + 2 * a_)) return true;
    return false;
  }

  // Extended-symmetry check for s-templates: E(y) = f(y) on [1,p], f(y-p)
  // on [p+1, p+m-1]; E(y) = E(L+1-y).
  bool s_symmetry_ok(int x, Color c, int m, bool full) const {
    const int p = L_;
    const int ext = p + m - 1;
    auto src = [&](int y) { return y <= p ? y : y - p; };
    auto ecol = [&](int y) { return color_of(src(y), x, c); };
    auto known = [&](int y) { return src(y) <= x; };
    auto pair_ok = [&](int y) {
      const int z = ext + 1 - y;
      if (z < 1 || z > ext || !known(y) || !known(z)) return true;
      return ecol(y) == ecol(z);
    };
    if (full) {
      for (int y = 1; y <= ext; ++y) {
        if (!pair_ok(y)) return false;
      }
      return true;
    }
    if (!pair_ok(x)) return false;
    if (x + p <= ext && !pair_ok(x + p)) return false;
    return true;
  }

  bool try_assign(int x, Color c, Undo& u) {
    u = Undo{must_, false, m_, false};
    if (!sum_ok(x, c)) return false;
    const Color fixed = fixed_special_;
    if (spec_.kind == TargetKind::s_template) {
      if (fixed == 0 || c != fixed) {
        if (s_wrap_violated(x, c)) {
          if (fixed != 0) return false;
          if (must_ != 0 && must_ != c) return false;
          must_ = c;
        }
      }
    } else if (spec_.kind == TargetKind::ws_template) {
      if (fixed != 0) {
        if (c == fixed ? ws_special_violated(x, c) : ws_regular_violated(x, c)) return false;
      } else {
        if (ws_regular_violated(x, c)) {
          if ((must_ != 0 && must_ != c) || cannot_[c]) {
            must_ = u.prev_must;
            return false;
          }
          must_ = c;
        }
        if (ws_special_violated(x, c) && !cannot_[c]) {
          if (must_ == c) {
            must_ = u.prev_must;
            return false;
          }
          cannot_[c] = 1;
          u.set_cannot = true;
        }
      }
    }
    bool first_special = false;
    if (spec_.kind == TargetKind::s_template && spec_.symmetric && m_ == 0 && c == fixed) {
      m_ = x;
      first_special = true;
    }
    if (spec_.kind == TargetKind::s_template && spec_.symmetric && m_ != 0 && !s_symmetry_ok(x, c, m_, first_special)) {
      must_ = u.prev_must;
      m_ = u.prev_m;
      return false;
    }
    col_[x] = c;
    members_[c].push_back(x);
    if (c > used_) {
      used_ = c;
      u.opened_color = true;
    }
    if (!opts_.canonical_colors && members_[c].size() == 1) ++distinct_;
    return true;
  }

  void undo(int x, Color c, const Undo& u) {
    if (!opts_.canonical_colors && members_[c].size() == 1) --distinct_;
    members_[c].pop_back();
    col_[x] = 0;
    if (u.opened_color) {
      used_ = 0;
      for (Color d = 1; d <= n_; ++d) {
        if (!members_[d].empty()) used_ = d;
      }
    }
    must_ = u.prev_must;
    m_ = u.prev_m;
    if (u.set_cannot) cannot_[c] = 0;
  }

  void emit() {
    const int distinct = opts_.canonical_colors ? used_ : distinct_;
    if (distinct != n_) return;
    Color special = 0;
    if (spec_.is_template()) {
      special = fixed_special_;
      if (special == 0) special = must_;
      if (special == 0) {
        for (Color c = n_; c >= 1; --c) {
          if (!cannot_[c]) {
            special = c;
            break;
          }
        }
      }
      if (special == 0 || cannot_[special]) return;
    }
    Coloring coloring(std::vector<Color>(col_.begin() + 1, col_.begin() + 1 + L_), n_);
    // Defensive re-verification: the incremental checks must agree with the verifiers.
    bool ok = true;
    switch (spec_.kind) {
      case TargetKind::sumfree_partition: ok = !verify_sum_free(coloring); break;
      case TargetKind::weak_partition: ok = !verify_weakly_sum_free(coloring); break;
      case TargetKind::s_template: ok = std::holds_alternative<STemplate>(verify_s_template(coloring, special)); break;
      case TargetKind::ws_template:
        ok = std::holds_alternative<WSTemplate>(verify_ws_template(coloring, a_, b_, special));
        break;
    }
    if (!ok) throw std::logic_error("search produced an unverified coloring");
    if (spec_.symmetric && !spec_.is_template() && !is_symmetric(coloring)) {
      throw std::logic_error("search produced an asymmetric coloring");
    }
    if (!(*visit_)(Found{std::move(coloring), special})) stop_ = true;
  }

  void dfs(int x) {
    if (stop_) return;
    ++nodes_;
    if (rng_ && nodes_ > budget_) {
      stop_ = true;
      return;
    }
    if (x > L_) {
      emit();
      return;
    }
    const int distinct = opts_.canonical_colors ? used_ : distinct_;
    if (n_ - distinct > L_ - x + 1) return;
    auto cands = candidates(x);
    if (rng_) std::shuffle(cands.begin(), cands.end(), *rng_);
    for (Color c : cands) {
      Undo u;
      if (!try_assign(x, c, u)) continue;
      dfs(x + 1);
      undo(x, c, u);
      if (stop_) return;
    }
  }

  SearchSpec spec_;
  SearchOptions opts_;
  int L_;
  int n_;
  int a_ = 0;
  int b_ = 0;
  Color fixed_special_ = 0;
  std::vector<Color> col_;
  std::vector<std::vector<int>> members_;
  std::vector<char> cannot_;
  Color must_ = 0;
  int m_ = 0;
  int used_ = 0;
  int distinct_ = 0;
  std::uint64_t nodes_ = 0;
  std::uint64_t budget_ = 0;
  bool stop_ = false;
  const Visitor* visit_ = nullptr;
  std::mt19937_64* rng_ = nullptr;
};

/// Forward-checking search for (weakly) sum-free n-colorings of [1,p] with
/// most-constrained-first variable choice and color symmetry breaking.
class PartitionEngine {
 public:
  PartitionEngine(int p, int n, bool weak)
      : p_(p), n_(n), weak_(weak), col_(p + 1, -1), forb_(n, std::vector<int>(2 * p + 2, 0)), members_(n) {}

  struct Decision {
    int var;
    int color;
  };

  /// Replays a decision prefix; false when it is inconsistent.
  bool replay(const std::vector<Decision>& prefix) {
    for (const auto& d : prefix) {
      if (col_[d.var] != -1 || forb_[d.color][d.var] != 0 || d.color > used_) return false;
      assign(d.var, d.color);
      ++depth_;
    }
    return true;
  }

  /// Collects the decision prefixes at the first `levels` branching points.
  void frontier(int levels, std::vector<std::vector<Decision>>& out, std::vector<Decision>& prefix) {
    if (levels == 0 || depth_ == p_) {
      out.push_back(prefix);
      return;
    }
    const int v = choose();
    if (v < 0) return;
    for (int c = 0; c < limit(); ++c) {
      if (forb_[c][v]) continue;
      assign(v, c);
      ++depth_;
      prefix.push_back({v, c});
      frontier(levels - 1, out, prefix);
      prefix.pop_back();
      --depth_;
      unassign(v, c);
    }
  }

  bool solve(const std::atomic<bool>* cancel = nullptr) {
    cancel_ = cancel;
    return dfs();
  }

  std::vector<Color> coloring() const {
    std::vector<Color> out(p_);
    for (int i = 1; i <= p_; ++i) out[i - 1] = col_[i] + 1;
    return out;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  int limit() const { return used_ < n_ ? used_ + 1 : n_; }

  void bump(int c, int y, int d) {
    if (y >= 1 && y <= p_) forb_[c][y] += d;
  }

  void assign(int v, int c) {
    for (int a : members_[c]) {
      bump(c, v + a, 1);
      bump(c, v > a ? v - a : a - v, 1);
    }
    if (!weak_) {
      bump(c, 2 * v, 1);
      if (v % 2 == 0) bump(c, v / 2, 1);
    }
    members_[c].push_back(v);
    col_[v] = c;
    if (c == used_) ++used_;
  }

  void unassign(int v, int c) {
    col_[v] = -1;
    members_[c].pop_back();
    if (members_[c].empty() && c == used_ - 1) --used_;
    for (int a : members_[c]) {
      bump(c, v + a, -1);
      bump(c, v > a ? v - a : a - v, -1);
    }
    if (!weak_) {
      bump(c, 2 * v, -1);
      if (v % 2 == 0) bump(c, v / 2, -1);
    }
  }

  // Unassigned integer with the fewest allowed colors (smallest on ties);
  // -1 when some integer has none.
  int choose() const {
    int best = 0;
    int best_count = std::numeric_limits<int>::max();
    const int lim = limit();
    for (int y = 1; y <= p_; ++y) {
      if (col_[y] != -1) continue;
      int cnt = 0;
      for (int c = 0; c < lim; ++c) cnt += forb_[c][y] == 0;
      if (cnt < best_count) {
        best_count = cnt;
        best = y;
        if (cnt <= 1) break;
      }
    }
    return best_count == 0 ? -1 : best;
  }

  bool dfs() {
    ++nodes_;
    if (cancel_ && (nodes_ & 1023) == 0 && cancel_->load(std::memory_order_relaxed)) return false;
    if (depth_ == p_) return used_ == n_;
    if (n_ - used_ > p_ - depth_) return false;
    const int v = choose();
    if (v < 0) return false;
    for (int c = 0; c < limit(); ++c) {
      if (forb_[c][v]) continue;
      assign(v, c);
      ++depth_;
      if (dfs()) return true;
      --depth_;
      unassign(v, c);
    }
    return false;
  }

  int p_;
  int n_;
  bool weak_;
  std::vector<int> col_;
  std::vector<std::vector<int>> forb_;
  std::vector<std::vector<int>> members_;
  int used_ = 0;
  int depth_ = 0;
  std::uint64_t nodes_ = 0;
  const std::atomic<bool>* cancel_ = nullptr;
};

}  // namespace detail

/// First (weakly) sum-free n-coloring of [1,p] in the engine's fixed search
/// order, or nullopt when none exists. The result does not depend on the
/// worker count: subtrees are ranked in sequential order and the lowest
/// ranked success wins.
inline std::optional<Coloring> find_partition(int p, int n, bool weak, const SearchOptions& opts = {}) {
  if (p < 1 || n < 1) throw DomainError("find_partition needs p >= 1 and n >= 1");
  if (n > p) return std::nullopt;
  const int workers = worker_count(opts);
  if (workers <= 1) {
    detail::PartitionEngine e(p, n, weak);
    if (!e.solve()) return std::nullopt;
    return Coloring(e.coloring(), n);
  }
  std::vector<std::vector<detail::PartitionEngine::Decision>> tasks;
  {
    detail::PartitionEngine e(p, n, weak);
    std::vector<detail::PartitionEngine::Decision> prefix;
    e.frontier(std::min(p, 12), tasks, prefix);
  }
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{tasks.size()};
  std::vector<std::optional<std::vector<Color>>> results(tasks.size());
  std::vector<std::atomic<bool>> cancel(tasks.size());
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size() || i > best.load()) return;
      detail::PartitionEngine e(p, n, weak);
      if (!e.replay(tasks[i])) continue;
      if (e.solve(&cancel[i])) {
        results[i] = e.coloring();
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
        for (std::size_t j = i + 1; j < tasks.size(); ++j) cancel[j].store(true);
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (results[i]) return Coloring(*results[i], n);
  }
  return std::nullopt;
}

struct ExactResult {
  int value = 0;
  Coloring witness;
  bool exact = false;  // false when only existence was established
};

/// S(n) by exhaustive search: the largest p admitting a sum-free n-coloring,
/// with infeasibility of p+1 established by exhausting the search tree.
inline ExactResult brute_force_schur(int n, const SearchOptions& opts = {}) {
  if (n < 1) throw DomainError("n must be positive");
  if (n > 4) throw IntractableError("exact Schur search is limited to n <= 4", std::numeric_limits<double>::infinity());
  std::optional<Coloring> last;
  int p = n;
  for (;; ++p) {
    auto c = find_partition(p, n, false, opts);
    if (!c) break;
    last = std::move(c);
  }
  return ExactResult{p - 1, order_subsets(*last), true};
}

/// WS(n) for n <= 3 (exact); for n = 4 a length-66 witness only.
inline ExactResult brute_force_weak_schur(int n, const SearchOptions& opts = {}) {
  if (n < 1) throw DomainError("n must be positive");
  if (n == 4) {
    auto c = find_partition(66, 4, true, opts);
    if (!c) throw std::logic_error("no weakly sum-free 4-coloring of [1,66] found");
    return ExactResult{66, order_subsets(*c), false};
  }
  if (n > 4) {
    throw IntractableError("exact weak Schur search is limited to n <= 3 (n = 4 existence only)",
                           std::numeric_limits<double>::infinity());
  }
  std::optional<Coloring> last;
  int p = n;
  for (;; ++p) {
    auto c = find_partition(p, n, true, opts);
    if (!c) break;
    last = std::move(c);
  }
  return ExactResult{p - 1, order_subsets(*last), true};
}

/// Visits every coloring meeting a fixed-length spec, in increasing
/// lexicographic order of the color sequence. Stops when `visit` returns false.
inline void enumerate_colorings(const SearchSpec& spec, const SearchOptions& opts,
                                const std::function<bool(const Found&)>& visit) {
  spec.validate();
  if (spec.length < 1) throw DomainError("enumeration needs a fixed length");
  detail::OrderedDfs dfs(spec, opts);
  dfs.run(visit);
}

inline double estimate_nodes(const SearchSpec& spec, const SearchOptions& opts = {}) {
  spec.validate();
  if (spec.length < 1) throw DomainError("estimate needs a fixed length");
  detail::OrderedDfs dfs(spec, opts);
  return dfs.estimate(opts.estimator_probes, opts.seed);
}

/// First solution of a fixed-length spec in lexicographic order, refusing
/// specs whose estimated tree exceeds opts.node_limit.
inline std::optional<Found> find_first(const SearchSpec& spec, const SearchOptions& opts = {}) {
  const double est = estimate_nodes(spec, opts);
  if (est > opts.node_limit) {
    throw IntractableError("search tree estimated at " + std::to_string(est) + " nodes exceeds the limit", est);
  }
  std::optional<Found> out;
  enumerate_colorings(spec, opts, [&](const Found& f) {
    out = f;
    return false;
  });
  return out;
}

struct TemplateResult {
  int max_width = 0;  // 0 when no template exists in range
  std::optional<Found> witness;
};

/// Exact maximum width for a template spec (spec.length = 0), or feasibility
/// of the given width. Widths are scanned up to `max_width` (default: the
/// known partition bound for the color count, which caps any template).
inline TemplateResult brute_force_template(SearchSpec spec, const SearchOptions& opts = {},
                                           std::optional<int> max_width = std::nullopt) {
  if (!spec.is_template()) throw DomainError("brute_force_template needs a template kind");
  if (spec.length > 0) {
    auto f = find_first(spec, opts);
    return TemplateResult{f ? spec.length : 0, f};
  }
  int hi = 0;
  if (max_width) {
    hi = *max_width;
  } else {
    static const int s_vals[] = {0, 1, 4, 13, 44};
    static const int ws_vals[] = {0, 2, 8, 23, 66};
    if (spec.num_colors > 4) throw IntractableError("no default width bound for more than 4 colors", 0);
    hi = spec.kind == TargetKind::s_template ? s_vals[spec.num_colors] : ws_vals[spec.num_colors] - spec.tail;
  }
  TemplateResult best;
  const int lo = spec.kind == TargetKind::ws_template ? spec.tail + 1 : 1;
  for (int w = hi; w >= lo; --w) {
    SearchSpec s = spec;
    s.length = w;
    if (auto f = find_first(s, opts)) return TemplateResult{w, f};
  }
  return best;
}

/// A random solution of a fixed-length spec (randomized color order),
/// nullopt when none is found within `budget` nodes.
inline std::optional<Found> random_solution(const SearchSpec& spec, std::mt19937_64& rng,
                                            std::uint64_t budget = 200000, SearchOptions opts = {}) {
  spec.validate();
  detail::OrderedDfs dfs(spec, opts);
  return dfs.sample(rng, budget);
}

}  // namespace schur
