#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "schur/schur.hpp"

namespace oracle {

using schur::Color;

/// A naive witness: the first (x, y) found by scanning x, then y, ascending.
struct Hit {
  int x;
  int y;
  int image;
  Color color;
};

/// Sum-free (weak = false) or weakly sum-free (weak = true), O(p^2) scan.
inline std::optional<Hit> sums(const std::vector<Color>& f, bool weak) {
  const int p = static_cast<int>(f.size());
  for (int x = 1; x <= p; ++x) {
    for (int y = weak ? x + 1 : x; x + y <= p; ++y) {
      if (f[x - 1] == f[y - 1] && f[x + y - 1] == f[x - 1]) return Hit{x, y, x + y, f[x - 1]};
    }
  }
  return std::nullopt;
}

/// Wrap rule of S-templates: x <= y, x + y > p, non-special color.
inline std::optional<Hit> s_wrap(const std::vector<Color>& f, Color special) {
  const int p = static_cast<int>(f.size());
  for (int x = 1; x <= p; ++x) {
    for (int y = x; y <= p; ++y) {
      const Color c = f[x - 1];
      if (c == special || f[y - 1] != c || x + y <= p) continue;
      if (f[x + y - p - 1] == c) return Hit{x, y, x + y - p, c};
    }
  }
  return std::nullopt;
}

inline bool s_template(const std::vector<Color>& f, Color special) {
  return !sums(f, false) && !s_wrap(f, special);
}

/// Column projection by search: the unique z in [b+1, a+b] with z = x mod a.
inline long long pi(long long a, long long b, long long x) {
  for (long long z = b + 1; z <= a + b; ++z) {
    if (((x - z) % a + a) % a == 0) return z;
  }
  return -1;
}

/// Row index by search: the unique l with x in [b+1 + a(l-1), b + a l].
inline long long lam(long long a, long long b, long long x) {
  for (long long l = -10 * (std::abs(x) / a + 2); l <= 10 * (std::abs(x) / a + 2); ++l) {
    if (x >= b + 1 + a * (l - 1) && x <= b + a * l) return l;
  }
  return -1000000;
}

/// The four WS-template conditions checked directly from their statements.
inline bool ws_template(const std::vector<Color>& f, int a, int b, Color special) {
  const int len = a + b;
  if (static_cast<int>(f.size()) != len) return false;
  if (sums(f, true)) return false;
  auto in = [&](int z, Color c) { return z >= 1 && z <= len && f[z - 1] == c; };
  for (int x = 1; x <= len; ++x) {
    for (int y = 1; y <= len; ++y) {
      const Color c = f[x - 1];
      if (f[y - 1] != c) continue;
      if (x > b && y > b && in(x + y, c)) return false;
      if (c == special) {
        if (x + y > b + 2 * a && in(x + y - 2 * a, c)) return false;
      } else if (x + y > a + b && in(static_cast<int>(pi(a, b, x + y)), c)) {
        return false;
      }
    }
  }
  return true;
}

inline std::vector<Color> random_colors(std::mt19937_64& rng, int p, int n) {
  std::uniform_int_distribution<int> d(1, n);
  std::vector<Color> v(p);
  for (auto& c : v) c = d(rng);
  return v;
}

/// Every coloring of [1,p] with colors 1..n, in lexicographic order.
template <class F>
void for_each_coloring(int p, int n, F&& visit) {
  std::vector<Color> v(p, 1);
  for (;;) {
    visit(v);
    int i = p - 1;
    while (i >= 0 && v[i] == n) v[i--] = 1;
    if (i < 0) return;
    ++v[i];
  }
}

inline bool uses_all(const std::vector<Color>& v, int n) {
  std::vector<bool> seen(n + 1, false);
  for (Color c : v) seen[c] = true;
  for (Color c = 1; c <= n; ++c) {
    if (!seen[c]) return false;
  }
  return true;
}

inline std::string data_path(const std::string& file) { return std::string(SCHUR_DATA_DIR) + "/" + file; }

}  // namespace oracle
