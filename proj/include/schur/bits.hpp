#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace schur::detail {

// Fixed-size bit set over [0, size) with the one primitive the verifiers
// need: the first y in a range with a[y] and b[y + shift].
class Bits {
 public:
  Bits() = default;
  explicit Bits(int size) : size_(size), words_((size + 63) / 64 + 1, 0) {}

  int size() const noexcept { return size_; }

  void set(int i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const noexcept {
    if (i < 0 || i >= size_) return false;
    return (words_[i >> 6] >> (i & 63)) & 1U;
  }

  // Bits [pos, pos + 64) as one word; positions outside [0, size) read as 0.
  std::uint64_t window(long pos) const noexcept {
    if (pos >= size_ || pos <= -64) return 0;
    std::uint64_t out;
    if (pos < 0) {
      out = words_[0] << static_cast<unsigned>(-pos);
    } else {
      const long w = pos >> 6;
      const unsigned off = static_cast<unsigned>(pos & 63);
      out = words_[w] >> off;
      if (off != 0 && w + 1 < static_cast<long>(words_.size())) out |= words_[w + 1] << (64 - off);
    }
    const long valid = size_ - pos;
    if (valid < 64) out &= (std::uint64_t{1} << valid) - 1;
    return out;
  }

  std::uint64_t word(int w) const noexcept { return words_[w]; }

 private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Smallest y in [lo, hi] such that a.test(y) && b.test(y + shift); -1 if none.
inline int first_match(const Bits& a, const Bits& b, long shift, int lo, int hi) {
  if (lo < 0) lo = 0;
  if (hi >= a.size()) hi = a.size() - 1;
  if (lo > hi) return -1;
  for (int w = lo >> 6; w <= (hi >> 6); ++w) {
    std::uint64_t bits = a.word(w) & b.window(static_cast<long>(w) * 64 + shift);
    const int base = w * 64;
    if (base < lo) bits &= ~std::uint64_t{0} << (lo - base);
    if (base + 63 > hi) {
      const int keep = hi - base + 1;
      bits &= keep >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << keep) - 1);
    }
    if (bits != 0) return base + std::countr_zero(bits);
  }
  return -1;
}

}  // namespace schur::detail
