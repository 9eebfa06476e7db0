#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mclt/bigint.hpp"
#include "mclt/errors.hpp"

namespace mclt {

inline constexpr std::int64_t kDefaultEnumerationCap = 10'000'000;

inline BigInt factorial(int n) {
  if (n < 0) throw InvalidInputError("factorial of negative argument");
  BigInt r(1);
  for (int i = 2; i <= n; ++i) r *= BigInt(i);
  return r;
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return BigInt(0);
  if (k > n - k) k = n - k;
  BigInt r(1);
  for (int i = 1; i <= k; ++i) {
    r *= BigInt(n - k + i);
    r /= BigInt(i);  // exact: r is binomial(n-k+i, i) after each step
  }
  return r;
}

// (2m-1)!! = 1 * 3 * ... * (2m-1); the empty product for m = 0.
inline BigInt double_factorial_odd(int m) {
  if (m < 0) throw InvalidInputError("double factorial of negative argument");
  BigInt r(1);
  for (int i = 3; i <= 2 * m - 1; i += 2) r *= BigInt(i);
  return r;
}

inline BigInt catalan(int k) {
  if (k < 0) throw InvalidInputError("Catalan number of negative argument");
  return binomial(2 * k, k) / BigInt(k + 1);
}

// A map f: {1..2m} -> {1..N} in which every used color has exactly two
// preimages, stored as its label sequence f(1), ..., f(2m).
struct ColorMap {
  std::vector<int> labels;
  int num_colors = 0;

  ColorMap(std::vector<int> labels_in, int num_colors_in)
      : labels(std::move(labels_in)), num_colors(num_colors_in) {
    if (num_colors < 0)
      throw InvalidInputError("ColorMap with negative color count");
    if (labels.size() % 2 != 0)
      throw InvalidInputError("ColorMap label sequence has odd length");
    std::vector<int> counts(static_cast<std::size_t>(num_colors) + 1, 0);
    for (int c : labels) {
      if (c < 1 || c > num_colors)
        throw InvalidInputError("ColorMap label " + std::to_string(c) +
                                " outside {1.." + std::to_string(num_colors) +
                                "}");
      ++counts[static_cast<std::size_t>(c)];
    }
    for (int c = 1; c <= num_colors; ++c)
      if (counts[static_cast<std::size_t>(c)] != 0 &&
          counts[static_cast<std::size_t>(c)] != 2)
        throw InvalidInputError("color " + std::to_string(c) +
                                " occurs " +
                                std::to_string(counts[static_cast<std::size_t>(c)]) +
                                " times; pair maps need exactly 2 or 0");
  }

  int pair_count() const { return static_cast<int>(labels.size()) / 2; }

  friend bool operator==(const ColorMap& a, const ColorMap& b) {
    return a.num_colors == b.num_colors && a.labels == b.labels;
  }
  friend std::strong_ordering operator<=>(const ColorMap& a,
                                          const ColorMap& b) {
    if (auto c = a.labels <=> b.labels; c != 0) return c;
    return a.num_colors <=> b.num_colors;
  }
};

// Positions (1-based) whose value strictly exceeds every adjacent value.
// A boundary position has one neighbor; the sole position of a length-1
// sequence has none and is a peak vacuously.
inline std::vector<int> peaks(std::span<const int> labels) {
  if (labels.empty())
    throw InvalidInputError("peak detection on an empty sequence");
  std::vector<int> result;
  const std::size_t n = labels.size();
  for (std::size_t i = 0; i < n; ++i) {
    bool left_ok = i == 0 || labels[i] > labels[i - 1];
    bool right_ok = i + 1 == n || labels[i] > labels[i + 1];
    if (left_ok && right_ok) result.push_back(static_cast<int>(i) + 1);
  }
  return result;
}

// Membership test for the peakless pair partitions Pi_0, the maps generated
// by the painting algorithm: the two positions of the maximal color must be
// adjacent, and recursively so in the subsequence left after removing them.
// Operationally: merge runs, then repeatedly delete the maximal-color block,
// which must consist of exactly the color's two positions, re-merging
// neighbors that now touch.
//
// For m <= 3 this coincides with "no position of `labels` is a peak"; from
// m = 4 on it is strictly stronger. (1,2,2,1) stays peakless; (2,1,1,2)
// does not: its maximal color sits on the two non-adjacent ends.
inline bool is_peakless(std::span<const int> labels) {
  struct Run {
    int color, length;
  };
  std::vector<Run> runs;
  for (int c : labels) {
    if (!runs.empty() && runs.back().color == c)
      ++runs.back().length;
    else
      runs.push_back(Run{c, 1});
  }
  while (!runs.empty()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < runs.size(); ++i)
      if (runs[i].color > runs[best].color) best = i;
    if (runs[best].length != 2) return false;
    runs.erase(runs.begin() + static_cast<std::ptrdiff_t>(best));
    if (best > 0 && best < runs.size() &&
        runs[best - 1].color == runs[best].color) {
      runs[best - 1].length += runs[best].length;
      runs.erase(runs.begin() + static_cast<std::ptrdiff_t>(best));
    }
  }
  return true;
}

inline bool is_peakless(const ColorMap& f) {
  return is_peakless(std::span<const int>(f.labels));
}

// |Pi({1..2m},{1..N})| = C(N,m) * m! * (2m-1)!!.
inline BigInt count_pair_maps(int m, int N) {
  if (m < 0 || N < 0) throw InvalidInputError("negative pair or color count");
  return binomial(N, m) * factorial(m) * double_factorial_odd(m);
}

// |Pi_0({1..2m},{1..N})| = C(N,m) * (2m-1)!!. Stated for N >= m >= 1; the
// empty partition (m = 0) is admitted only by explicit opt-in.
inline BigInt count_peakless(int m, int N, bool allow_empty = false) {
  if (m == 0 && allow_empty) {
    if (N < 0) throw InvalidInputError("negative color count");
    return BigInt(1);
  }
  if (m < 1) throw InvalidInputError("pair count m must be >= 1");
  if (N < m)
    throw InvalidInputError("need N >= m, got m = " + std::to_string(m) +
                            ", N = " + std::to_string(N));
  return binomial(N, m) * double_factorial_odd(m);
}

namespace detail {

inline void check_cap(const BigInt& required, std::int64_t cap) {
  if (cap < 1) throw InvalidInputError("enumeration cap must be >= 1");
  if (required > BigInt(cap)) throw CapExceededError(required.to_string(), cap);
}

template <typename Fn>
void pair_map_dfs(int m, int N, std::vector<int>& word,
                  std::vector<int>& count, int open, Fn&& fn) {
  const int len = 2 * m;
  const int pos = static_cast<int>(word.size());
  if (pos == len) {
    fn(std::span<const int>(word));
    return;
  }
  const int remaining = len - pos;
  for (int c = 1; c <= N; ++c) {
    auto& cnt = count[static_cast<std::size_t>(c)];
    if (cnt == 1) {
      cnt = 2;
      word.push_back(c);
      pair_map_dfs(m, N, word, count, open - 1, fn);
      word.pop_back();
      cnt = 1;
    } else if (cnt == 0 && remaining - open >= 2) {
      cnt = 1;
      word.push_back(c);
      pair_map_dfs(m, N, word, count, open + 1, fn);
      word.pop_back();
      cnt = 0;
    }
  }
}

}  // namespace detail

// Streams every element of Pi({1..2m},{1..N}) in ascending lexicographic
// label order.
inline void for_each_pair_map(
    int m, int N, std::int64_t cap,
    const std::function<void(std::span<const int>)>& fn) {
  if (m < 1) throw InvalidInputError("pair count m must be >= 1");
  if (N < m)
    throw InvalidInputError("need N >= m, got m = " + std::to_string(m) +
                            ", N = " + std::to_string(N));
  detail::check_cap(count_pair_maps(m, N), cap);
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(2 * m));
  std::vector<int> count(static_cast<std::size_t>(N) + 1, 0);
  detail::pair_map_dfs(m, N, word, count, 0, fn);
}

inline std::vector<ColorMap> enumerate_pair_maps(
    int m, int N, std::int64_t cap = kDefaultEnumerationCap,
    bool allow_empty = false) {
  if (m == 0 && allow_empty) {
    if (N < 0) throw InvalidInputError("negative color count");
    return {ColorMap({}, N)};
  }
  std::vector<ColorMap> out;
  for_each_pair_map(m, N, cap, [&](std::span<const int> labels) {
    out.emplace_back(std::vector<int>(labels.begin(), labels.end()), N);
  });
  return out;
}

// Rank of one run of the painting algorithm: which m-color subset of {1..N}
// (combinadic index over ascending subsets in lexicographic order) and, per
// step k, which of the 2(m-k+1)-1 adjacent unpainted pairs receives the k-th
// highest color.
struct PaintRank {
  BigInt subset_index;
  std::vector<int> digits;
};

// Subset of size m from {1..N} in ascending order; index enumerates subsets
// in lexicographic order of that representation.
inline std::vector<int> unrank_color_subset(int N, int m,
                                            const BigInt& index) {
  if (m < 0 || N < 0 || m > N)
    throw InvalidInputError("subset unrank needs 0 <= m <= N");
  if (index.is_negative() || index >= binomial(N, m))
    throw InvalidInputError("subset index " + index.to_string() +
                            " out of range [0, C(" + std::to_string(N) + "," +
                            std::to_string(m) + "))");
  std::vector<int> subset;
  subset.reserve(static_cast<std::size_t>(m));
  BigInt rest = index;
  int c = 1;
  for (int k = m; k > 0; ++c) {
    BigInt with_c = binomial(N - c, k - 1);
    if (rest < with_c) {
      subset.push_back(c);
      --k;
    } else {
      rest -= with_c;
    }
  }
  return subset;
}

// One deterministic run of the painting generation: decode the color subset,
// then repeatedly paint the chosen adjacent pair of still-unpainted positions
// with the highest remaining color. The image over all valid ranks is exactly
// the set of peakless pair maps.
inline ColorMap paint_unrank(int m, int N, const PaintRank& rank) {
  if (m < 0 || N < 0 || m > N)
    throw InvalidInputError("painting needs 0 <= m <= N");
  if (static_cast<int>(rank.digits.size()) != m)
    throw InvalidInputError("painting rank needs exactly " +
                            std::to_string(m) + " digits");
  std::vector<int> colors = unrank_color_subset(N, m, rank.subset_index);
  std::sort(colors.rbegin(), colors.rend());  // paint highest color first

  std::vector<int> labels(static_cast<std::size_t>(2 * m), 0);
  std::vector<int> unpainted(static_cast<std::size_t>(2 * m));
  for (int i = 0; i < 2 * m; ++i) unpainted[static_cast<std::size_t>(i)] = i;

  for (int k = 0; k < m; ++k) {
    const int pairs = static_cast<int>(unpainted.size()) - 1;
    const int d = rank.digits[static_cast<std::size_t>(k)];
    if (d < 0 || d >= pairs)
      throw InvalidInputError("painting digit " + std::to_string(d) +
                              " at step " + std::to_string(k + 1) +
                              " out of range [0, " + std::to_string(pairs) +
                              ")");
    const int color = colors[static_cast<std::size_t>(k)];
    labels[static_cast<std::size_t>(unpainted[static_cast<std::size_t>(d)])] =
        color;
    labels[static_cast<std::size_t>(
        unpainted[static_cast<std::size_t>(d) + 1])] = color;
    unpainted.erase(unpainted.begin() + d, unpainted.begin() + d + 2);
  }
  return ColorMap(std::move(labels), N);
}

enum class PeaklessMethod { filter, paint };

// Both methods emit the same set in ascending lexicographic label order.
// filter walks all of Pi and keeps the peakless maps; paint iterates every
// PaintRank (subset index ascending, digits as a mixed-radix counter, most
// significant first) and sorts the output.
inline std::vector<ColorMap> enumerate_peakless(
    int m, int N, PeaklessMethod method,
    std::int64_t cap = kDefaultEnumerationCap, bool allow_empty = false) {
  if (m == 0 && allow_empty) {
    if (N < 0) throw InvalidInputError("negative color count");
    return {ColorMap({}, N)};
  }
  if (m < 1) throw InvalidInputError("pair count m must be >= 1");
  if (N < m)
    throw InvalidInputError("need N >= m, got m = " + std::to_string(m) +
                            ", N = " + std::to_string(N));
  std::vector<ColorMap> out;
  if (method == PeaklessMethod::filter) {
    // the guard inside for_each_pair_map covers the full walk of Pi
    for_each_pair_map(m, N, cap, [&](std::span<const int> labels) {
      if (is_peakless(labels))
        out.emplace_back(std::vector<int>(labels.begin(), labels.end()), N);
    });
    return out;  // DFS already emits in lexicographic order
  }
  detail::check_cap(count_peakless(m, N), cap);
  const std::int64_t subsets = binomial(N, m).to_int64();
  for (std::int64_t si = 0; si < subsets; ++si) {
    std::vector<int> digits(static_cast<std::size_t>(m), 0);
    for (;;) {
      out.push_back(paint_unrank(m, N, PaintRank{BigInt(si), digits}));
      // mixed-radix increment, least significant digit last
      int k = m - 1;
      for (; k >= 0; --k) {
        const int radix = 2 * (m - k) - 1;
        if (++digits[static_cast<std::size_t>(k)] < radix) break;
        digits[static_cast<std::size_t>(k)] = 0;
      }
      if (k < 0) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Class membership of a pair partition: peakless as defined above; no two
// blocks {i,k},{j,l} with i<j<k<l; every block an adjacent pair; monotone =
// non-crossing with every nested inner block colored higher than its
// enclosing block. peakless and monotone coincide; they are computed by
// independent routes.
struct ClassFlags {
  bool peakless = false;
  bool noncrossing = false;
  bool interval = false;
  bool monotone = false;
};

inline ClassFlags classify(const ColorMap& f) {
  struct Span {
    int lo, hi, color;
  };
  std::vector<Span> blocks;
  std::vector<int> first(static_cast<std::size_t>(f.num_colors) + 1, -1);
  for (int i = 0; i < static_cast<int>(f.labels.size()); ++i) {
    const int c = f.labels[static_cast<std::size_t>(i)];
    if (first[static_cast<std::size_t>(c)] < 0)
      first[static_cast<std::size_t>(c)] = i;
    else
      blocks.push_back(Span{first[static_cast<std::size_t>(c)], i, c});
  }

  ClassFlags flags;
  flags.peakless = is_peakless(f);
  flags.noncrossing = true;
  flags.interval = true;
  bool nested_increasing = true;
  for (std::size_t a = 0; a < blocks.size(); ++a) {
    if (blocks[a].hi != blocks[a].lo + 1) flags.interval = false;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (a == b) continue;
      const bool crosses = blocks[a].lo < blocks[b].lo &&
                           blocks[b].lo < blocks[a].hi &&
                           blocks[a].hi < blocks[b].hi;
      if (crosses) flags.noncrossing = false;
      const bool nested = blocks[a].lo < blocks[b].lo &&
                          blocks[b].hi < blocks[a].hi;
      if (nested && blocks[b].color <= blocks[a].color)
        nested_increasing = false;
    }
  }
  flags.monotone = flags.noncrossing && nested_increasing;
  return flags;
}

}  // namespace mclt
