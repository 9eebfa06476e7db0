#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mclt/combinatorics.hpp"
#include "mclt/errors.hpp"
#include "mclt/rational.hpp"

namespace mclt {

// Moments mu_k = phi(a^k), k = 0..max_order, of one variable under the state
// phi. The state is unital, so mu_0 = 1 always; a standardized sequence
// additionally has mu_1 = 0 and mu_2 = 1.
class MomentSequence {
 public:
  explicit MomentSequence(std::vector<Rational> moments)
      : moments_(std::move(moments)) {
    if (moments_.empty() || moments_[0] != Rational(1))
      throw InvalidInputError("moment sequence must start with mu_0 = 1");
  }

  // Symmetric Bernoulli on {-1,+1}: mu_k = 0 for odd k, 1 for even k. The
  // canonical standardized sequence for CLT runs.
  static MomentSequence bernoulli(int max_order) {
    if (max_order < 0) throw InvalidInputError("negative moment order");
    std::vector<Rational> mu(static_cast<std::size_t>(max_order) + 1);
    for (int k = 0; k <= max_order; k += 2) mu[static_cast<std::size_t>(k)] = 1;
    return MomentSequence(std::move(mu));
  }

  int max_order() const { return static_cast<int>(moments_.size()) - 1; }

  const Rational& at(int k) const {
    if (k < 0 || k > max_order())
      throw InvalidInputError("moment order " + std::to_string(k) +
                              " outside [0, " + std::to_string(max_order()) +
                              "]");
    return moments_[static_cast<std::size_t>(k)];
  }

  bool is_centered() const {
    return max_order() >= 1 && moments_[1].is_zero();
  }
  bool is_standardized() const {
    return max_order() >= 2 && moments_[1].is_zero() &&
           moments_[2] == Rational(1);
  }

 private:
  std::vector<Rational> moments_;
};

// A word of variable indices j -> lambda_j. Indices are positive.
using Word = std::vector<int>;

// Maximal run of one color, as (color, power).
struct Block {
  int color = 0;
  int power = 0;
  friend bool operator==(const Block&, const Block&) = default;
};

// Run-length-merged word; adjacent blocks always carry distinct colors.
using BlockWord = std::vector<Block>;

inline BlockWord merge_runs(const Word& w) {
  BlockWord blocks;
  for (int c : w) {
    if (!blocks.empty() && blocks.back().color == c)
      ++blocks.back().power;
    else
      blocks.push_back(Block{c, 1});
  }
  return blocks;
}

inline Word expand_blocks(const BlockWord& blocks) {
  Word w;
  for (const Block& b : blocks)
    w.insert(w.end(), static_cast<std::size_t>(b.power), b.color);
  return w;
}

// Moment lookup per color. Wraps either one shared sequence (the i.i.d.
// case) or an arbitrary color -> sequence mapping.
class MomentLookup {
 public:
  MomentLookup(const MomentSequence& shared)  // NOLINT: implicit by design
      : shared_(&shared) {}
  explicit MomentLookup(std::function<const MomentSequence&(int)> per_color)
      : per_color_(std::move(per_color)) {}

  const MomentSequence& operator()(int color) const {
    return shared_ != nullptr ? *shared_ : per_color_(color);
  }

 private:
  const MomentSequence* shared_ = nullptr;
  std::function<const MomentSequence&(int)> per_color_;
};

namespace detail {

inline void check_word_orders(const Word& w, const MomentLookup& mu) {
  std::map<int, int> multiplicity;
  for (int c : w) {
    if (c < 1)
      throw InvalidInputError("word colors must be positive, got " +
                              std::to_string(c));
    ++multiplicity[c];
  }
  for (const auto& [color, mult] : multiplicity) {
    const int available = mu(color).max_order();
    if (available < mult)
      throw InsufficientMomentsError(color, mult, available);
  }
}

}  // namespace detail

// phi(a_{lambda_1} ... a_{lambda_n}) under monotone independence. Runs of one
// color collapse to powers; as long as more than one block remains, the
// leftmost block of globally maximal color is a peak of the block sequence
// (its neighbors carry distinct, hence smaller, colors), so its moment
// factors out and the block is deleted, re-merging neighbors that now touch.
// The empty word evaluates to 1.
inline Rational reduce_monotone(const Word& w, const MomentLookup& mu) {
  detail::check_word_orders(w, mu);
  BlockWord blocks = merge_runs(w);
  Rational acc(1);
  while (blocks.size() > 1) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < blocks.size(); ++i)
      if (blocks[i].color > blocks[best].color) best = i;
    acc *= mu(blocks[best].color).at(blocks[best].power);
    if (acc.is_zero()) return acc;
    blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(best));
    if (best > 0 && best < blocks.size() &&
        blocks[best - 1].color == blocks[best].color) {
      blocks[best - 1].power += blocks[best].power;
      blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(best));
    }
  }
  if (!blocks.empty())
    acc *= mu(blocks[0].color).at(blocks[0].power);
  return acc;
}

// Contribution of one pair partition to the moment sum: the word reduction
// with every color sharing mu. For standardized mu this is 1 on peakless
// maps and 0 otherwise.
inline Rational pair_partition_weight(const ColorMap& f,
                                      const MomentSequence& mu) {
  return reduce_monotone(f.labels, MomentLookup(mu));
}

// Checks the singleton factorization phi(...a_s...) =
// phi(a_s) * phi(... without s ...) for a color that occurs exactly once at
// position s (1-based). The identity is guaranteed when s is a peak of the
// word (it coincides with the reduction rule) or when phi(a_s) = 0, where
// both sides vanish; for a non-peak singleton with phi(a_s) != 0 it can
// fail: (5,4,5) reduces to phi(a5)^2 phi(a4), not phi(a4) phi(a5^2).
inline bool verify_singleton(const Word& w, int s, const MomentLookup& mu) {
  if (s < 1 || s > static_cast<int>(w.size()))
    throw InvalidInputError("singleton position " + std::to_string(s) +
                            " outside word of length " +
                            std::to_string(w.size()));
  const int color = w[static_cast<std::size_t>(s - 1)];
  for (int i = 0; i < static_cast<int>(w.size()); ++i)
    if (i != s - 1 && w[static_cast<std::size_t>(i)] == color)
      throw InvalidInputError("color " + std::to_string(color) +
                              " at position " + std::to_string(s) +
                              " is not a singleton");
  Word rest;
  rest.reserve(w.size() - 1);
  for (int i = 0; i < static_cast<int>(w.size()); ++i)
    if (i != s - 1) rest.push_back(w[static_cast<std::size_t>(i)]);
  const Rational lhs = reduce_monotone(w, mu);
  const Rational rhs = mu(color).at(1) * reduce_monotone(rest, mu);
  return lhs == rhs;
}

namespace detail {

// Enumerates the order-isomorphism patterns of words of length m: for every
// set partition of positions and every assignment of distinct ranks to its
// blocks, one canonical word surjective onto {1..k}. Words sharing a pattern
// share their reduced moment in the i.i.d. case.
template <typename Fn>
void for_each_surjective_pattern(int m, bool skip_singleton_blocks, Fn&& fn) {
  if (m == 0) {
    fn(Word{}, 0);
    return;
  }
  std::vector<int> rgs(static_cast<std::size_t>(m), 0);
  std::vector<int> block_size(static_cast<std::size_t>(m), 0);
  Word word(static_cast<std::size_t>(m), 0);

  auto emit = [&](int k) {
    if (skip_singleton_blocks)
      for (int b = 0; b < k; ++b)
        if (block_size[static_cast<std::size_t>(b)] == 1) return;
    std::vector<int> rank(static_cast<std::size_t>(k));
    for (int b = 0; b < k; ++b) rank[static_cast<std::size_t>(b)] = b + 1;
    do {
      for (int i = 0; i < m; ++i)
        word[static_cast<std::size_t>(i)] =
            rank[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])];
      fn(word, k);
    } while (std::next_permutation(rank.begin(), rank.end()));
  };

  // Restricted growth strings over positions, depth-first.
  auto dfs = [&](auto&& self, int pos, int used) -> void {
    if (pos == m) {
      emit(used);
      return;
    }
    for (int b = 0; b <= used; ++b) {  // used <= pos < m, so b stays in range
      rgs[static_cast<std::size_t>(pos)] = b;
      ++block_size[static_cast<std::size_t>(b)];
      self(self, pos + 1, b == used ? used + 1 : used);
      --block_size[static_cast<std::size_t>(b)];
    }
  };
  dfs(dfs, 0, 0);
}

}  // namespace detail

// Sum over patterns of (reduced moment) * C(N, #labels). Index k of the
// result holds the total reduced moment of all patterns surjective onto
// {1..k}; combine with binomial(N,k) for any N. Patterns containing a
// singleton color are pruned when mu_1 = 0 (they vanish by the singleton
// condition); the cap counts the patterns actually reduced.
inline std::vector<Rational> pattern_moment_profile(
    int m, const MomentSequence& mu,
    std::int64_t cap = kDefaultEnumerationCap) {
  if (m < 0) throw InvalidInputError("negative moment order");
  if (cap < 1) throw InvalidInputError("enumeration cap must be >= 1");
  if (mu.max_order() < m)
    throw InsufficientMomentsError(1, m, mu.max_order());
  std::vector<Rational> profile(static_cast<std::size_t>(m) + 1);
  const bool prune = m >= 1 && mu.at(1).is_zero();
  std::int64_t reduced = 0;
  detail::for_each_surjective_pattern(m, prune, [&](const Word& w, int k) {
    if (++reduced > cap)
      throw CapExceededError(">" + std::to_string(cap), cap);
    Rational value = reduce_monotone(w, MomentLookup(mu));
    if (!value.is_zero())
      profile[static_cast<std::size_t>(k)] += value;
  });
  return profile;
}

inline Rational sum_moment_from_profile(int N,
                                        std::span<const Rational> profile) {
  if (N < 1) throw InvalidInputError("variable count N must be >= 1");
  Rational total;
  for (std::size_t k = 0; k < profile.size(); ++k)
    if (!profile[k].is_zero())
      total += profile[k] * Rational(binomial(N, static_cast<int>(k)));
  return total;
}

enum class SumMode { pattern_grouping, direct };

// phi(S_N^m) for S_N = a_1 + ... + a_N with i.i.d. moments mu: the exact sum
// of reduce_monotone over all words {1..N}^m. Pattern grouping is the
// default; the direct word sum is a cross-check mode.
inline Rational sum_moment(int N, int m, const MomentSequence& mu,
                           SumMode mode = SumMode::pattern_grouping,
                           std::int64_t cap = kDefaultEnumerationCap) {
  if (N < 1) throw InvalidInputError("variable count N must be >= 1");
  if (m < 0) throw InvalidInputError("negative moment order");
  if (mu.max_order() < m)
    throw InsufficientMomentsError(1, m, mu.max_order());
  if (mode == SumMode::pattern_grouping) {
    const std::vector<Rational> profile = pattern_moment_profile(m, mu, cap);
    return sum_moment_from_profile(N, profile);
  }
  detail::check_cap(BigInt::pow(BigInt(N), static_cast<unsigned>(m)), cap);
  Rational total;
  Word w(static_cast<std::size_t>(m), 1);
  for (;;) {
    total += reduce_monotone(w, MomentLookup(mu));
    int i = m - 1;
    for (; i >= 0; --i) {
      if (++w[static_cast<std::size_t>(i)] <= N) break;
      w[static_cast<std::size_t>(i)] = 1;
    }
    if (i < 0) break;
  }
  return total;
}

// Direct word sum with one moment sequence per variable (the non-i.i.d.
// case; pattern grouping does not apply).
inline Rational sum_moment_per_variable(
    int N, int m, const std::vector<MomentSequence>& per_variable,
    std::int64_t cap = kDefaultEnumerationCap) {
  if (N < 1) throw InvalidInputError("variable count N must be >= 1");
  if (m < 0) throw InvalidInputError("negative moment order");
  if (static_cast<int>(per_variable.size()) != N)
    throw InvalidInputError("need one moment sequence per variable");
  detail::check_cap(BigInt::pow(BigInt(N), static_cast<unsigned>(m)), cap);
  MomentLookup lookup{[&](int color) -> const MomentSequence& {
    return per_variable[static_cast<std::size_t>(color - 1)];
  }};
  Rational total;
  Word w(static_cast<std::size_t>(m), 1);
  for (;;) {
    total += reduce_monotone(w, lookup);
    int i = m - 1;
    for (; i >= 0; --i) {
      if (++w[static_cast<std::size_t>(i)] <= N) break;
      w[static_cast<std::size_t>(i)] = 1;
    }
    if (i < 0) break;
  }
  return total;
}

// phi((S_N / sqrt(N))^m): exact rational for even m, floating value for odd
// m (sqrt(N) is irrational).
struct NormalizedMoment {
  std::optional<Rational> exact;  // set iff m is even
  double value = 0.0;
};

inline NormalizedMoment normalized_moment(
    int N, int m, const MomentSequence& mu,
    SumMode mode = SumMode::pattern_grouping,
    std::int64_t cap = kDefaultEnumerationCap) {
  const Rational sum = sum_moment(N, m, mu, mode, cap);
  NormalizedMoment result;
  if (m % 2 == 0) {
    result.exact = sum / Rational(BigInt::pow(BigInt(N),
                                              static_cast<unsigned>(m / 2)));
    result.value = result.exact->to_double();
  } else {
    result.value = sum.to_double() /
                   std::pow(static_cast<double>(N),
                            static_cast<double>(m) / 2.0);
  }
  return result;
}

// (1/N^m) * sum of pair_partition_weight over Pi({1..length},{1..N}). The
// sum is empty (hence 0) for odd length or for more pairs than colors; the
// empty product case (length 0) is 1. Weights depend only on the order
// pattern of the labels, so the maps grouped per m-color subset share one
// enumeration of Pi({1..2m},{1..m}), scaled by C(N,m).
inline Rational pair_partition_normalized_sum(
    int N, int length, const MomentSequence& mu,
    std::int64_t cap = kDefaultEnumerationCap) {
  if (N < 1) throw InvalidInputError("variable count N must be >= 1");
  if (length < 0) throw InvalidInputError("negative word length");
  if (length == 0) return Rational(1);
  if (length % 2 != 0 || length / 2 > N) return Rational();
  const int m = length / 2;
  if (mu.max_order() < 2)
    throw InsufficientMomentsError(1, 2, mu.max_order());
  Rational per_subset;
  const MomentLookup lookup(mu);
  Word w;
  for_each_pair_map(m, m, cap, [&](std::span<const int> labels) {
    w.assign(labels.begin(), labels.end());
    per_subset += reduce_monotone(w, lookup);
  });
  return per_subset * Rational(binomial(N, m)) /
         Rational(BigInt::pow(BigInt(N), static_cast<unsigned>(m)));
}

enum class IndependenceClass { monotone, commutative, free, boolean };

inline const char* to_string(IndependenceClass cls) {
  switch (cls) {
    case IndependenceClass::monotone: return "monotone";
    case IndependenceClass::commutative: return "commutative";
    case IndependenceClass::free: return "free";
    case IndependenceClass::boolean: return "boolean";
  }
  return "?";
}

// Limit of the normalized m-th moment under each independence type: 0 for
// odd m; for m = 2k, monotone (2k-1)!!/k! (arcsine), commutative (2k-1)!!
// (Gaussian), free Catalan(k) (semicircle), boolean 1 (symmetric Bernoulli).
inline Rational limit_moment(int m, IndependenceClass cls) {
  if (m < 0) throw InvalidInputError("negative moment order");
  if (m % 2 != 0) return Rational();
  const int k = m / 2;
  switch (cls) {
    case IndependenceClass::monotone:
      return Rational(double_factorial_odd(k), factorial(k));
    case IndependenceClass::commutative:
      return Rational(double_factorial_odd(k));
    case IndependenceClass::free:
      return Rational(catalan(k));
    case IndependenceClass::boolean:
      return Rational(1);
  }
  throw InvalidInputError("unknown independence class");
}

}  // namespace mclt
