#include <doctest.h>

#include <set>
#include <vector>

#include "mclt/combinatorics.hpp"

using namespace mclt;

TEST_CASE("color subset unranking") {
  CHECK(unrank_color_subset(2, 2, BigInt(0)) == std::vector<int>{1, 2});
  CHECK(unrank_color_subset(5, 3, BigInt(0)) == std::vector<int>{1, 2, 3});

  std::set<std::vector<int>> seen;
  std::vector<int> prev;
  for (int i = 0; i < 10; ++i) {  // C(5,3) = 10
    const auto subset = unrank_color_subset(5, 3, BigInt(i));
    CHECK(subset.size() == 3);
    CHECK(seen.insert(subset).second);
    if (i > 0) CHECK(prev < subset);  // lexicographic order of ascending tuples
    prev = subset;
  }
  CHECK_THROWS_AS(unrank_color_subset(5, 3, BigInt(10)), InvalidInputError);
  CHECK_THROWS_AS(unrank_color_subset(5, 3, BigInt(-1)), InvalidInputError);
  CHECK_THROWS_AS(unrank_color_subset(2, 3, BigInt(0)), InvalidInputError);
}

TEST_CASE("painting single ranks") {
  CHECK(paint_unrank(1, 1, PaintRank{BigInt(0), {0}}).labels ==
        std::vector<int>{1, 1});
  // highest color 2 on the middle pair, color 1 on the remaining outer pair
  CHECK(paint_unrank(2, 2, PaintRank{BigInt(0), {1, 0}}).labels ==
        std::vector<int>{1, 2, 2, 1});
  CHECK(paint_unrank(2, 2, PaintRank{BigInt(0), {0, 0}}).labels ==
        std::vector<int>{2, 2, 1, 1});
  CHECK(paint_unrank(2, 2, PaintRank{BigInt(0), {2, 0}}).labels ==
        std::vector<int>{1, 1, 2, 2});

  CHECK_THROWS_AS(paint_unrank(2, 2, PaintRank{BigInt(0), {3, 0}}),
                  InvalidInputError);
  CHECK_THROWS_AS(paint_unrank(2, 2, PaintRank{BigInt(0), {-1, 0}}),
                  InvalidInputError);
  CHECK_THROWS_AS(paint_unrank(2, 2, PaintRank{BigInt(1), {0, 0}}),
                  InvalidInputError);
  CHECK_THROWS_AS(paint_unrank(2, 2, PaintRank{BigInt(0), {0}}),
                  InvalidInputError);
}

TEST_CASE("painting digits use adjacency among unpainted positions") {
  // paint 3 on (3,4), then 2 on (2,5): positions 2 and 5 are adjacent once
  // 3 and 4 are painted; finally 1 on (1,6)
  CHECK(paint_unrank(3, 3, PaintRank{BigInt(0), {2, 1, 0}}).labels ==
        std::vector<int>{1, 2, 3, 3, 2, 1});
}

TEST_CASE("painting is a bijection onto the peakless maps") {
  for (int m = 1; m <= 4; ++m)
    for (int N = m; N <= 5; ++N) {
      const auto painted = enumerate_peakless(m, N, PeaklessMethod::paint);
      for (std::size_t i = 1; i < painted.size(); ++i)
        CHECK(painted[i - 1] < painted[i]);  // sorted with no duplicates
      CHECK(painted == enumerate_peakless(m, N, PeaklessMethod::filter));
      CHECK(BigInt(static_cast<std::int64_t>(painted.size())) ==
            count_peakless(m, N));
    }
}

TEST_CASE("every painted map is peakless") {
  for (const auto& f : enumerate_peakless(4, 5, PeaklessMethod::paint))
    CHECK(is_peakless(f));
}
