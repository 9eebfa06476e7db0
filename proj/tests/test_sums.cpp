#include <doctest.h>

#include <vector>

#include "mclt/moment.hpp"

using namespace mclt;

namespace {

Rational rat(std::int64_t n, std::int64_t d) {
  return Rational(BigInt(n), BigInt(d));
}

const MomentSequence& bernoulli8() {
  static const MomentSequence mu = MomentSequence::bernoulli(8);
  return mu;
}

}  // namespace

TEST_CASE("second moment is N, third vanishes") {
  for (int N = 1; N <= 8; ++N) {
    CHECK(sum_moment(N, 2, bernoulli8()) == Rational(N));
    CHECK(sum_moment(N, 2, bernoulli8(), SumMode::direct) == Rational(N));
    CHECK(sum_moment(N, 3, bernoulli8()) == Rational());
  }
}

TEST_CASE("fourth moment closed form 3N(N-1)/2 + N") {
  for (int N = 1; N <= 6; ++N) {
    const Rational expected = rat(3 * N * (N - 1), 2) + Rational(N);
    CHECK(sum_moment(N, 4, bernoulli8()) == expected);
    CHECK(sum_moment(N, 4, bernoulli8(), SumMode::direct) == expected);
  }
}

TEST_CASE("sixth and eighth moment values frozen from the direct word sum") {
  // values computed by the N^m odometer before pattern grouping was wired in
  const std::vector<std::int64_t> sixth = {1, 13, 51, 130, 265};
  for (int N = 1; N <= 5; ++N)
    CHECK(sum_moment(N, 6, bernoulli8()) == Rational(sixth[N - 1]));
  const std::vector<std::int64_t> eighth = {1, 34, 221, 789};
  for (int N = 1; N <= 4; ++N)
    CHECK(sum_moment(N, 8, bernoulli8()) == Rational(eighth[N - 1]));
}

TEST_CASE("zeroth moment and error paths") {
  CHECK(sum_moment(3, 0, bernoulli8()) == Rational(1));
  CHECK(sum_moment(3, 0, bernoulli8(), SumMode::direct) == Rational(1));
  CHECK_THROWS_AS(sum_moment(0, 2, bernoulli8()), InvalidInputError);
  CHECK_THROWS_AS(sum_moment(2, -1, bernoulli8()), InvalidInputError);
  CHECK_THROWS_AS(sum_moment(2, 9, bernoulli8()), InsufficientMomentsError);
  CHECK_THROWS_AS(sum_moment(10, 8, bernoulli8(), SumMode::direct, 1000),
                  CapExceededError);
}

TEST_CASE("pattern grouping equals the direct sum for a skewed sequence") {
  const MomentSequence mu({Rational(1), rat(1, 2), Rational(2), rat(-1, 3),
                           Rational(1)});
  for (int N = 1; N <= 3; ++N)
    for (int m = 0; m <= 4; ++m)
      CHECK(sum_moment(N, m, mu) == sum_moment(N, m, mu, SumMode::direct));
}

TEST_CASE("profile reuse matches one-shot sums") {
  const auto profile = pattern_moment_profile(6, bernoulli8());
  for (int N : {1, 4, 9, 25})
    CHECK(sum_moment_from_profile(N, profile) ==
          sum_moment(N, 6, bernoulli8()));
}

TEST_CASE("per-variable direct sums") {
  const MomentSequence mu1({Rational(1), rat(1, 2), rat(1, 3)});
  const MomentSequence mu2({Rational(1), Rational(2), Rational(5)});
  // words over two variables of length 2:
  // (1,1) -> mu1(2); (2,2) -> mu2(2); (1,2),(2,1) -> mu2(1)*mu1(1)
  const Rational expected =
      rat(1, 3) + Rational(5) + Rational(2) * (Rational(2) * rat(1, 2));
  CHECK(sum_moment_per_variable(2, 2, {mu1, mu2}) == expected);
  CHECK_THROWS_AS(sum_moment_per_variable(3, 2, {mu1, mu2}),
                  InvalidInputError);
  // i.i.d. special case agrees with the shared-sequence engine
  for (int m = 0; m <= 4; ++m)
    CHECK(sum_moment_per_variable(
              3, m, {bernoulli8(), bernoulli8(), bernoulli8()}) ==
          sum_moment(3, m, bernoulli8()));
}

TEST_CASE("normalized moments") {
  CHECK(*normalized_moment(7, 2, bernoulli8()).exact == Rational(1));
  CHECK(*normalized_moment(10, 4, bernoulli8()).exact == rat(29, 20));
  CHECK(*normalized_moment(1, 4, bernoulli8()).exact == Rational(1));
  CHECK(normalized_moment(10, 4, bernoulli8()).value ==
        doctest::Approx(1.45));
  const NormalizedMoment odd = normalized_moment(4, 3, bernoulli8());
  CHECK(!odd.exact.has_value());
  CHECK(odd.value == 0.0);

  // non-centered odd case exercises the sqrt(N) normalization:
  // phi(S_4) = 4 * (1/2), divided by sqrt(4)
  const MomentSequence uncentered({Rational(1), rat(1, 2)});
  const NormalizedMoment first = normalized_moment(4, 1, uncentered);
  CHECK(!first.exact.has_value());
  CHECK(first.value == doctest::Approx(1.0));
}

TEST_CASE("pair partition normalized sums") {
  CHECK(pair_partition_normalized_sum(2, 4, bernoulli8()) == rat(3, 4));
  CHECK(pair_partition_normalized_sum(3, 4, bernoulli8()) == Rational(1));
  CHECK(pair_partition_normalized_sum(1, 2, bernoulli8()) == Rational(1));
  CHECK(pair_partition_normalized_sum(5, 0, bernoulli8()) == Rational(1));
  // empty index sets: odd length, or more pairs than colors
  CHECK(pair_partition_normalized_sum(5, 3, bernoulli8()) == Rational());
  CHECK(pair_partition_normalized_sum(1, 4, bernoulli8()) == Rational());
  // with standardized moments this is count_peakless(m, N) / N^m
  for (int N = 3; N <= 5; ++N)
    CHECK(pair_partition_normalized_sum(N, 6, bernoulli8()) ==
          Rational(count_peakless(3, N), BigInt::pow(BigInt(N), 3)));
  CHECK_THROWS_AS(pair_partition_normalized_sum(40, 8, bernoulli8(), 1000),
                  CapExceededError);
}

TEST_CASE("fourth-moment gap between engine and pair sum is exactly 1/N") {
  for (int N : {2, 5, 10, 40}) {
    const Rational normalized = *normalized_moment(N, 4, bernoulli8()).exact;
    const Rational pair_sum = pair_partition_normalized_sum(N, 4, bernoulli8());
    CHECK((normalized - pair_sum).abs() == Rational(BigInt(1), BigInt(N)));
  }
}
