#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numeric>

#include "fejer/discrepancy.hpp"
#include "fejer/kernel.hpp"
#include "fejer/transform.hpp"
#include "test_util.hpp"

using namespace fejer;
using fejer::test::max_abs_difference;
using fejer::test::random_signal;
using fejer::test::subset_from_mask;

TEST_CASE("subset indicator validates members") {
  CHECK_THROWS_AS(SubsetIndicator(GroupSize(4), {0, 4}), ParameterError);
  CHECK_THROWS_AS(SubsetIndicator(GroupSize(4), {1, 1}), ParameterError);
  const SubsetIndicator unsorted(GroupSize(5), {3, 0, 2});
  CHECK(unsorted.members() == std::vector<std::size_t>{0, 2, 3});
  CHECK(unsorted.size() == 3);

  const SubsetIndicator empty(GroupSize(5), {});
  CHECK(empty.size() == 0);
  CHECK(empty.complement().size() == 5);
  CHECK(unsorted.complement().members() == std::vector<std::size_t>{1, 4});
}

TEST_CASE("centered indicator") {
  SECTION("empty and full subsets center to zero") {
    CHECK(linf_norm(mean_zero_indicator(SubsetIndicator(GroupSize(6), {}))) == 0.0);
    const SubsetIndicator full(GroupSize(4), {0, 1, 2, 3});
    CHECK(linf_norm(mean_zero_indicator(full)) == 0.0);
  }

  SECTION("frozen half-density example") {
    const Signal f = mean_zero_indicator(SubsetIndicator(GroupSize(4), {0, 2}));
    const Signal expected(GroupSize(4),
                          {cplx{0.5, 0}, cplx{-0.5, 0}, cplx{0.5, 0}, cplx{-0.5, 0}});
    CHECK(max_abs_difference(f, expected) == 0.0);
  }

  SECTION("mean zero for every subset of small groups") {
    for (std::size_t size = 2; size <= 10; ++size) {
      const GroupSize group(size);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << size); ++mask) {
        const Signal f = mean_zero_indicator(subset_from_mask(group, mask));
        CHECK(std::abs(mean(f)) <= 1e-12);
        CHECK(std::abs(dft(f)[0]) <= 1e-10);
      }
    }
  }
}

TEST_CASE("centered indicator norm closed form") {
  CHECK(mean_zero_indicator_l2_squared(0, GroupSize(9)) == 0.0);
  CHECK(mean_zero_indicator_l2_squared(9, GroupSize(9)) == 0.0);
  CHECK_THAT(mean_zero_indicator_l2_squared(50, GroupSize(101)),
             Catch::Matchers::WithinRel(2550.0 / 101.0, 1e-15));
  CHECK_THAT(mean_zero_indicator_l2_squared(2, GroupSize(4)),
             Catch::Matchers::WithinAbs(1.0, 1e-15));
  CHECK_THROWS_AS(mean_zero_indicator_l2_squared(5, GroupSize(4)), ParameterError);

  // never exceeds N/4
  for (std::size_t size : {2u, 7u, 101u}) {
    for (std::size_t count = 0; count <= size; ++count) {
      CHECK(mean_zero_indicator_l2_squared(count, GroupSize(size)) <=
            static_cast<double>(size) / 4.0 + 1e-12);
    }
  }

  // exhaustive against the direct sum for N <= 12
  for (std::size_t size = 2; size <= 12; ++size) {
    const GroupSize group(size);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << size); ++mask) {
      const SubsetIndicator subset = subset_from_mask(group, mask);
      const double direct = std::pow(l2_norm(mean_zero_indicator(subset)), 2);
      const double closed = mean_zero_indicator_l2_squared(subset.size(), group);
      CHECK(std::abs(direct - closed) <= 1e-10 * (1.0 + closed));
    }
  }

  // random subsets of a large group
  Xoshiro256ss gen(31337);
  const GroupSize big(4096);
  for (int rep = 0; rep < 5; ++rep) {
    const std::size_t count = static_cast<std::size_t>(gen.next_below(4097));
    std::vector<std::size_t> members;
    for (std::size_t n = 0; n < 4096; ++n) {
      if (gen.next_below(4096) < count) members.push_back(n);
    }
    const SubsetIndicator subset(big, std::move(members));
    const double direct = std::pow(l2_norm(mean_zero_indicator(subset)), 2);
    const double closed = mean_zero_indicator_l2_squared(subset.size(), big);
    CHECK(std::abs(direct - closed) <= 1e-10 * (1.0 + closed));
  }
}

TEST_CASE("smoothed deviation") {
  SECTION("empty subset smooths to zero") {
    const Signal g = smoothed_deviation(SubsetIndicator(GroupSize(8), {}), 3);
    CHECK(linf_norm(g) == 0.0);
  }

  SECTION("radius one is the identity") {
    const SubsetIndicator subset(GroupSize(7), {1, 2, 5});
    const Signal g = smoothed_deviation(subset, 1);
    CHECK(max_abs_difference(g, mean_zero_indicator(subset)) <= 1e-15);
  }

  SECTION("alternating half-density subset is annihilated at radius two") {
    // f_{0,2} = (1/2,-1/2,1/2,-1/2) lives on frequency 2, where the radius-2
    // multiplier vanishes, so the smoothed deviation is identically zero.
    const Signal g = smoothed_deviation(SubsetIndicator(GroupSize(4), {0, 2}), 2);
    CHECK(linf_norm(g) <= 1e-15);

    // oracle: direct convolution of the centered indicator with the kernel
    const Signal direct =
        convolve_direct(mean_zero_indicator(SubsetIndicator(GroupSize(4), {0, 2})),
                        triangular_kernel(KernelSpec(GroupSize(4), 2)));
    CHECK(max_abs_difference(g, direct) <= 1e-15);
  }

  SECTION("frozen adjacent-pair case") {
    const Signal g = smoothed_deviation(SubsetIndicator(GroupSize(4), {0, 1}), 2);
    const Signal expected(GroupSize(4),
                          {cplx{0.25, 0}, cplx{0.25, 0}, cplx{-0.25, 0}, cplx{-0.25, 0}});
    CHECK(max_abs_difference(g, expected) <= 1e-15);
  }

  SECTION("radius out of range is rejected") {
    CHECK_THROWS_AS(smoothed_deviation(SubsetIndicator(GroupSize(8), {1}), 5),
                    ParameterError);
    CHECK_THROWS_AS(smoothed_deviation(SubsetIndicator(GroupSize(8), {1}), 0),
                    ParameterError);
  }
}

TEST_CASE("l2 to sup bound") {
  CHECK_THAT(l2_to_linf_bound(1, 1.0),
             Catch::Matchers::WithinAbs(std::sqrt(5.0 / 3.0), 1e-15));
  CHECK_THAT(l2_to_linf_bound(4, 2.0),
             Catch::Matchers::WithinAbs(std::sqrt(5.0 / 3.0), 1e-15));
  CHECK(l2_to_linf_bound(17, 0.0) == 0.0);
  CHECK_THROWS_AS(l2_to_linf_bound(0, 1.0), ParameterError);
}

TEST_CASE("worst-case bound") {
  // the dimensionless worst-case constant itself
  CHECK_THAT(std::sqrt(5.0 / 12.0), Catch::Matchers::WithinAbs(0.645497224368, 1e-12));
  CHECK_THAT(worst_case_bound(GroupSize(4), 1),
             Catch::Matchers::WithinAbs(std::sqrt(5.0 / 3.0), 1e-15));
  CHECK_THAT(worst_case_bound(GroupSize(101), 20),
             Catch::Matchers::WithinAbs(1.45057459879, 1e-10));
  CHECK_THROWS_AS(worst_case_bound(GroupSize(10), 6), ParameterError);

  // equals the l2->sup bound evaluated at the maximal norm sqrt(N)/2
  for (std::size_t size : {5u, 32u, 101u}) {
    const GroupSize group(size);
    for (long radius = 1; radius <= static_cast<long>(group.half()); ++radius) {
      CHECK_THAT(worst_case_bound(group, radius),
                 Catch::Matchers::WithinRel(
                     l2_to_linf_bound(radius, std::sqrt(static_cast<double>(size)) / 2.0),
                     1e-14));
    }
  }

  // strictly decreasing in r
  for (long radius = 1; radius < 50; ++radius) {
    CHECK(worst_case_bound(GroupSize(101), radius + 1) <
          worst_case_bound(GroupSize(101), radius));
  }
}

TEST_CASE("sup bound holds for random signals and the sharper norm product") {
  Xoshiro256ss gen(2718);
  for (int rep = 0; rep < 60; ++rep) {
    const std::size_t size = 2 + static_cast<std::size_t>(gen.next_below(127));
    const GroupSize group(size);
    const long radius =
        1 + static_cast<long>(gen.next_below(static_cast<std::uint64_t>(group.half())));
    const Signal f = random_signal(gen, group);
    const Signal kernel = triangular_kernel(KernelSpec(group, radius));
    const double sup = linf_norm(convolve(f, kernel));
    const double norm_product = l2_norm(f) * l2_norm(kernel);
    CHECK(sup <= norm_product * (1.0 + 1e-10));
    CHECK(norm_product <= l2_to_linf_bound(radius, l2_norm(f)) * (1.0 + 1e-10));
  }
}

TEST_CASE("bound report") {
  SECTION("empty subset reports zeros") {
    const BoundReport report = evaluate_bounds(SubsetIndicator(GroupSize(9), {}), 4);
    CHECK(report.observed_sup == 0.0);
    CHECK(report.effective_constant == 0.0);
    CHECK(report.theorem_bound == 0.0);
    CHECK(report.corollary_bound > 0.0);
  }

  SECTION("radius one reports the sup of the centered indicator") {
    const SubsetIndicator subset(GroupSize(5), {0, 3});
    const BoundReport report = evaluate_bounds(subset, 1);
    CHECK_THAT(report.observed_sup, Catch::Matchers::WithinAbs(3.0 / 5.0, 1e-15));
  }

  SECTION("annihilated alternating subset reports zero") {
    const BoundReport report = evaluate_bounds(SubsetIndicator(GroupSize(4), {0, 2}), 2);
    CHECK(report.observed_sup <= 1e-15);
    CHECK(report.effective_constant <= 1e-15);
  }

  SECTION("ordering invariant over exhaustive small subsets") {
    for (std::size_t size = 2; size <= 10; ++size) {
      const GroupSize group(size);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << size); ++mask) {
        const SubsetIndicator subset = subset_from_mask(group, mask);
        for (long radius = 1; radius <= static_cast<long>(group.half()); ++radius) {
          const BoundReport report = evaluate_bounds(subset, radius);
          CHECK(report.observed_sup <= report.theorem_bound * (1.0 + 1e-10));
          CHECK(report.theorem_bound <= report.corollary_bound * (1.0 + 1e-10));
        }
      }
    }
  }

  SECTION("complement symmetry") {
    const SubsetIndicator subset(GroupSize(11), {0, 2, 3, 7});
    for (long radius = 1; radius <= 5; ++radius) {
      const Signal g = smoothed_deviation(subset, radius);
      const Signal gc = smoothed_deviation(subset.complement(), radius);
      double worst = 0.0;
      for (std::size_t n = 0; n < g.size(); ++n) {
        worst = std::max(worst, std::abs(g[n] + gc[n]));
      }
      CHECK(worst <= 1e-12);
      CHECK(std::abs(evaluate_bounds(subset, radius).effective_constant -
                     evaluate_bounds(subset.complement(), radius).effective_constant) <=
            1e-12);
    }
  }

  SECTION("translation equivariance") {
    const GroupSize group(12);
    const SubsetIndicator subset(group, {0, 1, 5, 8});
    for (std::size_t shift : {1u, 4u, 11u}) {
      std::vector<std::size_t> moved;
      for (std::size_t member : subset.members()) {
        moved.push_back((member + shift) % group.value());
      }
      const SubsetIndicator shifted(group, std::move(moved));
      const Signal g = smoothed_deviation(subset, 3);
      const Signal gs = smoothed_deviation(shifted, 3);
      double worst = 0.0;
      for (std::size_t n = 0; n < group.value(); ++n) {
        worst = std::max(worst, std::abs(gs[(n + shift) % group.value()] - g[n]));
      }
      CHECK(worst <= 1e-12);
      CHECK(std::abs(evaluate_bounds(subset, 3).effective_constant -
                     evaluate_bounds(shifted, 3).effective_constant) <= 1e-12);
    }
  }
}

TEST_CASE("interval discrepancy") {
  CHECK(interval_discrepancy(SubsetIndicator(GroupSize(6), {}), 3) == 0.0);
  CHECK_THAT(interval_discrepancy(SubsetIndicator(GroupSize(4), {0, 2}), 1),
             Catch::Matchers::WithinAbs(0.5, 1e-15));
  CHECK_THAT(interval_discrepancy(SubsetIndicator(GroupSize(4), {0, 1}), 2),
             Catch::Matchers::WithinAbs(1.0, 1e-15));
  CHECK_THROWS_AS(interval_discrepancy(SubsetIndicator(GroupSize(4), {0}), 0),
                  ParameterError);
  CHECK_THROWS_AS(interval_discrepancy(SubsetIndicator(GroupSize(4), {0}), 5),
                  ParameterError);

  SECTION("matches a naive per-interval recount") {
    const GroupSize group(13);
    const SubsetIndicator subset(group, {0, 1, 4, 9, 11});
    const std::size_t max_len = 7;
    double naive = 0.0;
    const double density = 5.0 / 13.0;
    for (std::size_t len = 1; len <= max_len; ++len) {
      for (std::size_t start = 0; start < 13; ++start) {
        std::size_t hits = 0;
        for (std::size_t offset = 0; offset < len; ++offset) {
          const std::size_t point = (start + offset) % 13;
          for (std::size_t member : subset.members()) {
            if (member == point) ++hits;
          }
        }
        naive = std::max(naive,
                         std::abs(static_cast<double>(hits) -
                                  density * static_cast<double>(len)));
      }
    }
    CHECK_THAT(interval_discrepancy(subset, max_len),
               Catch::Matchers::WithinAbs(naive, 1e-15));
  }
}
