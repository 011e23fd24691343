#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "corona/closed_form.hpp"
#include "corona/oracle.hpp"
#include "corona/rcg.hpp"
#include "corona/spectra.hpp"
#include "gtest/gtest.h"

namespace corona {
namespace {

using spectra::SpectrumKind;

TEST(ChildPairTest, Examples) {
  // parent 0 of the Laplacian: x^2 - (q+1)x = 0
  auto lap = spectra::child_pair(0.0, 2, SpectrumKind::laplacian);
  EXPECT_DOUBLE_EQ(lap.plus_child, 3.0);
  EXPECT_DOUBLE_EQ(lap.minus_child, 0.0);

  // parent 2 of K_2: x^2 - 5x + 2
  lap = spectra::child_pair(2.0, 2, SpectrumKind::laplacian);
  EXPECT_NEAR(lap.plus_child, (5.0 + std::sqrt(17.0)) / 2, 1e-14);
  EXPECT_NEAR(lap.minus_child, (5.0 - std::sqrt(17.0)) / 2, 1e-14);

  // adjacency parent 2 with q = 2: x^2 - 3x = 0
  auto adj = spectra::child_pair(2.0, 2, SpectrumKind::adjacency);
  EXPECT_DOUBLE_EQ(adj.plus_child, 3.0);
  EXPECT_DOUBLE_EQ(adj.minus_child, 0.0);

  // adjacency parent 1 with q = 2: x^2 - 2x - 1 = 0
  adj = spectra::child_pair(1.0, 2, SpectrumKind::adjacency);
  EXPECT_NEAR(adj.plus_child, 1.0 + std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(adj.minus_child, 1.0 - std::sqrt(2.0), 1e-14);
}

TEST(ChildPairTest, VietaOnRandomParents) {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> lap_parent(0.0, 50.0), adj_parent(-20.0, 50.0);
  for (int i = 0; i < 2000; ++i) {
    const std::uint32_t q = 2 + rng() % 9;
    for (auto kind : {SpectrumKind::laplacian, SpectrumKind::adjacency}) {
      const double x = kind == SpectrumKind::laplacian ? lap_parent(rng) : adj_parent(rng);
      const auto pair = spectra::child_pair(x, q, kind);
      const double s = kind == SpectrumKind::laplacian ? x + q + 1 : x + q - 1;
      const double c = kind == SpectrumKind::laplacian ? x : x * (q - 1.0) - q;
      const double scale = std::max(1.0, std::abs(s) * std::max(1.0, std::abs(s)));
      ASSERT_NEAR(pair.plus_child + pair.minus_child, s, 1e-12 * std::max(1.0, std::abs(s)));
      ASSERT_NEAR(pair.plus_child * pair.minus_child, c, 1e-12 * scale);
      ASSERT_GE(pair.plus_child, pair.minus_child);
    }
  }
}

TEST(ChildPairTest, TinyLaplacianParentKeepsPrecision) {
  const auto pair = spectra::child_pair(1e-12, 3, SpectrumKind::laplacian);
  EXPECT_NEAR(pair.plus_child * pair.minus_child, 1e-12, 1e-26);
  EXPECT_GT(pair.minus_child, 0.0);
}

TEST(ChildPairTest, NegativeLaplacianParentIsRejected) {
  EXPECT_THROW(spectra::child_pair(-0.5, 2, SpectrumKind::laplacian), domain_error);
  EXPECT_NO_THROW(spectra::child_pair(-0.5, 2, SpectrumKind::adjacency));
}

TEST(SpectrumTest, CliqueExamples) {
  for (std::uint32_t q = 2; q <= 6; ++q) {
    const auto a = spectra::adjacency_spectrum(RcgParams(q, 0));
    EXPECT_EQ(a.multiplicity_of(q - 1.0), 1u);
    EXPECT_EQ(a.multiplicity_of(-1.0), q - 1);
    const auto l = spectra::laplacian_spectrum(RcgParams(q, 0));
    EXPECT_EQ(l.multiplicity_of(0.0), 1u);
    EXPECT_EQ(l.multiplicity_of(double(q)), q - 1);
  }
}

TEST(SpectrumTest, C21Laplacian) {
  const auto l = spectra::laplacian_spectrum(RcgParams(2, 1));
  ASSERT_EQ(l.entries.size(), 4u);
  EXPECT_NEAR(l.entries[0].value, (5.0 + std::sqrt(17.0)) / 2, 1e-12);
  EXPECT_EQ(l.entries[0].multiplicity, 1u);
  EXPECT_DOUBLE_EQ(l.entries[1].value, 3.0);
  EXPECT_EQ(l.entries[1].multiplicity, 3u);
  EXPECT_NEAR(l.entries[2].value, (5.0 - std::sqrt(17.0)) / 2, 1e-12);
  EXPECT_EQ(l.entries[3].value, 0.0);
  EXPECT_EQ(l.entries[3].multiplicity, 1u);
}

TEST(SpectrumTest, MatchesJacobiOnExplicitGraphs) {
  std::vector<RcgParams> grid;
  for (std::uint32_t q = 2; q <= 4; ++q)
    for (std::uint32_t g = 0; g <= 2; ++g) grid.emplace_back(q, g);
  grid.emplace_back(2, 3);
  grid.emplace_back(2, 4);
  grid.emplace_back(2, 5);

  for (const auto& p : grid) {
    const auto cg = build_rcg(p);
    const auto adj = spectra::adjacency_spectrum(p).expanded();
    const auto lap = spectra::laplacian_spectrum(p).expanded();
    const auto adj_dense = oracle::adjacency_eigenvalues(cg.graph);
    const auto lap_dense = oracle::laplacian_eigenvalues(cg.graph);
    ASSERT_EQ(adj.size(), adj_dense.size());
    ASSERT_EQ(lap.size(), lap_dense.size());
    for (std::size_t i = 0; i < adj.size(); ++i) {
      ASSERT_NEAR(adj[i], adj_dense[i], 1e-8) << p.q() << "," << p.g() << " adjacency #" << i;
      ASSERT_NEAR(lap[i], lap_dense[i], 1e-8) << p.q() << "," << p.g() << " laplacian #" << i;
    }
  }
}

TEST(SpectrumTest, TracesAndMultiplicities) {
  for (std::uint32_t q = 2; q <= 5; ++q) {
    for (std::uint32_t g = 0; g <= 6; ++g) {
      const RcgParams p(q, g);
      const auto adj = spectra::adjacency_spectrum(p);
      const auto lap = spectra::laplacian_spectrum(p);
      const double n = rcg_order_u64(p);
      const double m = closed::size(p).value->convert_to<double>();
      ASSERT_EQ(adj.total_multiplicity(), rcg_order_u64(p));
      ASSERT_EQ(lap.total_multiplicity(), rcg_order_u64(p));

      EXPECT_NEAR(adj.power_sum(1), 0.0, 1e-9 * n);
      EXPECT_NEAR(adj.power_sum(2), 2 * m, 1e-9 * m);
      EXPECT_NEAR(lap.power_sum(1), 2 * m, 1e-9 * m);
      EXPECT_EQ(lap.multiplicity_of(0.0), 1u);

      // (q-1) N(g-1) new copies of q+1, plus the child of the zero eigenvalue
      if (g >= 1) {
        const std::uint64_t expected = (q - 1) * rcg_order_u64(p.with_generation(g - 1)) + 1;
        EXPECT_EQ(lap.multiplicity_of(q + 1.0), expected) << q << "," << g;
      }
    }
  }
}

TEST(SpectrumTest, EigenvalueBudget) {
  EXPECT_THROW(spectra::adjacency_spectrum(RcgParams(2, 12), {1000}), resource_limit_error);
  EXPECT_NO_THROW(spectra::laplacian_spectrum(RcgParams(2, 5), {486}));
}

TEST(NonzeroProductTest, Examples) {
  EXPECT_EQ(*spectra::nonzero_product(RcgParams(2, 0)).value, 2);
  EXPECT_EQ(*spectra::nonzero_product(RcgParams(3, 0)).value, 9);
  EXPECT_EQ(*spectra::nonzero_product(RcgParams(2, 1)).value, 54);
  EXPECT_EQ(*spectra::nonzero_product(RcgParams(2, 2)).value, 118098);
}

TEST(NonzeroProductTest, RecursionEqualsClosedForm) {
  for (std::uint32_t q = 2; q <= 5; ++q) {
    for (std::uint32_t g = 0; g <= 6; ++g) {
      const RcgParams p(q, g);
      EXPECT_EQ(spectra::detail::product_and_sum(p, false).product, *spectra::nonzero_product_closed(p).value);
      EXPECT_EQ(spectra::detail::product_and_sum(p, true).sum, *spectra::spectral_sum_closed(p).value);
    }
  }
}

TEST(NonzeroProductTest, MatchesFloatingProductOfSpectrum) {
  for (std::uint32_t q = 2; q <= 4; ++q) {
    for (std::uint32_t g = 0; g <= 3; ++g) {
      const RcgParams p(q, g);
      if (rcg_order_u64(p) > 100) continue;
      double log_product = 0;
      for (double x : oracle::laplacian_eigenvalues(build_rcg(p).graph))
        if (std::abs(x) > 1e-8) log_product += std::log10(x);
      EXPECT_NEAR(log_product, log10_of(*spectra::nonzero_product(p).value), 1e-9 * std::max(1.0, log_product));
    }
  }
}

TEST(SpectralSumTest, Examples) {
  EXPECT_EQ(*spectra::spectral_sum(RcgParams(2, 0)).value, 1);
  EXPECT_EQ(*spectra::spectral_sum(RcgParams(3, 0)).value, 6);
  EXPECT_EQ(*spectra::spectral_sum(RcgParams(2, 1)).value, 189);
  EXPECT_EQ(*spectra::spectral_sum(RcgParams(2, 2)).value, 2106081);
}

TEST(SpectralSumTest, Log10Estimates) {
  for (std::uint32_t q = 2; q <= 5; ++q) {
    for (std::uint32_t g = 0; g <= 6; ++g) {
      const RcgParams p(q, g);
      EXPECT_NEAR(spectra::nonzero_product_log10(p), log10_of(*spectra::nonzero_product(p).value), 1e-9);
      EXPECT_NEAR(spectra::spectral_sum_log10(p), log10_of(*spectra::spectral_sum(p).value), 1e-9);
    }
  }
}

TEST(SpectralSpanningTreesTest, Examples) {
  EXPECT_EQ(*spectra::spanning_trees(RcgParams(2, 1)).value, 9);
  EXPECT_EQ(*spectra::spanning_trees(RcgParams(3, 0)).value, 3);
  EXPECT_EQ(*spectra::spanning_trees(RcgParams(3, 1)).value, 12288);
}

TEST(SpectralSpanningTreesTest, EqualsClosedForm) {
  for (std::uint32_t q = 2; q <= 6; ++q) {
    for (std::uint32_t g = 0; g <= 7; ++g) {
      const auto spectral = spectra::spanning_trees(RcgParams(q, g));
      const auto closed_count = closed::spanning_trees(RcgParams(q, g));
      ASSERT_EQ(spectral.exact(), closed_count.exact()) << q << "," << g;
      if (spectral.exact()) {
        EXPECT_EQ(*spectral.value, *closed_count.value) << q << "," << g;
      }
      EXPECT_NEAR(spectral.log10, closed_count.log10, 1e-9 * closed_count.log10);
    }
  }
}

TEST(SpectralSpanningTreesTest, DigitCap) {
  const auto capped = spectra::spanning_trees(RcgParams(3, 12), Limits{500});
  EXPECT_FALSE(capped.exact());
  EXPECT_NEAR(capped.log10, closed::spanning_trees_log10(RcgParams(3, 12)), 1e-6);
}

TEST(SpectralKirchhoffTest, Examples) {
  EXPECT_EQ(spectra::kirchhoff(RcgParams(2, 1)), Rational(21));
  EXPECT_EQ(spectra::kirchhoff(RcgParams(2, 2)), Rational(321));
  for (std::uint32_t q = 2; q <= 7; ++q) EXPECT_EQ(spectra::kirchhoff(RcgParams(q, 0)), Rational(q - 1));
}

TEST(SpectralKirchhoffTest, EqualsClosedForm) {
  for (std::uint32_t q = 2; q <= 5; ++q)
    for (std::uint32_t g = 0; g <= 6; ++g)
      EXPECT_EQ(spectra::kirchhoff(RcgParams(q, g)), closed::kirchhoff(RcgParams(q, g))) << q << "," << g;
}

TEST(SpectralKirchhoffTest, MatchesInverseEigenvalueSum) {
  for (std::uint32_t q = 2; q <= 4; ++q) {
    for (std::uint32_t g = 0; g <= 2; ++g) {
      const RcgParams p(q, g);
      const double from_spectrum = oracle::resistance_sum_from_spectrum(spectra::laplacian_spectrum(p).expanded());
      const double exact = to_double(spectra::kirchhoff(p));
      EXPECT_NEAR(from_spectrum, exact, 1e-9 * exact);
    }
  }
}

TEST(SpectralKirchhoffTest, DigitCap) {
  EXPECT_THROW(spectra::kirchhoff(RcgParams(3, 8), Limits{100}), resource_limit_error);
}

}  // namespace
}  // namespace corona
