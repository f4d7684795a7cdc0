#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "cutreg/kernel.hpp"
#include "unit/reference_values.hpp"

using namespace cutreg;
using std::numbers::pi;

TEST(Green, Examples) {
  EXPECT_NEAR(green(Dimension(3), 1.0), 1.0 / (4 * pi), 1e-16);
  EXPECT_NEAR(green(Dimension(4), 1.0), 1.0 / (4 * pi * pi), 1e-16);
  for (int n = 3; n <= 12; ++n) {
    const Dimension d(n);
    EXPECT_NEAR(green(d, 1.4) / green(d, 0.7), std::pow(2.0, 2 - n), 1e-14);
  }
  EXPECT_THROW(green(Dimension(3), 0.0), SingularityError);
  EXPECT_THROW(green(Dimension(3), -1.0), DomainError);
}

TEST(GreenCut, Examples) {
  const Dimension d3(3);
  EXPECT_NEAR(green_cut(d3, 1.0, 0.5), 1.0 / (4 * pi), 1e-16);
  EXPECT_NEAR(green_cut(d3, 1.0, 0.0), 1.0 / (4 * pi), 1e-16);
  EXPECT_NEAR(green_cut(d3, 1.0, 2.0), 1.0 / (8 * pi), 1e-16);
  for (int n = 3; n <= 12; ++n) {
    const Dimension d(n);
    for (double cutoff : {0.5, 1.0, 3.0}) {
      const double edge = 1.0 / cutoff;
      EXPECT_NEAR(green_cut(d, cutoff, edge) / green(d, edge), 1.0, 1e-14);
      EXPECT_NEAR(green_cut(d, cutoff, std::nextafter(edge, 10.0)) / green(d, edge), 1.0, 1e-14);
    }
  }
  EXPECT_THROW(green_cut(d3, 0.0, 1.0), DomainError);
}

TEST(DeformingClosed, Examples) {
  EXPECT_DOUBLE_EQ(deforming_f_closed(Dimension(3), 0.25), 0.5);
  EXPECT_DOUBLE_EQ(deforming_f_closed(Dimension(5), 1.0), 0.0);
  EXPECT_DOUBLE_EQ(deforming_f_closed(Dimension(6), 0.0), 15.0);
  for (int n = 3; n <= 12; ++n) {
    const Dimension d(n);
    EXPECT_NEAR(deforming_f_closed(d, 0.0), std::ldexp(1.0, n - 2) - 1.0, 1e-10) << n;
    EXPECT_NEAR(deforming_f_closed(d, 1.0), 0.0, 1e-10) << n;
  }
  EXPECT_THROW(deforming_f_closed(Dimension(3), -0.1), DomainError);
}

TEST(DeformingClosed, FigureOrdering) {
  double previous = 0.0;
  for (int n = 3; n <= 6; ++n) {
    const double at0 = deforming_f_closed(Dimension(n), 0.0);
    EXPECT_GT(at0, previous);
    previous = at0;
  }
  EXPECT_LT(deforming_f_closed(Dimension(3), 0.1), deforming_f_closed(Dimension(4), 0.1));
  EXPECT_LT(deforming_f_closed(Dimension(4), 0.1), deforming_f_closed(Dimension(5), 0.1));
  EXPECT_LT(deforming_f_closed(Dimension(5), 0.1), deforming_f_closed(Dimension(6), 0.1));
}

TEST(DeformingClosed, AgreesWithGeneralForm) {
  for (int n = 3; n <= 6; ++n) {
    const Dimension d(n);
    for (int k = 0; k < 500; ++k) {
      const double s = k / 499.0;
      ASSERT_NEAR(deforming_f_closed(d, s), deforming_f_general(d, s), 1e-10) << n << " " << s;
    }
    // Near the branch switches of the explicit forms.
    for (double s : {1e-3, 1e-3 + 1e-12, 1e-6, 1.0 - 1e-3, 1.0 - 1e-3 - 1e-12, 1.0 - 1e-7}) {
      EXPECT_NEAR(deforming_f_closed(d, s), deforming_f_general(d, s), 1e-10) << n << " " << s;
    }
  }
}

TEST(DeformingClosed, FrozenReferenceValues) {
  for (const auto& r : ref::kDeforming) {
    const Dimension d(r.n);
    const double tol = 1e-12 * std::max(1.0, std::fabs(r.value)) * (r.n > 6 ? 10.0 : 1.0);
    EXPECT_NEAR(deforming_f_closed(d, r.s), r.value, tol) << "n=" << r.n << " s=" << r.s;
    EXPECT_NEAR(deforming_f_general(d, r.s), r.value, tol) << "n=" << r.n << " s=" << r.s;
  }
}

TEST(DeformingClosed, SupportAndContinuity) {
  for (int n = 3; n <= 12; ++n) {
    const Dimension d(n);
    for (double s : {1.0 + 1e-15, 1.5, 2.0, 100.0}) EXPECT_EQ(deforming_f_closed(d, s), 0.0);
    double worst = 0.0;
    const int grid = 4000;
    for (int k = 0; k < grid; ++k) {
      const double a = 1.1 * k / grid, b = 1.1 * (k + 1) / grid;
      worst = std::max(worst, std::fabs(deforming_f_closed(d, a) - deforming_f_closed(d, b)));
    }
    // Modulus of continuity of a sqrt-type cusp: O(sqrt(step)).
    EXPECT_LT(worst, 4.0 * std::ldexp(1.0, n - 2) * std::sqrt(1.1 / grid)) << n;
  }
}

TEST(DeformingFunction, Kinds) {
  const Dimension d(4);
  const auto z = DeformingFunction::zero();
  EXPECT_EQ(z.kind(), DeformingFunction::Kind::zero);
  EXPECT_EQ(z(0.3), 0.0);
  EXPECT_EQ(z.descriptor(), "zero");

  const auto c = DeformingFunction::closed_form(d);
  EXPECT_EQ(c.kind(), DeformingFunction::Kind::closed_form);
  EXPECT_EQ(c(0.3), deforming_f_closed(d, 0.3));
  EXPECT_EQ(c(1.5), 0.0);
  EXPECT_EQ(c.uncertainty(0.3), 0.0);
  EXPECT_EQ(c.descriptor(), "closed(n=4)");
  EXPECT_THROW(c(-1.0), DomainError);

  const auto t = DeformingFunction::tabulated(DeformingFunction::Kind::extracted, "tab",
                                              {0.0, 0.5, 1.0}, {2.0, 1.0, 0.0}, {0.1, 0.2, 0.3});
  EXPECT_EQ(t.kind(), DeformingFunction::Kind::extracted);
  EXPECT_NEAR(t(0.25), 1.0, 1e-15);  // t = 0.5
  EXPECT_NEAR(t(0.5625), 0.5, 1e-15);  // t = 0.75
  EXPECT_NEAR(t.uncertainty(0.5625), 0.25, 1e-15);
  EXPECT_EQ(t(2.0), 0.0);
  ASSERT_EQ(t.breakpoints().size(), 1u);
  EXPECT_EQ(t.breakpoints()[0], 0.25);
  EXPECT_THROW(DeformingFunction::tabulated(DeformingFunction::Kind::extracted, "bad",
                                            {0.0, 0.5}, {1.0, 0.0}, {0.0, 0.0}),
               ConfigurationError);
  EXPECT_THROW(DeformingFunction::tabulated(DeformingFunction::Kind::extracted, "bad",
                                            {0.0, 1.0}, {1.0}, {0.0, 0.0}),
               ConfigurationError);

  const auto u = DeformingFunction::custom("lin", [](double s) { return 1.0 - s; }, {0.5});
  EXPECT_EQ(u.kind(), DeformingFunction::Kind::custom);
  EXPECT_EQ(u(0.25), 0.75);
  EXPECT_EQ(u.breakpoints(), std::vector<double>{0.5});
}

TEST(DeformedGreen, Examples) {
  const Dimension d3(3);
  const DeformedGreen g{d3, 1.0, DeformingFunction::closed_form(d3)};
  EXPECT_NEAR(g(0.5), 3.0 / (8 * pi), 1e-16);
  EXPECT_NEAR(deformed_green(g, 2.0), 1.0 / (8 * pi), 1e-16);
  EXPECT_NEAR(g(0.0), 2.0 / (4 * pi), 1e-16);
  EXPECT_THROW(g(-0.1), DomainError);
}

TEST(DeformedGreen, ScalingAndExteriorAgreement) {
  for (int n = 3; n <= 6; ++n) {
    const Dimension d(n);
    const auto f = DeformingFunction::closed_form(d);
    for (double cutoff : {0.5, 2.0, 3.7}) {
      const DeformedGreen g{d, cutoff, f};
      const DeformedGreen unit{d, 1.0, f};
      for (double r : {0.0, 0.05, 0.2, 0.26, 0.9, 1.3, 4.0}) {
        const double want = std::pow(cutoff, n - 2) * unit(cutoff * r);
        EXPECT_NEAR(g(r), want, 1e-13 * std::fabs(want)) << n << " " << cutoff << " " << r;
      }
      for (double r : {1.0001 / cutoff, 2.0 / cutoff, 10.0}) {
        EXPECT_NEAR(g(r) / green(d, r), 1.0, 1e-14);
      }
      // Continuity across the ball boundary.
      const double edge = 1.0 / cutoff;
      EXPECT_NEAR(g(edge * (1 - 1e-9)), g(edge * (1 + 1e-9)), 1e-7 * g(edge));
    }
  }
}

TEST(SeriesScheme, GeometricTruncation) {
  const Dimension d3(3);
  const auto s = SeriesScheme::geometric(d3);
  EXPECT_EQ(s.truncation(), 40);  // 2^-40 < 1e-12 <= 2^-39
  EXPECT_EQ(SeriesScheme::geometric(d3, 1e-16).truncation(), 54);
  double total = 0.0;
  for (double w : s.weights()) {
    EXPECT_GT(w, 0.0);
    total += w;
  }
  EXPECT_NEAR(total, 1.0, 1e-15);
  EXPECT_EQ(s.tail_mass(), std::ldexp(1.0, -40));
  EXPECT_DOUBLE_EQ(s.r_max(), std::exp2(-1.0 / 6.0));
  for (std::size_t i = 1; i < s.radii().size(); ++i) EXPECT_LT(s.radii()[i], s.radii()[i - 1]);
  double kappa = 0.0;
  for (std::size_t i = 0; i < s.weights().size(); ++i) {
    kappa += s.weights()[i] * std::pow(s.radii()[i], -3.0);
  }
  EXPECT_NEAR(s.kappa_bound(), kappa, 1e-10);
  EXPECT_THROW(SeriesScheme::geometric(d3, 0.0), ConfigurationError);
  EXPECT_THROW(SeriesScheme::geometric_truncated(d3, 0), ConfigurationError);
}

TEST(SeriesScheme, ExplicitTermsAreValidated) {
  const Dimension d(4);
  const auto s = SeriesScheme::from_terms(d, {2.0, 2.0}, {1.0, 0.5});
  EXPECT_EQ(s.weights(), (std::vector<double>{0.5, 0.5}));
  EXPECT_EQ(s.r_max(), 1.0);
  EXPECT_THROW(SeriesScheme::from_terms(d, {1.0, -1.0}, {1.0, 1.0}), ConfigurationError);
  EXPECT_THROW(SeriesScheme::from_terms(d, {1.0}, {0.0}), ConfigurationError);
  EXPECT_THROW(SeriesScheme::from_terms(d, {1.0}, {1.0, 2.0}), ConfigurationError);
  EXPECT_THROW(SeriesScheme::from_terms(d, {}, {}), ConfigurationError);
  EXPECT_THROW(SeriesScheme::from_terms(d, {1.0}, {1.0}, 1.0), ConfigurationError);
}

TEST(SeriesDeforming, SingleTermReducesToClosedForm) {
  for (int n = 3; n <= 6; ++n) {
    const Dimension d(n);
    const auto s = SeriesScheme::from_terms(d, {1.0}, {1.0});
    for (int k = 0; k <= 100; ++k) {
      const double x = k / 100.0;
      EXPECT_NEAR(series_deforming_f(s, d, x), deforming_f_closed(d, x), 1e-14);
    }
  }
}

TEST(SeriesDeforming, SupportAndGuards) {
  const Dimension d3(3);
  const auto s = SeriesScheme::geometric(d3);
  EXPECT_EQ(series_deforming_f(s, d3, 2.0), 0.0);
  EXPECT_NEAR(series_deforming_f(s, d3, 1.0), 0.0, 1e-12);
  EXPECT_THROW(series_deforming_f(s, Dimension(4), 0.5), ConfigurationError);
  EXPECT_THROW(series_deforming_f(s, d3, -0.5), DomainError);
  const auto f = DeformingFunction::series(s, d3);
  EXPECT_EQ(f.kind(), DeformingFunction::Kind::series);
  EXPECT_EQ(f.descriptor(), "series(n=3,N=40)");
  EXPECT_EQ(f(0.3), series_deforming_f(s, d3, 0.3));
  for (double b : f.breakpoints()) {
    EXPECT_GT(b, 0.0);
    EXPECT_LT(b, 1.0);
  }
}

TEST(SeriesDeforming, BoundedByProofEstimate) {
  for (int n = 3; n <= 6; ++n) {
    const Dimension d(n);
    const auto s = SeriesScheme::geometric(d);
    const double bound = d.green_normalisation() * series_bound_m(d) * s.r_max() * s.r_max() *
                             s.kappa_bound() + 1.0;
    for (int k = 0; k <= 400; ++k) {
      EXPECT_LE(std::fabs(series_deforming_f(s, d, k / 400.0)), bound) << n;
    }
  }
  EXPECT_NEAR(series_bound_m(Dimension(3)), 2.0 / (4 * pi), 1e-15);
}

TEST(SeriesDeforming, TruncationsConvergeWithinTailBound) {
  constexpr int kN = 10;
  for (int n = 3; n <= 6; ++n) {
    const Dimension d(n);
    const auto coarse = SeriesScheme::geometric_truncated(d, kN);
    const auto fine = SeriesScheme::geometric_truncated(d, 2 * kN);
    // |T_i| <= 2^{n-2} L_i^{n-2} with L_i = 2^{(i-1)/(2n)}.
    auto term_bound = [&](int i) {
      return std::ldexp(1.0, n - 2) * std::pow(2.0, (i - 1) * (n - 2) / (2.0 * n));
    };
    const double tail_n = std::ldexp(1.0, -kN), tail_2n = std::ldexp(1.0, -2 * kN);
    double head = 0.0, tail = 0.0;
    for (int i = 1; i <= kN; ++i) head += std::ldexp(term_bound(i), -i);
    for (int i = kN + 1; i <= 400; ++i) tail += std::ldexp(term_bound(i), -i);
    const double bound = tail_n / (1 - tail_n) * head + tail / (1 - tail_2n);
    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
      const double x = k / 199.0;
      worst = std::max(worst, std::fabs(series_deforming_f(coarse, d, x) -
                                        series_deforming_f(fine, d, x)));
    }
    EXPECT_GT(worst, 0.0);
    EXPECT_LE(worst, bound) << n;
  }
}

TEST(SeriesDeforming, SecondDifferencesStayBounded) {
  // Measured in the radial variable t = sqrt(s), where f~(t^2) is piecewise smooth.
  for (int n = 3; n <= 6; ++n) {
    const Dimension d(n);
    const auto s = SeriesScheme::geometric(d);
    auto g = [&](double t) { return series_deforming_f(s, d, t * t); };
    std::vector<double> maxima;
    for (double h : {1e-2, 5e-3, 2.5e-3}) {
      double worst = 0.0;
      for (double t = h; t <= 1.0 - h; t += 0.37 * h) {
        worst = std::max(worst, std::fabs(g(t + h) - 2 * g(t) + g(t - h)) / (h * h));
      }
      maxima.push_back(worst);
    }
    EXPECT_LT(maxima[1], 1.5 * maxima[0] + 1.0) << n;
    EXPECT_LT(maxima[2], 1.5 * maxima[1] + 1.0) << n;
  }
}

TEST(SeriesDeforming, ContinuousWithSupportInUnitInterval) {
  const Dimension d3(3);
  const auto s = SeriesScheme::geometric(d3);
  double prev = series_deforming_f(s, d3, 0.0);
  double worst = 0.0;
  const int grid = 20000;
  for (int k = 1; k <= grid; ++k) {
    const double x = 1.2 * k / grid;
    const double v = series_deforming_f(s, d3, x);
    worst = std::max(worst, std::fabs(v - prev));
    prev = v;
    if (x > 1.0) {
      EXPECT_EQ(v, 0.0);
    }
  }
  EXPECT_LT(worst, 0.05);
}
