#include "npeig/ball.hpp"

#include <cmath>

#include "gtest/gtest.h"
#include "npeig/oracle.hpp"
#include "reference_values.hpp"

namespace npeig {
namespace {

TEST(BallForms, MatchHighPrecisionReference) {
  for (const auto& r : testing::kTau) {
    const Complex want(r.re, r.im);
    const double scale = std::max(1.0, std::abs(want));
    EXPECT_LE(std::abs(tau_form_b(r.n, r.k) - want), 1e-12 * scale) << "n=" << r.n << " k=" << r.k;
    EXPECT_LE(std::abs(tau_form_a(r.n, r.k) - want), 1e-12 * scale) << "n=" << r.n << " k=" << r.k;
    EXPECT_LE(std::abs(tau_form_c(r.n, r.k) - want), 1e-11 * scale) << "n=" << r.n << " k=" << r.k;
  }
}

TEST(BallForms, StaticLimitExamples) {
  EXPECT_LE(std::abs(tau_form_a(0, 1e-6) - 0.5), 1e-5);
  EXPECT_LE(std::abs(tau_form_b(0, 1e-6) - 0.5), 1e-5);
  EXPECT_LE(std::abs(tau_form_a(1, 1e-4) - 1.0 / 6.0), 1e-3);
  EXPECT_LE(std::abs(tau_form_c(5, 1e-5) - 1.0 / 22.0), 1e-4);
}

TEST(BallForms, CrossFormPointExamples) {
  EXPECT_LE(std::abs(tau_form_c(2, 1.0) - tau_form_a(2, 1.0)), 1e-10);
  EXPECT_LE(std::abs(tau_form_c(0, 0.5) - tau_form_b(0, 0.5)), 1e-10);
  EXPECT_LE(std::abs(tau_form_a(4, 2.5) - tau_oracle(4, 2.5)), 1e-8);
  EXPECT_LE(std::abs(tau_form_b(10, 5.0) - tau_oracle(10, 5.0)), 1e-8);
}

TEST(BallForms, CrossFormAgreementOnGrid) {
  double ab = 0.0;
  double bc = 0.0;
  for (int n = 0; n <= 50; ++n) {
    for (int i = 1; i <= 300; ++i) {
      const double k = 0.1 * i;
      const Complex a = tau_form_a(n, k);
      const Complex b = tau_form_b(n, k);
      const Complex c = tau_form_c(n, k);
      ab = std::max(ab, std::abs(a - b));
      bc = std::max(bc, std::abs(b - c));
    }
  }
  EXPECT_LE(ab, 1e-12);
  EXPECT_LE(bc, 1e-10);
}

TEST(BallForms, RejectNonPositiveWavenumber) {
  EXPECT_THROW(tau_form_a(0, 0.0), DomainError);
  EXPECT_THROW(tau_form_b(0, -1.0), DomainError);
  EXPECT_THROW(tau_form_c(0, std::nan("")), DomainError);
  EXPECT_THROW(tau_form_b(201, 1.0), OrderTooLarge);
}

TEST(BallTau, StaticAndScaling) {
  const EigenRecord r = tau(3, 0.0, 2.0);
  EXPECT_EQ(r.method, Method::StaticLimit);
  EXPECT_EQ(r.dimension, 3);
  EXPECT_EQ(r.value, Complex(1.0 / 14.0, 0.0));
  EXPECT_EQ(tau(0, 0.0).value, Complex(0.5, 0.0));
  EXPECT_EQ(tau(1, 2.0, 0.5).value, tau(1, 1.0, 1.0).value);
  for (int n : {0, 4, 17}) {
    for (double k : {0.3, 2.0, 7.25}) {
      for (double radius : {0.5, 2.0, 4.0}) {
        EXPECT_EQ(tau(n, k, radius).value, tau(n, k * radius, 1.0).value);
      }
    }
  }
  EXPECT_THROW(tau(0, 1.0, 0.0), DomainError);
  EXPECT_THROW(tau(0, 1.0, -2.0), DomainError);
}

TEST(BallTau, StaticValueIsExactForAllForms) {
  for (int n = 0; n <= 50; ++n) {
    for (Method m : {Method::FormA, Method::FormB, Method::FormC, Method::StaticLimit, Method::Leading}) {
      EXPECT_EQ(evaluate_ball(n, 0.0, 1.0, m).value, Complex(tau_static(n), 0.0)) << n;
    }
  }
  EXPECT_THROW(evaluate_ball(0, 1.0, 1.0, Method::StaticLimit), DomainError);
  EXPECT_THROW(evaluate_ball(0, 1.0, 1.0, Method::LargeNAsymptotic), DomainError);
}

TEST(BallTau, StaticLimitIsApproachedMonotonically) {
  for (int n = 0; n <= 20; ++n) {
    double previous = INFINITY;
    for (double k : {1e-1, 1e-2, 1e-3, 1e-4}) {
      const double deviation = std::abs(tau_form_b(n, k) - tau_static(n));
      EXPECT_LT(deviation, previous) << "n=" << n << " k=" << k;
      previous = deviation;
    }
    EXPECT_LE(previous, 1e-3) << n;
  }
}

TEST(BallLeading, Examples) {
  EXPECT_EQ(tau_leading(0, 0.0), Complex(0.5, 0.0));
  EXPECT_NEAR(std::abs(tau_leading(10, 0.0) - 1.0 / 42.0), 0.0, 1e-15);
  double previous = INFINITY;
  for (int n : {20, 40, 80}) {
    const double residual = std::abs(tau_form_b(n, 2.0) - tau_leading(n, 2.0));
    EXPECT_LT(residual, previous) << n;
    EXPECT_LE(residual * std::pow(n, 1.5) / 2.0, 1.0) << n;
    previous = residual;
  }
}

TEST(BallLeading, ScaledRemainderDoesNotGrow) {
  for (double k : {1.0, 5.0, 10.0}) {
    double previous = INFINITY;
    for (int n : {16, 32, 64, 128}) {
      const double scaled = std::abs(tau_form_b(n, k) - tau_leading(n, k)) * std::pow(n, 1.5) / k;
      EXPECT_LE(scaled, previous) << "n=" << n << " k=" << k;
      previous = scaled;
    }
  }
}

TEST(BallLeading, CoefficientBoundPropagates) {
  for (int n = 0; n <= 50; ++n) {
    for (double k = 0.0; k <= 30.0; k += 0.5) {
      const double bound = 0.5 * k / std::sqrt(2.0 * n + 1.0) + 1e-12;
      EXPECT_LE(std::abs(tau_leading(n, k) - tau_static(n)), bound) << "n=" << n << " k=" << k;
    }
  }
}

TEST(HankelIdentity, Examples) {
  const HankelIdentityCheck a = hankel_identity_residual(0, 1.0);
  EXPECT_FALSE(a.near_singular);
  EXPECT_LE(a.residual, 1e-10);
  const HankelIdentityCheck b = hankel_identity_residual(7, 3.3);
  EXPECT_FALSE(b.near_singular);
  EXPECT_LE(b.residual, 1e-10);
}

TEST(HankelIdentity, RelativeResidualOnGrid) {
  for (int n = 0; n <= 30; ++n) {
    for (double k = 0.25; k <= 20.0; k += 0.25) {
      const HankelIdentityCheck c = hankel_identity_residual(n, k);
      if (c.near_singular) continue;
      EXPECT_LE(c.relative, 1e-10) << "n=" << n << " k=" << k;
    }
  }
}

TEST(HankelIdentity, FlagsTheDegenerateWavenumber) {
  double lo = 0.5;
  double hi = 10.0;
  double flo = hankel_identity_denominator(0, lo);
  // first sign change on (0, 10)
  for (double k = 0.5; k <= 10.0; k += 0.01) {
    if (hankel_identity_denominator(0, k) * flo < 0.0) {
      hi = k;
      break;
    }
    lo = k;
  }
  ASSERT_LT(hi, 10.0);
  flo = hankel_identity_denominator(0, lo);
  for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double fm = hankel_identity_denominator(0, mid);
    if (fm * flo > 0.0) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  const HankelIdentityCheck c = hankel_identity_residual(0, lo);
  EXPECT_TRUE(c.near_singular);
  EXPECT_EQ(c.residual, 0.0);
  EXPECT_FALSE(std::isnan(c.denominator));
  EXPECT_NEAR(lo, 1.1656, 1e-3);
}

}  // namespace
}  // namespace npeig
