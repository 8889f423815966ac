#include <cmath>
#include <complex>

#include "doctest.h"
#include "qid/errors.hpp"
#include "qid/numerics.hpp"

using qid::Scalar;

namespace {

double rel(Scalar a, Scalar b) { return qid::relative_difference(a, b); }

}  // namespace

TEST_CASE("gamma at small integers and half integers") {
  CHECK(rel(qid::gamma(1.0).value, 1.0) < 1e-14);
  CHECK(rel(qid::gamma(5.0).value, 24.0) < 1e-13);
  const Scalar half = qid::gamma(0.5).value;
  CHECK(rel(half, std::sqrt(qid::kPi)) < 1e-13);
  // Gamma(1.5) = Gamma(0.5) / 2 and the reflection Gamma(0.5)^2 = pi.
  CHECK(rel(qid::gamma(1.5).value, 0.5 * half) < 1e-13);
  CHECK(rel(half * half, qid::kPi) < 1e-13);
}

TEST_CASE("gamma agrees with std::tgamma on the real line") {
  for (double x = -9.75; x < 40.0; x += 0.5) {
    CHECK(rel(qid::gamma(x).value, std::tgamma(x)) < 1e-12);
  }
}

TEST_CASE("gamma recurrence on the complex grid") {
  double worst = 0.0;
  for (double re = -20.0; re <= 20.0; re += 0.5) {
    for (double im = -20.0; im <= 20.0; im += 0.5) {
      const Scalar z{re + 0.25, im};
      if (qid::near_nonpositive_integer(z) || qid::near_nonpositive_integer(z + 1.0)) continue;
      const Scalar lhs = qid::gamma(z + 1.0).value;
      const Scalar rhs = z * qid::gamma(z).value;
      worst = std::max(worst, rel(lhs, rhs));
    }
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("gamma poles") {
  CHECK_THROWS_AS(qid::gamma(0.0), qid::PoleError);
  CHECK_THROWS_AS(qid::gamma(-3.0 + 1e-11), qid::PoleError);
  CHECK_NOTHROW(qid::gamma(-3.0 + 1e-6));
  CHECK(qid::rgamma(-4.0).value == Scalar{0.0});
  CHECK(rel(qid::rgamma(Scalar{2.5, 1.0}).value * qid::gamma(Scalar{2.5, 1.0}).value, 1.0) < 1e-13);
}

TEST_CASE("pochhammer basics") {
  CHECK(rel(qid::pochhammer(1.0, 3).value, 6.0) < 1e-15);
  CHECK(qid::pochhammer(Scalar{0.3, 0.7}, 0).value == Scalar{1.0});
  // (x)_{-1} = Gamma(x-1)/Gamma(x) = 1/(x-1)
  const Scalar via_gamma = qid::gamma(-0.5).value / qid::gamma(0.5).value;
  CHECK(rel(qid::pochhammer(0.5, -1).value, via_gamma) < 1e-13);
  CHECK(rel(qid::pochhammer(0.5, -1).value, -2.0) < 1e-15);
  CHECK_THROWS_AS(qid::pochhammer(3.0, -4), qid::PoleError);
  CHECK_THROWS_AS(qid::pochhammer_gamma_ratio(3.0, -4), qid::PoleError);
}

TEST_CASE("pochhammer splitting (x)_{n+k} = (x)_n (x+n)_k") {
  const Scalar xs[] = {Scalar{0.37, 0.0}, Scalar{-2.3, 0.4}, Scalar{4.1, -1.7}, Scalar{0.5, 3.0}};
  for (Scalar x : xs) {
    for (int n = -12; n <= 12; ++n) {
      for (int k = -12; k <= 12; ++k) {
        const Scalar lhs = qid::pochhammer(x, n + k).value;
        const Scalar rhs = qid::pochhammer(x, n).value * qid::pochhammer(x + static_cast<double>(n), k).value;
        CHECK(rel(lhs, rhs) < 1e-10);
      }
    }
  }
}

TEST_CASE("pochhammer gamma ratio matches the direct product") {
  const Scalar xs[] = {Scalar{0.37, 0.0}, Scalar{-2.3, 0.4}, Scalar{1.1, -1.7}};
  for (Scalar x : xs) {
    for (int n = -20; n <= 20; ++n) {
      CHECK(rel(qid::pochhammer_direct(x, n).value, qid::pochhammer_gamma_ratio(x, n).value) < 1e-10);
    }
  }
}

TEST_CASE("EvalResult composition never shrinks the error estimate") {
  const qid::EvalResult a{Scalar{2.0, 1.0}, 1e-12, 0.5};
  const qid::EvalResult b{Scalar{-1.9, -1.0}, 3e-13, 0.0};
  for (const auto& r : {a * b, a / b, a + b, a - b}) {
    CHECK(r.rel_err_estimate >= std::max(a.rel_err_estimate, b.rel_err_estimate));
  }
  // 2+i and -1.9-i nearly cancel: one digit lost.
  CHECK((a + b).cancellation_digits > 1.0);
  CHECK((a * b).cancellation_digits == doctest::Approx(0.5));
  CHECK_THROWS_AS(qid::EvalResult::exact(1e300) * qid::EvalResult::exact(1e300), qid::OverflowError);
}
