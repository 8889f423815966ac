#include <cmath>
#include <vector>

#include "doctest.h"
#include "qid/errors.hpp"
#include "qid/series.hpp"

using qid::QBase;
using qid::Scalar;

namespace {

double rel(Scalar a, Scalar b) { return qid::relative_difference(a, b); }

// Ramanujan's product (q, c/a, az, q/az; q)_inf / (c, q/a, z, c/az; q)_inf.
Scalar ramanujan_product(Scalar a, Scalar c, const QBase& q, Scalar z) {
  const Scalar qv = q.value();
  return qid::qpoch_ratio({qv, c / a, a * z, qv / (a * z)}, {c, qv / a, z, c / (a * z)}, q).value;
}

// Dougall's gamma product.
Scalar dougall_product(Scalar a, Scalar b, Scalar c, Scalar d) {
  using qid::gamma;
  using qid::rgamma;
  return (gamma(1.0 - a) * gamma(1.0 - b) * gamma(c) * gamma(d) * gamma(c + d - a - b - 1.0) * rgamma(c - a) *
          rgamma(c - b) * rgamma(d - a) * rgamma(d - b))
      .value;
}

}  // namespace

TEST_CASE("convergence classification") {
  const QBase q(0.5);
  // |z| = 0.4 and |cd/abz| = 0.3
  const auto psi22 = qid::psi_spec({1.0, 1.0}, {0.3, 0.4}, q, 0.4);
  CHECK(qid::converges(psi22).verdict == qid::Verdict::converges);
  CHECK(qid::converges(psi22).neg_tail_ratio == doctest::Approx(0.3));

  const auto outside = qid::psi_spec({0.4}, {0.25}, QBase(0.2), 0.3);  // |c/a| = 0.625 > |z|
  CHECK(qid::converges(outside).verdict == qid::Verdict::diverges);

  const auto h2 = qid::h2_spec(0.1, 0.2, 2.5, 2.8);
  CHECK(qid::converges(h2).verdict == qid::Verdict::converges);
  CHECK(*qid::converges(h2).decay_exponent == doctest::Approx(5.0));

  const auto boundary = qid::phi_spec({0.3, 0.2}, {0.1}, q, 1.0);
  CHECK(qid::converges(boundary).verdict == qid::Verdict::boundary);
  CHECK_THROWS_AS(qid::eval_phi(boundary), qid::DivergesError);

  // A numerator q^{-3} terminates the series whatever z is.
  const auto terminating = qid::phi_spec({1.0 / 0.125, 0.2}, {0.1}, q, 5.0);
  CHECK(qid::converges(terminating).verdict == qid::Verdict::converges);
}

TEST_CASE("eval_phi examples") {
  const QBase q(0.5);
  CHECK(qid::phi({0.7}, {}, q, 0.0).value == Scalar{1.0});
  CHECK(rel(qid::phi({0.5}, {}, q, 0.5).value, 2.0) < 1e-13);

  // 2phi1(q^-2, b; c; q, z): exactly the k = 0, 1, 2 terms.
  const Scalar a = 1.0 / q.pow(2);
  const Scalar b{0.3, 0.1}, c{0.6, -0.2}, z{1.7, 0.4};
  Scalar direct{0.0};
  for (int k = 0; k <= 2; ++k) {
    direct += qid::qpoch(a, q, k).value * qid::qpoch(b, q, k).value /
              (qid::qpoch(q.value(), q, k).value * qid::qpoch(c, q, k).value) * std::pow(z, k);
  }
  CHECK(rel(qid::phi({a, b}, {c}, q, z).value, direct) < 1e-14);
}

TEST_CASE("q-binomial theorem for 1phi0") {
  for (Scalar qv : {Scalar{0.3}, Scalar{0.5, 0.4}, Scalar{-0.7, 0.1}}) {
    const QBase q(qv);
    for (Scalar a : {Scalar{0.4}, Scalar{1.8, -0.6}, Scalar{-0.2, 0.9}}) {
      for (Scalar z : {Scalar{0.2}, Scalar{-0.5, 0.6}, Scalar{0.1, -0.85}}) {
        const Scalar lhs = qid::phi({a}, {}, q, z).value;
        const Scalar rhs = qid::qpoch_inf(a * z, q).value / qid::qpoch_inf(z, q).value;
        CHECK(rel(lhs, rhs) < 1e-10);
      }
    }
  }
}

TEST_CASE("eval_psi with a denominator q equals the unilateral series") {
  const QBase q(Scalar{0.45, 0.2});
  const Scalar a{0.7, 0.3}, b{-1.2, 0.5}, c{0.4, -0.9}, z{0.3, 0.5};
  const Scalar bilateral = qid::psi({a, b}, {c, q.value()}, q, z).value;
  const Scalar unilateral = qid::phi({a, b}, {c}, q, z).value;
  CHECK(rel(bilateral, unilateral) < 1e-10);
  const auto [pos, neg] = qid::split_psi(qid::psi_spec({a, b}, {c, q.value()}, q, z));
  CHECK(neg.value == Scalar{0.0});
  CHECK(rel(pos.value, unilateral) < 1e-14);
}

TEST_CASE("Ramanujan 1psi1 at (a, c, q, z) = (0.4, 0.02, 0.2, 0.3)") {
  const QBase q(0.2);
  const auto spec = qid::psi_spec({0.4}, {0.02}, q, 0.3);
  const Scalar value = qid::eval_psi(spec).value;
  CHECK(rel(value, ramanujan_product(0.4, 0.02, q, 0.3)) < 1e-12);
  CHECK(rel(value, -1.12127835506950642475) < 1e-12);

  const auto [pos, neg] = qid::split_psi(spec);
  CHECK(rel(pos.value + neg.value, value) < 1e-12);
  CHECK(rel(neg.value, -2.37730982526694137741) < 1e-12);
  CHECK(rel(pos.value, 1.25603147019743495266) < 1e-12);
  // Its negative ratio tends to |c/az| = 1/6.
  CHECK(qid::converges(spec).neg_tail_ratio == doctest::Approx(0.02 / (0.4 * 0.3)));

  CHECK_THROWS_AS(qid::eval_psi(qid::psi_spec({0.4}, {0.02}, q, 0.04)), qid::DivergesError);
  CHECK_THROWS_AS(qid::eval_psi(qid::psi_spec({0.4}, {0.02}, q, 1.5)), qid::DivergesError);
}

TEST_CASE("negative part by direct summation of reversed terms") {
  // sum_{k>=1} (q/c;q)_k / (q/a;q)_k (c/az)^k
  const QBase q(0.2);
  const Scalar a = 0.4, c = 0.02, z = 0.3;
  Scalar direct{0.0};
  for (int k = 1; k < 60; ++k) {
    direct += qid::qpoch(q.value() / c, q, k).value / qid::qpoch(q.value() / a, q, k).value * std::pow(c / (a * z), k);
  }
  const auto [pos, neg] = qid::split_psi(qid::psi_spec({a}, {c}, q, z));
  CHECK(rel(neg.value, direct) < 1e-13);
}

TEST_CASE("reversal k -> -k of 2psi2") {
  const QBase q(Scalar{0.35, -0.3});
  const Scalar qv = q.value();
  const Scalar a{1.1, 0.4}, b{-0.8, 0.9}, c{0.3, 0.2}, d{0.5, -0.6}, z{0.4, -0.3};
  REQUIRE(std::abs(c * d / (a * b * z)) < 1.0);
  const Scalar lhs = qid::psi({a, b}, {c, d}, q, z).value;
  const Scalar rhs = qid::psi({qv / c, qv / d}, {qv / a, qv / b}, q, c * d / (a * b * z)).value;
  CHECK(rel(lhs, rhs) < 1e-10);
}

TEST_CASE("running recurrence matches qpoch recomputation") {
  const QBase q(Scalar{0.5, 0.3});
  const Scalar a{0.9, 0.2}, b{-0.4, 0.7}, c{0.2, 0.1}, d{0.6, -0.5};
  const Scalar z = std::polar(0.98, 0.4);
  const auto spec = qid::psi_spec({a, b}, {c, d}, q, z);
  const auto terms = qid::generate_terms(qid::positive_recurrence(spec), 1001);
  for (int k : {10, 100, 1000}) {
    const Scalar direct = qid::qpoch(a, q, k).value * qid::qpoch(b, q, k).value /
                          (qid::qpoch(c, q, k).value * qid::qpoch(d, q, k).value) * std::pow(z, k);
    CHECK(rel(terms[k], direct) < 1e-12);
  }
  const auto reversed = qid::generate_terms(qid::negative_recurrence(spec), 11);
  const Scalar direct_neg = qid::qpoch(a, q, -10).value * qid::qpoch(b, q, -10).value /
                            (qid::qpoch(c, q, -10).value * qid::qpoch(d, q, -10).value) * std::pow(z, -10);
  CHECK(rel(reversed[10], direct_neg) < 1e-12);
}

TEST_CASE("error estimate bounds the effect of a 10x tighter stopping rule") {
  const QBase q(Scalar{0.6, 0.1});
  const std::vector<qid::SeriesSpec> specs = {
      qid::psi_spec({Scalar{0.9, 0.2}, Scalar{-0.4, 0.7}}, {Scalar{0.2, 0.1}, Scalar{0.6, -0.5}}, q, std::polar(0.85, 0.4)),
      qid::phi_spec({Scalar{1.5, 0.2}, Scalar{0.4, 0.7}}, {Scalar{0.2, 0.1}}, q, std::polar(0.9, -2.0)),
  };
  for (const auto& spec : specs) {
    const auto loose = qid::evaluate(spec);
    const qid::StopRule tight{1e-16, 1e-15, 1'000'000};
    const auto strict = spec.kind == qid::SeriesKind::bilateral ? qid::eval_psi(spec, tight) : qid::eval_phi(spec, tight);
    CHECK(rel(loose.value, strict.value) <= loose.rel_err_estimate);
  }
}

TEST_CASE("eval_psi poles") {
  const QBase q(0.5);
  // Numerator a = q^2 makes (a;q)_{-k} infinite for k >= 2.
  CHECK_THROWS_AS(qid::psi({0.25}, {0.1}, q, 0.5), qid::PoleError);
  // Denominator c = q^{-1} makes (c;q)_k vanish for k >= 2.
  CHECK_THROWS_AS(qid::psi({3.0}, {2.0}, q, 0.9), qid::PoleError);
}

TEST_CASE("classical 2H2 against Dougall's gamma product") {
  const auto h2 = qid::eval_h2(0.1, 0.2, 2.5, 2.8);
  CHECK(rel(h2.value, 5.19813472866354706021) < 1e-5);
  CHECK(rel(h2.value, dougall_product(0.1, 0.2, 2.5, 2.8)) < 1e-5);
  CHECK(h2.rel_err_estimate < 1e-5);

  const Scalar a{0.3, 0.4}, b{-0.6, 0.2}, c{1.7, -0.3}, d{1.2, 0.5};
  CHECK(rel(qid::eval_h2(a, b, c, d).value, dougall_product(a, b, c, d)) < 1e-5);

  CHECK_THROWS_AS(qid::eval_h2(0.1, 0.2, 1.5, 1.1), qid::SlowConvergenceError);
  CHECK_THROWS_AS(qid::eval_h2(0.1, 0.2, 0.5, 0.4), qid::DivergesError);
  CHECK_THROWS_AS(qid::eval_h2(0.1, 0.2, -1.0, 5.0), qid::PoleError);
}

TEST_CASE("2H2 with a numerator equal to a denominator") {
  // a = c collapses to sum (b)_k/(d)_k, whose gamma product vanishes through 1/Gamma(c - a).
  const Scalar b = 0.2, d = 3.5;
  const auto collapsed = qid::eval_h2(0.3, b, 0.3, d);
  CHECK(dougall_product(0.3, b, 0.3, d) == Scalar{0.0});
  CHECK(std::abs(collapsed.value) < 1e-9);
  CHECK(collapsed.cancellation_digits > 8.0);
  // b = d is the same collapse on the other pair.
  const auto other = qid::eval_h2(0.3, 0.4, 4.0, 0.4);
  CHECK(dougall_product(0.3, 0.4, 4.0, 0.4) == Scalar{0.0});
  CHECK(std::abs(other.value) < 1e-9);
}
