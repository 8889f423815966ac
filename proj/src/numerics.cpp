#include "qid/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <string>

#include "qid/errors.hpp"

namespace qid {

namespace {

constexpr int kLanczosG = 7;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr long long kDirectPochhammerLimit = 64;

bool finite(Scalar v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

// log Gamma(z) for Re z >= 1/2, principal branch of the Lanczos form.
Scalar lanczos_log_gamma(Scalar z) {
  z -= 1.0;
  Scalar series = kLanczosCoeffs[0];
  for (int i = 1; i < static_cast<int>(kLanczosCoeffs.size()); ++i) {
    series += kLanczosCoeffs[i] / (z + static_cast<double>(i));
  }
  const Scalar t = z + (kLanczosG + 0.5);
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(series);
}

// sin(pi z) evaluated after removing the nearest integer, so that the
// argument reduction is exact.
Scalar sin_pi(Scalar z) {
  const double n = std::round(z.real());
  const Scalar reduced = (z - n) * kPi;
  const Scalar s = std::sin(reduced);
  return (static_cast<long long>(n) % 2 == 0) ? s : -s;
}

double log_gamma_error(Scalar log_value) { return 8.0 * kEps * (1.0 + std::abs(log_value)); }

}  // namespace

Scalar checked(Scalar v, const char* context) {
  if (!finite(v)) throw OverflowError(std::string("non-finite value in ") + context);
  return v;
}

EvalResult operator*(const EvalResult& lhs, const EvalResult& rhs) {
  return {checked(lhs.value * rhs.value, "product"),
          lhs.rel_err_estimate + rhs.rel_err_estimate + 2 * kEps,
          std::max(lhs.cancellation_digits, rhs.cancellation_digits)};
}

EvalResult operator/(const EvalResult& lhs, const EvalResult& rhs) {
  if (rhs.value == Scalar{0.0}) throw PoleError("division by an exact zero");
  return {checked(lhs.value / rhs.value, "quotient"),
          lhs.rel_err_estimate + rhs.rel_err_estimate + 4 * kEps,
          std::max(lhs.cancellation_digits, rhs.cancellation_digits)};
}

EvalResult operator+(const EvalResult& lhs, const EvalResult& rhs) {
  const Scalar sum = checked(lhs.value + rhs.value, "sum");
  const double a = std::abs(lhs.value);
  const double b = std::abs(rhs.value);
  const double s = std::abs(sum);
  EvalResult out{sum, 0.0, 0.0};
  if (s == 0.0) {
    const bool exact = lhs.rel_err_estimate == 0.0 && rhs.rel_err_estimate == 0.0;
    out.rel_err_estimate = (a == 0.0 && b == 0.0) || exact ? std::max(lhs.rel_err_estimate, rhs.rel_err_estimate) : 1.0;
    out.cancellation_digits = (a == 0.0 && b == 0.0) ? std::max(lhs.cancellation_digits, rhs.cancellation_digits)
                                                     : kMaxCancellationDigits;
    return out;
  }
  const double propagated = (a * lhs.rel_err_estimate + b * rhs.rel_err_estimate) / s + kEps;
  out.rel_err_estimate = std::max({propagated, lhs.rel_err_estimate, rhs.rel_err_estimate});
  // Digits already lost inside an operand count again, scaled by how much
  // larger that operand is than the result.
  double digits = cancellation_digits(std::max(a, b), s);
  if (a > 0.0) digits = std::max(digits, lhs.cancellation_digits + std::log10(a / s));
  if (b > 0.0) digits = std::max(digits, rhs.cancellation_digits + std::log10(b / s));
  out.cancellation_digits = std::clamp(digits, 0.0, kMaxCancellationDigits);
  return out;
}

EvalResult operator-(const EvalResult& operand) {
  return {-operand.value, operand.rel_err_estimate, operand.cancellation_digits};
}

EvalResult operator-(const EvalResult& lhs, const EvalResult& rhs) { return lhs + (-rhs); }

EvalResult& operator*=(EvalResult& lhs, const EvalResult& rhs) { return lhs = lhs * rhs; }
EvalResult& operator+=(EvalResult& lhs, const EvalResult& rhs) { return lhs = lhs + rhs; }

double cancellation_digits(double largest, double total) {
  if (largest <= 0.0) return 0.0;
  if (total <= 0.0) return kMaxCancellationDigits;
  return std::clamp(std::log10(largest / total), 0.0, kMaxCancellationDigits);
}

double relative_difference(Scalar a, Scalar b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

Scalar ipow(Scalar base, long long n) {
  if (n < 0) return Scalar{1.0} / ipow(base, -n);
  Scalar result{1.0};
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

bool near_nonpositive_integer(Scalar z, double tol) {
  const double n = std::round(z.real());
  return n <= 0.0 && std::abs(z - n) < tol;
}

EvalResult gamma(Scalar z) {
  if (near_nonpositive_integer(z)) throw PoleError("gamma: argument on the pole lattice {0, -1, -2, ...}");
  if (z.real() < 0.5) {
    // Gamma(z) Gamma(1 - z) = pi / sin(pi z)
    const Scalar log_reflected = lanczos_log_gamma(1.0 - z);
    const Scalar value = kPi / (sin_pi(z) * std::exp(log_reflected));
    return {checked(value, "gamma"), log_gamma_error(log_reflected) + 6 * kEps, 0.0};
  }
  const Scalar log_value = lanczos_log_gamma(z);
  return {checked(std::exp(log_value), "gamma"), log_gamma_error(log_value), 0.0};
}

EvalResult rgamma(Scalar z) {
  if (near_nonpositive_integer(z, 0.0)) return EvalResult::exact(0.0);
  if (z.real() < 0.5) {
    const Scalar log_reflected = lanczos_log_gamma(1.0 - z);
    const Scalar value = sin_pi(z) * std::exp(log_reflected) / kPi;
    return {checked(value, "rgamma"), log_gamma_error(log_reflected) + 6 * kEps, 0.0};
  }
  const Scalar log_value = lanczos_log_gamma(z);
  return {checked(std::exp(-log_value), "rgamma"), log_gamma_error(log_value), 0.0};
}

EvalResult pochhammer_direct(Scalar x, long long n) {
  Scalar product{1.0};
  double err = 0.0;
  if (n >= 0) {
    for (long long i = 0; i < n; ++i) {
      const Scalar factor = x + static_cast<double>(i);
      product *= factor;
      err += 2 * kEps + (factor == Scalar{0.0} ? 0.0 : kEps * std::abs(x) / std::abs(factor));
    }
  } else {
    // (x)_{-m} = 1 / ((x-1)(x-2)...(x-m))
    for (long long j = 1; j <= -n; ++j) {
      const Scalar factor = x - static_cast<double>(j);
      if (std::abs(factor) < kPoleTol) {
        throw PoleError("pochhammer: factor x - " + std::to_string(j) + " vanishes");
      }
      product /= factor;
      err += 4 * kEps + kEps * std::abs(x) / std::abs(factor);
    }
  }
  return {checked(product, "pochhammer"), err, 0.0};
}

EvalResult pochhammer_gamma_ratio(Scalar x, long long n) {
  if (n < 0) {
    for (long long j = 1; j <= -n; ++j) {
      if (std::abs(x - static_cast<double>(j)) < kPoleTol) {
        throw PoleError("pochhammer: factor x - " + std::to_string(j) + " vanishes");
      }
    }
  }
  return gamma(x + static_cast<double>(n)) * rgamma(x);
}

EvalResult pochhammer(Scalar x, long long n) {
  if (std::llabs(n) <= kDirectPochhammerLimit) return pochhammer_direct(x, n);
  return pochhammer_gamma_ratio(x, n);
}

}  // namespace qid
