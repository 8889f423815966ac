#pragma once

#include <complex>
#include <limits>

namespace qid {

using Scalar = std::complex<double>;

inline constexpr double kEps = std::numeric_limits<double>::epsilon() / 2;  // unit roundoff
inline constexpr double kPoleTol = 1e-9;
inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Cap on cancellation digits; beyond this all significant digits are gone.
inline constexpr double kMaxCancellationDigits = 16.0;

/// A value together with a running relative-error estimate and the number of
/// decimal digits lost to cancellation while computing it.
struct EvalResult {
  Scalar value{1.0, 0.0};
  double rel_err_estimate = 0.0;
  double cancellation_digits = 0.0;

  static EvalResult exact(Scalar v) { return {v, 0.0, 0.0}; }
};

/// Throw OverflowError unless both components are finite.
Scalar checked(Scalar v, const char* context);

EvalResult operator*(const EvalResult& lhs, const EvalResult& rhs);
EvalResult operator/(const EvalResult& lhs, const EvalResult& rhs);
EvalResult operator+(const EvalResult& lhs, const EvalResult& rhs);
EvalResult operator-(const EvalResult& lhs, const EvalResult& rhs);
EvalResult operator-(const EvalResult& operand);

inline EvalResult operator*(const EvalResult& lhs, Scalar rhs) { return lhs * EvalResult::exact(rhs); }
inline EvalResult operator*(Scalar lhs, const EvalResult& rhs) { return EvalResult::exact(lhs) * rhs; }
inline EvalResult operator/(const EvalResult& lhs, Scalar rhs) { return lhs / EvalResult::exact(rhs); }

EvalResult& operator*=(EvalResult& lhs, const EvalResult& rhs);
EvalResult& operator+=(EvalResult& lhs, const EvalResult& rhs);

/// log10(largest / |total|), clamped to [0, kMaxCancellationDigits].
double cancellation_digits(double largest, double total);

/// Relative distance |a - b| / max(|a|, |b|, 1e-300).
double relative_difference(Scalar a, Scalar b);

/// Integer power by binary exponentiation; negative n inverts.
Scalar ipow(Scalar base, long long n);

/// True when z lies within kPoleTol of {0, -1, -2, ...}.
bool near_nonpositive_integer(Scalar z, double tol = kPoleTol);

/// Gamma function via Lanczos (g = 7, 9 terms) with reflection for Re z < 1/2.
EvalResult gamma(Scalar z);

/// 1/Gamma(z). Entire; exactly zero on the non-positive integers.
EvalResult rgamma(Scalar z);

/// Shifted factorial (x)_n = Gamma(x+n)/Gamma(x) for any integer n.
/// Direct product when |n| <= 64, gamma ratio otherwise.
EvalResult pochhammer(Scalar x, long long n);

EvalResult pochhammer_direct(Scalar x, long long n);
EvalResult pochhammer_gamma_ratio(Scalar x, long long n);

}  // namespace qid
