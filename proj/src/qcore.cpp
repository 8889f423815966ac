#include "qid/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "qid/errors.hpp"

namespace qid {

namespace {

// Rounding error of one factor 1 - w, amplified when w is close to 1.
double factor_error(Scalar w, Scalar factor) {
  const double f = std::abs(factor);
  if (f == 0.0) return 0.0;
  return 3 * kEps + kEps * std::abs(w) / f;
}

// Candidate exponents i with |q^i| closest to |x|.
template <typename Visit>
void visit_nearby_exponents(Scalar x, const QBase& q, long long lo, long long hi, Visit&& visit) {
  const double ax = std::abs(x);
  const double aq = q.modulus();
  if (ax == 0.0 || aq == 0.0 || lo > hi) return;
  const double centre = std::log(ax) / std::log(aq);
  if (!std::isfinite(centre)) return;
  const auto base = static_cast<long long>(std::floor(centre));
  for (long long i = base - 1; i <= base + 2; ++i) {
    if (i >= lo && i <= hi) visit(i);
  }
}

}  // namespace

QBase::QBase(Scalar q) : q_(q) {
  if (!(std::abs(q) < 1.0) || !std::isfinite(q.real()) || !std::isfinite(q.imag())) {
    throw DomainError("base q must satisfy |q| < 1");
  }
}

EvalResult qpoch_inf(Scalar x, const QBase& q, double threshold) {
  const double aq = q.modulus();
  const double ax = std::abs(x);
  Scalar product{1.0};
  Scalar w = x;  // x q^i
  double err = 0.0;
  double tail = ax / (1.0 - aq);
  while (tail >= threshold) {
    const Scalar factor = 1.0 - w;
    if (factor == Scalar{0.0}) return EvalResult::exact(0.0);
    product *= factor;
    err += factor_error(w, factor);
    w *= q.value();
    tail *= aq;
  }
  // |log prod_{i>=N}(1 - x q^i)| <= tail / (1 - tail) for tail < 1.
  err += tail / (1.0 - std::min(tail, 0.5));
  return {checked(product, "qpoch_inf"), err, 0.0};
}

EvalResult qpoch(Scalar x, const QBase& q, long long n) {
  Scalar product{1.0};
  double err = 0.0;
  if (n >= 0) {
    Scalar w = x;
    for (long long i = 0; i < n; ++i) {
      const Scalar factor = 1.0 - w;
      product *= factor;
      err += factor_error(w, factor);
      w *= q.value();
    }
  } else {
    const Scalar q_inv = 1.0 / q.value();
    Scalar w = x * q_inv;
    for (long long j = 1; j <= -n; ++j) {
      const Scalar factor = 1.0 - w;
      if (std::abs(factor) < kPoleTol) {
        throw PoleError("qpoch: factor 1 - x q^-" + std::to_string(j) + " vanishes");
      }
      product /= factor;
      err += factor_error(w, factor) + kEps * static_cast<double>(j);
      w *= q_inv;
    }
  }
  return {checked(product, "qpoch"), err, 0.0};
}

EvalResult qpoch_list(std::span<const Scalar> xs, const QBase& q, long long n) {
  EvalResult out = EvalResult::exact(1.0);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    try {
      out *= qpoch(xs[i], q, n);
    } catch (const PoleError& e) {
      throw PoleError(e.what(), i);
    }
  }
  return out;
}

EvalResult qpoch_list(std::span<const Scalar> xs, const QBase& q, InfiniteIndex) {
  EvalResult out = EvalResult::exact(1.0);
  for (const Scalar x : xs) out *= qpoch_inf(x, q);
  return out;
}

EvalResult qpoch_ratio(std::initializer_list<Scalar> num, std::initializer_list<Scalar> den, const QBase& q) {
  const std::vector<Scalar> n(num), d(den);
  const EvalResult bottom = qpoch_list(d, q, kInfinity);
  if (bottom.value == Scalar{0.0}) throw PoleError("infinite product in a denominator vanishes");
  return qpoch_list(n, q, kInfinity) / bottom;
}

double lattice_distance(Scalar x, const QBase& q, long long lo, long long hi) {
  double best = std::numeric_limits<double>::infinity();
  if (x == Scalar{0.0}) return best;
  visit_nearby_exponents(x, q, lo, hi, [&](long long i) {
    best = std::min(best, std::abs(1.0 - x / q.pow(i)));
  });
  return best;
}

std::optional<long long> lattice_exponent(Scalar x, const QBase& q, long long lo, long long hi, double tol) {
  std::optional<long long> found;
  visit_nearby_exponents(x, q, lo, hi, [&](long long i) {
    if (!found && std::abs(1.0 - x / q.pow(i)) < tol) found = i;
  });
  return found;
}

}  // namespace qid
