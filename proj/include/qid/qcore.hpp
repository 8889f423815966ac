#pragma once

#include <initializer_list>
#include <optional>
#include <span>

#include "qid/numerics.hpp"

namespace qid {

/// Base of a q-series. Construction enforces |q| < 1.
class QBase {
 public:
  explicit QBase(Scalar q);
  Scalar value() const { return q_; }
  double modulus() const { return std::abs(q_); }
  /// q^n for any integer n.
  Scalar pow(long long n) const { return ipow(q_, n); }

 private:
  Scalar q_;
};

/// Tag selecting the infinite product in qpoch_list.
struct InfiniteIndex {};
inline constexpr InfiniteIndex kInfinity{};

inline constexpr double kDefaultProductThreshold = 1e-16;

/// (x;q)_inf = prod_{i>=0} (1 - x q^i). The product stops at the first N with
/// |x| |q|^N / (1 - |q|) < threshold; that tail bound goes into the error.
EvalResult qpoch_inf(Scalar x, const QBase& q, double threshold = kDefaultProductThreshold);

/// (x;q)_n for any integer n; negative n uses prod_{j=1}^{|n|} 1/(1 - x q^{-j}).
EvalResult qpoch(Scalar x, const QBase& q, long long n);

/// Products (x_1, ..., x_r; q)_n and (x_1, ..., x_r; q)_inf. A PoleError
/// carries the index of the offending element.
EvalResult qpoch_list(std::span<const Scalar> xs, const QBase& q, long long n);
EvalResult qpoch_list(std::span<const Scalar> xs, const QBase& q, InfiniteIndex);

/// (num...; q)_inf / (den...; q)_inf, the shape of every prefactor in the
/// catalog.
EvalResult qpoch_ratio(std::initializer_list<Scalar> num, std::initializer_list<Scalar> den, const QBase& q);

/// Relative lattice distance min over i in [lo, hi] of |1 - x / q^i|.
double lattice_distance(Scalar x, const QBase& q, long long lo, long long hi);

/// The exponent j in [lo, hi] with x = q^j to relative tolerance `tol`, if any.
std::optional<long long> lattice_exponent(Scalar x, const QBase& q, long long lo, long long hi,
                                          double tol = kPoleTol);

}  // namespace qid
