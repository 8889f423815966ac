#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qid/numerics.hpp"
#include "qid/qcore.hpp"

namespace qid {

// ---------------------------------------------------------------------------
// One-sided term recurrence
//
// Every one-sided sum in the library has terms T_0 = 1,
//   T_{k+1} = T_k * z * prod_i (alpha_i - beta_i q^k) / prod_j (gamma_j - delta_j q^k) * (-q^k)^p.
// The standard factor (1 - a q^k) is {1, a}; the lattice form (c - q^{k+1})
// is {c, q}.
// ---------------------------------------------------------------------------

struct LinearFactor {
  Scalar constant;
  Scalar coeff;  // factor = constant - coeff * q^k
};

struct TermRecurrence {
  std::vector<LinearFactor> num;
  std::vector<LinearFactor> den;
  QBase q{0.0};
  Scalar z{0.0};
  int q_power = 0;
};

struct StopRule {
  double term_rel = 1e-15;
  double tail_rel = 1e-14;
  std::size_t max_terms = 1'000'000;
};

/// Sum_{k >= first_index} T_k. Stops when the last term is below
/// term_rel * |partial| and the geometric majorant of the tail is below
/// tail_rel * |partial|; the majorant goes into rel_err_estimate.
/// A numerator factor within kPoleTol of zero terminates the sum exactly; a
/// denominator factor within kPoleTol of zero is a PoleError.
EvalResult sum_terms(const TermRecurrence& rec, std::size_t first_index = 0, const StopRule& rule = {});

/// T_0 ... T_{count-1} from the running recurrence (no stopping rule).
std::vector<Scalar> generate_terms(const TermRecurrence& rec, std::size_t count);

/// Upper bound on |T_{j+1} / T_j| for all j >= k, or +inf if none is available.
double ratio_bound(const TermRecurrence& rec, std::size_t k);

// ---------------------------------------------------------------------------
// Series specifications
// ---------------------------------------------------------------------------

enum class SeriesKind { unilateral, bilateral, classical_bilateral };

/// For unilateral series `den` excludes the implicit (q;q)_k.
struct SeriesSpec {
  SeriesKind kind = SeriesKind::unilateral;
  std::vector<Scalar> num;
  std::vector<Scalar> den;
  std::optional<QBase> q;
  Scalar z{0.0};
};

SeriesSpec phi_spec(std::vector<Scalar> num, std::vector<Scalar> den, const QBase& q, Scalar z);
SeriesSpec psi_spec(std::vector<Scalar> num, std::vector<Scalar> den, const QBase& q, Scalar z);
SeriesSpec h2_spec(Scalar a, Scalar b, Scalar c, Scalar d);

enum class Verdict { converges, diverges, boundary };

struct ConvergenceClass {
  Verdict verdict = Verdict::diverges;
  double pos_tail_ratio = 0.0;
  double neg_tail_ratio = 0.0;  // bilateral only
  bool pos_terminates = false;
  bool neg_terminates = false;
  std::optional<double> decay_exponent;  // classical only: Re(sum den - sum num)

  std::string describe() const;
};

inline constexpr double kBoundaryMargin = 1e-9;

ConvergenceClass converges(const SeriesSpec& spec);

/// Recurrences of the k >= 0 part and of the reversed k <= -1 part, the
/// latter indexed so that its T_m is the term of index -m.
TermRecurrence positive_recurrence(const SeriesSpec& spec);
TermRecurrence negative_recurrence(const SeriesSpec& spec);

EvalResult eval_phi(const SeriesSpec& spec, const StopRule& rule = {});
EvalResult eval_psi(const SeriesSpec& spec, const StopRule& rule = {});

/// (k >= 0 part, k <= -1 part) of a bilateral series.
std::pair<EvalResult, EvalResult> split_psi(const SeriesSpec& spec, const StopRule& rule = {});

struct H2Options {
  long long truncation = 100'000;
  double min_decay = 3.0;
};

/// Sum_{k in Z} (a)_k (b)_k / ((c)_k (d)_k) truncated at |k| <= K, with the
/// integral tail bound folded into rel_err_estimate.
EvalResult eval_h2(Scalar a, Scalar b, Scalar c, Scalar d, const H2Options& opts = {});

/// Dispatch on spec.kind.
EvalResult evaluate(const SeriesSpec& spec);

// Shorthands used throughout the identity catalog.
EvalResult phi(std::vector<Scalar> num, std::vector<Scalar> den, const QBase& q, Scalar z);
EvalResult psi(std::vector<Scalar> num, std::vector<Scalar> den, const QBase& q, Scalar z);

}  // namespace qid
