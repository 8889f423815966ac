#include "qid/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "qid/errors.hpp"

namespace qid {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr long long kTerminationSearch = 1'000'000;

struct StepResult {
  Scalar ratio{0.0};
  double err = 0.0;
  bool terminates = false;
};

// Ratio T_{k+1} / T_k given q^k.
StepResult step_ratio(const TermRecurrence& rec, Scalar qk) {
  StepResult out;
  Scalar top{1.0};
  Scalar bottom{1.0};
  const double aqk = std::abs(qk);
  for (const auto& f : rec.num) {
    const Scalar v = f.constant - f.coeff * qk;
    const double scale = std::max(std::abs(f.constant), std::abs(f.coeff) * aqk);
    if (std::abs(v) <= kPoleTol * scale) {
      out.terminates = true;
      return out;
    }
    top *= v;
    out.err += 3 * kEps + kEps * scale / std::abs(v);
  }
  for (std::size_t j = 0; j < rec.den.size(); ++j) {
    const auto& f = rec.den[j];
    const Scalar v = f.constant - f.coeff * qk;
    const double scale = std::max(std::abs(f.constant), std::abs(f.coeff) * aqk);
    if (std::abs(v) <= kPoleTol * scale) {
      throw PoleError("series: denominator factor vanishes", j);
    }
    bottom *= v;
    out.err += 5 * kEps + kEps * scale / std::abs(v);
  }
  out.ratio = rec.z * top / bottom;
  if (rec.q_power != 0) out.ratio *= ipow(-qk, rec.q_power);
  return out;
}

bool terminates_positive(const std::vector<Scalar>& num, const QBase& q) {
  // (a;q)_k vanishes for k > j when a = q^{-j}, j >= 0.
  return std::any_of(num.begin(), num.end(), [&](Scalar a) {
    return lattice_exponent(a, q, -kTerminationSearch, 0).has_value();
  });
}

bool terminates_negative(const std::vector<Scalar>& den, const QBase& q) {
  // 1/(b;q)_{-k} vanishes for k >= j when b = q^j, j >= 1.
  return std::any_of(den.begin(), den.end(), [&](Scalar b) {
    return lattice_exponent(b, q, 1, kTerminationSearch).has_value();
  });
}

Verdict classify(double ratio) {
  if (ratio < 1.0 - kBoundaryMargin) return Verdict::converges;
  if (ratio <= 1.0 + kBoundaryMargin) return Verdict::boundary;
  return Verdict::diverges;
}

Verdict worst(Verdict a, Verdict b) {
  if (a == Verdict::diverges || b == Verdict::diverges) return Verdict::diverges;
  if (a == Verdict::boundary || b == Verdict::boundary) return Verdict::boundary;
  return Verdict::converges;
}

double positive_ratio(int q_power, Scalar z) {
  if (z == Scalar{0.0}) return 0.0;
  if (q_power > 0) return 0.0;
  if (q_power < 0) return kInf;
  return std::abs(z);
}

void require_convergence(const SeriesSpec& spec) {
  const ConvergenceClass cls = converges(spec);
  if (cls.verdict != Verdict::converges) throw DivergesError("series outside its convergence region: " + cls.describe());
}

const QBase& base_of(const SeriesSpec& spec) {
  if (!spec.q) throw DomainError("basic hypergeometric series needs a base q");
  return *spec.q;
}

}  // namespace

double ratio_bound(const TermRecurrence& rec, std::size_t k) {
  const double aq = rec.q.modulus();
  const double aqk = std::pow(aq, static_cast<double>(k));
  double bound = std::abs(rec.z);
  int exponent = rec.q_power;
  for (const auto& f : rec.num) {
    if (f.constant == Scalar{0.0}) {
      bound *= std::abs(f.coeff);
      ++exponent;
    } else {
      bound *= std::abs(f.constant) + std::abs(f.coeff) * aqk;
    }
  }
  for (const auto& f : rec.den) {
    if (f.constant == Scalar{0.0}) {
      bound /= std::abs(f.coeff);
      --exponent;
    } else {
      const double lower = std::abs(f.constant) - std::abs(f.coeff) * aqk;
      if (lower <= 0.0) return kInf;
      bound /= lower;
    }
  }
  if (exponent < 0) return kInf;
  if (exponent > 0) bound *= std::pow(aqk, exponent);
  return bound;
}

EvalResult sum_terms(const TermRecurrence& rec, std::size_t first_index, const StopRule& rule) {
  const Scalar q = rec.q.value();
  Scalar term{1.0};
  Scalar qk{1.0};
  Scalar sum{0.0};
  double term_err = 0.0;
  double abs_err = 0.0;
  double largest_partial = 0.0;
  double tail = 0.0;

  for (std::size_t k = 0;; ++k) {
    if (k > rule.max_terms) throw CapError("series: term cap reached before the stopping rule held");
    const bool counted = k >= first_index;
    if (counted) {
      sum = checked(sum + term, "series partial sum");
      largest_partial = std::max(largest_partial, std::abs(sum));
      abs_err += std::abs(term) * term_err + kEps * std::abs(sum);
      if (term == Scalar{0.0}) break;
    }
    const StepResult step = step_ratio(rec, qk);
    if (step.terminates) break;
    if (counted) {
      const double t = std::abs(term);
      const double s = std::abs(sum);
      if (t <= rule.term_rel * s) {
        const double rho = ratio_bound(rec, k);
        if (rho < 1.0) {
          const double majorant = t * rho / (1.0 - rho);
          if (majorant <= rule.tail_rel * s) {
            tail = majorant;
            break;
          }
        }
      }
    }
    term = checked(term * step.ratio, "series term");
    term_err += step.err;
    qk *= q;
  }

  const double s = std::abs(sum);
  EvalResult out{sum, 0.0, cancellation_digits(largest_partial, s)};
  if (s > 0.0) {
    out.rel_err_estimate = (abs_err + tail) / s;
  } else {
    out.rel_err_estimate = (abs_err + tail) > 0.0 ? 1.0 : 0.0;
  }
  return out;
}

std::vector<Scalar> generate_terms(const TermRecurrence& rec, std::size_t count) {
  std::vector<Scalar> terms;
  terms.reserve(count);
  Scalar term{1.0};
  Scalar qk{1.0};
  for (std::size_t k = 0; k < count; ++k) {
    terms.push_back(term);
    const StepResult step = step_ratio(rec, qk);
    term = step.terminates ? Scalar{0.0} : term * step.ratio;
    qk *= rec.q.value();
  }
  return terms;
}

SeriesSpec phi_spec(std::vector<Scalar> num, std::vector<Scalar> den, const QBase& q, Scalar z) {
  return {SeriesKind::unilateral, std::move(num), std::move(den), q, z};
}

SeriesSpec psi_spec(std::vector<Scalar> num, std::vector<Scalar> den, const QBase& q, Scalar z) {
  return {SeriesKind::bilateral, std::move(num), std::move(den), q, z};
}

SeriesSpec h2_spec(Scalar a, Scalar b, Scalar c, Scalar d) {
  return {SeriesKind::classical_bilateral, {a, b}, {c, d}, std::nullopt, Scalar{1.0}};
}

std::string ConvergenceClass::describe() const {
  std::ostringstream os;
  os.precision(6);
  switch (verdict) {
    case Verdict::converges: os << "converges"; break;
    case Verdict::diverges: os << "diverges"; break;
    case Verdict::boundary: os << "boundary"; break;
  }
  if (decay_exponent) {
    os << " (Re(sum den - sum num) = " << *decay_exponent << ", need > 1)";
    return os.str();
  }
  os << " (k->+inf ratio " << (pos_terminates ? std::string("terminates") : std::to_string(pos_tail_ratio));
  os << ", k->-inf ratio " << (neg_terminates ? std::string("terminates") : std::to_string(neg_tail_ratio)) << ")";
  return os.str();
}

ConvergenceClass converges(const SeriesSpec& spec) {
  ConvergenceClass out;
  const int r = static_cast<int>(spec.num.size());
  if (spec.kind == SeriesKind::classical_bilateral) {
    Scalar excess{0.0};
    for (Scalar b : spec.den) excess += b;
    for (Scalar a : spec.num) excess -= a;
    out.decay_exponent = excess.real();
    out.pos_tail_ratio = out.neg_tail_ratio = std::abs(spec.z);
    if (std::abs(spec.z - 1.0) > kBoundaryMargin) {
      out.verdict = std::abs(std::abs(spec.z) - 1.0) <= kBoundaryMargin ? Verdict::boundary : Verdict::diverges;
      return out;
    }
    const double s = excess.real();
    if (s > 1.0 + kBoundaryMargin) {
      out.verdict = Verdict::converges;
    } else if (s >= 1.0 - kBoundaryMargin) {
      out.verdict = Verdict::boundary;
    } else {
      out.verdict = Verdict::diverges;
    }
    return out;
  }

  const QBase& q = base_of(spec);
  if (spec.kind == SeriesKind::unilateral) {
    const int s = static_cast<int>(spec.den.size()) + 1;
    out.pos_terminates = terminates_positive(spec.num, q);
    out.pos_tail_ratio = out.pos_terminates ? 0.0 : positive_ratio(s - r, spec.z);
    out.verdict = out.pos_terminates ? Verdict::converges : classify(out.pos_tail_ratio);
    return out;
  }

  const int s = static_cast<int>(spec.den.size());
  out.pos_terminates = terminates_positive(spec.num, q);
  out.pos_tail_ratio = out.pos_terminates ? 0.0 : positive_ratio(s - r, spec.z);
  out.neg_terminates = terminates_negative(spec.den, q);
  if (out.neg_terminates) {
    out.neg_tail_ratio = 0.0;
  } else if (spec.z == Scalar{0.0}) {
    out.neg_tail_ratio = kInf;
  } else {
    // Ratio of consecutive k -> -inf terms tends to C u^e with u = q^{k+1}.
    int exponent = s - r;
    double c = 1.0 / std::abs(spec.z);
    for (Scalar b : spec.den) {
      if (b == Scalar{0.0}) ++exponent; else c *= std::abs(b);
    }
    for (Scalar a : spec.num) {
      if (a == Scalar{0.0}) --exponent; else c /= std::abs(a);
    }
    out.neg_tail_ratio = exponent > 0 ? 0.0 : (exponent < 0 ? kInf : c);
  }
  const Verdict pos = out.pos_terminates ? Verdict::converges : classify(out.pos_tail_ratio);
  const Verdict neg = out.neg_terminates ? Verdict::converges : classify(out.neg_tail_ratio);
  out.verdict = worst(pos, neg);
  return out;
}

TermRecurrence positive_recurrence(const SeriesSpec& spec) {
  const QBase& q = base_of(spec);
  TermRecurrence rec;
  rec.q = q;
  rec.z = spec.z;
  for (Scalar a : spec.num) rec.num.push_back({1.0, a});
  for (Scalar b : spec.den) rec.den.push_back({1.0, b});
  int s = static_cast<int>(spec.den.size());
  if (spec.kind == SeriesKind::unilateral) {
    rec.den.push_back({1.0, q.value()});
    ++s;
  }
  rec.q_power = s - static_cast<int>(spec.num.size());
  return rec;
}

TermRecurrence negative_recurrence(const SeriesSpec& spec) {
  // t_{-m-1} / t_{-m} = prod (u - b_j) / prod (u - a_i) * (-u)^{s-r} / z, u = q^{m+1}.
  const QBase& q = base_of(spec);
  if (spec.z == Scalar{0.0}) throw DivergesError("bilateral series with z = 0 has an unbounded negative tail");
  TermRecurrence rec;
  rec.q = q;
  const int p = static_cast<int>(spec.den.size()) - static_cast<int>(spec.num.size());
  for (Scalar b : spec.den) rec.num.push_back({-b, -q.value()});
  for (Scalar a : spec.num) rec.den.push_back({-a, -q.value()});
  rec.q_power = p;
  rec.z = q.pow(p) / spec.z;
  return rec;
}

EvalResult eval_phi(const SeriesSpec& spec, const StopRule& rule) {
  if (spec.kind != SeriesKind::unilateral) throw DomainError("eval_phi needs a unilateral series");
  require_convergence(spec);
  return sum_terms(positive_recurrence(spec), 0, rule);
}

std::pair<EvalResult, EvalResult> split_psi(const SeriesSpec& spec, const StopRule& rule) {
  if (spec.kind != SeriesKind::bilateral) throw DomainError("split_psi needs a bilateral series");
  require_convergence(spec);
  return {sum_terms(positive_recurrence(spec), 0, rule), sum_terms(negative_recurrence(spec), 1, rule)};
}

EvalResult eval_psi(const SeriesSpec& spec, const StopRule& rule) {
  const auto [pos, neg] = split_psi(spec, rule);
  return pos + neg;
}

EvalResult eval_h2(Scalar a, Scalar b, Scalar c, Scalar d, const H2Options& opts) {
  const ConvergenceClass cls = converges(h2_spec(a, b, c, d));
  if (cls.verdict != Verdict::converges) throw DivergesError("2H2 outside its convergence region: " + cls.describe());
  const double s = *cls.decay_exponent;
  if (s < opts.min_decay) {
    throw SlowConvergenceError("2H2 needs Re(c+d-a-b) >= " + std::to_string(opts.min_decay) +
                               " for certified truncation, got " + std::to_string(s));
  }
  const long long kmax = opts.truncation;
  Scalar total{1.0};
  double abs_err = 0.0;
  double largest = 1.0;
  double tail = 0.0;

  // k -> +inf: t_{k+1} = t_k (a+k)(b+k) / ((c+k)(d+k))
  {
    Scalar term{1.0};
    Scalar partial{0.0};
    double err = 0.0;
    bool finished = false;
    for (long long k = 0; k < kmax; ++k) {
      const double dk = static_cast<double>(k);
      if (std::abs(c + dk) < kPoleTol || std::abs(d + dk) < kPoleTol) throw PoleError("2H2: denominator (c)_k or (d)_k vanishes");
      if (std::abs(a + dk) < kPoleTol || std::abs(b + dk) < kPoleTol) {
        finished = true;
        break;
      }
      term = term * ((a + dk) * (b + dk) / ((c + dk) * (d + dk)));
      err += 8 * kEps;
      partial += term;
      abs_err += std::abs(term) * err + kEps * std::abs(partial);
    }
    if (!finished) tail += std::abs(term) * static_cast<double>(kmax) / (s - 1.0);
    total += partial;
    largest = std::max(largest, std::abs(partial));
  }
  // k -> -inf: t_{k-1} = t_k (c+k-1)(d+k-1) / ((a+k-1)(b+k-1))
  {
    Scalar term{1.0};
    Scalar partial{0.0};
    double err = 0.0;
    bool finished = false;
    for (long long k = 0; k > -kmax; --k) {
      const double dk = static_cast<double>(k - 1);
      if (std::abs(a + dk) < kPoleTol || std::abs(b + dk) < kPoleTol) throw PoleError("2H2: (a)_k or (b)_k has a pole at negative k");
      if (std::abs(c + dk) < kPoleTol || std::abs(d + dk) < kPoleTol) {
        finished = true;
        break;
      }
      term = term * ((c + dk) * (d + dk) / ((a + dk) * (b + dk)));
      err += 8 * kEps;
      partial += term;
      abs_err += std::abs(term) * err + kEps * std::abs(partial);
    }
    if (!finished) tail += std::abs(term) * static_cast<double>(kmax) / (s - 1.0);
    total += partial;
    largest = std::max(largest, std::abs(partial));
  }

  checked(total, "2H2 sum");
  const double mag = std::abs(total);
  EvalResult out{total, 0.0, cancellation_digits(largest, mag)};
  out.rel_err_estimate = mag > 0.0 ? (abs_err + tail) / mag : 1.0;
  return out;
}

EvalResult evaluate(const SeriesSpec& spec) {
  switch (spec.kind) {
    case SeriesKind::unilateral: return eval_phi(spec);
    case SeriesKind::bilateral: return eval_psi(spec);
    case SeriesKind::classical_bilateral:
      if (spec.num.size() != 2 || spec.den.size() != 2) throw DomainError("classical bilateral series supports 2H2 only");
      if (spec.z != Scalar{1.0}) throw DivergesError("2H2 is evaluated at argument 1 only");
      return eval_h2(spec.num[0], spec.num[1], spec.den[0], spec.den[1]);
  }
  throw DomainError("unknown series kind");
}

EvalResult phi(std::vector<Scalar> num, std::vector<Scalar> den, const QBase& q, Scalar z) {
  return eval_phi(phi_spec(std::move(num), std::move(den), q, z));
}

EvalResult psi(std::vector<Scalar> num, std::vector<Scalar> den, const QBase& q, Scalar z) {
  return eval_psi(psi_spec(std::move(num), std::move(den), q, z));
}

}  // namespace qid
