#include "qid/identities.hpp"

#include <algorithm>
#include <cmath>

#include "qid/errors.hpp"

namespace qid {

namespace {

bool finite(Scalar v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

bool too_close(const PoleGuard& g, const QBase& q) {
  if (!finite(g.value)) return true;
  switch (g.side) {
    case LatticeSide::zeros: return lattice_distance(g.value, q, -kGuardRange, 0) < kGuardMargin;
    case LatticeSide::poles: return lattice_distance(g.value, q, 1, kGuardRange) < kGuardMargin;
    case LatticeSide::both: return lattice_distance(g.value, q, -kGuardRange, kGuardRange) < kGuardMargin;
  }
  return true;
}

Admissibility reject(std::string reason) { return {false, std::move(reason)}; }

}  // namespace

Admissibility IdentityDescriptor::admissible(const Params& p) const {
  for (const auto& slot : params) {
    if (!p.contains(slot)) return reject("missing parameter " + slot);
  }
  for (const auto& [key, value] : p.entries()) {
    if (std::find(params.begin(), params.end(), key) == params.end()) return reject("unexpected parameter " + key);
    if (!finite(value)) return reject("non-finite parameter " + key);
  }
  const bool has_q = std::find(params.begin(), params.end(), "q") != params.end();
  if (has_q) {
    const double aq = std::abs(p["q"]);
    if (!(aq < 1.0) || aq == 0.0) return reject("q");
  }
  for (const auto& b : series_bounds(p)) {
    if (!finite(b.value) || !(std::abs(b.value) < 1.0 - 1e-9)) return reject(b.label);
  }
  if (extra) {
    if (auto why = extra(p)) return reject(*why);
  }
  if (guards && has_q) {
    const QBase q(p["q"]);
    for (const auto& g : guards(p)) {
      if (too_close(g, q)) return reject("pole:" + g.label);
    }
  }
  return {};
}

const IdentityDescriptor* find_identity(std::string_view name) {
  const auto& all = catalog();
  const auto it = std::find_if(all.begin(), all.end(), [&](const IdentityDescriptor& d) { return d.name == name; });
  return it == all.end() ? nullptr : &*it;
}

const IdentityDescriptor& identity(std::string_view name) {
  if (const auto* d = find_identity(name)) return *d;
  throw DomainError("unknown identity " + std::string(name));
}

Evaluator idem_symmetrize(Evaluator expr, std::string x, std::string y) {
  return [expr = std::move(expr), x = std::move(x), y = std::move(y)](const Params& p) {
    return expr(p) + expr(p.swapped(x, y));
  };
}

double CheckResult::cancellation_digits() const {
  return std::max(lhs.cancellation_digits, rhs.cancellation_digits);
}

CheckResult compare(const Params& p, const EvalResult& lhs, const EvalResult& rhs, double base_tol) {
  CheckResult out;
  out.params = p;
  out.lhs = lhs;
  out.rhs = rhs;
  out.rel_err = relative_difference(lhs.value, rhs.value);
  out.effective_tol = base_tol * std::pow(10.0, out.cancellation_digits());
  out.pass = out.rel_err <= out.effective_tol;
  return out;
}

CheckResult check(const IdentityDescriptor& id, const Params& p, double base_tol) {
  if (const auto adm = id.admissible(p); !adm) {
    throw InadmissibleError(id.name + ": parameters violate " + adm.reason);
  }
  return compare(p, id.lhs(p), id.rhs(p), std::max(base_tol, id.tol_floor));
}

EvalResult eval_side(const IdentityDescriptor& id, const Params& p, Side side) {
  if (const auto adm = id.admissible(p); !adm) {
    throw InadmissibleError(id.name + ": parameters violate " + adm.reason);
  }
  return side == Side::lhs ? id.lhs(p) : id.rhs(p);
}

}  // namespace qid
