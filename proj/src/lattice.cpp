#include <algorithm>
#include <string>

#include "qid/errors.hpp"
#include "qid/identities.hpp"
#include "qid/series.hpp"

namespace qid {

namespace {

EvalResult prod(std::initializer_list<Scalar> num, std::initializer_list<Scalar> den, const QBase& q) {
  return qpoch_ratio(num, den, q);
}

// Sum_{k >= first} T_k with every factor in the (constant - coeff q^k) form.
EvalResult lattice_sum(std::vector<LinearFactor> num, std::vector<LinearFactor> den, const QBase& q, Scalar z,
                       std::size_t first) {
  TermRecurrence rec;
  rec.num = std::move(num);
  rec.den = std::move(den);
  rec.q = q;
  rec.z = z;
  return sum_terms(rec, first);
}

struct Slots {
  Scalar a, b, c, d, z, qv;
  QBase q;
  explicit Slots(const Params& p)
      : a(p["a"]), b(p["b"]), c(p["c"]), d(p["d"]), z(p["z"]), qv(p["q"]), q(p["q"]) {}
  Scalar abz() const { return a * b * z; }
};

EvalResult thm1_split(const Params& p) {
  const Slots s(p);
  const Scalar abz = s.abz();
  const EvalResult pre = prod({s.a * s.z, s.c / s.b, s.d / s.a, s.qv * s.d / abz}, {s.z, s.d, s.qv / s.b, s.c * s.d / abz}, s.q);
  const EvalResult pos = sum_terms(positive_recurrence(psi_spec({s.a, abz / s.d}, {s.c, s.a * s.z}, s.q, s.d / s.a)));
  const EvalResult neg = lattice_sum({{1.0, s.qv / (s.a * s.z)}, {s.c, s.qv}}, {{1.0, s.qv / s.a}, {1.0, s.qv * s.d / abz}},
                                     s.q, 1.0 / s.b, 1);
  return pre * (pos + neg);
}

EvalResult thm2_split_term(const Params& p) {
  const Slots s(p);
  const EvalResult pre = prod({s.qv, s.b, s.d / s.a, s.a * s.z, s.qv / (s.a * s.z), s.c / s.a},
                              {s.c, s.d, s.b / s.a, s.z, s.qv / s.z, s.qv / s.a}, s.q);
  const EvalResult sum = lattice_sum({{1.0, s.qv * s.a / s.d}, {s.c, s.a * s.qv}}, {{1.0, s.qv}, {1.0, s.qv * s.a / s.b}}, s.q,
                                     s.d / s.abz(), 0);
  return pre * sum;
}

Params declared_order(const IdentityDescriptor& id, const Params& values) {
  Params out;
  for (const auto& slot : id.params) out = out.with(slot, values[slot]);
  return out;
}

Params finite_shift_params(const Params& p, int m) {
  return {{"a", p["a"]}, {"b", p["b"]}, {"d", p["d"]}, {"z", p["z"]}, {"q", p["q"]}, {"m", Scalar(m)}};
}

Params at_lattice(const IdentityDescriptor& id, const Params& without_c, int m) {
  if (!lattice_supported(id.name)) throw DomainError("no lattice form for " + id.name);
  if (m < 1 || m > kLatticeMaxShift) throw DomainError("lattice shift m must lie in 1.." + std::to_string(kLatticeMaxShift));
  const QBase q(without_c["q"]);
  return declared_order(id, without_c.with("c", q.pow(1 + m)));
}

}  // namespace

bool lattice_supported(std::string_view name) {
  return name == "thm1_bailey" || name == "thm2_expansion" || name == "thm3_chen_gu";
}

EvalResult split_lhs(const Params& p) {
  const Slots s(p);
  const EvalResult pos = sum_terms(positive_recurrence(psi_spec({s.a, s.b}, {s.c, s.d}, s.q, s.z)));
  const EvalResult neg = lattice_sum({{1.0, s.qv / s.d}, {s.c, s.qv}}, {{1.0, s.qv / s.a}, {1.0, s.qv / s.b}}, s.q,
                                     s.d / s.abz(), 1);
  return pos + neg;
}

EvalResult split_rhs(std::string_view name, const Params& p) {
  if (name == "thm1_bailey") return thm1_split(p);
  if (name == "thm2_expansion") return idem_symmetrize(thm2_split_term, "a", "b")(p);
  if (name == "thm3_chen_gu") return identity(name).rhs(p);
  throw DomainError("no lattice form for " + std::string(name));
}

Admissibility lattice_admissible(const IdentityDescriptor& id, const Params& without_c, int m) {
  const Params p = at_lattice(id, without_c, m);
  if (auto adm = id.admissible(p); !adm) return adm;
  if (auto adm = identity("finite_shift").admissible(finite_shift_params(p, m)); !adm) {
    return {false, "finite_shift " + adm.reason};
  }
  return {};
}

LatticeCheckResult lattice_check(const IdentityDescriptor& id, const Params& without_c, int m, double base_tol) {
  const Params p = at_lattice(id, without_c, m);
  if (const auto adm = lattice_admissible(id, without_c, m); !adm) {
    throw InadmissibleError(id.name + " at c = q^" + std::to_string(1 + m) + ": parameters violate " + adm.reason);
  }
  LatticeCheckResult out;
  out.m = m;
  out.c = p["c"];
  const double tol = std::max(base_tol, id.tol_floor);
  out.split = compare(p, split_lhs(p), split_rhs(id.name, p), tol);
  out.finite_shift = check(identity("finite_shift"), finite_shift_params(p, m), tol);
  out.pass = out.split.pass && out.finite_shift.pass;
  return out;
}

namespace chains {

EvalResult thm1_iterated(const Params& p) {
  const Slots s(p);
  const Scalar abz = s.abz();
  const EvalResult pre = prod({s.b * s.z, s.d / s.a, s.c / s.b, s.qv * s.c / abz}, {s.z, s.c, s.qv / s.a, s.c * s.d / abz}, s.q);
  const Params inner{{"a", abz / s.c}, {"b", s.b}, {"c", s.b * s.z}, {"d", s.d}, {"z", s.c / s.b}, {"q", s.qv}};
  return pre * identity("thm1_bailey").rhs(inner);
}

Params reversal_params(const Params& p) {
  const Slots s(p);
  return {{"a", s.qv / s.c}, {"b", s.qv / s.d}, {"c", s.qv / s.a}, {"d", s.qv / s.b}, {"z", s.c * s.d / s.abz()}, {"q", s.qv}};
}

EvalResult thm2_reversed(const Params& p) { return identity("thm2_expansion").rhs(reversal_params(p)); }

namespace {

Params chen_gu_params(const Params& p) {
  const Scalar a = p["a"], b = p["b"], c = p["c"], d = p["d"], q = p["q"];
  return {{"a", b}, {"b", a}, {"c", c}, {"d", d}, {"z", c * d / (q * a * b)}, {"q", q}};
}

Params heine_params(const Params& p) {
  const Scalar a = p["a"], b = p["b"], c = p["c"], d = p["d"], q = p["q"];
  return {{"a", d / b}, {"b", q}, {"c", q * q * a / c}, {"z", q * a / d}, {"q", q}};
}

}  // namespace

Admissibility chu_derivation_admissible(const Params& p) {
  if (auto adm = identity("chu_formula").admissible(p); !adm) return adm;
  if (auto adm = identity("thm3_chen_gu").admissible(chen_gu_params(p)); !adm) return {false, "thm3_chen_gu " + adm.reason};
  if (auto adm = identity("heine_iii1").admissible(heine_params(p)); !adm) return {false, "heine_iii1 " + adm.reason};
  return {};
}

ChuDerivation chu_derivation(const Params& p) {
  if (const auto adm = chu_derivation_admissible(p); !adm) {
    throw InadmissibleError("chu derivation: parameters violate " + adm.reason);
  }
  const Scalar a = p["a"], b = p["b"], c = p["c"], d = p["d"], qv = p["q"];
  const QBase q(qv);
  ChuDerivation out;
  out.chen_gu_substituted = identity("thm3_chen_gu").rhs(chen_gu_params(p));
  const EvalResult pre = prod({c / a, c / qv, qv * qv / c, qv / d}, {c, c / (qv * a), qv / a, qv / b}, q);
  const EvalResult gauss = prod({qv, a, qv / d, d / b, c * d / (qv * qv * a), qv * qv * qv * a / (c * d), c / b, c / a},
                                {qv / b, c, d / qv, qv * qv / d, qv * a / d, c / (qv * a), qv * qv * a / c, c * d / (qv * a * b)}, q);
  out.after_q_gauss = pre * phi({d / b, qv}, {qv * qv * a / c}, q, qv * a / d) - gauss;
  out.after_heine = pre * identity("heine_iii1").rhs(heine_params(p)) - gauss;
  return out;
}

}  // namespace chains

}  // namespace qid
