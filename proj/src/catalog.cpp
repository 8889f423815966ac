#include <cmath>
#include <string>

#include "qid/errors.hpp"
#include "qid/identities.hpp"
#include "qid/series.hpp"

namespace qid {

namespace {

using Guards = std::vector<PoleGuard>;
using Bounds = std::vector<SeriesBound>;

PoleGuard zeros(std::string label, Scalar v) { return {std::move(label), v, LatticeSide::zeros}; }
PoleGuard poles(std::string label, Scalar v) { return {std::move(label), v, LatticeSide::poles}; }

void append(Guards& into, Guards more) { into.insert(into.end(), more.begin(), more.end()); }

// Numerators of a bilateral series blow up on q^i (i >= 1), denominators
// vanish on q^{-i} (i >= 0).
Guards bilateral_guards(const Params& p) {
  return {poles("a", p["a"]), poles("b", p["b"]), zeros("c", p["c"]), zeros("d", p["d"])};
}

EvalResult prod(std::initializer_list<Scalar> num, std::initializer_list<Scalar> den, const QBase& q) {
  return qpoch_ratio(num, den, q);
}

// Positive residue distance of z from the integers in `[lo, hi]`.
double integer_distance(Scalar z, long long lo, long long hi) {
  double best = 1e300;
  for (long long n = lo; n <= hi; ++n) best = std::min(best, std::abs(z - static_cast<double>(n)));
  return best;
}

IdentityDescriptor ramanujan_1psi1() {
  IdentityDescriptor d;
  d.name = "ramanujan_1psi1";
  d.params = {"a", "c", "z", "q"};
  d.region = "|c/a| < |z| < 1";
  d.reference = "Ramanujan's 1psi1 summation (Gasper-Rahman II.29)";
  d.bounds = [](const Params& p) {
    return Bounds{{"z", p["z"]}, {"c/az", p["c"] / (p["a"] * p["z"])}};
  };
  d.guards = [](const Params& p) {
    const Scalar a = p["a"], c = p["c"], z = p["z"], q = p["q"];
    return Guards{poles("a", a), zeros("c", c), zeros("q/a", q / a), zeros("z", z), zeros("c/az", c / (a * z))};
  };
  d.lhs = [](const Params& p) { return psi({p["a"]}, {p["c"]}, QBase(p["q"]), p["z"]); };
  d.rhs = [](const Params& p) {
    const Scalar a = p["a"], c = p["c"], z = p["z"];
    const QBase q(p["q"]);
    const Scalar qv = q.value();
    return prod({qv, c / a, a * z, qv / (a * z)}, {c, qv / a, z, c / (a * z)}, q);
  };
  return d;
}

IdentityDescriptor q_binomial() {
  IdentityDescriptor d;
  d.name = "q_binomial";
  d.params = {"a", "z", "q"};
  d.region = "|z| < 1";
  d.reference = "q-binomial theorem (Gasper-Rahman II.3)";
  d.bounds = [](const Params& p) { return Bounds{{"z", p["z"]}}; };
  d.guards = [](const Params& p) { return Guards{zeros("z", p["z"])}; };
  d.lhs = [](const Params& p) { return phi({p["a"]}, {}, QBase(p["q"]), p["z"]); };
  d.rhs = [](const Params& p) {
    const Scalar a = p["a"], z = p["z"];
    return prod({a * z}, {z}, QBase(p["q"]));
  };
  return d;
}

IdentityDescriptor q_gauss() {
  IdentityDescriptor d;
  d.name = "q_gauss";
  d.params = {"a", "b", "c", "q"};
  d.region = "|c/ab| < 1";
  d.reference = "q-Gauss summation (Gasper-Rahman II.8)";
  d.bounds = [](const Params& p) { return Bounds{{"c/ab", p["c"] / (p["a"] * p["b"])}}; };
  d.guards = [](const Params& p) {
    const Scalar a = p["a"], b = p["b"], c = p["c"];
    return Guards{zeros("c", c), zeros("c/ab", c / (a * b))};
  };
  d.lhs = [](const Params& p) {
    const Scalar a = p["a"], b = p["b"], c = p["c"];
    return phi({a, b}, {c}, QBase(p["q"]), c / (a * b));
  };
  d.rhs = [](const Params& p) {
    const Scalar a = p["a"], b = p["b"], c = p["c"];
    return prod({c / a, c / b}, {c, c / (a * b)}, QBase(p["q"]));
  };
  return d;
}

EvalResult phi21(const Params& p) { return phi({p["a"], p["b"]}, {p["c"]}, QBase(p["q"]), p["z"]); }

IdentityDescriptor heine_iii1() {
  IdentityDescriptor d;
  d.name = "heine_iii1";
  d.params = {"a", "b", "c", "z", "q"};
  d.region = "max{|z|, |b|} < 1";
  d.reference = "Heine's transformation (Gasper-Rahman III.1)";
  d.bounds = [](const Params& p) { return Bounds{{"z", p["z"]}, {"b", p["b"]}}; };
  d.guards = [](const Params& p) {
    const Scalar a = p["a"], c = p["c"], z = p["z"];
    return Guards{zeros("c", c), zeros("z", z), zeros("az", a * z)};
  };
  d.lhs = phi21;
  d.rhs = [](const Params& p) {
    const Scalar a = p["a"], b = p["b"], c = p["c"], z = p["z"];
    const QBase q(p["q"]);
    return prod({b, a * z}, {c, z}, q) * phi({c / b, z}, {a * z}, q, b);
  };
  return d;
}

IdentityDescriptor heine_iii2() {
  IdentityDescriptor d;
  d.name = "heine_iii2";
  d.params = {"a", "b", "c", "z", "q"};
  d.region = "max{|z|, |c/b|} < 1";
  d.reference = "Heine's transformation (Gasper-Rahman III.2)";
  d.bounds = [](const Params& p) { return Bounds{{"z", p["z"]}, {"c/b", p["c"] / p["b"]}}; };
  d.guards = [](const Params& p) {
    const Scalar b = p["b"], c = p["c"], z = p["z"];
    return Guards{zeros("c", c), zeros("z", z), zeros("bz", b * z)};
  };
  d.lhs = phi21;
  d.rhs = [](const Params& p) {
    const Scalar a = p["a"], b = p["b"], c = p["c"], z = p["z"];
    const QBase q(p["q"]);
    return prod({c / b, b * z}, {c, z}, q) * phi({a * b * z / c, b}, {b * z}, q, c / b);
  };
  return d;
}

std::optional<std::string> idem_gap(const Params& p, const char* x, const char* y) {
  if (std::abs(1.0 - p[x] / p[y]) <= 0.1) return std::string("idem-degeneracy");
  return std::nullopt;
}

IdentityDescriptor watson_iii32() {
  IdentityDescriptor d;
  d.name = "watson_iii32";
  d.params = {"a", "b", "c", "z", "q"};
  d.region = "max{|z|, |qc/abz|} < 1";
  d.reference = "Watson's three-term 2phi1 transformation (Gasper-Rahman III.32)";
  d.bounds = [](const Params& p) {
    return Bounds{{"z", p["z"]}, {"qc/abz", p["q"] * p["c"] / (p["a"] * p["b"] * p["z"])}};
  };
  d.extra = [](const Params& p) { return idem_gap(p, "a", "b"); };
  d.guards = [](const Params& p) {
    const Scalar a = p["a"], b = p["b"], c = p["c"], z = p["z"], q = p["q"];
    return Guards{zeros("c", c),         zeros("z", z),         zeros("q/z", q / z),
                  zeros("b/a", b / a),   zeros("a/b", a / b),   zeros("qa/b", q * a / b),
                  zeros("qb/a", q * b / a)};
  };
  d.lhs = phi21;
  d.rhs = idem_symmetrize(
      [](const Params& p) {
        const Scalar a = p["a"], b = p["b"], c = p["c"], z = p["z"];
        const QBase q(p["q"]);
        const Scalar qv = q.value();
        return prod({b, c / a, a * z, qv / (a * z)}, {c, b / a, z, qv / z}, q) *
               phi({a, qv * a / c}, {qv * a / b}, q, qv * c / (a * b * z));
      },
      "a", "b");
  return d;
}

IdentityDescriptor three_term_iii31() {
  IdentityDescriptor d;
  d.name = "three_term_iii31";
  d.params = {"a", "b", "c", "z", "q"};
  d.region = "max{|z|, |qb/c|} < 1";
  d.reference = "three-term 2phi1 transformation (Gasper-Rahman III.31)";
  d.bounds = [](const Params& p) { return Bounds{{"z", p["z"]}, {"qb/c", p["q"] * p["b"] / p["c"]}}; };
  d.guards = [](const Params& p) {
    const Scalar a = p["a"], b = p["b"], c = p["c"], z = p["z"], q = p["q"];
    return Guards{zeros("c", c),           zeros("az/c", a * z / c),    zeros("q/a", q / a),
                  zeros("qc/az", q * c / (a * z)), zeros("c/q", c / q), zeros("qb/c", q * b / c),
                  zeros("q^2/c", q * q / c)};
  };
  d.lhs = phi21;
  d.rhs = [](const Params& p) {
    const Scalar a = p["a"], b = p["b"], c = p["c"], z = p["z"];
    const QBase q(p["q"]);
    const Scalar qv = q.value();
    const EvalResult first = prod({a * b * z / c, qv / c}, {a * z / c, qv / a}, q) *
                             phi({c / a, qv * c / (a * b * z)}, {qv * c / (a * z)}, q, qv * b / c);
    const EvalResult second =
        prod({b, qv / c, c / a, a * z / qv, qv * qv / (a * z)}, {c / qv, qv * b / c, qv / a, a * z / c, qv * c / (a * z)}, q) *
        phi({qv * a / c, qv * b / c}, {qv * qv / c}, q, z);
    return first - second;
  };
  return d;
}

EvalResult psi22(const Params& p) {
  return psi({p["a"], p["b"]}, {p["c"], p["d"]}, QBase(p["q"]), p["z"]);
}

Scalar abz_of(const Params& p) { return p["a"] * p["b"] * p["z"]; }

IdentityDescriptor thm1_bailey() {
  IdentityDescriptor d;
  d.name = "thm1_bailey";
  d.params = {"a", "b", "c", "d", "z", "q"};
  d.region = "max{|z|, |cd/abz|, |d/a|, |c/b|} < 1";
  d.reference = "Bailey's 2psi2 transformation (Bailey 1950)";
  d.bounds = [](const Params& p) {
    return Bounds{{"z", p["z"]}, {"cd/abz", p["c"] * p["d"] / abz_of(p)}, {"d/a", p["d"] / p["a"]}, {"c/b", p["c"] / p["b"]}};
  };
  d.guards = [](const Params& p) {
    const Scalar a = p["a"], b = p["b"], c = p["c"], dd = p["d"], z = p["z"], q = p["q"];
    const Scalar abz = abz_of(p);
    Guards g = bilateral_guards(p);
    append(g, {zeros("z", z), zeros("q/b", q / b), zeros("cd/abz", c * dd / abz), poles("abz/d", abz / dd),
               zeros("az", a * z)});
    return g;
  };
  d.lhs = psi22;
  d.rhs = [](const Params& p) {
    const Scalar a = p["a"], b = p["b"], c = p["c"], dd = p["d"], z = p["z"];
    const QBase q(p["q"]);
    const Scalar qv = q.value();
    const Scalar abz = abz_of(p);
    return prod({a * z, c / b, dd / a, qv * dd / abz}, {z, dd, qv / b, c * dd / abz}, q) *
           psi({a, abz / dd}, {c, a * z}, q, dd / a);
  };
  return d;
}

IdentityDescriptor thm2_expansion() {
  IdentityDescriptor d;
  d.name = "thm2_expansion";
  d.params = {"a", "b", "c", "d", "z", "q"};
  d.region = "max{|z|, |cd/abz|} < 1";
  d.reference = "2psi2 as a sum of two 2phi1 series (Gasper-Rahman (5.4.4), r = 2)";
  d.bounds = [](const Params& p) { return Bounds{{"z", p["z"]}, {"cd/abz", p["c"] * p["d"] / abz_of(p)}}; };
  d.extra = [](const Params& p) { return idem_gap(p, "a", "b"); };
  d.guards = [](const Params& p) {
    const Scalar a = p["a"], b = p["b"], z = p["z"], q = p["q"];
    Guards g = bilateral_guards(p);
    append(g, {zeros("q/a", q / a), zeros("q/b", q / b), zeros("b/a", b / a), zeros("a/b", a / b), zeros("z", z),
               zeros("q/z", q / z), zeros("qa/b", q * a / b), zeros("qb/a", q * b / a)});
    return g;
  };
  d.lhs = psi22;
  d.rhs = idem_symmetrize(
      [](const Params& p) {
        const Scalar a = p["a"], b = p["b"], c = p["c"], dd = p["d"], z = p["z"];
        const QBase q(p["q"]);
        const Scalar qv = q.value();
        return prod({qv, b, c / a, dd / a, a * z, qv / (a * z)}, {c, dd, qv / a, b / a, z, qv / z}, q) *
               phi({qv * a / c, qv * a / dd}, {qv * a / b}, q, c * dd / abz_of(p));
      },
      "a", "b");
  return d;
}

EvalResult chen_gu_rhs(const Params& p) {
  const Scalar a = p["a"], b = p["b"], c = p["c"], d = p["d"], z = p["z"];
  const QBase q(p["q"]);
  const Scalar qv = q.value();
  const Scalar abz = abz_of(p);
  const EvalResult first = prod({qv, c / b, qv / d, abz / d, qv * d / abz}, {qv / a, qv / b, c, a * z / d, c * d / abz}, q) *
                           phi({c * d / abz, d / a}, {qv * d / (a * z)}, q, qv * b / d);
  const EvalResult second = prod({qv, b, qv / d, qv * c / d, d / a, a * z / qv, qv * qv / (a * z)},
                                 {qv / a, c, d / qv, qv * qv / d, qv * b / d, a * z / d, qv * d / (a * z)}, q) *
                            phi({qv * a / d, qv * b / d}, {qv * c / d}, q, z);
  return first - second;
}

Guards chen_gu_guards(const Params& p) {
  const Scalar a = p["a"], b = p["b"], c = p["c"], dd = p["d"], z = p["z"], q = p["q"];
  const Scalar abz = abz_of(p);
  Guards g = bilateral_guards(p);
  append(g, {zeros("q/a", q / a), zeros("q/b", q / b), zeros("az/d", a * z / dd), zeros("cd/abz", c * dd / abz),
             zeros("qd/az", q * dd / (a * z)), zeros("d/q", dd / q), zeros("q^2/d", q * q / dd), zeros("qb/d", q * b / dd),
             zeros("qc/d", q * c / dd)});
  return g;
}

IdentityDescriptor thm3_chen_gu() {
  IdentityDescriptor d;
  d.name = "thm3_chen_gu";
  d.params = {"a", "b", "c", "d", "z", "q"};
  d.region = "max{|z|, |cd/abz|, |qb/d|} < 1";
  d.reference = "Chen-Gu 2psi2 expansion";
  d.bounds = [](const Params& p) {
    return Bounds{{"z", p["z"]}, {"cd/abz", p["c"] * p["d"] / abz_of(p)}, {"qb/d", p["q"] * p["b"] / p["d"]}};
  };
  d.guards = chen_gu_guards;
  d.lhs = psi22;
  d.rhs = chen_gu_rhs;
  return d;
}

IdentityDescriptor bailey_iterated() {
  IdentityDescriptor d;
  d.name = "bailey_iterated";
  d.params = {"a", "b", "c", "d", "z", "q"};
  d.region = "max{|z|, |cd/abz|} < 1";
  d.reference = "Bailey's iterated 2psi2 transformation (Bailey 1950)";
  d.bounds = [](const Params& p) { return Bounds{{"z", p["z"]}, {"cd/abz", p["c"] * p["d"] / abz_of(p)}}; };
  d.guards = [](const Params& p) {
    const Scalar a = p["a"], b = p["b"], c = p["c"], dd = p["d"], z = p["z"], q = p["q"];
    const Scalar abz = abz_of(p);
    Guards g = bilateral_guards(p);
    append(g, {zeros("q/a", q / a), zeros("q/b", q / b), poles("abz/c", abz / c), poles("abz/d", abz / dd),
               zeros("az", a * z), zeros("bz", b * z)});
    return g;
  };
  d.lhs = psi22;
  d.rhs = [](const Params& p) {
    const Scalar a = p["a"], b = p["b"], c = p["c"], dd = p["d"], z = p["z"];
    const QBase q(p["q"]);
    const Scalar qv = q.value();
    const Scalar abz = abz_of(p);
    return prod({a * z, b * z, qv * c / abz, qv * dd / abz}, {qv / a, qv / b, c, dd}, q) *
           psi({abz / c, abz / dd}, {a * z, b * z}, q, c * dd / abz);
  };
  return d;
}

IdentityDescriptor expansion_r2_545() {
  IdentityDescriptor d;
  d.name = "expansion_r2_545";
  d.params = {"a", "b", "c", "d", "z", "q"};
  d.region = "max{|z|, |cd/abz|} < 1";
  d.reference = "2psi2 as a sum of two 2phi1 series (Gasper-Rahman (5.4.5), r = 2)";
  d.bounds = [](const Params& p) { return Bounds{{"z", p["z"]}, {"cd/abz", p["c"] * p["d"] / abz_of(p)}}; };
  d.extra = [](const Params& p) { return idem_gap(p, "c", "d"); };
  d.guards = [](const Params& p) {
    const Scalar a = p["a"], b = p["b"], c = p["c"], dd = p["d"], q = p["q"];
    const Scalar abz = abz_of(p);
    Guards g = bilateral_guards(p);
    append(g, {zeros("q/a", q / a), zeros("q/b", q / b), zeros("c/d", c / dd), zeros("d/c", dd / c),
               zeros("cd/abz", c * dd / abz), zeros("qabz/cd", q * abz / (c * dd)), zeros("qd/c", q * dd / c),
               zeros("qc/d", q * c / dd)});
    return g;
  };
  d.lhs = psi22;
  d.rhs = idem_symmetrize(
      [](const Params& p) {
        const Scalar a = p["a"], b = p["b"], c = p["c"], dd = p["d"], z = p["z"];
        const QBase q(p["q"]);
        const Scalar qv = q.value();
        const Scalar abz = abz_of(p);
        return prod({qv, qv / dd, c / a, c / b, abz / dd, qv * dd / abz}, {qv / a, qv / b, c, c / dd, c * dd / abz, qv * abz / (c * dd)}, q) *
               phi({qv * a / c, qv * b / c}, {qv * dd / c}, q, z);
      },
      "c", "d");
  return d;
}

EvalResult chu_rhs(const Params& p) {
  const Scalar a = p["a"], b = p["b"], c = p["c"], d = p["d"];
  const QBase q(p["q"]);
  const Scalar qv = q.value();
  const EvalResult product = prod({qv, a, c / b, d / b, c * d / (qv * a), qv * qv * a / (c * d)},
                                  {c, d, qv / b, qv * a / c, qv * a / d, c * d / (qv * a * b)}, q);
  const EvalResult series = a * prod({qv, qv * a / b, qv / c, qv / d}, {qv * a / c, qv * a / d, qv / a, qv / b}, q) *
                            phi({qv * a / c, qv * a / d}, {qv * a / b}, q, qv);
  return product + series;
}

IdentityDescriptor chu_formula() {
  IdentityDescriptor d;
  d.name = "chu_formula";
  d.params = {"a", "b", "c", "d", "q"};
  d.region = "|cd/qab| < 1";
  d.reference = "Chu's 2psi2 formula";
  d.bounds = [](const Params& p) { return Bounds{{"cd/qab", p["c"] * p["d"] / (p["q"] * p["a"] * p["b"])}}; };
  d.guards = [](const Params& p) {
    const Scalar a = p["a"], b = p["b"], c = p["c"], dd = p["d"], q = p["q"];
    Guards g = bilateral_guards(p);
    append(g, {zeros("q/a", q / a), zeros("q/b", q / b), zeros("qa/c", q * a / c), zeros("qa/d", q * a / dd),
               zeros("cd/qab", c * dd / (q * a * b)), zeros("qa/b", q * a / b)});
    return g;
  };
  d.lhs = [](const Params& p) {
    const Scalar a = p["a"], b = p["b"], c = p["c"], dd = p["d"];
    const QBase q(p["q"]);
    return psi({a, b}, {c, dd}, q, c * dd / (q.value() * a * b));
  };
  d.rhs = chu_rhs;
  return d;
}

IdentityDescriptor dougall_2h2() {
  IdentityDescriptor d;
  d.name = "dougall_2h2";
  d.params = {"a", "b", "c", "d"};
  d.region = "Re(c+d-a-b) > 1 (evaluated for Re(c+d-a-b) >= 3)";
  d.reference = "Dougall's 2H2 summation (Dougall 1907)";
  d.tol_floor = 1e-5;
  d.extra = [](const Params& p) -> std::optional<std::string> {
    const Scalar a = p["a"], b = p["b"], c = p["c"], dd = p["d"];
    if ((c + dd - a - b).real() < 3.0) return std::string("Re(c+d-a-b)>=3");
    // (a)_k, (b)_k at negative k and Gamma(1-a), Gamma(1-b): poles at 1, 2, ...
    const auto reach = [](Scalar v) { return static_cast<long long>(std::abs(v)) + 2; };
    if (integer_distance(a, 1, reach(a)) < kGuardMargin) return std::string("pole:a");
    if (integer_distance(b, 1, reach(b)) < kGuardMargin) return std::string("pole:b");
    // (c)_k, (d)_k at positive k and Gamma(c), Gamma(d): poles at 0, -1, ...
    if (integer_distance(c, -reach(c), 0) < kGuardMargin) return std::string("pole:c");
    if (integer_distance(dd, -reach(dd), 0) < kGuardMargin) return std::string("pole:d");
    return std::nullopt;
  };
  d.lhs = [](const Params& p) { return eval_h2(p["a"], p["b"], p["c"], p["d"]); };
  d.rhs = [](const Params& p) {
    const Scalar a = p["a"], b = p["b"], c = p["c"], dd = p["d"];
    return gamma(1.0 - a) * gamma(1.0 - b) * gamma(c) * gamma(dd) * gamma(c + dd - a - b - 1.0) * rgamma(c - a) *
           rgamma(c - b) * rgamma(dd - a) * rgamma(dd - b);
  };
  return d;
}

IdentityDescriptor finite_shift() {
  IdentityDescriptor d;
  d.name = "finite_shift";
  d.params = {"a", "b", "d", "z", "q", "m"};
  d.region = "|z| < 1, m a positive integer";
  d.reference = "2psi2 with denominator q^{1+m} as a shifted 2phi1";
  d.bounds = [](const Params& p) { return Bounds{{"z", p["z"]}}; };
  d.extra = [](const Params& p) -> std::optional<std::string> {
    const Scalar m = p["m"];
    if (m.imag() != 0.0 || m.real() != std::round(m.real()) || m.real() < 1.0 || m.real() > kGuardRange) {
      return std::string("m");
    }
    return std::nullopt;
  };
  d.guards = [](const Params& p) {
    const QBase q(p["q"]);
    const long long m = static_cast<long long>(p["m"].real());
    const Scalar dd = p["d"];
    return Guards{poles("a", p["a"]), poles("b", p["b"]), PoleGuard{"d", dd, LatticeSide::both},
                  zeros("dq^-m", dd * q.pow(-m)), zeros("z", p["z"])};
  };
  d.lhs = [](const Params& p) {
    const QBase q(p["q"]);
    const long long m = p.integer("m");
    return psi({p["a"], p["b"]}, {q.pow(1 + m), p["d"]}, q, p["z"]);
  };
  d.rhs = [](const Params& p) {
    const Scalar a = p["a"], b = p["b"], dd = p["d"], z = p["z"];
    const QBase q(p["q"]);
    const long long m = p.integer("m");
    const Scalar shift = q.pow(-m);
    const std::vector<Scalar> top{a, b};
    const std::vector<Scalar> bottom{q.pow(1 + m), dd};
    return qpoch_list(top, q, -m) * ipow(z, -m) / qpoch_list(bottom, q, -m) *
           phi({a * shift, b * shift}, {dd * shift}, q, z);
  };
  return d;
}

}  // namespace

const std::vector<IdentityDescriptor>& catalog() {
  static const std::vector<IdentityDescriptor> entries = {
      ramanujan_1psi1(), q_binomial(),     q_gauss(),         heine_iii1(),      heine_iii2(),
      watson_iii32(),    three_term_iii31(), thm1_bailey(),   thm2_expansion(),  thm3_chen_gu(),
      bailey_iterated(), expansion_r2_545(), chu_formula(),   dougall_2h2(),     finite_shift(),
  };
  return entries;
}

}  // namespace qid
