#include <algorithm>
#include <set>
#include <string>

#include "doctest.h"
#include "qid/errors.hpp"
#include "qid/identities.hpp"
#include "qid/sampler.hpp"
#include "qid/series.hpp"

using qid::Params;
using qid::Scalar;

namespace {

Params thm_params() {
  return {{"a", 1.3}, {"b", Scalar(0.9, 0.4)}, {"c", 0.35}, {"d", Scalar(0.45, -0.1)}, {"z", 0.5}, {"q", 0.3}};
}

Scalar ramanujan(Scalar a, Scalar c, Scalar z, Scalar q) {
  return qid::identity("ramanujan_1psi1").rhs({{"a", a}, {"c", c}, {"z", z}, {"q", q}}).value;
}

}  // namespace

TEST_CASE("catalog contents") {
  const auto& all = qid::catalog();
  REQUIRE(all.size() == 15);
  std::set<std::string> names;
  for (const auto& id : all) names.insert(id.name);
  CHECK(names.size() == 15);
  CHECK(all.front().name == "ramanujan_1psi1");
  CHECK(all.back().name == "finite_shift");
  CHECK(qid::identity("thm1_bailey").params == std::vector<std::string>{"a", "b", "c", "d", "z", "q"});
  CHECK(qid::find_identity("nope") == nullptr);
  CHECK_THROWS_AS(qid::identity("nope"), qid::DomainError);
  CHECK(qid::identity("thm3_chen_gu").region == "max{|z|, |cd/abz|, |qb/d|} < 1");
  CHECK(qid::identity("dougall_2h2").tol_floor == 1e-5);
}

TEST_CASE("the probe z = 2 is rejected everywhere") {
  qid::SampleConfig cfg;
  cfg.count = 1;
  for (const auto& id : qid::catalog()) {
    CAPTURE(id.name);
    const Params p = qid::sample(id, cfg).front();
    CHECK(id.admissible(p));
    CHECK_FALSE(id.admissible(p.with("z", 2.0)));
  }
}

TEST_CASE("admissibility reasons") {
  const auto& thm1 = qid::identity("thm1_bailey");
  const Params base{{"a", 2.0}, {"b", 1.5}, {"c", 0.35}, {"d", 0.9}, {"z", 0.45}, {"q", 0.3}};
  CHECK(thm1.admissible(base));

  const auto bad = thm1.admissible(base.with("d", 2.4));  // |d/a| = 1.2
  CHECK_FALSE(bad);
  CHECK(bad.reason == "d/a");

  const auto& thm2 = qid::identity("thm2_expansion");
  const Params equal_ab{{"a", 1.1}, {"b", 1.1}, {"c", 0.6}, {"d", 0.7}, {"z", 0.5}, {"q", 0.3}};
  CHECK(thm2.admissible(equal_ab).reason == "idem-degeneracy");
  CHECK_THROWS_AS(qid::check(thm2, equal_ab, 1e-8), qid::InadmissibleError);
  CHECK_THROWS_AS(thm2.rhs(equal_ab), qid::PoleError);

  const auto& thm3 = qid::identity("thm3_chen_gu");
  const Params edge{{"a", 1.1}, {"b", 2.97}, {"c", 0.2}, {"d", 1.5}, {"z", 0.3}, {"q", 0.5}};
  CHECK(std::abs(0.5 * 2.97 / 1.5) == doctest::Approx(0.99));
  CHECK(thm3.admissible(edge));

  // c = q^0 puts a zero in (c;q)_inf and in every (c;q)_k
  CHECK(thm1.admissible(base.with("c", 1.0 + 1e-6)).reason == "pole:c");
  CHECK(thm1.admissible(base.with("c", 1.0 + 2e-3)));

  CHECK(thm1.admissible(base.without("q")).reason == "missing parameter q");
  CHECK(thm1.admissible(base.with("m", 1.0)).reason == "unexpected parameter m");
  CHECK(thm1.admissible(base.with("q", 1.0)).reason == "q");

  const auto& shift = qid::identity("finite_shift");
  const Params fs{{"a", 1.3}, {"b", 0.8}, {"d", 0.45}, {"z", 0.5}, {"q", 0.3}, {"m", 2.0}};
  CHECK(shift.admissible(fs));
  CHECK(shift.admissible(fs.with("m", 0.0)).reason == "m");
  CHECK(shift.admissible(fs.with("m", 1.5)).reason == "m");

  const auto& dougall = qid::identity("dougall_2h2");
  CHECK(dougall.admissible({{"a", 0.1}, {"b", 0.2}, {"c", 2.5}, {"d", 2.8}}));
  CHECK(dougall.admissible({{"a", 0.1}, {"b", 0.2}, {"c", 1.5}, {"d", 1.5}}).reason == "Re(c+d-a-b)>=3");
  CHECK(dougall.admissible({{"a", 1.0}, {"b", 0.2}, {"c", 2.5}, {"d", 2.8}}).reason == "pole:a");
}

TEST_CASE("check at fixed points") {
  const Params p{{"a", 0.4}, {"c", 0.02}, {"z", 0.3}, {"q", 0.2}};
  const auto r = qid::check(qid::identity("ramanujan_1psi1"), p, 1e-8);
  CHECK(r.pass);
  CHECK(r.rel_err <= 1e-10);
  CHECK(r.lhs.value.real() == doctest::Approx(-1.12127835506950642475).epsilon(1e-12));

  const auto& q_binomial = qid::identity("q_binomial");
  const Params qb{{"a", 0.7}, {"z", 0.4}, {"q", 0.5}};
  const qid::QBase q(0.5);
  CHECK(qid::relative_difference(qid::eval_side(q_binomial, qb, qid::Side::rhs).value,
                                 (qid::qpoch_inf(0.28, q) / qid::qpoch_inf(0.4, q)).value) < 1e-15);

  const Params dp{{"a", 0.1}, {"b", 0.2}, {"c", 2.5}, {"d", 2.8}};
  const auto dr = qid::check(qid::identity("dougall_2h2"), dp, 1e-8);
  CHECK(dr.pass);
  CHECK(dr.effective_tol >= 1e-5);
  CHECK(qid::relative_difference(dr.rhs.value, 5.19813472866354706021) < 1e-13);

  const Params chu{{"a", 1.2}, {"b", 0.9}, {"c", 0.5}, {"d", 0.6}, {"q", 0.4}};
  const auto lhs = qid::eval_side(qid::identity("chu_formula"), chu, qid::Side::lhs);
  CHECK(lhs.value == qid::psi({1.2, 0.9}, {0.5, 0.6}, qid::QBase(0.4), 0.5 * 0.6 / (0.4 * 1.2 * 0.9)).value);
  CHECK(qid::check(qid::identity("chu_formula"), chu, 1e-8).pass);

  for (const auto& id : qid::catalog()) {
    if (id.params.size() == 6 && id.name != "finite_shift") {
      CAPTURE(id.name);
      CHECK(qid::check(id, thm_params(), 1e-8).pass);
    }
  }
}

TEST_CASE("effective tolerance follows cancellation") {
  qid::EvalResult lhs{1.0, 1e-15, 3.0};
  qid::EvalResult rhs{1.0 + 5e-6, 1e-15, 1.0};
  const auto r = qid::compare({}, lhs, rhs, 1e-8);
  CHECK(r.effective_tol == doctest::Approx(1e-5));
  CHECK(r.pass);
  CHECK(r.rel_err == doctest::Approx(5e-6 / (1.0 + 5e-6)));
}

TEST_CASE("idem_symmetrize") {
  const qid::Evaluator e = [](const Params& p) { return qid::EvalResult{p["x"] * 2.0 + p["y"]}; };
  const Params p{{"x", 1.0}, {"y", 10.0}};
  CHECK(qid::idem_symmetrize(e, "x", "y")(p).value == Scalar(33.0));
  const qid::Evaluator sym = [](const Params& p) { return qid::EvalResult{p["x"] * p["y"]}; };
  CHECK(qid::idem_symmetrize(sym, "x", "y")(p).value == 2.0 * sym(p).value);
  CHECK(p.swapped("x", "y").swapped("x", "y") == p);
}

TEST_CASE("degenerations reproduce the 1psi1 product") {
  const Scalar a = 1.3, b = Scalar(0.9, 0.4), c = 0.35, z = 0.5, q = 0.3;
  const Params at_b{{"a", a}, {"b", b}, {"c", c}, {"d", b}, {"z", z}, {"q", q}};
  const auto r2 = qid::check(qid::identity("thm2_expansion"), at_b, 1e-8);
  CHECK(r2.pass);
  CHECK(qid::relative_difference(r2.lhs.value, ramanujan(a, c, z, q)) < 1e-12);
  CHECK(qid::relative_difference(r2.rhs.value, ramanujan(a, c, z, q)) < 1e-8);

  const Scalar d = Scalar(0.8, 0.5);
  const Params at_a{{"a", d}, {"b", b}, {"c", c}, {"d", d}, {"z", z}, {"q", q}};
  const auto r3 = qid::check(qid::identity("thm3_chen_gu"), at_a, 1e-8);
  CHECK(r3.pass);
  CHECK(qid::relative_difference(r3.rhs.value, ramanujan(b, c, z, q)) < 1e-8);
}

TEST_CASE("lattice checks") {
  CHECK(qid::lattice_supported("thm2_expansion"));
  CHECK_FALSE(qid::lattice_supported("chu_formula"));
  const Params p = thm_params().without("c");
  for (const char* name : {"thm1_bailey", "thm2_expansion", "thm3_chen_gu"}) {
    const auto& id = qid::identity(name);
    double tol1 = 0.0;
    for (int m = 1; m <= 5; ++m) {
      CAPTURE(name);
      CAPTURE(m);
      REQUIRE(qid::lattice_admissible(id, p, m));
      const auto r = qid::lattice_check(id, p, m, 1e-8);
      CHECK(r.pass);
      CHECK(r.c == qid::QBase(0.3).pow(1 + m));
      CHECK(qid::relative_difference(r.split.lhs.value, r.finite_shift.lhs.value) < 1e-12);
      if (m == 1) tol1 = r.split.effective_tol;
      CHECK(r.split.effective_tol <= 100.0 * tol1);
    }
    // away from the lattice the split forms still agree with both sides
    const Params generic = thm_params();
    CHECK(qid::relative_difference(qid::split_lhs(generic).value, id.lhs(generic).value) < 1e-12);
    CHECK(qid::relative_difference(qid::split_rhs(name, generic).value, id.rhs(generic).value) < 1e-10);
  }
  CHECK_THROWS_AS(qid::lattice_check(qid::identity("thm1_bailey"), p, 0, 1e-8), qid::DomainError);
  CHECK_THROWS_AS(qid::lattice_check(qid::identity("q_gauss"), p, 1, 1e-8), qid::DomainError);
}

TEST_CASE("derivation chains") {
  const Params p = thm_params();
  const auto& iterated = qid::identity("bailey_iterated");
  CHECK(qid::compare(p, qid::chains::thm1_iterated(p), iterated.rhs(p), 1e-8).pass);
  CHECK(qid::compare(p, qid::chains::thm1_iterated(p), iterated.lhs(p), 1e-8).pass);

  const Params rev = qid::chains::reversal_params(p);
  CHECK(rev["a"] == 0.3 / p["c"]);
  CHECK(rev["z"] == p["c"] * p["d"] / (p["a"] * p["b"] * p["z"]));
  CHECK(qid::relative_difference(iterated.lhs(p).value, iterated.lhs(rev).value) < 1e-12);
  CHECK(qid::compare(p, qid::chains::thm2_reversed(p), qid::identity("expansion_r2_545").rhs(p), 1e-8).pass);

  const Params chu{{"a", 1.2}, {"b", 0.9}, {"c", 0.5}, {"d", 0.6}, {"q", 0.4}};
  REQUIRE(qid::chains::chu_derivation_admissible(chu));
  const auto steps = qid::chains::chu_derivation(chu);
  const auto& id = qid::identity("chu_formula");
  const qid::EvalResult lhs = id.lhs(chu);
  for (const auto& step : {steps.chen_gu_substituted, steps.after_q_gauss, steps.after_heine, id.rhs(chu)}) {
    CHECK(qid::compare(chu, lhs, step, 1e-8).pass);
  }
  CHECK(qid::relative_difference(steps.after_heine.value, id.rhs(chu).value) < 1e-12);
}
