// qid: evaluate basic hypergeometric series and verify the identity catalog.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qid/errors.hpp"
#include "qid/identities.hpp"
#include "qid/report.hpp"
#include "qid/series.hpp"
#include "qid/verify.hpp"

namespace {

enum Exit : int {
  kOk = 0,
  kFailed = 1,
  kDiverges = 2,
  kPole = 3,
  kInvalid = 4,
  kEvaluation = 5,
};

using nlohmann::ordered_json;

struct EvalFlags {
  std::string series;
  std::string num;
  std::string den;
  std::string q;
  std::string z;
  bool json = false;
};

struct VerifyFlags {
  std::string identity;
  std::size_t samples = 100;
  std::uint64_t seed = 42;
  double tol = 1e-8;
  bool real_only = false;
  std::string out;
  bool json = false;
  int m_max = 5;  // lattice only
};

int cmd_list() {
  for (const auto& id : qid::catalog()) {
    std::string slots;
    for (const auto& s : id.params) slots += (slots.empty() ? "" : ",") + s;
    std::printf("%-18s (%s)  %s  [%s]\n", id.name.c_str(), slots.c_str(), id.region.c_str(), id.reference.c_str());
  }
  return kOk;
}

int cmd_eval(const EvalFlags& f) {
  using namespace qid;
  std::vector<Scalar> num, den;
  SeriesSpec spec;
  try {
    num = parse_scalar_list(f.num);
    den = parse_scalar_list(f.den);
    if (f.series == "h2") {
      if (num.size() != 2 || den.size() != 2) throw ParseError("h2 takes two numerator and two denominator parameters");
      spec = h2_spec(num[0], num[1], den[0], den[1]);
    } else {
      if (f.q.empty() || f.z.empty()) throw ParseError(f.series + " needs --q and --z");
      const QBase q(parse_scalar(f.q));
      const Scalar z = parse_scalar(f.z);
      spec = f.series == "phi" ? phi_spec(num, den, q, z) : psi_spec(num, den, q, z);
    }
  } catch (const Error& e) {
    std::cerr << "qid eval: " << e.what() << "\n";
    return kInvalid;
  }

  try {
    const EvalResult r = evaluate(spec);
    if (f.json) {
      ordered_json j;
      j["series"] = f.series;
      j["value"] = format_scalar(r.value);
      j["rel_err_estimate"] = r.rel_err_estimate;
      j["cancellation_digits"] = r.cancellation_digits;
      j["convergence"] = converges(spec).describe();
      std::cout << dump(j);
    } else {
      std::cout << "value: " << format_scalar(r.value) << "\n";
      std::printf("rel_err_estimate: %.3g\ncancellation_digits: %.2f\n", r.rel_err_estimate, r.cancellation_digits);
    }
    return kOk;
  } catch (const DivergesError& e) {
    std::cerr << "qid eval: " << e.what() << "\n";
    return kDiverges;
  } catch (const PoleError& e) {
    std::cerr << "qid eval: " << e.what() << "\n";
    return kPole;
  } catch (const Error& e) {
    std::cerr << "qid eval: " << e.what() << "\n";
    return kEvaluation;
  }
}

qid::SampleConfig sample_config(const VerifyFlags& f) {
  qid::SampleConfig cfg;
  cfg.seed = f.seed;
  cfg.count = f.samples;
  cfg.real_only = f.real_only;
  return cfg;
}

void print_summary(const qid::Report& r) {
  std::printf("%-18s %zu/%zu passed  max_rel_err=%.3g  mean_rel_err=%.3g\n", r.identity.c_str(), r.summary.passed,
              r.summary.count, r.summary.max_rel_err, r.summary.mean_rel_err);
  for (const auto& s : r.samples) {
    if (s.pass) continue;
    std::printf("  sample %zu FAIL", s.index);
    if (s.m) std::printf(" m=%d", *s.m);
    if (s.error) {
      std::printf(" error: %s\n", s.error->c_str());
    } else {
      std::printf(" rel_err=%.3g effective_tol=%.3g\n", s.rel_err, s.effective_tol);
    }
  }
}

int emit(const std::vector<qid::Report>& reports, bool as_array, const VerifyFlags& f) {
  ordered_json doc;
  if (as_array) {
    doc = ordered_json::array();
    for (const auto& r : reports) doc.push_back(qid::to_json(r));
  } else {
    doc = qid::to_json(reports.front());
  }
  const std::string text = qid::dump(doc);
  if (!f.out.empty()) {
    std::ofstream out(f.out, std::ios::binary);
    if (!(out << text)) {
      std::cerr << "qid: cannot write " << f.out << "\n";
      return kEvaluation;
    }
  }
  if (f.json) {
    std::cout << text;
  } else {
    for (const auto& r : reports) print_summary(r);
  }
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.all_pass();
  return ok ? kOk : kFailed;
}

int cmd_verify(const VerifyFlags& f) {
  std::vector<const qid::IdentityDescriptor*> targets;
  if (f.identity == "all") {
    for (const auto& id : qid::catalog()) targets.push_back(&id);
  } else if (const auto* id = qid::find_identity(f.identity)) {
    targets.push_back(id);
  } else {
    std::cerr << "qid verify: unknown identity '" << f.identity << "'\n";
    return kInvalid;
  }
  std::vector<qid::Report> reports;
  try {
    for (const auto* id : targets) reports.push_back(qid::verify_identity(*id, sample_config(f), f.tol));
  } catch (const qid::Error& e) {
    std::cerr << "qid verify: " << e.what() << "\n";
    return kEvaluation;
  }
  return emit(reports, f.identity == "all", f);
}

int cmd_lattice(const VerifyFlags& f) {
  if (!qid::lattice_supported(f.identity)) {
    std::cerr << "qid lattice: identity must be thm1_bailey, thm2_expansion or thm3_chen_gu\n";
    return kInvalid;
  }
  if (f.m_max < 1 || f.m_max > qid::kLatticeMaxShift) {
    std::cerr << "qid lattice: --m-max must lie in 1.." << qid::kLatticeMaxShift << "\n";
    return kInvalid;
  }
  try {
    return emit({qid::lattice_report(qid::identity(f.identity), f.m_max, sample_config(f), f.tol)}, false, f);
  } catch (const qid::Error& e) {
    std::cerr << "qid lattice: " << e.what() << "\n";
    return kEvaluation;
  }
}

void add_batch_flags(CLI::App* cmd, VerifyFlags& f) {
  cmd->add_option("--identity", f.identity, "identity name")->required();
  cmd->add_option("--samples", f.samples, "number of parameter draws")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", f.seed, "sampler seed");
  cmd->add_option("--tol", f.tol, "base relative tolerance")->check(CLI::PositiveNumber);
  cmd->add_flag("--real-only", f.real_only, "draw real parameters only");
  cmd->add_option("--out", f.out, "write the JSON report to this file");
  cmd->add_flag("--json", f.json, "print the JSON report");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical evaluation and verification of q-series identities"};
  app.require_subcommand(1);

  app.add_subcommand("list", "list the identity catalog");

  EvalFlags eval;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate one series");
  eval_cmd->add_option("--series", eval.series, "phi, psi or h2")->required()->check(CLI::IsMember({"phi", "psi", "h2"}));
  eval_cmd->add_option("--num", eval.num, "numerator parameters, comma separated");
  eval_cmd->add_option("--den", eval.den, "denominator parameters, comma separated");
  eval_cmd->add_option("--q", eval.q, "base");
  eval_cmd->add_option("--z", eval.z, "argument");
  eval_cmd->add_flag("--json", eval.json, "print JSON");

  VerifyFlags verify;
  add_batch_flags(app.add_subcommand("verify", "check an identity on seeded samples"), verify);

  VerifyFlags lattice;
  auto* lattice_cmd = app.add_subcommand("lattice", "check f(c) = g(c) at c = q^(1+m)");
  add_batch_flags(lattice_cmd, lattice);
  lattice_cmd->add_option("--m-max", lattice.m_max, "largest shift m");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  if (app.got_subcommand("list")) return cmd_list();
  if (app.got_subcommand("eval")) return cmd_eval(eval);
  if (app.got_subcommand("verify")) return cmd_verify(verify);
  return cmd_lattice(lattice);
}
