#include "qid/verify.hpp"

#include <algorithm>

#include "qid/errors.hpp"

namespace qid {

namespace {

Report empty_report(const IdentityDescriptor& id, const SampleConfig& cfg, double tol) {
  Report r;
  r.identity = id.name;
  r.seed = cfg.seed;
  r.tol = tol;
  return r;
}

}  // namespace

Report verify_identity(const IdentityDescriptor& id, const SampleConfig& cfg, double tol) {
  Report r = empty_report(id, cfg, tol);
  const std::vector<Params> draws = sample(id, cfg);
  for (std::size_t i = 0; i < draws.size(); ++i) {
    try {
      r.samples.push_back(record(i, check(id, draws[i], tol)));
    } catch (const Error& e) {
      r.samples.push_back(error_record(i, draws[i], e.what()));
    }
  }
  r.summary = summarize(r.samples);
  return r;
}

Report lattice_report(const IdentityDescriptor& id, int m_max, const SampleConfig& cfg, double tol) {
  if (!lattice_supported(id.name)) throw DomainError("no lattice form for " + id.name);
  if (m_max < 1 || m_max > kLatticeMaxShift) {
    throw DomainError("m-max must lie in 1.." + std::to_string(kLatticeMaxShift));
  }
  Report r = empty_report(id, cfg, tol);
  const std::vector<Params> draws = sample_lattice(id, m_max, cfg);
  std::size_t index = 0;
  for (const Params& p : draws) {
    for (int m = 1; m <= m_max; ++m) {
      const Scalar c = QBase(p["q"]).pow(1 + m);
      SampleRecord s;
      try {
        const LatticeCheckResult lc = lattice_check(id, p, m, tol);
        s = record(index, lc.split);
        s.rel_err = std::max(lc.split.rel_err, lc.finite_shift.rel_err);
        s.effective_tol = std::min(lc.split.effective_tol, lc.finite_shift.effective_tol);
        s.cancellation_digits = std::max(lc.split.cancellation_digits(), lc.finite_shift.cancellation_digits());
        s.pass = lc.pass;
      } catch (const Error& e) {
        s = error_record(index, p.with("c", c), e.what());
      }
      s.m = m;
      s.c = format_scalar(c);
      r.samples.push_back(std::move(s));
      ++index;
    }
  }
  r.summary = summarize(r.samples);
  return r;
}

}  // namespace qid
