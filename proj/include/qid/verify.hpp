#pragma once

#include "qid/identities.hpp"
#include "qid/report.hpp"
#include "qid/sampler.hpp"

namespace qid {

/// Samples cfg.count admissible parameter sets and checks each one. Evaluation
/// errors become failed records; ExhaustedError propagates.
Report verify_identity(const IdentityDescriptor& id, const SampleConfig& cfg, double tol);

/// cfg.count draws, each checked at c = q^{1+m} for m = 1..m_max.
Report lattice_report(const IdentityDescriptor& id, int m_max, const SampleConfig& cfg, double tol);

}  // namespace qid
