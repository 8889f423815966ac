#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string_view>
#include <vector>

#include "qid/identities.hpp"

namespace qid {

struct SampleConfig {
  std::uint64_t seed = 42;
  std::size_t count = 100;
  bool real_only = false;
  double q_min = 0.05;
  double q_max = 0.7;
  double magnitude_cap = 0.9;  // every series argument stays below this
  std::size_t max_attempts = 10'000;  // per accepted sample
};

using ParamPredicate = std::function<bool(const Params&)>;

/// Deterministic parameter stream for one identity: seed XOR FNV-1a(name)
/// feeds an mt19937_64, so streams for different identities are independent
/// and reproducible across platforms.
class Sampler {
 public:
  Sampler(const IdentityDescriptor& id, const SampleConfig& cfg);

  /// Next admissible draw, or ExhaustedError after cfg.max_attempts rejections.
  Params next(const ParamPredicate& accept = {});
  /// One raw draw, admissible or not.
  Params draw();

 private:
  double uniform();
  Scalar draw_q();
  Scalar draw_modulus(double lo, double hi);

  const IdentityDescriptor* id_;
  SampleConfig cfg_;
  std::mt19937_64 rng_;
};

std::uint64_t fnv1a64(std::string_view s);

/// Admissible and every series argument at most cfg.magnitude_cap in modulus.
bool is_admissible(const IdentityDescriptor& id, const Params& p, const SampleConfig& cfg);

std::vector<Params> sample(const IdentityDescriptor& id, const SampleConfig& cfg, const ParamPredicate& accept = {});

/// Draws without c that pass lattice_admissible for every shift 1..m_max.
std::vector<Params> sample_lattice(const IdentityDescriptor& id, int m_max, const SampleConfig& cfg);

}  // namespace qid
