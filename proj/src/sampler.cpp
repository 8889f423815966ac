#include "qid/sampler.hpp"

#include <cmath>

#include "qid/errors.hpp"

namespace qid {

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

Sampler::Sampler(const IdentityDescriptor& id, const SampleConfig& cfg)
    : id_(&id), cfg_(cfg), rng_(cfg.seed ^ fnv1a64(id.name)) {}

double Sampler::uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

Scalar Sampler::draw_modulus(double lo, double hi) {
  const double r = std::exp(std::log(lo) + uniform() * (std::log(hi) - std::log(lo)));
  if (cfg_.real_only) return uniform() < 0.5 ? -r : r;
  return std::polar(r, 2.0 * kPi * uniform());
}

Scalar Sampler::draw_q() {
  const double r = cfg_.q_min + uniform() * (cfg_.q_max - cfg_.q_min);
  if (cfg_.real_only) return r;
  return std::polar(r, 2.0 * kPi * uniform());
}

Params Sampler::draw() {
  Params p;
  for (const auto& slot : id_->params) {
    if (slot == "q") {
      p = p.with(slot, draw_q());
    } else if (slot == "z") {
      p = p.with(slot, draw_modulus(0.05, cfg_.magnitude_cap));
    } else if (slot == "m") {
      p = p.with(slot, Scalar(static_cast<double>(1 + (rng_() % 8))));
    } else if (id_->name == "dougall_2h2") {
      // Classical parameters: real parts spread so that c + d - a - b can reach 3.
      const double re = -2.0 + 6.0 * uniform();
      const double im = cfg_.real_only ? 0.0 : -1.0 + 2.0 * uniform();
      p = p.with(slot, Scalar(re, im));
    } else {
      p = p.with(slot, draw_modulus(0.05, 2.0));
    }
  }
  return p;
}

Params Sampler::next(const ParamPredicate& accept) {
  for (std::size_t attempt = 0; attempt < cfg_.max_attempts; ++attempt) {
    Params p = draw();
    if (is_admissible(*id_, p, cfg_) && (!accept || accept(p))) return p;
  }
  throw ExhaustedError(id_->name + ": no admissible draw in " + std::to_string(cfg_.max_attempts) + " attempts");
}

bool is_admissible(const IdentityDescriptor& id, const Params& p, const SampleConfig& cfg) {
  if (!id.admissible(p)) return false;
  for (const auto& b : id.series_bounds(p)) {
    if (std::abs(b.value) > cfg.magnitude_cap) return false;
  }
  return true;
}

std::vector<Params> sample(const IdentityDescriptor& id, const SampleConfig& cfg, const ParamPredicate& accept) {
  Sampler s(id, cfg);
  std::vector<Params> out;
  out.reserve(cfg.count);
  for (std::size_t i = 0; i < cfg.count; ++i) out.push_back(s.next(accept));
  return out;
}

std::vector<Params> sample_lattice(const IdentityDescriptor& id, int m_max, const SampleConfig& cfg) {
  const auto ok_for_all = [&](const Params& p) {
    const Params without_c = p.without("c");
    for (int m = 1; m <= m_max; ++m) {
      if (!lattice_admissible(id, without_c, m)) return false;
      const Params at = without_c.with("c", QBase(p["q"]).pow(1 + m));
      if (!is_admissible(id, at, cfg)) return false;
    }
    return true;
  };
  std::vector<Params> out;
  for (const Params& p : sample(id, cfg, ok_for_all)) out.push_back(p.without("c"));
  return out;
}

}  // namespace qid
