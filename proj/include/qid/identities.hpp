#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qid/numerics.hpp"
#include "qid/params.hpp"
#include "qid/qcore.hpp"

namespace qid {

using Evaluator = std::function<EvalResult(const Params&)>;

/// A series argument whose modulus must stay below 1.
struct SeriesBound {
  std::string label;
  Scalar value;
};

/// Which half of the q-lattice makes an argument singular.
enum class LatticeSide {
  zeros,  // q^{-i}, i >= 0: zeros of (x;q)_inf and of denominator (x;q)_k
  poles,  // q^{i}, i >= 1: poles of (x;q)_{-k}, i.e. bilateral numerators
  both,
};

struct PoleGuard {
  std::string label;
  Scalar value;
  LatticeSide side;
};

inline constexpr double kGuardMargin = 1e-3;
inline constexpr long long kGuardRange = 60;

struct Admissibility {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
};

struct IdentityDescriptor {
  std::string name;
  std::vector<std::string> params;
  std::string region;
  std::string reference;
  double tol_floor = 0.0;  // checks never run tighter than this

  std::function<std::vector<SeriesBound>(const Params&)> bounds;
  std::function<std::vector<PoleGuard>(const Params&)> guards;
  std::function<std::optional<std::string>(const Params&)> extra;
  Evaluator lhs;
  Evaluator rhs;

  /// Reason names the first violated constraint: a bound label such as "d/a",
  /// "idem-degeneracy", or "pole:<argument>".
  Admissibility admissible(const Params& p) const;
  std::vector<SeriesBound> series_bounds(const Params& p) const { return bounds ? bounds(p) : std::vector<SeriesBound>{}; }
};

/// The fixed catalog of fifteen identities, in display order.
const std::vector<IdentityDescriptor>& catalog();
const IdentityDescriptor* find_identity(std::string_view name);
/// Same as find_identity but throws DomainError for unknown names.
const IdentityDescriptor& identity(std::string_view name);

/// p -> expr(p) + expr(p with x and y interchanged).
Evaluator idem_symmetrize(Evaluator expr, std::string x, std::string y);

struct CheckResult {
  Params params;
  EvalResult lhs;
  EvalResult rhs;
  double rel_err = 0.0;
  double effective_tol = 0.0;
  bool pass = false;

  double cancellation_digits() const;
};

/// Compare already evaluated sides: rel_err against base_tol widened by
/// 10^(max cancellation digits).
CheckResult compare(const Params& p, const EvalResult& lhs, const EvalResult& rhs, double base_tol);

/// Throws InadmissibleError naming the violated constraint.
CheckResult check(const IdentityDescriptor& id, const Params& p, double base_tol);

enum class Side { lhs, rhs };
EvalResult eval_side(const IdentityDescriptor& id, const Params& p, Side side);

// ---------------------------------------------------------------------------
// Lattice checks at c = q^{1+m}
// ---------------------------------------------------------------------------

bool lattice_supported(std::string_view name);
inline constexpr int kLatticeMaxShift = 8;

struct LatticeCheckResult {
  int m = 0;
  Scalar c;
  CheckResult split;         // f(c) against g(c)
  CheckResult finite_shift;  // bilateral sum against the shifted 2phi1
  bool pass = false;
};

/// Both halves of the lattice check are admissible at shift m.
Admissibility lattice_admissible(const IdentityDescriptor& id, const Params& without_c, int m);

/// Evaluates the split forms f(c), g(c) at c = q^{1+m} and cross-checks the
/// bilateral left side against the finite-shift 2phi1 form.
LatticeCheckResult lattice_check(const IdentityDescriptor& id, const Params& without_c, int m, double base_tol);

/// f(c): the k >= 0 part of 2psi2(a,b;c,d;q,z) plus the k <= -1 part written
/// with prod_{i=1}^k (c - q^i), finite at every c.
EvalResult split_lhs(const Params& p);
/// g(c) for thm1_bailey, thm2_expansion or thm3_chen_gu.
EvalResult split_rhs(std::string_view name, const Params& p);

// ---------------------------------------------------------------------------
// Derivation chains between catalog entries
// ---------------------------------------------------------------------------

namespace chains {

/// Bailey's transformation applied twice (first with a<->b, c<->d).
EvalResult thm1_iterated(const Params& p);

/// Parameters (q/c, q/d, q/a, q/b, cd/abz) under which the expansion of
/// 2psi2 in 2phi1 series turns into its k -> -k reversed form.
Params reversal_params(const Params& p);
EvalResult thm2_reversed(const Params& p);

struct ChuDerivation {
  EvalResult chen_gu_substituted;  // thm3 with a<->b, z = cd/qab
  EvalResult after_q_gauss;        // second 2phi1 summed by q-Gauss
  EvalResult after_heine;          // first 2phi1 transformed by Heine
};

Admissibility chu_derivation_admissible(const Params& p);
ChuDerivation chu_derivation(const Params& p);

}  // namespace chains

}  // namespace qid
