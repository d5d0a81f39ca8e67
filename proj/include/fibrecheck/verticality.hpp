#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "fibrecheck/groebner.hpp"
#include "fibrecheck/idealops.hpp"
#include "fibrecheck/module.hpp"
#include "fibrecheck/power.hpp"

namespace fibrecheck {

enum class CheckKind { Open, Flat };
// InconclusivePass: no vertical component / torsion up to a power override
// smaller than dim R, so the criterion is not complete.
enum class Outcome { Pass, Fail, Aborted, InconclusivePass };

std::string to_string(CheckKind kind);
std::string to_string(Outcome outcome);

struct PowerStats {
  int k = 0;
  std::size_t basis_size = 0;
  std::size_t pairs = 0;
  double millis = 0.0;
};

// r·v ∈ N with r ∈ 𝕜[y] nonzero and v ∉ N. For an ideal, v has one component.
struct TorsionCertificate {
  Polynomial r;
  std::vector<Polynomial> v;
};

struct Verdict {
  CheckKind kind = CheckKind::Open;
  Outcome outcome = Outcome::Pass;
  int target_power = 0;  // the last power the loop would test
  std::optional<int> failing_power;
  std::optional<Polynomial> witness_g;  // openness
  std::optional<Polynomial> witness_r;  // openness, pure base
  std::optional<TorsionCertificate> certificate;  // flatness
  std::vector<PowerStats> powers;
  int power_reached = 0;
  std::string abort_limit;    // "pair-limit" | "timeout" when aborted
  std::string abort_message;
};

struct CheckOptions {
  WithinBlock order = WithinBlock::Grevlex;
  std::optional<int> max_power;  // takes precedence over Problem::max_power
  bool allow_char_p_flatness = false;
  std::size_t pair_limit = 100000;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  bool measure_time = false;
  bool verify_bases = false;
};

// Squarefree product of the distinct base leading coefficients of a basis
// computed under an order with fibre above base. Saturating by it contracts
// from 𝕜(y)[x]: J·𝕜(y)[x] ∩ 𝕜[y][x] = J : h^∞.
Polynomial generic_denominator(const std::vector<Polynomial>& basis, const RingPtr& ring,
                               const GroebnerOptions& options = {});
Polynomial generic_denominator(const std::vector<ModuleVector>& basis, const ModuleOrder& order,
                               const RingPtr& ring, const GroebnerOptions& options = {});

// J : h^∞; its minimal primes are the dominant minimal primes of J.
Ideal dominant_part(const Ideal& ideal, const GroebnerOptions& options = {});

struct VerticalComponent {
  bool found = false;
  std::optional<Polynomial> witness_g;
};

// Decides whether J has a minimal prime meeting 𝕜[y] ∖ {0}. The witness is
// the first basis element of the dominant part outside √J.
VerticalComponent has_vertical_component(const Ideal& ideal, const GroebnerOptions& options = {});

// A nonzero r ∈ 𝕜[y] with r·g ∈ √J, the first generator of (J : g^∞) ∩ 𝕜[y].
// Returned in J's ring.
Polynomial vertical_witness(const Ideal& ideal, const Polynomial& g,
                            const GroebnerOptions& options = {});

struct Torsion {
  bool found = false;
  std::optional<TorsionCertificate> certificate;
};

Torsion has_torsion(const Ideal& ideal, const GroebnerOptions& options = {});
Torsion has_torsion(const ModulePresentation& module, const GroebnerOptions& options = {});

// Throw SoundnessError unless the witnesses satisfy their defining memberships.
void verify_vertical_witness(const Ideal& ideal, const Polynomial& g, const Polynomial& r,
                             const GroebnerOptions& options = {});
void verify_torsion_certificate(const Ideal& ideal, const TorsionCertificate& cert,
                                const GroebnerOptions& options = {});
void verify_torsion_certificate(const ModulePresentation& module, const TorsionCertificate& cert,
                                const GroebnerOptions& options = {});

// Openness via vertical components of the fibred powers k = 1..n.
Verdict check_openness(const Problem& problem, const CheckOptions& options = {});
// Flatness via R-torsion of the tensor powers k = 1..n (F = A when no module
// is declared). Over F_p this requires allow_char_p_flatness.
Verdict check_flatness(const Problem& problem, const CheckOptions& options = {});

}  // namespace fibrecheck
