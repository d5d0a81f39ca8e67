#include "fibrecheck/verticality.hpp"

#include <algorithm>

#include "fibrecheck/errors.hpp"

namespace fibrecheck {

std::string to_string(CheckKind kind) { return kind == CheckKind::Open ? "open" : "flat"; }

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Pass:
      return "pass";
    case Outcome::Fail:
      return "fail";
    case Outcome::Aborted:
      return "aborted";
    case Outcome::InconclusivePass:
      return "inconclusive-pass";
  }
  return "unknown";
}

namespace {

void add_distinct(std::vector<Polynomial>& out, const Polynomial& c) {
  if (c.is_constant()) return;
  auto monic = c.monic();
  if (std::find(out.begin(), out.end(), monic) == out.end()) out.push_back(std::move(monic));
}

std::vector<Polynomial> base_coefficients(const std::vector<Polynomial>& basis) {
  std::vector<Polynomial> out;
  for (const auto& g : basis) add_distinct(out, base_leading_coefficient(g, g.ring()->order));
  return out;
}

std::vector<Polynomial> base_coefficients(const std::vector<ModuleVector>& basis,
                                          const ModuleOrder& order) {
  std::vector<Polynomial> out;
  for (const auto& v : basis) add_distinct(out, base_leading_coefficient(v, order));
  return out;
}

Polynomial squarefree_product(const std::vector<Polynomial>& factors, const RingPtr& ring,
                              const GroebnerOptions& options) {
  auto h = Polynomial::constant(ring, 1);
  if (factors.empty()) return h;
  for (const auto& c : factors) h = h * c.in_ring(ring);
  return squarefree_part(h, options);
}

// Small multipliers first: each base leading coefficient and its powers,
// then powers of h itself.
template <class Member>
std::optional<Polynomial> find_multiplier(const std::vector<Polynomial>& candidates,
                                          const Polynomial& h, Member&& kills) {
  constexpr unsigned kFactorPowers = 8;
  constexpr unsigned kDenominatorPowers = 64;
  for (const auto& c : candidates) {
    auto r = c;
    for (unsigned e = 1; e <= kFactorPowers; ++e, r = r * c) {
      if (kills(r)) return r;
    }
  }
  auto r = h;
  for (unsigned e = 1; e <= kDenominatorPowers; ++e, r = r * h) {
    if (kills(r)) return r;
  }
  return std::nullopt;
}

bool is_pure_base(const Polynomial& f) {
  const auto& layout = *f.ring()->layout;
  std::vector<bool> allowed(layout.num_vars(), false);
  for (auto v : layout.variables_in(VarBlock::Base)) allowed[v] = true;
  return f.involves_only(allowed);
}

int target_power(const Problem& problem, const CheckOptions& options) {
  if (options.max_power) return *options.max_power;
  if (problem.max_power) return *problem.max_power;
  return static_cast<int>(problem.base_vars.size());
}

class PowerLoop {
 public:
  PowerLoop(CheckKind kind, const Problem& problem, const CheckOptions& options)
      : options_(options) {
    verdict_.kind = kind;
    verdict_.target_power = target_power(problem, options);
    if (verdict_.target_power < 1) throw InvalidArgument("power override must be at least 1");
    full_power_ = static_cast<int>(problem.base_vars.size());
  }

  // step(k, gb_options, stats) returns true when power k fails.
  template <class Step>
  Verdict run(Step&& step) {
    for (int k = 1; k <= verdict_.target_power; ++k) {
      verdict_.power_reached = k;
      GroebnerStats stats;
      GroebnerOptions gb;
      gb.pair_limit = options_.pair_limit;
      gb.deadline = options_.deadline;
      gb.stats = &stats;
      gb.verify = options_.verify_bases;
      PowerStats ps;
      ps.k = k;
      auto start = std::chrono::steady_clock::now();
      bool failed = false;
      try {
        failed = step(k, gb, ps);
      } catch (const ResourceLimitError& e) {
        verdict_.outcome = Outcome::Aborted;
        verdict_.abort_limit = e.limit();
        verdict_.abort_message = e.what();
        ps.pairs = stats.pairs;
        verdict_.powers.push_back(ps);
        return verdict_;
      }
      ps.pairs = stats.pairs;
      if (options_.measure_time) {
        ps.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                              start)
                        .count();
      }
      verdict_.powers.push_back(ps);
      if (failed) {
        verdict_.outcome = Outcome::Fail;
        verdict_.failing_power = k;
        return verdict_;
      }
    }
    verdict_.outcome =
        verdict_.target_power >= full_power_ ? Outcome::Pass : Outcome::InconclusivePass;
    return verdict_;
  }

  Verdict& verdict() { return verdict_; }

 private:
  const CheckOptions& options_;
  Verdict verdict_;
  int full_power_ = 0;
};

}  // namespace

Polynomial generic_denominator(const std::vector<Polynomial>& basis, const RingPtr& ring,
                               const GroebnerOptions& options) {
  return squarefree_product(base_coefficients(basis), ring, options);
}

Polynomial generic_denominator(const std::vector<ModuleVector>& basis, const ModuleOrder& order,
                               const RingPtr& ring, const GroebnerOptions& options) {
  return squarefree_product(base_coefficients(basis, order), ring, options);
}

Ideal dominant_part(const Ideal& ideal, const GroebnerOptions& options) {
  auto h = generic_denominator(ideal.basis(options), ideal.ring(), options);
  return saturate(ideal, h, options);
}

VerticalComponent has_vertical_component(const Ideal& ideal, const GroebnerOptions& options) {
  if (ideal.is_unit(options)) return {};
  auto dominant = dominant_part(ideal, options);
  for (const auto& g : dominant.basis(options)) {
    if (!radical_member(g, ideal, options)) return {true, g};
  }
  return {};
}

Polynomial vertical_witness(const Ideal& ideal, const Polynomial& g,
                            const GroebnerOptions& options) {
  auto contraction = contract_to_base(saturate(ideal, g, options), options);
  const auto& basis = contraction.basis(options);
  if (basis.empty()) {
    throw SoundnessError("vertical witness requested for a dominant candidate " + g.to_string());
  }
  return basis.front().in_ring(ideal.ring());
}

void verify_vertical_witness(const Ideal& ideal, const Polynomial& g, const Polynomial& r,
                             const GroebnerOptions& options) {
  if (r.is_zero() || !is_pure_base(r)) {
    throw SoundnessError("witness r must be a nonzero base polynomial");
  }
  if (radical_member(g, ideal, options)) {
    throw SoundnessError("witness g lies in the radical");
  }
  if (!radical_member(r.in_ring(ideal.ring()) * g.in_ring(ideal.ring()), ideal, options)) {
    throw SoundnessError("witness r*g is not in the radical");
  }
}

Torsion has_torsion(const Ideal& ideal, const GroebnerOptions& options) {
  const auto& basis = ideal.basis(options);
  auto candidates = base_coefficients(basis);
  auto h = squarefree_product(candidates, ideal.ring(), options);
  if (h.is_constant()) return {};
  auto saturated = saturate(ideal, h, options);
  for (const auto& v : saturated.basis(options)) {
    if (ideal.contains(v, options)) continue;
    auto r = find_multiplier(candidates, h,
                             [&](const Polynomial& c) { return ideal.contains(c * v, options); });
    if (!r) throw SoundnessError("no base multiplier found for a saturation element");
    return {true, TorsionCertificate{*r, {v}}};
  }
  return {};
}

Torsion has_torsion(const ModulePresentation& module, const GroebnerOptions& options) {
  const auto& basis = module.basis(options);
  auto candidates = base_coefficients(basis, module.order());
  auto h = squarefree_product(candidates, module.ring(), options);
  if (h.is_constant()) return {};
  auto saturated = module_saturate(module, h, options);
  for (const auto& v : saturated.basis(options)) {
    if (module.contains(v, options)) continue;
    auto r = find_multiplier(candidates, h, [&](const Polynomial& c) {
      return module.contains(v.times(c), options);
    });
    if (!r) throw SoundnessError("no base multiplier found for a saturation element");
    return {true, TorsionCertificate{*r, v.components()}};
  }
  return {};
}

void verify_torsion_certificate(const Ideal& ideal, const TorsionCertificate& cert,
                                const GroebnerOptions& options) {
  if (cert.r.is_zero() || !is_pure_base(cert.r) || cert.v.size() != 1) {
    throw SoundnessError("malformed torsion certificate");
  }
  if (ideal.contains(cert.v.front(), options)) throw SoundnessError("certificate v lies in J");
  if (!ideal.contains(cert.r.in_ring(ideal.ring()) * cert.v.front().in_ring(ideal.ring()),
                      options)) {
    throw SoundnessError("certificate r*v is not in J");
  }
}

void verify_torsion_certificate(const ModulePresentation& module, const TorsionCertificate& cert,
                                const GroebnerOptions& options) {
  if (cert.r.is_zero() || !is_pure_base(cert.r) || cert.v.size() != module.rank()) {
    throw SoundnessError("malformed torsion certificate");
  }
  ModuleVector v(module.ring(), cert.v);
  if (module.contains(v, options)) throw SoundnessError("certificate v lies in N");
  if (!module.contains(v.times(cert.r), options)) {
    throw SoundnessError("certificate r*v is not in N");
  }
}

Verdict check_openness(const Problem& problem, const CheckOptions& options) {
  problem.validate();
  auto ordered = problem.with_order(options.order);
  Ideal ideal(ordered.ring(options.order), ordered.ideal);
  PowerLoop loop(CheckKind::Open, problem, options);
  return loop.run([&](int k, const GroebnerOptions& gb, PowerStats& ps) {
    auto power = fibred_power_ideal(ideal, k);
    ps.basis_size = power.basis(gb).size();
    auto vertical = has_vertical_component(power, gb);
    if (!vertical.found) return false;
    auto r = vertical_witness(power, *vertical.witness_g, gb);
    verify_vertical_witness(power, *vertical.witness_g, r, gb);
    loop.verdict().witness_g = *vertical.witness_g;
    loop.verdict().witness_r = r;
    return true;
  });
}

Verdict check_flatness(const Problem& problem, const CheckOptions& options) {
  problem.validate();
  if (!problem.field.is_rationals() && !options.allow_char_p_flatness) {
    throw UnsupportedInput(
        "flatness over a prime field needs explicit acknowledgment "
        "(--allow-char-p-flatness)");
  }
  auto ordered = problem.with_order(options.order);
  Ideal ideal(ordered.ring(options.order), ordered.ideal);
  PowerLoop loop(CheckKind::Flat, problem, options);
  return loop.run([&](int k, const GroebnerOptions& gb, PowerStats& ps) {
    Torsion torsion;
    if (ordered.module) {
      auto module = tensor_power_presentation(*ordered.module, ideal, k);
      ps.basis_size = module.basis(gb).size();
      torsion = has_torsion(module, gb);
      if (torsion.found) verify_torsion_certificate(module, *torsion.certificate, gb);
    } else {
      auto power = fibred_power_ideal(ideal, k);
      ps.basis_size = power.basis(gb).size();
      torsion = has_torsion(power, gb);
      if (torsion.found) verify_torsion_certificate(power, *torsion.certificate, gb);
    }
    if (!torsion.found) return false;
    loop.verdict().certificate = torsion.certificate;
    return true;
  });
}

}  // namespace fibrecheck
