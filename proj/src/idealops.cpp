#include "fibrecheck/idealops.hpp"

#include <algorithm>
#include <cstdint>

#include "fibrecheck/errors.hpp"

namespace fibrecheck {

namespace {

// The ring extended by the tag variable, with the tag compared first.
RingPtr tagged_ring(const RingPtr& ring) {
  const auto& layout = *ring->layout;
  if (layout.has_tag()) throw InvalidArgument("ring already carries the tag variable");
  auto with_tag = layout.with_tag();
  auto order = ring->order.transported(layout, *with_tag);
  return make_ring(with_tag, ring->field, std::move(order));
}

std::vector<bool> tag_free_mask(const RingLayout& layout) {
  std::vector<bool> allowed(layout.num_vars(), true);
  allowed[layout.tag_index()] = false;
  return allowed;
}

// (gens) ∩ 𝕜[non-tag vars], mapped back into `target`.
std::vector<Polynomial> drop_tag(const std::vector<Polynomial>& gens, const RingPtr& tagged,
                                 const RingPtr& target, const GroebnerOptions& options) {
  auto basis = buchberger(gens, options);
  auto allowed = tag_free_mask(*tagged->layout);
  std::vector<Polynomial> out;
  for (const auto& g : basis) {
    if (g.involves_only(allowed)) out.push_back(g.in_ring(target));
  }
  return out;
}

Polynomial one_minus_tag_times(const Polynomial& f, const RingPtr& tagged) {
  auto t = Polynomial::variable(tagged, tagged->layout->tag_index());
  return Polynomial::constant(tagged, 1) - t * f.in_ring(tagged);
}

void require_nonzero(const Polynomial& f, const char* what) {
  if (f.is_zero()) throw InvalidArgument(std::string(what) + " by the zero polynomial");
}

}  // namespace

Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& keep,
                const GroebnerOptions& options) {
  const auto& ring = ideal.ring();
  const auto& layout = *ring->layout;
  std::vector<bool> kept(layout.num_vars(), false);
  for (auto v : keep) kept.at(v) = true;
  std::vector<std::size_t> drop;
  for (std::size_t v = 0; v < layout.num_vars(); ++v) {
    if (!kept[v]) drop.push_back(v);
  }
  auto elim_ring =
      with_order(ring, MonomialOrder::eliminating(layout, drop, ring->order.kind()));
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.in_ring(elim_ring));
  std::vector<Polynomial> out;
  for (const auto& g : buchberger(gens, options)) {
    if (g.involves_only(kept)) out.push_back(g.in_ring(ring));
  }
  return Ideal(ring, std::move(out));
}

Ideal intersect(const Ideal& a, const Ideal& b, const GroebnerOptions& options) {
  auto tagged = tagged_ring(a.ring());
  auto t = Polynomial::variable(tagged, tagged->layout->tag_index());
  auto one_minus_t = Polynomial::constant(tagged, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(t * g.in_ring(tagged));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.in_ring(tagged));
  return Ideal(a.ring(), drop_tag(gens, tagged, a.ring(), options));
}

Ideal quotient(const Ideal& ideal, const Polynomial& f, const GroebnerOptions& options) {
  require_nonzero(f, "quotient");
  auto g = f.in_ring(ideal.ring());
  if (g.is_constant()) return ideal;
  auto meet = intersect(ideal, Ideal(ideal.ring(), {g}), options);
  std::vector<Polynomial> out;
  for (const auto& h : meet.generators()) out.push_back(exact_quotient(h, g));
  return Ideal(ideal.ring(), std::move(out));
}

Ideal saturate(const Ideal& ideal, const Polynomial& f, const GroebnerOptions& options) {
  require_nonzero(f, "saturation");
  if (f.is_constant()) return ideal;
  auto tagged = tagged_ring(ideal.ring());
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.in_ring(tagged));
  gens.push_back(one_minus_tag_times(f, tagged));
  return Ideal(ideal.ring(), drop_tag(gens, tagged, ideal.ring(), options));
}

ModulePresentation module_saturate(const ModulePresentation& module, const Polynomial& f,
                                   const GroebnerOptions& options) {
  require_nonzero(f, "saturation");
  if (f.is_constant()) return module;
  const auto& ring = module.ring();
  auto tagged = tagged_ring(ring);
  auto order = module.order().transported(*ring->layout, *tagged->layout);
  std::vector<ModuleVector> gens;
  for (const auto& v : module.generators()) gens.push_back(v.in_ring(tagged));
  auto unit_part = one_minus_tag_times(f, tagged);
  for (std::size_t j = 0; j < module.rank(); ++j) {
    gens.push_back(ModuleVector::unit(tagged, module.rank(), j).times(unit_part));
  }
  auto basis = module_buchberger(gens, order, options);
  auto allowed = tag_free_mask(*tagged->layout);
  std::vector<ModuleVector> out;
  for (const auto& v : basis) {
    bool free = std::all_of(v.components().begin(), v.components().end(),
                            [&](const Polynomial& c) { return c.involves_only(allowed); });
    if (free) out.push_back(v.in_ring(ring));
  }
  return ModulePresentation(ring, module.rank(), std::move(out), module.order());
}

bool radical_member(const Polynomial& f, const Ideal& ideal, const GroebnerOptions& options) {
  if (f.is_zero()) return true;
  auto tagged = tagged_ring(ideal.ring());
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.in_ring(tagged));
  gens.push_back(one_minus_tag_times(f, tagged));
  auto basis = buchberger(gens, options);
  return basis.size() == 1 && basis.front().is_constant();
}

Ideal contract_to_base(const Ideal& ideal, const GroebnerOptions& options) {
  const auto& ring = ideal.ring();
  const auto& layout = *ring->layout;
  auto base_ring = make_ring(layout.base_only(), ring->field, ring->order.kind());
  auto kept = eliminate(ideal, layout.variables_in(VarBlock::Base), options);
  std::vector<Polynomial> out;
  for (const auto& g : kept.generators()) out.push_back(g.in_ring(base_ring));
  return Ideal(base_ring, std::move(out));
}

DimensionReport krull_dim(const Ideal& ideal, const GroebnerOptions& options) {
  const auto& layout = *ideal.ring()->layout;
  const auto nvars = layout.num_vars();
  if (nvars > 30) throw UnsupportedInput("dimension search limited to 30 variables");
  const auto& basis = ideal.basis(options);
  DimensionReport report;
  if (basis.size() == 1 && basis.front().is_constant()) return report;

  std::vector<std::uint32_t> supports;
  for (const auto& g : basis) {
    std::uint32_t mask = 0;
    const auto& lm = g.leading_monomial();
    for (std::size_t v = 0; v < nvars; ++v) {
      if (lm[v] != 0) mask |= 1U << v;
    }
    supports.push_back(mask);
  }
  auto independent = [&](std::uint32_t set) {
    return std::none_of(supports.begin(), supports.end(),
                        [&](std::uint32_t s) { return (s & ~set) == 0; });
  };

  for (int size = static_cast<int>(nvars); size >= 0; --size) {
    // Walk subsets of the given size in lexicographic order of index lists.
    std::vector<std::size_t> pick(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) pick[i] = static_cast<std::size_t>(i);
    while (true) {
      std::uint32_t set = 0;
      for (auto v : pick) set |= 1U << v;
      if (independent(set)) {
        report.dim = size;
        report.independent = pick;
        for (auto v : pick) report.independent_names.push_back(layout.name(v));
        return report;
      }
      int i = size - 1;
      while (i >= 0 && pick[i] == nvars - static_cast<std::size_t>(size) + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return report;
}

DimensionReport fibre_dim(const Ideal& ideal, const std::vector<mpq_class>& point,
                          const GroebnerOptions& options) {
  const auto& layout = *ideal.ring()->layout;
  if (point.size() != layout.n()) {
    throw InvalidArgument("point has " + std::to_string(point.size()) + " coordinates, base has " +
                          std::to_string(layout.n()));
  }
  auto probe = Polynomial::constant(ideal.ring(), 0);
  auto fibre_ring = substitute_base_point(probe, point).ring();
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) {
    gens.push_back(substitute_base_point(g, point).in_ring(fibre_ring));
  }
  return krull_dim(Ideal(fibre_ring, std::move(gens)), options);
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw InvalidArgument("division by the zero polynomial");
  auto divisor = b.in_ring(a.ring());
  const auto& lead = divisor.leading_term();
  std::vector<Term> quotient_terms;
  auto rest = a;
  while (!rest.is_zero()) {
    const auto& lt = rest.leading_term();
    if (!lead.mono.divides(lt.mono)) throw InvalidArgument("polynomial division is not exact");
    auto c = lt.coef / lead.coef;
    auto m = lt.mono.quotient(lead.mono);
    quotient_terms.push_back({c, m});
    rest = rest.minus_times_term(c, m, divisor);
  }
  return Polynomial::from_terms(a.ring(), std::move(quotient_terms));
}

Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b,
                          const GroebnerOptions& options) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  auto g = b.in_ring(a.ring());
  if (a.is_constant() || g.is_constant()) return Polynomial::constant(a.ring(), 1);
  auto meet = intersect(Ideal(a.ring(), {a}), Ideal(a.ring(), {g}), options);
  const auto& basis = meet.basis(options);
  if (basis.size() != 1) throw SoundnessError("intersection of principal ideals is not principal");
  return exact_quotient(a * g, basis.front()).monic();
}

Polynomial squarefree_part(const Polynomial& f, const GroebnerOptions& options) {
  if (f.is_zero()) throw InvalidArgument("squarefree part of the zero polynomial");
  if (f.is_constant()) return Polynomial::constant(f.ring(), 1);
  const auto& ring = f.ring();
  if (ring->field.is_rationals()) {
    auto g = f;
    for (std::size_t v = 0; v < ring->num_vars(); ++v) {
      auto d = f.derivative(v);
      if (!d.is_zero()) g = polynomial_gcd(g, d, options);
    }
    return exact_quotient(f, g).monic();
  }
  // Truncate the monomial content to exponent one.
  std::vector<Monomial::Exponent> content = f.terms().front().mono.exponents();
  for (const auto& t : f.terms()) {
    for (std::size_t v = 0; v < content.size(); ++v) content[v] = std::min(content[v], t.mono[v]);
  }
  std::vector<Monomial::Exponent> truncated = content;
  for (auto& e : truncated) e = std::min<Monomial::Exponent>(e, 1);
  Monomial c(content);
  Monomial keep(truncated);
  std::vector<Term> terms;
  for (const auto& t : f.terms()) terms.push_back({t.coef, t.mono.quotient(c) * keep});
  return Polynomial::from_terms(ring, std::move(terms)).monic();
}

}  // namespace fibrecheck
