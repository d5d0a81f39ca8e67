#include "fibrecheck/groebner.hpp"

#include "buchberger_engine.hpp"
#include "fibrecheck/errors.hpp"

namespace fibrecheck {

namespace {

struct PolyOps {
  static constexpr bool kProductCriterion = true;

  const MonomialOrder* order;

  detail::LeadRef lead(const Polynomial& p) const {
    const auto& t = p.leading_term();
    return {&t.coef, &t.mono, 0};
  }
  int compare(const Monomial& a, std::size_t, const Monomial& b, std::size_t) const {
    return order->compare(a, b);
  }
  Polynomial sub(const Polynomial& p, const Coefficient& c, const Monomial& m,
                 const Polynomial& g) const {
    return p.minus_times_term(c, m, g);
  }
  Polynomial add(const Polynomial& a, const Polynomial& b) const { return a + b; }
  Polynomial times_term(const Polynomial& p, const Coefficient& c, const Monomial& m) const {
    return p.times_term(c, m);
  }
  Polynomial scaled(const Polynomial& p, const Coefficient& c) const { return p.scaled(c); }
  bool is_zero(const Polynomial& p) const { return p.is_zero(); }
  bool is_unit(const Polynomial& p) const { return p.leading_monomial().is_one(); }
  Polynomial zero_like(const Polynomial& p) const { return Polynomial(p.ring()); }
  void move_lead(Polynomial& from, Polynomial& to) const {
    to.push_back_smallest(from.pop_leading_term());
  }
  const RingPtr& ring(const Polynomial& p) const { return p.ring(); }
};

RingPtr common_ring(const std::vector<Polynomial>& polys) {
  const RingPtr* ring = nullptr;
  for (const auto& p : polys) {
    if (ring == nullptr) {
      ring = &p.ring();
    } else if (!same_ring(**ring, *p.ring())) {
      throw LayoutMismatch("generators live in different rings");
    }
  }
  return ring == nullptr ? nullptr : *ring;
}

}  // namespace

void GroebnerStats::absorb(const GroebnerStats& other) {
  pairs += other.pairs;
  zero_reductions += other.zero_reductions;
  max_basis_size = std::max(max_basis_size, other.max_basis_size);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw InvalidArgument("S-polynomial of the zero polynomial");
  if (!same_ring(f.ring_ref(), g.ring_ref())) throw LayoutMismatch("S-polynomial across rings");
  PolyOps ops{&f.ring()->order};
  GroebnerOptions options;
  detail::BuchbergerEngine<Polynomial, PolyOps> engine(ops, options, false);
  return engine.s_element(f, g);
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
  for (const auto& g : basis) {
    if (!same_ring(f.ring_ref(), g.ring_ref())) throw LayoutMismatch("normal form across rings");
  }
  std::vector<Polynomial> nonzero;
  for (const auto& g : basis) {
    if (!g.is_zero()) nonzero.push_back(g);
  }
  PolyOps ops{&f.ring()->order};
  GroebnerOptions options;
  detail::BuchbergerEngine<Polynomial, PolyOps> engine(ops, options, false);
  return engine.reduce(f, nonzero);
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& generators,
                                   const GroebnerOptions& options) {
  auto ring = common_ring(generators);
  if (!ring) return {};
  PolyOps ops{&ring->order};
  detail::BuchbergerEngine<Polynomial, PolyOps> engine(ops, options, false);
  return engine.run(generators).basis;
}

TracedBasis buchberger_traced(const std::vector<Polynomial>& generators,
                              const GroebnerOptions& options) {
  auto ring = common_ring(generators);
  if (!ring) return {};
  PolyOps ops{&ring->order};
  detail::BuchbergerEngine<Polynomial, PolyOps> engine(ops, options, true);
  auto result = engine.run(generators);
  return {std::move(result.basis), std::move(result.cofactors)};
}

bool satisfies_buchberger_criterion(const std::vector<Polynomial>& basis) {
  auto ring = common_ring(basis);
  if (!ring) return true;
  PolyOps ops{&ring->order};
  GroebnerOptions options;
  detail::BuchbergerEngine<Polynomial, PolyOps> engine(ops, options, false);
  return engine.criterion_holds(basis);
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (!g.is_zero()) gens_.push_back(g.in_ring(ring_));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {std::move(one)});
}

const std::vector<Polynomial>& Ideal::basis(const GroebnerOptions& options) const {
  std::lock_guard lock(cache_->mutex);
  if (!cache_->basis) cache_->basis = buchberger(gens_, options);
  return *cache_->basis;
}

bool Ideal::contains(const Polynomial& f, const GroebnerOptions& options) const {
  if (f.is_zero()) return true;
  return normal_form(f.in_ring(ring_), basis(options)).is_zero();
}

bool Ideal::contains(const Ideal& other, const GroebnerOptions& options) const {
  for (const auto& g : other.generators()) {
    if (!contains(g, options)) return false;
  }
  return true;
}

bool Ideal::is_unit(const GroebnerOptions& options) const {
  const auto& b = basis(options);
  return b.size() == 1 && b.front().is_constant();
}

Ideal Ideal::with_order(const MonomialOrder& order) const {
  return Ideal(fibrecheck::with_order(ring_, order), gens_);
}

bool ideal_member(const Polynomial& f, const Ideal& ideal, const GroebnerOptions& options) {
  return ideal.contains(f, options);
}

bool same_ideal(const Ideal& a, const Ideal& b, const GroebnerOptions& options) {
  return a.contains(b, options) && b.contains(a, options);
}

}  // namespace fibrecheck
