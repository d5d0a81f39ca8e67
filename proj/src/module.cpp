#include "fibrecheck/module.hpp"

#include <sstream>

#include "buchberger_engine.hpp"
#include "fibrecheck/errors.hpp"

namespace fibrecheck {

namespace detail {

struct ModuleOps {
  static constexpr bool kProductCriterion = false;

  const ModuleOrder* order;

  LeadRef lead(const ModuleVector& v) const {
    const Term* best = nullptr;
    std::size_t best_pos = 0;
    for (std::size_t i = 0; i < v.comps_.size(); ++i) {
      if (v.comps_[i].is_zero()) continue;
      const Term& t = v.comps_[i].leading_term();
      if (best == nullptr || order->compare(t.mono, i, best->mono, best_pos) > 0) {
        best = &t;
        best_pos = i;
      }
    }
    if (best == nullptr) throw InvalidArgument("leading term of the zero vector");
    return {&best->coef, &best->mono, best_pos};
  }
  int compare(const Monomial& a, std::size_t pa, const Monomial& b, std::size_t pb) const {
    return order->compare(a, pa, b, pb);
  }
  ModuleVector sub(const ModuleVector& p, const Coefficient& c, const Monomial& m,
                   const ModuleVector& g) const {
    auto comps = p.comps_;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if (!g.comps_[i].is_zero()) comps[i] = comps[i].minus_times_term(c, m, g.comps_[i]);
    }
    return ModuleVector(p.ring_, std::move(comps));
  }
  ModuleVector add(const ModuleVector& a, const ModuleVector& b) const { return a + b; }
  ModuleVector times_term(const ModuleVector& p, const Coefficient& c, const Monomial& m) const {
    auto comps = p.comps_;
    for (auto& f : comps) f = f.times_term(c, m);
    return ModuleVector(p.ring_, std::move(comps));
  }
  ModuleVector scaled(const ModuleVector& p, const Coefficient& c) const {
    auto comps = p.comps_;
    for (auto& f : comps) f = f.scaled(c);
    return ModuleVector(p.ring_, std::move(comps));
  }
  bool is_zero(const ModuleVector& v) const { return v.is_zero(); }
  bool is_unit(const ModuleVector&) const { return false; }
  ModuleVector zero_like(const ModuleVector& v) const {
    return ModuleVector::zero(v.ring_, v.rank());
  }
  void move_lead(ModuleVector& from, ModuleVector& to) const {
    auto pos = lead(from).pos;
    to.comps_[pos].push_back_smallest(from.comps_[pos].pop_leading_term());
  }
  const RingPtr& ring(const ModuleVector& v) const { return v.ring_; }
};

}  // namespace detail

ModuleOrder::ModuleOrder(MonomialOrder order, std::size_t position_slot)
    : order_(std::move(order)), slot_(position_slot) {
  if (slot_ > order_.num_blocks()) throw InvalidArgument("position slot out of range");
}

ModuleOrder ModuleOrder::term_over_position(MonomialOrder order) {
  auto slot = order.num_blocks();
  return ModuleOrder(std::move(order), slot);
}

ModuleOrder ModuleOrder::position_over_term(MonomialOrder order) {
  return ModuleOrder(std::move(order), 0);
}

ModuleOrder ModuleOrder::fibre_position_base(const RingLayout& layout, WithinBlock kind) {
  std::size_t slot = (layout.has_tag() ? 1 : 0) + (layout.m() > 0 ? 1 : 0);
  return ModuleOrder(MonomialOrder::standard(layout, kind), slot);
}

int ModuleOrder::compare(const Monomial& a, std::size_t pa, const Monomial& b,
                         std::size_t pb) const {
  for (std::size_t blk = 0; blk <= order_.num_blocks(); ++blk) {
    if (blk == slot_ && pa != pb) return pa < pb ? 1 : -1;
    if (blk == order_.num_blocks()) break;
    if (int c = order_.compare_block(blk, a, b); c != 0) return c;
  }
  return 0;
}

ModuleOrder ModuleOrder::transported(const RingLayout& from, const RingLayout& to) const {
  auto moved = order_.transported(from, to);
  if (moved.num_blocks() == order_.num_blocks()) return ModuleOrder(std::move(moved), slot_);
  if (moved.num_blocks() == order_.num_blocks() + 1) {
    return ModuleOrder(std::move(moved), slot_ + 1);
  }
  throw InvalidArgument("module order cannot be transported to this layout");
}

ModuleVector::ModuleVector(RingPtr ring, std::vector<Polynomial> components)
    : ring_(std::move(ring)) {
  comps_.reserve(components.size());
  for (auto& c : components) comps_.push_back(c.in_ring(ring_));
}

ModuleVector ModuleVector::zero(RingPtr ring, std::size_t rank) {
  std::vector<Polynomial> comps(rank, Polynomial(ring));
  return ModuleVector(std::move(ring), std::move(comps));
}

ModuleVector ModuleVector::unit(RingPtr ring, std::size_t rank, std::size_t position) {
  if (position >= rank) throw InvalidArgument("unit vector position out of range");
  std::vector<Polynomial> comps(rank, Polynomial(ring));
  comps[position] = Polynomial::constant(ring, 1);
  return ModuleVector(std::move(ring), std::move(comps));
}

bool ModuleVector::is_zero() const noexcept {
  for (const auto& c : comps_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

ModuleVector ModuleVector::operator+(const ModuleVector& other) const {
  if (other.rank() != rank()) throw LayoutMismatch("vectors of different rank");
  auto comps = comps_;
  for (std::size_t i = 0; i < comps.size(); ++i) comps[i] = comps[i] + other.comps_[i];
  return ModuleVector(ring_, std::move(comps));
}

ModuleVector ModuleVector::operator-(const ModuleVector& other) const {
  if (other.rank() != rank()) throw LayoutMismatch("vectors of different rank");
  auto comps = comps_;
  for (std::size_t i = 0; i < comps.size(); ++i) comps[i] = comps[i] - other.comps_[i];
  return ModuleVector(ring_, std::move(comps));
}

ModuleVector ModuleVector::times(const Polynomial& f) const {
  auto g = f.in_ring(ring_);
  auto comps = comps_;
  for (auto& c : comps) c = c * g;
  return ModuleVector(ring_, std::move(comps));
}

ModuleVector ModuleVector::in_ring(const RingPtr& target) const {
  return ModuleVector(target, comps_);
}

bool operator==(const ModuleVector& a, const ModuleVector& b) { return a.comps_ == b.comps_; }

std::string ModuleVector::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (i > 0) out << "; ";
    out << comps_[i].to_string();
  }
  out << ")";
  return out.str();
}

ModulePresentation::ModulePresentation(RingPtr ring, std::size_t rank,
                                       std::vector<ModuleVector> generators,
                                       std::optional<ModuleOrder> order)
    : rank_(rank),
      order_(order ? *order
                   : ModuleOrder::fibre_position_base(*ring->layout, ring->order.kind())),
      cache_(std::make_shared<Cache>()) {
  ring_ = fibrecheck::with_order(ring, order_.monomial_order());
  for (auto& g : generators) {
    if (g.rank() != rank_) {
      throw InvalidArgument("relation vector of length " + std::to_string(g.rank()) +
                            " in a module of rank " + std::to_string(rank_));
    }
    if (!g.is_zero()) gens_.push_back(g.in_ring(ring_));
  }
}

const std::vector<ModuleVector>& ModulePresentation::basis(const GroebnerOptions& options) const {
  std::lock_guard lock(cache_->mutex);
  if (!cache_->basis) cache_->basis = module_buchberger(gens_, order_, options);
  return *cache_->basis;
}

bool ModulePresentation::contains(const ModuleVector& v, const GroebnerOptions& options) const {
  if (v.rank() != rank_) throw LayoutMismatch("vector rank does not match the module");
  return module_normal_form(v.in_ring(ring_), basis(options), order_).is_zero();
}

bool ModulePresentation::contains(const ModulePresentation& other,
                                  const GroebnerOptions& options) const {
  for (const auto& g : other.generators()) {
    if (!contains(g, options)) return false;
  }
  return true;
}

ModuleLead module_leading_term(const ModuleVector& v, const ModuleOrder& order) {
  detail::ModuleOps ops{&order};
  auto lead = ops.lead(v);
  return {*lead.coef, *lead.mono, lead.pos};
}

ModuleVector s_vector(const ModuleVector& a, const ModuleVector& b, const ModuleOrder& order) {
  detail::ModuleOps ops{&order};
  GroebnerOptions options;
  detail::BuchbergerEngine<ModuleVector, detail::ModuleOps> engine(ops, options, false);
  return engine.s_element(a, b);
}

ModuleVector module_normal_form(const ModuleVector& v, const std::vector<ModuleVector>& basis,
                                const ModuleOrder& order) {
  detail::ModuleOps ops{&order};
  GroebnerOptions options;
  detail::BuchbergerEngine<ModuleVector, detail::ModuleOps> engine(ops, options, false);
  return engine.reduce(v, basis);
}

std::vector<ModuleVector> module_buchberger(const std::vector<ModuleVector>& generators,
                                            const ModuleOrder& order,
                                            const GroebnerOptions& options) {
  detail::ModuleOps ops{&order};
  detail::BuchbergerEngine<ModuleVector, detail::ModuleOps> engine(ops, options, false);
  return engine.run(generators).basis;
}

std::vector<ModuleVector> module_buchberger(const ModulePresentation& presentation,
                                            const GroebnerOptions& options) {
  return module_buchberger(presentation.generators(), presentation.order(), options);
}

bool module_satisfies_buchberger_criterion(const std::vector<ModuleVector>& basis,
                                           const ModuleOrder& order) {
  detail::ModuleOps ops{&order};
  GroebnerOptions options;
  detail::BuchbergerEngine<ModuleVector, detail::ModuleOps> engine(ops, options, false);
  return engine.criterion_holds(basis);
}

Polynomial base_leading_coefficient(const ModuleVector& v, const ModuleOrder& order) {
  const auto& layout = *v.ring()->layout;
  const auto& mono = order.monomial_order();
  if (!mono.places_fibre_above_base(layout)) {
    throw InvalidArgument("base leading coefficient needs an order with fibre above base");
  }
  for (std::size_t blk = 0; blk < order.position_slot(); ++blk) {
    for (auto var : mono.blocks()[blk]) {
      if (layout.block_of(var) == VarBlock::Base) {
        throw InvalidArgument("module order compares base variables before positions");
      }
    }
  }
  auto lead = module_leading_term(v, order);
  auto lead_fibre = fibre_part(layout, lead.mono);
  std::vector<Term> terms;
  for (const auto& t : v[lead.position].terms()) {
    if (fibre_part(layout, t.mono) == lead_fibre) {
      terms.push_back({t.coef, t.mono.quotient(lead_fibre)});
    }
  }
  return Polynomial::from_terms(v.ring(), std::move(terms));
}

}  // namespace fibrecheck
