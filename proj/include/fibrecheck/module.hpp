#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "fibrecheck/groebner.hpp"
#include "fibrecheck/polynomial.hpp"

namespace fibrecheck {

namespace detail {
struct ModuleOps;
}

// A monomial order extended to terms m·e_i of a free module. The position
// comparison is spliced in after `position_slot` blocks of the monomial
// order; among positions, e_0 > e_1 > ... .
class ModuleOrder {
 public:
  ModuleOrder(MonomialOrder order, std::size_t position_slot);

  static ModuleOrder term_over_position(MonomialOrder order);
  static ModuleOrder position_over_term(MonomialOrder order);
  // The standard fibred-power order with the position compared right after
  // the tag and fibre blocks, ahead of the base block.
  static ModuleOrder fibre_position_base(const RingLayout& layout,
                                         WithinBlock kind = WithinBlock::Grevlex);

  const MonomialOrder& monomial_order() const noexcept { return order_; }
  std::size_t position_slot() const noexcept { return slot_; }

  int compare(const Monomial& a, std::size_t pa, const Monomial& b, std::size_t pb) const;

  // Same shape on another layout.
  ModuleOrder transported(const RingLayout& from, const RingLayout& to) const;

  friend bool operator==(const ModuleOrder&, const ModuleOrder&) = default;

 private:
  MonomialOrder order_;
  std::size_t slot_;
};

// An element of the free module R^t.
class ModuleVector {
 public:
  ModuleVector(RingPtr ring, std::vector<Polynomial> components);
  static ModuleVector zero(RingPtr ring, std::size_t rank);
  static ModuleVector unit(RingPtr ring, std::size_t rank, std::size_t position);

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t rank() const noexcept { return comps_.size(); }
  const Polynomial& operator[](std::size_t i) const { return comps_.at(i); }
  const std::vector<Polynomial>& components() const noexcept { return comps_; }
  bool is_zero() const noexcept;

  ModuleVector operator+(const ModuleVector& other) const;
  ModuleVector operator-(const ModuleVector& other) const;
  ModuleVector times(const Polynomial& f) const;
  ModuleVector in_ring(const RingPtr& target) const;

  friend bool operator==(const ModuleVector& a, const ModuleVector& b);

  // "(a; b; c)" with raw coefficients.
  std::string to_string() const;

 private:
  friend struct detail::ModuleOps;

  RingPtr ring_;
  std::vector<Polynomial> comps_;
};

// A submodule N ⊆ R^t given by generators, with a lazily cached reduced
// Gröbner basis under `order`. Components are kept in the ring whose
// monomial order matches the module order.
class ModulePresentation {
 public:
  ModulePresentation(RingPtr ring, std::size_t rank, std::vector<ModuleVector> generators,
                     std::optional<ModuleOrder> order = std::nullopt);

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t rank() const noexcept { return rank_; }
  const std::vector<ModuleVector>& generators() const noexcept { return gens_; }
  const ModuleOrder& order() const noexcept { return order_; }

  const std::vector<ModuleVector>& basis(const GroebnerOptions& options = {}) const;
  bool contains(const ModuleVector& v, const GroebnerOptions& options = {}) const;
  bool contains(const ModulePresentation& other, const GroebnerOptions& options = {}) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::optional<std::vector<ModuleVector>> basis;
  };

  RingPtr ring_;
  std::size_t rank_;
  std::vector<ModuleVector> gens_;
  ModuleOrder order_;
  std::shared_ptr<Cache> cache_;
};

// Leading term of a nonzero vector: (coefficient, monomial, position).
struct ModuleLead {
  Coefficient coef;
  Monomial mono;
  std::size_t position;
};
ModuleLead module_leading_term(const ModuleVector& v, const ModuleOrder& order);

// Only defined when the leading terms share a position.
ModuleVector s_vector(const ModuleVector& a, const ModuleVector& b, const ModuleOrder& order);
ModuleVector module_normal_form(const ModuleVector& v, const std::vector<ModuleVector>& basis,
                                const ModuleOrder& order);
std::vector<ModuleVector> module_buchberger(const std::vector<ModuleVector>& generators,
                                            const ModuleOrder& order,
                                            const GroebnerOptions& options = {});
std::vector<ModuleVector> module_buchberger(const ModulePresentation& presentation,
                                            const GroebnerOptions& options = {});
bool module_satisfies_buchberger_criterion(const std::vector<ModuleVector>& basis,
                                           const ModuleOrder& order);

// Base leading coefficient of a vector: terms sharing the leading term's
// position and fibre part, divided by that fibre monomial.
Polynomial base_leading_coefficient(const ModuleVector& v, const ModuleOrder& order);

}  // namespace fibrecheck
