#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fibrecheck/coefficient.hpp"
#include "fibrecheck/layout.hpp"
#include "fibrecheck/monomial.hpp"
#include "fibrecheck/monomial_order.hpp"

namespace fibrecheck {

// The ambient ring of a polynomial: variables, coefficient field, and the
// order under which its terms are kept sorted.
struct Ring {
  LayoutPtr layout;
  Field field;
  MonomialOrder order;

  std::size_t num_vars() const noexcept { return layout->num_vars(); }
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(LayoutPtr layout, Field field, MonomialOrder order);
RingPtr make_ring(LayoutPtr layout, Field field, WithinBlock kind = WithinBlock::Grevlex);
RingPtr with_order(const RingPtr& ring, MonomialOrder order);
bool same_ring(const Ring& a, const Ring& b);

struct Term {
  Coefficient coef;
  Monomial mono;
};

// Sparse polynomial with nonzero coefficients and distinct monomials, sorted
// descending under the ring order. The zero polynomial has no terms.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, const Coefficient& c);
  static Polynomial constant(RingPtr ring, long c);
  static Polynomial variable(RingPtr ring, std::size_t var, Monomial::Exponent power = 1);
  static Polynomial variable(RingPtr ring, std::string_view name, Monomial::Exponent power = 1);
  static Polynomial monomial(RingPtr ring, const Coefficient& c, Monomial m);
  // Merges duplicates, drops zeros, and sorts.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  const Ring& ring_ref() const noexcept { return *ring_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  std::size_t size() const noexcept { return terms_.size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::uint64_t total_degree() const noexcept;

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Coefficient& leading_coefficient() const { return leading_term().coef; }

  Polynomial operator-() const;
  Polynomial scaled(const Coefficient& c) const;
  Polynomial times_term(const Coefficient& c, const Monomial& m) const;
  // this - c*m*g, by a single merge pass.
  Polynomial minus_times_term(const Coefficient& c, const Monomial& m, const Polynomial& g) const;
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  // Variables mapped by name into `target`; terms re-sorted under its order.
  Polynomial in_ring(const RingPtr& target) const;
  // True when only variables flagged in `allowed` occur.
  bool involves_only(const std::vector<bool>& allowed) const;
  bool involves(std::size_t var) const;
  Polynomial derivative(std::size_t var) const;

  // Terms in ring order with raw coefficients, e.g. "3/2*x^2*y - y1".
  std::string to_string() const;

  // Reduction-loop primitives: remove the leading term, or append a term that
  // is smaller than every term already present.
  Term pop_leading_term();
  void push_back_smallest(Term t);

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted_terms)
      : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial pow(const Polynomial& f, unsigned k);

// The term of f that is maximal under ord; throws InvalidArgument for f = 0.
std::pair<Coefficient, Monomial> leading_term(const Polynomial& f, const MonomialOrder& ord);

// Fibre part of a monomial: base exponents cleared.
Monomial fibre_part(const RingLayout& layout, const Monomial& m);

// The coefficient in 𝕜[y] of the leading fibre monomial of f, viewing f as a
// polynomial in the fibre (and tag) variables. ord must place fibre above base.
Polynomial base_leading_coefficient(const Polynomial& f, const MonomialOrder& ord);

// Replace every base variable by the given coordinate. The result lives in the
// fibre-only layout of f's ring.
Polynomial substitute_base_point(const Polynomial& f, const std::vector<mpq_class>& point);

// Move f (base variables plus the first fibre block) into fibre copy `copy`
// of `target`, keeping base variables fixed.
Polynomial relabel(const Polynomial& f, int copy, const RingPtr& target);

// Rendering with coprime integer coefficients and positive leading
// coefficient over Q; monic over F_p. Used for every user-visible polynomial.
std::string render_normalized(const Polynomial& f);
Polynomial content_normalized(const Polynomial& f);
// Joint normalization of a vector: one common scalar for every component,
// chosen from the first nonzero component.
std::vector<Polynomial> content_normalized(const std::vector<Polynomial>& v);

}  // namespace fibrecheck
