#pragma once

#include <chrono>
#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "fibrecheck/polynomial.hpp"

namespace fibrecheck {

struct GroebnerStats {
  std::size_t pairs = 0;            // S-pairs actually reduced
  std::size_t zero_reductions = 0;  // of those, how many reduced to zero
  std::size_t max_basis_size = 0;

  void absorb(const GroebnerStats& other);
};

struct GroebnerOptions {
  std::size_t pair_limit = 100000;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  // Accumulates over every basis computed with these options.
  GroebnerStats* stats = nullptr;
  // Re-check the Buchberger criterion on every computed basis.
  bool verify = false;
};

// (lcm/LT(f))·f − (lcm/LT(g))·g under the ring order of f and g.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

// Full remainder of multivariate division by `basis` (first divisor wins).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis);

// Reduced Gröbner basis under the ring order of the generators: monic,
// interreduced, sorted by descending leading monomial. Zero generators are
// ignored; the zero ideal yields the empty basis.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& generators,
                                   const GroebnerOptions& options = {});

// Reduced basis together with, for each element, cofactors c_i such that
// element = Σ c_i · generators[i].
struct TracedBasis {
  std::vector<Polynomial> basis;
  std::vector<std::vector<Polynomial>> cofactors;
};
TracedBasis buchberger_traced(const std::vector<Polynomial>& generators,
                              const GroebnerOptions& options = {});

bool satisfies_buchberger_criterion(const std::vector<Polynomial>& basis);

// A polynomial ideal with a lazily computed reduced basis under its ring
// order. Copies share the cache.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);
  static Ideal unit(RingPtr ring);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  bool has_no_generators() const noexcept { return gens_.empty(); }

  const std::vector<Polynomial>& basis(const GroebnerOptions& options = {}) const;
  bool contains(const Polynomial& f, const GroebnerOptions& options = {}) const;
  bool contains(const Ideal& other, const GroebnerOptions& options = {}) const;
  bool is_unit(const GroebnerOptions& options = {}) const;

  // Same generators, re-sorted under another order of the same layout.
  Ideal with_order(const MonomialOrder& order) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::optional<std::vector<Polynomial>> basis;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

bool ideal_member(const Polynomial& f, const Ideal& ideal, const GroebnerOptions& options = {});
// Mutual containment.
bool same_ideal(const Ideal& a, const Ideal& b, const GroebnerOptions& options = {});

}  // namespace fibrecheck
