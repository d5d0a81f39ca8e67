#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fibrecheck/groebner.hpp"
#include "fibrecheck/module.hpp"

namespace fibrecheck {

// A finitely presented A-module coker(A^s → A^t), relations lifted to 𝕜[y, x].
struct ModuleSpec {
  std::size_t rank = 1;
  std::vector<std::vector<Polynomial>> relations;
};

// The morphism Spec A → Spec R with R = 𝕜[y], A = R[x]/I, an optional module
// F over A, and the checks to run on it. Polynomials live in ring().
struct Problem {
  Field field = Field::rationals();
  std::vector<std::string> base_vars;
  std::vector<std::string> fibre_vars;
  std::vector<Polynomial> ideal;
  std::optional<ModuleSpec> module;
  bool check_open = true;
  bool check_flat = true;
  std::optional<int> max_power;

  // 𝕜[x, y] with the standard fibre ≫ base order.
  RingPtr ring(WithinBlock kind = WithinBlock::Grevlex) const;
  // Throws InvalidArgument when an invariant is violated.
  void validate() const;
  // Same problem with every polynomial moved to ring(kind).
  Problem with_order(WithinBlock kind) const;

  friend bool operator==(const Problem& a, const Problem& b);
};

// J_k = Σ_i relabel(I, i) in the k-copy layout. For k = 1 the ideal is
// returned unchanged.
Ideal fibred_power_ideal(const Ideal& ideal, int k);

// Presentation of F^{⊗k} over A^{⊗k} as a submodule of the free module of
// rank t^k (tensor indices flattened row-major). Relations: each relabeled
// relation of copy i placed in slot i against every basis tuple of the
// other slots, then every generator of J_k times every basis vector.
ModulePresentation tensor_power_presentation(const ModuleSpec& module, const Ideal& ideal, int k);
// With no module declared, F = A.
ModulePresentation tensor_power_presentation(const Problem& problem, int k,
                                             WithinBlock kind = WithinBlock::Grevlex);

// Row-major flat index of a tensor index tuple with entries in [0, rank).
std::size_t flat_tensor_index(const std::vector<std::size_t>& tuple, std::size_t rank);

}  // namespace fibrecheck
