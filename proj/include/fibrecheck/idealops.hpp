#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "fibrecheck/groebner.hpp"
#include "fibrecheck/module.hpp"

namespace fibrecheck {

// dim = -1 encodes the empty variety (unit ideal).
struct DimensionReport {
  int dim = -1;
  std::vector<std::size_t> independent;    // variable indices, ascending
  std::vector<std::string> independent_names;
};

// I ∩ 𝕜[keep], computed under an order placing the dropped variables first.
// The result stays in I's ring.
Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& keep,
                const GroebnerOptions& options = {});

// I ∩ J via (t·I + (1−t)·J) ∩ 𝕜[vars].
Ideal intersect(const Ideal& a, const Ideal& b, const GroebnerOptions& options = {});

// I : f. Throws InvalidArgument for f = 0.
Ideal quotient(const Ideal& ideal, const Polynomial& f, const GroebnerOptions& options = {});

// I : f^∞ = (I + (1 − t·f)) ∩ 𝕜[vars].
Ideal saturate(const Ideal& ideal, const Polynomial& f, const GroebnerOptions& options = {});

// N : f^∞ inside the free module, by the same tag construction componentwise.
ModulePresentation module_saturate(const ModulePresentation& module, const Polynomial& f,
                                   const GroebnerOptions& options = {});

// f ∈ √I iff 1 ∈ I + (1 − t·f).
bool radical_member(const Polynomial& f, const Ideal& ideal, const GroebnerOptions& options = {});

// I ∩ 𝕜[y], returned in the base-only ring.
Ideal contract_to_base(const Ideal& ideal, const GroebnerOptions& options = {});

// Krull dimension of 𝕜[vars]/I from a maximal independent set of the leading
// term ideal. The witness is the first maximal set in lexicographic index order.
DimensionReport krull_dim(const Ideal& ideal, const GroebnerOptions& options = {});

// Dimension of the fibre over a rational point of the base.
DimensionReport fibre_dim(const Ideal& ideal, const std::vector<mpq_class>& point,
                          const GroebnerOptions& options = {});

// a / b; throws InvalidArgument when b does not divide a.
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b);

// Monic gcd, computed as a·b / lcm with lcm the generator of (a) ∩ (b).
Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b,
                          const GroebnerOptions& options = {});

// A monic polynomial with the same zero set as f. Over Q this is the true
// squarefree part f / gcd(f, ∂f); over F_p only repeated monomial factors are
// truncated.
Polynomial squarefree_part(const Polynomial& f, const GroebnerOptions& options = {});

}  // namespace fibrecheck
