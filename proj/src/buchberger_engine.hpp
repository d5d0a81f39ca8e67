#pragma once

// Buchberger's algorithm shared by ideals (Polynomial) and submodules of free
// modules (ModuleVector). The element type is accessed only through Ops.

#include <algorithm>
#include <chrono>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fibrecheck/errors.hpp"
#include "fibrecheck/groebner.hpp"

namespace fibrecheck::detail {

struct LeadRef {
  const Coefficient* coef;
  const Monomial* mono;
  std::size_t pos;
};

using Cofactors = std::vector<Polynomial>;

template <class Elem>
struct EngineResult {
  std::vector<Elem> basis;
  std::vector<Cofactors> cofactors;  // empty unless traced
};

inline void check_deadline(const GroebnerOptions& options) {
  if (options.deadline && std::chrono::steady_clock::now() > *options.deadline) {
    throw ResourceLimitError("timeout", "time limit exceeded during Groebner basis computation");
  }
}

template <class Elem, class Ops>
class BuchbergerEngine {
 public:
  BuchbergerEngine(const Ops& ops, const GroebnerOptions& options, bool trace)
      : ops_(ops), options_(options), trace_(trace) {}

  // Full reduction of p by basis. When cof is given, it is kept in step with
  // p using basis_cofs.
  Elem reduce(Elem p, const std::vector<Elem>& basis, Cofactors* cof = nullptr,
              const std::vector<Cofactors>* basis_cofs = nullptr) const {
    Elem rem = ops_.zero_like(p);
    std::size_t steps = 0;
    while (!ops_.is_zero(p)) {
      if (++steps % 4096 == 0) check_deadline(options_);
      LeadRef lp = ops_.lead(p);
      const Elem* divisor = nullptr;
      std::size_t divisor_index = 0;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        LeadRef lg = ops_.lead(basis[i]);
        if (lg.pos == lp.pos && lg.mono->divides(*lp.mono)) {
          divisor = &basis[i];
          divisor_index = i;
          break;
        }
      }
      if (divisor == nullptr) {
        ops_.move_lead(p, rem);
        continue;
      }
      LeadRef lg = ops_.lead(*divisor);
      Coefficient c = *lp.coef / *lg.coef;
      Monomial m = lp.mono->quotient(*lg.mono);
      if (cof != nullptr) {
        const auto& gc = (*basis_cofs)[divisor_index];
        for (std::size_t k = 0; k < cof->size(); ++k) {
          (*cof)[k] = (*cof)[k].minus_times_term(c, m, gc[k]);
        }
      }
      p = ops_.sub(p, c, m, *divisor);
    }
    return rem;
  }

  Elem s_element(const Elem& a, const Elem& b, Cofactors* cof = nullptr,
                 const Cofactors* ca = nullptr, const Cofactors* cb = nullptr) const {
    LeadRef la = ops_.lead(a);
    LeadRef lb = ops_.lead(b);
    if (la.pos != lb.pos) throw InvalidArgument("S-element of leads in different positions");
    Monomial l = lcm(*la.mono, *lb.mono);
    Coefficient ca_scale = la.coef->inverse();
    Coefficient cb_scale = lb.coef->inverse();
    Monomial ma = l.quotient(*la.mono);
    Monomial mb = l.quotient(*lb.mono);
    if (cof != nullptr) {
      for (std::size_t k = 0; k < cof->size(); ++k) {
        (*cof)[k] = (*ca)[k].times_term(ca_scale, ma).minus_times_term(cb_scale, mb, (*cb)[k]);
      }
    }
    return ops_.sub(ops_.times_term(a, ca_scale, ma), cb_scale, mb, b);
  }

  EngineResult<Elem> run(const std::vector<Elem>& generators) {
    std::vector<Elem> g;
    std::vector<Cofactors> cofs;
    for (std::size_t i = 0; i < generators.size(); ++i) {
      if (ops_.is_zero(generators[i])) continue;
      Coefficient inv = ops_.lead(generators[i]).coef->inverse();
      g.push_back(ops_.scaled(generators[i], inv));
      if (trace_) {
        Cofactors c(generators.size(), Polynomial(ops_.ring(generators[i])));
        c[i] = Polynomial::constant(ops_.ring(generators[i]), inv);
        cofs.push_back(std::move(c));
      }
    }

    std::set<std::pair<std::size_t, std::size_t>> pending;
    for (std::size_t j = 0; j < g.size(); ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (ops_.lead(g[i]).pos == ops_.lead(g[j]).pos) pending.emplace(i, j);
      }
    }
    note_size(g.size());

    std::size_t processed = 0;
    while (!pending.empty()) {
      auto pick = select(g, pending);
      pending.erase(pick);
      auto [i, j] = pick;
      LeadRef li = ops_.lead(g[i]);
      LeadRef lj = ops_.lead(g[j]);
      if constexpr (Ops::kProductCriterion) {
        if (li.mono->coprime(*lj.mono)) continue;
      }
      Monomial l = lcm(*li.mono, *lj.mono);
      if (chain_criterion(g, pending, i, j, l, li.pos)) continue;

      if (++processed > options_.pair_limit) {
        throw ResourceLimitError("pair-limit", "S-pair limit of " +
                                                   std::to_string(options_.pair_limit) +
                                                   " exceeded");
      }
      check_deadline(options_);
      if (options_.stats != nullptr) ++options_.stats->pairs;

      Cofactors cof;
      if (trace_) cof.assign(cofs[i].size(), Polynomial(ops_.ring(g[i])));
      Elem s = s_element(g[i], g[j], trace_ ? &cof : nullptr, trace_ ? &cofs[i] : nullptr,
                         trace_ ? &cofs[j] : nullptr);
      Elem h = reduce(std::move(s), g, trace_ ? &cof : nullptr, trace_ ? &cofs : nullptr);
      if (ops_.is_zero(h)) {
        if (options_.stats != nullptr) ++options_.stats->zero_reductions;
        continue;
      }
      Coefficient inv = ops_.lead(h).coef->inverse();
      h = ops_.scaled(h, inv);
      if (trace_) {
        for (auto& c : cof) c = c.scaled(inv);
      }
      if (ops_.is_unit(h)) {
        EngineResult<Elem> unit;
        unit.basis.push_back(std::move(h));
        if (trace_) unit.cofactors.push_back(std::move(cof));
        return unit;
      }
      std::size_t k = g.size();
      std::size_t hpos = ops_.lead(h).pos;
      g.push_back(std::move(h));
      if (trace_) cofs.push_back(std::move(cof));
      for (std::size_t i2 = 0; i2 < k; ++i2) {
        if (ops_.lead(g[i2]).pos == hpos) pending.emplace(i2, k);
      }
      note_size(g.size());
    }
    return finish(std::move(g), std::move(cofs));
  }

  bool criterion_holds(const std::vector<Elem>& basis) const {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (ops_.lead(basis[i]).pos != ops_.lead(basis[j]).pos) continue;
        if (!ops_.is_zero(reduce(s_element(basis[i], basis[j]), basis))) return false;
      }
    }
    return true;
  }

 private:
  void note_size(std::size_t size) const {
    if (options_.stats != nullptr) {
      options_.stats->max_basis_size = std::max(options_.stats->max_basis_size, size);
    }
  }

  // Normal strategy: smallest lcm degree, then smallest lcm, then indices.
  std::pair<std::size_t, std::size_t> select(
      const std::vector<Elem>& g, const std::set<std::pair<std::size_t, std::size_t>>& pending) {
    const std::pair<std::size_t, std::size_t>* best = nullptr;
    Monomial best_lcm;
    std::size_t best_pos = 0;
    for (const auto& pr : pending) {
      LeadRef a = ops_.lead(g[pr.first]);
      LeadRef b = ops_.lead(g[pr.second]);
      Monomial l = lcm(*a.mono, *b.mono);
      if (best != nullptr) {
        if (l.degree() > best_lcm.degree()) continue;
        if (l.degree() == best_lcm.degree() && ops_.compare(l, a.pos, best_lcm, best_pos) >= 0) {
          continue;
        }
      }
      best = &pr;
      best_lcm = std::move(l);
      best_pos = a.pos;
    }
    return *best;
  }

  bool chain_criterion(const std::vector<Elem>& g,
                       const std::set<std::pair<std::size_t, std::size_t>>& pending,
                       std::size_t i, std::size_t j, const Monomial& l, std::size_t pos) const {
    auto is_pending = [&](std::size_t a, std::size_t b) {
      return pending.count({std::min(a, b), std::max(a, b)}) > 0;
    };
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (k == i || k == j) continue;
      LeadRef lk = ops_.lead(g[k]);
      if (lk.pos != pos || !lk.mono->divides(l)) continue;
      if (!is_pending(i, k) && !is_pending(j, k)) return true;
    }
    return false;
  }

  EngineResult<Elem> finish(std::vector<Elem> g, std::vector<Cofactors> cofs) const {
    std::vector<bool> alive(g.size(), true);
    for (std::size_t i = 0; i < g.size(); ++i) {
      LeadRef li = ops_.lead(g[i]);
      for (std::size_t j = 0; j < g.size(); ++j) {
        if (j == i || !alive[j]) continue;
        LeadRef lj = ops_.lead(g[j]);
        if (lj.pos != li.pos || !lj.mono->divides(*li.mono)) continue;
        if (!(*lj.mono == *li.mono) || j < i) {
          alive[i] = false;
          break;
        }
      }
    }
    std::vector<Elem> minimal;
    std::vector<Cofactors> minimal_cofs;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (!alive[i]) continue;
      minimal.push_back(g[i]);
      if (trace_) minimal_cofs.push_back(cofs[i]);
    }

    EngineResult<Elem> out;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Elem> others;
      std::vector<Cofactors> other_cofs;
      for (std::size_t j = 0; j < minimal.size(); ++j) {
        if (j == i) continue;
        others.push_back(minimal[j]);
        if (trace_) other_cofs.push_back(minimal_cofs[j]);
      }
      // The leading term survives: no other leading monomial divides it.
      Elem head = minimal[i];
      Elem tail = ops_.zero_like(head);
      ops_.move_lead(head, tail);
      std::swap(head, tail);  // head = lead only, tail = rest
      Cofactors cof;
      if (trace_) {
        cof = minimal_cofs[i];
        Cofactors dummy = cof;
        // Reduce the tail, tracking how much of the others was subtracted.
        for (auto& c : dummy) c = Polynomial(c.ring());
        Elem reduced_tail = reduce(tail, others, &dummy, &other_cofs);
        for (std::size_t k = 0; k < cof.size(); ++k) cof[k] = cof[k] + dummy[k];
        out.basis.push_back(ops_.add(head, reduced_tail));
      } else {
        out.basis.push_back(ops_.add(head, reduce(tail, others)));
      }
      Coefficient inv = ops_.lead(out.basis.back()).coef->inverse();
      out.basis.back() = ops_.scaled(out.basis.back(), inv);
      if (trace_) {
        for (auto& c : cof) c = c.scaled(inv);
        out.cofactors.push_back(std::move(cof));
      }
    }

    std::vector<std::size_t> perm(out.basis.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
      LeadRef la = ops_.lead(out.basis[a]);
      LeadRef lb = ops_.lead(out.basis[b]);
      return ops_.compare(*la.mono, la.pos, *lb.mono, lb.pos) > 0;
    });
    EngineResult<Elem> sorted;
    for (auto p : perm) {
      sorted.basis.push_back(std::move(out.basis[p]));
      if (trace_) sorted.cofactors.push_back(std::move(out.cofactors[p]));
    }
    if (options_.verify && !criterion_holds(sorted.basis)) {
      throw SoundnessError("computed basis violates the Buchberger criterion");
    }
    return sorted;
  }

  const Ops& ops_;
  const GroebnerOptions& options_;
  bool trace_;
};

}  // namespace fibrecheck::detail
