#include "fibrecheck/power.hpp"

#include "fibrecheck/errors.hpp"

namespace fibrecheck {

namespace {

std::size_t int_pow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Tensor index tuples in row-major order.
std::vector<std::vector<std::size_t>> all_tuples(std::size_t rank, int k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(static_cast<std::size_t>(k), 0);
  if (rank == 0) return out;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] + 1 == rank) cur[i--] = 0;
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

}  // namespace

RingPtr Problem::ring(WithinBlock kind) const {
  return make_ring(RingLayout::make(base_vars, fibre_vars), field, kind);
}

void Problem::validate() const {
  if (base_vars.empty()) throw InvalidArgument("at least one base variable is required");
  RingLayout layout(base_vars, fibre_vars);
  for (const auto& g : ideal) {
    if (g.is_zero()) throw InvalidArgument("zero generator in the ideal");
    if (!(*g.ring()->layout == layout)) throw LayoutMismatch("ideal generator in a foreign ring");
  }
  if (module) {
    if (module->rank == 0) throw InvalidArgument("module rank must be positive");
    for (const auto& rel : module->relations) {
      if (rel.size() != module->rank) {
        throw InvalidArgument("module vector of length " + std::to_string(rel.size()) +
                              " in a module of rank " + std::to_string(module->rank));
      }
    }
  }
  if (max_power && *max_power < 1) throw InvalidArgument("power override must be at least 1");
}

Problem Problem::with_order(WithinBlock kind) const {
  Problem out = *this;
  auto target = ring(kind);
  for (auto& g : out.ideal) g = g.in_ring(target);
  if (out.module) {
    for (auto& rel : out.module->relations) {
      for (auto& c : rel) c = c.in_ring(target);
    }
  }
  return out;
}

bool operator==(const Problem& a, const Problem& b) {
  auto same_module = [](const std::optional<ModuleSpec>& x, const std::optional<ModuleSpec>& y) {
    if (x.has_value() != y.has_value()) return false;
    if (!x) return true;
    return x->rank == y->rank && x->relations == y->relations;
  };
  return a.field == b.field && a.base_vars == b.base_vars && a.fibre_vars == b.fibre_vars &&
         a.ideal == b.ideal && same_module(a.module, b.module) && a.check_open == b.check_open &&
         a.check_flat == b.check_flat && a.max_power == b.max_power;
}

Ideal fibred_power_ideal(const Ideal& ideal, int k) {
  if (k < 1) throw InvalidArgument("fibred power must be at least 1");
  const auto& ring = ideal.ring();
  const auto& layout = *ring->layout;
  if (layout.copies() != 1 || layout.has_tag()) {
    throw InvalidArgument("fibred power expects an ideal in the single-copy layout");
  }
  if (k == 1) return ideal;
  auto target = make_ring(layout.with_copies(k), ring->field, ring->order.kind());
  std::vector<Polynomial> gens;
  gens.reserve(ideal.generators().size() * static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) {
    for (const auto& g : ideal.generators()) gens.push_back(relabel(g, i, target));
  }
  return Ideal(target, std::move(gens));
}

std::size_t flat_tensor_index(const std::vector<std::size_t>& tuple, std::size_t rank) {
  std::size_t idx = 0;
  for (auto j : tuple) {
    if (j >= rank) throw InvalidArgument("tensor index out of range");
    idx = idx * rank + j;
  }
  return idx;
}

ModulePresentation tensor_power_presentation(const ModuleSpec& module, const Ideal& ideal, int k) {
  if (k < 1) throw InvalidArgument("tensor power must be at least 1");
  const auto t = module.rank;
  auto power_ideal = fibred_power_ideal(ideal, k);
  const auto& ring = power_ideal.ring();
  const auto total = int_pow(t, k);
  const auto others = all_tuples(t, k - 1);

  std::vector<ModuleVector> relations;
  for (int copy = 1; copy <= k; ++copy) {
    for (const auto& rel : module.relations) {
      std::vector<Polynomial> moved;
      for (const auto& c : rel) {
        moved.push_back(k == 1 ? c.in_ring(ring) : relabel(c, copy, ring));
      }
      for (const auto& rest : others) {
        std::vector<Polynomial> comps(total, Polynomial(ring));
        for (std::size_t j = 0; j < t; ++j) {
          std::vector<std::size_t> tuple;
          tuple.reserve(static_cast<std::size_t>(k));
          tuple.insert(tuple.end(), rest.begin(), rest.begin() + (copy - 1));
          tuple.push_back(j);
          tuple.insert(tuple.end(), rest.begin() + (copy - 1), rest.end());
          comps[flat_tensor_index(tuple, t)] = moved[j];
        }
        relations.emplace_back(ring, std::move(comps));
      }
    }
  }
  for (const auto& g : power_ideal.generators()) {
    for (std::size_t e = 0; e < total; ++e) {
      relations.push_back(ModuleVector::unit(ring, total, e).times(g));
    }
  }
  return ModulePresentation(ring, total, std::move(relations));
}

ModulePresentation tensor_power_presentation(const Problem& problem, int k, WithinBlock kind) {
  auto ordered = problem.with_order(kind);
  ModuleSpec free_rank_one;
  const ModuleSpec& spec = ordered.module ? *ordered.module : free_rank_one;
  return tensor_power_presentation(spec, Ideal(ordered.ring(kind), ordered.ideal), k);
}

}  // namespace fibrecheck
