#pragma once

#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fibrecheck/fibrecheck.hpp"

namespace fibrecheck::testing {

inline RingPtr ring(std::vector<std::string> base, std::vector<std::string> fibre, int copies = 1,
                    WithinBlock kind = WithinBlock::Grevlex, Field field = Field::rationals()) {
  return make_ring(RingLayout::make(std::move(base), std::move(fibre), copies), field, kind);
}

inline Polynomial P(const RingPtr& r, const std::string& text) { return parse_polynomial(r, text); }

inline Ideal ideal(const RingPtr& r, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(P(r, g));
  return Ideal(r, std::move(ps));
}

inline std::string fixture_path(const std::string& name) {
  return std::string(FIBRECHECK_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Problem fixture(const std::string& name) {
  return parse_problem(read_file(fixture_path(name + ".alg")));
}

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {
      "blowup",   "cusp",           "double_cover", "open_immersion", "zero_ideal",
      "identity", "vertical_lines", "empty_scheme", "module_torsion", "prime_field"};
  return names;
}

// Rank of a dense matrix over Q by Gaussian elimination.
inline std::size_t rank_over_q(std::vector<std::vector<mpq_class>> a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      mpq_class factor = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= factor * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline void enumerate_monomials(std::size_t vars, unsigned max_degree,
                                std::vector<std::vector<Monomial::Exponent>>& out,
                                std::vector<Monomial::Exponent>& cur, std::size_t at,
                                unsigned left) {
  if (at == vars) {
    out.push_back(cur);
    return;
  }
  for (unsigned e = 0; e <= left; ++e) {
    cur[at] = e;
    enumerate_monomials(vars, max_degree, out, cur, at + 1, left - e);
  }
  cur[at] = 0;
}

inline std::vector<Monomial> monomials_up_to(std::size_t vars, unsigned degree) {
  std::vector<std::vector<Monomial::Exponent>> raw;
  std::vector<Monomial::Exponent> cur(vars, 0);
  enumerate_monomials(vars, degree, raw, cur, 0, degree);
  std::vector<Monomial> out;
  for (auto& e : raw) out.emplace_back(std::move(e));
  return out;
}

// Macaulay-matrix membership over Q: is f a combination sum c * m * g_i with
// deg(m * g_i) <= degree? Independent of any Groebner computation.
inline bool macaulay_member(const Polynomial& f, const std::vector<Polynomial>& gens,
                            unsigned degree) {
  const std::size_t vars = f.ring()->num_vars();
  std::map<std::vector<Monomial::Exponent>, std::size_t> row_of;
  auto row = [&](const Monomial& m) {
    auto [it, inserted] = row_of.emplace(m.exponents(), row_of.size());
    return it->second;
  };
  std::vector<std::map<std::size_t, mpq_class>> columns;
  for (const auto& g : gens) {
    if (g.is_zero() || g.total_degree() > degree) continue;
    for (const auto& m : monomials_up_to(vars, degree - static_cast<unsigned>(g.total_degree()))) {
      std::map<std::size_t, mpq_class> col;
      for (const auto& t : g.terms()) col[row(t.mono * m)] = t.coef.rational();
      columns.push_back(std::move(col));
    }
  }
  std::map<std::size_t, mpq_class> target;
  for (const auto& t : f.terms()) target[row(t.mono)] = t.coef.rational();
  std::vector<std::vector<mpq_class>> a(row_of.size(), std::vector<mpq_class>(columns.size() + 1));
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (const auto& [r, v] : columns[c]) a[r][c] = v;
  }
  auto without_target = a;
  for (const auto& [r, v] : target) a[r][columns.size()] = v;
  return rank_over_q(without_target) == rank_over_q(a);
}

// Module membership through the ideal generated by sum_i v_i e_i for each
// relation plus all e_i e_j: degree-one parts in e match the submodule.
inline bool module_member_oracle(const ModuleVector& v, const std::vector<ModuleVector>& relations,
                                 unsigned degree) {
  const auto& layout = *v.ring()->layout;
  auto fibre = layout.fibre_vars();
  for (std::size_t i = 0; i < v.rank(); ++i) fibre.push_back("e_" + std::to_string(i));
  auto big = make_ring(RingLayout::make(layout.base_vars(), fibre, layout.copies()),
                       v.ring()->field, WithinBlock::Grevlex);
  auto embed = [&](const ModuleVector& w) {
    Polynomial acc(big);
    for (std::size_t i = 0; i < w.rank(); ++i) {
      acc = acc + w[i].in_ring(big) * Polynomial::variable(big, "e_" + std::to_string(i));
    }
    return acc;
  };
  std::vector<Polynomial> gens;
  for (const auto& r : relations) gens.push_back(embed(r));
  for (std::size_t i = 0; i < v.rank(); ++i) {
    for (std::size_t j = i; j < v.rank(); ++j) {
      gens.push_back(Polynomial::variable(big, "e_" + std::to_string(i)) *
                     Polynomial::variable(big, "e_" + std::to_string(j)));
    }
  }
  return macaulay_member(embed(v), gens, degree + 1);
}

// Random ideal over Q[y][x] with small degrees and coefficients.
struct RandomSpec {
  std::size_t n;
  std::size_t m;
  std::size_t gens;
};

inline Problem random_problem(std::mt19937& rng, const RandomSpec& spec) {
  Problem p;
  for (std::size_t i = 0; i < spec.n; ++i) p.base_vars.push_back("y" + std::to_string(i + 1));
  for (std::size_t j = 0; j < spec.m; ++j) p.fibre_vars.push_back("x" + std::to_string(j + 1));
  auto r = p.ring();
  auto monos = monomials_up_to(r->num_vars(), 2);
  std::uniform_int_distribution<int> coef(-2, 2);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  std::uniform_int_distribution<int> terms(1, 3);
  while (p.ideal.size() < spec.gens) {
    std::vector<Term> ts;
    int count = terms(rng);
    for (int t = 0; t < count; ++t) {
      int c = coef(rng);
      if (c == 0) c = 1;
      ts.push_back({r->field.from_integer(c), monos[pick(rng)]});
    }
    auto f = Polynomial::from_terms(r, std::move(ts));
    if (!f.is_zero() && !f.is_constant()) p.ideal.push_back(std::move(f));
  }
  return p;
}

inline std::vector<Problem> random_corpus(unsigned seed, std::size_t count) {
  std::mt19937 rng(seed);
  std::vector<Problem> out;
  std::uniform_int_distribution<std::size_t> small(1, 2);
  for (std::size_t i = 0; i < count; ++i) {
    RandomSpec spec{small(rng), small(rng), small(rng)};
    out.push_back(random_problem(rng, spec));
  }
  return out;
}

}  // namespace fibrecheck::testing
