#include "fibrecheck/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "fibrecheck/errors.hpp"

namespace fibrecheck {

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

Monomial Monomial::variable(std::size_t num_vars, std::size_t var, Exponent power) {
  std::vector<Exponent> e(num_vars, 0);
  e.at(var) = power;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw InvalidArgument("monomial quotient is not exact");
  std::vector<Exponent> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] - divisor.exps_[i];
  return Monomial(std::move(e));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Exponent> e(a.exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exps_[i] + b.exps_[i];
  return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Exponent> e(a.exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exps_[i], b.exps_[i]);
  return Monomial(std::move(e));
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto e : m.exponents()) {
    h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace fibrecheck
