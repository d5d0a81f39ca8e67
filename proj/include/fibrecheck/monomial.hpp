#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace fibrecheck {

// Exponent vector indexed by the variables of a RingLayout.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  explicit Monomial(std::vector<Exponent> exps);
  static Monomial variable(std::size_t num_vars, std::size_t var, Exponent power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t var) const { return exps_[var]; }
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }
  std::uint64_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  // this | other
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  // this / divisor; divisor must divide this.
  Monomial quotient(const Monomial& divisor) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::vector<Exponent> exps_;
  std::uint64_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace fibrecheck
