#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

namespace fibrecheck {

class Coefficient;

// The coefficient field: either Q or a prime field F_p with p < 2^31.
class Field {
 public:
  static Field rationals() { return Field(0); }
  // Throws InvalidArgument for a non-prime modulus and UnsupportedInput when
  // p does not fit the single-word residue representation.
  static Field prime(std::uint64_t p);

  bool is_rationals() const noexcept { return p_ == 0; }
  std::uint32_t characteristic() const noexcept { return p_; }

  Coefficient zero() const;
  Coefficient one() const;
  Coefficient from_integer(long value) const;
  // Throws InvalidArgument when the denominator vanishes mod p.
  Coefficient from_rational(const mpq_class& value) const;

  // "Q" or "F 7", the same spelling the input language uses.
  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

bool is_prime(std::uint64_t p);

// An exact field element. Rationals are kept reduced with a positive
// denominator; residues are kept in [0, p).
class Coefficient {
 public:
  Coefficient() : value_(mpq_class(0)) {}
  explicit Coefficient(const mpq_class& q);
  static Coefficient residue(std::uint64_t value, std::uint32_t p);

  bool is_rational() const noexcept { return value_.index() == 0; }
  bool is_zero() const;
  bool is_one() const;
  // Sign for rationals; residues are never negative.
  int sign() const;

  const mpq_class& rational() const;
  std::uint32_t residue_value() const;
  std::uint32_t modulus() const;
  Field field() const;

  Coefficient operator-() const;
  Coefficient inverse() const;

  friend Coefficient operator+(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator-(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator/(const Coefficient& a, const Coefficient& b);
  friend bool operator==(const Coefficient& a, const Coefficient& b);

  std::string to_string() const;

 private:
  struct Residue {
    std::uint32_t value;
    std::uint32_t p;
    friend bool operator==(const Residue&, const Residue&) = default;
  };
  explicit Coefficient(Residue r) : value_(r) {}

  std::variant<mpq_class, Residue> value_;
};

}  // namespace fibrecheck
