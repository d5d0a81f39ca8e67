#include "fibrecheck/coefficient.hpp"

#include "fibrecheck/errors.hpp"

namespace fibrecheck {

namespace {

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 31;

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

void require_same_field(std::uint32_t p, std::uint32_t q) {
  if (p != q) throw LayoutMismatch("coefficients from different prime fields");
}

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) {
    throw InvalidArgument("modulus " + std::to_string(p) + " is not prime");
  }
  if (p >= kMaxModulus) {
    throw UnsupportedInput("prime modulus " + std::to_string(p) + " exceeds 2^31");
  }
  return Field(static_cast<std::uint32_t>(p));
}

Coefficient Field::zero() const { return from_integer(0); }
Coefficient Field::one() const { return from_integer(1); }

Coefficient Field::from_integer(long value) const {
  if (is_rationals()) return Coefficient(mpq_class(value));
  long r = value % static_cast<long>(p_);
  if (r < 0) r += p_;
  return Coefficient::residue(static_cast<std::uint64_t>(r), p_);
}

Coefficient Field::from_rational(const mpq_class& value) const {
  if (is_rationals()) return Coefficient(value);
  mpz_class num = value.get_num() % p_;
  if (num < 0) num += p_;
  mpz_class den = value.get_den() % p_;
  if (den == 0) {
    throw InvalidArgument("denominator of " + value.get_str() + " vanishes in F " +
                          std::to_string(p_));
  }
  auto n = Coefficient::residue(num.get_ui(), p_);
  auto d = Coefficient::residue(den.get_ui(), p_);
  return n / d;
}

std::string Field::to_string() const {
  return is_rationals() ? "Q" : "F " + std::to_string(p_);
}

Coefficient::Coefficient(const mpq_class& q) : value_(q) {
  std::get<mpq_class>(value_).canonicalize();
}

Coefficient Coefficient::residue(std::uint64_t value, std::uint32_t p) {
  return Coefficient(Residue{static_cast<std::uint32_t>(value % p), p});
}

bool Coefficient::is_zero() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  return std::get<Residue>(value_).value == 0;
}

bool Coefficient::is_one() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q == 1;
  return std::get<Residue>(value_).value == 1;
}

int Coefficient::sign() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q);
  return std::get<Residue>(value_).value == 0 ? 0 : 1;
}

const mpq_class& Coefficient::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw InvalidArgument("coefficient is not rational");
}

std::uint32_t Coefficient::residue_value() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value;
  throw InvalidArgument("coefficient is not a residue");
}

std::uint32_t Coefficient::modulus() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->p;
  return 0;
}

Field Coefficient::field() const {
  return modulus() == 0 ? Field::rationals() : Field::prime(modulus());
}

Coefficient Coefficient::operator-() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return Coefficient(mpq_class(-*q));
  const auto& r = std::get<Residue>(value_);
  return Coefficient(Residue{r.value == 0 ? 0 : r.p - r.value, r.p});
}

Coefficient Coefficient::inverse() const {
  if (is_zero()) throw InvalidArgument("division by zero coefficient");
  if (const auto* q = std::get_if<mpq_class>(&value_)) return Coefficient(mpq_class(1 / *q));
  const auto& r = std::get<Residue>(value_);
  return Coefficient(Residue{inverse_mod(r.value, r.p), r.p});
}

Coefficient operator+(const Coefficient& a, const Coefficient& b) {
  if (a.is_rational() && b.is_rational()) {
    return Coefficient(mpq_class(std::get<mpq_class>(a.value_) + std::get<mpq_class>(b.value_)));
  }
  if (a.is_rational() != b.is_rational()) throw LayoutMismatch("mixing Q and F_p coefficients");
  const auto& x = std::get<Coefficient::Residue>(a.value_);
  const auto& y = std::get<Coefficient::Residue>(b.value_);
  require_same_field(x.p, y.p);
  return Coefficient::residue(std::uint64_t{x.value} + y.value, x.p);
}

Coefficient operator-(const Coefficient& a, const Coefficient& b) { return a + (-b); }

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  if (a.is_rational() && b.is_rational()) {
    return Coefficient(mpq_class(std::get<mpq_class>(a.value_) * std::get<mpq_class>(b.value_)));
  }
  if (a.is_rational() != b.is_rational()) throw LayoutMismatch("mixing Q and F_p coefficients");
  const auto& x = std::get<Coefficient::Residue>(a.value_);
  const auto& y = std::get<Coefficient::Residue>(b.value_);
  require_same_field(x.p, y.p);
  return Coefficient::residue(std::uint64_t{x.value} * y.value, x.p);
}

Coefficient operator/(const Coefficient& a, const Coefficient& b) { return a * b.inverse(); }

bool operator==(const Coefficient& a, const Coefficient& b) { return a.value_ == b.value_; }

std::string Coefficient::to_string() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
  return std::to_string(std::get<Residue>(value_).value);
}

}  // namespace fibrecheck
