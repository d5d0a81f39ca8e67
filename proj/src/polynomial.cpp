#include "fibrecheck/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "fibrecheck/errors.hpp"

namespace fibrecheck {

RingPtr make_ring(LayoutPtr layout, Field field, MonomialOrder order) {
  if (order.num_vars() != layout->num_vars()) {
    throw InvalidArgument("monomial order does not match the layout");
  }
  return std::make_shared<const Ring>(Ring{std::move(layout), field, std::move(order)});
}

RingPtr make_ring(LayoutPtr layout, Field field, WithinBlock kind) {
  auto order = MonomialOrder::standard(*layout, kind);
  return make_ring(std::move(layout), field, std::move(order));
}

RingPtr with_order(const RingPtr& ring, MonomialOrder order) {
  if (ring->order == order) return ring;
  return make_ring(ring->layout, ring->field, std::move(order));
}

bool same_ring(const Ring& a, const Ring& b) {
  if (&a == &b) return true;
  return a.field == b.field && (a.layout == b.layout || *a.layout == *b.layout) &&
         a.order == b.order;
}

namespace {

void require_same(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_ref(), b.ring_ref())) {
    throw LayoutMismatch("polynomials live in different rings");
  }
}

}  // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial Polynomial::constant(RingPtr ring, const Coefficient& c) {
  return monomial(std::move(ring), c, Monomial());
}

Polynomial Polynomial::constant(RingPtr ring, long c) {
  auto coef = ring->field.from_integer(c);
  return constant(std::move(ring), coef);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t var, Monomial::Exponent power) {
  auto m = Monomial::variable(ring->num_vars(), var, power);
  auto one = ring->field.one();
  return monomial(std::move(ring), one, std::move(m));
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name, Monomial::Exponent power) {
  auto var = ring->layout->find(name);
  if (!var) throw InvalidArgument("unknown variable " + std::string(name));
  return variable(std::move(ring), *var, power);
}

Polynomial Polynomial::monomial(RingPtr ring, const Coefficient& c, Monomial m) {
  if (m.size() == 0) m = Monomial(ring->num_vars());
  if (m.size() != ring->num_vars()) throw LayoutMismatch("monomial length does not match ring");
  std::vector<Term> terms;
  if (!c.is_zero()) terms.push_back({c, std::move(m)});
  return Polynomial(std::move(ring), std::move(terms));
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  std::unordered_map<Monomial, Coefficient, MonomialHash> acc;
  for (auto& t : terms) {
    if (t.mono.size() != ring->num_vars()) {
      throw LayoutMismatch("monomial length does not match ring");
    }
    auto [it, inserted] = acc.try_emplace(t.mono, t.coef);
    if (!inserted) it->second = it->second + t.coef;
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) out.push_back({c, m});
  }
  const auto& ord = ring->order;
  std::sort(out.begin(), out.end(),
            [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
  return Polynomial(std::move(ring), std::move(out));
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

std::uint64_t Polynomial::total_degree() const noexcept {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw InvalidArgument("leading term of the zero polynomial");
  return terms_.front();
}

Polynomial Polynomial::operator-() const {
  auto terms = terms_;
  for (auto& t : terms) t.coef = -t.coef;
  return Polynomial(ring_, std::move(terms));
}

Polynomial Polynomial::scaled(const Coefficient& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  auto terms = terms_;
  for (auto& t : terms) t.coef = t.coef * c;
  return Polynomial(ring_, std::move(terms));
}

Polynomial Polynomial::times_term(const Coefficient& c, const Monomial& m) const {
  if (c.is_zero()) return Polynomial(ring_);
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) terms.push_back({t.coef * c, t.mono * m});
  return Polynomial(ring_, std::move(terms));
}

Polynomial Polynomial::minus_times_term(const Coefficient& c, const Monomial& m,
                                        const Polynomial& g) const {
  require_same(*this, g);
  const auto& ord = ring_->order;
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto i = terms_.begin();
  auto j = g.terms_.begin();
  while (i != terms_.end() || j != g.terms_.end()) {
    if (j == g.terms_.end()) {
      out.push_back(*i++);
      continue;
    }
    Monomial gm = j->mono * m;
    int cmp = i == terms_.end() ? -1 : ord.compare(i->mono, gm);
    if (cmp > 0) {
      out.push_back(*i++);
    } else if (cmp < 0) {
      out.push_back({-(j->coef * c), std::move(gm)});
      ++j;
    } else {
      auto coef = i->coef - j->coef * c;
      if (!coef.is_zero()) out.push_back({std::move(coef), std::move(gm)});
      ++i;
      ++j;
    }
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(terms_.front().coef.inverse());
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  return a.minus_times_term(-a.ring_->field.one(), Monomial(a.ring_->num_vars()), b);
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a.minus_times_term(a.ring_->field.one(), Monomial(a.ring_->num_vars()), b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  std::vector<Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) terms.push_back({s.coef * t.coef, s.mono * t.mono});
  }
  return Polynomial::from_terms(a.ring_, std::move(terms));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.ring_->field != b.ring_->field || !(*a.ring_->layout == *b.ring_->layout)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  if (!(a.ring_->order == b.ring_->order)) return a == b.in_ring(a.ring_);
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coef == b.terms_[i].coef)) {
      return false;
    }
  }
  return true;
}

Polynomial Polynomial::in_ring(const RingPtr& target) const {
  if (ring_ == target) return *this;
  if (ring_->field != target->field) throw LayoutMismatch("coefficient fields differ");
  const auto& from = *ring_->layout;
  const auto& to = *target->layout;
  std::vector<std::optional<std::size_t>> map(from.num_vars());
  for (std::size_t v = 0; v < from.num_vars(); ++v) map[v] = to.find(from.name(v));
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<Monomial::Exponent> e(to.num_vars(), 0);
    for (std::size_t v = 0; v < from.num_vars(); ++v) {
      if (t.mono[v] == 0) continue;
      if (!map[v]) throw LayoutMismatch("variable " + from.name(v) + " missing from target ring");
      e[*map[v]] = t.mono[v];
    }
    terms.push_back({t.coef, Monomial(std::move(e))});
  }
  const auto& ord = target->order;
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
  return Polynomial(target, std::move(terms));
}

bool Polynomial::involves_only(const std::vector<bool>& allowed) const {
  for (const auto& t : terms_) {
    for (std::size_t v = 0; v < t.mono.size(); ++v) {
      if (t.mono[v] != 0 && !allowed[v]) return false;
    }
  }
  return true;
}

bool Polynomial::involves(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.mono[var] != 0; });
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    auto e = t.mono[var];
    if (e == 0) continue;
    auto exps = t.mono.exponents();
    exps[var] = e - 1;
    terms.push_back({t.coef * ring_->field.from_integer(static_cast<long>(e)),
                     Monomial(std::move(exps))});
  }
  return from_terms(ring_, std::move(terms));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const auto& layout = *ring_->layout;
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = t.coef.sign() < 0;
    Coefficient mag = negative ? -t.coef : t.coef;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (!mag.is_one() || t.mono.is_one()) {
      out << mag.to_string();
      need_star = true;
    }
    for (std::size_t v = 0; v < t.mono.size(); ++v) {
      if (t.mono[v] == 0) continue;
      if (need_star) out << "*";
      out << layout.name(v);
      if (t.mono[v] > 1) out << "^" << t.mono[v];
      need_star = true;
    }
  }
  return out.str();
}

Term Polynomial::pop_leading_term() {
  Term t = leading_term();
  terms_.erase(terms_.begin());
  return t;
}

void Polynomial::push_back_smallest(Term t) { terms_.push_back(std::move(t)); }

Polynomial pow(const Polynomial& f, unsigned k) {
  auto result = Polynomial::constant(f.ring(), 1);
  auto base = f;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

std::pair<Coefficient, Monomial> leading_term(const Polynomial& f, const MonomialOrder& ord) {
  if (f.is_zero()) throw InvalidArgument("leading term of the zero polynomial");
  if (ord == f.ring()->order) return {f.terms().front().coef, f.terms().front().mono};
  const Term* best = &f.terms().front();
  for (const auto& t : f.terms()) {
    if (ord.compare(t.mono, best->mono) > 0) best = &t;
  }
  return {best->coef, best->mono};
}

Monomial fibre_part(const RingLayout& layout, const Monomial& m) {
  auto e = m.exponents();
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (layout.block_of(v) == VarBlock::Base) e[v] = 0;
  }
  return Monomial(std::move(e));
}

Polynomial base_leading_coefficient(const Polynomial& f, const MonomialOrder& ord) {
  const auto& layout = *f.ring()->layout;
  if (!ord.places_fibre_above_base(layout)) {
    throw InvalidArgument("base leading coefficient needs an order with fibre above base");
  }
  auto [lc, lm] = leading_term(f, ord);
  auto lead_fibre = fibre_part(layout, lm);
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    if (fibre_part(layout, t.mono) == lead_fibre) {
      terms.push_back({t.coef, t.mono.quotient(lead_fibre)});
    }
  }
  return Polynomial::from_terms(f.ring(), std::move(terms));
}

Polynomial substitute_base_point(const Polynomial& f, const std::vector<mpq_class>& point) {
  const auto& ring = *f.ring();
  const auto& layout = *ring.layout;
  if (point.size() != layout.n()) {
    throw InvalidArgument("point has " + std::to_string(point.size()) + " coordinates, base has " +
                          std::to_string(layout.n()));
  }
  auto fibre_layout = layout.fibre_only();
  auto target = make_ring(fibre_layout, ring.field, ring.order.kind());
  std::vector<Coefficient> coords;
  for (const auto& q : point) coords.push_back(ring.field.from_rational(q));

  std::vector<std::optional<std::size_t>> map(layout.num_vars());
  for (std::size_t v = 0; v < layout.num_vars(); ++v) map[v] = fibre_layout->find(layout.name(v));

  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    Coefficient c = t.coef;
    std::vector<Monomial::Exponent> e(fibre_layout->num_vars(), 0);
    for (std::size_t v = 0; v < layout.num_vars(); ++v) {
      if (t.mono[v] == 0) continue;
      if (layout.block_of(v) == VarBlock::Base) {
        const auto& y = coords[v - (layout.num_vars() - layout.n())];
        for (Monomial::Exponent k = 0; k < t.mono[v]; ++k) c = c * y;
      } else if (map[v]) {
        e[*map[v]] = t.mono[v];
      } else {
        throw InvalidArgument("cannot substitute a point into a tagged polynomial");
      }
    }
    terms.push_back({c, Monomial(std::move(e))});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

Polynomial relabel(const Polynomial& f, int copy, const RingPtr& target) {
  const auto& from = *f.ring()->layout;
  const auto& to = *target->layout;
  if (copy < 1 || copy > to.copies()) {
    throw InvalidArgument("copy index " + std::to_string(copy) + " out of range");
  }
  if (from.fibre_vars() != to.fibre_vars() || from.base_vars() != to.base_vars()) {
    throw LayoutMismatch("relabel between layouts with different variables");
  }
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    std::vector<Monomial::Exponent> e(to.num_vars(), 0);
    for (std::size_t v = 0; v < from.num_vars(); ++v) {
      if (t.mono[v] == 0) continue;
      switch (from.block_of(v)) {
        case VarBlock::Base:
          e[to.base_index(v - (from.num_vars() - from.n()))] = t.mono[v];
          break;
        case VarBlock::Fibre: {
          if (from.copy_of(v) != 1) {
            throw InvalidArgument("relabel expects variables of the first fibre copy only");
          }
          auto j = v - (from.has_tag() ? 1 : 0);
          e[to.fibre_index(copy, j)] = t.mono[v];
          break;
        }
        case VarBlock::Tag:
          throw InvalidArgument("relabel of a tagged polynomial");
      }
    }
    terms.push_back({t.coef, Monomial(std::move(e))});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

Polynomial content_normalized(const Polynomial& f) {
  if (f.is_zero()) return f;
  if (!f.ring()->field.is_rationals()) return f.monic();
  mpz_class den_lcm = 1;
  mpz_class num_gcd = 0;
  for (const auto& t : f.terms()) {
    const auto& q = t.coef.rational();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num_mpz_t());
  }
  mpq_class scale(den_lcm, num_gcd);
  if (f.leading_coefficient().sign() < 0) scale = -scale;
  return f.scaled(Coefficient(scale));
}

std::vector<Polynomial> content_normalized(const std::vector<Polynomial>& v) {
  auto first = std::find_if(v.begin(), v.end(), [](const Polynomial& p) { return !p.is_zero(); });
  if (first == v.end()) return v;
  Coefficient scale = first->ring()->field.one();
  if (!first->ring()->field.is_rationals()) {
    scale = first->leading_coefficient().inverse();
  } else {
    mpz_class den_lcm = 1;
    mpz_class num_gcd = 0;
    for (const auto& p : v) {
      for (const auto& t : p.terms()) {
        const auto& q = t.coef.rational();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num_mpz_t());
      }
    }
    mpq_class s(den_lcm, num_gcd);
    if (first->leading_coefficient().sign() < 0) s = -s;
    scale = Coefficient(s);
  }
  std::vector<Polynomial> out;
  out.reserve(v.size());
  for (const auto& p : v) out.push_back(p.scaled(scale));
  return out;
}

std::string render_normalized(const Polynomial& f) { return content_normalized(f).to_string(); }

}  // namespace fibrecheck
