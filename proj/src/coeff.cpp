#include "gbfam/coeff.hpp"

#include <utility>

namespace gbfam {

namespace {

bool probably_prime(const mpz_class& v) {
  return mpz_probab_prime_p(v.get_mpz_t(), 32) != 0;
}

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  // p < 2^31, so the product fits in 64 bits.
  return (a * b) % p;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw structural_error("inverse of zero in F_p");
  std::int64_t t = 0, newt = 1;
  std::int64_t r = static_cast<std::int64_t>(p),
               newr = static_cast<std::int64_t>(a);
  while (newr != 0) {
    std::int64_t q = r / newr;
    t = std::exchange(newt, t - q * newt);
    r = std::exchange(newr, r - q * newr);
  }
  if (r != 1) throw structural_error("modulus not prime in F_p inverse");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

mpz_class mod_reduce(const mpz_class& v, const mpz_class& n) {
  mpz_class r = v % n;
  if (r < 0) r += n;
  return r;
}

[[noreturn]] void mix_error() {
  throw structural_error("coefficient domain mismatch");
}

}  // namespace

Field Field::rationals() { return Field{FieldKind::Rational, 0, mpz_class()}; }

Field Field::prime_field(std::uint64_t p) {
  if (p < 2 || p >= (std::uint64_t{1} << 31))
    throw analysis_error("prime field characteristic out of range");
  if (!probably_prime(mpz_class(static_cast<unsigned long>(p))))
    throw analysis_error("characteristic " + std::to_string(p) +
                         " is not prime");
  return Field{FieldKind::Prime, p, mpz_class()};
}

Field Field::integers() { return Field{FieldKind::Integer, 0, mpz_class()}; }

Field Field::integers_mod(const mpz_class& n) {
  if (n < 2) throw analysis_error("modulus must be at least 2");
  return Field{FieldKind::IntegerMod, 0, n};
}

bool Field::operator==(const Field& o) const {
  return kind == o.kind && p == o.p && n == o.n;
}

std::string Field::name() const {
  switch (kind) {
    case FieldKind::Rational:
      return "Q";
    case FieldKind::Prime:
      return "Fp(" + std::to_string(p) + ")";
    case FieldKind::Integer:
      return "Z";
    case FieldKind::IntegerMod:
      return "Zmod(" + n.get_str() + ")";
  }
  return "?";
}

Coefficient Field::zero() const { return from_long(0); }
Coefficient Field::one() const { return from_long(1); }

Coefficient Field::from_long(long v) const { return from_integer(mpz_class(v)); }

Coefficient Field::from_integer(const mpz_class& v) const {
  switch (kind) {
    case FieldKind::Rational:
      return Coefficient(Coefficient::Rep{mpq_class(v)});
    case FieldKind::Prime: {
      mpz_class r = mod_reduce(v, mpz_class(static_cast<unsigned long>(p)));
      return Coefficient(
          Coefficient::Rep{Coefficient::PrimeElt{r.get_ui(), p}});
    }
    case FieldKind::Integer:
      return Coefficient(Coefficient::Rep{v});
    case FieldKind::IntegerMod:
      return Coefficient(Coefficient::Rep{Coefficient::ModElt{mod_reduce(v, n), n}});
  }
  mix_error();
}

Coefficient Field::from_rational(const mpq_class& v) const {
  if (kind == FieldKind::Rational) {
    mpq_class c = v;
    c.canonicalize();
    return Coefficient(Coefficient::Rep{c});
  }
  mpq_class c = v;
  c.canonicalize();
  if (c.get_den() == 1) return from_integer(c.get_num());
  if (kind == FieldKind::Prime) {
    Coefficient num = from_integer(c.get_num());
    Coefficient den = from_integer(c.get_den());
    if (den.is_zero())
      throw analysis_error("denominator vanishes in " + name());
    return num / den;
  }
  throw analysis_error("coefficient " + c.get_str() + " is not in " + name());
}

FieldKind Coefficient::kind() const {
  switch (rep_.index()) {
    case 0:
      return FieldKind::Rational;
    case 1:
      return FieldKind::Prime;
    case 2:
      return FieldKind::Integer;
    default:
      return FieldKind::IntegerMod;
  }
}

bool Coefficient::is_zero() const {
  if (auto* q = std::get_if<mpq_class>(&rep_)) return *q == 0;
  if (auto* e = std::get_if<PrimeElt>(&rep_)) return e->v == 0;
  if (auto* z = std::get_if<mpz_class>(&rep_)) return *z == 0;
  return std::get<ModElt>(rep_).v == 0;
}

bool Coefficient::is_one() const {
  if (auto* q = std::get_if<mpq_class>(&rep_)) return *q == 1;
  if (auto* e = std::get_if<PrimeElt>(&rep_)) return e->v == 1;
  if (auto* z = std::get_if<mpz_class>(&rep_)) return *z == 1;
  return std::get<ModElt>(rep_).v == 1;
}

Coefficient Coefficient::operator+(const Coefficient& o) const {
  if (rep_.index() != o.rep_.index()) mix_error();
  if (auto* q = std::get_if<mpq_class>(&rep_))
    return Coefficient(Rep{mpq_class(*q + std::get<mpq_class>(o.rep_))});
  if (auto* e = std::get_if<PrimeElt>(&rep_)) {
    const auto& f = std::get<PrimeElt>(o.rep_);
    if (e->p != f.p) mix_error();
    return Coefficient(Rep{PrimeElt{mod_add(e->v, f.v, e->p), e->p}});
  }
  if (auto* z = std::get_if<mpz_class>(&rep_))
    return Coefficient(Rep{mpz_class(*z + std::get<mpz_class>(o.rep_))});
  const auto& a = std::get<ModElt>(rep_);
  const auto& b = std::get<ModElt>(o.rep_);
  if (a.n != b.n) mix_error();
  return Coefficient(Rep{ModElt{mod_reduce(a.v + b.v, a.n), a.n}});
}

Coefficient Coefficient::operator-(const Coefficient& o) const {
  return *this + (-o);
}

Coefficient Coefficient::operator*(const Coefficient& o) const {
  if (rep_.index() != o.rep_.index()) mix_error();
  if (auto* q = std::get_if<mpq_class>(&rep_))
    return Coefficient(Rep{mpq_class(*q * std::get<mpq_class>(o.rep_))});
  if (auto* e = std::get_if<PrimeElt>(&rep_)) {
    const auto& f = std::get<PrimeElt>(o.rep_);
    if (e->p != f.p) mix_error();
    return Coefficient(Rep{PrimeElt{mod_mul(e->v, f.v, e->p), e->p}});
  }
  if (auto* z = std::get_if<mpz_class>(&rep_))
    return Coefficient(Rep{mpz_class(*z * std::get<mpz_class>(o.rep_))});
  const auto& a = std::get<ModElt>(rep_);
  const auto& b = std::get<ModElt>(o.rep_);
  if (a.n != b.n) mix_error();
  return Coefficient(Rep{ModElt{mod_reduce(a.v * b.v, a.n), a.n}});
}

Coefficient Coefficient::operator/(const Coefficient& o) const {
  return *this * o.inverse();
}

Coefficient Coefficient::operator-() const {
  if (auto* q = std::get_if<mpq_class>(&rep_))
    return Coefficient(Rep{mpq_class(-*q)});
  if (auto* e = std::get_if<PrimeElt>(&rep_))
    return Coefficient(Rep{PrimeElt{mod_sub(0, e->v, e->p), e->p}});
  if (auto* z = std::get_if<mpz_class>(&rep_))
    return Coefficient(Rep{mpz_class(-*z)});
  const auto& a = std::get<ModElt>(rep_);
  return Coefficient(Rep{ModElt{mod_reduce(-a.v, a.n), a.n}});
}

Coefficient Coefficient::inverse() const {
  if (auto* q = std::get_if<mpq_class>(&rep_)) {
    if (*q == 0) throw structural_error("inverse of zero");
    return Coefficient(Rep{mpq_class(1 / *q)});
  }
  if (auto* e = std::get_if<PrimeElt>(&rep_))
    return Coefficient(Rep{PrimeElt{mod_inv(e->v, e->p), e->p}});
  throw structural_error("inverse requested outside a field");
}

Coefficient Coefficient::pow(std::uint64_t e) const {
  Coefficient acc = *this, result = acc;
  if (e == 0) {
    // 1 in the same domain.
    if (auto* q = std::get_if<mpq_class>(&rep_)) {
      (void)q;
      return Coefficient(Rep{mpq_class(1)});
    }
    if (auto* pe = std::get_if<PrimeElt>(&rep_))
      return Coefficient(Rep{PrimeElt{1 % pe->p, pe->p}});
    if (std::get_if<mpz_class>(&rep_)) return Coefficient(Rep{mpz_class(1)});
    const auto& m = std::get<ModElt>(rep_);
    return Coefficient(Rep{ModElt{mod_reduce(mpz_class(1), m.n), m.n}});
  }
  std::uint64_t k = e - 1;
  while (k > 0) {
    result = result * acc;
    --k;
  }
  return result;
}

std::string Coefficient::str() const {
  if (auto* q = std::get_if<mpq_class>(&rep_)) return q->get_str();
  if (auto* e = std::get_if<PrimeElt>(&rep_)) return std::to_string(e->v);
  if (auto* z = std::get_if<mpz_class>(&rep_)) return z->get_str();
  return std::get<ModElt>(rep_).v.get_str();
}

bool Coefficient::display_negative() const {
  if (auto* q = std::get_if<mpq_class>(&rep_)) return *q < 0;
  if (auto* z = std::get_if<mpz_class>(&rep_)) return *z < 0;
  return false;
}

Coefficient Coefficient::display_abs() const {
  return display_negative() ? -*this : *this;
}

const mpq_class& Coefficient::rational() const {
  if (auto* q = std::get_if<mpq_class>(&rep_)) return *q;
  throw structural_error("not a rational coefficient");
}

const mpz_class& Coefficient::integer() const {
  if (auto* z = std::get_if<mpz_class>(&rep_)) return *z;
  if (auto* m = std::get_if<ModElt>(&rep_)) return m->v;
  throw structural_error("not an integer coefficient");
}

std::uint64_t Coefficient::residue() const {
  if (auto* e = std::get_if<PrimeElt>(&rep_)) return e->v;
  throw structural_error("not a prime-field coefficient");
}

}  // namespace gbfam
