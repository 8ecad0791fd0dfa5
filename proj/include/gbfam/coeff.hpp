#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

#include "gbfam/error.hpp"

namespace gbfam {

enum class FieldKind { Rational, Prime, Integer, IntegerMod };

class Coefficient;

// Coefficient domain of a ring: the field k (Q or F_p) for the Groebner
// engine, or Z / Z/n for term ideals over a principal base.
struct Field {
  FieldKind kind = FieldKind::Rational;
  std::uint64_t p = 0;  // Prime
  mpz_class n;          // IntegerMod modulus

  static Field rationals();
  static Field prime_field(std::uint64_t p);  // p prime, p < 2^31
  static Field integers();
  static Field integers_mod(const mpz_class& n);  // n >= 2

  bool is_field() const {
    return kind == FieldKind::Rational || kind == FieldKind::Prime;
  }
  bool operator==(const Field& o) const;
  std::string name() const;

  Coefficient zero() const;
  Coefficient one() const;
  Coefficient from_long(long v) const;
  Coefficient from_integer(const mpz_class& v) const;
  // Rejects literals whose denominator is not invertible in this domain.
  Coefficient from_rational(const mpq_class& v) const;
};

// Default characteristic for F_p mode when none is given.
inline constexpr std::uint64_t kDefaultPrime = 32003;

// Immutable exact scalar. Elements are self-describing (a prime-field
// element carries p), so arithmetic needs no external context; mixing
// incompatible domains is a structural error.
class Coefficient {
public:
  Coefficient() : rep_(mpq_class(0)) {}

  FieldKind kind() const;
  bool is_zero() const;
  bool is_one() const;

  Coefficient operator+(const Coefficient& o) const;
  Coefficient operator-(const Coefficient& o) const;
  Coefficient operator*(const Coefficient& o) const;
  Coefficient operator/(const Coefficient& o) const;  // fields only
  Coefficient operator-() const;
  Coefficient inverse() const;  // fields only, nonzero
  Coefficient pow(std::uint64_t e) const;

  bool operator==(const Coefficient& o) const { return rep_ == o.rep_; }
  bool operator!=(const Coefficient& o) const { return !(*this == o); }

  // Canonical text: "p/q" with positive denominator over Q, the residue
  // 0..p-1 over F_p, plain decimal otherwise.
  std::string str() const;

  // True when the canonical form of a term with this coefficient starts
  // with a minus sign (Q and Z only; residues never display negative).
  bool display_negative() const;
  Coefficient display_abs() const;

  const mpq_class& rational() const;
  const mpz_class& integer() const;
  std::uint64_t residue() const;  // Prime value

private:
  struct PrimeElt {
    std::uint64_t v, p;
    bool operator==(const PrimeElt&) const = default;
  };
  struct ModElt {
    mpz_class v, n;
    bool operator==(const ModElt&) const = default;
  };
  using Rep = std::variant<mpq_class, PrimeElt, mpz_class, ModElt>;

  explicit Coefficient(Rep rep) : rep_(std::move(rep)) {}

  Rep rep_;
  friend struct Field;
};

}  // namespace gbfam
