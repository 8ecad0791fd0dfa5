#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "gbfam/ring.hpp"

namespace gbfam {

// Monomial ideal over Z or Z/n: generated by single terms c*x^E. Ideals
// of the base are principal, kept in gcd normal form (one nonnegative
// generator, 0 for the zero ideal).
class MonomialIdeal {
public:
  // `ring` must have an Integer or IntegerMod coefficient domain; terms
  // are reduced, zero terms dropped, and the generating set pruned to a
  // minimal one: (c, E) is dropped when some other (c', F) has F <= E and
  // c' dividing c in the base.
  MonomialIdeal(std::shared_ptr<const Ring> ring,
                std::vector<std::pair<mpz_class, Exponent>> terms);

  const std::shared_ptr<const Ring>& ring_ptr() const { return ring_; }
  const std::vector<std::pair<mpz_class, Exponent>>& terms() const {
    return terms_;
  }
  bool modular() const;
  const mpz_class& modulus() const;  // IntegerMod only

  // gcd of {c_F : F <= E}, with n adjoined over Z/n; 0 when nothing divides.
  mpz_class coeff_ideal(const Exponent& E) const;

  // Minimal monomial generators of the fiber over F_q.
  std::vector<Exponent> fiber(const mpz_class& q) const;

  // Extension of scalars to Z/n.
  MonomialIdeal base_change(const mpz_class& n) const;

private:
  std::shared_ptr<const Ring> ring_;
  std::vector<std::pair<mpz_class, Exponent>> terms_;
};

// Staircase grid of principal coefficient-ideal generators for a
// two-variable ideal; row j lists exponents x^i y^j.
std::vector<std::vector<mpz_class>> mono_diagram(
    const MonomialIdeal& J, const std::vector<std::uint64_t>& extents);

}  // namespace gbfam
