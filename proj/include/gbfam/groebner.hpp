#pragma once

#include <span>

#include "gbfam/poly.hpp"

namespace gbfam {

// Groebner basis of an ideal over a field. `elements` are monic; once
// `reduced` holds, no term of any element is divisible by the leading
// exponent of another, the list is sorted by decreasing leading monomial,
// and the basis is the unique reduced one for (ideal, order).
struct GroebnerBasis {
  std::shared_ptr<const Ring> ring;
  std::vector<Polynomial> elements;
  bool reduced = false;

  bool is_unit_ideal() const {
    return elements.size() == 1 && elements.front().is_constant() &&
           !elements.front().is_zero();
  }
  bool is_zero_ideal() const { return elements.empty(); }
};

// (lcm/lt(f))*f - (lcm/lt(g))*g; the leading terms cancel.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

// Full remainder of division by `basis`: no term of the result is
// divisible by any leading exponent of the divisors. Deterministic for a
// fixed divisor order (first divisor wins).
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

// Quotient of an exact division f = q*g; inexactness is a broken
// invariant, not a user error.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

// Buchberger's algorithm with the coprime and chain criteria, normal
// pair-selection strategy (smallest lcm in the active order, ties by
// generator index).
GroebnerBasis buchberger(std::vector<Polynomial> generators,
                         std::shared_ptr<const Ring> ring);

// Minimalize, tail-reduce, sort. Idempotent.
GroebnerBasis reduced_basis(GroebnerBasis gb);

GroebnerBasis reduced_groebner(std::vector<Polynomial> generators,
                               std::shared_ptr<const Ring> ring);

// Generators of the elimination ideal: the input is recomputed under a
// block order ranking the dropped variables first, and the basis
// elements free of them are returned, re-sorted into the caller's ring.
std::vector<Polynomial> eliminate(const std::vector<Polynomial>& generators,
                                  std::shared_ptr<const Ring> ring,
                                  const std::vector<int>& drop);

bool member(const Polynomial& f, const GroebnerBasis& gb);

}  // namespace gbfam
