#pragma once

#include <string>
#include <vector>

#include "gbfam/poly.hpp"

namespace gbfam {

// Canonical text forms. These strings are the round-trip contract with
// the frontend parser: terms in decreasing order, `^` for powers, `*`
// for products, rational coefficients as `p/q`.

std::string monomial_str(const Ring& ring, const Exponent& e);
std::string poly_str(const Polynomial& f);

// "(g1, g2, ...)", "(0)" for an empty list.
std::string ideal_str(const std::vector<Polynomial>& gens);
std::string ideal_str(const std::vector<std::string>& gens);

// One generator of a relative initial ideal, shown as coefficient times
// monomial: "a*x", "(a - 1)*x", "b".
std::string initial_gen_str(const Polynomial& coeff, const Ring& ring,
                            const Exponent& xexp);

}  // namespace gbfam
