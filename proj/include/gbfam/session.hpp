#pragma once

#include <map>
#include <optional>
#include <string>

#include "gbfam/families.hpp"
#include "gbfam/monofam.hpp"

namespace gbfam {

struct SessionOptions {
  // Characteristic used for a bare `Fp` field; overridden by Fp(p).
  std::uint64_t default_prime = kDefaultPrime;
};

// Parsed input file: one ring declaration (a parametric family over
// Q/F_p, or a monomial-ideal base over Z/Z mod n) plus named ideals,
// points, and primes. All names resolve, every polynomial parses in the
// declared ring, and points satisfy the declared base relations.
struct Session {
  std::optional<FamilyRing> family;
  std::shared_ptr<const Ring> mono_ring;  // set instead for Z / Z mod n

  std::map<std::string, FamilyIdeal> ideals;
  std::map<std::string, MonomialIdeal> mono_ideals;
  std::map<std::string, RationalPoint> points;
  std::map<std::string, PrimeSpec> primes;
  std::vector<std::string> ideal_names;  // declaration order
};

Session parse_session(const std::string& text,
                      const SessionOptions& opts = {});

// Standalone polynomial expression ("a*x^2 - 1/2*y", "a*(a - 1)").
Polynomial parse_polynomial_text(const std::string& text,
                                 const std::shared_ptr<const Ring>& ring);

// "(g1, g2, ...)" or a bare polynomial.
std::vector<Polynomial> parse_ideal_text(const std::string& text,
                                         const std::shared_ptr<const Ring>& ring);

// "a=1, b=-2/3" with full-ring variable indices as keys.
std::map<int, Coefficient> parse_assignment_text(const std::string& text,
                                                 const Ring& ring);

}  // namespace gbfam
