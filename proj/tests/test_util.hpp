#pragma once

#include <map>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "gbfam/poly_io.hpp"
#include "gbfam/session.hpp"

namespace gbfam {

inline std::ostream& operator<<(std::ostream& os, const Polynomial& f) {
  return os << poly_str(f);
}

inline std::ostream& operator<<(std::ostream& os, const Exponent& e) {
  os << "[";
  for (std::size_t i = 0; i < e.size(); ++i) os << (i ? " " : "") << e[i];
  return os << "]";
}

}  // namespace gbfam

namespace gbfam::testutil {

// --- fixtures -------------------------------------------------------------

// Session sources for the regression families used across suites.
const std::map<std::string, std::string>& regression_sources();

Session make_session(const std::string& text);
const FamilyIdeal& the_ideal(Session& s, const std::string& name = "I");

Exponent exp_of(const Ring& ring,
                std::initializer_list<std::pair<const char*, std::uint64_t>> parts);

std::vector<std::string> display_strings(const IdealHandle& h);

// --- independent linear-algebra oracle ------------------------------------

// Triangular vector-space basis keyed by leading exponent; reduction uses
// only polynomial arithmetic, no Groebner machinery.
class EchelonSpan {
public:
  explicit EchelonSpan(std::shared_ptr<const Ring> ring)
      : ring_(std::move(ring)) {}

  void insert(Polynomial f);
  bool contains(Polynomial f) const;
  const std::map<Exponent, Polynomial>& rows() const { return rows_; }

  bool same_span(const EchelonSpan& other) const;

private:
  std::shared_ptr<const Ring> ring_;
  std::map<Exponent, Polynomial> rows_;  // structural key; order irrelevant
};

std::vector<Exponent> monomials_up_to(const Ring& ring, std::uint64_t degree);

// Span of {m * g : g in gens, deg(m g) <= degree}.
EchelonSpan ideal_span(const std::vector<Polynomial>& gens,
                       const std::shared_ptr<const Ring>& ring,
                       std::uint64_t degree);

// Univariate Euclid in a one-variable ring; monic gcd, zero for empty input.
Polynomial uni_gcd(const std::vector<Polynomial>& polys);

// Full x^E-coefficients of the echelon rows whose leading x-part is E;
// returned in the parameter subring of the family.
std::vector<Polynomial> coeff_candidates(const EchelonSpan& span,
                                         const FamilyRing& fam,
                                         const Exponent& full_xexp);

// --- randomness -----------------------------------------------------------

class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t below(std::uint64_t n) {
    return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(eng_);
  }
  long int_in(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(eng_);
  }

private:
  std::mt19937_64 eng_;
};

Exponent random_exponent(const Ring& ring, Rng& rng, std::uint64_t max_total);
Polynomial random_poly(const std::shared_ptr<const Ring>& ring, Rng& rng,
                       std::size_t max_terms, std::uint64_t max_total);

// Small-coordinate rational point satisfying the base relations, by
// rejection sampling; empty when none found in the budget.
std::optional<RationalPoint> random_point(const FamilyRing& fam, Rng& rng,
                                          int attempts = 200);

}  // namespace gbfam::testutil
