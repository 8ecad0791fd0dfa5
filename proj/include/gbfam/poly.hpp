#pragma once

#include <map>
#include <memory>
#include <span>
#include <vector>

#include "gbfam/ring.hpp"

namespace gbfam {

struct Term {
  Coefficient coeff;
  Exponent exp;
  bool operator==(const Term&) const = default;
};

// Exact multivariate polynomial: terms strictly decreasing in the ring's
// active order, no zero coefficients, empty list for 0. Immutable once
// built; safe to share across threads.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::shared_ptr<const Ring> ring)
      : ring_(std::move(ring)) {}

  static Polynomial zero(std::shared_ptr<const Ring> ring) {
    return Polynomial(std::move(ring));
  }
  static Polynomial constant(std::shared_ptr<const Ring> ring, Coefficient c);
  static Polynomial monomial(std::shared_ptr<const Ring> ring, Coefficient c,
                             Exponent e);
  static Polynomial variable(std::shared_ptr<const Ring> ring, int var);
  // Sorts, merges duplicate exponents, drops zeros.
  static Polynomial from_terms(std::shared_ptr<const Ring> ring,
                               std::vector<Term> terms);

  const std::shared_ptr<const Ring>& ring_ptr() const { return ring_; }
  const Ring& ring() const { return *ring_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].exp.is_zero());
  }

  const Term& leading_term() const;  // greatest term; error on 0
  const Exponent& leading_exponent() const { return leading_term().exp; }
  Coefficient coefficient_of(const Exponent& e) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial times_term(const Term& t) const;
  Polynomial times_coeff(const Coefficient& c) const;
  Polynomial monic() const;  // leading coefficient scaled to 1 (fields)

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // a-variables (or any assigned variables) replaced by scalar values,
  // terms recombined under the active order.
  Polynomial substitute(const std::map<int, Coefficient>& assignment) const;

  std::uint64_t total_degree() const;  // max over terms; 0 for the zero poly

private:
  void check_compatible(const Polynomial& o) const;

  std::shared_ptr<const Ring> ring_;
  std::vector<Term> terms_;

  friend Polynomial transport(const Polynomial&, std::shared_ptr<const Ring>);
  friend class NormalFormBuilder;
};

// Rebuilds a polynomial in another ring, matching variables by name.
// Every variable that actually occurs must exist in the target ring and
// the coefficient domains must agree.
Polynomial transport(const Polynomial& f, std::shared_ptr<const Ring> target);

}  // namespace gbfam
