#include "gbfam/monofam.hpp"

#include <algorithm>

namespace gbfam {

namespace {

mpz_class nonneg_mod(const mpz_class& v, const mpz_class& n) {
  mpz_class r = v % n;
  if (r < 0) r += n;
  return r;
}

// c' | c in the base: plain divisibility over Z, (c') contains c over Z/n.
bool divides_in_base(const mpz_class& c1, const mpz_class& c2, bool modular,
                     const mpz_class& n) {
  mpz_class d = modular ? gcd(c1, n) : c1;
  if (d == 0) return c2 == 0;
  return mpz_divisible_p(c2.get_mpz_t(), d.get_mpz_t()) != 0;
}

}  // namespace

MonomialIdeal::MonomialIdeal(
    std::shared_ptr<const Ring> ring,
    std::vector<std::pair<mpz_class, Exponent>> terms)
    : ring_(std::move(ring)) {
  if (ring_->field.kind != FieldKind::Integer &&
      ring_->field.kind != FieldKind::IntegerMod)
    throw structural_error("monomial ideal base must be Z or Z/n");
  bool is_mod = modular();
  for (auto& [c, e] : terms) {
    if (e.size() != ring_->nvars())
      throw structural_error("exponent dimension mismatch");
    // gcd normal form: over Z/n the term c*x^E generates the same ideal
    // as gcd(c, n)*x^E, and between divisors of n plain divisibility
    // decides containment.
    mpz_class r = is_mod ? gcd(nonneg_mod(c, ring_->field.n), ring_->field.n)
                         : mpz_class(abs(c));
    if (r == 0) continue;
    terms_.emplace_back(std::move(r), e);
  }
  std::sort(terms_.begin(), terms_.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return a.first < b.first;
  });
  std::vector<std::pair<mpz_class, Exponent>> kept;
  for (const auto& t : terms_) {
    bool dominated = false;
    for (const auto& k : kept)
      if (k.second.divides(t.second) &&
          divides_in_base(k.first, t.first, is_mod, ring_->field.n)) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(t);
  }
  terms_ = std::move(kept);
}

bool MonomialIdeal::modular() const {
  return ring_->field.kind == FieldKind::IntegerMod;
}

const mpz_class& MonomialIdeal::modulus() const {
  if (!modular()) throw structural_error("not a modular base");
  return ring_->field.n;
}

mpz_class MonomialIdeal::coeff_ideal(const Exponent& E) const {
  mpz_class g = 0;
  for (const auto& [c, F] : terms_)
    if (F.divides(E)) g = gcd(g, c);
  if (modular() && g != 0) g = gcd(g, ring_->field.n);
  if (modular() && g == 0) return 0;
  return g;
}

std::vector<Exponent> MonomialIdeal::fiber(const mpz_class& q) const {
  if (q < 2 || mpz_probab_prime_p(q.get_mpz_t(), 32) == 0)
    throw analysis_error("fiber modulus " + q.get_str() + " is not prime");
  if (modular() && !mpz_divisible_p(ring_->field.n.get_mpz_t(), q.get_mpz_t()))
    throw analysis_error("prime " + q.get_str() +
                         " does not divide the base modulus");
  std::vector<Exponent> candidates;
  for (const auto& [c, E] : terms_) {
    mpz_class g = coeff_ideal(E);
    if (g != 0 && !mpz_divisible_p(g.get_mpz_t(), q.get_mpz_t()))
      candidates.push_back(E);
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Exponent& a, const Exponent& b) {
              auto da = a.total_degree(), db = b.total_degree();
              if (da != db) return da < db;
              return a < b;
            });
  std::vector<Exponent> out;
  for (const auto& e : candidates) {
    bool dominated = false;
    for (const auto& k : out)
      if (k.divides(e)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(e);
  }
  return out;
}

MonomialIdeal MonomialIdeal::base_change(const mpz_class& n) const {
  if (n < 2) throw analysis_error("modulus must be at least 2");
  if (modular() && !mpz_divisible_p(modulus().get_mpz_t(), n.get_mpz_t()))
    throw analysis_error("no ring map Z/" + modulus().get_str() + " -> Z/" +
                         n.get_str());
  auto ring = Ring::plain(Field::integers_mod(n), ring_->names,
                          ring_->order.blocks().front().prim);
  std::vector<std::pair<mpz_class, Exponent>> terms = terms_;
  return MonomialIdeal(std::move(ring), std::move(terms));
}

std::vector<std::vector<mpz_class>> mono_diagram(
    const MonomialIdeal& J, const std::vector<std::uint64_t>& extents) {
  if (J.ring_ptr()->nvars() != 2 || extents.size() != 2)
    throw analysis_error("diagrams are drawn for two variables only");
  std::vector<std::vector<mpz_class>> rows;
  for (std::uint64_t j = 0; j < extents[1]; ++j) {
    std::vector<mpz_class> row;
    for (std::uint64_t i = 0; i < extents[0]; ++i) {
      Exponent e(2);
      e.set(0, i);
      e.set(1, j);
      row.push_back(J.coeff_ideal(e));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace gbfam
