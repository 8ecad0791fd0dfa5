#include "test_util.hpp"

namespace gbfam::testutil {

const std::map<std::string, std::string>& regression_sources() {
  static const std::map<std::string, std::string> sources = {
      {"ex1", "ring Q[a][x,y]; ideal I = (a*x - y);"},
      {"ex2", "ring Q[a,b][x,y]; ideal I = (a*x^2 + y, b*y^2 + y + 1);"},
      {"ex3", "ring Q[a][x]; ideal I = (a*x - 1);"},
      {"fractex", "ring Q[a,b][x]; base (a*b); ideal I = (a*x + 1);"},
      {"fuzzex", "ring Q[a,b][x,y]; base (a^2); ideal I = (a*x - y);"},
      {"gtzex",
       "ring Q[a,b][x]; base (a*b); ideal I = (a*(a - 1)*x, x^2);"},
      {"redex",
       "ring Q[a,b,c,d][x,y]; base (a*c, a*d, b*c, b*d); "
       "ideal I = (a*x + b, c*y + d);"},
      {"fitex",
       "ring Q[a][x,y]; ideal I = (a*x + y, x^3, x^2*y, x*y^2, y^3);"},
      {"fibers_ex1", "ring Q[a,b][x]; ideal I = (a*x - b);"},
      {"iso_ex", "ring Q[a,b][x,y]; ideal I = (x - a, y - b);"},
  };
  return sources;
}

Session make_session(const std::string& text) { return parse_session(text); }

const FamilyIdeal& the_ideal(Session& s, const std::string& name) {
  return s.ideals.at(name);
}

Exponent exp_of(const Ring& ring,
                std::initializer_list<std::pair<const char*, std::uint64_t>>
                    parts) {
  Exponent e(ring.nvars());
  for (const auto& [name, deg] : parts) {
    int idx = ring.index_of(name);
    if (idx < 0) throw structural_error("no such variable in fixture");
    e.set(static_cast<std::size_t>(idx), deg);
  }
  return e;
}

std::vector<std::string> display_strings(const IdealHandle& h) {
  std::vector<std::string> out;
  for (const auto& g : h.display_generators()) out.push_back(poly_str(g));
  return out;
}

void EchelonSpan::insert(Polynomial f) {
  while (!f.is_zero()) {
    auto it = rows_.find(f.leading_exponent());
    if (it == rows_.end()) {
      rows_.emplace(f.leading_exponent(), f.monic());
      return;
    }
    f = f - it->second.times_coeff(f.leading_term().coeff);
  }
}

bool EchelonSpan::contains(Polynomial f) const {
  while (!f.is_zero()) {
    auto it = rows_.find(f.leading_exponent());
    if (it == rows_.end()) return false;
    f = f - it->second.times_coeff(f.leading_term().coeff);
  }
  return true;
}

bool EchelonSpan::same_span(const EchelonSpan& other) const {
  for (const auto& [e, row] : rows_)
    if (!other.contains(row)) return false;
  for (const auto& [e, row] : other.rows_)
    if (!contains(row)) return false;
  return true;
}

namespace {

void enumerate_monomials(const Ring& ring, std::uint64_t degree,
                         std::size_t var, Exponent& cur, std::uint64_t used,
                         std::vector<Exponent>& out) {
  if (var == ring.nvars()) {
    out.push_back(cur);
    return;
  }
  for (std::uint64_t d = 0; used + d <= degree; ++d) {
    cur.set(var, d);
    enumerate_monomials(ring, degree, var + 1, cur, used + d, out);
  }
  cur.set(var, 0);
}

}  // namespace

std::vector<Exponent> monomials_up_to(const Ring& ring, std::uint64_t degree) {
  std::vector<Exponent> out;
  Exponent cur(ring.nvars());
  enumerate_monomials(ring, degree, 0, cur, 0, out);
  return out;
}

EchelonSpan ideal_span(const std::vector<Polynomial>& gens,
                       const std::shared_ptr<const Ring>& ring,
                       std::uint64_t degree) {
  EchelonSpan span(ring);
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    std::uint64_t d = g.total_degree();
    if (d > degree) continue;
    for (const auto& m : monomials_up_to(*ring, degree - d))
      span.insert(g.times_term(Term{ring->field.one(), m}));
  }
  return span;
}

Polynomial uni_gcd(const std::vector<Polynomial>& polys) {
  Polynomial g;
  bool first = true;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    if (first) {
      g = p.monic();
      first = false;
      continue;
    }
    Polynomial a = g, b = p.monic();
    // Euclid: univariate leading reduction strictly drops the degree.
    while (!b.is_zero()) {
      while (!a.is_zero() &&
             b.leading_exponent().divides(a.leading_exponent())) {
        Term q{a.leading_term().coeff / b.leading_term().coeff,
               a.leading_exponent().minus(b.leading_exponent())};
        a = a - b.times_term(q);
      }
      std::swap(a, b);
    }
    g = a.monic();
    if (g.is_constant() && !g.is_zero()) break;
  }
  return first ? Polynomial() : g;
}

std::vector<Polynomial> coeff_candidates(const EchelonSpan& span,
                                         const FamilyRing& fam,
                                         const Exponent& full_xexp) {
  std::vector<Polynomial> out;
  const Ring& full = *fam.full();
  for (const auto& [lead, row] : span.rows()) {
    if (full.main_part(lead) != full_xexp) continue;
    std::vector<Term> coeff_terms;
    for (const auto& t : row.terms())
      if (full.main_part(t.exp) == full_xexp)
        coeff_terms.push_back(Term{t.coeff, full.param_part(t.exp)});
    Polynomial c = Polynomial::from_terms(fam.full(), std::move(coeff_terms));
    out.push_back(transport(c, fam.params()));
  }
  return out;
}

Exponent random_exponent(const Ring& ring, Rng& rng, std::uint64_t max_total) {
  Exponent e(ring.nvars());
  std::uint64_t budget = rng.below(max_total + 1);
  for (std::uint64_t k = 0; k < budget; ++k) {
    std::size_t var = rng.below(ring.nvars());
    e.set(var, e[var] + 1);
  }
  return e;
}

Polynomial random_poly(const std::shared_ptr<const Ring>& ring, Rng& rng,
                       std::size_t max_terms, std::uint64_t max_total) {
  std::vector<Term> terms;
  std::size_t nterms = 1 + rng.below(max_terms);
  for (std::size_t i = 0; i < nterms; ++i) {
    long c = rng.int_in(-10, 10);
    if (c == 0) c = 1;
    terms.push_back(
        Term{ring->field.from_long(c), random_exponent(*ring, rng, max_total)});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

std::optional<RationalPoint> random_point(const FamilyRing& fam, Rng& rng,
                                          int attempts) {
  const auto& full = *fam.full();
  for (int k = 0; k < attempts; ++k) {
    std::map<int, Coefficient> values;
    for (int v : full.params)
      values[v] = full.field.from_long(rng.int_in(-2, 2));
    bool ok = true;
    for (const auto& g : fam.base_full())
      if (!g.substitute(values).is_zero()) {
        ok = false;
        break;
      }
    if (ok) return RationalPoint(fam, std::move(values));
  }
  return std::nullopt;
}

}  // namespace gbfam::testutil
