#include "gbfam/families.hpp"

#include <algorithm>
#include <set>

#include "gbfam/poly_io.hpp"

namespace gbfam {

FamilyRing::FamilyRing(std::shared_ptr<const Ring> full,
                       std::vector<Polynomial> base)
    : full_(std::move(full)),
      params_(full_->parameter_subring()),
      mains_(full_->main_subring()),
      base_full_(std::move(base)) {
  for (const auto& g : base_full_) {
    if (g.ring_ptr() != full_ && !g.ring().same_structure(*full_))
      throw structural_error("base relation outside the family ring");
    for (const auto& t : g.terms())
      if (!t.exp.supported_on(full_->params))
        throw analysis_error("base relation " + poly_str(g) +
                             " involves a main variable");
    base_params_.push_back(transport(g, params_));
  }
}

IdealHandle FamilyRing::param_ideal(std::vector<Polynomial> gens) const {
  return IdealHandle(params_, std::move(gens), base_params_);
}

Exponent FamilyRing::to_fiber(const Exponent& full_exp) const {
  Exponent e(mains_->nvars());
  for (std::size_t i = 0; i < full_->mains.size(); ++i)
    e.set(i, full_exp[static_cast<std::size_t>(full_->mains[i])]);
  return e;
}

Exponent FamilyRing::fiber_to_full(const Exponent& fiber_exp) const {
  Exponent e(full_->nvars());
  for (std::size_t i = 0; i < full_->mains.size(); ++i)
    e.set(static_cast<std::size_t>(full_->mains[i]), fiber_exp[i]);
  return e;
}

bool FamilyRing::same_as(const FamilyRing& o) const {
  if (!full_->same_structure(*o.full_)) return false;
  if (base_full_.size() != o.base_full_.size()) return false;
  for (std::size_t i = 0; i < base_full_.size(); ++i)
    if (!(base_full_[i] == o.base_full_[i])) return false;
  return true;
}

FamilyIdeal::FamilyIdeal(FamilyRing ring, std::vector<Polynomial> gens)
    : fam_(std::move(ring)),
      handle_(fam_.full(), std::move(gens), fam_.base_full()) {}

IdealHandle RelativeInitial::coefficient_ideal(
    const Exponent& full_xexp) const {
  std::vector<Polynomial> gens;
  for (const auto& g : gens_)
    if (g.xexp.divides(full_xexp)) gens.push_back(g.coeff);
  return fam_.param_ideal(std::move(gens));
}

std::vector<Exponent> RelativeInitial::distinct_exponents() const {
  std::set<Exponent> seen;
  for (const auto& g : gens_) seen.insert(g.xexp);
  return {seen.begin(), seen.end()};
}

RelativeInitial relative_initial(const FamilyIdeal& I) {
  const FamilyRing& fam = I.family();
  const Ring& full = *fam.full();
  std::vector<InitialGen> gens;
  for (const auto& g : I.basis().elements) {
    Exponent xlead = full.main_part(g.leading_exponent());
    // The terms sharing the leading x-part form the leading run under
    // the product order; their a-parts assemble the full coefficient.
    std::vector<Term> coeff_terms;
    for (const auto& t : g.terms()) {
      if (full.main_part(t.exp) != xlead) continue;
      coeff_terms.push_back(Term{t.coeff, full.param_part(t.exp)});
    }
    Polynomial c_full =
        Polynomial::from_terms(fam.full(), std::move(coeff_terms));
    gens.push_back(InitialGen{xlead, transport(c_full, fam.params())});
  }
  return RelativeInitial(fam, std::move(gens));
}

IdealHandle coefficient_ideal(const RelativeInitial& R, const Exponent& E) {
  return R.coefficient_ideal(E);
}

IdealHandle base_contraction(const FamilyIdeal& I) {
  const FamilyRing& fam = I.family();
  std::vector<Polynomial> gens;
  for (const auto& g : I.basis().elements)
    if (fam.full()->main_part(g.leading_exponent()).is_zero())
      gens.push_back(transport(g, fam.params()));
  return fam.param_ideal(std::move(gens));
}

CoefficientTable coefficient_table(const FamilyIdeal& I,
                                   const std::vector<std::uint64_t>& extents) {
  const FamilyRing& fam = I.family();
  if (extents.size() != fam.full()->mains.size())
    throw analysis_error("window rank does not match the main variables");
  for (auto w : extents)
    if (w == 0) throw analysis_error("window extents must be positive");
  RelativeInitial R = relative_initial(I);
  CoefficientTable table;
  table.extents = extents;
  std::vector<std::uint64_t> odo(extents.size(), 0);
  while (true) {
    Exponent e(fam.full()->nvars());
    for (std::size_t i = 0; i < odo.size(); ++i)
      e.set(static_cast<std::size_t>(fam.full()->mains[i]), odo[i]);
    table.entries.push_back({e, R.coefficient_ideal(e)});
    std::size_t i = odo.size();
    while (i > 0) {
      --i;
      if (++odo[i] < extents[i]) break;
      odo[i] = 0;
      if (i == 0) return table;
    }
    if (extents.empty()) return table;
  }
}

std::vector<Exponent> minimal_exponents(const FamilyIdeal& I) {
  RelativeInitial R = relative_initial(I);
  IdealHandle contraction = base_contraction(I);
  std::vector<Exponent> out;
  for (const auto& e : R.distinct_exponents()) {
    if (e.is_zero()) continue;
    if (!equals_mod(R.coefficient_ideal(e), contraction)) out.push_back(e);
  }
  return out;
}

namespace {

IdealHandle square_ideal(const IdealHandle& J) {
  const auto& gens = J.generators();
  std::vector<Polynomial> sq;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i; j < gens.size(); ++j)
      sq.push_back(gens[i] * gens[j]);
  return J.with_generators(std::move(sq));
}

}  // namespace

LocusReport flat_locus(const FamilyIdeal& I) {
  const FamilyRing& fam = I.family();
  RelativeInitial R = relative_initial(I);
  IdealHandle contraction = base_contraction(I);
  std::vector<Exponent> T = minimal_exponents(I);

  LocusReport report;
  report.kind = LocusReport::Kind::Flat;
  if (T.empty()) {
    report.combined = IdealHandle::unit(fam.params(), fam.base_params());
    report.witness =
        Polynomial::constant(fam.params(), fam.params()->field.one());
    report.note = "no exponent separates in(I) from I meet A; flat everywhere";
    return report;
  }

  std::optional<IdealHandle> S;
  for (const auto& e : T) {
    IdealHandle J = R.coefficient_ideal(e);
    // Reduced generators keep the colon input canonical.
    J = J.with_generators(J.display_generators());
    IdealHandle part = colon_ideal(square_ideal(J), J);
    report.parts.emplace_back(monomial_str(*fam.full(), e), part);
    S = S ? intersect(*S, part) : part;
  }
  report.combined = *S;

  for (const auto& s : report.combined->display_generators()) {
    Polynomial cand = transport(s, fam.params());
    if (!radical_member(cand, contraction)) {
      report.witness = cand;
      report.note = "witness certified: not in the radical of I meet A";
      return report;
    }
  }
  report.conclusive = false;
  report.note =
      "no generator of S escapes the radical of I meet A; inconclusive";
  return report;
}

LocusReport iso_locus(const FamilyIdeal& I) {
  const FamilyRing& fam = I.family();
  RelativeInitial R = relative_initial(I);
  LocusReport report;
  report.kind = LocusReport::Kind::Iso;
  std::optional<IdealHandle> combined;
  for (int v : fam.full()->mains) {
    Exponent e = Exponent::unit(fam.full()->nvars(),
                                static_cast<std::size_t>(v));
    IdealHandle J = R.coefficient_ideal(e);
    report.parts.emplace_back(fam.full()->names[static_cast<std::size_t>(v)],
                              J);
    combined = combined ? intersect(*combined, J) : J;
  }
  if (!combined) combined = IdealHandle::unit(fam.params(), fam.base_params());
  report.combined = *combined;
  return report;
}

LocusReport finite_locus(const FamilyIdeal& I) {
  const FamilyRing& fam = I.family();
  RelativeInitial R = relative_initial(I);
  LocusReport report;
  report.kind = LocusReport::Kind::Finite;
  std::optional<IdealHandle> combined;
  for (int v : fam.full()->mains) {
    std::vector<Polynomial> gens;
    for (const auto& g : R.generators()) {
      std::vector<int> just_v{v};
      if (g.xexp.supported_on(just_v)) gens.push_back(g.coeff);
    }
    IdealHandle J = fam.param_ideal(std::move(gens));
    report.parts.emplace_back(fam.full()->names[static_cast<std::size_t>(v)],
                              J);
    combined = combined ? intersect(*combined, J) : J;
  }
  if (!combined) combined = IdealHandle::unit(fam.params(), fam.base_params());
  report.combined = *combined;
  return report;
}

RationalPoint::RationalPoint(const FamilyRing& fam,
                             std::map<int, Coefficient> values)
    : values_(std::move(values)) {
  for (int v : fam.full()->params)
    if (!values_.count(v))
      throw analysis_error("point does not assign " +
                           fam.full()->names[static_cast<std::size_t>(v)]);
  for (const auto& g : fam.base_full())
    if (!g.substitute(values_).is_zero())
      throw analysis_error("point violates base relation " + poly_str(g));
}

std::string RationalPoint::str(const FamilyRing& fam) const {
  std::string s;
  for (const auto& [v, c] : values_) {
    if (!s.empty()) s += ", ";
    s += fam.full()->names[static_cast<std::size_t>(v)] + " = " + c.str();
  }
  return s;
}

PrimeSpec::PrimeSpec(const FamilyRing& fam,
                     std::vector<Polynomial> gens_in_params)
    : handle_(fam.param_ideal(std::move(gens_in_params))) {
  // p must contain J0 as an honest ideal of k[a], not merely mod J0.
  GroebnerBasis own = reduced_groebner(handle_.generators(), fam.params());
  for (const auto& j : fam.base_params())
    if (!member(j, own))
      throw analysis_error("prime does not contain the base relations");
}

std::string verdict_name(CoeffVerdict v) {
  switch (v) {
    case CoeffVerdict::Unit:
      return "Unit";
    case CoeffVerdict::Zero:
      return "Zero";
    case CoeffVerdict::Mixed:
      return "Mixed";
  }
  return "?";
}

GoodPointVerdict good_point(const FamilyIdeal& I, const PrimeSpec& p) {
  const FamilyRing& fam = I.family();
  RelativeInitial R = relative_initial(I);
  IdealHandle contraction = base_contraction(I);
  GoodPointVerdict verdict;

  if (!contains_mod(p.handle(), contraction)) {
    verdict.trivial = true;
    verdict.good = true;
    return verdict;
  }

  verdict.good = true;
  for (const auto& e : R.distinct_exponents()) {
    IdealHandle J = R.coefficient_ideal(e);
    CoeffVerdict v;
    if (!contains_mod(p.handle(), J)) {
      v = CoeffVerdict::Unit;
    } else {
      // in(I)_E * A_p <= (ImeetA)_p, generator-wise: ((ImeetA) : c) is not contained in p.
      bool zero = true;
      for (const auto& c : J.generators()) {
        if (c.is_zero()) continue;
        IdealHandle quot = colon_poly(contraction, c);
        if (contains_mod(p.handle(), quot)) {
          zero = false;
          break;
        }
      }
      v = zero ? CoeffVerdict::Zero : CoeffVerdict::Mixed;
      if (!zero) verdict.good = false;
    }
    verdict.entries.push_back({e, v});
  }
  return verdict;
}

namespace {

std::vector<Exponent> minimal_monomial_generators(std::vector<Exponent> exps) {
  std::sort(exps.begin(), exps.end(),
            [](const Exponent& a, const Exponent& b) {
              auto da = a.total_degree(), db = b.total_degree();
              if (da != db) return da < db;
              return a < b;
            });
  std::vector<Exponent> out;
  for (const auto& e : exps) {
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

bool monomial_ideal_contains(const std::vector<Exponent>& big,
                             const std::vector<Exponent>& small) {
  for (const auto& e : small) {
    bool hit = false;
    for (const auto& g : big)
      if (g.divides(e)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

}  // namespace

SpecializationReport specialization_check(const FamilyIdeal& I,
                                          const RationalPoint& pt) {
  const FamilyRing& fam = I.family();
  RelativeInitial R = relative_initial(I);

  std::vector<Exponent> predicted;
  for (const auto& g : R.generators()) {
    Polynomial value = transport(g.coeff, fam.full()).substitute(pt.values());
    if (!value.is_zero()) predicted.push_back(fam.to_fiber(g.xexp));
  }

  std::vector<Polynomial> fiber_gens;
  for (const auto& f : I.generators()) {
    Polynomial sub = f.substitute(pt.values());
    if (!sub.is_zero()) fiber_gens.push_back(transport(sub, fam.mains()));
  }
  GroebnerBasis gb = reduced_groebner(std::move(fiber_gens), fam.mains());
  std::vector<Exponent> actual;
  for (const auto& g : gb.elements) actual.push_back(g.leading_exponent());

  SpecializationReport report;
  report.predicted = minimal_monomial_generators(std::move(predicted));
  report.actual = minimal_monomial_generators(std::move(actual));
  report.contained = monomial_ideal_contains(report.actual, report.predicted);
  report.equal = report.predicted == report.actual;
  return report;
}

FamilyIdeal localize_contract(const FamilyIdeal& I, const Polynomial& s) {
  if (s.is_zero())
    throw analysis_error("localizing element must be nonzero");
  const FamilyRing& fam = I.family();
  Polynomial s_full = transport(s, fam.full());
  for (const auto& t : s_full.terms())
    if (!t.exp.supported_on(fam.full()->params))
      throw analysis_error("localizing element must lie in k[a]");
  IdealHandle sat = saturate(I.handle(), s_full);
  return FamilyIdeal(fam, sat.generators());
}

QuolemReport quotient_extension_check(const FamilyIdeal& I) {
  const FamilyRing& fam = I.family();
  IdealHandle contraction = base_contraction(I);

  std::vector<Polynomial> extended_base = fam.base_full();
  for (const auto& g : contraction.display_generators())
    extended_base.push_back(transport(g, fam.full()));
  FamilyRing quotient_ring(fam.full(), extended_base);
  FamilyIdeal J(quotient_ring, I.generators());

  RelativeInitial lhs = relative_initial(I);   // in(I), then extended to B
  RelativeInitial rhs = relative_initial(J);   // in(I*B[x])

  std::set<Exponent> exps;
  for (const auto& e : lhs.distinct_exponents()) exps.insert(e);
  for (const auto& e : rhs.distinct_exponents()) exps.insert(e);

  QuolemReport report;
  report.equal = true;
  for (const auto& e : exps) {
    // Both sides compared as ideals of B = A/(J0 + ImeetA).
    std::vector<Polynomial> lhs_gens;
    for (const auto& g : lhs.generators())
      if (g.xexp.divides(e)) lhs_gens.push_back(g.coeff);
    IdealHandle L = quotient_ring.param_ideal(std::move(lhs_gens));
    IdealHandle Rh = rhs.coefficient_ideal(e);
    bool eq = equals_mod(L, Rh);
    QuolemReport::Entry entry;
    entry.xexp = e;
    entry.equal = eq;
    for (const auto& g : L.display_generators())
      entry.lhs.push_back(poly_str(g));
    for (const auto& g : Rh.display_generators())
      entry.rhs.push_back(poly_str(g));
    report.entries.push_back(std::move(entry));
    if (!eq) report.equal = false;
  }
  return report;
}

}  // namespace gbfam
