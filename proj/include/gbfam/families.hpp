#pragma once

#include <map>
#include <optional>
#include <string>

#include "gbfam/idealops.hpp"

namespace gbfam {

// The data A = k[a]/J0 and A[x]: parameter block, main block, base
// relations, and the combined order with the x block dominant.
class FamilyRing {
public:
  // `full` must be a product ring; `base` lives in the parameter block.
  FamilyRing(std::shared_ptr<const Ring> full, std::vector<Polynomial> base);

  const std::shared_ptr<const Ring>& full() const { return full_; }
  const std::shared_ptr<const Ring>& params() const { return params_; }
  const std::shared_ptr<const Ring>& mains() const { return mains_; }
  const std::vector<Polynomial>& base_full() const { return base_full_; }
  const std::vector<Polynomial>& base_params() const { return base_params_; }

  // Ideal of k[a]/J0 from generators in the parameter subring.
  IdealHandle param_ideal(std::vector<Polynomial> gens) const;

  // x-exponent in the full index space mapped into the main subring.
  Exponent to_fiber(const Exponent& full_exp) const;
  Exponent fiber_to_full(const Exponent& fiber_exp) const;

  bool same_as(const FamilyRing& o) const;

private:
  std::shared_ptr<const Ring> full_, params_, mains_;
  std::vector<Polynomial> base_full_, base_params_;
};

// Ideal I <= A[x] with the cached reduced Groebner basis of I + J0*A[x]
// in k[a,x] under the combined order.
class FamilyIdeal {
public:
  FamilyIdeal(FamilyRing ring, std::vector<Polynomial> gens);

  const FamilyRing& family() const { return fam_; }
  const std::vector<Polynomial>& generators() const {
    return handle_.generators();
  }
  const GroebnerBasis& basis() const { return handle_.basis(); }
  const IdealHandle& handle() const { return handle_; }

private:
  FamilyRing fam_;
  IdealHandle handle_;
};

// One generator of the relative initial ideal in(I): the full
// x^E-coefficient of a reduced-basis element with x-leading exponent E.
struct InitialGen {
  Exponent xexp;         // full index space, parameter slots zero
  Polynomial coeff;      // in the parameter subring
};

// in(I) as a map from x-exponents to coefficient generators; derives the
// coefficient ideal in(I)_E for every E. Monotone in E by construction.
class RelativeInitial {
public:
  RelativeInitial(FamilyRing fam, std::vector<InitialGen> gens)
      : fam_(std::move(fam)), gens_(std::move(gens)) {}

  const FamilyRing& family() const { return fam_; }
  const std::vector<InitialGen>& generators() const { return gens_; }

  // in(I)_E = ({c_g : E_g <= E}) mod J0, an ideal of k[a].
  IdealHandle coefficient_ideal(const Exponent& full_xexp) const;

  std::vector<Exponent> distinct_exponents() const;  // ascending, structural

private:
  FamilyRing fam_;
  std::vector<InitialGen> gens_;
};

RelativeInitial relative_initial(const FamilyIdeal& I);

IdealHandle coefficient_ideal(const RelativeInitial& R, const Exponent& E);

// I meet k[a] mod J0, read off the cached elimination-ready basis.
IdealHandle base_contraction(const FamilyIdeal& I);

struct CoefficientTable {
  std::vector<std::uint64_t> extents;  // one per main variable
  struct Entry {
    Exponent xexp;  // full index space
    IdealHandle ideal;
  };
  std::vector<Entry> entries;  // odometer order, last main variable fastest
};

CoefficientTable coefficient_table(const FamilyIdeal& I,
                                   const std::vector<std::uint64_t>& extents);

// The finite exponent set T of basis leading x-exponents whose
// coefficient ideal differs from I meet A.
std::vector<Exponent> minimal_exponents(const FamilyIdeal& I);

struct LocusReport {
  enum class Kind { Iso, Finite, Flat };
  Kind kind;
  // Per main variable for Iso/Finite (label = variable name); per
  // exponent of T for Flat (label = monomial).
  std::vector<std::pair<std::string, IdealHandle>> parts;
  std::optional<IdealHandle> combined;
  std::optional<Polynomial> witness;  // Flat only
  bool conclusive = true;
  std::string note;
};

// S = meet_{EinT} ((J_E^2 + J0) : J_E) with the first generator of S outside
// radical of (ImeetA) as witness; no generator witness is reported inconclusive.
LocusReport flat_locus(const FamilyIdeal& I);

// Per-variable in(I)_{x_i}; the family is an isomorphism over the
// complement of the combined vanishing locus.
LocusReport iso_locus(const FamilyIdeal& I);

// Per-variable in(I)_{x_i^inf} from pure-power leading exponents; finite
// over the complement of the combined vanishing locus.
LocusReport finite_locus(const FamilyIdeal& I);

// Assignment a_i -> value in k satisfying every base relation.
class RationalPoint {
public:
  RationalPoint(const FamilyRing& fam, std::map<int, Coefficient> values);
  const std::map<int, Coefficient>& values() const { return values_; }
  std::string str(const FamilyRing& fam) const;

private:
  std::map<int, Coefficient> values_;  // key: full-ring variable index
};

// Generators of a prime p <= k[a] containing J0. Primality is asserted by
// the caller, not verified; verdicts are conditional on it.
class PrimeSpec {
public:
  PrimeSpec(const FamilyRing& fam, std::vector<Polynomial> gens_in_params);
  const IdealHandle& handle() const { return handle_; }

private:
  IdealHandle handle_;
};

enum class CoeffVerdict { Unit, Zero, Mixed };

std::string verdict_name(CoeffVerdict v);

struct GoodPointVerdict {
  bool trivial = false;  // ImeetA is not contained in p: B is the zero ring
  struct Entry {
    Exponent xexp;
    CoeffVerdict verdict;
  };
  std::vector<Entry> entries;
  bool good = false;
};

// Prop.-style good-prime test: every coefficient ideal of in(I)
// localizes to (0) or (1) in B = A_p/(ImeetA)_p. Checking the basis leading
// exponents suffices: every in(I)_E is the sum of the in(I)_D over basis
// exponents D <= E, and a finite sum of ideals that are each locally (0)
// or (1) is again locally (0) or (1).
GoodPointVerdict good_point(const FamilyIdeal& I, const PrimeSpec& p);

struct SpecializationReport {
  std::vector<Exponent> predicted;  // minimal generators, fiber index space
  std::vector<Exponent> actual;
  bool contained = false;  // predicted <= actual; holds for every point
  bool equal = false;
};

// Compares the monomial ideal predicted from in(I) at a rational point
// with the initial ideal of the specialized ideal over k.
SpecializationReport specialization_check(const FamilyIdeal& I,
                                          const RationalPoint& pt);

// (I : s^inf) for s in k[a]: the contraction of I through A_s, as a family
// over the same ring. Its coefficient ideals are those of I after
// inverting s.
FamilyIdeal localize_contract(const FamilyIdeal& I, const Polynomial& s);

struct QuolemReport {
  bool equal = false;
  struct Entry {
    Exponent xexp;
    bool equal;
    std::vector<std::string> lhs, rhs;  // display generators
  };
  std::vector<Entry> entries;
};

// Self-check harness: recomputes the relative initial ideal over
// B = A/(ImeetA) and verifies coefficient-ideal-wise equality with the
// extension of in(I); equal on every input.
QuolemReport quotient_extension_check(const FamilyIdeal& I);

}  // namespace gbfam
