#pragma once

#include <mutex>
#include <optional>

#include "gbfam/groebner.hpp"

namespace gbfam {

// Ideal of a polynomial ring, relative to optional base relations J0:
// every computation adjoins the base generators, so answers are taken in
// k[vars]/J0. The reduced basis is computed once (write-once cache
// shared across copies); handles are otherwise immutable.
class IdealHandle {
public:
  IdealHandle(std::shared_ptr<const Ring> ring, std::vector<Polynomial> gens,
              std::vector<Polynomial> base = {});

  static IdealHandle zero(std::shared_ptr<const Ring> ring,
                          std::vector<Polynomial> base = {});
  static IdealHandle unit(std::shared_ptr<const Ring> ring,
                          std::vector<Polynomial> base = {});

  const std::shared_ptr<const Ring>& ring_ptr() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  const std::vector<Polynomial>& base_relations() const { return base_; }

  // Reduced Groebner basis of generators + base.
  const GroebnerBasis& basis() const;
  // Reduced Groebner basis of the base relations alone.
  const GroebnerBasis& base_basis() const;

  // Reduced-basis elements that are not members of the base ideal; the
  // canonical mod-J0 presentation used for display and reports.
  std::vector<Polynomial> display_generators() const;

  bool is_zero_mod() const;  // equals J0
  bool is_unit() const;

  IdealHandle with_generators(std::vector<Polynomial> gens) const {
    return IdealHandle(ring_, std::move(gens), base_);
  }

private:
  struct Cache {
    std::once_flag once, base_once;
    std::optional<GroebnerBasis> gb, base_gb;
  };

  std::shared_ptr<const Ring> ring_;
  std::vector<Polynomial> gens_;
  std::vector<Polynomial> base_;
  std::shared_ptr<Cache> cache_;
};

// K meet L via elimination of a fresh dominant variable t from
// t*(K+J0) + (1-t)*(L+J0).
IdealHandle intersect(const IdealHandle& K, const IdealHandle& L);

// (K : g) mod J0, via (K+J0) meet (g) with exact division by g.
IdealHandle colon_poly(const IdealHandle& K, const Polynomial& g);

// (K : L) = meet over generators g of L of (K : g). The zero divisor ideal
// yields (1) by convention; `zero_divisor` reports that the convention
// fired.
IdealHandle colon_ideal(const IdealHandle& K, const IdealHandle& L,
                        bool* zero_divisor = nullptr);

// (K : g^inf) via elimination of a fresh dominant variable w from
// K + J0 + (1 - w*g).
IdealHandle saturate(const IdealHandle& K, const Polynomial& g);

// Some power of s lies in K mod J0; decided by 1 in K + J0 + (1 - w*s).
bool radical_member(const Polynomial& s, const IdealHandle& K);

// Reduced bases of K+J0 and L+J0 coincide.
bool equals_mod(const IdealHandle& K, const IdealHandle& L);

// K >= L mod J0: every generator of L normal-forms to 0 against K+J0.
bool contains_mod(const IdealHandle& K, const IdealHandle& L);

}  // namespace gbfam
