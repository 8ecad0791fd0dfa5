#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gbfam/coeff.hpp"
#include "gbfam/order.hpp"

namespace gbfam {

// Ambient polynomial ring: coefficient domain, interned variable names,
// the split into parameter (a) and main (x) blocks, and the active
// monomial order. Immutable after construction; shared by pointer.
struct Ring {
  Field field;
  std::vector<std::string> names;
  std::vector<int> params;  // a-block variable indices
  std::vector<int> mains;   // x-block variable indices
  OrderSpec order;

  std::size_t nvars() const { return names.size(); }
  int index_of(std::string_view name) const;
  bool same_structure(const Ring& o) const;

  Exponent main_part(const Exponent& e) const { return e.masked(mains); }
  Exponent param_part(const Exponent& e) const { return e.masked(params); }

  // k[a][x] with the x block dominant: x-parts compared by main_prim
  // first, ties broken on a-parts by param_prim.
  static std::shared_ptr<const Ring> product(Field field,
                                             std::vector<std::string> param_names,
                                             std::vector<std::string> main_names,
                                             Primitive main_prim,
                                             Primitive param_prim);

  // Single-block ring (all variables main).
  static std::shared_ptr<const Ring> plain(Field field,
                                           std::vector<std::string> names,
                                           Primitive prim);

  // Same ring with one fresh variable appended, occupying a new dominant
  // block; existing variable indices are unchanged.
  std::shared_ptr<const Ring> with_dominant_aux(const std::string& name) const;

  // Same variables, order rearranged so the dropped variables form a
  // leading lex block; the surviving blocks keep their primitives.
  std::shared_ptr<const Ring> with_elimination_order(
      const std::vector<int>& drop) const;

  // Subring on the parameter (resp. main) block, keeping that block's
  // primitive order. Fresh index space.
  std::shared_ptr<const Ring> parameter_subring() const;
  std::shared_ptr<const Ring> main_subring() const;
};

}  // namespace gbfam
