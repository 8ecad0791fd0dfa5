#pragma once

#include <compare>
#include <string>
#include <vector>

#include "gbfam/exponent.hpp"

namespace gbfam {

enum class Primitive { Lex, GrLex, GrevLex };

std::string primitive_name(Primitive p);

// One block of a product order: the listed variables compared by the
// primitive order, variables earlier in the list ranking higher.
struct OrderBlock {
  std::vector<int> vars;
  Primitive prim = Primitive::Lex;
};

// Block (product) monomial order: earlier blocks dominate. The blocks
// partition the variable set, so the order is total, multiplicative, and
// has x_i > 1 for every variable.
class OrderSpec {
public:
  OrderSpec() = default;
  OrderSpec(std::size_t nvars, std::vector<OrderBlock> blocks);

  std::strong_ordering compare(const Exponent& a, const Exponent& b) const;
  bool less(const Exponent& a, const Exponent& b) const {
    return compare(a, b) == std::strong_ordering::less;
  }
  bool greater(const Exponent& a, const Exponent& b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }

  const std::vector<OrderBlock>& blocks() const { return blocks_; }
  std::size_t nvars() const { return nvars_; }
  bool operator==(const OrderSpec& o) const;

private:
  std::size_t nvars_ = 0;
  std::vector<OrderBlock> blocks_;
};

}  // namespace gbfam
