#include "gbfam/order.hpp"

namespace gbfam {

std::string primitive_name(Primitive p) {
  switch (p) {
    case Primitive::Lex:
      return "lex";
    case Primitive::GrLex:
      return "grlex";
    case Primitive::GrevLex:
      return "grevlex";
  }
  return "?";
}

OrderSpec::OrderSpec(std::size_t nvars, std::vector<OrderBlock> blocks)
    : nvars_(nvars), blocks_(std::move(blocks)) {
  std::vector<char> seen(nvars, 0);
  for (const auto& b : blocks_)
    for (int v : b.vars) {
      if (v < 0 || static_cast<std::size_t>(v) >= nvars || seen[v])
        throw structural_error("order blocks must partition the variables");
      seen[v] = 1;
    }
  for (char s : seen)
    if (!s) throw structural_error("order blocks must cover every variable");
}

namespace {

std::strong_ordering compare_block(const OrderBlock& blk, const Exponent& a,
                                   const Exponent& b) {
  switch (blk.prim) {
    case Primitive::Lex:
      for (int v : blk.vars) {
        auto i = static_cast<std::size_t>(v);
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return std::strong_ordering::equal;
    case Primitive::GrLex: {
      auto da = a.degree_on(blk.vars), db = b.degree_on(blk.vars);
      if (da != db) return da <=> db;
      for (int v : blk.vars) {
        auto i = static_cast<std::size_t>(v);
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return std::strong_ordering::equal;
    }
    case Primitive::GrevLex: {
      auto da = a.degree_on(blk.vars), db = b.degree_on(blk.vars);
      if (da != db) return da <=> db;
      // Equal degree: the monomial with the larger exponent on the last
      // differing variable is the smaller one.
      for (auto it = blk.vars.rbegin(); it != blk.vars.rend(); ++it) {
        auto i = static_cast<std::size_t>(*it);
        if (a[i] != b[i]) return b[i] <=> a[i];
      }
      return std::strong_ordering::equal;
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering OrderSpec::compare(const Exponent& a,
                                        const Exponent& b) const {
  if (a.size() != nvars_ || b.size() != nvars_)
    throw structural_error("exponent dimension mismatch in order comparison");
  for (const auto& blk : blocks_) {
    auto c = compare_block(blk, a, b);
    if (c != std::strong_ordering::equal) return c;
  }
  return std::strong_ordering::equal;
}

bool OrderSpec::operator==(const OrderSpec& o) const {
  if (nvars_ != o.nvars_ || blocks_.size() != o.blocks_.size()) return false;
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (blocks_[i].vars != o.blocks_[i].vars ||
        blocks_[i].prim != o.blocks_[i].prim)
      return false;
  return true;
}

}  // namespace gbfam
