#include "gbfam/ring.hpp"

#include <algorithm>
#include <set>

namespace gbfam {

int Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

bool Ring::same_structure(const Ring& o) const {
  return field == o.field && names == o.names && params == o.params &&
         mains == o.mains && order == o.order;
}

std::shared_ptr<const Ring> Ring::product(Field field,
                                          std::vector<std::string> param_names,
                                          std::vector<std::string> main_names,
                                          Primitive main_prim,
                                          Primitive param_prim) {
  auto r = std::make_shared<Ring>();
  r->field = std::move(field);
  r->names = param_names;
  r->names.insert(r->names.end(), main_names.begin(), main_names.end());
  std::set<std::string> uniq(r->names.begin(), r->names.end());
  if (uniq.size() != r->names.size())
    throw analysis_error("duplicate variable name in ring declaration");
  for (std::size_t i = 0; i < param_names.size(); ++i)
    r->params.push_back(static_cast<int>(i));
  for (std::size_t i = 0; i < main_names.size(); ++i)
    r->mains.push_back(static_cast<int>(param_names.size() + i));
  std::vector<OrderBlock> blocks;
  if (!r->mains.empty()) blocks.push_back({r->mains, main_prim});
  if (!r->params.empty()) blocks.push_back({r->params, param_prim});
  r->order = OrderSpec(r->names.size(), std::move(blocks));
  return r;
}

std::shared_ptr<const Ring> Ring::plain(Field field,
                                        std::vector<std::string> names,
                                        Primitive prim) {
  return product(std::move(field), {}, std::move(names), prim, prim);
}

std::shared_ptr<const Ring> Ring::with_dominant_aux(
    const std::string& name) const {
  if (index_of(name) >= 0)
    throw structural_error("auxiliary variable name collides");
  auto r = std::make_shared<Ring>();
  r->field = field;
  r->names = names;
  r->names.push_back(name);
  r->params = params;
  r->mains = mains;
  std::vector<OrderBlock> blocks;
  blocks.push_back({{static_cast<int>(names.size())}, Primitive::Lex});
  for (const auto& b : order.blocks()) blocks.push_back(b);
  r->order = OrderSpec(r->names.size(), std::move(blocks));
  return r;
}

std::shared_ptr<const Ring> Ring::with_elimination_order(
    const std::vector<int>& drop) const {
  std::set<int> dropped(drop.begin(), drop.end());
  auto r = std::make_shared<Ring>();
  r->field = field;
  r->names = names;
  r->params = params;
  r->mains = mains;
  std::vector<OrderBlock> blocks;
  std::vector<int> front(drop.begin(), drop.end());
  std::sort(front.begin(), front.end());
  blocks.push_back({std::move(front), Primitive::Lex});
  for (const auto& b : order.blocks()) {
    OrderBlock kept;
    kept.prim = b.prim;
    for (int v : b.vars)
      if (!dropped.count(v)) kept.vars.push_back(v);
    if (!kept.vars.empty()) blocks.push_back(std::move(kept));
  }
  r->order = OrderSpec(r->names.size(), std::move(blocks));
  return r;
}

namespace {

std::shared_ptr<const Ring> subring(const Ring& parent,
                                    const std::vector<int>& vars, bool as_params) {
  Primitive prim = Primitive::Lex;
  for (const auto& b : parent.order.blocks())
    if (!b.vars.empty() && !vars.empty() && b.vars.front() == vars.front())
      prim = b.prim;
  std::vector<std::string> names;
  names.reserve(vars.size());
  for (int v : vars) names.push_back(parent.names[static_cast<std::size_t>(v)]);
  if (as_params)
    return Ring::product(parent.field, std::move(names), {}, prim, prim);
  return Ring::plain(parent.field, std::move(names), prim);
}

}  // namespace

std::shared_ptr<const Ring> Ring::parameter_subring() const {
  return subring(*this, params, true);
}

std::shared_ptr<const Ring> Ring::main_subring() const {
  return subring(*this, mains, false);
}

}  // namespace gbfam
