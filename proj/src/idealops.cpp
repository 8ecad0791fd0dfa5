#include "gbfam/idealops.hpp"

namespace gbfam {

namespace {

void require_compatible(const IdealHandle& K, const IdealHandle& L) {
  if (K.ring_ptr() != L.ring_ptr() &&
      !K.ring_ptr()->same_structure(*L.ring_ptr()))
    throw structural_error("ideal ring mismatch");
  const auto& a = K.base_relations();
  const auto& b = L.base_relations();
  if (a.size() != b.size())
    throw structural_error("ideal base-relation mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) throw structural_error("ideal base-relation mismatch");
}

std::vector<Polynomial> concat(const std::vector<Polynomial>& a,
                               const std::vector<Polynomial>& b) {
  std::vector<Polynomial> r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

// Generators of (I1) meet (I2) in `ring`, by the t-trick.
std::vector<Polynomial> intersect_raw(const std::vector<Polynomial>& I1,
                                      const std::vector<Polynomial>& I2,
                                      const std::shared_ptr<const Ring>& ring) {
  auto ext = ring->with_dominant_aux("@t");
  int t = static_cast<int>(ext->nvars()) - 1;
  Polynomial tvar = Polynomial::variable(ext, t);
  Polynomial one_minus_t =
      Polynomial::constant(ext, ext->field.one()) - tvar;
  std::vector<Polynomial> gens;
  gens.reserve(I1.size() + I2.size());
  for (const auto& f : I1) gens.push_back(transport(f, ext) * tvar);
  for (const auto& f : I2) gens.push_back(transport(f, ext) * one_minus_t);
  std::vector<Polynomial> kept = eliminate(gens, ext, {t});
  std::vector<Polynomial> out;
  out.reserve(kept.size());
  for (const auto& f : kept) out.push_back(transport(f, ring));
  return out;
}

std::vector<Polynomial> saturate_raw(const std::vector<Polynomial>& I,
                                     const Polynomial& g,
                                     const std::shared_ptr<const Ring>& ring) {
  auto ext = ring->with_dominant_aux("@w");
  int w = static_cast<int>(ext->nvars()) - 1;
  Polynomial wvar = Polynomial::variable(ext, w);
  std::vector<Polynomial> gens;
  gens.reserve(I.size() + 1);
  for (const auto& f : I) gens.push_back(transport(f, ext));
  gens.push_back(Polynomial::constant(ext, ext->field.one()) -
                 wvar * transport(g, ext));
  std::vector<Polynomial> kept = eliminate(gens, ext, {w});
  std::vector<Polynomial> out;
  out.reserve(kept.size());
  for (const auto& f : kept) out.push_back(transport(f, ring));
  return out;
}

}  // namespace

IdealHandle::IdealHandle(std::shared_ptr<const Ring> ring,
                         std::vector<Polynomial> gens,
                         std::vector<Polynomial> base)
    : ring_(std::move(ring)),
      gens_(std::move(gens)),
      base_(std::move(base)),
      cache_(std::make_shared<Cache>()) {
  for (auto& g : gens_)
    if (g.ring_ptr() != ring_ && !g.ring().same_structure(*ring_))
      throw structural_error("generator outside the handle ring");
}

IdealHandle IdealHandle::zero(std::shared_ptr<const Ring> ring,
                              std::vector<Polynomial> base) {
  return IdealHandle(std::move(ring), {}, std::move(base));
}

IdealHandle IdealHandle::unit(std::shared_ptr<const Ring> ring,
                              std::vector<Polynomial> base) {
  Polynomial one = Polynomial::constant(ring, ring->field.one());
  return IdealHandle(std::move(ring), {one}, std::move(base));
}

const GroebnerBasis& IdealHandle::basis() const {
  std::call_once(cache_->once, [this] {
    cache_->gb = reduced_groebner(concat(gens_, base_), ring_);
  });
  return *cache_->gb;
}

const GroebnerBasis& IdealHandle::base_basis() const {
  std::call_once(cache_->base_once, [this] {
    cache_->base_gb = reduced_groebner(base_, ring_);
  });
  return *cache_->base_gb;
}

std::vector<Polynomial> IdealHandle::display_generators() const {
  std::vector<Polynomial> out;
  for (const auto& g : basis().elements) {
    if (!base_.empty() && member(g, base_basis())) continue;
    out.push_back(g);
  }
  return out;
}

bool IdealHandle::is_zero_mod() const { return display_generators().empty(); }

bool IdealHandle::is_unit() const { return basis().is_unit_ideal(); }

IdealHandle intersect(const IdealHandle& K, const IdealHandle& L) {
  require_compatible(K, L);
  auto gens = intersect_raw(concat(K.generators(), K.base_relations()),
                            concat(L.generators(), L.base_relations()),
                            K.ring_ptr());
  return IdealHandle(K.ring_ptr(), std::move(gens), K.base_relations());
}

IdealHandle colon_poly(const IdealHandle& K, const Polynomial& g) {
  if (g.is_zero()) throw analysis_error("colon by the zero polynomial");
  auto inter = intersect_raw(concat(K.generators(), K.base_relations()), {g},
                             K.ring_ptr());
  std::vector<Polynomial> out;
  out.reserve(inter.size());
  for (const auto& f : inter) out.push_back(divide_exact(f, g));
  return IdealHandle(K.ring_ptr(), std::move(out), K.base_relations());
}

IdealHandle colon_ideal(const IdealHandle& K, const IdealHandle& L,
                        bool* zero_divisor) {
  require_compatible(K, L);
  if (zero_divisor) *zero_divisor = false;
  std::vector<Polynomial> nonzero;
  for (const auto& g : L.generators())
    if (!g.is_zero()) nonzero.push_back(g);
  if (nonzero.empty()) {
    if (zero_divisor) *zero_divisor = true;
    return IdealHandle::unit(K.ring_ptr(), K.base_relations());
  }
  IdealHandle acc = colon_poly(K, nonzero.front());
  for (std::size_t i = 1; i < nonzero.size(); ++i)
    acc = intersect(acc, colon_poly(K, nonzero[i]));
  return acc;
}

IdealHandle saturate(const IdealHandle& K, const Polynomial& g) {
  if (g.is_zero()) throw analysis_error("saturation by the zero polynomial");
  auto gens = saturate_raw(concat(K.generators(), K.base_relations()), g,
                           K.ring_ptr());
  return IdealHandle(K.ring_ptr(), std::move(gens), K.base_relations());
}

bool radical_member(const Polynomial& s, const IdealHandle& K) {
  auto ext = K.ring_ptr()->with_dominant_aux("@w");
  int w = static_cast<int>(ext->nvars()) - 1;
  std::vector<Polynomial> gens;
  for (const auto& f : K.generators()) gens.push_back(transport(f, ext));
  for (const auto& f : K.base_relations()) gens.push_back(transport(f, ext));
  gens.push_back(Polynomial::constant(ext, ext->field.one()) -
                 Polynomial::variable(ext, w) * transport(s, ext));
  return reduced_groebner(std::move(gens), ext).is_unit_ideal();
}

bool equals_mod(const IdealHandle& K, const IdealHandle& L) {
  require_compatible(K, L);
  return K.basis().elements == L.basis().elements;
}

bool contains_mod(const IdealHandle& K, const IdealHandle& L) {
  require_compatible(K, L);
  for (const auto& g : L.generators())
    if (!normal_form(g, K.basis()).is_zero()) return false;
  return true;
}

}  // namespace gbfam
