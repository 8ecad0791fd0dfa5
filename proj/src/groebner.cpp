#include "gbfam/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace gbfam {

namespace {

void require_field(const Ring& ring) {
  if (!ring.field.is_field())
    throw structural_error("Groebner computations need field coefficients");
}

void require_same_ring(const Polynomial& f, const Polynomial& g) {
  if (f.ring_ptr() != g.ring_ptr() &&
      !f.ring().same_structure(g.ring()))
    throw structural_error("polynomial ring mismatch");
}

}  // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g);
  require_field(f.ring());
  if (f.is_zero() || g.is_zero())
    throw structural_error("s-polynomial of the zero polynomial");
  const Term& tf = f.leading_term();
  const Term& tg = g.leading_term();
  Exponent l = Exponent::lcm(tf.exp, tg.exp);
  Polynomial a = f.times_term(Term{tf.coeff.inverse(), l.minus(tf.exp)});
  Polynomial b = g.times_term(Term{tg.coeff.inverse(), l.minus(tg.exp)});
  return a - b;
}

Polynomial normal_form(const Polynomial& f,
                       std::span<const Polynomial> basis) {
  if (f.is_zero()) return f;
  require_field(f.ring());
  Polynomial h = f;
  std::vector<Term> remainder;
  while (!h.is_zero()) {
    const Term& lt = h.leading_term();
    const Polynomial* divisor = nullptr;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      if (g.leading_exponent().divides(lt.exp)) {
        divisor = &g;
        break;
      }
    }
    if (divisor) {
      const Term& dt = divisor->leading_term();
      Term q{lt.coeff / dt.coeff, lt.exp.minus(dt.exp)};
      h = h - divisor->times_term(q);
    } else {
      remainder.push_back(lt);
      h = h - Polynomial::monomial(h.ring_ptr(), lt.coeff, lt.exp);
    }
  }
  // Collected in strictly decreasing order already.
  return Polynomial::from_terms(f.ring_ptr(), std::move(remainder));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  return normal_form(f, std::span<const Polynomial>(gb.elements));
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g);
  if (g.is_zero()) throw structural_error("division by zero polynomial");
  Polynomial h = f;
  std::vector<Term> quotient;
  const Term& dt = g.leading_term();
  while (!h.is_zero()) {
    const Term& lt = h.leading_term();
    if (!dt.exp.divides(lt.exp))
      throw structural_error("inexact polynomial division");
    Term q{lt.coeff / dt.coeff, lt.exp.minus(dt.exp)};
    h = h - g.times_term(q);
    quotient.push_back(std::move(q));
  }
  return Polynomial::from_terms(f.ring_ptr(), std::move(quotient));
}

namespace {

struct PairKey {
  Exponent lcm;
  std::size_t i, j;
};

struct PairLess {
  const OrderSpec* order;
  bool operator()(const PairKey& a, const PairKey& b) const {
    auto c = order->compare(a.lcm, b.lcm);
    if (c != std::strong_ordering::equal)
      return c == std::strong_ordering::less;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

}  // namespace

GroebnerBasis buchberger(std::vector<Polynomial> generators,
                         std::shared_ptr<const Ring> ring) {
  require_field(*ring);
  std::vector<Polynomial> basis;
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    if (g.ring_ptr() != ring && !g.ring().same_structure(*ring))
      throw structural_error("generator outside the computation ring");
    basis.push_back(g.monic());
  }

  std::set<PairKey, PairLess> pending{PairLess{&ring->order}};
  std::set<std::pair<std::size_t, std::size_t>> handled;
  auto push_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i)
      pending.insert(PairKey{
          Exponent::lcm(basis[i].leading_exponent(),
                        basis[j].leading_exponent()),
          i, j});
  };
  for (std::size_t j = 0; j < basis.size(); ++j) push_pairs(j);

  while (!pending.empty()) {
    PairKey pk = *pending.begin();
    pending.erase(pending.begin());
    handled.insert({pk.i, pk.j});

    const Exponent& ei = basis[pk.i].leading_exponent();
    const Exponent& ej = basis[pk.j].leading_exponent();
    if (Exponent::disjoint_support(ei, ej)) continue;  // first criterion

    // Chain criterion: some other leading exponent divides the lcm and
    // both side pairs were already treated.
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == pk.i || k == pk.j) continue;
      if (!basis[k].leading_exponent().divides(pk.lcm)) continue;
      auto a = std::minmax(pk.i, k);
      auto b = std::minmax(pk.j, k);
      if (handled.count({a.first, a.second}) &&
          handled.count({b.first, b.second}))
        skip = true;
    }
    if (skip) continue;

    Polynomial r =
        normal_form(s_polynomial(basis[pk.i], basis[pk.j]), basis);
    if (!r.is_zero()) {
      basis.push_back(r.monic());
      push_pairs(basis.size() - 1);
    }
  }
  return GroebnerBasis{std::move(ring), std::move(basis), false};
}

GroebnerBasis reduced_basis(GroebnerBasis gb) {
  if (gb.reduced) return gb;
  require_field(*gb.ring);
  const auto& order = gb.ring->order;

  // Minimalize: visit by increasing leading monomial so ties (equal
  // leading exponents) keep the earlier element.
  std::vector<std::size_t> idx(gb.elements.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return order.less(gb.elements[a].leading_exponent(),
                      gb.elements[b].leading_exponent());
  });
  std::vector<Polynomial> kept;
  for (std::size_t i : idx) {
    const Exponent& e = gb.elements[i].leading_exponent();
    bool dominated = false;
    for (const auto& k : kept)
      if (k.leading_exponent().divides(e)) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(gb.elements[i].monic());
  }

  // Tail-reduce each element against the others; leading terms are
  // untouched because no other leading exponent divides them.
  std::vector<Polynomial> out;
  out.reserve(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(kept.size() - 1);
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    out.push_back(normal_form(kept[i], others).monic());
  }

  std::stable_sort(out.begin(), out.end(),
                   [&](const Polynomial& a, const Polynomial& b) {
                     return order.greater(a.leading_exponent(),
                                          b.leading_exponent());
                   });
  return GroebnerBasis{std::move(gb.ring), std::move(out), true};
}

GroebnerBasis reduced_groebner(std::vector<Polynomial> generators,
                               std::shared_ptr<const Ring> ring) {
  return reduced_basis(buchberger(std::move(generators), std::move(ring)));
}

std::vector<Polynomial> eliminate(const std::vector<Polynomial>& generators,
                                  std::shared_ptr<const Ring> ring,
                                  const std::vector<int>& drop) {
  auto elim_ring = ring->with_elimination_order(drop);
  std::vector<Polynomial> lifted;
  lifted.reserve(generators.size());
  for (const auto& g : generators) lifted.push_back(transport(g, elim_ring));
  GroebnerBasis gb = reduced_groebner(std::move(lifted), elim_ring);
  std::vector<Polynomial> kept;
  for (const auto& g : gb.elements) {
    bool free = true;
    for (const auto& t : g.terms())
      for (int v : drop)
        if (t.exp[static_cast<std::size_t>(v)] != 0) free = false;
    if (free) kept.push_back(transport(g, ring));
  }
  return kept;
}

bool member(const Polynomial& f, const GroebnerBasis& gb) {
  return normal_form(f, gb).is_zero();
}

}  // namespace gbfam
