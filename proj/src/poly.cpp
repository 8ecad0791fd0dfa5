#include "gbfam/poly.hpp"

#include <algorithm>

namespace gbfam {

namespace {

struct OrderLess {
  const OrderSpec* order;
  bool operator()(const Exponent& a, const Exponent& b) const {
    return order->less(a, b);
  }
};

}  // namespace

Polynomial Polynomial::constant(std::shared_ptr<const Ring> ring,
                                Coefficient c) {
  Polynomial p(ring);
  if (!c.is_zero())
    p.terms_.push_back(Term{std::move(c), Exponent(ring->nvars())});
  return p;
}

Polynomial Polynomial::monomial(std::shared_ptr<const Ring> ring,
                                Coefficient c, Exponent e) {
  Polynomial p(ring);
  if (e.size() != ring->nvars())
    throw structural_error("exponent dimension mismatch");
  if (!c.is_zero()) p.terms_.push_back(Term{std::move(c), std::move(e)});
  return p;
}

Polynomial Polynomial::variable(std::shared_ptr<const Ring> ring, int var) {
  auto n = ring->nvars();
  return monomial(ring, ring->field.one(),
                  Exponent::unit(n, static_cast<std::size_t>(var)));
}

Polynomial Polynomial::from_terms(std::shared_ptr<const Ring> ring,
                                  std::vector<Term> terms) {
  std::map<Exponent, Coefficient, OrderLess> acc{OrderLess{&ring->order}};
  for (auto& t : terms) {
    if (t.exp.size() != ring->nvars())
      throw structural_error("exponent dimension mismatch");
    auto [it, fresh] = acc.emplace(std::move(t.exp), t.coeff);
    if (!fresh) it->second = it->second + t.coeff;
  }
  Polynomial p(std::move(ring));
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (!it->second.is_zero())
      p.terms_.push_back(Term{std::move(it->second), it->first});
  return p;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty())
    throw structural_error("leading term of the zero polynomial");
  return terms_.front();
}

Coefficient Polynomial::coefficient_of(const Exponent& e) const {
  for (const auto& t : terms_)
    if (t.exp == e) return t.coeff;
  return ring_->field.zero();
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (ring_ == o.ring_) return;
  if (!ring_ || !o.ring_ || !ring_->same_structure(*o.ring_))
    throw structural_error("polynomial ring mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  const auto& ord = ring_->order;
  while (i < terms_.size() && j < o.terms_.size()) {
    auto c = ord.compare(terms_[i].exp, o.terms_[j].exp);
    if (c == std::strong_ordering::greater) {
      r.terms_.push_back(terms_[i++]);
    } else if (c == std::strong_ordering::less) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Coefficient s = terms_[i].coeff + o.terms_[j].coeff;
      if (!s.is_zero()) r.terms_.push_back(Term{std::move(s), terms_[i].exp});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{-t.coeff, t.exp});
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(o);
  std::map<Exponent, Coefficient, OrderLess> acc{OrderLess{&ring_->order}};
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      Exponent e = a.exp.plus(b.exp);
      Coefficient c = a.coeff * b.coeff;
      auto [it, fresh] = acc.emplace(std::move(e), c);
      if (!fresh) it->second = it->second + c;
    }
  Polynomial r(ring_);
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (!it->second.is_zero())
      r.terms_.push_back(Term{std::move(it->second), it->first});
  return r;
}

Polynomial Polynomial::times_term(const Term& t) const {
  if (t.coeff.is_zero()) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& a : terms_)
    r.terms_.push_back(Term{a.coeff * t.coeff, a.exp.plus(t.exp)});
  return r;
}

Polynomial Polynomial::times_coeff(const Coefficient& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& a : terms_) r.terms_.push_back(Term{a.coeff * c, a.exp});
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_term().coeff.is_one()) return *this;
  return times_coeff(leading_term().coeff.inverse());
}

bool Polynomial::operator==(const Polynomial& o) const {
  check_compatible(o);
  return terms_ == o.terms_;
}

Polynomial Polynomial::substitute(
    const std::map<int, Coefficient>& assignment) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Coefficient c = t.coeff;
    Exponent e = t.exp;
    for (const auto& [var, value] : assignment) {
      auto i = static_cast<std::size_t>(var);
      if (e[i] == 0) continue;
      c = c * value.pow(e[i]);
      e.set(i, 0);
    }
    out.push_back(Term{std::move(c), std::move(e)});
  }
  return from_terms(ring_, std::move(out));
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exp.total_degree());
  return d;
}

Polynomial transport(const Polynomial& f, std::shared_ptr<const Ring> target) {
  const Ring& src = f.ring();
  if (!(src.field == target->field))
    throw structural_error("coefficient domain mismatch in transport");
  std::vector<int> map(src.nvars(), -1);
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Exponent e(target->nvars());
    for (std::size_t i = 0; i < src.nvars(); ++i) {
      if (t.exp[i] == 0) continue;
      if (map[i] < 0) {
        map[i] = target->index_of(src.names[i]);
        if (map[i] < 0)
          throw structural_error("variable " + src.names[i] +
                                 " is absent from the target ring");
      }
      e.set(static_cast<std::size_t>(map[i]), t.exp[i]);
    }
    out.push_back(Term{t.coeff, std::move(e)});
  }
  return Polynomial::from_terms(std::move(target), std::move(out));
}

}  // namespace gbfam
