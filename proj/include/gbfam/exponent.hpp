#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "gbfam/error.hpp"

namespace gbfam {

// Exponent vector of a monomial, one machine-word slot per ring variable.
// The structural ordering (operator<=>) is for container keys only; the
// monomial order lives in OrderSpec.
class Exponent {
public:
  Exponent() = default;
  explicit Exponent(std::size_t nvars) : e_(nvars, 0) {}
  explicit Exponent(std::vector<std::uint64_t> e) : e_(std::move(e)) {}

  static Exponent unit(std::size_t nvars, std::size_t var,
                       std::uint64_t deg = 1) {
    Exponent e(nvars);
    e.e_[var] = deg;
    return e;
  }

  std::size_t size() const { return e_.size(); }
  std::uint64_t operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, std::uint64_t v) { e_[i] = v; }

  bool is_zero() const {
    for (auto v : e_)
      if (v != 0) return false;
    return true;
  }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (auto v : e_) d = checked_add(d, v);
    return d;
  }

  std::uint64_t degree_on(std::span<const int> vars) const {
    std::uint64_t d = 0;
    for (int i : vars) d = checked_add(d, e_[static_cast<std::size_t>(i)]);
    return d;
  }

  Exponent plus(const Exponent& o) const {
    check_size(o);
    Exponent r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i)
      r.e_[i] = checked_add(e_[i], o.e_[i]);
    return r;
  }

  // Componentwise difference; caller guarantees o divides *this.
  Exponent minus(const Exponent& o) const {
    check_size(o);
    Exponent r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (o.e_[i] > e_[i]) throw structural_error("exponent underflow");
      r.e_[i] = e_[i] - o.e_[i];
    }
    return r;
  }

  // E <= F componentwise, i.e. x^E divides x^F.
  bool divides(const Exponent& o) const {
    check_size(o);
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  static Exponent lcm(const Exponent& a, const Exponent& b) {
    a.check_size(b);
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      r.e_[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
    return r;
  }

  static bool disjoint_support(const Exponent& a, const Exponent& b) {
    a.check_size(b);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a.e_[i] != 0 && b.e_[i] != 0) return false;
    return true;
  }

  // Copy with every slot outside `keep` zeroed.
  Exponent masked(std::span<const int> keep) const {
    Exponent r(e_.size());
    for (int i : keep)
      r.e_[static_cast<std::size_t>(i)] = e_[static_cast<std::size_t>(i)];
    return r;
  }

  bool supported_on(std::span<const int> vars) const {
    Exponent m = masked(vars);
    return m == *this;
  }

  auto operator<=>(const Exponent&) const = default;

private:
  static std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    if (s < a) throw structural_error("exponent overflow");
    return s;
  }
  void check_size(const Exponent& o) const {
    if (e_.size() != o.e_.size())
      throw structural_error("exponent dimension mismatch");
  }

  std::vector<std::uint64_t> e_;
};

}  // namespace gbfam
