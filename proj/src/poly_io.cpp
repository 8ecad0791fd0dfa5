#include "gbfam/poly_io.hpp"

#include <sstream>

namespace gbfam {

std::string monomial_str(const Ring& ring, const Exponent& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.names[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

std::string poly_str(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : f.terms()) {
    Coefficient c = t.coeff;
    if (first) {
      if (c.display_negative()) {
        s += "-";
        c = -c;
      }
    } else {
      if (c.display_negative()) {
        s += " - ";
        c = -c;
      } else {
        s += " + ";
      }
    }
    if (t.exp.is_zero()) {
      s += c.str();
    } else if (c.is_one()) {
      s += monomial_str(f.ring(), t.exp);
    } else {
      s += c.str() + "*" + monomial_str(f.ring(), t.exp);
    }
    first = false;
  }
  return s;
}

std::string ideal_str(const std::vector<Polynomial>& gens) {
  std::vector<std::string> strs;
  strs.reserve(gens.size());
  for (const auto& g : gens) strs.push_back(poly_str(g));
  return ideal_str(strs);
}

std::string ideal_str(const std::vector<std::string>& gens) {
  if (gens.empty()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ", ";
    s += gens[i];
  }
  return s + ")";
}

std::string initial_gen_str(const Polynomial& coeff, const Ring& ring,
                            const Exponent& xexp) {
  std::string c = poly_str(coeff);
  if (xexp.is_zero()) return c;
  std::string m = monomial_str(ring, xexp);
  if (coeff.size() == 1) {
    const auto& t = coeff.leading_term();
    if (t.exp.is_zero() && t.coeff.is_one()) return m;
    std::string one_term = c;
    return one_term + "*" + m;
  }
  return "(" + c + ")*" + m;
}

}  // namespace gbfam
