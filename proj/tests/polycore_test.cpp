#include <doctest.h>

#include "test_util.hpp"

using namespace gbfam;
using namespace gbfam::testutil;

namespace {

std::shared_ptr<const Ring> ex1_ring() {
  return Ring::product(Field::rationals(), {"a"}, {"x", "y"}, Primitive::Lex,
                       Primitive::Lex);
}

}  // namespace

TEST_CASE("coefficient arithmetic stays canonical") {
  Field q = Field::rationals();
  Coefficient half = q.from_rational(mpq_class(2, 4));
  CHECK(half.str() == "1/2");
  CHECK((half + half).is_one());
  CHECK((half - half).is_zero());
  CHECK((half * q.from_long(3)).str() == "3/2");
  CHECK(half.inverse().str() == "2");
  CHECK((-half).str() == "-1/2");

  Field f5 = Field::prime_field(5);
  Coefficient three = f5.from_long(3);
  CHECK((three + three).str() == "1");
  CHECK((three * three).str() == "4");
  CHECK(three.inverse().str() == "2");  // 3*2 = 6 = 1 mod 5
  CHECK((-three).str() == "2");
  CHECK(f5.from_long(-7).str() == "3");
  CHECK(f5.from_rational(mpq_class(1, 2)).str() == "3");  // 2*3 = 1 mod 5
}

TEST_CASE("prime field rejects bad characteristics") {
  CHECK_THROWS_AS(Field::prime_field(6), analysis_error);
  CHECK_THROWS_AS(Field::prime_field(1), analysis_error);
  CHECK_NOTHROW(Field::prime_field(kDefaultPrime));
}

TEST_CASE("lex order: x vs y") {
  auto ring = Ring::plain(Field::rationals(), {"x", "y"}, Primitive::Lex);
  Exponent x = exp_of(*ring, {{"x", 1}});
  Exponent y = exp_of(*ring, {{"y", 1}});
  CHECK(ring->order.compare(x, y) == std::strong_ordering::greater);
  CHECK(ring->order.compare(y, x) == std::strong_ordering::less);
  CHECK(ring->order.compare(x, x) == std::strong_ordering::equal);
}

TEST_CASE("product order: a-block breaks x-part ties") {
  auto ring = Ring::product(Field::rationals(), {"a", "b"}, {"x", "y"},
                            Primitive::Lex, Primitive::Lex);
  Exponent ax = exp_of(*ring, {{"a", 1}, {"x", 1}});
  Exponent x = exp_of(*ring, {{"x", 1}});
  CHECK(ring->order.compare(ax, x) == std::strong_ordering::greater);
  // x-part dominates regardless of a-part.
  Exponent a2 = exp_of(*ring, {{"a", 2}});
  CHECK(ring->order.compare(x, a2) == std::strong_ordering::greater);
}

TEST_CASE("grevlex: equal degree, larger last exponent loses") {
  auto ring = Ring::plain(Field::rationals(), {"x", "y"}, Primitive::GrevLex);
  Exponent xy2 = exp_of(*ring, {{"x", 1}, {"y", 2}});
  Exponent x2y = exp_of(*ring, {{"x", 2}, {"y", 1}});
  CHECK(ring->order.compare(xy2, x2y) == std::strong_ordering::less);
}

TEST_CASE("order comparison rejects dimension mismatches") {
  auto ring = Ring::plain(Field::rationals(), {"x", "y"}, Primitive::Lex);
  CHECK_THROWS_AS(ring->order.compare(Exponent(2), Exponent(3)),
                  structural_error);
}

TEST_CASE("order axioms hold on random triples") {
  for (Primitive prim :
       {Primitive::Lex, Primitive::GrLex, Primitive::GrevLex}) {
    auto ring =
        Ring::product(Field::rationals(), {"a"}, {"x", "y"}, prim, prim);
    Rng rng(7 + static_cast<int>(prim));
    Exponent one(ring->nvars());
    for (int k = 0; k < 300; ++k) {
      Exponent e = random_exponent(*ring, rng, 5);
      Exponent f = random_exponent(*ring, rng, 5);
      Exponent g = random_exponent(*ring, rng, 5);
      auto c = ring->order.compare(e, f);
      // Totality: equal only for identical exponents.
      CHECK((c == std::strong_ordering::equal) == (e == f));
      // Multiplicativity.
      if (c == std::strong_ordering::greater)
        CHECK(ring->order.compare(e.plus(g), f.plus(g)) ==
              std::strong_ordering::greater);
      // x_i > 1 for every variable, hence m > 1 for every nonzero m.
      if (!e.is_zero())
        CHECK(ring->order.compare(e, one) == std::strong_ordering::greater);
    }
  }
}

TEST_CASE("polynomial addition cancels") {
  auto ring = ex1_ring();
  Polynomial x = Polynomial::variable(ring, ring->index_of("x"));
  Polynomial y = Polynomial::variable(ring, ring->index_of("y"));
  Polynomial sum = (x + y) + (x - y);
  CHECK(poly_str(sum) == "2*x");
  CHECK(((x + y) - (x + y)).is_zero());

  auto f5 = Ring::plain(Field::prime_field(5), {"x"}, Primitive::Lex);
  Polynomial fx = Polynomial::variable(f5, 0);
  Polynomial g = fx.times_coeff(f5->field.from_long(3));
  CHECK(poly_str(g + g) == "x");  // 3x + 3x = 6x = x mod 5
}

TEST_CASE("polynomial multiplication distributes") {
  auto ring = ex1_ring();
  Polynomial x = Polynomial::variable(ring, ring->index_of("x"));
  Polynomial y = Polynomial::variable(ring, ring->index_of("y"));
  Polynomial a = Polynomial::variable(ring, ring->index_of("a"));
  CHECK(poly_str((x + y) * (x + y)) == "x^2 + 2*x*y + y^2");
  CHECK((x * Polynomial::zero(ring)).is_zero());
  CHECK(poly_str((a * x - y) * y) == "a*x*y - y^2");
}

TEST_CASE("ring axioms on random polynomials") {
  auto ring = Ring::product(Field::prime_field(kDefaultPrime), {"a"},
                            {"x", "y"}, Primitive::Lex, Primitive::Lex);
  Rng rng(11);
  for (int k = 0; k < 50; ++k) {
    Polynomial f = random_poly(ring, rng, 3, 3);
    Polynomial g = random_poly(ring, rng, 3, 3);
    Polynomial h = random_poly(ring, rng, 3, 3);
    CHECK((f + g) + h == f + (g + h));
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    if (!f.is_zero() && !g.is_zero())
      CHECK((f * g).leading_exponent() ==
            f.leading_exponent().plus(g.leading_exponent()));
  }
}

TEST_CASE("leading terms under the product order") {
  Session s = make_session(regression_sources().at("ex1"));
  const auto& ring = s.family->full();
  Polynomial f = parse_polynomial_text("a*x - y", ring);
  CHECK(f.leading_term().coeff.is_one());
  CHECK(f.leading_exponent() == exp_of(*ring, {{"a", 1}, {"x", 1}}));

  Session s2 = make_session(regression_sources().at("ex2"));
  Polynomial g = parse_polynomial_text("b*y^2 + y + 1", s2.family->full());
  CHECK(g.leading_exponent() ==
        exp_of(*s2.family->full(), {{"b", 1}, {"y", 2}}));

  Polynomial c = parse_polynomial_text("7", ring);
  CHECK(c.leading_term().coeff.str() == "7");
  CHECK(c.leading_exponent().is_zero());

  CHECK_THROWS_AS(Polynomial::zero(ring).leading_term(), structural_error);
}

TEST_CASE("substitution of parameter values") {
  Session s = make_session(regression_sources().at("ex1"));
  const auto& ring = s.family->full();
  Polynomial f = parse_polynomial_text("a*x - y", ring);
  int a = ring->index_of("a");

  Polynomial at1 = f.substitute({{a, ring->field.from_long(1)}});
  CHECK(poly_str(at1) == "x - y");
  Polynomial at0 = f.substitute({{a, ring->field.from_long(0)}});
  CHECK(poly_str(at0) == "-y");
  Polynomial c = parse_polynomial_text("5", ring);
  CHECK(c.substitute({{a, ring->field.from_long(2)}}) == c);
}

TEST_CASE("exponent arithmetic is checked") {
  Exponent e(2);
  e.set(0, ~std::uint64_t{0});
  Exponent f(2);
  f.set(0, 1);
  CHECK_THROWS_AS(e.plus(f), structural_error);
  CHECK_THROWS_AS(f.minus(e), structural_error);
  CHECK(e.divides(e));
  CHECK(Exponent::lcm(e, f)[0] == ~std::uint64_t{0});
}

TEST_CASE("canonical text round-trips through the parser") {
  auto ring = Ring::product(Field::rationals(), {"a", "b"}, {"x", "y"},
                            Primitive::Lex, Primitive::Lex);
  Rng rng(23);
  auto random_q_poly = [&](int terms) {
    std::vector<Term> ts;
    for (int i = 0; i < terms; ++i) {
      mpq_class c(rng.int_in(-9, 9), rng.int_in(1, 9));
      ts.push_back(Term{ring->field.from_rational(c),
                        random_exponent(*ring, rng, 4)});
    }
    return Polynomial::from_terms(ring, std::move(ts));
  };
  for (int k = 0; k < 100; ++k) {
    Polynomial f = random_q_poly(1 + static_cast<int>(rng.below(4)));
    CHECK(parse_polynomial_text(poly_str(f), ring) == f);
  }
  CHECK(poly_str(parse_polynomial_text("a*x^2 - 1/2*y", ring)) ==
        "a*x^2 - 1/2*y");
}

TEST_CASE("ring mismatch is a structural error") {
  auto r1 = Ring::plain(Field::rationals(), {"x"}, Primitive::Lex);
  auto r2 = Ring::plain(Field::rationals(), {"y"}, Primitive::Lex);
  Polynomial f = Polynomial::variable(r1, 0);
  Polynomial g = Polynomial::variable(r2, 0);
  CHECK_THROWS_AS(f + g, structural_error);
  CHECK_THROWS_AS(f * g, structural_error);
}
