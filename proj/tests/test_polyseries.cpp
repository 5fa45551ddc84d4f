#include <doctest.h>

#include <random>

#include "runcube/errors.hpp"
#include "runcube/poly.hpp"
#include "runcube/series.hpp"

using namespace runcube;

namespace {

const Vars ud{"u", "d"};
const Vars xq{"x", "q"};
const Vars uvw{"u", "v", "w"};

MultiPoly P(const char* text, const Vars& vars = ud) { return MultiPoly::parse(text, vars); }

MultiPoly random_poly(std::mt19937& rng, const Vars& vars, unsigned max_degree) {
  std::uniform_int_distribution<int> coef(-5, 5), deg(0, static_cast<int>(max_degree)), count(0, 6);
  std::vector<MultiPoly::Term> terms;
  for (int i = count(rng); i > 0; --i) {
    std::vector<unsigned> e(vars.size());
    for (auto& x : e) x = static_cast<unsigned>(deg(rng));
    terms.emplace_back(Monomial::from_exponents(e), coef(rng));
  }
  return MultiPoly::from_terms(vars, std::move(terms));
}

}  // namespace

TEST_CASE("parsing and printing") {
  CHECK(P("d + u").to_string() == "u + d");
  CHECK(P("3d^2 + 2du + 2du^2 + u^4").to_string() == "2*u*d + 3*d^2 + 2*u^2*d + u^4");
  CHECK(P("d(u-2)").to_string() == "-2*d + u*d");
  CHECK(P("-(u - 1)^2").to_string() == "-1 + 2*u - u^2");
  CHECK(P("0").to_string() == "0");
  CHECK(P("-u - 3d").to_string() == "-u - 3*d");
  CHECK(MultiPoly::parse("alpha X^2", Vars{"X", "Y", "alpha", "beta"}).to_string() == "X^2*alpha");
  CHECK_THROWS_AS(P("u + z"), ValidationError);
  CHECK_THROWS_AS(P("(u + d"), ValidationError);
  CHECK(P("2du^2").to_json().dump() == R"([[[2,1],"2"]])");
}

TEST_CASE("arithmetic") {
  CHECK(P("u + d").pow(2) == P("u^2 + 2ud + d^2"));
  CHECK(P("u - d") * P("u + d") == P("u^2 - d^2"));
  CHECK((P("u") - P("u")).is_zero());
  CHECK(P("2u") * mpz_class(3) == P("6u"));
  CHECK(P("7").is_constant());
  CHECK(P("u^3 d + d^2").degree_in(0) == 3);
  CHECK(P("u^3 d + d^2").total_degree() == 4);
  CHECK(P("5 + u").constant_term() == 5);
  CHECK_THROWS_AS(P("u") + MultiPoly::variable(xq, "x"), RegistryError);

  const MultiPoly big = P("u + 1").pow(80);
  CHECK(big.coefficient(Monomial::from_exponents(std::vector<unsigned>{40, 0})) ==
        mpz_class("107507208733336176461620"));
  CHECK_THROWS_AS(P("u^4000") * P("u^100"), ResourceError);
}

TEST_CASE("substitution, derivatives and evaluation") {
  CHECK(P("d^2 u").partial_derivative("d") == P("2du"));
  const MultiPoly q4 = MultiPoly::parse("1 + (q+1)x", xq);
  const Monomial xq2 = Monomial::from_exponents(std::vector<unsigned>{1, 2});
  CHECK(q4.substitute("x", 1, xq2) == MultiPoly::parse("1 + (q^3 + q^2)x", xq));
  CHECK(P("u^2 + ud").evaluate_at("u", 1) == P("1 + d"));
  CHECK(P("u^2 + ud").evaluate_at("d", -1) == P("u^2 - u"));

  const Vars x{"x"};
  const MultiPoly xpoly = MultiPoly::variable(x, "x");
  CHECK(P("u + 2d").remap(x, {{"u", xpoly}, {"d", xpoly}}) == MultiPoly::parse("3x", x));

  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const MultiPoly f = random_poly(rng, uvw, 5), g = random_poly(rng, uvw, 5);
    for (const char* v : {"u", "v", "w"}) {
      REQUIRE((f * g).partial_derivative(v) == f.partial_derivative(v) * g + f * g.partial_derivative(v));
    }
    // v -> v is the identity; x -> xq then q -> q agrees with a direct substitution.
    const std::size_t vi = 1;
    const Monomial v_itself = Monomial{}.with_exponent(vi, 1);
    REQUIRE(f.substitute("v", 1, v_itself) == f);
    const Monomial uv = Monomial{}.with_exponent(0, 1).with_exponent(1, 1);
    REQUIRE(f.substitute("u", 1, uv).substitute("v", 1, v_itself) == f.substitute("u", 1, uv));
    REQUIRE((f + g) * g == f * g + g * g);
  }
}

TEST_CASE("first_difference names the offending term") {
  CHECK(first_difference(P("u + d"), P("u + d")).empty());
  CHECK(first_difference(P("u + 2d"), P("u + d")) == "coefficient of d: expected 2, got 1");
}

TEST_CASE("rational expansion") {
  const Vars none{};
  auto coeffs = [](const TruncatedSeries& s) {
    std::vector<std::string> out;
    for (int k = 0; k <= s.order(); ++k) out.push_back(s[k].to_string());
    return out;
  };
  CHECK(coeffs(expand_rational(RationalGF::parse("1", "1 - t", none), 4)) ==
        std::vector<std::string>{"1", "1", "1", "1", "1"});
  CHECK(coeffs(expand_rational(RationalGF::parse("t(1 - t^4)", "(1 - t - t^2)^2", none), 3)) ==
        std::vector<std::string>{"0", "1", "2", "5"});
  CHECK_THROWS_AS(expand_rational(RationalGF::parse("1", "2 - t", none), 3), PreconditionError);

  // S * D = N through the order.
  const RationalGF gf = RationalGF::parse("t(1 + u + dt)", "1 - ut - dt^2 + u d t^3", ud);
  const TruncatedSeries s = expand_rational(gf, 20);
  TruncatedSeries d(ud, 20), n(ud, 20);
  for (std::size_t k = 0; k < gf.denominator.size() && k <= 20; ++k) d[static_cast<int>(k)] = gf.denominator[k];
  for (std::size_t k = 0; k < gf.numerator.size() && k <= 20; ++k) n[static_cast<int>(k)] = gf.numerator[k];
  CHECK(s * d == n);
}

TEST_CASE("series operations") {
  const Vars dv{"d"};
  const TruncatedSeries g = series_from_text("dt^3", dv, 7) +
                            expand_rational(RationalGF::parse("d^2 t^5", "1 - t^2", dv), 7);
  CHECK(g == series_from_text("dt^3 + d^2t^5 + d^2t^7", dv, 7));

  const TruncatedSeries geo = compose_geometric(g);
  CHECK(geo * (TruncatedSeries::constant(MultiPoly(dv, 1), 7) - g) == TruncatedSeries::constant(MultiPoly(dv, 1), 7));
  CHECK(geo.truncated(6) == series_from_text("1 + dt^3 + d^2t^5 + d^2 t^6", dv, 6));

  const Vars none{};
  const TruncatedSeries tt = series_from_text("t + t^2", none, 5);
  CHECK(tt.shift_divide_by_t_power(1) == series_from_text("1 + t", none, 4));
  CHECK_THROWS_AS(tt.shift_divide_by_t_power(2), PreconditionError);
  CHECK(tt.shift_multiply_by_t_power(2) == series_from_text("t^3 + t^4", none, 5));
  CHECK_THROWS_AS(compose_geometric(series_from_text("1 + t", none, 3)), PreconditionError);

  const TruncatedSeries one_minus_t = series_from_text("1 - t", none, 6);
  const TruncatedSeries q = tt.divide_by(one_minus_t);
  CHECK(q * one_minus_t == tt);

  // Mismatched orders truncate to the smaller one.
  CHECK((series_from_text("1", none, 3) + series_from_text("t", none, 5)).order() == 3);

  const SeriesMismatch m = first_mismatch(series_from_text("1 + t", none, 3), series_from_text("1 + 2t", none, 3));
  CHECK(m.index == 1);
  CHECK_FALSE(first_mismatch(tt, tt));
}
