#include <doctest.h>

#include "oracles.hpp"
#include "runcube/inversions.hpp"
#include "runcube/poset.hpp"

using namespace runcube;
using namespace runcube::inversions;

namespace {

MultiPoly Q(const char* text) { return MultiPoly::parse(text, inversion_vars()); }

}  // namespace

TEST_CASE("printed Q_0 .. Q_7") {
  const char* const printed[] = {
      "1",
      "1",
      "1",
      "1 + x",
      "1 + (q+1)x",
      "1 + (q^2+q+1)x + x^2",
      "1 + (q^3+q^2+q+1)x + (2q^2+1)x^2",
      "1 + (q^4+q^3+q^2+q+1)x + (2q^4+q^3+2q^2+1)x^2 + x^3",
  };
  for (int n = 0; n <= 7; ++n) {
    CAPTURE(n);
    CHECK(q_polynomial(n) == Q(printed[n]));
  }
}

TEST_CASE("Q_n against string oracles") {
  for (int n = 0; n <= 16; ++n) {
    MultiPoly ref(inversion_vars());
    for (const auto& w : oracle::rc_words(n)) {
      const unsigned e[] = {static_cast<unsigned>(oracle::weight(w)), static_cast<unsigned>(oracle::coinversions(w))};
      ref += MultiPoly::monomial(inversion_vars(), 1, Monomial::from_exponents(e));
    }
    REQUIRE(q_polynomial(n) == ref);
  }
  for (int n = 1; n <= 25; ++n) {
    const MultiPoly q = q_polynomial(n);
    CHECK(q.evaluate_at("x", 1).evaluate_at("q", 1).constant_term() == fibonacci(n));
    CHECK(q.degree_in(0) == poset::rank_polynomial(std::max(n - 2, 0)).degree_in(0));
  }
}

TEST_CASE("recurrence") {
  std::vector<MultiPoly> q;
  for (int n = 0; n <= 3; ++n) q.push_back(q_polynomial(n));
  CHECK(recurrence_rhs(q, 3) == Q("1 + x"));
  CHECK(recurrence_rhs(q, 1) == Q("1"));
  const Report r = recurrence_check(25);
  CHECK_MESSAGE(r.passed(), r.to_text());
}

TEST_CASE("functional identity") {
  for (int order : {0, 7, 25}) {
    const Report r = functional_identity_check(order);
    CHECK_MESSAGE(r.passed(), r.to_text());
  }
}

TEST_CASE("q = 1") {
  const TruncatedSeries h = h_series(9);
  CHECK(h[9].evaluate_at("q", 1) == Q("1 + 7x + 15x^2 + 10x^3 + x^4"));
  const TruncatedSeries rank = expand_rational(RationalGF::parse("t(1 + x + xt)", "1 - t - xt^2", poset::rank_vars()), 3);
  CHECK(rank[1] == MultiPoly::parse("1 + x", poset::rank_vars()));
  CHECK(rank[2] == MultiPoly::parse("1 + 2x", poset::rank_vars()));
  CHECK(rank[3] == MultiPoly::parse("1 + 3x + x^2", poset::rank_vars()));
  const Report r = q1_specialization_check(25);
  CHECK_MESSAGE(r.passed(), r.to_text());
}
