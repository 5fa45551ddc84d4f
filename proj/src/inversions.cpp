#include "runcube/inversions.hpp"

#include <map>

#include "runcube/errors.hpp"
#include "runcube/poset.hpp"
#include "runcube/strings.hpp"

namespace runcube::inversions {

const Vars& inversion_vars() {
  static const Vars vars{"x", "q"};
  return vars;
}

MultiPoly q_polynomial(int n, std::uint64_t cap) {
  if (n < 0) throw DomainError("Q_n needs n >= 0");
  std::map<std::pair<unsigned, unsigned>, std::uint64_t> counts;
  for (const Word& w : enumerate_rc(n, cap))
    ++counts[{static_cast<unsigned>(w.weight()), static_cast<unsigned>(inversion_count(w))}];
  std::vector<MultiPoly::Term> terms;
  for (const auto& [key, c] : counts) {
    const unsigned exps[] = {key.first, key.second};
    terms.emplace_back(Monomial::from_exponents(exps), mpz_class(std::to_string(c)));
  }
  return MultiPoly::from_terms(inversion_vars(), std::move(terms));
}

TruncatedSeries h_series(int order) {
  TruncatedSeries h(inversion_vars(), order);
  for (int n = 0; n <= order; ++n) h[n] = q_polynomial(n);
  return h;
}

namespace {

Monomial x_power(unsigned k) {
  const unsigned exps[] = {k, 0};
  return Monomial::from_exponents(exps);
}

Monomial x_q_power(unsigned q_exp) {
  const unsigned exps[] = {1, q_exp};
  return Monomial::from_exponents(exps);
}

}  // namespace

MultiPoly recurrence_rhs(std::span<const MultiPoly> q, int n) {
  if (n < 1 || static_cast<std::size_t>(n) > q.size()) throw PreconditionError("recurrence needs Q_0..Q_{n-1} and n >= 1");
  MultiPoly rhs(inversion_vars());
  for (int k = 0; n - 1 - 2 * k >= 0; ++k) {
    const MultiPoly& prev = q[static_cast<std::size_t>(n - 1 - 2 * k)];
    rhs += prev.substitute("x", 1, x_q_power(static_cast<unsigned>(k + 1))) *
           MultiPoly::monomial(inversion_vars(), 1, x_power(static_cast<unsigned>(k)));
  }
  return rhs;
}

Report recurrence_check(int n_max) {
  if (n_max > 30) throw PreconditionError("inversion recurrence is enumerated for n <= 30");
  Report report("inversion recurrence");
  const TruncatedSeries h = h_series(n_max);
  for (int n = 1; n <= n_max; ++n) {
    const std::string diff = first_difference(h[n], recurrence_rhs(h.coefficients(), n));
    report.add("n=" + std::to_string(n), diff.empty(), diff);
  }
  return report;
}

TruncatedSeries functional_rhs(const TruncatedSeries& h) {
  const int order = h.order();
  TruncatedSeries rhs = TruncatedSeries::constant(MultiPoly(h.vars(), 1), order);
  for (int k = 0; 2 * k + 1 <= order; ++k) {
    const TruncatedSeries shifted = h.map([k](const MultiPoly& p) {
      return p.substitute("x", 1, x_q_power(static_cast<unsigned>(k + 1)));
    });
    const MultiPoly xk = MultiPoly::monomial(h.vars(), 1, x_power(static_cast<unsigned>(k)));
    rhs = rhs + (shifted * xk).shift_multiply_by_t_power(2 * k + 1);
  }
  return rhs;
}

Report functional_identity_check(int order) {
  if (order > 30) throw PreconditionError("functional identity is checked for order <= 30");
  Report report("inversion functional identity");
  const TruncatedSeries h = h_series(order);
  const SeriesMismatch m = first_mismatch(h, functional_rhs(h));
  report.add("H(x,t) = 1 + t sum_k x^k t^{2k} H(xq^{k+1}, t) through t^" + std::to_string(order), !m, m.detail);
  return report;
}

Report q1_specialization_check(int order) {
  if (order < 3) throw PreconditionError("q = 1 check needs order >= 3");
  Report report("inversions at q = 1");
  const Vars& vars = inversion_vars();
  const TruncatedSeries h1 = h_series(order).map([](const MultiPoly& p) { return p.evaluate_at("q", 1); });
  const SeriesMismatch hm = first_mismatch(expand_rational(RationalGF::parse("1 - xt^2", "1 - t - xt^2", vars), order), h1);
  report.add("H(x,t) at q = 1 equals (1 - xt^2)/(1 - t - xt^2)", !hm, hm.detail);

  const TruncatedSeries ranks = (h1 - series_from_text("1 + t + t^2", vars, order)).shift_divide_by_t_power(2);
  const SeriesMismatch rm = first_mismatch(expand_rational(RationalGF::parse("t(1 + x + xt)", "1 - t - xt^2", vars), order - 2), ranks);
  report.add("(H - 1 - t - t^2)/t^2 equals t(1 + x + xt)/(1 - t - xt^2)", !rm, rm.detail);

  const MultiPoly x = MultiPoly::variable(poset::rank_vars(), "x");
  const MultiPoly one(poset::rank_vars(), 1);
  for (int n = 1; n <= order - 2; ++n) {
    const MultiPoly from_h = ranks[n].remap(poset::rank_vars(), {{"x", x}, {"q", one}});
    const std::string diff = first_difference(poset::rank_polynomial(n), from_h);
    report.add("rank polynomial n=" + std::to_string(n), diff.empty(), diff);
  }
  return report;
}

}  // namespace runcube::inversions
