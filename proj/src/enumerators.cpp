#include "runcube/enumerators.hpp"

#include <map>

#include "runcube/errors.hpp"

namespace runcube::enumerators {

const Vars& updown_vars() {
  static const Vars vars{"u", "d"};
  return vars;
}

const Vars& degree_vars() {
  static const Vars vars{"x"};
  return vars;
}

const Vars& word_vars() {
  static const Vars vars{"X", "Y", "alpha", "beta"};
  return vars;
}

RationalGF updown_gf() {
  return RationalGF::parse(
      "(d+u)t - d(u-2)t^2 + (d^2-d-2u)t^3 - (d-2)d(u-2)t^4"
      " - (d-1)(u-d+du)t^5 - d(d+u-2)t^6 + d(1-2d+2d^2+du-2d^2u)t^7"
      " - 2(d-1)d^2(u-1)t^8 - (d-1)d^2(d+1)(u-1)t^9 - (d-1)^2d^2(u-1)t^10"
      " - (d-1)^2d^2(u-1)t^11",
      "1 - ut - 2t^2 + (2u-d)t^3 + t^4 + (2d-d^2-u)t^5 + d(du-1)t^7"
      " + 2(d-1)d^2(u-1)t^9 + (d-1)^2d^2(u-1)t^11",
      updown_vars());
}

RationalGF degree_gf() {
  return RationalGF::parse(
      "xt(2 - (x-2)t + (x-3)t^2 - (x-2)^2t^3 - x(x-1)t^4 - 2(x-1)t^5"
      " - (x-1)(2x^2-x+1)t^6 - 2x(x-1)^2t^7 - x(x-1)^2(x+1)t^8"
      " - x(x-1)^3t^9 - x(x-1)^3t^10)",
      "1 - xt - 2t^2 + xt^3 + t^4 - x(x-1)t^5 + x(x-1)(x+1)t^7"
      " + 2x^2(x-1)^2t^9 + x^2(x-1)^3t^11",
      degree_vars());
}

RationalGF down_gf() {
  return RationalGF::parse("t(1 + d + dt + (d^2-1)t^2 + d(d-1)t^3 + d(d-1)t^4)",
                           "1 - t - t^2 - (d-1)t^3 - d(d-1)t^5", updown_vars());
}

RationalGF up_gf() {
  return RationalGF::parse("t(1 + u - (u-2)t - 2ut^2 + t^3 - (u-1)t^5 - (u-1)t^6)",
                           "1 - ut - 2t^2 + (2u-1)t^3 + t^4 - (u-1)t^5 + (u-1)t^7", updown_vars());
}

RationalGF up_gf_corrected() {
  return RationalGF::parse("t(1 + u - (u-2)t - 2ut^2 + (u-2)t^3 - (u-1)t^5 - (u-1)t^6)",
                           "1 - ut - 2t^2 + (2u-1)t^3 + t^4 - (u-1)t^5 + (u-1)t^7", updown_vars());
}

RationalGF down_gf_derivative() {
  return RationalGF::parse("t(1-t^2)(1+(2d-1)t^2)", "(1 - t - t^2 - (d-1)t^3 - d(d-1)t^5)^2",
                           updown_vars());
}

RationalGF edge_gf() { return RationalGF::parse("t(1-t^4)", "(1-t-t^2)^2", updown_vars()); }

RationalGF maximal_gf() {
  return RationalGF::parse("t(1+2t-2t^3+t^5+t^6)", "1 - 2t^2 - t^3 + t^4 + t^5 - t^7",
                           updown_vars());
}

namespace {

MultiPoly from_counts(const std::map<std::pair<int, int>, std::uint64_t>& counts) {
  std::vector<MultiPoly::Term> terms;
  for (const auto& [key, c] : counts) {
    const unsigned exps[] = {static_cast<unsigned>(key.first), static_cast<unsigned>(key.second)};
    terms.emplace_back(Monomial::from_exponents(exps), mpz_class(std::to_string(c)));
  }
  return MultiPoly::from_terms(updown_vars(), std::move(terms));
}

std::string n_label(int n) { return "n=" + std::to_string(n); }

void compare(Report& report, const std::string& label, const MultiPoly& expected, const MultiPoly& actual) {
  const std::string diff = first_difference(expected, actual);
  report.add(label, diff.empty(), diff);
}

void compare(Report& report, const std::string& label, const TruncatedSeries& expected,
             const TruncatedSeries& actual) {
  const SeriesMismatch m = first_mismatch(expected, actual);
  report.add(label, !m, m.detail);
}

}  // namespace

MultiPoly census_polynomial(const DegreeCensus& census) { return from_counts(census.counts); }

MultiPoly updown_polynomial(int n, const CensusOptions& options) {
  return census_polynomial(degree_census(n, options));
}

MultiPoly to_degree_polynomial(const MultiPoly& updown) {
  const MultiPoly x = MultiPoly::variable(degree_vars(), "x");
  return updown.remap(degree_vars(), {{"u", x}, {"d", x}});
}

MultiPoly degree_polynomial(int n, const CensusOptions& options) {
  return to_degree_polynomial(updown_polynomial(n, options));
}

TruncatedSeries gf_updown_closed(int order) { return expand_rational(updown_gf(), order); }

TruncatedSeries gf_degree_closed(int order) { return expand_rational(degree_gf(), order); }

const TruncatedSeries& CaseSeries::by_case(CaseTag tag) const {
  switch (tag) {
    case CaseTag::A: return a;
    case CaseTag::B: return b;
    case CaseTag::C: return c;
    case CaseTag::D: return d;
    case CaseTag::E: break;
  }
  return e;
}

CaseSeries assemble_case_gfs(int order) {
  if (order < 1) throw PreconditionError("case assembly needs order >= 1");
  const int T = order + 2;
  const Vars& vars = updown_vars();
  auto S = [&](const char* text) { return series_from_text(text, vars, T); };

  const TruncatedSeries one = S("1");
  const TruncatedSeries t = S("t");
  const TruncatedSeries geo = compose_geometric(S("ut"));  // 1/(1-ut)
  const TruncatedSeries geo2 = geo * geo;

  // Up/down series of the S-words 100, 11000, ...
  const TruncatedSeries G = S("dt^3") + S("d^2t^5").divide_by(S("1-t^2"));
  const TruncatedSeries alpha = S("ut") * geo;
  const TruncatedSeries beta = t * geo;
  const TruncatedSeries X = G;
  const TruncatedSeries Y = G * G * compose_geometric(G);
  const TruncatedSeries W = compose_geometric(alpha * X + beta * Y);

  // Pre-run followed by a single S-word (and then 0), or by two or more S-words.
  const TruncatedSeries pre_single = S("1+ut") + S("ut^2") * geo;
  const TruncatedSeries pre_multi = S("1+t") + S("t^2") * geo;
  // Post-run after a multi-word block. After a single word the post-run weight is
  // u^{-1}/(1-ut); it always multiplies alpha and u^{-1} alpha = beta.
  const TruncatedSeries post_multi = one + t * geo;

  CaseSeries cs{.a = pre_single * geo * beta * X * X * W,
                .b = pre_multi * geo * beta * X * Y * W,
                .c = pre_single * post_multi * beta * X * Y * W,
                .d = pre_multi * post_multi * beta * Y * Y * W,
                .e = one,
                .e_all_zero = t + S("t^2") * geo,
                .e_single = (one + S("2t") * geo + S("t^2") * geo2) * G,
                .e_multi = (S("1+t") + S("t+t^2") * geo + S("t^2") * geo + S("t^3") * geo2) * Y,
                .e_printed = one,
                .gfx = one,
                .gf = one};
  cs.e = cs.e_all_zero + cs.e_single + cs.e_multi;
  const TruncatedSeries p = S("1+(1-u)t");
  cs.e_printed = t * p * geo + p * p * geo2 * G + p * S("1+(1-u)t+(1-u)t^2") * geo2 * Y;
  cs.gfx = cs.a + cs.b + cs.c + cs.d + cs.e;
  cs.gf = (cs.gfx - S("t+t^2")).shift_divide_by_t_power(2);
  return cs;
}

CaseCensus census_by_case(int length) {
  std::array<std::map<std::pair<int, int>, std::uint64_t>, 5> cases;
  std::array<std::map<std::pair<int, int>, std::uint64_t>, 3> e_sub;
  for_each_rc(length, [&](const Word& w) {
    const RunDecomposition dec = decompose(w);
    const Degrees deg = flip_degrees(w);
    ++cases[static_cast<std::size_t>(dec.case_tag)][{deg.up, deg.down}];
    if (dec.case_tag == CaseTag::E) ++e_sub[static_cast<std::size_t>(dec.e_subclass() - 1)][{deg.up, deg.down}];
  });
  CaseCensus out;
  for (std::size_t i = 0; i < 5; ++i) out.by_case[i] = from_counts(cases[i]);
  for (std::size_t i = 0; i < 3; ++i) out.e_subclass[i] = from_counts(e_sub[i]);
  return out;
}

Report case_assembly_check(int order, int max_length) {
  Report report("case assembly");
  const CaseSeries cs = assemble_case_gfs(order);
  compare(report, "GF from cases A-E equals the closed form through t^" + std::to_string(order),
          gf_updown_closed(order), cs.gf);
  compare(report, "E1 + E2 + E3 equals the combined case-E closed form", cs.e_printed, cs.e);
  const int top = std::min(max_length, order + 2);
  for (int m = 1; m <= top; ++m) {
    const CaseCensus census = census_by_case(m);
    for (CaseTag tag : {CaseTag::A, CaseTag::B, CaseTag::C, CaseTag::D, CaseTag::E})
      compare(report, std::string("case ") + to_char(tag) + " length " + std::to_string(m),
              census.by_case[static_cast<std::size_t>(tag)], cs.by_case(tag)[m]);
    const TruncatedSeries* subs[] = {&cs.e_all_zero, &cs.e_single, &cs.e_multi};
    for (std::size_t i = 0; i < 3; ++i)
      compare(report, "case E" + std::to_string(i + 1) + " length " + std::to_string(m),
              census.e_subclass[i], (*subs[i])[m]);
  }
  return report;
}

MultiPoly word_monomial(const std::string& word) {
  unsigned a = 0, b = 0, to_a = 0, to_b = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] != 'a' && word[i] != 'b') throw ValidationError("word letters must be 'a' or 'b'");
    (word[i] == 'a' ? a : b) += 1;
    if (i > 0) (word[i] == 'a' ? to_a : to_b) += 1;
  }
  const unsigned exps[] = {a, b, to_a, to_b};
  return MultiPoly::monomial(word_vars(), 1, Monomial::from_exponents(exps));
}

Report word_sum_identity_check(int n_max) {
  if (n_max < 0 || n_max > 20) throw PreconditionError("word sums are enumerated for 0 <= n <= 20");
  Report report("word sums");
  const Vars& vars = word_vars();
  const MultiPoly step = MultiPoly::parse("alpha X + beta Y", vars);
  struct Bracket {
    char first, last;
    const char* prefix;
  };
  const Bracket brackets[] = {{'a', 'a', "alpha X^2"},
                              {'a', 'b', "beta X Y"},
                              {'b', 'a', "alpha X Y"},
                              {'b', 'b', "beta Y^2"}};
  for (const Bracket& br : brackets) {
    const std::string tag = std::string(1, br.first) + "w" + br.last;
    const MultiPoly prefix = MultiPoly::parse(br.prefix, vars);
    TruncatedSeries brute(vars, n_max);
    for (int n = 0; n <= n_max; ++n) {
      MultiPoly sum(vars);
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        std::string u(1, br.first);
        for (int i = n - 1; i >= 0; --i) u += ((bits >> i) & 1U) ? 'b' : 'a';
        u += br.last;
        sum += word_monomial(u);
      }
      compare(report, tag + " n=" + std::to_string(n), prefix * step.pow(static_cast<unsigned>(n)), sum);
      brute[n] = std::move(sum);
    }
    const RationalGF gf = RationalGF::parse(br.prefix, "1 - (alpha X + beta Y)t", vars);
    compare(report, tag + " summed over n <= " + std::to_string(n_max), expand_rational(gf, n_max), brute);
  }
  return report;
}

Report closed_form_vs_census(int n_max, const CensusOptions& options) {
  Report report("closed form vs census");
  const TruncatedSeries updown = gf_updown_closed(n_max);
  const TruncatedSeries degree = gf_degree_closed(n_max);
  for (int n = 1; n <= n_max; ++n) {
    const MultiPoly census = updown_polynomial(n, options);
    compare(report, "up-down " + n_label(n), census, updown[n]);
    compare(report, "degree " + n_label(n), to_degree_polynomial(census), degree[n]);
  }
  return report;
}

Report specialize_checks(int order) {
  Report report("specializations");
  const TruncatedSeries gf = gf_updown_closed(order);
  compare(report, "u := 1 gives the down-degree GF", expand_rational(down_gf(), order),
          gf.map([](const MultiPoly& p) { return p.evaluate_at("u", 1); }));
  const TruncatedSeries up = gf.map([](const MultiPoly& p) { return p.evaluate_at("d", 1); });
  compare(report, "d := 1 gives the up-degree GF as printed", expand_rational(up_gf(), order), up);
  compare(report, "d := 1 gives the up-degree GF with (u-2)t^3 in the numerator",
          expand_rational(up_gf_corrected(), order), up);
  compare(report, "u, d := x gives the degree GF", gf_degree_closed(order),
          gf.map(degree_vars(), [](const MultiPoly& p) { return to_degree_polynomial(p); }));
  const TruncatedSeries maximal = gf.map([](const MultiPoly& p) { return p.evaluate_at("u", 0).evaluate_at("d", 1); });
  compare(report, "u := 0, d := 1 gives the maximal-element GF", expand_rational(maximal_gf(), order), maximal);
  const long prefix[] = {1, 2, 2, 3, 5, 6, 10, 13, 20, 27, 40, 56, 80};
  std::string got;
  bool ok = true;
  for (int n = 1; n <= std::min<int>(order, 13); ++n) {
    const mpz_class c = maximal[n].constant_term();
    ok = ok && c == prefix[n - 1];
    got += (got.empty() ? "" : ",") + c.get_str();
  }
  report.add("maximal-element prefix 1,2,2,3,5,6,10,13,20,27,40,56,80", ok && order >= 13, got);
  return report;
}

Report edge_gf_check(int order) {
  Report report("edge GF");
  const TruncatedSeries edges = expand_rational(edge_gf(), order);
  const TruncatedSeries down_d = expand_rational(down_gf(), order).map([](const MultiPoly& p) {
    return p.partial_derivative("d");
  });
  compare(report, "d/dd of the down-degree GF matches its closed form",
          expand_rational(down_gf_derivative(), order), down_d);
  compare(report, "d/dd of the down-degree GF at d = 1", edges,
          down_d.map([](const MultiPoly& p) { return p.evaluate_at("d", 1); }));
  auto du_at_1 = [](const MultiPoly& p) { return p.partial_derivative("u").evaluate_at("u", 1); };
  compare(report, "d/du of the up-degree GF as printed at u = 1", edges,
          expand_rational(up_gf(), order).map(du_at_1));
  compare(report, "d/du of the up-degree GF with (u-2)t^3 at u = 1", edges,
          expand_rational(up_gf_corrected(), order).map(du_at_1));
  if (order >= 1) report.add("t^1 coefficient is 1", edges[1].constant_term() == 1 && edges[1].is_constant());
  for (int n = 5; n <= order; ++n) {
    const mpz_class closed = closed_form_edge_count(n);
    const mpz_class series = edges[n].constant_term();
    report.add("closed-form edge count " + n_label(n), closed == series,
               "closed form " + closed.get_str() + ", series " + series.get_str());
  }
  return report;
}

std::vector<mpz_class> degree_k_series(int k, int order) {
  if (k < 0) throw DomainError("degree k must be nonnegative");
  const TruncatedSeries f = gf_degree_closed(order);
  const unsigned exps[] = {static_cast<unsigned>(k)};
  const Monomial xk = Monomial::from_exponents(exps);
  std::vector<mpz_class> a(static_cast<std::size_t>(order + 1));
  for (int n = 0; n <= order; ++n) a[static_cast<std::size_t>(n)] = f[n].coefficient(xk);
  return a;
}

Report degree_k_laws_check(int order) {
  Report report("degree-k laws");
  const auto law = [&](int k, int from, auto value) {
    const std::vector<mpz_class> a = degree_k_series(k, order);
    for (int n = from; n <= order; ++n) {
      const mpz_class expected = value(n);
      const mpz_class& got = a[static_cast<std::size_t>(n)];
      if (got != expected) {
        report.add("degree " + std::to_string(k) + " for n >= " + std::to_string(from), false,
                   "n=" + std::to_string(n) + ": expected " + expected.get_str() + ", got " + got.get_str());
        return;
      }
    }
    report.add("degree " + std::to_string(k) + " for " + std::to_string(from) + " <= n <= " + std::to_string(order), true);
  };
  law(2, 8, [](int) { return mpz_class(2); });
  law(3, 11, [](int n) { return mpz_class(n % 2 ? 10 : 8); });
  law(4, 15, [](int n) { return mpz_class(n % 2 ? 2 * n + 9 : 3 * n / 2 + 21); });
  law(5, 18, [](int n) { return mpz_class(n % 2 ? 9 * n - 1 : 12 * n - 48); });

  // Printed polynomial parts of the degree-2, 3 and 4 series.
  const std::vector<std::pair<int, std::vector<int>>> prefixes = {
      {2, {0, 0, 1, 3, 5, 5, 4, 3}},
      {3, {0, 0, 0, 1, 2, 5, 8, 12, 14, 14, 10}},
      {4, {0, 0, 0, 0, 1, 2, 6, 9, 16, 24, 39, 42, 46, 39, 43}},
  };
  for (const auto& [k, expected] : prefixes) {
    const std::vector<mpz_class> a = degree_k_series(k, order);
    std::string detail;
    for (std::size_t n = 0; n < expected.size() && n < a.size() && detail.empty(); ++n)
      if (a[n] != expected[n])
        detail = "t^" + std::to_string(n) + ": expected " + std::to_string(expected[n]) + ", got " + a[n].get_str();
    report.add("degree " + std::to_string(k) + " series prefix", detail.empty(), detail);
  }
  return report;
}

PkProbe conjecture_pk_probe(int k, int order) {
  if (k < 0) throw DomainError("degree k must be nonnegative");
  PkProbe probe;
  probe.k = k;
  probe.order = order;
  probe.conjectured_degree = k % 2 == 0 ? (15 * k + 8) / 2 : (15 * k + 7) / 2;
  const std::vector<mpz_class> a = degree_k_series(k, order);
  // (1 - t^2)^{k+1} = sum_j (-1)^j C(k+1, j) t^{2j}
  probe.coefficients.assign(a.size(), 0);
  for (int j = 0; j <= k + 1; ++j) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k + 1), static_cast<unsigned long>(j));
    if (j % 2 == 1) binom = -binom;
    for (int n = 2 * j; n <= order; ++n)
      probe.coefficients[static_cast<std::size_t>(n)] += binom * a[static_cast<std::size_t>(n - 2 * j)];
  }
  probe.residual_zero = true;
  for (int n = 0; n <= order; ++n) {
    if (probe.coefficients[static_cast<std::size_t>(n)] == 0) continue;
    probe.observed_degree = n;
    if (n > probe.conjectured_degree) probe.residual_zero = false;
  }
  return probe;
}

MultiPoly degree_recurrence_rhs(std::span<const MultiPoly> g, int n) {
  if (n < 12 || static_cast<std::size_t>(n) > g.size()) throw PreconditionError("recurrence needs g_1..g_{n-1} and n >= 12");
  struct Term {
    int lag;
    const char* coefficient;
  };
  static const Term terms[] = {{1, "x"},          {2, "2"},        {3, "-x"},
                               {4, "-1"},         {5, "x(x-1)"},   {7, "-x(x^2-1)"},
                               {9, "-2x^2(x-1)^2"}, {11, "-x^2(x-1)^3"}};
  MultiPoly rhs(degree_vars());
  for (const Term& term : terms)
    rhs += MultiPoly::parse(term.coefficient, degree_vars()) * g[static_cast<std::size_t>(n - term.lag)];
  return rhs;
}

Report recurrence_check(int n_max) {
  if (n_max < 12) throw PreconditionError("recurrence check needs n_max >= 12");
  Report report("degree recurrence");
  const TruncatedSeries f = gf_degree_closed(n_max);
  const std::vector<MultiPoly>& g = f.coefficients();
  for (int n = 12; n <= n_max; ++n)
    compare(report, n_label(n), g[static_cast<std::size_t>(n)], degree_recurrence_rhs(g, n));
  return report;
}

}  // namespace runcube::enumerators
