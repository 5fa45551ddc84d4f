#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "runcube/graph.hpp"
#include "runcube/report.hpp"
#include "runcube/series.hpp"

namespace runcube::enumerators {

// Registries: (u, d) for up/down degrees, x for the total degree.
const Vars& updown_vars();
const Vars& degree_vars();

// Closed forms as printed, numerators with their missing closing parenthesis appended.
RationalGF updown_gf();         // GF(u, d; t) = N_{u,d} / D_{u,d}
RationalGF degree_gf();         // f(t, x) = N_x / D_x
RationalGF down_gf();           // u := 1 specialization, over (u, d)
RationalGF up_gf();             // d := 1 specialization as printed, over (u, d)
// The printed up-degree numerator has "+ t^3" inside t(...); Theorem-level d := 1 gives
// "+ (u-2)t^3". This is that reading, checked alongside the printed one.
RationalGF up_gf_corrected();
RationalGF down_gf_derivative();  // d/dd of down_gf, over (u, d)
RationalGF edge_gf();           // t(1 - t^4) / (1 - t - t^2)^2, over (u, d)
RationalGF maximal_gf();        // sum M_n t^n, over (u, d)

// sum_v u^{deg_up(v)} d^{deg_down(v)} over R_n, from the streamed census.
MultiPoly updown_polynomial(int n, const CensusOptions& options = {});
MultiPoly census_polynomial(const DegreeCensus& census);
// u, d := x
MultiPoly to_degree_polynomial(const MultiPoly& updown);
MultiPoly degree_polynomial(int n, const CensusOptions& options = {});

TruncatedSeries gf_updown_closed(int order = kDefaultOrder);
TruncatedSeries gf_degree_closed(int order = kDefaultOrder);

// The series built from the five structural cases of run-constrained words.
struct CaseSeries {
  TruncatedSeries a, b, c, d, e;
  TruncatedSeries e_all_zero, e_single, e_multi;  // the three subclasses of case E
  TruncatedSeries e_printed;                       // case E from its combined closed form
  TruncatedSeries gfx;                             // a + b + c + d + e (full word length)
  TruncatedSeries gf;                              // (gfx - t - t^2) / t^2

  const TruncatedSeries& by_case(CaseTag tag) const;
};

// Builds alpha, beta, X = G, Y = G^2/(1-G) and assembles every case through order + 2,
// so that gf is exact through the given order.
CaseSeries assemble_case_gfs(int order);

// Up/down polynomials of RC_m split by decompose's case tag, plus the E subclasses.
struct CaseCensus {
  std::array<MultiPoly, 5> by_case;
  std::array<MultiPoly, 3> e_subclass;
};
CaseCensus census_by_case(int length);

// Checks GF equality with the closed form and each case against its class census.
Report case_assembly_check(int order, int max_length);

// m(u) = X^{|u|_a} Y^{|u|_b} alpha^{|u|_aa + |u|_ba} beta^{|u|_ab + |u|_bb}, letters 'a'/'b'.
const Vars& word_vars();
MultiPoly word_monomial(const std::string& word);
Report word_sum_identity_check(int n_max);

Report closed_form_vs_census(int n_max, const CensusOptions& options = {});
Report specialize_checks(int order);
Report edge_gf_check(int order);

// a[n] = number of degree-k vertices of R_n, for n = 0..order (a[0] = 0).
std::vector<mpz_class> degree_k_series(int k, int order);

// Eventual closed forms of the degree-2..5 counts and the printed series prefixes.
Report degree_k_laws_check(int order);

struct PkProbe {
  int k = 0;
  int order = 0;
  std::vector<mpz_class> coefficients;  // of degree_k_series * (1 - t^2)^{k+1}, indices 0..order
  int conjectured_degree = 0;
  int observed_degree = -1;  // largest nonzero index, -1 for the zero series
  bool residual_zero = false;  // every coefficient beyond conjectured_degree vanishes
};
PkProbe conjecture_pk_probe(int k, int order);

// Right-hand side of the order-11 recurrence for g_n; g[i] holds g_i (g[0] unused).
MultiPoly degree_recurrence_rhs(std::span<const MultiPoly> g, int n);
Report recurrence_check(int n_max);

}  // namespace runcube::enumerators
