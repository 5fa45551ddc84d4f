#pragma once

#include <cstdint>
#include <span>

#include "runcube/poly.hpp"
#include "runcube/report.hpp"
#include "runcube/series.hpp"

namespace runcube::inversions {

const Vars& inversion_vars();  // {x, q}

// Q_n(x, q) = sum over RC_n of x^{weight} q^{inversions}.
MultiPoly q_polynomial(int n, std::uint64_t cap = 50'000'000);

// H(x, t) = sum_{n <= order} Q_n t^n, from the brute-force polynomials.
TruncatedSeries h_series(int order);

// Q_n = sum_{k >= 0} x^k Q_{n-1-2k}(x q^{k+1}) for 1 <= n <= n_max.
MultiPoly recurrence_rhs(std::span<const MultiPoly> q, int n);
Report recurrence_check(int n_max);

// H(x, t) = 1 + t sum_k x^k t^{2k} H(x q^{k+1}, t) through the given order.
TruncatedSeries functional_rhs(const TruncatedSeries& h);
Report functional_identity_check(int order);

// q := 1 against (1 - x t^2)/(1 - t - x t^2) and the rank generating function.
Report q1_specialization_check(int order);

}  // namespace runcube::inversions
