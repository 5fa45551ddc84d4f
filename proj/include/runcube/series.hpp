#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "runcube/poly.hpp"

namespace runcube {

inline constexpr int kDefaultOrder = 40;

// sum_{k=0}^{order} coeffs[k] t^k + O(t^{order+1}), coefficients over a shared registry.
class TruncatedSeries {
 public:
  TruncatedSeries(Vars vars, int order);
  TruncatedSeries(Vars vars, int order, std::vector<MultiPoly> coeffs);

  static TruncatedSeries constant(const MultiPoly& c, int order);
  // c * t^k
  static TruncatedSeries monomial(const MultiPoly& c, int k, int order);

  const Vars& vars() const { return vars_; }
  int order() const { return order_; }
  const MultiPoly& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  MultiPoly& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }
  const std::vector<MultiPoly>& coefficients() const { return coeffs_; }

  TruncatedSeries truncated(int order) const;

  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const MultiPoly& c);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

  // this / divisor; the divisor's constant coefficient must be the integer 1 or -1.
  TruncatedSeries divide_by(const TruncatedSeries& divisor) const;
  // this / t^k; coefficients 0..k-1 must vanish. The result has order order()-k.
  TruncatedSeries shift_divide_by_t_power(int k) const;
  // t^k * this, keeping the order.
  TruncatedSeries shift_multiply_by_t_power(int k) const;

  TruncatedSeries map(const std::function<MultiPoly(const MultiPoly&)>& f) const;
  TruncatedSeries map(const Vars& target, const std::function<MultiPoly(const MultiPoly&)>& f) const;

  std::string to_string(std::string_view var = "t") const;

 private:
  Vars vars_;
  int order_;
  std::vector<MultiPoly> coeffs_;
};

// 1 / (1 - s) for s with zero constant term.
TruncatedSeries compose_geometric(const TruncatedSeries& s);

// Index and description of the first coefficient where the two series differ, if any.
struct SeriesMismatch {
  int index = -1;
  std::string detail;
  explicit operator bool() const { return index >= 0; }
};
SeriesMismatch first_mismatch(const TruncatedSeries& expected, const TruncatedSeries& actual);

// Numerator / denominator, both polynomials in t with MultiPoly coefficients.
struct RationalGF {
  std::vector<MultiPoly> numerator;
  std::vector<MultiPoly> denominator;

  // Parses both sides over coeff_vars plus the series variable (which must not be in coeff_vars).
  static RationalGF parse(std::string_view numerator, std::string_view denominator,
                          const Vars& coeff_vars, std::string_view series_var = "t");

  const Vars& vars() const { return denominator.front().vars(); }
};

// Splits a polynomial containing series_var into its t-graded coefficients over coeff_vars.
std::vector<MultiPoly> split_by_variable(const MultiPoly& p, std::string_view series_var,
                                         const Vars& coeff_vars);

// S with S * D = N through the given order, via S_k = N_k - sum_{j>=1} D_j S_{k-j}.
TruncatedSeries expand_rational(const RationalGF& gf, int order);

// Expansion of a polynomial in t written as text.
TruncatedSeries series_from_text(std::string_view text, const Vars& coeff_vars, int order,
                                 std::string_view series_var = "t");

}  // namespace runcube
