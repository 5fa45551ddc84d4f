#include "runcube/series.hpp"

#include <algorithm>

#include "runcube/errors.hpp"

namespace runcube {

TruncatedSeries::TruncatedSeries(Vars vars, int order) : vars_(std::move(vars)), order_(order) {
  if (order < 0) throw PreconditionError("series order must be nonnegative");
  coeffs_.assign(static_cast<std::size_t>(order + 1), MultiPoly(vars_));
}

TruncatedSeries::TruncatedSeries(Vars vars, int order, std::vector<MultiPoly> coeffs)
    : TruncatedSeries(std::move(vars), order) {
  for (std::size_t k = 0; k < coeffs.size() && k < coeffs_.size(); ++k) {
    if (!(coeffs[k].vars() == vars_)) throw RegistryError("series coefficient over the wrong registry");
    coeffs_[k] = std::move(coeffs[k]);
  }
}

TruncatedSeries TruncatedSeries::constant(const MultiPoly& c, int order) {
  return monomial(c, 0, order);
}

TruncatedSeries TruncatedSeries::monomial(const MultiPoly& c, int k, int order) {
  TruncatedSeries s(c.vars(), order);
  if (k <= order) s.coeffs_[static_cast<std::size_t>(k)] = c;
  return s;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  if (order > order_) throw PreconditionError("cannot extend a series beyond its order");
  return TruncatedSeries(vars_, order, std::vector<MultiPoly>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

namespace {

void require_same_vars(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (!(a.vars() == b.vars())) throw RegistryError("series use different variable registries");
}

}  // namespace

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_vars(a, b);
  const int order = std::min(a.order_, b.order_);
  TruncatedSeries r(a.vars_, order);
  for (int k = 0; k <= order; ++k) r[k] = a[k] + b[k];
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_vars(a, b);
  const int order = std::min(a.order_, b.order_);
  TruncatedSeries r(a.vars_, order);
  for (int i = 0; i <= order; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= order; ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const MultiPoly& c) {
  TruncatedSeries r(a.vars_, a.order_);
  for (int k = 0; k <= a.order_; ++k) r[k] = a[k] * c;
  return r;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.order_ == b.order_ && a.vars_ == b.vars_ && a.coeffs_ == b.coeffs_;
}

TruncatedSeries TruncatedSeries::divide_by(const TruncatedSeries& divisor) const {
  require_same_vars(*this, divisor);
  const MultiPoly& lead = divisor[0];
  if (!lead.is_constant() || (lead.constant_term() != 1 && lead.constant_term() != -1))
    throw PreconditionError("divisor constant coefficient (index 0) is " + lead.to_string() +
                            ", not a unit");
  const mpz_class unit = lead.constant_term();
  const int order = std::min(order_, divisor.order_);
  TruncatedSeries q(vars_, order);
  for (int k = 0; k <= order; ++k) {
    MultiPoly acc = coeffs_[static_cast<std::size_t>(k)];
    for (int j = 1; j <= k; ++j) {
      if (divisor[j].is_zero() || q[k - j].is_zero()) continue;
      acc -= divisor[j] * q[k - j];
    }
    q[k] = acc * unit;
  }
  return q;
}

TruncatedSeries TruncatedSeries::shift_divide_by_t_power(int k) const {
  if (k < 0 || k > order_) throw PreconditionError("shift amount out of range");
  for (int i = 0; i < k; ++i)
    if (!coeffs_[static_cast<std::size_t>(i)].is_zero())
      throw PreconditionError("cannot divide by t^" + std::to_string(k) + ": coefficient " +
                              std::to_string(i) + " is " + coeffs_[static_cast<std::size_t>(i)].to_string());
  return TruncatedSeries(vars_, order_ - k, std::vector<MultiPoly>(coeffs_.begin() + k, coeffs_.end()));
}

TruncatedSeries TruncatedSeries::shift_multiply_by_t_power(int k) const {
  if (k < 0) throw PreconditionError("negative shift");
  TruncatedSeries r(vars_, order_);
  for (int i = 0; i + k <= order_; ++i) r[i + k] = coeffs_[static_cast<std::size_t>(i)];
  return r;
}

TruncatedSeries TruncatedSeries::map(const std::function<MultiPoly(const MultiPoly&)>& f) const {
  return map(vars_, f);
}

TruncatedSeries TruncatedSeries::map(const Vars& target,
                                     const std::function<MultiPoly(const MultiPoly&)>& f) const {
  TruncatedSeries r(target, order_);
  for (int k = 0; k <= order_; ++k) {
    MultiPoly c = f(coeffs_[static_cast<std::size_t>(k)]);
    if (!(c.vars() == target)) throw RegistryError("mapped coefficient over the wrong registry");
    r[k] = std::move(c);
  }
  return r;
}

std::string TruncatedSeries::to_string(std::string_view var) const {
  std::string out;
  for (int k = 0; k <= order_; ++k) {
    const MultiPoly& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    const std::string tk = k == 0 ? "" : (k == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(k));
    if (tk.empty())
      out += "(" + c.to_string() + ")";
    else if (c == MultiPoly(vars_, 1))
      out += tk;
    else
      out += "(" + c.to_string() + ")*" + tk;
  }
  if (out.empty()) out = "0";
  return out + " + O(" + std::string(var) + "^" + std::to_string(order_ + 1) + ")";
}

TruncatedSeries compose_geometric(const TruncatedSeries& s) {
  if (!s[0].is_zero())
    throw PreconditionError("geometric composition needs a zero constant coefficient (index 0)");
  TruncatedSeries one = TruncatedSeries::constant(MultiPoly(s.vars(), 1), s.order());
  return one.divide_by(one - s);
}

SeriesMismatch first_mismatch(const TruncatedSeries& expected, const TruncatedSeries& actual) {
  const int order = std::min(expected.order(), actual.order());
  for (int k = 0; k <= order; ++k) {
    if (expected[k] == actual[k]) continue;
    return {k, "t^" + std::to_string(k) + ": " + first_difference(expected[k], actual[k])};
  }
  return {};
}

std::vector<MultiPoly> split_by_variable(const MultiPoly& p, std::string_view series_var,
                                         const Vars& coeff_vars) {
  const Vars& full = p.vars();
  const std::size_t sv = full.index(series_var);
  std::vector<std::size_t> to_coeff(full.size());
  for (std::size_t i = 0; i < full.size(); ++i)
    if (i != sv) to_coeff[i] = coeff_vars.index(full.name(i));
  std::vector<std::vector<MultiPoly::Term>> graded(p.degree_in(sv) + 1);
  for (const auto& [m, c] : p.terms()) {
    Monomial cm;
    for (std::size_t i = 0; i < full.size(); ++i)
      if (i != sv) cm = cm.with_exponent(to_coeff[i], m.exponent(i));
    graded[m.exponent(sv)].emplace_back(cm, c);
  }
  std::vector<MultiPoly> out;
  out.reserve(graded.size());
  for (auto& terms : graded) out.push_back(MultiPoly::from_terms(coeff_vars, std::move(terms)));
  return out;
}

namespace {

Vars with_series_variable(const Vars& coeff_vars, std::string_view series_var) {
  if (coeff_vars.find(series_var)) throw RegistryError("series variable is also a coefficient variable");
  std::vector<std::string> names = coeff_vars.names();
  names.emplace_back(series_var);
  return Vars(std::move(names));
}

}  // namespace

RationalGF RationalGF::parse(std::string_view numerator, std::string_view denominator,
                             const Vars& coeff_vars, std::string_view series_var) {
  const Vars full = with_series_variable(coeff_vars, series_var);
  return {split_by_variable(MultiPoly::parse(numerator, full), series_var, coeff_vars),
          split_by_variable(MultiPoly::parse(denominator, full), series_var, coeff_vars)};
}

TruncatedSeries expand_rational(const RationalGF& gf, int order) {
  if (gf.denominator.empty() || gf.denominator.front() != MultiPoly(gf.vars(), 1))
    throw PreconditionError("denominator constant term must be 1");
  const Vars& vars = gf.vars();
  TruncatedSeries s(vars, order);
  const int num_deg = static_cast<int>(gf.numerator.size()) - 1;
  const int den_deg = static_cast<int>(gf.denominator.size()) - 1;
  for (int k = 0; k <= order; ++k) {
    MultiPoly acc = k <= num_deg ? gf.numerator[static_cast<std::size_t>(k)] : MultiPoly(vars);
    for (int j = 1; j <= std::min(k, den_deg); ++j) {
      const MultiPoly& dj = gf.denominator[static_cast<std::size_t>(j)];
      if (dj.is_zero() || s[k - j].is_zero()) continue;
      acc -= dj * s[k - j];
    }
    s[k] = std::move(acc);
  }
  return s;
}

TruncatedSeries series_from_text(std::string_view text, const Vars& coeff_vars, int order,
                                 std::string_view series_var) {
  const Vars full = with_series_variable(coeff_vars, series_var);
  return TruncatedSeries(coeff_vars, order,
                         split_by_variable(MultiPoly::parse(text, full), series_var, coeff_vars));
}

}  // namespace runcube
