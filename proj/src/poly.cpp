#include "runcube/poly.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "runcube/errors.hpp"

namespace runcube {

Vars::Vars(std::initializer_list<std::string> names) : Vars(std::vector<std::string>(names)) {}

Vars::Vars(std::vector<std::string> names) {
  if (names.size() > kMaxVars)
    throw RegistryError("at most " + std::to_string(kMaxVars) + " variables are supported");
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw RegistryError("empty variable name");
    for (std::size_t j = 0; j < i; ++j)
      if (names[i] == names[j]) throw RegistryError("duplicate variable '" + names[i] + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<std::size_t> Vars::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i)
    if ((*names_)[i] == name) return i;
  return std::nullopt;
}

std::size_t Vars::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw RegistryError("variable '" + std::string(name) + "' is not registered");
}

Monomial Monomial::from_exponents(std::span<const unsigned> exponents) {
  if (exponents.size() > kMaxVars) throw RegistryError("too many exponents");
  Monomial m;
  for (std::size_t i = 0; i < exponents.size(); ++i) m = m.with_exponent(i, exponents[i]);
  return m;
}

Monomial Monomial::with_exponent(std::size_t var, unsigned e) const {
  if (e > kMaxExponent) throw ResourceError("exponent " + std::to_string(e) + " overflows");
  const std::uint64_t mask = std::uint64_t{kMaxExponent} << (kExponentBits * var);
  return Monomial((key_ & ~mask) | (std::uint64_t{e} << (kExponentBits * var)));
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) d += exponent(i);
  return d;
}

namespace {

bool key_less(const MultiPoly::Term& a, const MultiPoly::Term& b) {
  return a.first.key() < b.first.key();
}

std::array<unsigned, kMaxVars> max_exponents(const MultiPoly& p) {
  std::array<unsigned, kMaxVars> m{};
  for (const auto& [mono, c] : p.terms())
    for (std::size_t i = 0; i < kMaxVars; ++i) m[i] = std::max(m[i], mono.exponent(i));
  return m;
}

}  // namespace

MultiPoly::MultiPoly(Vars vars, const mpz_class& constant) : vars_(std::move(vars)) {
  if (constant != 0) terms_.emplace_back(Monomial{}, constant);
}

MultiPoly MultiPoly::variable(const Vars& vars, std::string_view name) {
  return monomial(vars, 1, Monomial{}.with_exponent(vars.index(name), 1));
}

MultiPoly MultiPoly::monomial(const Vars& vars, const mpz_class& c, Monomial m) {
  MultiPoly p(vars);
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

MultiPoly MultiPoly::from_terms(Vars vars, std::vector<Term> terms) {
  MultiPoly p(std::move(vars));
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void MultiPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(), key_less);
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().first == t.first)
      merged.back().second += t.second;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const Term& t) { return t.second == 0; });
  terms_ = std::move(merged);
}

void MultiPoly::require_same_vars(const MultiPoly& other) const {
  if (!(vars_ == other.vars_)) throw RegistryError("polynomials use different variable registries");
}

mpz_class MultiPoly::coefficient(Monomial m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{m, 0}, key_less);
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().first == Monomial{});
}

unsigned MultiPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.exponent(var));
  return d;
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.total_degree());
  return d;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  require_same_vars(other);
  if (other.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first.key() < b->first.key())) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first.key() < a->first.key()) {
      merged.push_back(*b++);
    } else {
      mpz_class s = a->second + b->second;
      if (s != 0) merged.emplace_back(a->first, std::move(s));
      ++a, ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) { return *this += -other; }

MultiPoly& MultiPoly::operator*=(const mpz_class& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_same_vars(b);
  MultiPoly r(a.vars_);
  if (a.is_zero() || b.is_zero()) return r;
  const auto ma = max_exponents(a);
  const auto mb = max_exponents(b);
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (ma[i] + mb[i] > kMaxExponent) throw ResourceError("exponent overflow in product");
  if (a.size() == 1 || b.size() == 1) {
    const MultiPoly& single = a.size() == 1 ? a : b;
    const MultiPoly& other = a.size() == 1 ? b : a;
    const auto& [m, c] = single.terms_.front();
    r.terms_.reserve(other.size());
    for (const auto& t : other.terms_) r.terms_.emplace_back(t.first * m, t.second * c);
    return r;  // sorted: adding a constant key preserves order
  }
  std::unordered_map<std::uint64_t, mpz_class> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& [m1, c1] : a.terms_)
    for (const auto& [m2, c2] : b.terms_) {
      mpz_class& slot = acc[(m1 * m2).key()];
      mpz_addmul(slot.get_mpz_t(), c1.get_mpz_t(), c2.get_mpz_t());
    }
  r.terms_.reserve(acc.size());
  for (auto& [k, c] : acc)
    if (c != 0) r.terms_.emplace_back(Monomial(k), std::move(c));
  std::sort(r.terms_.begin(), r.terms_.end(), key_less);
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  a.require_same_vars(b);
  return a.terms_ == b.terms_;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(vars_, 1);
  MultiPoly base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::substitute(std::string_view var, const mpz_class& c, Monomial m) const {
  const std::size_t v = vars_.index(var);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [mono, coeff] : terms_) {
    const unsigned e = mono.exponent(v);
    Monomial image = mono.with_exponent(v, 0);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      const unsigned add = m.exponent(i) * e;
      image = image.with_exponent(i, image.exponent(i) + add);
    }
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), c.get_mpz_t(), e);
    out.emplace_back(image, coeff * scale);
  }
  return from_terms(vars_, std::move(out));
}

MultiPoly MultiPoly::partial_derivative(std::string_view var) const {
  const std::size_t v = vars_.index(var);
  std::vector<Term> out;
  for (const auto& [mono, coeff] : terms_) {
    const unsigned e = mono.exponent(v);
    if (e == 0) continue;
    out.emplace_back(mono.with_exponent(v, e - 1), coeff * e);
  }
  return from_terms(vars_, std::move(out));
}

MultiPoly MultiPoly::evaluate_at(std::string_view var, const mpz_class& value) const {
  const std::size_t v = vars_.index(var);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [mono, coeff] : terms_) {
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), value.get_mpz_t(), mono.exponent(v));
    out.emplace_back(mono.with_exponent(v, 0), coeff * scale);
  }
  return from_terms(vars_, std::move(out));
}

MultiPoly MultiPoly::compose(const Vars& target, std::span<const MultiPoly> images) const {
  if (images.size() != vars_.size())
    throw RegistryError("composition needs one image per variable");
  for (const auto& img : images)
    if (!(img.vars() == target)) throw RegistryError("composition image over the wrong registry");
  // Cache powers of each image; exponents here stay small.
  std::vector<std::vector<MultiPoly>> powers(vars_.size());
  MultiPoly result(target);
  for (const auto& [mono, coeff] : terms_) {
    MultiPoly term(target, coeff);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      const unsigned e = mono.exponent(i);
      if (e == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.emplace_back(target, 1);
      while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
      term = term * cache[e];
    }
    result += term;
  }
  return result;
}

MultiPoly MultiPoly::remap(const Vars& target,
                           std::initializer_list<std::pair<std::string, MultiPoly>> images) const {
  std::vector<MultiPoly> imgs;
  imgs.reserve(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto it = std::find_if(images.begin(), images.end(),
                                 [&](const auto& kv) { return kv.first == vars_.name(i); });
    if (it != images.end())
      imgs.push_back(it->second);
    else
      imgs.push_back(variable(target, vars_.name(i)));
  }
  return compose(target, imgs);
}

std::vector<MultiPoly::Term> MultiPoly::graded_terms() const {
  std::vector<Term> sorted = terms_;
  const std::size_t n = vars_.size();
  std::sort(sorted.begin(), sorted.end(), [n](const Term& a, const Term& b) {
    const unsigned da = a.first.total_degree();
    const unsigned db = b.first.total_degree();
    if (da != db) return da < db;
    for (std::size_t i = 0; i < n; ++i) {
      const unsigned ea = a.first.exponent(i);
      const unsigned eb = b.first.exponent(i);
      if (ea != eb) return ea > eb;
    }
    return false;
  });
  return sorted;
}

std::string MultiPoly::monomial_string(Monomial m) const {
  std::string s;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const unsigned e = m.exponent(i);
    if (e == 0) continue;
    if (!s.empty()) s += '*';
    s += vars_.name(i);
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : graded_terms()) {
    const mpz_class mag = abs(c);
    if (out.empty()) out += sgn(c) < 0 ? "-" : "";
    else out += sgn(c) < 0 ? " - " : " + ";
    if (m == Monomial{}) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + '*';
    out += monomial_string(m);
  }
  return out;
}

nlohmann::json MultiPoly::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, c] : graded_terms()) {
    nlohmann::json exps = nlohmann::json::array();
    for (std::size_t i = 0; i < vars_.size(); ++i) exps.push_back(m.exponent(i));
    arr.push_back({exps, c.get_str()});
  }
  return arr;
}

std::string first_difference(const MultiPoly& expected, const MultiPoly& actual) {
  const MultiPoly diff = actual - expected;
  if (diff.is_zero()) return {};
  const Monomial m = diff.graded_terms().front().first;
  return "coefficient of " + expected.monomial_string(m) + ": expected " +
         expected.coefficient(m).get_str() + ", got " + actual.coefficient(m).get_str();
}

// ---------------------------------------------------------------------------
// Expression parser

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Vars& vars) : text_(text), vars_(vars) {}

  MultiPoly parse() {
    MultiPoly p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ValidationError("cannot parse polynomial \"" + std::string(text_) + "\" at offset " +
                          std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  // Longest registered name at the cursor.
  std::optional<std::size_t> match_variable() const {
    std::optional<std::size_t> best;
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      const std::string& n = vars_.name(i);
      if (n.size() > best_len && text_.substr(pos_, n.size()) == n) {
        best = i;
        best_len = n.size();
      }
    }
    return best;
  }

  bool starts_factor() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || match_variable().has_value();
  }

  MultiPoly expression() {
    MultiPoly acc(vars_);
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    acc = negate ? -term() : term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  MultiPoly term() {
    MultiPoly acc = power();
    for (;;) {
      if (accept('*'))
        acc = acc * power();
      else if (starts_factor())
        acc = acc * power();
      else
        return acc;
    }
  }

  MultiPoly power() {
    MultiPoly base = primary();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      return base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  MultiPoly primary() {
    skip_space();
    if (accept('(')) {
      MultiPoly inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return MultiPoly(vars_, mpz_class(std::string(text_.substr(start, pos_ - start))));
    }
    if (auto v = match_variable()) {
      pos_ += vars_.name(*v).size();
      return MultiPoly::monomial(vars_, 1, Monomial{}.with_exponent(*v, 1));
    }
    fail("expected a number, variable or '('");
  }

  std::string_view text_;
  const Vars& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text, const Vars& vars) {
  return Parser(text, vars).parse();
}

}  // namespace runcube
