#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace runcube {

inline constexpr std::size_t kMaxVars = 5;
inline constexpr unsigned kExponentBits = 12;
inline constexpr unsigned kMaxExponent = (1U << kExponentBits) - 1;

// Ordered registry of variable names shared by the polynomials built over it.
class Vars {
 public:
  Vars() : names_(std::make_shared<const std::vector<std::string>>()) {}
  Vars(std::initializer_list<std::string> names);
  explicit Vars(std::vector<std::string> names);

  std::size_t size() const { return names_->size(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index(std::string_view name) const;  // throws RegistryError if absent

  friend bool operator==(const Vars& a, const Vars& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

// Exponent vector packed as five 12-bit fields; variable i lives in bits [12i, 12i+12).
class Monomial {
 public:
  constexpr Monomial() = default;
  constexpr explicit Monomial(std::uint64_t key) : key_(key) {}
  static Monomial from_exponents(std::span<const unsigned> exponents);

  constexpr std::uint64_t key() const { return key_; }
  constexpr unsigned exponent(std::size_t var) const {
    return static_cast<unsigned>((key_ >> (kExponentBits * var)) & kMaxExponent);
  }
  Monomial with_exponent(std::size_t var, unsigned e) const;
  unsigned total_degree() const;

  // Callers guarantee that no field overflows (see MultiPoly::operator*).
  constexpr Monomial operator*(Monomial other) const { return Monomial(key_ + other.key_); }
  friend constexpr bool operator==(Monomial, Monomial) = default;

 private:
  std::uint64_t key_ = 0;
};

// Sparse polynomial with arbitrary-precision integer coefficients. Terms are kept
// sorted by packed key with no zero coefficients, so equality is structural.
class MultiPoly {
 public:
  using Term = std::pair<Monomial, mpz_class>;

  MultiPoly() = default;
  explicit MultiPoly(Vars vars) : vars_(std::move(vars)) {}
  MultiPoly(Vars vars, const mpz_class& constant);

  static MultiPoly variable(const Vars& vars, std::string_view name);
  static MultiPoly monomial(const Vars& vars, const mpz_class& c, Monomial m);
  // Parses +, -, *, ^ (nonnegative integer powers), parentheses, integers, and
  // registered variable names; juxtaposition multiplies ("2du^2", "d(u-2)t^2").
  static MultiPoly parse(std::string_view text, const Vars& vars);
  // Builds from unsorted terms, merging duplicates and dropping zeros.
  static MultiPoly from_terms(Vars vars, std::vector<Term> terms);

  const Vars& vars() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  mpz_class coefficient(Monomial m) const;
  mpz_class constant_term() const { return coefficient(Monomial{}); }
  bool is_constant() const;
  unsigned degree_in(std::size_t var) const;
  unsigned total_degree() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const mpz_class& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const mpz_class& c) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly pow(unsigned e) const;

  // var -> c * m, where m is a monomial over the same registry.
  MultiPoly substitute(std::string_view var, const mpz_class& c, Monomial m) const;
  MultiPoly partial_derivative(std::string_view var) const;
  // var := value; the registry is unchanged and var no longer occurs.
  MultiPoly evaluate_at(std::string_view var, const mpz_class& value) const;
  // General composition: variable i of this polynomial becomes images[i], all over target.
  MultiPoly compose(const Vars& target, std::span<const MultiPoly> images) const;
  // Composition given by name; unnamed variables keep their name in target.
  MultiPoly remap(const Vars& target,
                  std::initializer_list<std::pair<std::string, MultiPoly>> images) const;

  // Graded-lex text: ascending total degree, ties by exponent vector in registry order
  // (higher power of the first variable first). Terms are "c*v^a*w^b" joined by " + " or " - ".
  std::string to_string() const;
  nlohmann::json to_json() const;
  std::vector<Term> graded_terms() const;
  std::string monomial_string(Monomial m) const;

 private:
  void require_same_vars(const MultiPoly& other) const;
  void normalize();

  Vars vars_;
  std::vector<Term> terms_;
};

// Human-readable description of the first term where the two differ, or empty when equal.
std::string first_difference(const MultiPoly& expected, const MultiPoly& actual);

}  // namespace runcube
