#pragma once

#include "norden/rational.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace norden {

/// Ordered list of parameter names shared between polynomials.
class ParameterList {
public:
  ParameterList() = default;
  /// Throws ParseError for duplicate or malformed names.
  explicit ParameterList(std::vector<std::string> names);

  const std::vector<std::string>& names() const noexcept;
  std::size_t size() const noexcept { return names_ ? names_->size() : 0; }
  bool empty() const noexcept { return size() == 0; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const ParameterList& a, const ParameterList& b);

private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Assignment of rational values to parameter names.
using Assignment = std::map<std::string, Rational, std::less<>>;

/// Multivariate polynomial over the rationals in a fixed, named list of
/// parameters. Terms are keyed by dense exponent vectors and iterated in
/// descending lexicographic order, which is also the printed order, so
/// two equal polynomials are structurally equal.
class Poly {
public:
  using Exponents = std::vector<unsigned>;
  using TermMap = std::map<Exponents, Rational, std::greater<>>;

  Poly() = default;
  Poly(const Rational& c); // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Rational(c)) {} // NOLINT(google-explicit-constructor)

  static Poly constant(const Rational& c, const ParameterList& params);
  /// The monomial consisting of a single parameter; throws if absent.
  static Poly variable(const ParameterList& params, std::string_view name);
  /// Builds from raw terms, dropping zero coefficients.
  static Poly from_terms(const ParameterList& params, TermMap terms);
  /// Parses the canonical text grammar; every variable must be in `params`.
  static Poly parse(std::string_view text, const ParameterList& params);

  const ParameterList& parameters() const noexcept { return params_; }
  const TermMap& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  /// True when no term has a positive exponent.
  bool is_constant() const;
  /// The value of a constant polynomial, or nullopt.
  std::optional<Rational> constant_value() const;
  /// Degree of the highest-degree term; -1 for the zero polynomial.
  int total_degree() const;
  /// True when every term has total degree `d` (the zero polynomial qualifies).
  bool is_homogeneous(unsigned d) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);
  /// Exact division by a nonzero rational.
  Poly& operator/=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator/(Poly a, const Rational& c) { return a /= c; }

  /// Structural equality; constants compare equal regardless of parameter list.
  friend bool operator==(const Poly& a, const Poly& b);

  /// Exact value under `values`; throws MissingParameter for any parameter
  /// that occurs in a term and is not assigned.
  Rational eval(const Assignment& values) const;
  /// eval() as a parameter-free constant polynomial.
  Poly substitute(const Assignment& values) const { return Poly(eval(values)); }

  /// Canonical text, e.g. "1/4*l2^2 + 1/4*l3^2", "-l2", "0".
  std::string to_string() const;

  /// Checks the representation invariants (no zero terms, exponent lengths
  /// match the parameter list, canonical coefficients).
  bool is_normalized() const;

private:
  Poly(ParameterList params, TermMap terms) : params_(std::move(params)), terms_(std::move(terms)) {}
  /// Re-expresses this polynomial over `params` (only valid for constants or equal lists).
  Poly promoted_to(const ParameterList& params) const;
  friend ParameterList common_parameters(const Poly& a, const Poly& b);

  ParameterList params_;
  TermMap terms_;
};

/// The parameter list two operands combine over. Constants are promoted
/// implicitly; differing lists with non-constant operands throw ParameterMismatch.
ParameterList common_parameters(const Poly& a, const Poly& b);

std::ostream& operator<<(std::ostream& os, const Poly& p);

} // namespace norden
