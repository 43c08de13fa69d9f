#include "norden/poly.hpp"

#include "norden/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace norden {

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

const std::vector<std::string>& empty_names() {
  static const std::vector<std::string> empty;
  return empty;
}

} // namespace

ParameterList::ParameterList(std::vector<std::string> names) {
  std::set<std::string_view> seen;
  for (const auto& n : names) {
    if (!is_identifier(n)) throw ParseError("invalid parameter name '" + n + "'");
    if (!seen.insert(n).second) throw ParseError("duplicate parameter name '" + n + "'");
  }
  if (!names.empty()) names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

const std::vector<std::string>& ParameterList::names() const noexcept {
  return names_ ? *names_ : empty_names();
}

std::optional<std::size_t> ParameterList::index_of(std::string_view name) const {
  const auto& n = names();
  for (std::size_t i = 0; i < n.size(); ++i)
    if (n[i] == name) return i;
  return std::nullopt;
}

bool operator==(const ParameterList& a, const ParameterList& b) {
  if (a.names_ == b.names_) return true;
  return a.names() == b.names();
}

Poly::Poly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

Poly Poly::constant(const Rational& c, const ParameterList& params) {
  TermMap t;
  if (!c.is_zero()) t.emplace(Exponents(params.size(), 0u), c);
  return Poly(params, std::move(t));
}

Poly Poly::variable(const ParameterList& params, std::string_view name) {
  const auto idx = params.index_of(name);
  if (!idx) throw ParseError("unknown parameter '" + std::string(name) + "'");
  Exponents e(params.size(), 0u);
  e[*idx] = 1;
  TermMap t;
  t.emplace(std::move(e), Rational(1));
  return Poly(params, std::move(t));
}

Poly Poly::from_terms(const ParameterList& params, TermMap terms) {
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->first.size() != params.size())
      throw DimensionMismatch("exponent vector length does not match parameter count");
    it = it->second.is_zero() ? terms.erase(it) : std::next(it);
  }
  return Poly(params, std::move(terms));
}

bool Poly::is_constant() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) {
    return std::all_of(t.first.begin(), t.first.end(), [](unsigned e) { return e == 0; });
  });
}

std::optional<Rational> Poly::constant_value() const {
  if (!is_constant()) return std::nullopt;
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

int Poly::total_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)));
  return best;
}

bool Poly::is_homogeneous(unsigned d) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return std::accumulate(t.first.begin(), t.first.end(), 0u) == d; });
}

ParameterList common_parameters(const Poly& a, const Poly& b) {
  if (a.params_ == b.params_) return a.params_;
  if (b.is_constant()) return a.params_;
  if (a.is_constant()) return b.params_;
  throw ParameterMismatch("polynomials over different parameter lists cannot be combined");
}

Poly Poly::promoted_to(const ParameterList& params) const {
  if (params_ == params) return *this;
  // Only constants reach here (see common_parameters).
  TermMap t;
  if (!terms_.empty()) t.emplace(Exponents(params.size(), 0u), terms_.begin()->second);
  return Poly(params, std::move(t));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  const ParameterList p = common_parameters(*this, o);
  if (!(params_ == p)) *this = promoted_to(p);
  const Poly& rhs = o.params_ == p ? o : o.promoted_to(p);
  for (const auto& [e, c] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
  const ParameterList p = common_parameters(a, b);
  if (a.is_zero() || b.is_zero()) return Poly::constant(0, p);
  const Poly lhs = a.promoted_to(p);
  const Poly rhs = b.promoted_to(p);
  Poly::TermMap out;
  Poly::Exponents e(p.size());
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto [it, inserted] = out.try_emplace(e, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  return Poly::from_terms(p, std::move(out));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly& Poly::operator/=(const Rational& c) {
  if (c.is_zero()) throw std::domain_error("polynomial division by zero");
  for (auto& [e, v] : terms_) v /= c;
  return *this;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.params_ == b.params_) return a.terms_ == b.terms_;
  const auto ca = a.constant_value();
  const auto cb = b.constant_value();
  return ca && cb && *ca == *cb;
}

Rational Poly::eval(const Assignment& values) const {
  const auto& names = params_.names();
  std::vector<std::optional<Rational>> v(names.size());
  for (std::size_t i = 0; i < names.size(); ++i)
    if (auto it = values.find(names[i]); it != values.end()) v[i] = it->second;
  Rational sum;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!v[i]) throw MissingParameter(names[i]);
      mpq_class power;
      mpz_pow_ui(power.get_num_mpz_t(), v[i]->raw().get_num_mpz_t(), e[i]);
      mpz_pow_ui(power.get_den_mpz_t(), v[i]->raw().get_den_mpz_t(), e[i]);
      term *= Rational(std::move(power));
    }
    sum += term;
  }
  return sum;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  const auto& names = params_.names();
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c.sign() < 0;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    const Rational mag = negative ? -c : c;
    std::string monomial;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!monomial.empty()) monomial += '*';
      monomial += names[i];
      if (e[i] > 1) monomial += '^' + std::to_string(e[i]);
    }
    if (monomial.empty())
      os << mag;
    else if (mag.is_one())
      os << monomial;
    else
      os << mag << '*' << monomial;
  }
  return os.str();
}

bool Poly::is_normalized() const {
  return std::all_of(terms_.begin(), terms_.end(), [this](const auto& t) {
    return !t.second.is_zero() && t.second.is_canonical() &&
           t.first.size() == params_.size();
  });
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

} // namespace norden
