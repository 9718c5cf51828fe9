#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "acbm/rational.hpp"

namespace acbm {

/// Fixed, lexicographically ordered set of parameter names. Every Poly is
/// bound to one ParamSet; exponent vectors index into it positionally.
class ParamSet {
  public:
    ParamSet() = default;
    explicit ParamSet(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    friend bool operator==(const ParamSet& a, const ParamSet& b) { return a.names_ == b.names_; }

  private:
    std::vector<std::string> names_;
};

using ParamSetPtr = std::shared_ptr<const ParamSet>;

ParamSetPtr make_param_set(std::vector<std::string> names);
/// The shared empty parameter set (plain rational scalars).
ParamSetPtr empty_param_set();

/// Exact multivariate polynomial over Rational in the parameters of one
/// ParamSet. Canonical form: term map keyed by exponent vector, no zero
/// coefficients stored, so equality is map equality.
class Poly {
  public:
    using Monomial = std::vector<std::uint32_t>;

    Poly() : params_(empty_param_set()) {}
    explicit Poly(ParamSetPtr params) : params_(std::move(params)) {}

    static Poly zero(ParamSetPtr params) { return Poly(std::move(params)); }
    static Poly constant(ParamSetPtr params, Rational value);
    static Poly parameter(const ParamSetPtr& params, std::size_t index);
    static Poly parameter(const ParamSetPtr& params, std::string_view name);

    const ParamSetPtr& params() const { return params_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Value of a constant polynomial (zero polynomial gives 0).
    Rational constant_value() const;

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const Rational& rhs);
    Poly operator-() const;

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Rational& b) { return a *= b; }
    friend Poly operator*(const Rational& a, Poly b) { return b *= a; }
    friend bool operator==(const Poly& a, const Poly& b);

    /// Full evaluation. Every parameter that actually appears must be bound.
    Rational substitute(const std::map<std::string, Rational>& bindings) const;

    /// Partial evaluation: bound parameters are eliminated, the result lives
    /// over the ParamSet of the remaining names.
    Poly bind(const std::map<std::string, Rational>& bindings) const;

    /// Canonical text form; parse_poly(to_string()) reproduces the value.
    std::string to_string() const;

    void add_term(const Monomial& mono, const Rational& coeff);

  private:
    void check_same_params(const Poly& other) const;

    ParamSetPtr params_;
    std::map<Monomial, Rational> terms_;
};

/// Parses the polynomial grammar: rational literals (`/` only between integer
/// literals), parameter names, `+ - *`, `^` with positive integer exponent,
/// parentheses. Throws ParseError with a byte position on bad input.
Poly parse_poly(std::string_view text, const ParamSetPtr& params);

}  // namespace acbm
