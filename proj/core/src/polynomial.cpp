#include "acbm/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace acbm {

Rational parse_rational(std::string_view text) {
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) -> Rational {
        throw ParseError("bad rational '" + std::string(text) + "': " + why, pos);
    };
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    auto digits = [&]() -> Integer {
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected digits");
        std::string d;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) d += text[pos++];
        return Integer(d);
    };
    Integer num = digits();
    Integer den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = digits();
        if (den == 0) fail("zero denominator");
    }
    if (pos != text.size()) fail("trailing characters");
    if (negative) num = -num;
    return Rational(num, den);
}

ParamSet::ParamSet(std::vector<std::string> names) : names_(std::move(names)) {
    std::sort(names_.begin(), names_.end());
    auto dup = std::adjacent_find(names_.begin(), names_.end());
    if (dup != names_.end())
        throw StructuralError("duplicate parameter name '" + *dup + "'");
}

std::optional<std::size_t> ParamSet::index_of(std::string_view name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

ParamSetPtr make_param_set(std::vector<std::string> names) {
    return std::make_shared<const ParamSet>(std::move(names));
}

ParamSetPtr empty_param_set() {
    static const ParamSetPtr empty = std::make_shared<const ParamSet>();
    return empty;
}

Poly Poly::constant(ParamSetPtr params, Rational value) {
    Poly p(std::move(params));
    if (value != 0) p.terms_.emplace(Monomial(p.params_->size(), 0), std::move(value));
    return p;
}

Poly Poly::parameter(const ParamSetPtr& params, std::size_t index) {
    if (index >= params->size()) throw StructuralError("parameter index out of range");
    Poly p(params);
    Monomial mono(params->size(), 0);
    mono[index] = 1;
    p.terms_.emplace(std::move(mono), Rational(1));
    return p;
}

Poly Poly::parameter(const ParamSetPtr& params, std::string_view name) {
    auto idx = params->index_of(name);
    if (!idx) throw StructuralError("unknown parameter '" + std::string(name) + "'");
    return parameter(params, *idx);
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& mono = terms_.begin()->first;
    return std::all_of(mono.begin(), mono.end(), [](std::uint32_t e) { return e == 0; });
}

Rational Poly::constant_value() const {
    if (!is_constant()) throw StructuralError("polynomial is not constant: " + to_string());
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

void Poly::check_same_params(const Poly& other) const {
    if (params_ == other.params_) return;
    if (*params_ == *other.params_) return;
    throw StructuralError("parameter set mismatch");
}

void Poly::add_term(const Monomial& mono, const Rational& coeff) {
    if (mono.size() != params_->size()) throw StructuralError("exponent vector has wrong length");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(mono, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& rhs) {
    check_same_params(rhs);
    for (const auto& [mono, coeff] : rhs.terms_) add_term(mono, coeff);
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    check_same_params(rhs);
    for (const auto& [mono, coeff] : rhs.terms_) add_term(mono, -coeff);
    return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
    check_same_params(rhs);
    std::map<Monomial, Rational> product;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            Monomial mono(ma.size());
            for (std::size_t i = 0; i < mono.size(); ++i) mono[i] = ma[i] + mb[i];
            Rational c = ca * cb;
            auto [it, inserted] = product.emplace(std::move(mono), std::move(c));
            if (!inserted) {
                it->second += ca * cb;
                if (it->second == 0) product.erase(it);
            }
        }
    }
    terms_ = std::move(product);
    return *this;
}

Poly& Poly::operator*=(const Rational& rhs) {
    if (rhs == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [mono, coeff] : terms_) coeff *= rhs;
    return *this;
}

Poly Poly::operator-() const {
    Poly out(params_);
    for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono, -coeff);
    return out;
}

bool operator==(const Poly& a, const Poly& b) {
    a.check_same_params(b);
    return a.terms_ == b.terms_;
}

Rational Poly::substitute(const std::map<std::string, Rational>& bindings) const {
    std::vector<std::optional<Rational>> values(params_->size());
    for (const auto& [name, value] : bindings) {
        auto idx = params_->index_of(name);
        if (!idx) throw StructuralError("binding for unknown parameter '" + name + "'");
        values[*idx] = value;
    }
    Rational total(0);
    for (const auto& [mono, coeff] : terms_) {
        Rational term = coeff;
        for (std::size_t i = 0; i < mono.size(); ++i) {
            if (mono[i] == 0) continue;
            if (!values[i])
                throw StructuralError("missing binding for parameter '" + params_->name(i) + "'");
            Rational power(1);
            for (std::uint32_t e = 0; e < mono[i]; ++e) power *= *values[i];
            term *= power;
        }
        total += term;
    }
    return total;
}

Poly Poly::bind(const std::map<std::string, Rational>& bindings) const {
    std::vector<std::optional<Rational>> values(params_->size());
    std::vector<std::string> remaining;
    for (const auto& [name, value] : bindings) {
        auto idx = params_->index_of(name);
        if (!idx) throw StructuralError("binding for unknown parameter '" + name + "'");
        values[*idx] = value;
    }
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < params_->size(); ++i) {
        if (!values[i]) {
            keep.push_back(i);
            remaining.push_back(params_->name(i));
        }
    }
    Poly out(make_param_set(std::move(remaining)));
    for (const auto& [mono, coeff] : terms_) {
        Rational c = coeff;
        Monomial reduced(keep.size(), 0);
        for (std::size_t i = 0, r = 0; i < mono.size(); ++i) {
            if (values[i]) {
                for (std::uint32_t e = 0; e < mono[i]; ++e) c *= *values[i];
            } else {
                reduced[r++] = mono[i];
            }
        }
        out.add_term(reduced, c);
    }
    return out;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    // Reverse map order: highest exponent vector first, constants last.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [mono, coeff] = *it;
        Rational c = coeff;
        if (out.empty()) {
            if (c < 0) {
                out += '-';
                c = -c;
            }
        } else {
            out += c < 0 ? " - " : " + ";
            if (c < 0) c = -c;
        }
        std::string vars;
        for (std::size_t i = 0; i < mono.size(); ++i) {
            if (mono[i] == 0) continue;
            if (!vars.empty()) vars += '*';
            vars += params_->name(i);
            if (mono[i] > 1) vars += '^' + std::to_string(mono[i]);
        }
        if (vars.empty()) {
            out += acbm::to_string(c);
        } else if (c == 1) {
            out += vars;
        } else {
            out += acbm::to_string(c) + '*' + vars;
        }
    }
    return out;
}

namespace {

class PolyParser {
  public:
    PolyParser(std::string_view text, const ParamSetPtr& params) : text_(text), params_(params) {}

    Poly parse() {
        Poly value = expression();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character");
        return value;
    }

  private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("polynomial syntax error at position " + std::to_string(pos_) + ": " + why,
                         pos_);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Poly expression() {
        bool negate = false;
        if (eat('-'))
            negate = true;
        else
            eat('+');
        Poly value = term();
        if (negate) value = -value;
        for (;;) {
            if (eat('+'))
                value += term();
            else if (eat('-'))
                value -= term();
            else
                break;
        }
        return value;
    }

    Poly term() {
        Poly value = factor();
        while (eat('*')) value *= factor();
        return value;
    }

    Poly factor() {
        Poly base = primary();
        if (eat('^')) {
            skip_ws();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("expected positive integer exponent");
            unsigned long exponent = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                exponent = exponent * 10 + static_cast<unsigned long>(text_[pos_] - '0');
                if (exponent > 4096) fail("exponent too large");
                ++pos_;
            }
            if (exponent == 0) fail("exponent must be positive");
            Poly power = Poly::constant(params_, Rational(1));
            for (unsigned long e = 0; e < exponent; ++e) power *= base;
            base = power;
        }
        return base;
    }

    Poly primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly inner = expression();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return rational_literal();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        fail("expected number, parameter or '('");
    }

    Poly rational_literal() {
        Integer num = digits();
        Integer den = 1;
        // '/' is only allowed between two integer literals.
        std::size_t save = pos_;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            skip_ws();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("'/' must be followed by an integer literal");
            den = digits();
            if (den == 0) fail("zero denominator");
        } else {
            pos_ = save;
        }
        return Poly::constant(params_, Rational(num, den));
    }

    Integer digits() {
        std::string d;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) d += text_[pos_++];
        return Integer(d);
    }

    Poly identifier() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        auto idx = params_->index_of(name);
        if (!idx) {
            pos_ = start;
            fail("unknown parameter '" + name + "'");
        }
        return Poly::parameter(params_, *idx);
    }

    std::string_view text_;
    const ParamSetPtr& params_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const ParamSetPtr& params) {
    return PolyParser(text, params).parse();
}

}  // namespace acbm
