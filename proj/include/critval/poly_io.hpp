/**
 * @brief Canonical text format for polynomials.
 *
 * Printed form: terms in canonical order joined by " + " / " - ", each
 * term "C*v1^e1*v2^e2" with C an integer or "p/q"; exponent 1 elided;
 * coefficient 1 elided unless the monomial is 1.  Variables are x1..xn,
 * z1..zn, y1..yn, w, Z.  The printer is deterministic; the parser accepts
 * arbitrary whitespace and arbitrary term order.
 */
#pragma once

#include "critval/polynomial.hpp"

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>

namespace critval {

struct PolyParseError : std::runtime_error {
    explicit PolyParseError(const std::string& msg) : std::runtime_error(msg) {}
};

inline std::string to_string(const Monomial& m) {
    std::string s;
    for (const auto& [v, e] : m.entries()) {
        if (!s.empty()) s += "*";
        s += var_name(v);
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

inline std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        ExactRational a = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) out += "-";
            first = false;
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        std::string vars = to_string(m);
        if (vars.empty()) out += a.str();
        else if (a == ExactRational(1)) out += vars;
        else out += a.str() + "*" + vars;
    }
    return out;
}

namespace detail {

class PolyParser {
public:
    explicit PolyParser(std::string_view s) : s_(s) {}

    Polynomial parse() {
        Polynomial result;
        skip_ws();
        if (done()) throw PolyParseError("empty polynomial text");
        bool negative = accept_sign();
        for (;;) {
            result += parse_term(negative);
            skip_ws();
            if (done()) return result;
            char c = s_[pos_];
            if (c == '+') negative = false;
            else if (c == '-') negative = true;
            else throw PolyParseError(err("expected '+' or '-'"));
            ++pos_;
            skip_ws();
        }
    }

private:
    bool done() const { return pos_ >= s_.size(); }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    std::string err(const std::string& what) const {
        return "polynomial parse error at offset " + std::to_string(pos_) + ": " + what;
    }
    bool accept_sign() {
        skip_ws();
        if (!done() && s_[pos_] == '-') { ++pos_; return true; }
        if (!done() && s_[pos_] == '+') ++pos_;
        return false;
    }

    BigInt parse_uint() {
        skip_ws();
        std::string digits;
        while (!done() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) digits += s_[pos_++];
        if (digits.empty()) throw PolyParseError(err("expected a number"));
        return BigInt(digits);
    }

    Polynomial parse_term(bool negative) {
        ExactRational coeff(negative ? -1 : 1);
        Monomial mono;
        bool any = false;
        for (;;) {
            skip_ws();
            if (done()) break;
            char c = s_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                BigInt num = parse_uint();
                skip_ws();
                if (!done() && s_[pos_] == '/') {
                    ++pos_;
                    BigInt den = parse_uint();
                    if (den == 0) throw PolyParseError(err("zero denominator"));
                    coeff *= ExactRational(num, den);
                } else {
                    coeff *= ExactRational(num);
                }
                any = true;
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                VariableId v = parse_variable();
                std::uint32_t e = 1;
                skip_ws();
                if (!done() && s_[pos_] == '^') {
                    ++pos_;
                    e = static_cast<std::uint32_t>(parse_uint().get_ui());
                }
                mono = mono * Monomial::var(v, e);
                any = true;
            } else {
                break;
            }
            skip_ws();
            if (!done() && s_[pos_] == '*') { ++pos_; continue; }
            break;
        }
        if (!any) throw PolyParseError(err("expected a term"));
        return Polynomial::term(mono, coeff);
    }

    VariableId parse_variable() {
        char c = s_[pos_++];
        if (c == 'w') return var_w();
        if (c == 'Z') return var_Z();
        VarFamily fam;
        if (c == 'x') fam = VarFamily::X;
        else if (c == 'z') fam = VarFamily::Z;
        else if (c == 'y') fam = VarFamily::Y;
        else throw PolyParseError(err(std::string("unknown variable '") + c + "'"));
        std::string digits;
        while (!done() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) digits += s_[pos_++];
        if (digits.empty()) throw PolyParseError(err("variable needs an index"));
        return {fam, static_cast<std::uint32_t>(std::stoul(digits))};
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view text) {
    return detail::PolyParser(text).parse();
}

}  // namespace critval
