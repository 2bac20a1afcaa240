// Text form of polynomials.  Grammar (whitespace insignificant):
//   poly   := term (('+'|'-') term)*
//   term   := [coeff '*'?] factor ('*' factor)* | coeff
//   factor := var ('^' uint)?
//   coeff  := int ('/' uint)?
//   var    := ('x'|'y') uint
// A leading sign on the first term is accepted.  Forms use x variables,
// operators y variables; mixing the two is an error.

#pragma once

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>

#include "apolar/fields.hpp"
#include "apolar/poly.hpp"

namespace apolar {

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t offset, int line, int col)
        : std::runtime_error(what + " at offset " + std::to_string(offset) + " (line " + std::to_string(line) +
                             ", col " + std::to_string(col) + ")"),
          offset_(offset),
          line_(line),
          col_(col) {}
    std::size_t offset() const { return offset_; }
    int line() const { return line_; }
    int col() const { return col_; }

  private:
    std::size_t offset_;
    int line_;
    int col_;
};

namespace detail {

template <class K>
class PolyParser {
  public:
    PolyParser(const std::string& text, Side default_side) : text_(text), side_(default_side), side_fixed_(false) {}

    Poly<K> parse(int min_vars) {
        skip_ws();
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            if (take() == '-') sign = -1;
            skip_ws();
        }
        terms_.clear();
        max_var_ = -1;
        parse_term(sign);
        skip_ws();
        while (pos_ < text_.size()) {
            char c = take();
            if (c != '+' && c != '-') fail("expected '+' or '-'", pos_ - 1);
            skip_ws();
            parse_term(c == '-' ? -1 : 1);
            skip_ws();
        }
        int nvars = max_var_ + 1;
        if (nvars < min_vars) nvars = min_vars;
        if (nvars < 1) nvars = 1;
        Poly<K> p(nvars, side_);
        for (auto& [exps, coeff] : terms_) {
            std::vector<int> e = exps;
            e.resize(static_cast<std::size_t>(nvars), 0);
            p.add_term(Monomial(std::move(e)), coeff);
        }
        return p;
    }

  private:
    void parse_term(int sign) {
        std::vector<int> exps;
        K coeff = K(sign);
        bool have_any = false;
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = coeff * parse_coeff();
            have_any = true;
            skip_ws();
            if (peek() == '*') {
                take();
                skip_ws();
                parse_factor(exps);
                have_any = true;
            } else if (peek() == 'x' || peek() == 'y') {
                parse_factor(exps);
            }
        } else {
            parse_factor(exps);
            have_any = true;
        }
        skip_ws();
        while (peek() == '*') {
            take();
            skip_ws();
            parse_factor(exps);
            skip_ws();
        }
        if (!have_any) fail("expected term", pos_);
        for (std::size_t i = exps.size(); i-- > 0;)
            if (exps[i] != 0 && static_cast<int>(i) > max_var_) max_var_ = static_cast<int>(i);
        auto [it, inserted] = terms_.emplace(exps, coeff);
        if (!inserted) it->second += coeff;
    }

    void parse_factor(std::vector<int>& exps) {
        std::size_t at = pos_;
        char c = take();
        if (c != 'x' && c != 'y') fail("expected variable or coefficient", at);
        Side s = (c == 'x') ? Side::S : Side::T;
        if (side_fixed_ && s != side_) fail("mixed x/y variables", at);
        side_ = s;
        side_fixed_ = true;
        long long idx = parse_uint(at);
        int exp = 1;
        skip_ws();
        if (peek() == '^') {
            take();
            skip_ws();
            std::size_t eat = pos_;
            exp = static_cast<int>(parse_uint(eat));
        }
        if (static_cast<std::size_t>(idx) + 1 > exps.size()) exps.resize(static_cast<std::size_t>(idx) + 1, 0);
        exps[static_cast<std::size_t>(idx)] += exp;
        if (static_cast<int>(idx) > max_var_) max_var_ = static_cast<int>(idx);
    }

    K parse_coeff() {
        std::size_t at = pos_;
        Int num = parse_int_digits(at);
        skip_ws();
        if (peek() == '/') {
            take();
            skip_ws();
            std::size_t dat = pos_;
            Int den = parse_int_digits(dat);
            if (den == 0) fail("zero denominator", dat);
            K d = field_traits<K>::from_int(den);
            if (is_zero(d)) fail("denominator vanishes in this field", dat);
            return field_traits<K>::from_int(num) / d;
        }
        return field_traits<K>::from_int(num);
    }

    Int parse_int_digits(std::size_t at) {
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(take());
        if (digits.empty()) fail("expected number", at);
        return Int(digits);
    }

    long long parse_uint(std::size_t at) {
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(take());
        if (digits.empty()) fail("expected variable index", at);
        if (digits.size() > 6) fail("variable index too large", at);
        return std::stoll(digits);
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() {
        if (pos_ >= text_.size()) fail("unexpected end of input", pos_);
        return text_[pos_++];
    }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
        int line = 1, col = 1;
        for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError("syntax error: " + msg, at, line, col);
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    Side side_;
    bool side_fixed_;
    std::map<std::vector<int>, K> terms_;
    int max_var_ = -1;
};

}  // namespace detail

template <class K>
Poly<K> parse_poly(const std::string& text, Side default_side = Side::S, int min_vars = 0) {
    detail::PolyParser<K> parser(text, default_side);
    return parser.parse(min_vars);
}

template <class K>
std::string format_scalar(const K& c) {
    return field_traits<K>::to_string(c);
}

namespace detail {

// over Q split off the sign; over F_p every representative is canonical
inline bool scalar_negative(const Rational& c) { return c < 0; }
inline bool scalar_negative(const Fp&) { return false; }
inline Rational scalar_abs(const Rational& c) { return c < 0 ? Rational(-c) : c; }
inline Fp scalar_abs(const Fp& c) { return c; }

}  // namespace detail

// Canonical text: terms in graded-lex order, explicit '*' and '^', unit
// coefficients elided.  parse_poly(format_poly(P)) == P.
template <class K>
std::string format_poly(const Poly<K>& P) {
    if (P.is_zero()) return "0";
    const char var = (P.side() == Side::S) ? 'x' : 'y';
    std::string out;
    bool first = true;
    for (const auto& [m, c] : P.terms()) {
        bool neg = detail::scalar_negative(c);
        K mag = detail::scalar_abs(c);
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        std::string monostr;
        for (int i = 0; i < m.nvars(); ++i) {
            if (m[i] == 0) continue;
            if (!monostr.empty()) monostr += "*";
            monostr += var + std::to_string(i);
            if (m[i] > 1) monostr += "^" + std::to_string(m[i]);
        }
        if (monostr.empty()) {
            out += format_scalar(mag);
        } else if (mag == K(1)) {
            out += monostr;
        } else {
            out += format_scalar(mag) + "*" + monostr;
        }
    }
    return out;
}

}  // namespace apolar
