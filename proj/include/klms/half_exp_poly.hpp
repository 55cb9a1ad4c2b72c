#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "klms/bigint.hpp"
#include "klms/errors.hpp"

namespace klms {

/// Polynomial with integer coefficients in half-integer powers of q.
/// A term c * q^(n/2) is stored under its exponent numerator n; the fixed
/// denominator 2 keeps every exponent exact. Canonical form: no zero
/// coefficient is ever stored, so equality is equality of term maps.
class HalfExpPoly {
public:
    HalfExpPoly() = default;

    static HalfExpPoly zero() { return {}; }
    static HalfExpPoly one() { return monomial(0, 1); }
    static HalfExpPoly q() { return monomial(2, 1); }
    static HalfExpPoly q_half() { return monomial(1, 1); }

    static HalfExpPoly monomial(long long exp_numerator, BigInt coefficient) {
        HalfExpPoly p;
        if (!coefficient.is_zero()) p.terms_.emplace(exp_numerator, std::move(coefficient));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of q^(halfExp/2); zero when the term is absent.
    BigInt coeff(long long half_exp) const {
        auto it = terms_.find(half_exp);
        return it == terms_.end() ? BigInt{} : it->second;
    }

    /// True iff every exponent numerator is even and nonnegative,
    /// i.e. the value lies in Z[q].
    bool is_integral() const {
        for (const auto& [n, c] : terms_)
            if (n < 0 || n % 2 != 0) return false;
        return true;
    }

    /// Largest exponent numerator, or `absent` for the zero polynomial.
    long long degree_numerator(long long absent = -1) const {
        return terms_.empty() ? absent : terms_.rbegin()->first;
    }

    const std::map<long long, BigInt>& terms() const { return terms_; }

    bool operator==(const HalfExpPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const HalfExpPoly& o) const { return !(*this == o); }

    HalfExpPoly operator+(const HalfExpPoly& o) const {
        HalfExpPoly r = *this;
        for (const auto& [n, c] : o.terms_) r.add_term(n, c);
        return r;
    }

    HalfExpPoly operator-() const {
        HalfExpPoly r;
        for (const auto& [n, c] : terms_) r.terms_.emplace(n, -c);
        return r;
    }

    HalfExpPoly operator-(const HalfExpPoly& o) const { return *this + (-o); }

    HalfExpPoly operator*(const HalfExpPoly& o) const {
        HalfExpPoly r;
        for (const auto& [n1, c1] : terms_)
            for (const auto& [n2, c2] : o.terms_) r.add_term(n1 + n2, c1 * c2);
        return r;
    }

    HalfExpPoly& operator+=(const HalfExpPoly& o) { return *this = *this + o; }
    HalfExpPoly& operator-=(const HalfExpPoly& o) { return *this = *this - o; }
    HalfExpPoly& operator*=(const HalfExpPoly& o) { return *this = *this * o; }

    /// Text form: terms ascending by exponent joined by " + "; q^(n/2) with
    /// n=0,1,2 special-cased to a bare integer, "q^(1/2)" and "q"; even
    /// numerators print reduced ("q^2").
    std::string to_text() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [n, c] : terms_) {
            if (!first) s += " + ";
            first = false;
            s += term_text(n, c);
        }
        return s;
    }

    static HalfExpPoly parse_text(const std::string& text) {
        HalfExpPoly p;
        size_t pos = 0;
        while (pos <= text.size()) {
            size_t plus = text.find('+', pos);
            std::string piece = trim(text.substr(pos, plus == std::string::npos
                                                          ? std::string::npos
                                                          : plus - pos));
            if (piece.empty()) throw parse_error("empty polynomial term in '" + text + "'");
            parse_term(piece, p);
            if (plus == std::string::npos) break;
            pos = plus + 1;
        }
        return p;
    }

    /// JSON form: array of [exponent numerator, coefficient] pairs ascending.
    std::string to_json_text() const {
        std::string s = "[";
        bool first = true;
        for (const auto& [n, c] : terms_) {
            if (!first) s += ",";
            first = false;
            s += "[" + std::to_string(n) + "," + c.to_string() + "]";
        }
        return s + "]";
    }

    std::vector<std::pair<long long, BigInt>> to_pairs() const {
        return {terms_.begin(), terms_.end()};
    }

private:
    std::map<long long, BigInt> terms_;

    void add_term(long long n, const BigInt& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(n, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    static std::string term_text(long long n, const BigInt& c) {
        if (n == 0) return c.to_string();
        std::string power;
        if (n == 1) power = "q^(1/2)";
        else if (n == 2) power = "q";
        else if (n % 2 == 0) power = "q^" + std::to_string(n / 2);
        else power = "q^(" + std::to_string(n) + "/2)";
        if (c == BigInt(1)) return power;
        if (c == BigInt(-1)) return "-" + power;
        return c.to_string() + "*" + power;
    }

    static std::string trim(const std::string& s) {
        size_t a = s.find_first_not_of(" \t");
        if (a == std::string::npos) return "";
        size_t b = s.find_last_not_of(" \t");
        return s.substr(a, b - a + 1);
    }

    static void parse_term(const std::string& piece, HalfExpPoly& out) {
        size_t qpos = piece.find('q');
        if (qpos == std::string::npos) {
            out.add_term(0, BigInt::from_string(piece));
            return;
        }
        std::string coef = trim(piece.substr(0, qpos));
        if (!coef.empty() && coef.back() == '*') coef = trim(coef.substr(0, coef.size() - 1));
        BigInt c = coef.empty() ? BigInt(1)
                   : coef == "-" ? BigInt(-1)
                                 : BigInt::from_string(coef);
        std::string rest = trim(piece.substr(qpos + 1));
        long long n = 2;
        if (!rest.empty()) {
            if (rest[0] != '^') throw parse_error("bad power syntax: '" + piece + "'");
            std::string exp = trim(rest.substr(1));
            if (!exp.empty() && exp.front() == '(') {
                if (exp.back() != ')') throw parse_error("unbalanced parens: '" + piece + "'");
                std::string inner = trim(exp.substr(1, exp.size() - 2));
                size_t slash = inner.find('/');
                if (slash == std::string::npos || trim(inner.substr(slash + 1)) != "2")
                    throw parse_error("expected (n/2) exponent: '" + piece + "'");
                n = BigInt::from_string(trim(inner.substr(0, slash))).to_int64();
            } else {
                n = 2 * BigInt::from_string(exp).to_int64();
            }
        }
        out.add_term(n, c);
    }
};

} // namespace klms
