#pragma once

// Exact coefficient arithmetic: rationals, Laurent polynomials in the three
// Hecke parameters q0, q1, q2, and formal logarithms of torus coordinates.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>

#include "exotic/error.hpp"

namespace exotic {

using Rational = mpq_class;

inline Rational parse_rational(std::string_view text)
{
    std::string s(text);
    auto valid_int = [](std::string_view t, bool allow_sign) {
        if (t.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
        if (i == t.size()) return false;
        return std::all_of(t.begin() + static_cast<std::ptrdiff_t>(i), t.end(),
                           [](char c) { return c >= '0' && c <= '9'; });
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    if (!valid_int(num, true) || !valid_int(den, false))
        throw InvalidInput("not a rational number: '" + s + "'");
    Rational r;
    r.get_num() = mpz_class(num, 10);
    r.get_den() = mpz_class(den, 10);
    if (r.get_den() == 0) throw InvalidInput("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(10); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// ---------------------------------------------------------------------------
// ParamPolynomial: element of Q[q0^{+-1}, q1^{+-1}, q2^{+-1}].

using ParamExponent = std::array<int, 3>;

class ParamPolynomial {
public:
    using TermMap = std::map<ParamExponent, Rational>;

    ParamPolynomial() = default;

    static ParamPolynomial constant(const Rational& c) { return monomial({0, 0, 0}, c); }
    static ParamPolynomial one() { return constant(1); }
    static ParamPolynomial monomial(const ParamExponent& e, const Rational& c = 1)
    {
        ParamPolynomial p;
        if (c != 0) p.terms_.emplace(e, c);
        return p;
    }
    static ParamPolynomial q(int index, int power = 1)
    {
        ParamExponent e{0, 0, 0};
        e.at(static_cast<std::size_t>(index)) = power;
        return monomial(e);
    }
    static ParamPolynomial q0() { return q(0); }
    static ParamPolynomial q1() { return q(1); }
    static ParamPolynomial q2() { return q(2); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coefficient(const ParamExponent& e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const ParamExponent& e, const Rational& c)
    {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    ParamPolynomial& operator+=(const ParamPolynomial& o)
    {
        if (&o == this) return *this *= Rational(2);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    ParamPolynomial& operator-=(const ParamPolynomial& o)
    {
        if (&o == this) {
            terms_.clear();
            return *this;
        }
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    ParamPolynomial& operator*=(const Rational& c)
    {
        if (c == 0) {
            terms_.clear();
        } else {
            for (auto& [e, v] : terms_) v *= c;
        }
        return *this;
    }
    ParamPolynomial operator-() const
    {
        ParamPolynomial r = *this;
        for (auto& [e, v] : r.terms_) v = -v;
        return r;
    }

    friend ParamPolynomial operator+(ParamPolynomial a, const ParamPolynomial& b) { return a += b; }
    friend ParamPolynomial operator-(ParamPolynomial a, const ParamPolynomial& b) { return a -= b; }
    friend ParamPolynomial operator*(ParamPolynomial a, const Rational& c) { return a *= c; }
    friend ParamPolynomial operator*(const Rational& c, ParamPolynomial a) { return a *= c; }
    friend ParamPolynomial operator*(const ParamPolynomial& a, const ParamPolynomial& b)
    {
        ParamPolynomial r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
        return r;
    }
    ParamPolynomial& operator*=(const ParamPolynomial& o) { return *this = *this * o; }

    friend bool operator==(const ParamPolynomial& a, const ParamPolynomial& b)
    {
        return a.terms_ == b.terms_;
    }

    std::string to_string() const
    {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Rational mag = abs(c);
            bool unit = e == ParamExponent{0, 0, 0};
            os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
            if (mag != 1 || unit) os << exotic::to_string(mag);
            for (int i = 0; i < 3; ++i) {
                if (e[static_cast<std::size_t>(i)] == 0) continue;
                os << (mag != 1 || unit ? "*" : "") << "q" << i;
                if (e[static_cast<std::size_t>(i)] != 1) os << "^" << e[static_cast<std::size_t>(i)];
                mag = 0;
            }
            first = false;
        }
        return os.str();
    }

private:
    TermMap terms_;
};

inline std::ostream& operator<<(std::ostream& os, const ParamPolynomial& p) { return os << p.to_string(); }

// ---------------------------------------------------------------------------
// FormalExponent: Q-linear combination of declared transcendental symbols and
// the reserved symbol IPI = pi * sqrt(-1). Declared symbols are Q-linearly
// independent of each other and of IPI, so congruences are decided by
// comparing coefficients.

inline constexpr std::string_view kIPI = "IPI";

class FormalExponent {
public:
    using CoeffMap = std::map<std::string, Rational>;

    FormalExponent() = default;

    static FormalExponent symbol(std::string name, const Rational& c = 1)
    {
        FormalExponent x;
        x.add(std::move(name), c);
        return x;
    }
    static FormalExponent ipi(const Rational& c = 1) { return symbol(std::string(kIPI), c); }

    const CoeffMap& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Rational coefficient(const std::string& name) const
    {
        auto it = coeffs_.find(name);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    void add(std::string name, const Rational& c)
    {
        if (c == 0) return;
        auto [it, inserted] = coeffs_.try_emplace(std::move(name), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    FormalExponent& operator+=(const FormalExponent& o)
    {
        if (&o == this) {
            FormalExponent copy = o;
            return *this += copy;
        }
        for (const auto& [s, c] : o.coeffs_) add(s, c);
        return *this;
    }
    FormalExponent& operator-=(const FormalExponent& o)
    {
        if (&o == this) {
            coeffs_.clear();
            return *this;
        }
        for (const auto& [s, c] : o.coeffs_) add(s, -c);
        return *this;
    }
    FormalExponent& operator*=(const Rational& c)
    {
        if (c == 0) {
            coeffs_.clear();
        } else {
            for (auto& [s, v] : coeffs_) v *= c;
        }
        return *this;
    }
    FormalExponent operator-() const { return FormalExponent(*this) *= Rational(-1); }

    friend FormalExponent operator+(FormalExponent a, const FormalExponent& b) { return a += b; }
    friend FormalExponent operator-(FormalExponent a, const FormalExponent& b) { return a -= b; }
    friend FormalExponent operator*(FormalExponent a, const Rational& c) { return a *= c; }
    friend FormalExponent operator*(const Rational& c, FormalExponent a) { return a *= c; }

    friend bool operator==(const FormalExponent& a, const FormalExponent& b)
    {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator<(const FormalExponent& a, const FormalExponent& b)
    {
        return std::lexicographical_compare(
            a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(), b.coeffs_.end(),
            [](const auto& l, const auto& r) {
                if (l.first != r.first) return l.first < r.first;
                return l.second < r.second;
            });
    }

    // True iff this value lies in 2*pi*sqrt(-1)*Z.
    bool in_gamma0() const
    {
        if (coeffs_.empty()) return true;
        if (coeffs_.size() != 1) return false;
        auto it = coeffs_.find(std::string(kIPI));
        if (it == coeffs_.end() || !is_integer(it->second)) return false;
        return mpz_class(it->second.get_num() % 2) == 0;
    }

    // Representative with IPI coefficient in [0, 2); equal iff congruent mod Gamma0.
    FormalExponent reduced_mod_gamma0() const
    {
        FormalExponent r = *this;
        auto it = r.coeffs_.find(std::string(kIPI));
        if (it == r.coeffs_.end()) return r;
        Rational c = it->second;
        mpz_class q;
        mpz_class two_den = 2 * c.get_den();
        mpz_fdiv_q(q.get_mpz_t(), c.get_num().get_mpz_t(), two_den.get_mpz_t());
        c -= Rational(2 * q);
        if (c == 0) {
            r.coeffs_.erase(it);
        } else {
            it->second = c;
        }
        return r;
    }

    std::string to_string() const
    {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [s, c] : coeffs_) {
            os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
            Rational mag = abs(c);
            if (mag != 1) os << exotic::to_string(mag) << "*";
            os << s;
            first = false;
        }
        return os.str();
    }

private:
    CoeffMap coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const FormalExponent& x) { return os << x.to_string(); }

// x - y in Gamma0.
inline bool exp_mod_gamma0(const FormalExponent& x, const FormalExponent& y)
{
    return (x - y).in_gamma0();
}

// exp(x) is a root of unity of some order m with 1 <= m <= k.
inline bool root_of_unity_order_at_most(const FormalExponent& x, long k)
{
    if (k < 1) return false;
    if (x.is_zero()) return true;
    if (x.coefficients().size() != 1 || x.coefficients().begin()->first != kIPI) return false;
    const Rational& c = x.coefficients().begin()->second;
    for (long m = 1; m <= k; ++m) {
        Rational mc = Rational(m) * c;
        if (is_integer(mc) && mpz_class(mc.get_num() % 2) == 0) return true;
    }
    return false;
}

// Names of transcendental generators declared for one session.
class SymbolTable {
public:
    SymbolTable() = default;

    void declare(const std::string& name)
    {
        if (name.empty()) throw InvalidInput("empty symbol name");
        if (name == kIPI) throw InvalidInput("symbol name 'IPI' is reserved");
        if (!names_.insert(name).second) throw InvalidInput("duplicate symbol '" + name + "'");
    }
    bool contains(const std::string& name) const { return name == kIPI || names_.count(name) > 0; }
    const std::set<std::string>& names() const { return names_; }

private:
    std::set<std::string> names_;
};

} // namespace exotic
