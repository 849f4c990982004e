#pragma once

#include <compare>
#include <map>
#include <string>

#include "sdof/rational.hpp"
#include "sdof/topology.hpp"

namespace sdof {

// Names one channel gain: from transmitter `tx` into receiver `rx` (0-based).
// Displayed as h{tx+1} for receiver 1 and g{tx+1} for receiver 2.
struct GainSymbol {
    int tx = 0;
    int rx = 0;

    auto operator<=>(const GainSymbol&) const = default;
    std::string str() const {
        return (rx == 0 ? "h" : "g") + std::to_string(tx + 1);
    }
};

// Rational multiple of a product of integer powers of gain symbols.
// Canonical form: no zero exponents; the zero monomial stores no symbols.
// Two monomials are equal iff their canonical forms are identical.
class Monomial {
public:
    Monomial() = default;  // unit
    explicit Monomial(Rational scalar) : scalar_(scalar) {}

    static Monomial unit() { return Monomial(); }
    static Monomial zero() { return Monomial(Rational(0)); }
    static Monomial gain(GainSymbol sym, int exponent = 1);

    bool is_zero() const { return scalar_.is_zero(); }
    bool is_unit() const { return scalar_ == Rational(1) && exps_.empty(); }

    const Rational& scalar() const { return scalar_; }
    const std::map<GainSymbol, int>& exponents() const { return exps_; }

    Monomial& operator*=(const Monomial& other);
    friend Monomial operator*(Monomial a, const Monomial& b) { a *= b; return a; }

    Monomial inverse() const;  // throws std::domain_error on zero
    Monomial pow(int e) const;

    double eval(const ChannelGains& gains) const;

    std::string str() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend bool operator<(const Monomial& a, const Monomial& b) {
        if (a.exps_ != b.exps_) return a.exps_ < b.exps_;
        return a.scalar_ < b.scalar_;
    }

private:
    Rational scalar_{1};
    std::map<GainSymbol, int> exps_;
};

}  // namespace sdof
