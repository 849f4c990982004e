#include "sdof/monomial.hpp"

#include <cmath>
#include <stdexcept>

namespace sdof {

Monomial Monomial::gain(GainSymbol sym, int exponent) {
    Monomial m;
    if (exponent != 0) m.exps_[sym] = exponent;
    return m;
}

Monomial& Monomial::operator*=(const Monomial& other) {
    scalar_ = scalar_ * other.scalar_;
    if (scalar_.is_zero()) {
        exps_.clear();
        return *this;
    }
    for (const auto& [sym, e] : other.exps_) {
        const int merged = (exps_.count(sym) ? exps_[sym] : 0) + e;
        if (merged == 0) exps_.erase(sym); else exps_[sym] = merged;
    }
    return *this;
}

Monomial Monomial::inverse() const {
    if (is_zero()) throw std::domain_error("Monomial: inverse of zero");
    Monomial m(scalar_.inverse());
    for (const auto& [sym, e] : exps_) m.exps_[sym] = -e;
    return m;
}

Monomial Monomial::pow(int e) const {
    if (e == 0) return unit();
    if (is_zero()) {
        if (e < 0) throw std::domain_error("Monomial: negative power of zero");
        return zero();
    }
    Monomial base = e < 0 ? inverse() : *this;
    const int n = e < 0 ? -e : e;
    Monomial out = unit();
    for (int i = 0; i < n; ++i) out *= base;
    return out;
}

double Monomial::eval(const ChannelGains& gains) const {
    double v = scalar_.to_double();
    for (const auto& [sym, e] : exps_)
        v *= std::pow(gains.gain(sym.tx, sym.rx), e);
    return v;
}

std::string Monomial::str() const {
    if (is_zero()) return "0";
    std::string s = scalar_.str();
    for (const auto& [sym, e] : exps_) {
        s += " " + sym.str();
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

}  // namespace sdof
