#pragma once

#include "bdq/laurent.hpp"

namespace bdq {

// Element of L = K[j], j^2 = t: even + j*odd. The Galois generator gamma_1
// fixes K and sends j to -j.
struct Ext {
    Laurent even, odd;

    Ext() = default;
    explicit Ext(const Laurent& e) : even(e) {}
    Ext(const Laurent& e, const Laurent& o) : even(e), odd(o) {}

    static Ext one() { return Ext(Laurent(1)); }
    static Ext j() { return Ext(Laurent(), Laurent(1)); }

    bool is_zero() const { return even.is_zero() && odd.is_zero(); }

    Ext conj() const { return Ext(even, -odd); } // gamma_1

    friend Ext operator+(const Ext& a, const Ext& b) { return Ext(a.even + b.even, a.odd + b.odd); }
    friend Ext operator-(const Ext& a, const Ext& b) { return Ext(a.even - b.even, a.odd - b.odd); }
    friend Ext operator-(const Ext& a) { return Ext(-a.even, -a.odd); }
    friend Ext operator*(const Ext& a, const Ext& b) {
        return Ext(a.even * b.even + Laurent::t_pow(1) * (a.odd * b.odd),
                   a.even * b.odd + a.odd * b.even);
    }
    bool operator==(const Ext& o) const { return even == o.even && odd == o.odd; }
    bool operator!=(const Ext& o) const { return !(*this == o); }

    // Norm even^2 - t*odd^2 = x * gamma_1(x), an element of K.
    Laurent norm() const { return even * even - Laurent::t_pow(1) * (odd * odd); }
};

} // namespace bdq
