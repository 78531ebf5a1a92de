#pragma once

#include "bdq/rational.hpp"

#include <map>
#include <optional>
#include <string>

namespace bdq {

// Laurent polynomial in t over Q: finite map exponent -> nonzero coefficient.
// Models elements of K = C((t)) and its valuation ring O; only finitely
// supported elements are representable, unit division goes through inv_unit
// with an explicit precision.
class Laurent {
public:
    Laurent() = default;
    explicit Laurent(const Rat& constant) { set(0, constant); }
    explicit Laurent(long constant) { set(0, Rat(constant)); }

    static Laurent t_pow(int e, const Rat& coeff = Rat(1)) {
        Laurent r;
        r.set(e, coeff);
        return r;
    }

    bool is_zero() const { return c_.empty(); }

    // Minimum exponent with nonzero coefficient; nullopt for the zero element.
    std::optional<int> valuation() const {
        if (c_.empty()) return std::nullopt;
        return c_.begin()->first;
    }
    int val_or(int if_zero) const { return c_.empty() ? if_zero : c_.begin()->first; }
    int max_exp_or(int if_zero) const { return c_.empty() ? if_zero : c_.rbegin()->first; }

    bool in_O() const { return c_.empty() || c_.begin()->first >= 0; }
    bool unit_O() const { return !c_.empty() && c_.begin()->first == 0; }

    const std::map<int, Rat>& coeffs() const { return c_; }
    Rat coeff(int e) const {
        auto it = c_.find(e);
        return it == c_.end() ? Rat(0) : it->second;
    }
    void set(int e, const Rat& v) {
        if (v == 0)
            c_.erase(e);
        else
            c_[e] = v;
    }
    void add_to(int e, const Rat& v) {
        if (v == 0) return;
        auto it = c_.find(e);
        if (it == c_.end()) {
            c_.emplace(e, v);
        } else {
            it->second += v;
            if (it->second == 0) c_.erase(it);
        }
    }

    Laurent& operator+=(const Laurent& o) {
        for (auto& [e, v] : o.c_) add_to(e, v);
        return *this;
    }
    Laurent& operator-=(const Laurent& o) {
        for (auto& [e, v] : o.c_) add_to(e, -v);
        return *this;
    }
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator-(const Laurent& a) {
        Laurent r;
        for (auto& [e, v] : a.c_) r.c_[e] = -v;
        return r;
    }
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (auto& [ea, va] : a.c_)
            for (auto& [eb, vb] : b.c_) r.add_to(ea + eb, va * vb);
        return r;
    }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
    friend Laurent operator*(const Rat& s, const Laurent& a) {
        Laurent r;
        if (s == 0) return r;
        for (auto& [e, v] : a.c_) r.c_[e] = s * v;
        return r;
    }

    bool operator==(const Laurent& o) const { return c_ == o.c_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }
    // Deterministic total order (for canonical sorting).
    bool operator<(const Laurent& o) const {
        auto ia = c_.begin(), ib = o.c_.begin();
        for (; ia != c_.end() && ib != o.c_.end(); ++ia, ++ib) {
            if (ia->first != ib->first) return ia->first < ib->first;
            if (ia->second != ib->second) return ia->second < ib->second;
        }
        return ib != o.c_.end();
    }

    Laurent shifted(int e) const {
        Laurent r;
        for (auto& [k, v] : c_) r.c_[k + e] = v;
        return r;
    }

    // [f]: the strictly negative-exponent part.
    Laurent negative_part() const {
        Laurent r;
        for (auto& [e, v] : c_) {
            if (e < 0) r.c_[e] = v;
        }
        return r;
    }
    Laurent nonnegative_part() const {
        Laurent r;
        for (auto& [e, v] : c_) {
            if (e >= 0) r.c_[e] = v;
        }
        return r;
    }
    // Truncation: keep exponents < prec only.
    Laurent truncated(int prec) const {
        Laurent r;
        for (auto& [e, v] : c_) {
            if (e < prec) r.c_[e] = v;
        }
        return r;
    }

    // Inverse of a unit of O, modulo t^prec.
    Laurent inv_unit(int prec) const;
    // a / u modulo t^prec for u a unit of O.
    static Laurent div_unit(const Laurent& a, const Laurent& u, int prec);
    // Exact division by c * t^e (a monomial).
    static Laurent div_monomial(const Laurent& a, int e, const Rat& c);

    std::string str() const; // "t^-2+3", "0", "1/2t^3-t"

private:
    std::map<int, Rat> c_;
};

// Degree of q(t^{-1}) with q(0)=0: max(0, -valuation).
inline int neg_degree(const Laurent& q) { return std::max(0, -q.val_or(0)); }

Laurent laurent_parse(const std::string& s);

} // namespace bdq
