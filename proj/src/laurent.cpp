#include "bdq/laurent.hpp"

#include <cctype>
#include <sstream>

namespace bdq {

Laurent Laurent::inv_unit(int prec) const {
    if (!unit_O()) throw Error(Error::Kind::Internal, "inv_unit: not a unit of O");
    // u = u0 (1 + h), inverse coefficients by recurrence:
    // b_0 = 1/u_0, b_k = -(1/u_0) sum_{s=1..k} u_s b_{k-s}.
    Rat u0 = coeff(0);
    Laurent b;
    b.set(0, 1 / u0);
    for (int k = 1; k < prec; ++k) {
        Rat acc(0);
        for (auto& [e, v] : c_) {
            if (e >= 1 && e <= k) acc += v * b.coeff(k - e);
        }
        if (acc != 0) b.set(k, -acc / u0);
    }
    return b;
}

Laurent Laurent::div_unit(const Laurent& a, const Laurent& u, int prec) {
    if (a.is_zero()) return Laurent();
    int va = *a.valuation();
    // (a/u) coefficients at exponents < prec need 1/u modulo t^{prec - va}.
    Laurent inv = u.inv_unit(std::max(1, prec - va));
    return (a * inv).truncated(prec);
}

Laurent Laurent::div_monomial(const Laurent& a, int e, const Rat& c) {
    if (c == 0) throw Error(Error::Kind::Internal, "div_monomial by zero");
    Laurent r;
    for (auto& [k, v] : a.c_) r.set(k - e, v / c);
    return r;
}

std::string Laurent::str() const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [e, v] : c_) {
        Rat av = v < 0 ? Rat(-v) : v;
        if (first) {
            if (v < 0) out << "-";
            first = false;
        } else {
            out << (v < 0 ? "-" : "+");
        }
        if (e == 0) {
            out << rat_str(av);
        } else {
            if (av != 1) out << rat_str(av) << "*";
            out << "t";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

namespace {

// One term: [sign] [rational] [* ] [t [^ [-]int]]
struct TermParser {
    const std::string& s;
    size_t i = 0;
    explicit TermParser(const std::string& str) : s(str) {}

    bool done() const { return i >= s.size(); }
    char peek() const { return s[i]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    std::string take_number() { // digits[/digits]
        size_t start = i;
        while (!done() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw invalid("expected number in '" + s + "'");
        if (!done() && s[i] == '/') {
            ++i;
            size_t dstart = i;
            while (!done() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (i == dstart) throw invalid("expected denominator in '" + s + "'");
        }
        return s.substr(start, i - start);
    }

    int take_int() {
        bool neg = false;
        if (!done() && (s[i] == '-' || s[i] == '+')) {
            neg = s[i] == '-';
            ++i;
        }
        size_t start = i;
        while (!done() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw invalid("expected exponent in '" + s + "'");
        int v = std::stoi(s.substr(start, i - start));
        return neg ? -v : v;
    }
};

} // namespace

Laurent laurent_parse(const std::string& s) {
    Laurent out;
    TermParser p(s);
    p.skip_ws();
    if (p.done()) throw invalid("empty Laurent literal");
    bool any = false;
    while (true) {
        p.skip_ws();
        if (p.done()) break;
        int sign = 1;
        if (p.peek() == '+' || p.peek() == '-') {
            if (p.peek() == '-') sign = -1;
            ++p.i;
            p.skip_ws();
        } else if (any) {
            throw invalid("expected '+' or '-' in '" + s + "'");
        }
        Rat coeff(1);
        bool saw_coeff = false;
        if (!p.done() && std::isdigit(static_cast<unsigned char>(p.peek()))) {
            coeff = rat_parse(p.take_number());
            saw_coeff = true;
            p.skip_ws();
            if (!p.done() && p.peek() == '*') {
                ++p.i;
                p.skip_ws();
            }
        }
        int exp = 0;
        if (!p.done() && (p.peek() == 't' || p.peek() == 'T')) {
            ++p.i;
            exp = 1;
            if (!p.done() && p.peek() == '^') {
                ++p.i;
                exp = p.take_int();
            }
        } else if (!saw_coeff) {
            throw invalid("bad term in '" + s + "'");
        }
        out.add_to(exp, sign * coeff);
        any = true;
    }
    if (!any) throw invalid("empty Laurent literal");
    return out;
}

} // namespace bdq
