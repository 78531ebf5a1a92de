#include "bdq/orders.hpp"

#include <algorithm>
#include <limits>

namespace bdq {

IndexForm::IndexForm(Laurent a_, Laurent b_, Laurent c_, Laurent d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if (!a.in_O() || !b.in_O() || !c.in_O() || !d.in_O())
        throw invalid("index form coefficients must lie in O");
}

CubicRing cubic_from_index_form(const IndexForm& f) {
    CubicRing r;
    r.f = f;
    r.omega_theta = {-(f.a * f.d), Laurent(), Laurent()};
    r.omega_sq = {-(f.a * f.c), f.b, -f.a};
    r.theta_sq = {-(f.b * f.d), f.d, -f.c};
    return r;
}

std::vector<MatK> cubic_mult_matrices(const CubicRing& r) {
    std::vector<MatK> m(3, MatK(3, 3));
    m[0] = MatK::identity(3);
    // columns are the images of 1, omega, theta
    m[1](1, 0) = Laurent(1); // omega * 1 = omega
    for (int k = 0; k < 3; ++k) {
        m[1](k, 1) = r.omega_sq[static_cast<size_t>(k)];
        m[1](k, 2) = r.omega_theta[static_cast<size_t>(k)];
        m[2](k, 1) = r.omega_theta[static_cast<size_t>(k)];
        m[2](k, 2) = r.theta_sq[static_cast<size_t>(k)];
    }
    m[2](2, 0) = Laurent(1); // theta * 1 = theta
    return m;
}

std::array<Laurent, 3> CubicRing::mul(const std::array<Laurent, 3>& x,
                                      const std::array<Laurent, 3>& y) const {
    std::array<Laurent, 3> out;
    Laurent oo = x[1] * y[1];             // omega^2 coefficient
    Laurent tt = x[2] * y[2];             // theta^2
    Laurent ot = x[1] * y[2] + x[2] * y[1]; // omega theta
    out[0] = x[0] * y[0] + oo * omega_sq[0] + ot * omega_theta[0] + tt * theta_sq[0];
    out[1] = x[0] * y[1] + x[1] * y[0] + oo * omega_sq[1] + ot * omega_theta[1] + tt * theta_sq[1];
    out[2] = x[0] * y[2] + x[2] * y[0] + oo * omega_sq[2] + ot * omega_theta[2] + tt * theta_sq[2];
    return out;
}

std::pair<CubicPoly, CubicPoly> char_polys(const IndexForm& f) {
    CubicPoly pw, pt;
    pw.c3 = Laurent(1);
    pw.c2 = -f.b;
    pw.c1 = f.a * f.c;
    pw.c0 = -(f.a * f.a * f.d);
    pt.c3 = Laurent(1);
    pt.c2 = f.c;
    pt.c1 = f.b * f.d;
    pt.c0 = f.a * f.d * f.d;
    return {pw, pt};
}

Laurent discriminant(const IndexForm& f) {
    Laurent r;
    r += Rat(18) * (f.a * f.b * f.c * f.d);
    r += f.b * f.b * f.c * f.c;
    r -= Rat(4) * (f.a * f.c * f.c * f.c);
    r -= Rat(4) * (f.d * f.b * f.b * f.b);
    r -= Rat(27) * (f.a * f.a * f.d * f.d);
    return r;
}

int lattice_class_count(const IndexForm& f) {
    if (discriminant(f).is_zero()) throw invalid("inseparable index form");
    auto in_tO = [](const Laurent& x) { return x.val_or(1) >= 1; };
    return (in_tO(f.a) && in_tO(f.b) && in_tO(f.c) && in_tO(f.d)) ? 2 : 1;
}

namespace {

std::optional<Laurent> try_div_exact(const Laurent& num, const Laurent& den) {
    if (num.is_zero()) return Laurent();
    if (den.is_zero()) return std::nullopt;
    // Shift both to polynomials, long-divide, undo the shift.
    Laurent a = num.shifted(-num.val_or(0));
    Laurent b = den.shifted(-den.val_or(0));
    Laurent q, r = a;
    int db = b.max_exp_or(0);
    Rat lb = b.coeff(db);
    while (!r.is_zero() && r.max_exp_or(0) >= db) {
        int dr = r.max_exp_or(0);
        Rat fq = r.coeff(dr) / lb;
        Laurent term = Laurent::t_pow(dr - db, fq);
        q += term;
        r -= term * b;
    }
    if (!r.is_zero()) return std::nullopt;
    return q.shifted(num.val_or(0) - den.val_or(0));
}

} // namespace

IndexForm gl2_action_on_forms(const MatK& g, const IndexForm& f) {
    if (g.rows != 2 || g.cols != 2) throw invalid("g must be 2x2");
    for (auto& e : g.a)
        if (!e.in_O()) throw invalid("g must have entries in O");
    Laurent det = matk_det(g);
    if (!det.unit_O()) throw invalid("det(g) must be a unit of O");
    const Laurent &p = g(0, 0), &q = g(1, 0), &r = g(0, 1), &s = g(1, 1);
    // f((u,v) g) coefficients in (u, v).
    Laurent a2 = f.a * (p * p * p) + f.b * (p * p * r) + f.c * (p * r * r) + f.d * (r * r * r);
    Laurent b2 = Rat(3) * (f.a * (p * p * q)) + f.b * (p * p * s + Rat(2) * (p * q * r)) +
                 f.c * (r * r * q + Rat(2) * (p * r * s)) + Rat(3) * (f.d * (r * r * s));
    Laurent c2 = Rat(3) * (f.a * (p * q * q)) + f.b * (q * q * r + Rat(2) * (p * q * s)) +
                 f.c * (p * s * s + Rat(2) * (q * r * s)) + Rat(3) * (f.d * (r * s * s));
    Laurent d2 = f.a * (q * q * q) + f.b * (q * q * s) + f.c * (q * s * s) + f.d * (s * s * s);
    auto divd = [&](const Laurent& x) {
        auto res = try_div_exact(x, det);
        if (!res)
            throw invalid("transported form leaves the Laurent-polynomial model "
                          "(det does not divide exactly)");
        return *res;
    };
    return IndexForm(divd(a2), divd(b2), divd(c2), divd(d2));
}

// ---------------------------------------------------------------------------
// Root counting over K = C((t)) certified through Q data (DD-17).
// ---------------------------------------------------------------------------

namespace {

// Coefficients c[0..deg], monic (c[deg] = 1). Counts distinct roots in K
// with valuation >= min_val; nullopt when a residual factorization is
// blocked over Q.
std::optional<int> count_roots(std::vector<Laurent> c, long min_val, int depth);

std::vector<Int> small_divisors(const Int& n0) {
    Int n = abs(n0);
    std::vector<Int> divs{1};
    if (n <= 1) return divs;
    Int rest = n;
    std::vector<std::pair<Int, int>> fact;
    for (Int p = 2; p * p <= rest && p < 1000000; ++p) {
        if (rest % p == 0) {
            int e = 0;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            fact.emplace_back(p, e);
        }
    }
    if (rest > 1) fact.emplace_back(rest, 1);
    for (auto& [p, e] : fact) {
        size_t sz = divs.size();
        Int pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t s = 0; s < sz; ++s) divs.push_back(divs[s] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
    return divs;
}

// Rational roots of r (coefficients over Q, any degree), with multiplicity;
// remaining factor degree returned in rest_deg.
struct RationalRoots {
    std::vector<std::pair<Rat, int>> roots;
    int rest_deg = 0;
};

RationalRoots rational_roots(std::vector<Rat> r) {
    // strip leading zeros
    while (!r.empty() && r.back() == 0) r.pop_back();
    RationalRoots out;
    if (r.size() <= 1) return out;
    // strip zero roots
    int zero_mult = 0;
    while (r.size() > 1 && r.front() == 0) {
        r.erase(r.begin());
        ++zero_mult;
    }
    if (zero_mult > 0) out.roots.emplace_back(Rat(0), zero_mult);
    auto eval = [&](const Rat& x) {
        Rat acc(0);
        for (size_t k = r.size(); k-- > 0;) acc = acc * x + r[k];
        return acc;
    };
    auto deflate = [&](const Rat& u) { // divide by (X - u)
        std::vector<Rat> q(r.size() - 1);
        Rat carry = r.back();
        for (size_t k = r.size() - 1; k-- > 0;) {
            q[k] = carry;
            carry = r[k] + carry * u;
        }
        r = std::move(q);
    };
    if (r.size() > 1) {
        // clear denominators -> integer coefficients
        Int lcm = 1;
        for (auto& v : r) {
            Int den = v.get_den();
            lcm = lcm / gcd(lcm, den) * den;
        }
        std::vector<Int> ri;
        for (auto& v : r) ri.push_back(Int(v * Rat(lcm)));
        auto lead_divs = small_divisors(ri.back());
        auto const_divs = small_divisors(ri.front());
        std::vector<Rat> candidates;
        for (auto& pnum : const_divs)
            for (auto& pden : lead_divs) {
                Rat cand(pnum, pden);
                cand.canonicalize();
                candidates.push_back(cand);
                candidates.push_back(-cand);
            }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (auto& u : candidates) {
            if (r.size() <= 1) break;
            int mult = 0;
            while (r.size() > 1 && eval(u) == 0) {
                deflate(u);
                ++mult;
            }
            if (mult > 0) out.roots.emplace_back(u, mult);
        }
    }
    if (r.size() == 2) { // a linear remainder is always a rational root
        Rat u = -r[0] / r[1];
        out.roots.emplace_back(u, 1);
        r.pop_back();
    }
    out.rest_deg = static_cast<int>(r.size()) - 1;
    return out;
}

std::optional<int> count_roots(std::vector<Laurent> c, long min_val, int depth) {
    if (depth > 64) throw Error(Error::Kind::Internal, "root counting recursion too deep");
    int deg = static_cast<int>(c.size()) - 1;
    if (deg <= 0) return 0;
    int total = 0;
    if (c[0].is_zero()) {
        ++total; // the root 0; its valuation passes any bound
        std::vector<Laurent> defl(c.begin() + 1, c.end());
        auto sub = count_roots(std::move(defl), min_val, depth + 1);
        if (!sub) return std::nullopt;
        return total + *sub;
    }
    // Newton polygon: lower hull of points (k, val(c_k)).
    std::vector<std::pair<long, long>> pts; // (k, val)
    for (int k = 0; k <= deg; ++k)
        if (!c[static_cast<size_t>(k)].is_zero())
            pts.emplace_back(k, *c[static_cast<size_t>(k)].valuation());
    std::vector<std::pair<long, long>> hull;
    for (auto& p : pts) {
        while (hull.size() >= 2) {
            auto& a = hull[hull.size() - 2];
            auto& b = hull[hull.size() - 1];
            // drop b if it lies above segment a-p
            if ((b.second - a.second) * (p.first - a.first) >=
                (p.second - a.second) * (b.first - a.first))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    for (size_t seg = 0; seg + 1 < hull.size(); ++seg) {
        auto [k1, v1] = hull[seg];
        auto [k2, v2] = hull[seg + 1];
        long num = v1 - v2, den = k2 - k1;
        // roots on this segment have valuation num/den
        if (num % den != 0) continue;
        long s = num / den;
        if (s < min_val) continue;
        // residual polynomial over Q
        std::vector<Rat> res(static_cast<size_t>(den) + 1, Rat(0));
        for (long k = k1; k <= k2; ++k) {
            long want = v1 - (k - k1) * s;
            res[static_cast<size_t>(k - k1)] = c[static_cast<size_t>(k)].coeff(static_cast<int>(want));
        }
        RationalRoots rr = rational_roots(res);
        int rational_deg = 0;
        for (auto& [u, m] : rr.roots) rational_deg += m;
        if (rr.rest_deg >= 2) return std::nullopt; // blocked over Q (DD-17)
        if (rational_deg + rr.rest_deg != static_cast<int>(den))
            throw Error(Error::Kind::Internal, "residual degree mismatch");
        for (auto& [u, m] : rr.roots) {
            if (u == 0) continue; // below the segment's valuation; handled elsewhere
            if (m == 1) {
                ++total; // simple residual root lifts uniquely (Hensel)
                continue;
            }
            // shift X = t^s (u + Y) and count roots with val(Y) >= 1
            std::vector<Laurent> shifted(c.size());
            // P(t^s(u+Y)) = sum_k c_k t^{ks} (u+Y)^k; collect Y powers.
            for (int k = 0; k <= deg; ++k) {
                if (c[static_cast<size_t>(k)].is_zero()) continue;
                // binomials
                Rat binom(1);
                Rat upow(1);
                std::vector<Rat> bin(static_cast<size_t>(k) + 1);
                for (int x = 0; x <= k; ++x) {
                    bin[static_cast<size_t>(x)] = binom;
                    binom = binom * Rat(k - x) / Rat(x + 1);
                }
                for (int x = k; x >= 0; --x) { // coefficient of Y^x: C(k,x) u^{k-x}
                    Rat coeff = bin[static_cast<size_t>(x)] * upow;
                    shifted[static_cast<size_t>(x)] +=
                        coeff * c[static_cast<size_t>(k)].shifted(static_cast<int>(k * s));
                    upow *= u;
                }
            }
            // normalize: divide by t^{deg * s} to keep the leading term monic
            for (auto& e : shifted) e = e.shifted(static_cast<int>(-deg * s));
            auto sub = count_roots(shifted, 1, depth + 1);
            if (!sub) return std::nullopt;
            total += *sub;
        }
    }
    return total;
}

} // namespace

CubicAlgebraClass classify_cubic_algebra(const IndexForm& f) {
    if (discriminant(f).is_zero()) return CubicAlgebraClass::Inseparable;
    if (f.a.is_zero() && f.d.is_zero()) return CubicAlgebraClass::KCubed;
    auto [pw, pt] = char_polys(f);
    const CubicPoly& p = f.a.is_zero() ? pt : pw;
    std::vector<Laurent> coeffs{p.c0, p.c1, p.c2, p.c3};
    auto n = count_roots(coeffs, std::numeric_limits<long>::min() / 2, 0);
    if (!n) return CubicAlgebraClass::Indeterminate;
    switch (*n) {
    case 3:
        return CubicAlgebraClass::KCubed;
    case 1:
        return CubicAlgebraClass::LPlusK;
    case 0:
        return CubicAlgebraClass::Field;
    default:
        throw Error(Error::Kind::Internal, "cubic with two roots in K");
    }
}

const char* to_string(CubicAlgebraClass c) {
    switch (c) {
    case CubicAlgebraClass::Field:
        return "Field";
    case CubicAlgebraClass::LPlusK:
        return "LPlusK";
    case CubicAlgebraClass::KCubed:
        return "KCubed";
    case CubicAlgebraClass::Inseparable:
        return "Inseparable";
    case CubicAlgebraClass::Indeterminate:
        return "Indeterminate";
    }
    return "?";
}

} // namespace bdq
