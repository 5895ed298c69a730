#include "treecenters/perron_exact.hpp"

#include <algorithm>
#include <optional>

namespace treecenters {

namespace {

using Poly = std::vector<BigCount>;  // coefficients ascending, trimmed

int sign_of(const BigCount& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

BigCount content(const Poly& p) {
    BigCount c = 0;
    for (const auto& a : p) c = boost::multiprecision::gcd(c, a);
    return c == 0 ? BigCount(1) : c;
}

// Primitive part with positive leading coefficient.
Poly primitive(Poly p) {
    trim(p);
    if (p.empty()) return p;
    BigCount c = content(p);
    if (p.back() < 0) c = -c;
    for (auto& a : p) a /= c;
    return p;
}

// Pseudo-remainder of p by q (deg q <= deg p, q nonzero).
Poly pseudo_rem(Poly p, const Poly& q) {
    const BigCount& lq = q.back();
    int dq = static_cast<int>(q.size()) - 1;
    while (static_cast<int>(p.size()) - 1 >= dq && !p.empty()) {
        int dp = static_cast<int>(p.size()) - 1;
        BigCount lead = p.back();
        for (auto& a : p) a *= lq;
        for (int i = 0; i <= dq; ++i) {
            p[dp - dq + i] -= lead * q[i];
        }
        trim(p);
        if (static_cast<int>(p.size()) - 1 == dp) {
            throw InvariantError("pseudo-division failed to reduce degree");
        }
    }
    return p;
}

Poly poly_gcd(Poly p, Poly q) {
    p = primitive(std::move(p));
    q = primitive(std::move(q));
    if (p.empty()) return q;
    if (q.empty()) return p;
    if (p.size() < q.size()) std::swap(p, q);
    while (!q.empty()) {
        Poly r = primitive(pseudo_rem(p, q));
        p = std::move(q);
        q = std::move(r);
    }
    return p;
}

// Exact sign of p(a/b), b > 0: sign of sum p_i a^i b^(deg-i).
int sign_at(const Poly& p, const BigCount& a, const BigCount& b) {
    if (p.empty()) return 0;
    int d = static_cast<int>(p.size()) - 1;
    BigCount acc = 0;
    BigCount apow = 1;
    std::vector<BigCount> bpow(d + 1);
    bpow[0] = 1;
    for (int i = 1; i <= d; ++i) bpow[i] = bpow[i - 1] * b;
    for (int i = 0; i <= d; ++i) {
        acc += p[i] * apow * bpow[d - i];
        apow *= a;
    }
    return sign_of(acc);
}

std::vector<BigCount> submatrix_laplacian(const Tree& t, const std::vector<int>& comp) {
    int d = static_cast<int>(comp.size());
    std::vector<BigCount> m(static_cast<size_t>(d) * d, 0);
    for (int i = 0; i < d; ++i) {
        m[static_cast<size_t>(i) * d + i] = t.degree(comp[i]);
        for (int j = 0; j < d; ++j) {
            if (i != j && t.has_edge(comp[i], comp[j])) m[static_cast<size_t>(i) * d + j] = -1;
        }
    }
    return m;
}

// Number of eigenvalues of the integer matrix L below a/b (b > 0), or
// nullopt when a leading principal minor of b*L - a*I vanishes (caller
// retries with a perturbed threshold). Bareiss elimination keeps every
// minor exact; Jacobi's rule counts sign variations.
std::optional<int> eigs_below(const std::vector<BigCount>& lap, int d, const BigCount& a,
                              const BigCount& b) {
    std::vector<BigCount> m(static_cast<size_t>(d) * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            m[static_cast<size_t>(i) * d + j] =
                b * lap[static_cast<size_t>(i) * d + j] - (i == j ? a : BigCount(0));
    auto at = [&](int i, int j) -> BigCount& { return m[static_cast<size_t>(i) * d + j]; };

    BigCount prev = 1;
    int prev_sign = 1, variations = 0;
    for (int k = 0; k < d; ++k) {
        BigCount piv = at(k, k);
        if (piv == 0) return std::nullopt;
        int s = sign_of(piv);
        if (s != prev_sign) ++variations;
        prev_sign = s;
        for (int i = k + 1; i < d; ++i) {
            for (int j = k + 1; j < d; ++j) {
                at(i, j) = (at(i, j) * piv - at(i, k) * at(k, j)) / prev;
            }
        }
        prev = piv;
    }
    return variations;
}

struct RatPoint {
    BigCount num;
    BigCount den;  // > 0

    void reduce() {
        BigCount g = boost::multiprecision::gcd(num < 0 ? BigCount(-num) : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
};

RatPoint mid_point(const RatPoint& x, const RatPoint& y) {
    RatPoint m{x.num * y.den + y.num * x.den, 2 * x.den * y.den};
    m.reduce();
    return m;
}

RatPoint nudged(const RatPoint& t, const RatPoint& span, int attempt) {
    BigCount k(997 + attempt);
    RatPoint nt{t.num * span.den * k + span.num * t.den, t.den * span.den * k};
    nt.reduce();
    return nt;
}

struct MatrixPair {
    const std::vector<BigCount>* l1;
    int d1;
    const std::vector<BigCount>* l2;
    int d2;
};

struct Counts {
    int below1;
    int below2;
};

// Counts for both matrices at one shared threshold; a degenerate minor in
// either forces a nudge and a recount of both, so the counts always refer
// to the final threshold.
Counts counts_robust(const MatrixPair& mp, RatPoint& t, const RatPoint& span) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        auto r1 = eigs_below(*mp.l1, mp.d1, t.num, t.den);
        if (r1) {
            auto r2 = eigs_below(*mp.l2, mp.d2, t.num, t.den);
            if (r2) return Counts{*r1, *r2};
        }
        t = nudged(t, span, attempt);
    }
    throw SolverError("exact eigenvalue count kept hitting degenerate thresholds");
}

int eigs_below_robust(const std::vector<BigCount>& lap, int d, RatPoint& t,
                      const RatPoint& span) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        auto r = eigs_below(lap, d, t.num, t.den);
        if (r) return *r;
        t = nudged(t, span, attempt);
    }
    throw SolverError("exact eigenvalue count kept hitting degenerate thresholds");
}

}  // namespace

std::vector<BigCount> dirichlet_char_poly(const Tree& t, const std::vector<int>& comp) {
    int d = static_cast<int>(comp.size());
    std::vector<BigCount> a = submatrix_laplacian(t, comp);
    auto idx = [d](int i, int j) { return static_cast<size_t>(i) * d + j; };

    // Faddeev-LeVerrier; every division is exact.
    Poly c(static_cast<size_t>(d) + 1, 0);
    c[d] = 1;
    std::vector<BigCount> m = a;
    BigCount tr = 0;
    for (int i = 0; i < d; ++i) tr += m[idx(i, i)];
    c[d - 1] = -tr;
    for (int k = 2; k <= d; ++k) {
        for (int i = 0; i < d; ++i) m[idx(i, i)] += c[d - k + 1];
        std::vector<BigCount> next(static_cast<size_t>(d) * d, 0);
        for (int i = 0; i < d; ++i) {
            for (int l = 0; l < d; ++l) {
                const BigCount& ail = a[idx(i, l)];
                if (ail == 0) continue;
                for (int j = 0; j < d; ++j) next[idx(i, j)] += ail * m[idx(l, j)];
            }
        }
        m = std::move(next);
        tr = 0;
        for (int i = 0; i < d; ++i) tr += m[idx(i, i)];
        if (tr % k != 0) throw InvariantError("Faddeev-LeVerrier division was not exact");
        c[d - k] = -tr / k;
    }
    return c;
}

PerronCompare compare_perron_exact(const Tree& t, int v, const std::vector<int>& comp1,
                                   double rho1, const std::vector<int>& comp2, double rho2) {
    (void)v;
    std::vector<int> c1 = comp1, c2 = comp2;
    std::sort(c1.begin(), c1.end());
    std::sort(c2.begin(), c2.end());
    const int d1 = static_cast<int>(c1.size()), d2 = static_cast<int>(c2.size());
    std::vector<BigCount> l1 = submatrix_laplacian(t, c1);
    std::vector<BigCount> l2 = submatrix_laplacian(t, c2);

    // lambda_min estimates; exact work happens on the Dirichlet side.
    double est = 0.5 * (1.0 / rho1 + 1.0 / rho2);
    const BigCount scale = BigCount(1) << 48;
    BigCount center_num(static_cast<long long>(est * 281474976710656.0));  // est * 2^48
    if (center_num <= 0) center_num = 1;

    // Shrinking isolation window around the common estimate.
    MatrixPair mp{&l1, d1, &l2, d2};
    BigCount half_num = center_num >> 20;
    if (half_num == 0) half_num = 1;
    RatPoint a, b;
    bool isolated = false;
    for (int attempt = 0; attempt < 80 && !isolated; ++attempt) {
        a = RatPoint{center_num - half_num, scale};
        b = RatPoint{center_num + half_num, scale};
        a.reduce();
        b.reduce();
        RatPoint span{half_num, scale * 8};
        span.reduce();
        Counts at_a = counts_robust(mp, a, span);
        Counts at_b = counts_robust(mp, b, span);
        if (at_a.below1 == 0 && at_b.below1 == 1 && at_a.below2 == 0 && at_b.below2 == 1) {
            isolated = true;
        } else if (at_a.below1 > 0 || at_a.below2 > 0 || at_b.below1 == 0 ||
                   at_b.below2 == 0) {
            half_num <<= 1;  // window missed the minima; widen
        } else {
            half_num >>= 3;  // a second eigenvalue crept in; tighten
            if (half_num == 0) half_num = 1;
        }
    }
    if (!isolated) {
        throw SolverError("failed to isolate smallest Dirichlet eigenvalues for exact "
                          "Perron comparison");
    }

    // Shared root certificate: a nonconstant gcd with a sign change across
    // the isolating window pins both minima to the same algebraic number.
    Poly g = poly_gcd(dirichlet_char_poly(t, c1), dirichlet_char_poly(t, c2));
    if (g.size() >= 2) {
        int sa = sign_at(g, a.num, a.den);
        int sb = sign_at(g, b.num, b.den);
        if (sa == 0 || sb == 0) {
            throw InvariantError("isolating endpoint landed on an eigenvalue");
        }
        if (sa != sb) return PerronCompare::Equal;
    }

    // Distinct minima: bisect both enclosures until they separate.
    RatPoint a1 = a, b1 = b, a2 = a, b2 = b;
    auto cmp = [](const RatPoint& x, const RatPoint& y) {
        return (x.num * y.den - y.num * x.den) < 0 ? -1
               : (x.num * y.den == y.num * x.den ? 0 : 1);
    };
    for (int it = 0; it < 4000; ++it) {
        RatPoint span1{b1.num * a1.den - a1.num * b1.den, a1.den * b1.den * 8};
        RatPoint m1 = mid_point(a1, b1);
        if (eigs_below_robust(l1, d1, m1, span1) == 0) a1 = m1;
        else b1 = m1;
        RatPoint span2{b2.num * a2.den - a2.num * b2.den, a2.den * b2.den * 8};
        RatPoint m2 = mid_point(a2, b2);
        if (eigs_below_robust(l2, d2, m2, span2) == 0) a2 = m2;
        else b2 = m2;
        // Smaller lambda_min means larger Perron value.
        if (cmp(b1, a2) <= 0) return PerronCompare::FirstLarger;
        if (cmp(b2, a1) <= 0) return PerronCompare::SecondLarger;
    }
    throw SolverError("exact Perron comparison failed to separate eigenvalue enclosures");
}

}  // namespace treecenters
