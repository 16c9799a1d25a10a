#include "spectrum.hpp"

#include <algorithm>

namespace cycldpc {

static void check_root_order(const GaloisField& big, int r, int n) {
    // alpha^r must have multiplicative order exactly n
    int64_t o = big.order();
    if (static_cast<int64_t>(r) * n % o != 0)
        fail(Err::invalid_argument, "alpha^r is not an n-th root of unity");
    for (int d = 1; d < n; ++d)
        if (static_cast<int64_t>(r) * d % o == 0)
            fail(Err::invalid_argument, "alpha^r has order below n");
}

Spectrum ms_transform(const RingPoly& a, const GaloisField& big, int r, Elem l) {
    check_root_order(big, r, a.n);
    const int n = a.n;
    const int64_t o = big.order();
    Spectrum s;
    s.n = n;
    s.r = r;
    s.a.assign(static_cast<size_t>(n), ZERO);
    std::vector<std::pair<int, Elem>> terms; // (exponent, big-field log)
    for (int i = 0; i < n; ++i) {
        Elem ci = a.c[static_cast<size_t>(i)];
        if (ci != ZERO) terms.emplace_back(i, static_cast<Elem>(static_cast<int64_t>(ci) * l % o));
    }
    for (int j = 0; j < n; ++j) {
        Elem acc = ZERO;
        for (auto [i, cl] : terms) {
            // c_i * alpha^{-r i j}
            int64_t e = (cl - static_cast<int64_t>(r) * i % o * j) % o;
            if (e < 0) e += o;
            acc = big.add(acc, static_cast<Elem>(e));
        }
        s.a[static_cast<size_t>(j)] = acc;
    }
    s.is_binary = check_binary(s);
    return s;
}

RingPoly inverse_ms(const Spectrum& A, const GaloisField& big, int m, Elem l) {
    const int n = A.n;
    const int64_t o = big.order();
    RingPoly out = RingPoly::zero(n, m);
    std::vector<std::pair<int, Elem>> terms;
    for (int j = 0; j < n; ++j)
        if (A.a[static_cast<size_t>(j)] != ZERO) terms.emplace_back(j, A.a[static_cast<size_t>(j)]);
    for (int i = 0; i < n; ++i) {
        Elem acc = ZERO;
        for (auto [j, aj] : terms) {
            int64_t e = (aj + static_cast<int64_t>(A.r) * i % o * j) % o;
            acc = big.add(acc, static_cast<Elem>(e));
        }
        if (acc == ZERO) continue;
        if (acc % l != 0)
            fail(Err::internal, "inverse transform left the subfield");
        out.c[static_cast<size_t>(i)] = static_cast<Elem>(acc / l);
    }
    return out;
}

bool check_binary(const Spectrum& A) {
    for (Elem e : A.a)
        if (e != ZERO && e != 0) return false;
    return true;
}

SpectralAnalysis analyze(const RingPoly& u, const GaloisField& sub, const GaloisField& big, int r, Elem l) {
    Spectrum U = ms_transform(u, big, r, l);
    if (!U.is_binary)
        fail(Err::not_idempotent, "spectrum is not binary; u is not an idempotent");
    SpectralAnalysis out;
    const int n = u.n;
    for (Elem e : U.a)
        if (e == ZERO) ++out.k;
    // cross-check the dimension against deg gcd(u, 1+x^n)
    DensePoly h = gcd_with_xn(u, sub);
    int k_gcd = static_cast<int>(h.size()) - 1;
    if (k_gcd != out.k)
        fail(Err::internal, "dimension cross-check failed: spectrum " + std::to_string(out.k) +
                                " vs gcd " + std::to_string(k_gcd));
    // maximum cyclic run of ones
    if (out.k == 0) {
        out.d0 = n; // all-ones spectrum wraps fully
    } else {
        int run = 0, best = 0;
        // start scanning just after a zero so the wrap-around is a plain run
        int start = 0;
        while (U.a[static_cast<size_t>(start)] != ZERO) ++start;
        for (int t = 0; t < n; ++t) {
            int j = (start + 1 + t) % n;
            if (U.a[static_cast<size_t>(j)] != ZERO) {
                ++run;
                best = std::max(best, run);
            } else {
                run = 0;
            }
        }
        out.d0 = best;
    }
    out.lower_bound = out.d0 + 1;
    DensePoly g = quotient_xn(h, u.n, sub);
    out.upper_bound = std::min(dense_weight(g), 1 + u.weight());
    return out;
}

} // namespace cycldpc
