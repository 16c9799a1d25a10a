#include "ring.hpp"

#include <algorithm>
#include <cctype>

namespace cycldpc {

bool RingPoly::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](Elem e) { return e == ZERO; });
}

int RingPoly::weight() const {
    return static_cast<int>(std::count_if(c.begin(), c.end(), [](Elem e) { return e != ZERO; }));
}

int RingPoly::degree() const {
    for (int i = n - 1; i >= 0; --i)
        if (c[static_cast<size_t>(i)] != ZERO) return i;
    return -1;
}

std::vector<int> RingPoly::support() const {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
        if (c[static_cast<size_t>(i)] != ZERO) s.push_back(i);
    return s;
}

static void check_same(const RingPoly& a, const RingPoly& b) {
    if (a.n != b.n || a.m != b.m)
        fail(Err::invalid_argument, "mismatched ring parameters");
}

RingPoly ring_add(const RingPoly& a, const RingPoly& b, const GaloisField& gf) {
    check_same(a, b);
    RingPoly r = RingPoly::zero(a.n, a.m);
    for (int i = 0; i < a.n; ++i)
        r.c[static_cast<size_t>(i)] = gf.add(a.c[static_cast<size_t>(i)], b.c[static_cast<size_t>(i)]);
    return r;
}

RingPoly ring_mul(const RingPoly& a, const RingPoly& b, const GaloisField& gf) {
    check_same(a, b);
    RingPoly r = RingPoly::zero(a.n, a.m);
    for (int i = 0; i < a.n; ++i) {
        Elem ai = a.c[static_cast<size_t>(i)];
        if (ai == ZERO) continue;
        for (int j = 0; j < b.n; ++j) {
            Elem bj = b.c[static_cast<size_t>(j)];
            if (bj == ZERO) continue;
            int e = i + j;
            if (e >= a.n) e -= a.n;
            r.c[static_cast<size_t>(e)] = gf.add(r.c[static_cast<size_t>(e)], gf.mul(ai, bj));
        }
    }
    return r;
}

RingPoly ring_square(const RingPoly& a, const GaloisField& gf) {
    // characteristic 2: coefficient a_j^2 lands at 2j mod n, cross terms cancel
    RingPoly r = RingPoly::zero(a.n, a.m);
    for (int j = 0; j < a.n; ++j) {
        Elem aj = a.c[static_cast<size_t>(j)];
        if (aj == ZERO) continue;
        r.c[static_cast<size_t>(2 * j % a.n)] = gf.square(aj);
    }
    return r;
}

RingPoly reciprocal(const RingPoly& a) {
    int d = a.degree();
    if (d < 0) fail(Err::invalid_argument, "reciprocal of the zero polynomial");
    RingPoly r = RingPoly::zero(a.n, a.m);
    for (int i = 0; i <= d; ++i) {
        Elem ai = a.c[static_cast<size_t>(i)];
        if (ai != ZERO) r.c[static_cast<size_t>(d - i)] = ai;
    }
    return r;
}

DensePoly dense_from_ring(const RingPoly& a) {
    int d = a.degree();
    DensePoly p;
    if (d < 0) return p;
    p.assign(static_cast<size_t>(d) + 1, ZERO);
    for (int i = 0; i <= d; ++i) p[static_cast<size_t>(i)] = a.c[static_cast<size_t>(i)];
    return p;
}

DensePoly dense_one_plus_xn(int n) {
    DensePoly p(static_cast<size_t>(n) + 1, ZERO);
    p[0] = 0;
    p[static_cast<size_t>(n)] = 0;
    return p;
}

int dense_weight(const DensePoly& a) {
    return static_cast<int>(std::count_if(a.begin(), a.end(), [](Elem e) { return e != ZERO; }));
}

static void dense_trim(DensePoly& a) {
    while (!a.empty() && a.back() == ZERO) a.pop_back();
}

DensePoly dense_mul(const DensePoly& a, const DensePoly& b, const GaloisField& gf) {
    if (a.empty() || b.empty()) return {};
    DensePoly r(a.size() + b.size() - 1, ZERO);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == ZERO) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == ZERO) continue;
            r[i + j] = gf.add(r[i + j], gf.mul(a[i], b[j]));
        }
    }
    dense_trim(r);
    return r;
}

std::pair<DensePoly, DensePoly> dense_divmod(const DensePoly& a, const DensePoly& b, const GaloisField& gf) {
    if (b.empty()) fail(Err::invalid_argument, "division by the zero polynomial");
    DensePoly rem = a;
    dense_trim(rem);
    if (rem.size() < b.size()) return {{}, rem};
    DensePoly quo(rem.size() - b.size() + 1, ZERO);
    Elem lead_inv = gf.inv(b.back());
    for (size_t i = rem.size(); i-- > 0;) {
        if (i + 1 < b.size()) break; // below deg(b): remainder reached
        Elem r = rem[i];
        if (r == ZERO) continue;
        Elem f = gf.mul(r, lead_inv);
        size_t shift = i + 1 - b.size();
        quo[shift] = f;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == ZERO) continue;
            rem[shift + j] = gf.add(rem[shift + j], gf.mul(f, b[j]));
        }
    }
    dense_trim(rem);
    dense_trim(quo);
    return {quo, rem};
}

static DensePoly dense_monic(DensePoly a, const GaloisField& gf) {
    dense_trim(a);
    if (a.empty() || a.back() == 0) return a;
    Elem s = gf.inv(a.back());
    for (Elem& e : a)
        if (e != ZERO) e = gf.mul(e, s);
    return a;
}

DensePoly gcd_with_xn(const RingPoly& u, const GaloisField& gf) {
    if (u.is_zero()) fail(Err::invalid_argument, "gcd with the zero polynomial");
    DensePoly a = dense_one_plus_xn(u.n);
    DensePoly b = dense_from_ring(u);
    while (!b.empty()) {
        auto [q, r] = dense_divmod(a, b, gf);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return dense_monic(std::move(a), gf);
}

DensePoly quotient_xn(const DensePoly& h, int n, const GaloisField& gf) {
    auto [q, r] = dense_divmod(dense_one_plus_xn(n), h, gf);
    if (!r.empty()) fail(Err::internal, "h(x) does not divide 1+x^n");
    return q;
}

std::string poly_to_text(const RingPoly& a) {
    std::string out;
    for (int i = 0; i < a.n; ++i) {
        Elem e = a.c[static_cast<size_t>(i)];
        if (e == ZERO) continue;
        if (!out.empty()) out += '+';
        if (e == 0)
            out += '1';
        else
            out += 'b' + std::to_string(e);
        out += "*x^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

RingPoly poly_parse_text(const std::string& text, int n, int m) {
    if (n < 1) fail(Err::invalid_argument, "bad n");
    RingPoly r = RingPoly::zero(n, m);
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty() || s == "0") return r;
    int qm1 = (1 << m) - 1;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t plus = s.find('+', pos);
        std::string term = s.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
        pos = plus == std::string::npos ? s.size() : plus + 1;
        size_t star = term.find('*');
        if (star == std::string::npos || term.compare(star + 1, 2, "x^") != 0)
            fail(Err::invalid_argument, "malformed term '" + term + "' (want c*x^e)");
        std::string cs = term.substr(0, star);
        std::string es = term.substr(star + 3);
        Elem coeff;
        try {
            if (cs == "0") {
                coeff = ZERO;
            } else if (cs == "1") {
                coeff = 0;
            } else if (cs.size() > 1 && cs[0] == 'b') {
                size_t used = 0;
                long j = std::stol(cs.substr(1), &used);
                if (used + 1 != cs.size() || j < 0)
                    fail(Err::invalid_argument, "bad coefficient '" + cs + "'");
                coeff = static_cast<Elem>(j % qm1);
            } else {
                fail(Err::invalid_argument, "bad coefficient '" + cs + "'");
            }
            size_t used = 0;
            long e = std::stol(es, &used);
            if (used != es.size() || e < 0 || e >= n)
                fail(Err::invalid_argument, "exponent out of range in '" + term + "'");
            if (coeff == ZERO) continue;
            size_t idx = static_cast<size_t>(e);
            if (r.c[idx] != ZERO) fail(Err::invalid_argument, "duplicate exponent in '" + term + "'");
            r.c[idx] = coeff;
        } catch (const std::invalid_argument&) {
            fail(Err::invalid_argument, "malformed term '" + term + "'");
        } catch (const std::out_of_range&) {
            fail(Err::invalid_argument, "malformed term '" + term + "'");
        }
    }
    return r;
}

std::string dense_binary_to_text(uint32_t mask) {
    std::string out;
    for (int i = 0; i < 32; ++i) {
        if (!(mask >> i & 1u)) continue;
        if (!out.empty()) out += '+';
        if (i == 0)
            out += '1';
        else if (i == 1)
            out += 'x';
        else
            out += "x^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

} // namespace cycldpc
