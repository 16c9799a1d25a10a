#include "field.hpp"

namespace cycldpc {

bool is_primitive_poly(int degree, uint32_t mask) {
    // constant term must be 1 and the degree bit must be set
    if (!(mask & 1u) || !(mask >> degree & 1u)) return false;
    // x has multiplicative order 2^degree-1 in GF(2)[x]/(mask) iff mask is
    // primitive; a reducible mask caps the unit-group order strictly below that
    uint32_t top = 1u << degree;
    uint32_t x = 2u; // the polynomial "x"
    uint32_t period = 1;
    uint32_t want = top - 1;
    uint32_t v = x;
    if (v & top) v ^= mask; // degree 1: x itself already reduces
    if (v == 0) return false;
    while (v != 1u) {
        v <<= 1;
        if (v & top) v ^= mask;
        if (++period > want) return false;
        if (v == 0) return false;
    }
    return period == want;
}

uint32_t lexmin_primitive_poly(int degree) {
    if (degree < 1 || degree > kMaxFieldDegree)
        fail(Err::unsupported, "field degree out of range [1,16]");
    if (degree == 1) return 0x3; // 1 + x
    uint32_t lo = 1u << degree;
    for (uint32_t mask = lo | 1u; mask < lo << 1; mask += 2)
        if (is_primitive_poly(degree, mask)) return mask;
    fail(Err::internal, "no primitive polynomial found");
}

GaloisField::GaloisField(int degree, uint32_t mask) : degree_(degree), mask_(mask) {
    const uint32_t top = 1u << degree;
    exp_.resize(top - 1);
    log_.assign(top, ZERO);
    uint32_t v = 1;
    for (uint32_t i = 0; i < top - 1; ++i) {
        exp_[i] = v;
        if (log_[v] != ZERO) fail(Err::invalid_argument, "polynomial is not primitive");
        log_[v] = static_cast<Elem>(i);
        v <<= 1;
        if (v & top) v ^= mask;
    }
    if (v != 1u) fail(Err::invalid_argument, "polynomial is not primitive");
}

GaloisField GaloisField::from_degree(int degree) {
    return GaloisField(degree, lexmin_primitive_poly(degree));
}

GaloisField GaloisField::from_poly(int degree, uint32_t mask) {
    if (degree < 1 || degree > kMaxFieldDegree)
        fail(Err::unsupported, "field degree out of range [1,16]");
    return GaloisField(degree, mask);
}

std::vector<Elem> GaloisField::square_chain(Elem e0, int length) const {
    if (e0 == ZERO) fail(Err::invalid_argument, "square_chain seed must be nonzero");
    std::vector<Elem> out(static_cast<size_t>(length));
    Elem e = e0;
    for (int i = 0; i < length; ++i) {
        out[static_cast<size_t>(i)] = e;
        e = square(e);
    }
    return out;
}

uint32_t GaloisField::minimal_polynomial(Elem elem) const {
    if (elem == ZERO) fail(Err::invalid_argument, "minimal polynomial of zero");
    // conjugate exponents under repeated squaring
    std::vector<Elem> conj;
    Elem c = elem;
    do {
        conj.push_back(c);
        c = square(c);
    } while (c != elem);
    // expand prod (x + alpha^c) with big-field coefficients, low degree first
    std::vector<Elem> p{0}; // the constant polynomial 1
    for (Elem cc : conj) {
        std::vector<Elem> nx(p.size() + 1, ZERO);
        for (size_t i = 0; i < p.size(); ++i) {
            nx[i + 1] = add(nx[i + 1], p[i]);       // x * p
            nx[i] = add(nx[i], mul(cc, p[i]));      // alpha^c * p
        }
        p.swap(nx);
    }
    uint32_t mask = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] == ZERO) continue;
        if (p[i] != 0) fail(Err::internal, "minimal polynomial has a non-binary coefficient");
        mask |= 1u << i;
    }
    return mask;
}

Elem subfield_generator(int m, int m_prime) {
    if (m < 1 || m_prime < 1 || m_prime % m != 0)
        fail(Err::unsupported, "m must divide m'");
    int64_t big = (1ll << m_prime) - 1;
    int64_t sub = (1ll << m) - 1;
    return static_cast<Elem>(big / sub);
}

} // namespace cycldpc
