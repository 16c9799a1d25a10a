#pragma once

#include "ring.hpp"

namespace cycldpc {

// Finite-field transform U_j = u(alpha^{-rj}) with gamma = alpha^r an n-th
// root of unity in GF(2^m'). Coefficients live in the big field (log form).
struct Spectrum {
    int n = 0;
    int r = 0;
    std::vector<Elem> a; // length n, big-field logs
    bool is_binary = false;
};

struct SpectralAnalysis {
    int k = 0;           // zero coefficients of U(z) = code dimension
    int d0 = 0;          // maximum cyclic run of spectral ones
    int lower_bound = 0; // d0 + 1
    int upper_bound = 0; // min(wt(g), 1 + wt(u))
};

// Embeds GF(2^m) coefficients into GF(2^m') via beta = alpha^l, then
// evaluates at the powers of alpha^{-r}.
Spectrum ms_transform(const RingPoly& a, const GaloisField& big, int r, Elem l);

// a_i = sum_j A_j alpha^{rij}; the 1/n of the inversion formula is the
// identity here (n odd, characteristic 2). Maps coefficients back into the
// subfield; errors if a value falls outside it.
RingPoly inverse_ms(const Spectrum& A, const GaloisField& big, int m, Elem l);

bool check_binary(const Spectrum& A);

// k = zero count of U(z), cross-checked against deg gcd(u, 1+x^n);
// d0 = max cyclic run of ones. Requires an idempotent u (binary spectrum).
SpectralAnalysis analyze(const RingPoly& u, const GaloisField& sub, const GaloisField& big, int r, Elem l);

} // namespace cycldpc
