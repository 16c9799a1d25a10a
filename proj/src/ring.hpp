#pragma once

#include <string>
#include <vector>

#include "field.hpp"

namespace cycldpc {

// Polynomial of degree < n over GF(2^m), arithmetic mod 1+x^n. Coefficients
// are kept in discrete-log form relative to the subfield generator beta.
struct RingPoly {
    int n = 0;
    int m = 0;
    std::vector<Elem> c; // length n, ZERO marks an absent term

    static RingPoly zero(int n, int m) { return RingPoly{n, m, std::vector<Elem>(static_cast<size_t>(n), ZERO)}; }

    bool is_zero() const;
    int weight() const;
    int degree() const;                   // largest exponent with a nonzero coefficient, -1 for zero
    std::vector<int> support() const;     // ascending exponents
    bool operator==(const RingPoly&) const = default;
};

RingPoly ring_add(const RingPoly& a, const RingPoly& b, const GaloisField& gf);
RingPoly ring_mul(const RingPoly& a, const RingPoly& b, const GaloisField& gf);
RingPoly ring_square(const RingPoly& a, const GaloisField& gf);
// x^deg(a) * a(1/x): coefficient at i moves to deg(a) - i (mod n)
RingPoly reciprocal(const RingPoly& a);

// Dense polynomial over GF(2^m) for the gcd/division route: index = degree,
// log-form coefficients, no trailing ZERO entries (empty vector = zero poly).
using DensePoly = std::vector<Elem>;

DensePoly dense_from_ring(const RingPoly& a);
DensePoly dense_one_plus_xn(int n);
int dense_weight(const DensePoly& a);
DensePoly dense_mul(const DensePoly& a, const DensePoly& b, const GaloisField& gf);
// returns {quotient, remainder}
std::pair<DensePoly, DensePoly> dense_divmod(const DensePoly& a, const DensePoly& b, const GaloisField& gf);

// monic gcd(a, 1+x^n); k = deg of the result
DensePoly gcd_with_xn(const RingPoly& a, const GaloisField& gf);
// (1+x^n)/h, errors unless the division is exact
DensePoly quotient_xn(const DensePoly& h, int n, const GaloisField& gf);

// Text grammar shared by the CLI and the verification fixtures: terms
// "c*x^e" joined by "+", with c one of "b<j>" (beta^j), "1", "0".
// The writer is strict (ascending exponents, "1" for beta^0, no zero terms);
// the parser additionally tolerates whitespace, "b0", and zero-coefficient terms.
std::string poly_to_text(const RingPoly& a);
RingPoly poly_parse_text(const std::string& text, int n, int m);

std::string dense_binary_to_text(uint32_t mask); // for p(x) reports

} // namespace cycldpc
