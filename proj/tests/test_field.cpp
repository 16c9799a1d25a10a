#include "doctest.h"
#include "field.hpp"

#include <cstdint>

using namespace cycldpc;

namespace {

// carry-less product of two GF(2)[x] bit masks
uint64_t clmul(uint64_t a, uint64_t b) {
    uint64_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

} // namespace

TEST_CASE("lex-min primitive polynomials match the classic table") {
    CHECK(lexmin_primitive_poly(1) == 0x3u);
    CHECK(lexmin_primitive_poly(2) == 0x7u);
    CHECK(lexmin_primitive_poly(3) == 0xbu);
    CHECK(lexmin_primitive_poly(4) == 0x13u);
    CHECK(lexmin_primitive_poly(5) == 0x25u);
    CHECK(lexmin_primitive_poly(6) == 0x43u);
    CHECK(lexmin_primitive_poly(8) == 0x11du);
    for (int d = 1; d <= 14; ++d) {
        uint32_t mask = lexmin_primitive_poly(d);
        CHECK(is_primitive_poly(d, mask));
        // nothing lexicographically smaller with the right shape is primitive
        for (uint32_t lower = (1u << d) | 1u; lower < mask; lower += 2)
            CHECK_FALSE(is_primitive_poly(d, lower));
    }
}

TEST_CASE("is_primitive_poly rejects irreducible-but-imprimitive and reducible masks") {
    CHECK_FALSE(is_primitive_poly(6, 0x49)); // 1+x^3+x^6 divides x^9+1: order 9
    CHECK_FALSE(is_primitive_poly(6, 0x47)); // root at x = 1
    CHECK_FALSE(is_primitive_poly(4, 0x1f)); // 1+x+x^2+x^3+x^4: order 5
    CHECK_FALSE(is_primitive_poly(3, 0x9));  // 1+x^3 reducible
    CHECK_FALSE(is_primitive_poly(3, 0xa));  // constant term 0
    CHECK_THROWS_AS(lexmin_primitive_poly(0), CodeError);
    CHECK_THROWS_AS(lexmin_primitive_poly(17), CodeError);
}

TEST_CASE("exp/log tables round-trip and wrap") {
    GaloisField gf = GaloisField::from_degree(6);
    CHECK(gf.q() == 64);
    CHECK(gf.order() == 63);
    CHECK(gf.poly_mask() == 0x43u);
    CHECK(gf.exp(0) == 1u);
    for (uint32_t v = 1; v < 64; ++v) CHECK(gf.exp(gf.log(v)) == v);
    for (int e = 0; e < 63; ++e) CHECK(gf.log(gf.exp(e)) == e);
    CHECK(gf.exp(63) == gf.exp(0));
    CHECK(gf.exp(-1) == gf.exp(62));
    CHECK(gf.log(0) == ZERO);
}

TEST_CASE("field arithmetic agrees with value-form arithmetic") {
    GaloisField gf = GaloisField::from_degree(4);
    const int o = gf.order();
    for (Elem a = 0; a < o; ++a)
        for (Elem b = 0; b < o; ++b) {
            CHECK(gf.exp(gf.mul(a, b)) == gf.val_mul(gf.exp(a), gf.exp(b)));
            Elem s = gf.add(a, b);
            uint32_t sv = gf.exp(a) ^ gf.exp(b);
            CHECK((s == ZERO ? 0u : gf.exp(s)) == sv);
        }
    for (Elem a = 0; a < o; ++a) {
        CHECK(gf.mul(a, gf.inv(a)) == 0);
        CHECK(gf.square(a) == gf.mul(a, a));
        CHECK(gf.pow(a, 2) == gf.square(a));
        CHECK(gf.pow(a, o) == 0);
        CHECK(gf.pow(a, -1) == gf.inv(a));
    }
    CHECK(gf.mul(ZERO, 5) == ZERO);
    CHECK(gf.add(ZERO, 5) == 5);
    CHECK(gf.add(7, 7) == ZERO);
    CHECK(gf.pow(ZERO, 0) == 0);
    CHECK(gf.pow(ZERO, 3) == ZERO);
    CHECK(gf.val_mul(0, 9) == 0);
    CHECK_THROWS_AS(gf.inv(ZERO), CodeError);
}

TEST_CASE("square_chain walks the Frobenius orbit") {
    GaloisField gf = GaloisField::from_degree(6);
    auto ch = gf.square_chain(23, 6);
    CHECK(ch == std::vector<Elem>{23, 46, 29, 58, 53, 43});
    CHECK(gf.square(ch.back()) == 23); // closes after |orbit| steps
    CHECK_THROWS_AS(gf.square_chain(ZERO, 3), CodeError);
}

TEST_CASE("minimal polynomials of known elements") {
    GaloisField f64 = GaloisField::from_degree(6);
    CHECK(f64.minimal_polynomial(1) == 0x43u);  // the generator itself
    CHECK(f64.minimal_polynomial(21) == 0x7u);  // cube root of unity
    CHECK(f64.minimal_polynomial(0) == 0x3u);   // the unit element: 1+x
    GaloisField f256 = GaloisField::from_degree(8);
    CHECK(f256.minimal_polynomial(85) == 0x7u); // GF(4) generator inside GF(256)
    CHECK_THROWS_AS(f64.minimal_polynomial(ZERO), CodeError);
}

TEST_CASE("product of all distinct minimal polynomials is x^(q-1) + 1") {
    GaloisField gf = GaloisField::from_degree(4);
    uint64_t prod = 1;
    std::vector<uint32_t> seen;
    for (Elem e = 0; e < gf.order(); ++e) {
        uint32_t mp = gf.minimal_polynomial(e);
        bool dup = false;
        for (uint32_t s : seen) dup = dup || s == mp;
        if (dup) continue;
        seen.push_back(mp);
        prod = clmul(prod, mp);
    }
    CHECK(prod == ((1ull << 15) | 1ull));
}

TEST_CASE("subfield generator exponent") {
    CHECK(subfield_generator(2, 8) == 85);
    CHECK(subfield_generator(3, 6) == 9);
    CHECK(subfield_generator(1, 6) == 63);
    CHECK(subfield_generator(6, 6) == 1);
    CHECK(subfield_generator(5, 5) == 1);
    CHECK(subfield_generator(2, 12) == 1365);
    CHECK_THROWS_AS(subfield_generator(4, 6), CodeError);
}

TEST_CASE("from_poly accepts a non-lex-min primitive polynomial") {
    // 1+x^2+x^3 is primitive but not the degree-3 lex-min choice
    GaloisField gf = GaloisField::from_poly(3, 0xd);
    CHECK(gf.poly_mask() == 0xdu);
    for (uint32_t v = 1; v < 8; ++v) CHECK(gf.exp(gf.log(v)) == v);
    CHECK_THROWS_AS(GaloisField::from_poly(3, 0x9), CodeError); // reducible
}
