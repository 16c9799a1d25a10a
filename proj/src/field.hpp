#pragma once

#include <cstdint>
#include <vector>

#include "errors.hpp"

namespace cycldpc {

// Field element in discrete-log form relative to the field generator.
// ZERO is the additive zero; any other value is an exponent in [0, 2^a-2].
using Elem = int32_t;
inline constexpr Elem ZERO = -1;

inline constexpr int kMaxFieldDegree = 16;

// Lexicographically smallest primitive polynomial of the given degree,
// as a coefficient bit mask (bit i = coefficient of x^i).
uint32_t lexmin_primitive_poly(int degree);
bool is_primitive_poly(int degree, uint32_t mask);

// GF(2^degree) with exp/log tables over the polynomial basis of its
// defining primitive polynomial. Immutable once built.
class GaloisField {
public:
    GaloisField() = default; // empty; only a blueprint-assembly placeholder
    static GaloisField from_degree(int degree);               // lex-min poly
    static GaloisField from_poly(int degree, uint32_t mask);  // prescribed poly

    int degree() const { return degree_; }
    uint32_t poly_mask() const { return mask_; }
    int q() const { return 1 << degree_; }
    int order() const { return (1 << degree_) - 1; }          // q - 1

    // value form: polynomial-basis bit mask, 0 is the field zero
    uint32_t exp(int64_t i) const {                           // any integer exponent
        int o = order();
        int64_t r = i % o;
        return exp_[static_cast<size_t>(r < 0 ? r + o : r)];
    }
    Elem log(uint32_t v) const { return log_[v]; }

    Elem mul(Elem a, Elem b) const {
        if (a == ZERO || b == ZERO) return ZERO;
        int s = a + b;
        return s >= order() ? s - order() : s;
    }
    Elem add(Elem a, Elem b) const {
        uint32_t v = (a == ZERO ? 0u : exp_[static_cast<size_t>(a)]) ^
                     (b == ZERO ? 0u : exp_[static_cast<size_t>(b)]);
        return log_[v];
    }
    Elem inv(Elem a) const {
        if (a == ZERO) fail(Err::invalid_argument, "inverse of zero");
        return a == 0 ? 0 : order() - a;
    }
    // Frobenius x -> x^2
    Elem square(Elem a) const {
        if (a == ZERO) return ZERO;
        int s = 2 * a;
        return s >= order() ? s - order() : s;
    }
    Elem pow(Elem a, int64_t e) const {
        if (a == ZERO) return e == 0 ? 0 : ZERO;
        int o = order();
        int64_t r = (a * (e % o)) % o;
        return static_cast<Elem>(r < 0 ? r + o : r);
    }

    // value-form product, used by the decoder's hot loop
    uint32_t val_mul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        int s = log_[a] + log_[b];
        return exp_[static_cast<size_t>(s >= order() ? s - order() : s)];
    }

    // (e0, e0^2, e0^4, ...) of the given length
    std::vector<Elem> square_chain(Elem e0, int length) const;

    // product of (x + a^c) over the conjugates c of elem; always lands in GF(2),
    // returned as a coefficient bit mask
    uint32_t minimal_polynomial(Elem elem) const;

private:
    GaloisField(int degree, uint32_t mask);
    int degree_ = 0;
    uint32_t mask_ = 0;
    std::vector<uint32_t> exp_;
    std::vector<Elem> log_;
};

// beta = alpha^l with l = (2^m'-1)/(2^m-1); requires m | m'
Elem subfield_generator(int m, int m_prime);

} // namespace cycldpc
