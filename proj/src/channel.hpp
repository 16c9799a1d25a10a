#pragma once

#include <cstdint>
#include <vector>

#include "field.hpp"
#include "ring.hpp"

namespace cycldpc {

struct ChannelConfig {
    double ebno_db = 0.0;
    double rate = 0.5; // k/n, equal to the binary-image rate mk/mn
    uint64_t seed = 0;
    uint64_t stream = 0;
    // sigma^2 = 1 / (2 R 10^(EbN0/10))
    double sigma() const;
};

// Per-position probability distributions over the 2^m field element values.
struct SymbolPriors {
    int n = 0;
    int q = 0;
    std::vector<double> p; // p[j*q + value]
    double* at(int j) { return p.data() + static_cast<size_t>(j) * static_cast<size_t>(q); }
    const double* at(int j) const { return p.data() + static_cast<size_t>(j) * static_cast<size_t>(q); }
};

// BPSK image of the codeword: symbol j expands to channel positions
// j*m .. j*m+m-1 as its coordinates in the basis (1, beta, ..., beta^{m-1}),
// least significant first; bit b maps to 1-2b.
std::vector<double> modulate(const RingPoly& codeword, const GaloisField& sub);

// y = x + sigma * N(0,1), drawn from the (seed, stream, frame) counter stream.
std::vector<double> transmit(const std::vector<double>& x, const ChannelConfig& cfg, uint64_t frame);

// P(symbol = v) proportional to the product over its m bit positions of the
// Gaussian likelihood of the observation given that bit of v; normalized.
SymbolPriors symbol_priors(const std::vector<double>& y, double sigma, int m);

} // namespace cycldpc
