#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "channel.hpp"
#include "construct.hpp"

namespace cycldpc {

struct DecoderConfig {
    int max_iters = 100;
    bool early_stop = true; // stop as soon as the hard decision has zero syndrome
    double clamp = 1e-30;   // message floor applied before renormalization
};

struct DecodeRun {
    std::vector<uint32_t> decision; // field element values, length n
    bool converged = false;
    int iterations = 0;
    int syndrome_weight = 0; // of the final decision; converged implies 0
};

// Number of unsatisfied checks for a word given in value form.
int syndrome_weight(const ParityCheckMatrix& H, const GaloisField& sub, const std::vector<uint32_t>& word);

// One check node of degree w over the constraint sum_e h_e c_e = 0. update()
// maps the w incoming symbol distributions (flattened w*q, value-indexed) to
// the w outgoing extrinsic ones: per edge the input is permuted by its
// coefficient (v -> h_e v), transformed by the length-q Walsh-Hadamard
// transform, the exclude-one spectral products are formed with prefix/suffix
// arrays, transformed back, unpermuted, clamped to the floor and normalized.
// decode() reuses one kernel for all n circulant rows; the convolution-oracle
// tests drive it directly.
class CheckNodeKernel {
public:
    CheckNodeKernel(const GaloisField& sub, const std::vector<Elem>& coeffs);
    int degree() const { return w_; }
    int q() const { return q_; }
    void update(const double* in, double* out, double clamp);

private:
    int w_ = 0;
    int q_ = 0;
    std::vector<uint32_t> hmul_; // w*q coefficient permutation tables
    std::vector<double> f_;      // w*q spectra of the permuted inputs
    std::vector<double> pref_;   // (w+1)*q running spectral products
    std::vector<double> suf_;
    std::vector<double> scratch_;
};

// Probability-domain q-ary sum-product with a flooding schedule over all n
// circulant checks. Check nodes convolve via the length-2^m Walsh-Hadamard
// transform after the per-edge coefficient permutation. Argmax ties resolve
// to the lowest field-element value.
DecodeRun decode(const ParityCheckMatrix& H, const GaloisField& sub, const SymbolPriors& priors,
                 const DecoderConfig& cfg = {});

struct FerPoint {
    double ebno_db = 0.0;
    long long frames = 0;
    long long frame_errors = 0;
    long long symbol_errors = 0;
    long long bit_errors = 0;
    double fer = 0.0;
    double ber = 0.0; // binary-image bit error rate
    double avg_iterations = 0.0;
};

// Monte-Carlo sweep: random messages, systematic encoding, BPSK over AWGN,
// QSPA decoding. Each point stops at max_frames or, checked at 256-frame
// block boundaries, once frame_errors >= max_errors; block-synchronous
// accounting keeps the result independent of the worker thread count.
std::vector<FerPoint> fer_sweep(const CodeBlueprint& bp, const std::vector<double>& ebno_list,
                                long long max_frames, long long max_errors, uint64_t seed,
                                const DecoderConfig& cfg = {}, int threads = 0);

std::string fer_csv_header();
std::string fer_point_csv(const FerPoint& p);

} // namespace cycldpc
