#include "channel.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"
#include "rng.hpp"

namespace cycldpc {

double ChannelConfig::sigma() const {
    if (rate <= 0.0 || rate > 1.0) fail(Err::invalid_argument, "code rate must lie in (0, 1]");
    return std::sqrt(1.0 / (2.0 * rate * std::pow(10.0, ebno_db / 10.0)));
}

std::vector<double> modulate(const RingPoly& codeword, const GaloisField& sub) {
    const int m = sub.degree();
    if (codeword.m != m) fail(Err::invalid_argument, "codeword and field degree mismatch");
    std::vector<double> x(static_cast<size_t>(codeword.n) * static_cast<size_t>(m));
    for (int j = 0; j < codeword.n; ++j) {
        uint32_t v = codeword.c[static_cast<size_t>(j)] == ZERO ? 0u : sub.exp(codeword.c[static_cast<size_t>(j)]);
        for (int b = 0; b < m; ++b)
            x[static_cast<size_t>(j) * m + static_cast<size_t>(b)] = ((v >> b) & 1u) ? -1.0 : 1.0;
    }
    return x;
}

std::vector<double> transmit(const std::vector<double>& x, const ChannelConfig& cfg, uint64_t frame) {
    SplitMix64 rng(cfg.seed, cfg.stream, frame);
    const double sigma = cfg.sigma();
    std::vector<double> y(x.size());
    for (size_t i = 0; i < x.size(); ++i) y[i] = x[i] + sigma * rng.normal();
    return y;
}

SymbolPriors symbol_priors(const std::vector<double>& y, double sigma, int m) {
    if (m < 1) fail(Err::invalid_argument, "field degree must be positive");
    if (!(sigma > 0.0)) fail(Err::invalid_argument, "sigma must be positive");
    if (y.size() % static_cast<size_t>(m) != 0) fail(Err::invalid_argument, "observation length is not a multiple of m");

    const int n = static_cast<int>(y.size()) / m;
    const int q = 1 << m;
    SymbolPriors pr;
    pr.n = n;
    pr.q = q;
    pr.p.resize(static_cast<size_t>(n) * static_cast<size_t>(q));

    const double inv2s2 = 1.0 / (2.0 * sigma * sigma);
    std::vector<double> lg(static_cast<size_t>(q));
    for (int j = 0; j < n; ++j) {
        const double* yj = y.data() + static_cast<size_t>(j) * m;
        double mx = -1e300;
        for (int v = 0; v < q; ++v) {
            double s = 0.0;
            for (int b = 0; b < m; ++b) {
                double tx = ((v >> b) & 1) ? -1.0 : 1.0;
                double d = yj[b] - tx;
                s -= d * d * inv2s2;
            }
            lg[static_cast<size_t>(v)] = s;
            mx = std::max(mx, s);
        }
        double* out = pr.at(j);
        double sum = 0.0;
        for (int v = 0; v < q; ++v) {
            out[v] = std::exp(lg[static_cast<size_t>(v)] - mx);
            sum += out[v];
        }
        for (int v = 0; v < q; ++v) out[v] /= sum;
    }
    return pr;
}

} // namespace cycldpc
