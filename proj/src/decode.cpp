#include "decode.hpp"

#include <atomic>
#include <bit>
#include <cmath>
#include <cstdio>
#include <thread>

#include "rng.hpp"

namespace cycldpc {

namespace {

// in-place Walsh-Hadamard transform over the XOR group of size q; self-
// inverse up to a factor q, which every caller absorbs by renormalizing
void wht(double* a, int q) {
    for (int len = 1; len < q; len <<= 1)
        for (int i = 0; i < q; i += len << 1)
            for (int j = i; j < i + len; ++j) {
                double u = a[j];
                double v = a[j + len];
                a[j] = u + v;
                a[j + len] = u - v;
            }
}

void clamp_normalize(double* a, int q, double floor) {
    double sum = 0.0;
    for (int x = 0; x < q; ++x) {
        if (!(a[x] > floor)) a[x] = floor;
        sum += a[x];
    }
    for (int x = 0; x < q; ++x) a[x] /= sum;
}

uint32_t argmax_lowest(const double* a, int q) {
    int best = 0;
    for (int x = 1; x < q; ++x)
        if (a[x] > a[best]) best = x;
    return static_cast<uint32_t>(best);
}

} // namespace

CheckNodeKernel::CheckNodeKernel(const GaloisField& sub, const std::vector<Elem>& coeffs)
    : w_(static_cast<int>(coeffs.size())), q_(sub.q()) {
    if (w_ < 1) fail(Err::invalid_argument, "check node needs at least one edge");
    hmul_.resize(static_cast<size_t>(w_) * q_);
    for (int e = 0; e < w_; ++e) {
        if (coeffs[static_cast<size_t>(e)] == ZERO) fail(Err::invalid_argument, "zero check coefficient");
        uint32_t hv = sub.exp(coeffs[static_cast<size_t>(e)]);
        uint32_t* t = hmul_.data() + static_cast<size_t>(e) * q_;
        for (int c = 0; c < q_; ++c) t[c] = sub.val_mul(hv, static_cast<uint32_t>(c));
    }
    f_.resize(static_cast<size_t>(w_) * q_);
    pref_.resize(static_cast<size_t>(w_ + 1) * q_);
    suf_.resize(static_cast<size_t>(w_ + 1) * q_);
    scratch_.resize(static_cast<size_t>(q_));
}

void CheckNodeKernel::update(const double* in, double* out, double clamp) {
    const size_t eq = static_cast<size_t>(q_);
    for (int e = 0; e < w_; ++e) {
        const double* ine = in + static_cast<size_t>(e) * eq;
        double* fe = f_.data() + static_cast<size_t>(e) * eq;
        const uint32_t* t = hmul_.data() + static_cast<size_t>(e) * eq;
        for (int c = 0; c < q_; ++c) fe[t[c]] = ine[c];
        wht(fe, q_);
    }
    for (int x = 0; x < q_; ++x) pref_[static_cast<size_t>(x)] = 1.0;
    for (int e = 0; e < w_; ++e) {
        const double* fe = f_.data() + static_cast<size_t>(e) * eq;
        const double* pe = pref_.data() + static_cast<size_t>(e) * eq;
        double* pn = pref_.data() + static_cast<size_t>(e + 1) * eq;
        for (int x = 0; x < q_; ++x) pn[x] = pe[x] * fe[x];
    }
    for (int x = 0; x < q_; ++x) suf_[static_cast<size_t>(w_) * eq + static_cast<size_t>(x)] = 1.0;
    for (int e = w_; e-- > 0;) {
        const double* fe = f_.data() + static_cast<size_t>(e) * eq;
        const double* sn = suf_.data() + static_cast<size_t>(e + 1) * eq;
        double* se = suf_.data() + static_cast<size_t>(e) * eq;
        for (int x = 0; x < q_; ++x) se[x] = sn[x] * fe[x];
    }
    for (int e = 0; e < w_; ++e) {
        const double* pe = pref_.data() + static_cast<size_t>(e) * eq;
        const double* sn = suf_.data() + static_cast<size_t>(e + 1) * eq;
        double* g = scratch_.data();
        for (int x = 0; x < q_; ++x) g[x] = pe[x] * sn[x];
        wht(g, q_);
        double* oute = out + static_cast<size_t>(e) * eq;
        const uint32_t* t = hmul_.data() + static_cast<size_t>(e) * eq;
        for (int c = 0; c < q_; ++c) oute[c] = g[t[c]];
        clamp_normalize(oute, q_, clamp);
    }
}

int syndrome_weight(const ParityCheckMatrix& H, const GaloisField& sub, const std::vector<uint32_t>& word) {
    if (static_cast<int>(word.size()) != H.n) fail(Err::invalid_argument, "word length must be n");
    const int w = H.row_weight();
    std::vector<uint32_t> cv(static_cast<size_t>(w));
    for (int e = 0; e < w; ++e) cv[static_cast<size_t>(e)] = sub.exp(H.coeffs[static_cast<size_t>(e)]);
    int bad = 0;
    for (int i = 0; i < H.n; ++i) {
        uint32_t acc = 0;
        for (int e = 0; e < w; ++e) {
            int j = H.offsets[static_cast<size_t>(e)] + i;
            if (j >= H.n) j -= H.n;
            acc ^= sub.val_mul(cv[static_cast<size_t>(e)], word[static_cast<size_t>(j)]);
        }
        if (acc != 0) ++bad;
    }
    return bad;
}

DecodeRun decode(const ParityCheckMatrix& H, const GaloisField& sub, const SymbolPriors& priors,
                 const DecoderConfig& cfg) {
    const int n = H.n;
    const int w = H.row_weight();
    const int q = sub.q();
    if (H.m != sub.degree()) fail(Err::invalid_argument, "matrix and field degree mismatch");
    if (priors.n != n || priors.q != q) fail(Err::invalid_argument, "priors shape mismatch");
    if (cfg.max_iters < 1) fail(Err::invalid_argument, "max iterations must be >= 1");
    if (!(cfg.clamp > 0.0)) fail(Err::invalid_argument, "clamp floor must be positive");

    // normalized local copy of the priors; reject all-zero vectors
    std::vector<double> pri(priors.p);
    for (int j = 0; j < n; ++j) {
        double* pj = pri.data() + static_cast<size_t>(j) * q;
        double sum = 0.0;
        for (int x = 0; x < q; ++x) {
            if (!(pj[x] >= 0.0) || !std::isfinite(pj[x])) fail(Err::invalid_argument, "prior entries must be finite and nonnegative");
            sum += pj[x];
        }
        if (!(sum > 0.0)) fail(Err::invalid_argument, "degenerate all-zero prior vector");
        for (int x = 0; x < q; ++x) pj[x] /= sum;
    }

    DecodeRun run;
    run.decision.resize(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) run.decision[static_cast<size_t>(j)] = argmax_lowest(pri.data() + static_cast<size_t>(j) * q, q);
    run.syndrome_weight = syndrome_weight(H, sub, run.decision);
    if (cfg.early_stop && run.syndrome_weight == 0) {
        run.converged = true;
        return run;
    }

    // edge (i, e) connects check i with column (offsets[e] + i) mod n
    const size_t eq = static_cast<size_t>(q);
    std::vector<double> qm(static_cast<size_t>(n) * w * eq);
    std::vector<double> rm(static_cast<size_t>(n) * w * eq);
    for (int i = 0; i < n; ++i)
        for (int e = 0; e < w; ++e) {
            int col = H.offsets[static_cast<size_t>(e)] + i;
            if (col >= n) col -= n;
            std::copy_n(pri.data() + static_cast<size_t>(col) * q, q,
                        qm.data() + (static_cast<size_t>(i) * w + static_cast<size_t>(e)) * eq);
        }

    CheckNodeKernel kernel(sub, H.coeffs);
    std::vector<double> pref(static_cast<size_t>(w + 1) * eq);
    std::vector<double> suf(static_cast<size_t>(w + 1) * eq);
    std::vector<double> post(static_cast<size_t>(n) * eq);

    for (int it = 1; it <= cfg.max_iters; ++it) {
        // check pass
        for (int i = 0; i < n; ++i)
            kernel.update(qm.data() + static_cast<size_t>(i) * w * eq,
                          rm.data() + static_cast<size_t>(i) * w * eq, cfg.clamp);

        // variable pass and posterior decision
        for (int j = 0; j < n; ++j) {
            const double* pj = pri.data() + static_cast<size_t>(j) * eq;
            std::copy_n(pj, q, pref.data());
            for (int e = 0; e < w; ++e) {
                int i = j - H.offsets[static_cast<size_t>(e)];
                if (i < 0) i += n;
                const double* rme = rm.data() + (static_cast<size_t>(i) * w + static_cast<size_t>(e)) * eq;
                const double* pe = pref.data() + static_cast<size_t>(e) * eq;
                double* pn = pref.data() + static_cast<size_t>(e + 1) * eq;
                for (int x = 0; x < q; ++x) pn[x] = pe[x] * rme[x];
            }
            for (int x = 0; x < q; ++x) suf[static_cast<size_t>(w) * eq + static_cast<size_t>(x)] = 1.0;
            for (int e = w; e-- > 0;) {
                int i = j - H.offsets[static_cast<size_t>(e)];
                if (i < 0) i += n;
                const double* rme = rm.data() + (static_cast<size_t>(i) * w + static_cast<size_t>(e)) * eq;
                const double* sn = suf.data() + static_cast<size_t>(e + 1) * eq;
                double* se = suf.data() + static_cast<size_t>(e) * eq;
                for (int x = 0; x < q; ++x) se[x] = sn[x] * rme[x];
            }
            for (int e = 0; e < w; ++e) {
                int i = j - H.offsets[static_cast<size_t>(e)];
                if (i < 0) i += n;
                double* qme = qm.data() + (static_cast<size_t>(i) * w + static_cast<size_t>(e)) * eq;
                const double* pe = pref.data() + static_cast<size_t>(e) * eq;
                const double* sn = suf.data() + static_cast<size_t>(e + 1) * eq;
                for (int x = 0; x < q; ++x) qme[x] = pe[x] * sn[x];
                clamp_normalize(qme, q, cfg.clamp);
            }
            double* pst = post.data() + static_cast<size_t>(j) * eq;
            std::copy_n(pref.data() + static_cast<size_t>(w) * eq, q, pst);
            clamp_normalize(pst, q, cfg.clamp);
        }

        run.iterations = it;
        for (int j = 0; j < n; ++j) run.decision[static_cast<size_t>(j)] = argmax_lowest(post.data() + static_cast<size_t>(j) * eq, q);
        run.syndrome_weight = syndrome_weight(H, sub, run.decision);
        if (cfg.early_stop && run.syndrome_weight == 0) {
            run.converged = true;
            return run;
        }
    }
    run.converged = run.syndrome_weight == 0;
    return run;
}

std::vector<FerPoint> fer_sweep(const CodeBlueprint& bp, const std::vector<double>& ebno_list,
                                long long max_frames, long long max_errors, uint64_t seed,
                                const DecoderConfig& cfg, int threads) {
    if (max_frames < 1) fail(Err::invalid_argument, "frame budget must be positive");
    if (max_errors < 1) fail(Err::invalid_argument, "error budget must be positive");
    if (bp.k < 1) fail(Err::invalid_argument, "cannot simulate a dimension-0 code");
    int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;

    const int n = bp.n;
    const int m = bp.m;
    const int q = bp.sub.q();
    const double rate = static_cast<double>(bp.k) / n;
    constexpr long long kBlock = 256;

    std::vector<FerPoint> out;
    for (size_t pi = 0; pi < ebno_list.size(); ++pi) {
        ChannelConfig ccfg{ebno_list[pi], rate, seed, 2 * static_cast<uint64_t>(pi)};
        const uint64_t msg_stream = 2 * static_cast<uint64_t>(pi) + 1;
        const double sigma = ccfg.sigma();

        FerPoint pt;
        pt.ebno_db = ebno_list[pi];
        long long iter_sum = 0;

        struct Tally {
            long long fe = 0, se = 0, be = 0, it = 0;
        };

        auto run_frame = [&](long long f, Tally& tal) {
            SplitMix64 mrng(seed, msg_stream, static_cast<uint64_t>(f));
            std::vector<Elem> msg(static_cast<size_t>(bp.k));
            for (int i = 0; i < bp.k; ++i) {
                uint32_t v = static_cast<uint32_t>(mrng.next() & static_cast<uint64_t>(q - 1));
                msg[static_cast<size_t>(i)] = v == 0 ? ZERO : bp.sub.log(v);
            }
            RingPoly cw = systematic_encode(bp, msg);
            std::vector<uint32_t> truth(static_cast<size_t>(n));
            for (int j = 0; j < n; ++j)
                truth[static_cast<size_t>(j)] =
                    cw.c[static_cast<size_t>(j)] == ZERO ? 0u : bp.sub.exp(cw.c[static_cast<size_t>(j)]);
            std::vector<double> x = modulate(cw, bp.sub);
            std::vector<double> y = transmit(x, ccfg, static_cast<uint64_t>(f));
            SymbolPriors pr = symbol_priors(y, sigma, m);
            DecodeRun run = decode(bp.H, bp.sub, pr, cfg);
            tal.it += run.iterations;
            int se = 0;
            long long be = 0;
            for (int j = 0; j < n; ++j) {
                uint32_t d = run.decision[static_cast<size_t>(j)] ^ truth[static_cast<size_t>(j)];
                if (d) {
                    ++se;
                    be += std::popcount(d);
                }
            }
            if (se) ++tal.fe;
            tal.se += se;
            tal.be += be;
        };

        while (pt.frames < max_frames && pt.frame_errors < max_errors) {
            const long long base = pt.frames;
            const long long count = std::min(kBlock, max_frames - base);
            std::vector<Tally> tals(static_cast<size_t>(workers));
            if (workers == 1 || count == 1) {
                for (long long f = base; f < base + count; ++f) run_frame(f, tals[0]);
            } else {
                std::atomic<long long> nextf{base};
                auto work = [&](int t) {
                    for (;;) {
                        long long f = nextf.fetch_add(1);
                        if (f >= base + count) return;
                        run_frame(f, tals[static_cast<size_t>(t)]);
                    }
                };
                std::vector<std::thread> pool;
                for (int t = 0; t < workers; ++t) pool.emplace_back(work, t);
                for (auto& th : pool) th.join();
            }
            for (const Tally& t : tals) {
                pt.frame_errors += t.fe;
                pt.symbol_errors += t.se;
                pt.bit_errors += t.be;
                iter_sum += t.it;
            }
            pt.frames += count;
        }

        pt.fer = static_cast<double>(pt.frame_errors) / static_cast<double>(pt.frames);
        pt.ber = static_cast<double>(pt.bit_errors) /
                 (static_cast<double>(pt.frames) * static_cast<double>(n) * static_cast<double>(m));
        pt.avg_iterations = static_cast<double>(iter_sum) / static_cast<double>(pt.frames);
        out.push_back(pt);
    }
    return out;
}

std::string fer_csv_header() { return "ebno_db,frames,frame_errors,fer,ber,avg_iterations"; }

std::string fer_point_csv(const FerPoint& p) {
    char buf[192];
    std::snprintf(buf, sizeof buf, "%g,%lld,%lld,%.10g,%.10g,%.10g", p.ebno_db, p.frames, p.frame_errors,
                  p.fer, p.ber, p.avg_iterations);
    return buf;
}

} // namespace cycldpc
