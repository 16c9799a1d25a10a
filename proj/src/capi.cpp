#include "cycldpc.h"

#include <cstring>
#include <fstream>
#include <string>

#include "alist.hpp"
#include "construct.hpp"
#include "decode.hpp"
#include "ring.hpp"
#include "search.hpp"

using namespace cycldpc;

struct cycldpc_code {
    CodeBlueprint bp;
    std::string u_text;
    std::string p_text;
    std::string girth;
};

namespace {

thread_local std::string g_last_error;

cycldpc_status map_err(Err e) {
    switch (e) {
        case Err::ok: return CYCLDPC_OK;
        case Err::invalid_argument: return CYCLDPC_EINVAL;
        case Err::unsupported: return CYCLDPC_UNSUPPORTED;
        case Err::inadmissible_coeff: return CYCLDPC_INADMISSIBLE;
        case Err::degenerate: return CYCLDPC_DEGENERATE;
        case Err::not_idempotent: return CYCLDPC_NOT_IDEMPOTENT;
        case Err::io: return CYCLDPC_IO;
        case Err::internal: return CYCLDPC_INTERNAL;
    }
    return CYCLDPC_INTERNAL;
}

template <typename F>
cycldpc_status guarded(F&& f) {
    try {
        f();
        g_last_error.clear();
        return CYCLDPC_OK;
    } catch (const CodeError& e) {
        g_last_error = e.what();
        return map_err(e.code);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CYCLDPC_INTERNAL;
    }
}

cycldpc_code* wrap(CodeBlueprint&& bp) {
    auto* c = new cycldpc_code{std::move(bp), {}, {}, {}};
    c->u_text = poly_to_text(c->bp.u);
    c->p_text = dense_binary_to_text(c->bp.p_mask);
    c->girth = c->bp.girth_name();
    return c;
}

bool check_handle(const cycldpc_code* code) {
    if (code) return true;
    g_last_error = "null code handle";
    return false;
}

} // namespace

extern "C" {

cycldpc_status cycldpc_construct(int n, int m, const int* leaders, const int* seeds, size_t count,
                                 cycldpc_code** out) {
    if (!out || !leaders || !seeds || count == 0) {
        g_last_error = "null output, empty leader list, or null arrays";
        return CYCLDPC_EINVAL;
    }
    *out = nullptr;
    return guarded([&] {
        IdempotentSpec spec;
        spec.n = n;
        spec.m = m;
        for (size_t i = 0; i < count; ++i) spec.leaders.emplace_back(leaders[i], seeds[i]);
        *out = wrap(make_blueprint(spec));
    });
}

cycldpc_status cycldpc_construct_from_text(int n, int m, const char* u_text, int allow_degenerate,
                                           cycldpc_code** out) {
    if (!out || !u_text) {
        g_last_error = "null output or text";
        return CYCLDPC_EINVAL;
    }
    *out = nullptr;
    return guarded([&] {
        RingPoly u = poly_parse_text(u_text, n, m);
        *out = wrap(make_blueprint_from_poly(u, allow_degenerate == 0));
    });
}

void cycldpc_code_free(cycldpc_code* code) { delete code; }

int cycldpc_code_n(const cycldpc_code* c) { return c ? c->bp.n : 0; }
int cycldpc_code_m(const cycldpc_code* c) { return c ? c->bp.m : 0; }
int cycldpc_code_m_prime(const cycldpc_code* c) { return c ? c->bp.m_prime : 0; }
int cycldpc_code_r(const cycldpc_code* c) { return c ? c->bp.r : 0; }
int cycldpc_code_l(const cycldpc_code* c) { return c ? static_cast<int>(c->bp.l) : 0; }
int cycldpc_code_k(const cycldpc_code* c) { return c ? c->bp.k : 0; }
int cycldpc_code_bch_lower(const cycldpc_code* c) { return c ? c->bp.bch_lower : 0; }
int cycldpc_code_dmin_upper(const cycldpc_code* c) { return c ? c->bp.dmin_upper : 0; }
int cycldpc_code_row_weight(const cycldpc_code* c) { return c ? c->bp.H.row_weight() : 0; }
int cycldpc_code_orthogonal(const cycldpc_code* c) { return c && c->bp.orthogonal ? 1 : 0; }
int cycldpc_code_difference_set(const cycldpc_code* c) { return c && c->bp.difference_set ? 1 : 0; }
int cycldpc_code_four_cycle_free(const cycldpc_code* c) { return c && c->bp.four_cycle_free ? 1 : 0; }

const char* cycldpc_code_u_text(const cycldpc_code* c) { return c ? c->u_text.c_str() : ""; }
const char* cycldpc_code_p_text(const cycldpc_code* c) { return c ? c->p_text.c_str() : ""; }
const char* cycldpc_code_girth_name(const cycldpc_code* c) { return c ? c->girth.c_str() : ""; }

cycldpc_status cycldpc_code_binary_dmin(const cycldpc_code* code, int cap, int* out) {
    if (!check_handle(code)) return CYCLDPC_EINVAL;
    if (!out) {
        g_last_error = "null output";
        return CYCLDPC_EINVAL;
    }
    return guarded([&] {
        auto d = code->bp.binary_dmin(cap > 0 ? cap : 22);
        if (!d) fail(Err::unsupported, "binary image dimension exceeds the exhaustive-search cap");
        *out = *d;
    });
}

cycldpc_status cycldpc_encode(const cycldpc_code* code, const uint32_t* message, uint32_t* codeword) {
    if (!check_handle(code)) return CYCLDPC_EINVAL;
    if (!message || !codeword) {
        g_last_error = "null buffer";
        return CYCLDPC_EINVAL;
    }
    return guarded([&] {
        const auto& bp = code->bp;
        std::vector<Elem> msg(static_cast<size_t>(bp.k));
        for (int i = 0; i < bp.k; ++i) {
            if (message[i] >= static_cast<uint32_t>(bp.sub.q()))
                fail(Err::invalid_argument, "message value out of field range");
            msg[static_cast<size_t>(i)] = message[i] == 0 ? ZERO : bp.sub.log(message[i]);
        }
        RingPoly cw = systematic_encode(bp, msg);
        for (int j = 0; j < bp.n; ++j)
            codeword[j] = cw.c[static_cast<size_t>(j)] == ZERO ? 0u : bp.sub.exp(cw.c[static_cast<size_t>(j)]);
    });
}

cycldpc_status cycldpc_syndrome_weight(const cycldpc_code* code, const uint32_t* word, int* out) {
    if (!check_handle(code)) return CYCLDPC_EINVAL;
    if (!word || !out) {
        g_last_error = "null buffer";
        return CYCLDPC_EINVAL;
    }
    return guarded([&] {
        const auto& bp = code->bp;
        for (int j = 0; j < bp.n; ++j)
            if (word[j] >= static_cast<uint32_t>(bp.sub.q()))
                fail(Err::invalid_argument, "word value out of field range");
        std::vector<uint32_t> w(word, word + bp.n);
        *out = syndrome_weight(bp.H, bp.sub, w);
    });
}

cycldpc_status cycldpc_decode(const cycldpc_code* code, const double* priors, int max_iters,
                              uint32_t* decision, int* iterations, int* converged) {
    if (!check_handle(code)) return CYCLDPC_EINVAL;
    if (!priors || !decision) {
        g_last_error = "null buffer";
        return CYCLDPC_EINVAL;
    }
    return guarded([&] {
        const auto& bp = code->bp;
        SymbolPriors pr;
        pr.n = bp.n;
        pr.q = bp.sub.q();
        pr.p.assign(priors, priors + static_cast<size_t>(bp.n) * pr.q);
        DecoderConfig cfg;
        if (max_iters > 0) cfg.max_iters = max_iters;
        DecodeRun run = decode(bp.H, bp.sub, pr, cfg);
        for (int j = 0; j < bp.n; ++j) decision[j] = run.decision[static_cast<size_t>(j)];
        if (iterations) *iterations = run.iterations;
        if (converged) *converged = run.converged ? 1 : 0;
    });
}

cycldpc_status cycldpc_simulate(const cycldpc_code* code, const double* ebno_db, size_t count,
                                long long max_frames, long long max_errors, uint64_t seed,
                                int max_iters, int threads, cycldpc_fer_point* out) {
    if (!check_handle(code)) return CYCLDPC_EINVAL;
    if (!ebno_db || !out || count == 0) {
        g_last_error = "null buffer or empty grid";
        return CYCLDPC_EINVAL;
    }
    return guarded([&] {
        DecoderConfig cfg;
        if (max_iters > 0) cfg.max_iters = max_iters;
        std::vector<double> grid(ebno_db, ebno_db + count);
        std::vector<FerPoint> pts = fer_sweep(code->bp, grid, max_frames, max_errors, seed, cfg, threads);
        for (size_t i = 0; i < pts.size(); ++i) {
            out[i].ebno_db = pts[i].ebno_db;
            out[i].frames = pts[i].frames;
            out[i].frame_errors = pts[i].frame_errors;
            out[i].fer = pts[i].fer;
            out[i].ber = pts[i].ber;
            out[i].avg_iterations = pts[i].avg_iterations;
        }
    });
}

cycldpc_status cycldpc_search(int n, int m, int w_max, int k_min, int d, int allow_4cycles, int mode,
                              int threads, cycldpc_search_cb cb, void* user) {
    if (!cb) {
        g_last_error = "null callback";
        return CYCLDPC_EINVAL;
    }
    return guarded([&] {
        SearchConstraints cons;
        cons.w_max = w_max;
        cons.k_min = k_min;
        cons.d = d;
        cons.allow_4cycles = allow_4cycles != 0;
        cons.mode = mode != 0 ? CoeffScanMode::leader_canonical : CoeffScanMode::full_scan;
        cons.threads = threads;
        search_enumerate(n, m, cons, [&](const SearchRecord& rec) {
            std::string line = search_record_csv(rec);
            cb(line.c_str(), user);
        });
    });
}

const char* cycldpc_search_csv_header(void) {
    static const std::string header = search_csv_header();
    return header.c_str();
}

cycldpc_status cycldpc_write_alist(const cycldpc_code* code, const char* path) {
    if (!check_handle(code)) return CYCLDPC_EINVAL;
    if (!path) {
        g_last_error = "null path";
        return CYCLDPC_EINVAL;
    }
    return guarded([&] {
        std::ofstream f(path);
        if (!f) fail(Err::io, std::string("cannot open ") + path);
        f << alist_text(code->bp.H);
        if (!f.good()) fail(Err::io, std::string("write failed for ") + path);
    });
}

cycldpc_status cycldpc_write_matrix_csv(const cycldpc_code* code, const char* path) {
    if (!check_handle(code)) return CYCLDPC_EINVAL;
    if (!path) {
        g_last_error = "null path";
        return CYCLDPC_EINVAL;
    }
    return guarded([&] {
        std::ofstream f(path);
        if (!f) fail(Err::io, std::string("cannot open ") + path);
        f << matrix_csv_text(code->bp.H);
        if (!f.good()) fail(Err::io, std::string("write failed for ") + path);
    });
}

const char* cycldpc_version(void) { return "0.1.0"; }

const char* cycldpc_last_error_message(void) { return g_last_error.c_str(); }

} // extern "C"
