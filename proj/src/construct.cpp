#include "construct.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace cycldpc {

int admissible_step(int m, int coset_size) {
    int d = std::gcd(m, coset_size);
    return ((1 << m) - 1) / ((1 << d) - 1);
}

bool is_admissible_seed(int m, int coset_size, Elem seed) {
    if (seed == ZERO) return false;
    return seed % admissible_step(m, coset_size) == 0;
}

RingPoly cyclotomic_idempotent(const std::vector<int>& coset, Elem e0, int n, const GaloisField& sub) {
    if (e0 != ZERO) {
        if (e0 < 0) fail(Err::invalid_argument, "seed exponent must be nonnegative");
        e0 = static_cast<Elem>(e0 % sub.order());
    }
    if (!is_admissible_seed(sub.degree(), static_cast<int>(coset.size()), e0)) {
        int d = std::gcd(sub.degree(), static_cast<int>(coset.size()));
        fail(Err::inadmissible_coeff,
             "seed beta^" + std::to_string(e0) + " does not close around a coset of size " +
                 std::to_string(coset.size()) + "; admissible seeds lie in GF(2^" + std::to_string(d) + ")");
    }
    RingPoly r = RingPoly::zero(n, sub.degree());
    Elem e = e0;
    for (int x : coset) {
        r.c[static_cast<size_t>(x)] = e;
        e = sub.square(e);
    }
    return r;
}

RingPoly parity_check_idempotent(const IdempotentSpec& spec, const CosetTable& cosets, const GaloisField& sub) {
    if (spec.leaders.empty()) fail(Err::invalid_argument, "empty leader set");
    RingPoly u = RingPoly::zero(spec.n, spec.m);
    int prev = -1;
    for (auto [leader, seed] : spec.leaders) {
        if (leader <= prev) fail(Err::invalid_argument, "leaders must be ascending and distinct");
        prev = leader;
        const auto& c = cosets.coset_by_leader(leader);
        RingPoly e = cyclotomic_idempotent(c, seed, spec.n, sub);
        u = ring_add(u, e, sub);
    }
    return u;
}

bool is_idempotent(const RingPoly& p, const GaloisField& sub) {
    return ring_square(p, sub) == p;
}

bool degeneracy_check(const RingPoly& u, int n) {
    if (u.is_zero()) fail(Err::invalid_argument, "degeneracy check on the zero polynomial");
    int g = 0;
    for (int e : u.support()) g = std::gcd(g, e);
    return std::gcd(n, g) > 1;
}

Elem ParityCheckMatrix::entry(int i, int j) const {
    for (size_t e = 0; e < offsets.size(); ++e)
        if ((offsets[e] + i) % n == j) return coeffs[e];
    return ZERO;
}

ParityCheckMatrix build_parity_check_matrix(const RingPoly& u) {
    if (u.is_zero()) fail(Err::invalid_argument, "parity-check matrix of the zero polynomial");
    RingPoly row0 = reciprocal(u);
    ParityCheckMatrix H;
    H.n = u.n;
    H.m = u.m;
    for (int j = 0; j < u.n; ++j) {
        Elem c = row0.c[static_cast<size_t>(j)];
        if (c == ZERO) continue;
        H.offsets.push_back(j);
        H.coeffs.push_back(c);
    }
    return H;
}

std::vector<long long> difference_enumerator(const RingPoly& u) {
    std::vector<long long> d(static_cast<size_t>(u.n), 0);
    std::vector<int> s = u.support();
    for (int a : s)
        for (int b : s) {
            int t = a - b;
            if (t < 0) t += u.n;
            ++d[static_cast<size_t>(t)];
        }
    return d;
}

GirthClass girth_classify(const std::vector<long long>& d) {
    bool all_one = true;
    for (size_t i = 1; i < d.size(); ++i) {
        if (d[i] >= 2) return GirthClass::has_4cycles;
        if (d[i] != 1) all_one = false;
    }
    return all_one ? GirthClass::difference_set : GirthClass::orthogonal_osmld;
}

std::string girth_class_name(GirthClass g) {
    switch (g) {
        case GirthClass::orthogonal_osmld: return "orthogonal";
        case GirthClass::difference_set: return "difference-set";
        case GirthClass::has_4cycles: return "has-4-cycles";
    }
    return "?";
}

bool has_singular_4cycles(const RingPoly& u, const GaloisField& sub) {
    std::vector<int> s = u.support();
    const int n = u.n;
    std::vector<char> seen(static_cast<size_t>(sub.order()), 0);
    for (int delta = 1; delta < n; ++delta) {
        std::vector<int> used;
        bool hit = false;
        for (int x : s) {
            int y = x - delta;
            if (y < 0) y += n;
            Elem cy = u.c[static_cast<size_t>(y)];
            if (cy == ZERO) continue;
            Elem ratio = u.c[static_cast<size_t>(x)] - cy;
            if (ratio < 0) ratio += sub.order();
            if (seen[static_cast<size_t>(ratio)]) {
                hit = true;
                break;
            }
            seen[static_cast<size_t>(ratio)] = 1;
            used.push_back(ratio);
        }
        for (int ratio : used) seen[static_cast<size_t>(ratio)] = 0;
        if (hit) return true;
    }
    return false;
}

std::string CodeBlueprint::girth_name() const {
    if (difference_set) return girth_class_name(GirthClass::difference_set);
    if (orthogonal) return girth_class_name(GirthClass::orthogonal_osmld);
    if (four_cycle_free) return "4-cycle-free";
    return girth_class_name(GirthClass::has_4cycles);
}

namespace {

uint32_t step3_poly(int m, const GaloisField& big) {
    // p(x) is the minimal polynomial of alpha^s for the smallest s whose
    // cyclotomic coset mod 2^m'-1 has size m; for m = 1 that is s = 0
    if (m == 1) return 0x3;
    const int64_t o = big.order();
    for (int64_t s = 1; s < o; ++s) {
        int size = 1;
        int64_t x = s * 2 % o;
        while (x != s) {
            x = x * 2 % o;
            ++size;
            if (size > m) break;
        }
        if (size == m) return big.minimal_polynomial(static_cast<Elem>(s));
    }
    fail(Err::internal, "no coset of size m in the splitting field");
}

CodeBlueprint assemble(int n, int m, const IdempotentSpec& spec, const RingPoly* given_u, bool reject_degenerate) {
    ConstructionContext ctx = make_context(n, m);
    int m_prime = ctx.m_prime;
    uint32_t p_mask = ctx.p_mask;
    GaloisField big = std::move(ctx.big);
    GaloisField sub = std::move(ctx.sub);
    CosetTable cosets = std::move(ctx.cosets);

    RingPoly u = given_u ? *given_u : parity_check_idempotent(spec, cosets, sub);
    if (u.is_zero()) fail(Err::invalid_argument, "u(x) is zero");
    if (!is_idempotent(u, sub)) fail(Err::not_idempotent, "u(x) fails the idempotent property");
    bool degen = degeneracy_check(u, n);
    if (degen && reject_degenerate)
        fail(Err::degenerate, "support exponents share a factor with n");

    CodeBlueprint bp;
    bp.n = n;
    bp.m = m;
    bp.m_prime = m_prime;
    bp.r = static_cast<int>(((1ll << m_prime) - 1) / n);
    bp.l = subfield_generator(m, m_prime);
    bp.p_mask = p_mask;
    bp.spec = spec;
    bp.u = u;
    bp.big = std::move(big);
    bp.sub = std::move(sub);
    bp.cosets = std::move(cosets);

    SpectralAnalysis an = analyze(bp.u, bp.sub, bp.big, bp.r, bp.l);
    bp.k = an.k;
    bp.bch_lower = an.lower_bound;
    bp.dmin_upper = an.upper_bound;
    bp.h = gcd_with_xn(bp.u, bp.sub);
    bp.g = quotient_xn(bp.h, n, bp.sub);
    bp.H = build_parity_check_matrix(bp.u);

    GirthClass cls = girth_classify(difference_enumerator(bp.u));
    bp.orthogonal = cls != GirthClass::has_4cycles;
    bp.difference_set = cls == GirthClass::difference_set;
    bp.four_cycle_free = bp.orthogonal || !has_singular_4cycles(bp.u, bp.sub);
    return bp;
}

IdempotentSpec recover_spec(const RingPoly& u, const CosetTable& cosets) {
    IdempotentSpec spec{u.n, u.m, {}};
    for (size_t ci = 0; ci < cosets.cosets.size(); ++ci) {
        int leader = cosets.leaders[ci];
        Elem seed = u.c[static_cast<size_t>(leader)];
        if (seed != ZERO) spec.leaders.emplace_back(leader, seed);
    }
    return spec;
}

} // namespace

ConstructionContext make_context(int n, int m) {
    if (n < 3 || n % 2 == 0) fail(Err::invalid_argument, "n must be odd and >= 3");
    if (m < 1) fail(Err::invalid_argument, "m must be positive");
    int m_prime = ord2(n);
    if (m_prime > kMaxFieldDegree)
        fail(Err::unsupported, "splitting field degree " + std::to_string(m_prime) + " exceeds the cap of 16");
    if (m_prime % m != 0)
        fail(Err::unsupported, "constructible only when m divides m' (" + std::to_string(m) + " does not divide " +
                                   std::to_string(m_prime) + ")");

    ConstructionContext ctx;
    ctx.n = n;
    ctx.m = m;
    ctx.m_prime = m_prime;
    ctx.r = static_cast<int>(((1ll << m_prime) - 1) / n);
    ctx.l = subfield_generator(m, m_prime);
    ctx.big = GaloisField::from_degree(m_prime);
    ctx.p_mask = step3_poly(m, ctx.big);
    ctx.sub = GaloisField::from_poly(m, ctx.p_mask);
    ctx.cosets = cyclotomic_cosets(n);
    return ctx;
}

CodeBlueprint make_blueprint(const IdempotentSpec& spec) {
    return assemble(spec.n, spec.m, spec, nullptr, true);
}

CodeBlueprint make_blueprint_from_poly(const RingPoly& u, bool reject_degenerate) {
    IdempotentSpec spec = recover_spec(u, cyclotomic_cosets(u.n));
    return assemble(u.n, u.m, spec, &u, reject_degenerate);
}

RingPoly systematic_encode(const CodeBlueprint& bp, const std::vector<Elem>& message) {
    if (static_cast<int>(message.size()) != bp.k)
        fail(Err::invalid_argument, "message length must be k = " + std::to_string(bp.k));
    const int nk = bp.n - bp.k;
    DensePoly shifted(static_cast<size_t>(bp.n), ZERO);
    for (int i = 0; i < bp.k; ++i) shifted[static_cast<size_t>(nk + i)] = message[static_cast<size_t>(i)];
    auto [q, rem] = dense_divmod(shifted, bp.g, bp.sub);
    (void)q;
    RingPoly c = RingPoly::zero(bp.n, bp.m);
    for (int i = 0; i < bp.k; ++i) c.c[static_cast<size_t>(nk + i)] = message[static_cast<size_t>(i)];
    for (size_t i = 0; i < rem.size(); ++i) c.c[i] = bp.sub.add(c.c[i], rem[i]);
    return c;
}

int syndrome_weight(const CodeBlueprint& bp, const std::vector<uint32_t>& word_values) {
    if (static_cast<int>(word_values.size()) != bp.n)
        fail(Err::invalid_argument, "word length must be n");
    const auto& H = bp.H;
    const int w = H.row_weight();
    std::vector<uint32_t> coeff_vals(static_cast<size_t>(w));
    for (int e = 0; e < w; ++e) coeff_vals[static_cast<size_t>(e)] = bp.sub.exp(H.coeffs[static_cast<size_t>(e)]);
    int bad = 0;
    for (int i = 0; i < bp.n; ++i) {
        uint32_t acc = 0;
        for (int e = 0; e < w; ++e) {
            int j = H.offsets[static_cast<size_t>(e)] + i;
            if (j >= bp.n) j -= bp.n;
            acc ^= bp.sub.val_mul(coeff_vals[static_cast<size_t>(e)], word_values[static_cast<size_t>(j)]);
        }
        if (acc != 0) ++bad;
    }
    return bad;
}

std::optional<int> CodeBlueprint::binary_dmin(int cap) const {
    if (m * k > cap || k <= 0) return std::nullopt;
    const int qv = sub.q();
    // enumerate all q^k messages with an odometer; each digit change XORs
    // delta * x^i * g into the value-form codeword
    std::vector<uint32_t> word(static_cast<size_t>(n), 0);
    std::vector<int> digits(static_cast<size_t>(k), 0);
    std::vector<uint32_t> gvals(g.size());
    for (size_t i = 0; i < g.size(); ++i) gvals[i] = g[i] == ZERO ? 0 : sub.exp(g[i]);
    int weight = 0;
    int best = n * m + 1;
    auto apply = [&](int pos, uint32_t delta_val) {
        if (delta_val == 0) return;
        for (size_t i = 0; i < g.size(); ++i) {
            if (gvals[i] == 0) continue;
            size_t idx = static_cast<size_t>(pos) + i;
            uint32_t add = sub.val_mul(delta_val, gvals[i]);
            weight -= std::popcount(word[idx]);
            word[idx] ^= add;
            weight += std::popcount(word[idx]);
        }
    };
    // q^k - 1 nonzero messages
    for (int64_t step = 1; step < (1ll << (m * k)); ++step) {
        int pos = 0;
        while (digits[static_cast<size_t>(pos)] == qv - 1) {
            uint32_t old = static_cast<uint32_t>(digits[static_cast<size_t>(pos)]);
            digits[static_cast<size_t>(pos)] = 0;
            apply(pos, old ^ 0u);
            ++pos;
        }
        uint32_t old = static_cast<uint32_t>(digits[static_cast<size_t>(pos)]);
        digits[static_cast<size_t>(pos)] += 1;
        apply(pos, old ^ static_cast<uint32_t>(digits[static_cast<size_t>(pos)]));
        best = std::min(best, weight);
    }
    return best;
}

} // namespace cycldpc
