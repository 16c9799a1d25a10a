#include "search.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>
#include <thread>

namespace cycldpc {

namespace {

std::string join_ints(const std::vector<int>& v, char sep) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

// Admissible seed exponents for one coset, ascending. Always nonempty
// (exponent 0 is admissible for every coset size).
std::vector<Elem> admissible_exponents(int m, int coset_size) {
    int step = admissible_step(m, coset_size);
    std::vector<Elem> out;
    for (int e = 0; e < (1 << m) - 1; e += step) out.push_back(e);
    return out;
}

struct SubsetWork {
    std::vector<size_t> cosets; // indices into CosetTable arrays, ascending
    int weight = 0;
};

// All leader subsets with weight <= w_max, in lexicographic order of the
// ascending leader tuple (each prefix precedes its extensions).
std::vector<SubsetWork> enumerate_subsets(const CosetTable& tab, int w_max) {
    std::vector<SubsetWork> out;
    const size_t count = tab.cosets.size();
    std::vector<size_t> cur;
    auto dfs = [&](auto&& self, size_t start, int weight) -> void {
        if (!cur.empty()) out.push_back({cur, weight});
        for (size_t i = start; i < count; ++i) {
            int w2 = weight + static_cast<int>(tab.cosets[i].size());
            if (w2 > w_max) continue;
            cur.push_back(i);
            self(self, i + 1, w2);
            cur.pop_back();
        }
    };
    dfs(dfs, 0, 0);
    return out;
}

std::string girth_label(bool difference_set, bool orthogonal, bool four_cycle_free) {
    if (difference_set) return girth_class_name(GirthClass::difference_set);
    if (orthogonal) return girth_class_name(GirthClass::orthogonal_osmld);
    if (four_cycle_free) return "4-cycle-free";
    return girth_class_name(GirthClass::has_4cycles);
}

// Runs the coefficient odometer for one non-degenerate subset and appends
// every record passing the filters, in ascending tuple order.
void scan_subset(const ConstructionContext& ctx, const SubsetWork& sub, const SearchConstraints& cons,
                 std::vector<SearchRecord>& out) {
    const size_t L = sub.cosets.size();
    std::vector<const std::vector<int>*> chains(L);
    std::vector<std::vector<Elem>> lists(L);
    std::vector<int> leaders(L);
    for (size_t i = 0; i < L; ++i) {
        chains[i] = &ctx.cosets.cosets[sub.cosets[i]];
        leaders[i] = ctx.cosets.leaders[sub.cosets[i]];
        lists[i] = admissible_exponents(ctx.m, static_cast<int>(chains[i]->size()));
    }
    if (cons.mode == CoeffScanMode::leader_canonical) lists[0] = {0};

    // support-level girth class is shared by every tuple of this subset
    RingPoly u = RingPoly::zero(ctx.n, ctx.m);
    for (size_t i = 0; i < L; ++i)
        for (int x : *chains[i]) u.c[static_cast<size_t>(x)] = 0;
    GirthClass cls = girth_classify(difference_enumerator(u));
    bool orthogonal = cls != GirthClass::has_4cycles;
    bool difference_set = cls == GirthClass::difference_set;

    std::vector<size_t> idx(L, 0);
    for (;;) {
        // fill the coefficient chains for the current tuple
        for (size_t i = 0; i < L; ++i) {
            Elem e = lists[i][idx[i]];
            for (int x : *chains[i]) {
                u.c[static_cast<size_t>(x)] = e;
                e = ctx.sub.square(e);
            }
        }

        SpectralAnalysis an = analyze(u, ctx.sub, ctx.big, ctx.r, ctx.l);
        if (an.k >= cons.k_min && an.lower_bound >= cons.d) {
            bool four_cycle_free = orthogonal || !has_singular_4cycles(u, ctx.sub);
            if (cons.allow_4cycles || four_cycle_free) {
                SearchRecord rec;
                rec.spec.n = ctx.n;
                rec.spec.m = ctx.m;
                for (size_t i = 0; i < L; ++i) rec.spec.leaders.emplace_back(leaders[i], lists[i][idx[i]]);
                rec.n = ctx.n;
                rec.m = ctx.m;
                rec.m_prime = ctx.m_prime;
                rec.r = ctx.r;
                rec.l = ctx.l;
                rec.weight = sub.weight;
                rec.k = an.k;
                rec.bch_lower = an.lower_bound;
                rec.dmin_upper = an.upper_bound;
                rec.orthogonal = orthogonal;
                rec.difference_set = difference_set;
                rec.four_cycle_free = four_cycle_free;
                rec.girth = girth_label(difference_set, orthogonal, four_cycle_free);
                rec.u_text = poly_to_text(u);
                rec.key = canonical_key(rec.spec);
                out.push_back(std::move(rec));
            }
        }

        // odometer, last position fastest: ascending tuple order
        size_t p = L;
        while (p-- > 0) {
            if (++idx[p] < lists[p].size()) break;
            idx[p] = 0;
            if (p == 0) return;
        }
    }
}

} // namespace

void search_enumerate(int n, int m, const SearchConstraints& cons,
                      const std::function<void(const SearchRecord&)>& emit) {
    if (cons.w_max < 0 || cons.k_min < 0) fail(Err::invalid_argument, "negative search constraint");
    ConstructionContext ctx = make_context(n, m);

    std::vector<SubsetWork> subsets = enumerate_subsets(ctx.cosets, cons.w_max);
    // drop degenerate supports up front: the support is seed-independent
    // (chains never contain zeros and cosets are disjoint)
    std::erase_if(subsets, [&](const SubsetWork& s) {
        int g = 0;
        for (size_t ci : s.cosets)
            for (int x : ctx.cosets.cosets[ci]) g = std::gcd(g, x);
        return std::gcd(n, g) > 1;
    });

    int threads = std::max(1, cons.threads);
    if (threads == 1 || subsets.size() <= 1) {
        std::vector<SearchRecord> buf;
        for (const SubsetWork& s : subsets) {
            buf.clear();
            scan_subset(ctx, s, cons, buf);
            for (const SearchRecord& r : buf) emit(r);
        }
        return;
    }

    // workers pull whole subsets; the merge preserves subset order, so the
    // stream is identical to the single-threaded one
    std::vector<std::vector<SearchRecord>> results(subsets.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= subsets.size()) return;
            scan_subset(ctx, subsets[i], cons, results[i]);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (const auto& chunk : results)
        for (const SearchRecord& r : chunk) emit(r);
}

std::string canonical_key(const IdempotentSpec& spec) {
    if (spec.m < 1 || spec.leaders.empty()) fail(Err::invalid_argument, "canonical key of an empty spec");
    const int64_t o = (1ll << spec.m) - 1;
    const size_t L = spec.leaders.size();
    // orbit of the seed tuple under simultaneous squaring (exponent doubling
    // mod 2^m - 1); the key uses the lexicographic minimum
    std::vector<Elem> best;
    for (int t = 0; t < spec.m; ++t) {
        std::vector<Elem> cur(L);
        for (size_t i = 0; i < L; ++i)
            cur[i] = o == 1 ? 0 : static_cast<Elem>((static_cast<int64_t>(spec.leaders[i].second) << t) % o);
        if (t == 0 || cur < best) best = std::move(cur);
    }
    std::string key;
    for (size_t i = 0; i < L; ++i) {
        if (i) key += ',';
        key += std::to_string(spec.leaders[i].first);
    }
    bool trivial = std::all_of(best.begin(), best.end(), [](Elem e) { return e == 0; });
    if (!trivial) {
        key += '|';
        for (size_t i = 0; i < L; ++i) {
            if (i) key += ',';
            key += std::to_string(best[i]);
        }
    }
    return key;
}

AlignmentResult coefficient_alignment_scan(int n, int m, const std::vector<int>& leaders) {
    ConstructionContext ctx = make_context(n, m);
    if (leaders.empty()) fail(Err::invalid_argument, "empty leader set");

    const size_t L = leaders.size();
    std::vector<const std::vector<int>*> chains(L);
    std::vector<std::vector<Elem>> lists(L);
    int prev = -1;
    for (size_t i = 0; i < L; ++i) {
        if (leaders[i] <= prev) fail(Err::invalid_argument, "leaders must be ascending and distinct");
        prev = leaders[i];
        auto it = std::find(ctx.cosets.leaders.begin(), ctx.cosets.leaders.end(), leaders[i]);
        if (it == ctx.cosets.leaders.end())
            fail(Err::invalid_argument, std::to_string(leaders[i]) + " is not a coset leader mod " + std::to_string(n));
        size_t ci = static_cast<size_t>(it - ctx.cosets.leaders.begin());
        chains[i] = &ctx.cosets.cosets[ci];
        lists[i] = admissible_exponents(m, static_cast<int>(chains[i]->size()));
    }

    RingPoly u = RingPoly::zero(n, m);
    std::vector<size_t> idx(L, 0);
    AlignmentResult best;
    bool have = false;
    for (;;) {
        for (size_t i = 0; i < L; ++i) {
            Elem e = lists[i][idx[i]];
            for (int x : *chains[i]) {
                u.c[static_cast<size_t>(x)] = e;
                e = ctx.sub.square(e);
            }
        }
        SpectralAnalysis an = analyze(u, ctx.sub, ctx.big, ctx.r, ctx.l);
        if (!have || an.d0 > best.analysis.d0) {
            have = true;
            best.analysis = an;
            best.spec.n = n;
            best.spec.m = m;
            best.spec.leaders.clear();
            for (size_t i = 0; i < L; ++i) best.spec.leaders.emplace_back(leaders[i], lists[i][idx[i]]);
        }
        size_t p = L;
        bool done = false;
        while (p-- > 0) {
            if (++idx[p] < lists[p].size()) break;
            idx[p] = 0;
            if (p == 0) done = true;
        }
        if (done) return best;
    }
}

std::string search_csv_header() {
    return "n,m,m_prime,r,l,leaders,coeff_exps,wt_u,k,bch_lower,dmin_upper,girth,u_text";
}

std::string search_record_csv(const SearchRecord& rec) {
    std::ostringstream os;
    std::vector<int> ls, es;
    for (auto [l, e] : rec.spec.leaders) {
        ls.push_back(l);
        es.push_back(e);
    }
    os << rec.n << ',' << rec.m << ',' << rec.m_prime << ',' << rec.r << ',' << rec.l << ','
       << join_ints(ls, ';') << ',' << join_ints(es, ';') << ',' << rec.weight << ',' << rec.k << ','
       << rec.bch_lower << ',' << rec.dmin_upper << ',' << rec.girth << ',' << rec.u_text;
    return os.str();
}

} // namespace cycldpc
