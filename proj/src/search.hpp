#pragma once

#include <functional>

#include "construct.hpp"

namespace cycldpc {

enum class CoeffScanMode {
    full_scan,       // every admissible seed tuple, no orbit pruning
    leader_canonical // first leader's seed pinned to 1; cuts the global Frobenius orbit
};

struct SearchConstraints {
    int w_max = 1;
    int k_min = 0;
    int d = 2;
    bool allow_4cycles = false;
    CoeffScanMode mode = CoeffScanMode::full_scan;
    int threads = 1;
};

struct SearchRecord {
    IdempotentSpec spec;
    int n = 0, m = 0, m_prime = 0, r = 0;
    Elem l = 0;
    int weight = 0, k = 0, bch_lower = 0, dmin_upper = 0;
    bool orthogonal = false, difference_set = false, four_cycle_free = false;
    std::string girth;
    std::string u_text;
    std::string key;
};

// Lexicographic leader-subset DFS with an ascending coefficient odometer per
// subset. Emits every admissible combination that is non-degenerate, has
// weight <= w_max, k >= k_min, BCH lower bound >= d, and (unless allowed)
// no 4-cycles. Deterministic order regardless of thread count.
void search_enumerate(int n, int m, const SearchConstraints& cons,
                      const std::function<void(const SearchRecord&)>& emit);

// Key shared by exactly the specs in one orbit of the global Frobenius
// action (all seeds squared simultaneously).
std::string canonical_key(const IdempotentSpec& spec);

struct AlignmentResult {
    IdempotentSpec spec;
    SpectralAnalysis analysis;
};

// Scans all admissible seed tuples for a fixed leader set and returns the
// first assignment maximizing the run of spectral ones d0.
AlignmentResult coefficient_alignment_scan(int n, int m, const std::vector<int>& leaders);

std::string search_csv_header();
std::string search_record_csv(const SearchRecord& rec);

} // namespace cycldpc
