#pragma once

#include <vector>

#include "errors.hpp"

namespace cycldpc {

// Cyclotomic cosets mod n, each stored in doubling order from its leader:
// (s, 2s, 4s, ... mod n). The coefficient recursion of the idempotent
// construction is indexed by this order, so it is load-bearing.
struct CosetTable {
    int n = 0;
    std::vector<std::vector<int>> cosets; // sorted by leader
    std::vector<int> leaders;             // leaders[i] == cosets[i][0]
    std::vector<int> coset_of;            // element -> index into cosets

    const std::vector<int>& coset_by_leader(int leader) const;
    int size_by_leader(int leader) const { return static_cast<int>(coset_by_leader(leader).size()); }
};

CosetTable cyclotomic_cosets(int n);

// multiplicative order of 2 mod n (n odd); this is the splitting-field degree m'
int ord2(int n);

} // namespace cycldpc
