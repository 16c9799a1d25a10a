#include "cosets.hpp"

namespace cycldpc {

const std::vector<int>& CosetTable::coset_by_leader(int leader) const {
    for (size_t i = 0; i < leaders.size(); ++i)
        if (leaders[i] == leader) return cosets[i];
    fail(Err::invalid_argument, "not a coset leader: " + std::to_string(leader));
}

CosetTable cyclotomic_cosets(int n) {
    if (n < 3 || n % 2 == 0)
        fail(Err::invalid_argument, "n must be odd and >= 3");
    CosetTable t;
    t.n = n;
    t.coset_of.assign(static_cast<size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (t.coset_of[static_cast<size_t>(s)] >= 0) continue;
        std::vector<int> c;
        int x = s;
        do {
            t.coset_of[static_cast<size_t>(x)] = static_cast<int>(t.cosets.size());
            c.push_back(x);
            x = 2 * x % n;
        } while (x != s);
        t.leaders.push_back(s);
        t.cosets.push_back(std::move(c));
    }
    return t;
}

int ord2(int n) {
    if (n < 1 || n % 2 == 0) fail(Err::invalid_argument, "ord2 needs odd n");
    if (n == 1) return 1;
    int r = 1;
    int64_t v = 2 % n;
    while (v != 1) {
        v = v * 2 % n;
        if (++r > 2 * n) fail(Err::internal, "ord2 did not terminate");
    }
    return r;
}

} // namespace cycldpc
