#include "alist.hpp"

#include <algorithm>
#include <sstream>

namespace cycldpc {

std::string alist_text(const ParityCheckMatrix& H) {
    const int n = H.n;
    const int w = H.row_weight();
    std::ostringstream os;
    os << n << ' ' << n << '\n' << w << ' ' << w << '\n';
    for (int j = 0; j < n; ++j) os << w << (j + 1 < n ? ' ' : '\n');
    for (int i = 0; i < n; ++i) os << w << (i + 1 < n ? ' ' : '\n');

    std::vector<std::pair<int, Elem>> entries(static_cast<size_t>(w));
    for (int j = 0; j < n; ++j) {
        for (int e = 0; e < w; ++e) {
            int i = j - H.offsets[static_cast<size_t>(e)];
            if (i < 0) i += n;
            entries[static_cast<size_t>(e)] = {i, H.coeffs[static_cast<size_t>(e)]};
        }
        std::sort(entries.begin(), entries.end());
        for (int e = 0; e < w; ++e)
            os << entries[static_cast<size_t>(e)].first + 1 << ' ' << entries[static_cast<size_t>(e)].second
               << (e + 1 < w ? ' ' : '\n');
    }
    for (int i = 0; i < n; ++i) {
        for (int e = 0; e < w; ++e) {
            int j = H.offsets[static_cast<size_t>(e)] + i;
            if (j >= n) j -= n;
            entries[static_cast<size_t>(e)] = {j, H.coeffs[static_cast<size_t>(e)]};
        }
        std::sort(entries.begin(), entries.end());
        for (int e = 0; e < w; ++e)
            os << entries[static_cast<size_t>(e)].first + 1 << ' ' << entries[static_cast<size_t>(e)].second
               << (e + 1 < w ? ' ' : '\n');
    }
    return os.str();
}

std::string matrix_csv_text(const ParityCheckMatrix& H) {
    const int n = H.n;
    std::vector<Elem> row(static_cast<size_t>(n));
    std::ostringstream os;
    for (int i = 0; i < n; ++i) {
        std::fill(row.begin(), row.end(), ZERO);
        for (int e = 0; e < H.row_weight(); ++e) {
            int j = H.offsets[static_cast<size_t>(e)] + i;
            if (j >= n) j -= n;
            row[static_cast<size_t>(j)] = H.coeffs[static_cast<size_t>(e)];
        }
        for (int j = 0; j < n; ++j) os << row[static_cast<size_t>(j)] << (j + 1 < n ? ',' : '\n');
    }
    return os.str();
}

} // namespace cycldpc
