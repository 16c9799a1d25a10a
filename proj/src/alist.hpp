#pragma once

#include <string>

#include "construct.hpp"

namespace cycldpc {

// Non-binary alist. Header lines "n n" and "w w" (the circulant is column-
// and row-regular with degree wt(u)), then per-column and per-row degree
// lines, then adjacency lists whose entries are "position exponent" pairs:
// a 1-based position and the beta-exponent of the matrix entry there
// (coefficient 1 = beta^0 is written as exponent 0; structural-zero entries
// never appear in the lists).
std::string alist_text(const ParityCheckMatrix& H);

// Dense n x n CSV of beta-exponents; absent entries are written as -1.
std::string matrix_csv_text(const ParityCheckMatrix& H);

} // namespace cycldpc
