#pragma once

#include <memory>
#include <optional>
#include <string>

#include "cosets.hpp"
#include "spectrum.hpp"

namespace cycldpc {

// Chosen leaders with their seed coefficients e_{C_s,0}, as beta-exponents.
struct IdempotentSpec {
    int n = 0;
    int m = 0;
    std::vector<std::pair<int, Elem>> leaders; // (leader, seed exponent), ascending leaders
};

// Admissibility (wrap-around constraint): the squaring recursion closes
// around a coset of size c only if e0^(2^c) = e0, i.e. e0 lies in
// GF(2^gcd(m,c)). Returns the exponent step of that subfield inside
// GF(2^m): admissible exponents are exactly the multiples of the step.
int admissible_step(int m, int coset_size);
bool is_admissible_seed(int m, int coset_size, Elem seed);

RingPoly cyclotomic_idempotent(const std::vector<int>& coset, Elem e0, int n, const GaloisField& sub);
RingPoly parity_check_idempotent(const IdempotentSpec& spec, const CosetTable& cosets, const GaloisField& sub);
bool is_idempotent(const RingPoly& p, const GaloisField& sub);

// true (degenerate) iff gcd(n, gcd of all support exponents) > 1;
// gcd over {0} is 0, so u = 1 is degenerate
bool degeneracy_check(const RingPoly& u, int n);

// n x n circulant; row 0 is reciprocal(u), row i its right cyclic shift by i.
// Stored sparsely: row i has nonzeros at columns (offset[e] + i) mod n with
// coefficient coeff[e].
struct ParityCheckMatrix {
    int n = 0;
    int m = 0;
    std::vector<int> offsets;  // ascending column offsets of row 0
    std::vector<Elem> coeffs;  // matching coefficients (beta-exponents)
    int row_weight() const { return static_cast<int>(offsets.size()); }
    Elem entry(int i, int j) const; // dense accessor, ZERO when absent
};

ParityCheckMatrix build_parity_check_matrix(const RingPoly& u);

// Def.-5 difference enumerator on the support indicator: d_t counts ordered
// support pairs (i, j) with i - j = t mod n; d_0 = wt(u).
std::vector<long long> difference_enumerator(const RingPoly& u);

enum class GirthClass { orthogonal_osmld, difference_set, has_4cycles };
GirthClass girth_classify(const std::vector<long long>& d);
std::string girth_class_name(GirthClass g);

// GF(2^m)-aware Tanner-graph 4-cycle test: a pair of rows sharing two
// columns is a true 4-cycle only when the 2x2 submatrix is singular, i.e.
// two same-difference support pairs carry equal coefficient ratios.
// For m = 1 this reduces to "some difference-enumerator tail >= 2".
bool has_singular_4cycles(const RingPoly& u, const GaloisField& sub);

// Steps 1..3 for a fixed (n, m): splitting field GF(2^m'), embedding
// constants r and l, the GF(2^m) tables from the step-3 polynomial, and the
// coset partition mod n. Built once and shared read-only when enumerating
// many candidate specs.
struct ConstructionContext {
    int n = 0, m = 0, m_prime = 0;
    int r = 0;
    Elem l = 0;
    uint32_t p_mask = 0;
    GaloisField big;
    GaloisField sub;
    CosetTable cosets;
};

// Validates n odd >= 3, m >= 1, the field-degree cap, and m | m'.
ConstructionContext make_context(int n, int m);

// Everything the six construction steps produce for one code.
struct CodeBlueprint {
    int n = 0, m = 0, m_prime = 0;
    int r = 0;
    Elem l = 0;
    uint32_t p_mask = 0; // step-3 p(x) defining the GF(2^m) tables
    IdempotentSpec spec;
    RingPoly u;
    int k = 0;
    int bch_lower = 0;
    int dmin_upper = 0;
    bool orthogonal = false;
    bool difference_set = false;
    bool four_cycle_free = false;
    GaloisField big;   // GF(2^m'), lex-min polynomial
    GaloisField sub;   // GF(2^m), step-3 polynomial
    CosetTable cosets; // mod n
    DensePoly g;       // generator, degree n-k
    DensePoly h;       // parity polynomial, degree k
    ParityCheckMatrix H;

    std::string girth_name() const;
    // exhaustive binary-image minimum distance; only run when m*k <= cap
    std::optional<int> binary_dmin(int cap = 22) const;
};

// Runs construction steps 1..6 (splitting field, p(x), idempotent sum,
// parity-check matrix, transform, dimension/bounds). Throws CodeError on
// m not dividing ord_n(2), inadmissible seeds, or a degenerate support.
CodeBlueprint make_blueprint(const IdempotentSpec& spec);

// Same pipeline but starting from a given u(x); validates idempotency
// instead of building from seeds. Degenerate u is reported in the blueprint
// flags by the caller's checks, not rejected (used by fixture verification).
CodeBlueprint make_blueprint_from_poly(const RingPoly& u, bool reject_degenerate = true);

// c(x) = x^{n-k} msg(x) - (x^{n-k} msg(x) mod g); message lands in
// positions n-k .. n-1 unchanged
RingPoly systematic_encode(const CodeBlueprint& bp, const std::vector<Elem>& message);

int syndrome_weight(const CodeBlueprint& bp, const std::vector<uint32_t>& word_values);

} // namespace cycldpc
