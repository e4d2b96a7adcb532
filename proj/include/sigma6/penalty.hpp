#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>

#include "sigma6/rational.hpp"
#include "sigma6/stats.hpp"

namespace sigma6 {

// Exact penalty amount stored as an integer number of tenths. Every
// coefficient in the table is a multiple of 1/10, so all penalty sums are
// exactly representable.
struct DeciValue {
    std::int64_t tenths = 0;

    friend bool operator==(DeciValue a, DeciValue b) { return a.tenths == b.tenths; }
    friend bool operator!=(DeciValue a, DeciValue b) { return a.tenths != b.tenths; }
    friend bool operator<(DeciValue a, DeciValue b) { return a.tenths < b.tenths; }
    friend bool operator<=(DeciValue a, DeciValue b) { return a.tenths <= b.tenths; }
    friend DeciValue operator+(DeciValue a, DeciValue b) { return {a.tenths + b.tenths}; }

    // "40", "7.6", "0" -> tenths; one optional fractional digit.
    static DeciValue parse(const std::string& s);
    std::string str() const;  // always one decimal digit, e.g. "4.0"
};

// The index set S: all degree pairs (i,j), 1 <= i <= j <= 6, except (1,6)
// and (2,6), which are eliminated from the penalty via the reconstruction
// identities below.
bool pair_in_s(int i, int j);

// Per-edge-type penalty coefficient, exact table value in tenths.
// Throws NotInS for (1,6), (2,6) or out-of-range degrees.
DeciValue f_table(int i, int j);

// The same coefficient evaluated from its closed form
// F(i,j) = A(i,j)*(1-6)^2 + B(i,j)*(2-6)^2 - (i-j)^2 with exact rational
// A, B. The closed-form list does not cover (1,1): FormulaUnavailable.
Rational f_from_formula(int i, int j);

// P(T) = sum over (i,j) in S of F(i,j) * m[i][j]. The eliminated entries
// (1,6) and (2,6) contribute nothing.
DeciValue penalty(const EdgeTypeCounts& counts);

// The constant in the decomposition sigma(T) = C(n) - P(T): 22n - 4.
// Throws OrderTooSmall for n < 2.
std::int64_t c_of_n(std::int64_t n);

// S-indexed multiplicity vector (the 18 entries of S minus (1,1); a
// leaf-leaf edge is impossible in any tree on >= 3 vertices, and the
// elimination identities assume m[1][1] = 0).
struct SSubvector {
    std::array<std::array<std::int64_t, 7>, 7> m{};

    std::int64_t get(int i, int j) const { return i <= j ? m[i][j] : m[j][i]; }
    void set(int i, int j, std::int64_t v) { (i <= j ? m[i][j] : m[j][i]) = v; }
    std::int64_t total() const;
    DeciValue penalty() const;

    // Extracts the S entries of a tree's counts. Throws InvalidInput when
    // m[1][1] > 0 (the two-vertex tree), whose statistics the elimination
    // identities do not cover.
    static SSubvector from_counts(const EdgeTypeCounts& counts);
};

// The two eliminated multiplicities as exact affine forms of n and the
// S-subvector. For every tree on >= 3 vertices the outputs equal the actual
// m[1][6], m[2][6]; a negative or non-integral output means no tree realizes
// this S-vector at this order.
std::pair<Rational, Rational> reconstruct_m16_m26(std::int64_t n, const SSubvector& s);

// Integer fast path: 30*m16 and 30*m26 (all coefficients have denominator
// dividing 30). Used by the enumeration-scale identity checks.
std::pair<std::int64_t, std::int64_t> reconstruct_m16_m26_x30(std::int64_t n, const SSubvector& s);

// Minimal penalty over all trees of order n with maximum degree 6, as a
// closed form of n mod 6, together with the smallest order for which the
// closed form is asserted.
struct PMinEntry {
    int residue = 0;          // n mod 6
    DeciValue value;          // one of 0, 10, 20, 22, 30, 40
    std::int64_t threshold = 0;  // minimal asserted order for this residue
    // Smallest order where the closed form actually holds. Equal to
    // threshold except for residue 3: the asserted order 15 admits no
    // realization (the degree-3 pattern would need a parallel edge there,
    // and the four-hub pattern needs n >= 27); the true value at 15 is 44,
    // first attained exactly at 21.
    std::int64_t effective_threshold = 0;
};

// Throws OrderTooSmall for n < 7.
PMinEntry p_min_closed_form(std::int64_t n);

struct SigmaMaxResult {
    std::int64_t value = 0;
    bool at_or_above_threshold = false;  // below threshold: value returned but unverified
};

// c_of_n(n) minus the closed-form minimal penalty (always an integer).
SigmaMaxResult sigma_max(std::int64_t n);

}  // namespace sigma6
