#pragma once

#include <array>
#include <cstdint>

#include "sigma6/tree.hpp"

namespace sigma6 {

// Degree frequencies n_1..n_6 of a tree admitted to the max-degree-6 universe.
struct DegreeCounts {
    int n = 0;
    std::array<std::int64_t, 7> count{};  // count[d] for d in 1..6; count[0] unused

    std::int64_t operator[](int d) const { return count[d]; }

    // Sum over d of count[d] == n and sum of d*count[d] == 2n-2.
    bool identities_hold() const {
        std::int64_t s = 0, ds = 0;
        for (int d = 1; d <= 6; ++d) { s += count[d]; ds += d * count[d]; }
        return s == n && ds == 2 * static_cast<std::int64_t>(n) - 2;
    }
};

// Edge multiplicities m[i][j] for 1 <= i <= j <= 6. Entries with i > j are
// kept zero; accessors normalize the pair order.
struct EdgeTypeCounts {
    int n = 0;
    std::array<std::array<std::int64_t, 7>, 7> m{};

    std::int64_t get(int i, int j) const { return i <= j ? m[i][j] : m[j][i]; }
    void add(int i, int j, std::int64_t c = 1) { (i <= j ? m[i][j] : m[j][i]) += c; }

    std::int64_t total() const {
        std::int64_t s = 0;
        for (int i = 1; i <= 6; ++i)
            for (int j = i; j <= 6; ++j) s += m[i][j];
        return s;
    }
};

// Throws DegreeExceedsSix if some vertex has degree > 6.
DegreeCounts degree_counts(const Tree& t);
EdgeTypeCounts edge_type_counts(const Tree& t);

// Sum over edges of the squared endpoint-degree difference. Defined for every
// tree, no degree bound.
std::int64_t sigma(const Tree& t);

// Same value computed from edge-type multiplicities: sum (i-j)^2 m[i][j].
std::int64_t sigma_from_counts(const EdgeTypeCounts& c);

// The six degree-handshake rows tying m[i][j] to n_i: for each degree d,
// sum of m[d][j] over j != d plus 2 m[d][d] equals d * n_d. The degree-1 row
// uses the full form (with 2 m[1][1]); for every tree on >= 3 vertices
// m[1][1] = 0 and it coincides with the reduced row.
bool handshake_rows_hold(const DegreeCounts& dc, const EdgeTypeCounts& ec);

}  // namespace sigma6
