#include "sigma6/stats.hpp"

namespace sigma6 {

namespace {

void require_degrees_at_most_six(const Tree& t) {
    for (int v = 0; v < t.order(); ++v)
        if (t.degree(v) > 6)
            throw Error(errc::degree_exceeds_six,
                        "vertex " + std::to_string(v) + " has degree " + std::to_string(t.degree(v)));
}

}  // namespace

DegreeCounts degree_counts(const Tree& t) {
    require_degrees_at_most_six(t);
    DegreeCounts dc;
    dc.n = t.order();
    for (int v = 0; v < t.order(); ++v) {
        int d = t.degree(v);
        if (d >= 1) ++dc.count[d];
    }
    return dc;
}

EdgeTypeCounts edge_type_counts(const Tree& t) {
    require_degrees_at_most_six(t);
    EdgeTypeCounts ec;
    ec.n = t.order();
    for (int u = 0; u < t.order(); ++u)
        for (int v : t.neighbors(u))
            if (u < v) ec.add(t.degree(u), t.degree(v));
    return ec;
}

std::int64_t sigma(const Tree& t) {
    std::int64_t s = 0;
    for (int u = 0; u < t.order(); ++u)
        for (int v : t.neighbors(u))
            if (u < v) {
                std::int64_t d = t.degree(u) - t.degree(v);
                s += d * d;
            }
    return s;
}

std::int64_t sigma_from_counts(const EdgeTypeCounts& c) {
    std::int64_t s = 0;
    for (int i = 1; i <= 6; ++i)
        for (int j = i; j <= 6; ++j) {
            std::int64_t d = i - j;
            s += d * d * c.m[i][j];
        }
    return s;
}

bool handshake_rows_hold(const DegreeCounts& dc, const EdgeTypeCounts& ec) {
    for (int d = 1; d <= 6; ++d) {
        std::int64_t incidences = 2 * ec.get(d, d);
        for (int j = 1; j <= 6; ++j)
            if (j != d) incidences += ec.get(d, j);
        if (incidences != static_cast<std::int64_t>(d) * dc.count[d]) return false;
    }
    return true;
}

}  // namespace sigma6
