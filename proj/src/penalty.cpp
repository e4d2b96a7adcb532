#include "sigma6/penalty.hpp"

#include <cstdlib>

namespace sigma6 {

namespace {

struct PairEntry {
    int i, j;
    int f_tenths;        // table value, tenths
    int a_num, a_den;    // closed-form multiplier of (1-6)^2
    int b_num, b_den;    // closed-form multiplier of (2-6)^2
    bool has_formula;
};

// Coefficient table for all 19 pairs of S. f_tenths transcribes the value
// table; (A, B) transcribe the closed-form list, which omits (1,1).
constexpr PairEntry kPairs[] = {
    {1, 1, 400,   0,  1,   0,  1, false},
    {1, 2, 300,   5,  3,  -2,  3, true},
    {1, 3, 240,   4,  3,  -1,  3, true},
    {1, 4, 175,   7,  6,  -1,  6, true},
    {1, 5,  96,  16, 15,  -1, 15, true},
    {2, 2, 220,   2,  3,   1,  3, true},
    {2, 3, 180,   1,  3,   2,  3, true},
    {2, 4, 135,   1,  6,   5,  6, true},
    {2, 5,  76,   1, 15,  14, 15, true},
    {3, 3, 160,   0,  1,   1,  1, true},
    {3, 4, 135,  -1,  6,   7,  6, true},
    {3, 5,  96,  -4, 15,  19, 15, true},
    {3, 6,  40,  -1,  3,   4,  3, true},
    {4, 4, 130,  -1,  3,   4,  3, true},
    {4, 5, 111, -13, 30,  43, 30, true},
    {4, 6,  75,  -1,  2,   3,  2, true},
    {5, 5, 112,  -8, 15,  23, 15, true},
    {5, 6,  96,  -3,  5,   8,  5, true},
    {6, 6, 100,  -2,  3,   5,  3, true},
};

// Affine coefficients of the elimination identities, scaled by 30:
//   30*m16 = 10*(2n+4) + sum alpha30[i][j]*m[i][j]
//   30*m26 = 10*(n-7)  + sum beta30[i][j]*m[i][j]
// over the 18 S pairs other than (1,1).
struct ReconEntry { int i, j, alpha30, beta30; };
constexpr ReconEntry kRecon[] = {
    {1, 2, -50,  20}, {1, 3, -40,  10}, {1, 4, -35,   5}, {1, 5, -32,   2},
    {2, 2, -20, -10}, {2, 3, -10, -20}, {2, 4,  -5, -25}, {2, 5,  -2, -28},
    {3, 3,   0, -30}, {3, 4,   5, -35}, {3, 5,   8, -38}, {3, 6,  10, -40},
    {4, 4,  10, -40}, {4, 5,  13, -43}, {4, 6,  15, -45},
    {5, 5,  16, -46}, {5, 6,  18, -48}, {6, 6,  20, -50},
};

const PairEntry* find_pair(int i, int j) {
    if (i > j) std::swap(i, j);
    for (const auto& e : kPairs)
        if (e.i == i && e.j == j) return &e;
    return nullptr;
}

int f_tenths_padded(int i, int j) {
    // 0 for the eliminated pairs (1,6), (2,6); table value otherwise
    const PairEntry* e = find_pair(i, j);
    return e ? e->f_tenths : 0;
}

}  // namespace

DeciValue DeciValue::parse(const std::string& s) {
    size_t dot = s.find('.');
    try {
        if (dot == std::string::npos) return {std::stoll(s) * 10};
        std::int64_t whole = std::stoll(s.substr(0, dot));
        std::string frac = s.substr(dot + 1);
        if (frac.size() != 1 || frac[0] < '0' || frac[0] > '9')
            throw Error(errc::invalid_input, "penalty value needs one decimal digit: " + s);
        std::int64_t t = std::abs(whole) * 10 + (frac[0] - '0');
        return {whole < 0 || s[0] == '-' ? -t : t};
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw Error(errc::invalid_input, "bad penalty value: " + s);
    }
}

std::string DeciValue::str() const {
    std::int64_t t = tenths;
    std::string sign = t < 0 ? "-" : "";
    if (t < 0) t = -t;
    return sign + std::to_string(t / 10) + "." + std::to_string(t % 10);
}

bool pair_in_s(int i, int j) {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > 6) return false;
    return !((i == 1 && j == 6) || (i == 2 && j == 6));
}

DeciValue f_table(int i, int j) {
    if (i > j) std::swap(i, j);
    const PairEntry* e = find_pair(i, j);
    if (!e)
        throw Error(errc::not_in_s, "(" + std::to_string(i) + "," + std::to_string(j) + ")");
    return {e->f_tenths};
}

Rational f_from_formula(int i, int j) {
    if (i > j) std::swap(i, j);
    const PairEntry* e = find_pair(i, j);
    if (!e)
        throw Error(errc::not_in_s, "(" + std::to_string(i) + "," + std::to_string(j) + ")");
    if (!e->has_formula)
        throw Error(errc::formula_unavailable, "(1,1) is not covered by the closed-form list");
    Rational a(e->a_num, e->a_den), b(e->b_num, e->b_den);
    std::int64_t sij = static_cast<std::int64_t>(i - j) * (i - j);
    return a * Rational(25) + b * Rational(16) - Rational(sij);
}

DeciValue penalty(const EdgeTypeCounts& counts) {
    std::int64_t t = 0;
    for (const auto& e : kPairs) t += e.f_tenths * counts.m[e.i][e.j];
    return {t};
}

std::int64_t c_of_n(std::int64_t n) {
    if (n < 2) throw Error(errc::order_too_small, "decomposition constant needs n >= 2");
    return 22 * n - 4;
}

std::int64_t SSubvector::total() const {
    std::int64_t s = 0;
    for (int i = 1; i <= 6; ++i)
        for (int j = i; j <= 6; ++j) s += m[i][j];
    return s;
}

DeciValue SSubvector::penalty() const {
    std::int64_t t = 0;
    for (int i = 1; i <= 6; ++i)
        for (int j = i; j <= 6; ++j)
            if (m[i][j]) t += f_tenths_padded(i, j) * m[i][j];
    return {t};
}

SSubvector SSubvector::from_counts(const EdgeTypeCounts& counts) {
    if (counts.m[1][1] > 0)
        throw Error(errc::invalid_input, "m[1][1] > 0: trees on >= 3 vertices have no leaf-leaf edge");
    SSubvector s;
    for (int i = 1; i <= 6; ++i)
        for (int j = i; j <= 6; ++j)
            if (pair_in_s(i, j)) s.m[i][j] = counts.m[i][j];
    return s;
}

std::pair<std::int64_t, std::int64_t> reconstruct_m16_m26_x30(std::int64_t n, const SSubvector& s) {
    std::int64_t x30 = 10 * (2 * n + 4);
    std::int64_t y30 = 10 * (n - 7);
    for (const auto& e : kRecon) {
        std::int64_t m = s.m[e.i][e.j];
        if (m) {
            x30 += e.alpha30 * m;
            y30 += e.beta30 * m;
        }
    }
    return {x30, y30};
}

std::pair<Rational, Rational> reconstruct_m16_m26(std::int64_t n, const SSubvector& s) {
    if (s.m[1][1] > 0)
        throw Error(errc::invalid_input, "reconstruction assumes m[1][1] = 0");
    auto [x30, y30] = reconstruct_m16_m26_x30(n, s);
    return {Rational(x30, 30), Rational(y30, 30)};
}

PMinEntry p_min_closed_form(std::int64_t n) {
    if (n < 7) throw Error(errc::order_too_small, "no max-degree-6 tree below order 7");
    int r = static_cast<int>(n % 6);
    switch (r) {
        case 1: return {1, {0}, 7, 7};
        case 0: return {0, {100}, 12, 12};
        case 5: return {5, {200}, 17, 17};
        case 2: return {2, {220}, 14, 14};
        case 4: return {4, {300}, 22, 22};
        case 3: return {3, {400}, 15, 21};
    }
    throw Error(errc::invalid_input, "unreachable");
}

SigmaMaxResult sigma_max(std::int64_t n) {
    PMinEntry e = p_min_closed_form(n);
    return {c_of_n(n) - e.value.tenths / 10, n >= e.effective_threshold};
}

}  // namespace sigma6
