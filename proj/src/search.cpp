#include "sigma6/search.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <limits>
#include <map>

#include "sigma6/canonical.hpp"
#include "sigma6/enumerate.hpp"

namespace sigma6 {

namespace {

// f_table padded with zeros on the eliminated pairs so a per-edge lookup
// accumulates exactly P(T).
struct PenaltyLut {
    std::array<std::array<int, 7>, 7> t{};
    PenaltyLut() {
        for (int i = 1; i <= 6; ++i)
            for (int j = i; j <= 6; ++j) {
                int v = pair_in_s(i, j) ? static_cast<int>(f_table(i, j).tenths) : 0;
                t[i][j] = t[j][i] = v;
            }
    }
};
const PenaltyLut kLut;

struct ScanAccum {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    std::vector<std::vector<int>> argmin;  // parent arrays
    std::int64_t examined = 0;

    void merge(ScanAccum&& o) {
        examined += o.examined;
        if (o.best < best) {
            best = o.best;
            argmin = std::move(o.argmin);
        } else if (o.best == best) {
            for (auto& p : o.argmin) argmin.push_back(std::move(p));
        }
    }
};

struct TreeScanner {
    int n;
    bool exact;
    int want_degree;
    std::vector<int> deg;

    explicit TreeScanner(int n_, bool exact_, int want) : n(n_), exact(exact_), want_degree(want), deg(n_) {}

    void operator()(std::span<const int> par, ScanAccum& acc) {
        ++acc.examined;
        std::fill(deg.begin(), deg.end(), 0);
        int maxdeg = 0;
        for (int v = 1; v < n; ++v) {
            ++deg[v];
            ++deg[par[v]];
        }
        for (int v = 0; v < n; ++v) maxdeg = std::max(maxdeg, deg[v]);
        if (exact && maxdeg != want_degree) return;
        std::int64_t p = 0;
        for (int v = 1; v < n; ++v) p += kLut.t[deg[v]][deg[par[v]]];
        if (p > acc.best) return;
        if (p < acc.best) {
            acc.best = p;
            acc.argmin.clear();
        }
        acc.argmin.emplace_back(par.begin(), par.end());
    }
};

}  // namespace

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SIGMA6_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return omp_get_max_threads();
}

ExtremalReport brute_force_min(int n, const ScanOptions& opts) {
    if (n < 7 && opts.max_degree == 6 && opts.exact_degree)
        throw Error(errc::no_admissible_tree, "no tree of order " + std::to_string(n) + " has max degree 6");
    if (n < 1) throw Error(errc::invalid_input, "order must be >= 1");

    auto t0 = std::chrono::steady_clock::now();
    int threads = resolve_threads(opts.threads);

    ScanAccum total;
    if (threads <= 1) {
        // serial reference path
        TreeScanner scan(n, opts.exact_degree, opts.max_degree);
        for_each_parent_array(n, opts.max_degree, [&](std::span<const int> par) { scan(par, total); });
    } else {
        EnumPlan plan = make_enum_plan(n, opts.max_degree, threads * 24);
        int units = plan.units();
        std::vector<ScanAccum> partial(units);
        std::exception_ptr failure;  // exceptions must not escape the parallel region
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
        for (int u = 0; u < units; ++u) {
            try {
                TreeScanner scan(n, opts.exact_degree, opts.max_degree);
                for_each_in_unit(plan, u, [&](std::span<const int> par) { scan(par, partial[u]); });
            } catch (...) {
#pragma omp critical
                if (!failure) failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);
        for (auto& p : partial) total.merge(std::move(p));
    }

    ExtremalReport rep;
    rep.n = n;
    rep.trees_enumerated = total.examined;
    if (total.argmin.empty())
        throw Error(errc::no_admissible_tree, "no admissible tree at order " + std::to_string(n));
    rep.p_min_tenths = total.best;
    bool degree6_universe = opts.max_degree == 6 && opts.exact_degree;
    if (degree6_universe && n >= 7) {
        PMinEntry closed = p_min_closed_form(n);
        rep.closed_form_tenths = closed.value.tenths;
        rep.threshold_ok = n >= closed.effective_threshold;
    } else {
        // exploratory degree settings: the residue table does not apply
        rep.closed_form_tenths = -1;
        rep.threshold_ok = false;
    }

    std::map<std::string, Tree> minimizers;
    for (const auto& par : total.argmin) {
        Tree t = tree_from_parent_array(par);
        minimizers.emplace(canonical_code(t), std::move(t));
    }
    for (const auto& [code, t] : minimizers) {
        rep.minimizer_codes.push_back(code);
        if (auto fam = match_family(t)) {
            rep.family_matches.emplace_back(family_name(*fam));
        } else {
            PatternMatch pm = verify_parameter_description(t);
            rep.family_matches.push_back(pm.pattern == MinimizerPattern::none
                                             ? "none"
                                             : std::string("pattern:") + pattern_name(pm.pattern));
        }
    }
    rep.minimizer_count = static_cast<std::int64_t>(rep.minimizer_codes.size());
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

std::optional<FamilyId> match_family(const Tree& t) {
    if (t.max_degree() != 6) return std::nullopt;
    std::int64_t n = t.order();
    std::string code = canonical_code(t);

    auto contains = [&](FamilyId id, int k) {
        auto codes = family_member_codes(id, k);
        return std::binary_search(codes.begin(), codes.end(), code);
    };

    switch (n % 6) {
        case 1: {
            int k = static_cast<int>((n - 1) / 6);
            if (k >= 1 && contains(FamilyId::tt1, k)) return FamilyId::tt1;
            break;
        }
        case 0: {
            int k = static_cast<int>(n / 6 - 1);
            if (k >= 2 && contains(FamilyId::tt6, k)) return FamilyId::tt6;
            break;
        }
        case 5: {
            int k = static_cast<int>((n - 5) / 6);
            if (k >= 2 && contains(FamilyId::tt5, k)) return FamilyId::tt5;
            break;
        }
        case 2: {
            int k = static_cast<int>((n - 2) / 6);
            if (k >= 2 && contains(FamilyId::tt2, k)) return FamilyId::tt2;
            break;
        }
        case 4: {
            int k = static_cast<int>((n - 4) / 6);
            if (k >= 4 && contains(FamilyId::tt4, k)) return FamilyId::tt4;
            break;
        }
        case 3: {
            int k = static_cast<int>((n - 3) / 6);
            if (k >= 3 && contains(FamilyId::tt3ii, k)) return FamilyId::tt3ii;
            if (k >= 5 && contains(FamilyId::tt3i, k)) return FamilyId::tt3i;
            break;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Feasibility oracle
// ---------------------------------------------------------------------------

std::string SVector::str() const {
    std::string out = "{";
    bool first = true;
    for (int i = 1; i <= 6; ++i)
        for (int j = i; j <= 6; ++j)
            if (s.m[i][j]) {
                if (!first) out += ", ";
                first = false;
                out += "m" + std::to_string(i) + std::to_string(j) + "=" + std::to_string(s.m[i][j]);
            }
    out += first ? "all-zero" : "";
    out += "} m16=" + std::to_string(m16) + " m26=" + std::to_string(m26) + " n=(";
    for (int d = 1; d <= 6; ++d) out += std::to_string(nd[d]) + (d < 6 ? "," : ")");
    out += " P=" + DeciValue{p_tenths}.str();
    return out;
}

namespace {

// the 18 assignable S pairs, cheapest coefficient first so the budget prunes
// early; (1,1) is excluded (a leaf-leaf edge is its own component K2)
constexpr std::pair<int, int> kOraclePairs[] = {
    {3, 6}, {4, 6}, {2, 5}, {1, 5}, {3, 5}, {5, 6}, {6, 6}, {4, 5}, {5, 5},
    {4, 4}, {3, 4}, {2, 4}, {3, 3}, {1, 4}, {2, 3}, {2, 2}, {1, 3}, {1, 2},
};

bool derive(std::int64_t n, SVector& v, FeasibilityMode mode) {
    auto [x30, y30] = reconstruct_m16_m26_x30(n, v.s);
    if (x30 < 0 || y30 < 0 || x30 % 30 || y30 % 30) return false;
    v.m16 = x30 / 30;
    v.m26 = y30 / 30;

    const auto& m = v.s.m;
    std::int64_t inc1 = m[1][2] + m[1][3] + m[1][4] + m[1][5] + v.m16;
    std::int64_t inc2 = m[1][2] + 2 * m[2][2] + m[2][3] + m[2][4] + m[2][5] + v.m26;
    std::int64_t inc3 = m[1][3] + m[2][3] + 2 * m[3][3] + m[3][4] + m[3][5] + m[3][6];
    std::int64_t inc4 = m[1][4] + m[2][4] + m[3][4] + 2 * m[4][4] + m[4][5] + m[4][6];
    std::int64_t inc5 = m[1][5] + m[2][5] + m[3][5] + m[4][5] + 2 * m[5][5] + m[5][6];
    std::int64_t inc6 = v.m16 + v.m26 + m[3][6] + m[4][6] + m[5][6] + 2 * m[6][6];
    if (inc2 % 2 || inc3 % 3 || inc4 % 4 || inc5 % 5 || inc6 % 6) return false;
    v.nd = {0, inc1, inc2 / 2, inc3 / 3, inc4 / 4, inc5 / 5, inc6 / 6};

    std::int64_t vertex_sum = 0, degree_sum = 0;
    for (int d = 1; d <= 6; ++d) {
        if (v.nd[d] < 0) return false;
        vertex_sum += v.nd[d];
        degree_sum += d * v.nd[d];
    }
    if (vertex_sum != n || degree_sum != 2 * n - 2) return false;

    if (mode == FeasibilityMode::simple_graph_bounds) {
        for (int i = 1; i <= 6; ++i)
            for (int j = i; j <= 6; ++j) {
                std::int64_t mij = pair_in_s(i, j) ? m[i][j]
                                  : (i == 1 ? v.m16 : v.m26);
                if (!mij) continue;
                std::int64_t cap = (i == j) ? v.nd[i] * (v.nd[i] - 1) / 2 : v.nd[i] * v.nd[j];
                if (mij > cap) return false;
            }
    }
    return true;
}

}  // namespace

std::vector<SVector> feasible_s_vectors(std::int64_t n, DeciValue budget, FeasibilityMode mode) {
    if (budget.tenths < 0) throw Error(errc::invalid_input, "budget must be nonnegative");
    if (n < 2) throw Error(errc::invalid_input, "order must be >= 2");

    std::vector<SVector> out;
    SVector cur;

    // depth-first over the 18 assignable pairs; every coefficient is at
    // least 4.0 so the budget caps the total S-edge count at budget/4
    auto rec = [&](auto&& self, size_t idx, std::int64_t left) -> void {
        if (idx == std::size(kOraclePairs)) {
            cur.p_tenths = budget.tenths - left;
            if (derive(n, cur, mode)) out.push_back(cur);
            return;
        }
        auto [i, j] = kOraclePairs[idx];
        std::int64_t f = f_table(i, j).tenths;
        std::int64_t max_m = left / f;
        for (std::int64_t m = 0; m <= max_m; ++m) {
            cur.s.m[i][j] = m;
            self(self, idx + 1, left - m * f);
        }
        cur.s.m[i][j] = 0;
    };
    rec(rec, 0, budget.tenths);

    std::sort(out.begin(), out.end(), [](const SVector& a, const SVector& b) {
        if (a.p_tenths != b.p_tenths) return a.p_tenths < b.p_tenths;
        for (int i = 1; i <= 6; ++i)
            for (int j = i; j <= 6; ++j)
                if (a.s.m[i][j] != b.s.m[i][j]) return a.s.m[i][j] < b.s.m[i][j];
        return false;
    });
    return out;
}

LemmaReplayReport replay_exclusion_lemmas(std::int64_t from, std::int64_t to, DeciValue budget,
                                          FeasibilityMode mode) {
    if (budget.tenths > 400)
        throw Error(errc::invalid_input, "replay analyzed range is budget <= 40");
    if (from < 2 || to < from) throw Error(errc::invalid_input, "bad order range");

    LemmaReplayReport rep;
    rep.from = from;
    rep.to = to;
    rep.budget_tenths = budget.tenths;
    rep.mode = mode;

    auto is_e1 = [](const SVector& v) {
        if (v.p_tenths != 400 || v.s.m[2][3] != 2 || v.s.m[3][6] != 1) return false;
        for (int i = 1; i <= 6; ++i)
            for (int j = i; j <= 6; ++j)
                if (!(i == 2 && j == 3) && !(i == 3 && j == 6) && v.s.m[i][j]) return false;
        return true;
    };

    struct Rule {
        const char* id;
        const char* description;
        // returns true when the rule holds (or does not apply) for this vector
        bool (*check)(std::int64_t n, const SVector& v, bool e1);
    };
    const Rule rules[] = {
        {"no5-upto-30", "P <= 30 implies n5 = 0",
         [](std::int64_t, const SVector& v, bool) { return v.p_tenths > 300 || v.nd[5] == 0; }},
        {"no5-upto-40", "n != 0 (mod 6) and P <= 40 implies n5 = 0",
         [](std::int64_t n, const SVector& v, bool) {
             return n % 6 == 0 || v.p_tenths > 400 || v.nd[5] == 0;
         }},
        {"no4-below-30", "P < 30 implies n4 = 0",
         [](std::int64_t, const SVector& v, bool) { return v.p_tenths >= 300 || v.nd[4] == 0; }},
        {"no4-at-30", "n != 1 (mod 6) and P = 30 implies n4 = 0",
         [](std::int64_t n, const SVector& v, bool) {
             return n % 6 == 1 || v.p_tenths != 300 || v.nd[4] == 0;
         }},
        {"no4-30-40", "n not in {0,1,2} (mod 6) and 30 < P <= 40 implies n4 = 0",
         [](std::int64_t n, const SVector& v, bool) {
             return n % 6 < 3 || v.p_tenths <= 300 || v.p_tenths > 400 || v.nd[4] == 0;
         }},
        {"no3-upto-10", "P <= 10 implies n3 = 0",
         [](std::int64_t, const SVector& v, bool) { return v.p_tenths > 100 || v.nd[3] == 0; }},
        {"no3-10-22", "n not in {0,1} (mod 6) and 10 < P <= 22 implies n3 = 0",
         [](std::int64_t n, const SVector& v, bool) {
             return n % 6 < 2 || v.p_tenths <= 100 || v.p_tenths > 220 || v.nd[3] == 0;
         }},
        {"no3-22-30", "n not in {0,1,2} (mod 6) and 22 < P <= 30 implies n3 = 0",
         [](std::int64_t n, const SVector& v, bool) {
             return n % 6 < 3 || v.p_tenths <= 220 || v.p_tenths > 300 || v.nd[3] == 0;
         }},
        {"no3-30-40-exception",
         "n in {3,4} (mod 6) and 30 < P <= 40 implies n3 = 0, except the exceptional "
         "pattern {m23=2, m36=1} with P = 40 at n = 3 (mod 6)",
         [](std::int64_t n, const SVector& v, bool e1) {
             if (n % 6 != 3 && n % 6 != 4) return true;
             if (v.p_tenths <= 300 || v.p_tenths > 400) return true;
             return v.nd[3] == 0 || (e1 && n % 6 == 3);
         }},
    };

    rep.items.resize(std::size(rules));
    for (size_t r = 0; r < std::size(rules); ++r) {
        rep.items[r].id = rules[r].id;
        rep.items[r].description = rules[r].description;
    }

    for (std::int64_t n = from; n <= to; ++n) {
        auto vectors = feasible_s_vectors(n, budget, mode);
        for (const auto& v : vectors) {
            bool e1 = is_e1(v);
            for (size_t r = 0; r < std::size(rules); ++r)
                if (!rules[r].check(n, v, e1)) rep.items[r].violations.push_back({n, v});
        }
    }
    return rep;
}

}  // namespace sigma6
