#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sigma6/families.hpp"
#include "sigma6/penalty.hpp"
#include "sigma6/tree.hpp"

namespace sigma6 {

struct ScanOptions {
    int max_degree = 6;
    bool exact_degree = true;  // keep only trees whose max degree equals max_degree
    int threads = 0;           // 0: SIGMA6_THREADS env or OpenMP default; 1: serial reference
};

// Brute-force extremal result for one order.
struct ExtremalReport {
    std::int64_t n = 0;
    std::int64_t p_min_tenths = 0;
    std::int64_t closed_form_tenths = 0;
    bool threshold_ok = false;                    // n at/above the residue's asserted order
    std::vector<std::string> minimizer_codes;     // sorted canonical codes
    std::vector<std::string> family_matches;      // per code: family, "pattern:<id>", or "none"
    std::int64_t minimizer_count = 0;
    std::int64_t trees_enumerated = 0;            // max-degree <= 6 classes examined
    std::int64_t elapsed_ms = 0;

    bool matches_closed_form() const { return p_min_tenths == closed_form_tenths; }
};

// Minimum penalty over all trees of order n with maximum degree (exactly, by
// default) max_degree, with every minimizing isomorphism class collected.
// Throws NoAdmissibleTree for n < 7 under the default degree-6 universe.
ExtremalReport brute_force_min(int n, const ScanOptions& opts = {});

// Resolves the worker count: explicit option, else SIGMA6_THREADS (0 or
// unset means the OpenMP default).
int resolve_threads(int requested);

// The family whose member set at the order-implied scale contains this tree,
// if any. Trees whose max degree is not 6 match nothing.
std::optional<FamilyId> match_family(const Tree& t);

// ---------------------------------------------------------------------------
// Multiset-level feasibility oracle
// ---------------------------------------------------------------------------

// An S-indexed assignment together with everything the handshake system
// derives from it at order n.
struct SVector {
    SSubvector s;
    std::int64_t m16 = 0, m26 = 0;
    std::array<std::int64_t, 7> nd{};  // degree counts n_1..n_6
    std::int64_t p_tenths = 0;

    std::string str() const;
};

enum class FeasibilityMode {
    // nonnegative integral reconstruction + nonnegative integral degree counts
    handshake_only,
    // additionally the simple-graph multiplicity bounds
    // m[i][i] <= C(n_i,2), m[i][j] <= n_i n_j  (still necessity-only)
    simple_graph_bounds,
};

// All S-assignments with penalty <= budget that pass the feasibility filter
// at order n, in deterministic order. Necessity only: a listed vector is not
// a promise that a tree realizes it.
std::vector<SVector> feasible_s_vectors(std::int64_t n, DeciValue budget,
                                        FeasibilityMode mode = FeasibilityMode::simple_graph_bounds);

// ---------------------------------------------------------------------------
// Replay of the degree-exclusion rules over the oracle
// ---------------------------------------------------------------------------

struct LemmaViolation {
    std::int64_t n;
    SVector vec;
};

struct LemmaItemResult {
    std::string id;           // short rule id, e.g. "no5-upto-30"
    std::string description;  // hypothesis -> conclusion, human readable
    std::vector<LemmaViolation> violations;
};

struct LemmaReplayReport {
    std::int64_t from = 0, to = 0;
    std::int64_t budget_tenths = 0;
    FeasibilityMode mode = FeasibilityMode::simple_graph_bounds;
    std::vector<LemmaItemResult> items;

    bool clean() const {
        for (const auto& it : items)
            if (!it.violations.empty()) return false;
        return true;
    }
};

// Checks, over every feasible vector of every order in [from, to], the degree
// exclusions claimed for penalties up to the budget (at most 40). Violations
// are collected per rule, never silently dropped.
LemmaReplayReport replay_exclusion_lemmas(std::int64_t from, std::int64_t to, DeciValue budget,
                                          FeasibilityMode mode = FeasibilityMode::simple_graph_bounds);

}  // namespace sigma6
