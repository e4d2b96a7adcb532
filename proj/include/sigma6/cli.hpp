#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "sigma6/families.hpp"
#include "sigma6/search.hpp"

namespace sigma6 {

// Exit codes: 0 success, 1 verification mismatch / rule violations,
// 2 validation or parameter failure, 3 empty placement range.

int cmd_sigma(const std::string& path, std::ostream& out, std::ostream& err);

int cmd_construct(const FamilySpec& spec, const std::string& out_path, std::ostream& out,
                  std::ostream& err);

int cmd_pmin(std::int64_t n, std::ostream& out, std::ostream& err);

struct VerifyOptions {
    int n = 0;
    int ceiling = 24;        // refuse larger orders unless raised explicitly
    int max_degree = 6;
    bool exact_degree = true;
    int threads = 0;
    bool stable_output = false;
};
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);

int cmd_families(FamilyId id, int k, std::ostream& out, std::ostream& err);

int cmd_oracle_feasible(std::int64_t n, DeciValue budget, FeasibilityMode mode, std::ostream& out,
                        std::ostream& err);

int cmd_oracle_lemmas(std::int64_t from, std::int64_t to, DeciValue budget, FeasibilityMode mode,
                      std::ostream& out, std::ostream& err);

// Full argv front end (CLI11).
int run_cli(int argc, char** argv);

}  // namespace sigma6
