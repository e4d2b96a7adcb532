#pragma once

#include <stdexcept>
#include <string>

namespace sigma6 {

// Stable error kinds; the CLI maps these to exit codes and one-line
// diagnostics whose first token is the kind name below.
enum class errc {
    cycle_detected,
    disconnected,
    duplicate_edge,
    vertex_out_of_range,
    degree_exceeds_six,
    not_in_s,
    formula_unavailable,
    order_too_small,
    param_out_of_range,
    base_family_empty,
    no_admissible_tree,
    invalid_input,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::cycle_detected:      return "CycleDetected";
        case errc::disconnected:        return "Disconnected";
        case errc::duplicate_edge:      return "DuplicateEdge";
        case errc::vertex_out_of_range: return "VertexOutOfRange";
        case errc::degree_exceeds_six:  return "DegreeExceedsSix";
        case errc::not_in_s:            return "NotInS";
        case errc::formula_unavailable: return "FormulaUnavailable";
        case errc::order_too_small:     return "OrderTooSmall";
        case errc::param_out_of_range:  return "ParamOutOfRange";
        case errc::base_family_empty:   return "BaseFamilyEmpty";
        case errc::no_admissible_tree:  return "NoAdmissibleTree";
        case errc::invalid_input:       return "InvalidInput";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& detail)
        : std::runtime_error(detail.empty() ? std::string(errc_name(code))
                                            : std::string(errc_name(code)) + ": " + detail),
          code_(code) {}

    explicit Error(errc code) : Error(code, "") {}

    errc code() const noexcept { return code_; }
    const char* name() const noexcept { return errc_name(code_); }

  private:
    errc code_;
};

}  // namespace sigma6
