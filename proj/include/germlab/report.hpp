#pragma once

#include <optional>

#include "germlab/milnor.hpp"
#include "germlab/newton.hpp"
#include "germlab/sectional.hpp"

namespace germlab {

enum class GermStatus { Ok, Smooth, NotIsolated, InputError };

std::string to_string(GermStatus s);

enum CheckSelect : unsigned {
    kCheckAlgebra = 1u,
    kCheckNewton = 2u,
    kCheckSectional = 4u,
    kCheckAll = 7u,
};

// Comma-separated selection out of "algebra", "newton", "sectional", "all";
// the algebra pass is always included (everything else depends on it).
// Throws std::invalid_argument on unknown names or an empty selection.
unsigned parse_check_selection(const std::string& s);

struct NewtonBlock {
    bool convenient = false;
    std::vector<int> missing_axes;  // when not convenient
    std::vector<Rat> volumes;       // V_1 .. V_n
    std::optional<Int> nu;
    std::optional<bool> mu_ge_nu;
    std::optional<bool> tau_ge_nu_over_n;
};

struct SectionalBlock {
    std::vector<std::size_t> mu_i;  // mu^0 .. mu^n
    bool log_convex = false;
    bool mu_ge_pow = false;           // mu >= (m-1)^n
    bool tau_ge_pow_over_n = false;   // n*tau >= (m-1)^n
};

struct InvariantReport {
    std::string name;
    GermStatus status = GermStatus::InputError;
    std::string message;  // non-OK explanation
    int n = 0;
    std::uint64_t m = 0;
    std::size_t mu = 0;
    std::size_t tau = 0;
    std::string ratio;  // "p/q"; present only when tau > 0
    std::vector<std::size_t> filtration_dims;
    bool bs_holds = false;
    std::map<unsigned, bool> f_pow_checks;
    bool saito_membership = false;
    bool theorem_ok = false;
    bool equality_case = false;
    std::optional<NewtonBlock> newton;
    std::optional<SectionalBlock> sectional;
};

struct AnalyzeOptions {
    unsigned checks = kCheckAlgebra;
    SectionPlan plan;
    std::size_t max_dim = max_dim_cap();
};

// Full per-germ pipeline.  Domain problems (smooth, non-isolated, bad input)
// land in the status field; ResourceLimitError and InternalCheckError
// propagate to the caller.
InvariantReport analyze(std::string name, const Polynomial& f, const AnalyzeOptions& opt);

// Canonical JSON (fixed key order, "p/q" rationals): serializing the same
// report twice is byte-identical.
std::string report_json(const InvariantReport& r);

std::string report_table(const InvariantReport& r);

}  // namespace germlab
