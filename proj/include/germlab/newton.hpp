#pragma once

#include "germlab/polynomial.hpp"

namespace germlab {

// The Newton diagram misses one or more coordinate axes, so the Newton
// number is undefined (the under-diagram region has infinite volume).
class NotConvenientError : public std::runtime_error {
  public:
    NotConvenientError(std::string msg, std::vector<int> missing)
        : std::runtime_error(std::move(msg)), missing_(std::move(missing)) {}
    const std::vector<int>& missing_axes() const { return missing_; }

  private:
    std::vector<int> missing_;
};

struct SupportSet {
    int n = 0;
    std::vector<Exponent> points;  // deduplicated, sorted
};

SupportSet support(const Polynomial& f);

// Axes i (0-based) with no pure power x_i^k in the support.
std::vector<int> missing_axes(const SupportSet& s);
bool is_convenient(const SupportSet& s);

// Exact volume of {x >= 0} \ (Newton polyhedron) inside the coordinate
// subspace spanned by `axes`, i.e. the region under the Newton diagram of
// the support points lying in that subspace.  The support restricted to the
// subspace must itself be convenient there.
Rat under_diagram_volume(const SupportSet& s, const std::vector<int>& axes);

struct NewtonResult {
    bool convenient = false;
    Int nu;                    // Newton number
    std::vector<Rat> volumes;  // V_1 .. V_n
};

// nu = sum_{q=1}^{n} (-1)^{n-q} q! V_q + (-1)^n.  Each q! V_q is verified
// to be an integer.  Throws NotConvenientError when the diagram misses an
// axis.  Limited to n <= 4 (exact hull volumes get expensive beyond that).
NewtonResult newton_number(const Polynomial& f);

struct KushnirenkoReport {
    NewtonResult newton;
    bool mu_ge_nu = false;
    bool n_tau_ge_nu = false;  // n*tau >= nu
};

KushnirenkoReport kushnirenko_report(const Polynomial& f, std::size_t mu, std::size_t tau);

}  // namespace germlab
