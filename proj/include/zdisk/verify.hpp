#ifndef ZDISK_VERIFY_HPP
#define ZDISK_VERIFY_HPP

#include <string>
#include <vector>

namespace zdisk {

struct CheckResult {
    std::string name;
    double measured = 0.0;
    double threshold = 0.0;
    bool passed = false;
};

/// Numerical self-check of the basis, quadrature, transform, ladder algebra
/// and differential forms for all modes with k, l <= max_index. Each check
/// reports its worst defect against tol (radial orthogonality is exact and
/// reports 0 or 1).
std::vector<CheckResult> run_verification(unsigned max_index, double tol, unsigned seed = 1);

} // namespace zdisk

#endif
