#ifndef SFN_AAAFIT_HPP
#define SFN_AAAFIT_HPP

#include <string>
#include <vector>

#include "sfn/ratcore.hpp"

namespace sfn {

enum class FitMode { standard, sign_reserved };

struct FitConfig {
    double rel_tol = 1e-13;
    int max_degree = 150;
    double cleanup_residue_tol = 1e-13;  // relative to scale of F
    FitMode mode = FitMode::standard;

    void validate() const;
};

FitMode fit_mode_from_string(const std::string& s);
std::string to_string(FitMode m);

struct FitReport {
    int iterations = 0;
    double final_rel_error = 0.0;  // inf-norm over samples, relative to ||F||_inf
    bool converged = false;
    int cleaned_pole_count = 0;
    // sign_reserved maps to standard; set so front ends can warn.
    bool mode_downgraded = false;
    // Greedy max residual after each iteration (relative), for diagnostics.
    std::vector<double> residual_history;
};

/**
 * AAA greedy rational fit of the data (Z, F).
 *
 * Starts from r == mean(F); each step promotes the sample of largest
 * residual (ties: lowest index) to a support point and re-solves the
 * barycentric weights as the smallest right singular vector of the
 * Loewner matrix over the remaining samples.  Stops at cfg.rel_tol
 * relative to ||F||_inf or at cfg.max_degree.  Spurious small-residue
 * poles are cleaned before returning; the report carries the
 * post-cleanup error.
 */
std::pair<BarycentricRational, FitReport> aaa_fit(
    const std::vector<cplx>& Z, const std::vector<cplx>& F,
    const FitConfig& cfg = {});

/// Froissart-doublet removal: drops the support point nearest each pole
/// of negligible residue and re-solves the least-squares weights, as
/// long as the fit error stays within tolerance.  cleaned (if given)
/// receives the number of poles removed.
BarycentricRational cleanup_spurious(const BarycentricRational& r,
                                     const std::vector<cplx>& Z,
                                     const std::vector<cplx>& F,
                                     const FitConfig& cfg,
                                     int* cleaned = nullptr);

/// max_i |F_i - r(Z_i)| / max_i |F_i|, computed directly.
double relative_fit_error(const BarycentricRational& r,
                          const std::vector<cplx>& Z,
                          const std::vector<cplx>& F);

}  // namespace sfn

#endif
