#ifndef SFN_SCHWARZ_HPP
#define SFN_SCHWARZ_HPP

#include <functional>
#include <string>
#include <vector>

#include "sfn/aaafit.hpp"
#include "sfn/curves.hpp"
#include "sfn/ratcore.hpp"

namespace sfn {

/// A fitted stand-in r(z) for the Schwarz function S(z) of a curve,
/// with provenance.  On the fit samples, conj(Z) matches r(Z) to
/// tol_used relative when the fit converged.
struct SchwarzApprox {
    BarycentricRational rat;
    std::string curve_id;
    FitReport fit;
    double tol_used = 0.0;
};

/// AAA fit of S from boundary samples with targets F = conj(Z).
SchwarzApprox fit_schwarz(const SampleSet& samples, const FitConfig& cfg = {});

/// conj(r(z)): the approximate reflection of z across the curve.
cplx reflect(const SchwarzApprox& s, cplx z);

struct OrbitResult {
    std::vector<cplx> points;  // z_1 .. z_k
    bool two_cycle = false;
    bool escaped = false;  // truncated after |z| grew past 1e8
};

/// Iterated reflection z_{j+1} = conj(r(z_j)), k steps.
OrbitResult orbit(const SchwarzApprox& s, cplx z0, int k,
                  double cycle_tol = 1e-4);

enum class Parity { real_on_gamma, imag_on_gamma };

/// Analytic continuation of f across the curve through the reflection:
/// conj(f(conj(r(z)))) for f real on the curve, negated for imaginary f.
cplx continue_function(const SchwarzApprox& s,
                       const std::function<cplx(cplx)>& f, cplx z,
                       Parity parity);

/// Exact Schwarz function of the unit circle, 1/z.  Throws
/// invalid_input at z = 0 (outside the punctured-plane domain).
cplx oracle_circle(cplx z);

enum class EllipseBranch { S1, S2 };

/**
 * Exact Schwarz function of the rho-ellipse (foci +-1):
 *
 *   S(z) = a z -+ b sqrt(z^2 - 1),  a = (rho^2 + rho^-2)/2,
 *                                   b = (rho^2 - rho^-2)/2,
 *
 * with the principal square root of z^2 - 1 (on the cut the +0i side is
 * taken).  S1 carries the minus sign and equals conj(z) on the curve;
 * the pair {S1, S2} are the two roots of (S - a z)^2 = b^2 (z^2 - 1).
 */
struct EllipseOracle {
    double rho;
    double a;
    double b;

    explicit EllipseOracle(double rho_);
    cplx eval(cplx z, EllipseBranch branch) const;
};

/// |conj(r(conj(r(z)))) - z|: deviation of the approximate reflection
/// from being an involution.  +inf where a pole was hit.
double involution_error(const SchwarzApprox& s, cplx z);

/// min(|r(z) - S1(z)|, |r(z) - S2(z)|) against the exact ellipse
/// branches.
double branch_error(const EllipseOracle& o, const SchwarzApprox& s, cplx z);

}  // namespace sfn

#endif
