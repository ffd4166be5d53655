#ifndef SFN_RATCORE_HPP
#define SFN_RATCORE_HPP

#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

namespace sfn {

using cplx = std::complex<double>;

/// Result returned when evaluation lands exactly on a pole of the
/// rational function.  Compositions propagate it; nothing throws.
inline cplx pole_hit_sentinel() {
    return {std::numeric_limits<double>::infinity(),
            std::numeric_limits<double>::infinity()};
}

inline bool is_pole_hit(cplx v) {
    return !std::isfinite(v.real()) || !std::isfinite(v.imag());
}

struct invalid_input : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/**
 * Rational function in barycentric form,
 *
 *   r(z) = sum_j w_j f_j / (z - z_j)  /  sum_j w_j / (z - z_j),
 *
 * interpolating f_j at each support point z_j with nonzero weight.
 */
struct BarycentricRational {
    std::vector<cplx> support;
    std::vector<cplx> values;
    std::vector<cplx> weights;

    std::size_t size() const { return support.size(); }
    /// Degree as conventionally reported: support count minus one.
    /// (The count of retained finite poles can be smaller; see PoleReport.)
    int degree() const { return static_cast<int>(support.size()) - 1; }

    /// Bounding-box diagonal of the support set; the length scale for
    /// tolerances.
    double support_scale() const;

    /// Throws invalid_input on broken invariants (mismatched lengths,
    /// duplicate supports, all-zero weights).
    void validate() const;
};

struct PoleReport {
    std::vector<cplx> poles;
    std::vector<cplx> residues;       // parallel to poles
    std::vector<bool> offscale_mask;  // |pole| beyond off-scale radius
    double offscale_radius = 0.0;

    std::size_t count_onscale() const;
};

/// Barycentric evaluation.  Exact support hits return the interpolation
/// value; near-support points use the cancellation-free rearranged
/// quotient; a vanishing denominator elsewhere yields the pole-hit
/// sentinel.
cplx evaluate(const BarycentricRational& r, cplx z);

/// Finite poles and residues from the (m+1)x(m+1) arrowhead pencil.
/// Residues via N(p)/D'(p) with the partial-fraction derivative.
/// offscale_radius <= 0 selects the default 1e6 * support diameter.
PoleReport poles_and_residues(const BarycentricRational& r,
                              double offscale_radius = 0.0);

/// Finite zeros: same pencil with w_j f_j in place of w_j.
/// all_trivial is set when every w_j f_j vanishes (empty result).
std::vector<cplx> zeros(const BarycentricRational& r,
                        bool* all_trivial = nullptr);

}  // namespace sfn

#endif
