#include "sfn/ratcore.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Core>

#include "lapack_util.hpp"

namespace sfn {

double BarycentricRational::support_scale() const {
    if (support.empty()) return 0.0;
    double xlo = support[0].real(), xhi = xlo;
    double ylo = support[0].imag(), yhi = ylo;
    for (const cplx& z : support) {
        xlo = std::min(xlo, z.real());
        xhi = std::max(xhi, z.real());
        ylo = std::min(ylo, z.imag());
        yhi = std::max(yhi, z.imag());
    }
    return std::hypot(xhi - xlo, yhi - ylo);
}

void BarycentricRational::validate() const {
    const std::size_t m = support.size();
    if (m < 1 || values.size() != m || weights.size() != m)
        throw invalid_input("barycentric data must have equal length >= 1");
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (support[i] == support[j])
                throw invalid_input("support points must be pairwise distinct");
    bool any = false;
    for (const cplx& w : weights) any = any || w != cplx(0.0);
    if (!any) throw invalid_input("weight vector is identically zero");
}

cplx evaluate(const BarycentricRational& r, cplx z) {
    const std::size_t m = r.support.size();
    // Exact support hit: interpolation value.
    for (std::size_t j = 0; j < m; ++j)
        if (z == r.support[j] && r.weights[j] != cplx(0.0)) return r.values[j];

    const double near_tol = 1e-13 * std::max(r.support_scale(), 1.0);
    std::size_t jnear = m;
    double dmin = near_tol;
    for (std::size_t j = 0; j < m; ++j) {
        double d = std::abs(z - r.support[j]);
        if (d < dmin) {
            dmin = d;
            jnear = j;
        }
    }
    if (jnear < m && r.weights[jnear] != cplx(0.0)) {
        // Rearranged quotient: multiply through by (z - z_j) so the
        // dominant terms stay O(1) instead of cancelling.
        const cplx d = z - r.support[jnear];
        cplx num = r.weights[jnear] * r.values[jnear];
        cplx den = r.weights[jnear];
        for (std::size_t j = 0; j < m; ++j) {
            if (j == jnear) continue;
            const cplx t = d / (z - r.support[j]);
            num += t * r.weights[j] * r.values[j];
            den += t * r.weights[j];
        }
        if (den == cplx(0.0)) return pole_hit_sentinel();
        return num / den;
    }

    cplx num = 0.0, den = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        const cplx c = r.weights[j] / (z - r.support[j]);
        num += c * r.values[j];
        den += c;
    }
    if (den == cplx(0.0)) return pole_hit_sentinel();
    return num / den;
}

namespace {

// Finite generalized eigenvalues of the arrowhead pencil
//   [ 0  t^T ]        [ 0    ]
//   [ e  diag(z) ] ,  [    I ]
// whose finite part gives the roots of sum_j t_j / (z - z_j).
std::vector<cplx> arrowhead_roots(const std::vector<cplx>& supports,
                                  const std::vector<cplx>& top) {
    const auto m = static_cast<Eigen::Index>(supports.size());
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(m + 1, m + 1);
    Eigen::MatrixXcd B = Eigen::MatrixXcd::Zero(m + 1, m + 1);
    for (Eigen::Index j = 0; j < m; ++j) {
        A(0, j + 1) = top[j];
        A(j + 1, 0) = 1.0;
        A(j + 1, j + 1) = supports[j];
        B(j + 1, j + 1) = 1.0;
    }
    std::vector<cplx> alpha, beta;
    detail::generalized_eigs(A, B, alpha, beta);

    std::vector<cplx> roots;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        // The pencil carries two structurally infinite eigenvalues;
        // genuinely huge finite poles (off-scale) must survive this cut.
        if (std::abs(beta[i]) <= 1e-12 * (std::abs(alpha[i]) + std::abs(beta[i])))
            continue;
        roots.push_back(alpha[i] / beta[i]);
    }
    // Structural bound: at most m - 1 finite roots.
    if (roots.size() > supports.size() - 1) {
        std::sort(roots.begin(), roots.end(),
                  [](cplx a, cplx b) { return std::abs(a) < std::abs(b); });
        roots.resize(supports.size() - 1);
    }
    return roots;
}

}  // namespace

std::size_t PoleReport::count_onscale() const {
    std::size_t n = 0;
    for (bool off : offscale_mask)
        if (!off) ++n;
    return n;
}

PoleReport poles_and_residues(const BarycentricRational& r,
                              double offscale_radius) {
    r.validate();
    const std::size_t m = r.support.size();
    if (m < 2) throw invalid_input("pole extraction needs m >= 2");

    PoleReport rep;
    rep.offscale_radius =
        offscale_radius > 0 ? offscale_radius : 1e6 * r.support_scale();
    rep.poles = arrowhead_roots(r.support, r.weights);

    for (const cplx& p : rep.poles) {
        // res = N(p)/D'(p) for the partial-fraction numerator and
        // denominator; no finite differencing near clustered poles.
        cplx num = 0.0, dden = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            const cplx inv = 1.0 / (p - r.support[j]);
            num += r.weights[j] * r.values[j] * inv;
            dden -= r.weights[j] * inv * inv;
        }
        rep.residues.push_back(num / dden);
        rep.offscale_mask.push_back(std::abs(p) > rep.offscale_radius);
    }
    return rep;
}

std::vector<cplx> zeros(const BarycentricRational& r, bool* all_trivial) {
    r.validate();
    if (r.support.size() < 2) throw invalid_input("zero extraction needs m >= 2");

    std::vector<cplx> top(r.support.size());
    bool any = false;
    for (std::size_t j = 0; j < r.support.size(); ++j) {
        top[j] = r.weights[j] * r.values[j];
        any = any || top[j] != cplx(0.0);
    }
    if (all_trivial) *all_trivial = !any;
    if (!any) return {};
    // Constant r (all interpolated values equal): numerator and
    // denominator are proportional, so the pencil would report the
    // denominator's roots.  A nonzero constant has no zeros.
    bool constant = true;
    cplx first;
    bool have_first = false;
    for (std::size_t j = 0; j < r.support.size(); ++j) {
        if (r.weights[j] == cplx(0.0)) continue;
        if (!have_first) {
            first = r.values[j];
            have_first = true;
        } else if (r.values[j] != first) {
            constant = false;
        }
    }
    if (constant) return {};
    return arrowhead_roots(r.support, top);
}

}  // namespace sfn
