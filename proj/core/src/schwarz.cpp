#include "sfn/schwarz.hpp"

#include <cmath>

namespace sfn {

SchwarzApprox fit_schwarz(const SampleSet& samples, const FitConfig& cfg) {
    for (std::size_t i = 0; i < samples.Z.size(); ++i)
        if (samples.F[i] != std::conj(samples.Z[i]))
            throw invalid_input("Schwarz samples require F = conj(Z)");
    auto [rat, rep] = aaa_fit(samples.Z, samples.F, cfg);
    SchwarzApprox s;
    s.rat = std::move(rat);
    s.curve_id = samples.curve_id;
    s.fit = std::move(rep);
    s.tol_used = cfg.rel_tol;
    return s;
}

cplx reflect(const SchwarzApprox& s, cplx z) {
    const cplx v = evaluate(s.rat, z);
    if (is_pole_hit(v)) return v;
    return std::conj(v);
}

OrbitResult orbit(const SchwarzApprox& s, cplx z0, int k, double cycle_tol) {
    if (k < 1) throw invalid_input("orbit needs k >= 1");
    OrbitResult out;
    cplx z = z0;
    for (int j = 0; j < k; ++j) {
        z = reflect(s, z);
        out.points.push_back(z);
        if (is_pole_hit(z) || std::abs(z) > 1e8) {
            out.escaped = true;
            break;
        }
    }
    const std::size_t n = out.points.size();
    if (!out.escaped && n >= 3) {
        // 2-cycle: the last pair repeats the pair two steps earlier.
        const cplx a = out.points[n - 1], b = out.points[n - 3];
        out.two_cycle = std::abs(a - b) <= cycle_tol;
        if (n >= 4)
            out.two_cycle = out.two_cycle &&
                            std::abs(out.points[n - 2] - out.points[n - 4]) <=
                                cycle_tol;
    }
    return out;
}

cplx continue_function(const SchwarzApprox& s,
                       const std::function<cplx(cplx)>& f, cplx z,
                       Parity parity) {
    const cplx w = reflect(s, z);
    if (is_pole_hit(w)) return w;
    const cplx v = std::conj(f(w));
    return parity == Parity::real_on_gamma ? v : -v;
}

cplx oracle_circle(cplx z) {
    if (z == cplx(0.0))
        throw invalid_input("circle Schwarz function undefined at z = 0");
    return 1.0 / z;
}

EllipseOracle::EllipseOracle(double rho_) : rho(rho_) {
    if (!(rho > 1.0)) throw invalid_input("EllipseOracle needs rho > 1");
    const double r2 = rho * rho;
    a = 0.5 * (r2 + 1.0 / r2);
    b = 0.5 * (r2 - 1.0 / r2);
}

cplx EllipseOracle::eval(cplx z, EllipseBranch branch) const {
    // Principal sqrt of z^2 - 1; on its cut the limit from the +0i side
    // applies (a signed -0 imaginary part must not flip the branch).
    cplx q = z * z - 1.0;
    if (q.imag() == 0.0) q = cplx(q.real(), +0.0);
    const cplx root = std::sqrt(q);
    return branch == EllipseBranch::S1 ? a * z - b * root : a * z + b * root;
}

double involution_error(const SchwarzApprox& s, cplx z) {
    const cplx once = reflect(s, z);
    if (is_pole_hit(once)) return std::numeric_limits<double>::infinity();
    const cplx twice = reflect(s, once);
    if (is_pole_hit(twice)) return std::numeric_limits<double>::infinity();
    return std::abs(twice - z);
}

double branch_error(const EllipseOracle& o, const SchwarzApprox& s, cplx z) {
    const cplx r = evaluate(s.rat, z);
    if (is_pole_hit(r)) return std::numeric_limits<double>::infinity();
    const double d1 = std::abs(r - o.eval(z, EllipseBranch::S1));
    const double d2 = std::abs(r - o.eval(z, EllipseBranch::S2));
    return std::min(d1, d2);
}

}  // namespace sfn
