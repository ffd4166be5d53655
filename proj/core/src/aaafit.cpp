#include "sfn/aaafit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Core>

#include "lapack_util.hpp"

namespace sfn {

void FitConfig::validate() const {
    if (!(rel_tol > 0.0 && rel_tol < 1.0))
        throw invalid_input("rel_tol must lie in (0, 1)");
    if (max_degree < 1) throw invalid_input("max_degree must be >= 1");
    if (!(cleanup_residue_tol > 0.0))
        throw invalid_input("cleanup_residue_tol must be positive");
}

FitMode fit_mode_from_string(const std::string& s) {
    if (s == "standard") return FitMode::standard;
    if (s == "sign_reserved") return FitMode::sign_reserved;
    throw invalid_input("unknown fit mode: " + s);
}

std::string to_string(FitMode m) {
    return m == FitMode::standard ? "standard" : "sign_reserved";
}

double relative_fit_error(const BarycentricRational& r,
                          const std::vector<cplx>& Z,
                          const std::vector<cplx>& F) {
    double scale = 0.0, err = 0.0;
    for (const cplx& f : F) scale = std::max(scale, std::abs(f));
    if (scale == 0.0) scale = 1.0;
    for (std::size_t i = 0; i < Z.size(); ++i)
        err = std::max(err, std::abs(F[i] - evaluate(r, Z[i])));
    return err / scale;
}

namespace {

// Re-solve the barycentric weights for a fixed support set: smallest
// right singular vector of the Loewner matrix over the non-support
// samples.
Eigen::VectorXcd solve_weights(const std::vector<cplx>& Z,
                               const std::vector<cplx>& F,
                               const std::vector<cplx>& support,
                               const std::vector<cplx>& values,
                               double* sigma_min = nullptr) {
    const std::size_t N = Z.size();
    const std::size_t m = support.size();
    std::vector<std::size_t> rows;
    rows.reserve(N);
    for (std::size_t i = 0; i < N; ++i) {
        bool is_sup = false;
        for (std::size_t j = 0; j < m; ++j)
            if (Z[i] == support[j]) {
                is_sup = true;
                break;
            }
        if (!is_sup) rows.push_back(i);
    }
    Eigen::MatrixXcd L(rows.size(), m);
    for (std::size_t a = 0; a < rows.size(); ++a) {
        const std::size_t i = rows[a];
        for (std::size_t j = 0; j < m; ++j)
            L(a, j) = (F[i] - values[j]) / (Z[i] - support[j]);
    }
    return detail::smallest_right_singvec(L, sigma_min);
}

}  // namespace

BarycentricRational cleanup_spurious(const BarycentricRational& r_in,
                                     const std::vector<cplx>& Z,
                                     const std::vector<cplx>& F,
                                     const FitConfig& cfg, int* cleaned) {
    if (cleaned) *cleaned = 0;
    BarycentricRational r = r_in;
    double scale = 0.0;
    for (const cplx& f : F) scale = std::max(scale, std::abs(f));
    if (scale == 0.0) scale = 1.0;

    double err = relative_fit_error(r, Z, F);
    const double budget = std::max(cfg.rel_tol, err);

    while (r.support.size() >= 3) {
        PoleReport rep = poles_and_residues(r);
        std::size_t worst = rep.poles.size();
        double worst_res = cfg.cleanup_residue_tol * scale;
        for (std::size_t i = 0; i < rep.poles.size(); ++i) {
            const double a = std::abs(rep.residues[i]);
            if (a < worst_res) {
                worst_res = a;
                worst = i;
            }
        }
        if (worst == rep.poles.size()) break;  // nothing spurious left

        // Drop the support point nearest the spurious pole and re-solve.
        std::size_t jdel = 0;
        double dmin = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < r.support.size(); ++j) {
            const double d = std::abs(rep.poles[worst] - r.support[j]);
            if (d < dmin) {
                dmin = d;
                jdel = j;
            }
        }
        BarycentricRational cand;
        for (std::size_t j = 0; j < r.support.size(); ++j) {
            if (j == jdel) continue;
            cand.support.push_back(r.support[j]);
            cand.values.push_back(r.values[j]);
        }
        Eigen::VectorXcd w = solve_weights(Z, F, cand.support, cand.values);
        cand.weights.assign(w.data(), w.data() + w.size());

        const double cand_err = relative_fit_error(cand, Z, F);
        if (cand_err > budget) break;  // removal would break the fit
        r = std::move(cand);
        err = cand_err;
        if (cleaned) ++*cleaned;
    }
    return r;
}

std::pair<BarycentricRational, FitReport> aaa_fit(const std::vector<cplx>& Z,
                                                  const std::vector<cplx>& F,
                                                  const FitConfig& cfg) {
    cfg.validate();
    const std::size_t N = Z.size();
    if (N != F.size()) throw invalid_input("Z and F must have equal length");
    if (N < 2) throw invalid_input("need at least two samples");
    for (std::size_t i = 0; i < N; ++i) {
        if (!std::isfinite(F[i].real()) || !std::isfinite(F[i].imag()))
            throw invalid_input("nonfinite sample value in F");
        if (!std::isfinite(Z[i].real()) || !std::isfinite(Z[i].imag()))
            throw invalid_input("nonfinite sample point in Z");
    }
    {
        std::vector<cplx> s(Z.begin(), Z.end());
        std::sort(s.begin(), s.end(), [](cplx a, cplx b) {
            return a.real() != b.real() ? a.real() < b.real()
                                        : a.imag() < b.imag();
        });
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw invalid_input("duplicate sample points in Z");
    }

    FitReport rep;
    rep.mode_downgraded = cfg.mode == FitMode::sign_reserved;

    double scale = 0.0;
    cplx mean = 0.0;
    for (const cplx& f : F) {
        scale = std::max(scale, std::abs(f));
        mean += f;
    }
    mean /= static_cast<double>(N);
    const double errscale = scale > 0.0 ? scale : 1.0;

    BarycentricRational r;
    std::vector<char> is_support(N, 0);
    Eigen::Map<const Eigen::VectorXcd> Fv(F.data(), static_cast<Eigen::Index>(N));
    Eigen::VectorXcd R = Eigen::VectorXcd::Constant(N, mean);
    Eigen::MatrixXcd C(N, 0);  // Cauchy matrix, support rows zeroed

    const std::size_t max_supports =
        std::min<std::size_t>(static_cast<std::size_t>(cfg.max_degree) + 1, N - 1);

    while (true) {
        // Greedy pick: largest residual, lowest index on ties.
        std::size_t pick = N;
        double best = -1.0;
        for (std::size_t i = 0; i < N; ++i) {
            if (is_support[i]) continue;
            const double d = std::abs(F[i] - R[static_cast<Eigen::Index>(i)]);
            if (d > best) {
                best = d;
                pick = i;
            }
        }
        is_support[pick] = 1;
        r.support.push_back(Z[pick]);
        r.values.push_back(F[pick]);
        const std::size_t m = r.support.size();

        C.conservativeResize(Eigen::NoChange, m);
        for (std::size_t i = 0; i < N; ++i)
            C(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(m - 1)) =
                is_support[i] ? cplx(0.0) : 1.0 / (Z[i] - Z[pick]);
        C.row(static_cast<Eigen::Index>(pick)).setZero();

        std::vector<Eigen::Index> rows;
        rows.reserve(N - m);
        for (std::size_t i = 0; i < N; ++i)
            if (!is_support[i]) rows.push_back(static_cast<Eigen::Index>(i));

        Eigen::MatrixXcd L(rows.size(), m);
        for (std::size_t a = 0; a < rows.size(); ++a)
            for (std::size_t j = 0; j < m; ++j)
                L(a, j) = (F[rows[a]] - r.values[j]) * C(rows[a], j);
        Eigen::VectorXcd w = detail::smallest_right_singvec(L);
        r.weights.assign(w.data(), w.data() + w.size());

        Eigen::Map<const Eigen::VectorXcd> fv(r.values.data(),
                                              static_cast<Eigen::Index>(m));
        Eigen::VectorXcd wf = w.cwiseProduct(fv);
        Eigen::VectorXcd num = C * wf;
        Eigen::VectorXcd den = C * w;
        for (std::size_t i = 0; i < N; ++i) {
            const auto ii = static_cast<Eigen::Index>(i);
            R[ii] = is_support[i] ? F[i] : num[ii] / den[ii];
        }
        const double err = (Fv - R).cwiseAbs().maxCoeff();
        rep.residual_history.push_back(err / errscale);
        ++rep.iterations;

        if (err <= cfg.rel_tol * errscale) {
            rep.converged = true;
            break;
        }
        if (m >= max_supports) break;
    }

    r = cleanup_spurious(r, Z, F, cfg, &rep.cleaned_pole_count);
    rep.final_rel_error = relative_fit_error(r, Z, F);
    rep.converged = rep.final_rel_error <= cfg.rel_tol;
    return {std::move(r), rep};
}

}  // namespace sfn
