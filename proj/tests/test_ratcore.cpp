#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>

#include <sfn/ratcore.hpp>

using namespace sfn;

namespace {

// r(z) = z: support {1,-1}, values {1,-1}.  The two-term quotient
// expands to N = 2z/(z^2-1), D = 2/(z^2-1) with weights {1,-1}.
BarycentricRational identity_rational() {
    return {{1.0, -1.0}, {1.0, -1.0}, {1.0, -1.0}};
}

// Same support and values with weights {1,1} gives N = 2/(z^2-1),
// D = 2z/(z^2-1): the function 1/z, with its pole at the origin.
BarycentricRational reciprocal_rational() {
    return {{1.0, -1.0}, {1.0, -1.0}, {1.0, 1.0}};
}

// Denominator polynomial D(z) = sum_j w_j prod_{k != j} (z - z_k),
// expanded to monomial coefficients (ascending powers).
std::vector<cplx> denominator_coeffs(const BarycentricRational& r) {
    const std::size_t m = r.support.size();
    std::vector<cplx> acc(m, 0.0);
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<cplx> prod{1.0};
        for (std::size_t k = 0; k < m; ++k) {
            if (k == j) continue;
            std::vector<cplx> next(prod.size() + 1, 0.0);
            for (std::size_t d = 0; d < prod.size(); ++d) {
                next[d] -= r.support[k] * prod[d];
                next[d + 1] += prod[d];
            }
            prod = std::move(next);
        }
        for (std::size_t d = 0; d < prod.size(); ++d)
            acc[d] += r.weights[j] * prod[d];
    }
    return acc;
}

std::vector<cplx> companion_roots(std::vector<cplx> coeffs) {
    while (!coeffs.empty() && std::abs(coeffs.back()) == 0.0)
        coeffs.pop_back();
    const std::size_t deg = coeffs.empty() ? 0 : coeffs.size() - 1;
    if (deg == 0) return {};
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(deg, deg);
    for (std::size_t k = 0; k + 1 < deg; ++k) C(k + 1, k) = 1.0;
    for (std::size_t k = 0; k < deg; ++k)
        C(k, deg - 1) = -coeffs[k] / coeffs[deg];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C);
    std::vector<cplx> roots;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
        roots.push_back(es.eigenvalues()[i]);
    return roots;
}

// Greedy matching distance between two equally sized point sets.
double set_distance(std::vector<cplx> a, std::vector<cplx> b) {
    if (a.size() != b.size()) return 1e300;
    double worst = 0.0;
    for (const cplx& p : a) {
        auto best = std::min_element(b.begin(), b.end(), [&](cplx x, cplx y) {
            return std::abs(p - x) < std::abs(p - y);
        });
        worst = std::max(worst, std::abs(p - *best));
        b.erase(best);
    }
    return worst;
}

}  // namespace

TEST_CASE("support-point interpolation is exact") {
    BarycentricRational r = identity_rational();
    CHECK(evaluate(r, 1.0) == cplx(1.0));
    CHECK(evaluate(r, -1.0) == cplx(-1.0));
}

TEST_CASE("two-term barycentric quotient reduces to the identity") {
    BarycentricRational r = identity_rational();
    for (cplx z : {cplx(3.0), cplx(0.0), cplx(0.25, -1.5), cplx(-7.0, 2.0)})
        CHECK(std::abs(evaluate(r, z) - z) <= 1e-14 * (1.0 + std::abs(z)));
}

TEST_CASE("reciprocal configuration has its pole at the origin") {
    BarycentricRational r = reciprocal_rational();
    CHECK(std::abs(evaluate(r, cplx(4.0)) - 0.25) <= 1e-14);
    PoleReport rep = poles_and_residues(r);
    REQUIRE(rep.poles.size() == 1);
    CHECK(std::abs(rep.poles[0]) <= 1e-12);
    CHECK_FALSE(rep.offscale_mask[0]);
}

TEST_CASE("near-support evaluation avoids cancellation") {
    BarycentricRational r = identity_rational();
    const cplx z = cplx(1.0) + cplx(1e-15, 0.0);
    CHECK(std::abs(evaluate(r, z) - z) <= 1e-13);
}

TEST_CASE("exact denominator zero yields the pole-hit sentinel") {
    BarycentricRational r = reciprocal_rational();
    CHECK(is_pole_hit(evaluate(r, cplx(0.0))));
    CHECK(is_pole_hit(pole_hit_sentinel()));
}

TEST_CASE("zeros of the identity and of constants") {
    bool trivial = false;
    std::vector<cplx> zs = zeros(identity_rational(), &trivial);
    CHECK_FALSE(trivial);
    REQUIRE(zs.size() == 1);
    CHECK(std::abs(zs[0]) <= 1e-12);
    CHECK(std::abs(evaluate(identity_rational(), zs[0])) <= 1e-12);

    // Constant 1: no finite zeros.
    BarycentricRational one{{1.0, -1.0}, {1.0, 1.0}, {1.0, 1.0}};
    CHECK(zeros(one, &trivial).empty());
    CHECK_FALSE(trivial);

    // All products w_j f_j zero: empty, flagged.
    BarycentricRational null{{1.0, -1.0}, {0.0, 0.0}, {1.0, 1.0}};
    CHECK(zeros(null, &trivial).empty());
    CHECK(trivial);
}

TEST_CASE("reciprocal fit has no finite zeros") {
    CHECK(zeros(reciprocal_rational()).empty());
}

TEST_CASE("validation rejects broken invariants") {
    BarycentricRational dup{{1.0, 1.0}, {1.0, 2.0}, {1.0, 1.0}};
    CHECK_THROWS_AS(dup.validate(), invalid_input);
    BarycentricRational zero_w{{1.0, -1.0}, {1.0, 2.0}, {0.0, 0.0}};
    CHECK_THROWS_AS(zero_w.validate(), invalid_input);
    CHECK_THROWS_AS(poles_and_residues(zero_w), invalid_input);
    BarycentricRational mism{{1.0, -1.0}, {1.0}, {1.0, 1.0}};
    CHECK_THROWS_AS(mism.validate(), invalid_input);
}

TEST_CASE("pencil poles match companion-matrix roots for small m") {
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> U(-2.0, 2.0);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t m = 2 + static_cast<std::size_t>(trial % 3);
        BarycentricRational r;
        for (std::size_t j = 0; j < m; ++j) {
            cplx z;
            do {
                z = {U(rng), U(rng)};
            } while (std::any_of(r.support.begin(), r.support.end(),
                                 [&](cplx s) { return std::abs(s - z) < 0.1; }));
            r.support.push_back(z);
            r.values.push_back({U(rng), U(rng)});
            r.weights.push_back({U(rng), U(rng)});
        }
        PoleReport rep = poles_and_residues(r, 1e9);
        std::vector<cplx> brute = companion_roots(denominator_coeffs(r));
        CHECK(set_distance(rep.poles, brute) <= 1e-8);
    }
}

TEST_CASE("residues agree with a contour-free limit check") {
    // For r = 1/z the residue at 0 is 1.
    PoleReport rep = poles_and_residues(reciprocal_rational());
    REQUIRE(rep.residues.size() == 1);
    CHECK(std::abs(rep.residues[0] - cplx(1.0)) <= 1e-12);
}

TEST_CASE("pole consistency: evaluation blows up approaching a pole") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    BarycentricRational r;
    for (int j = 0; j < 4; ++j) {
        r.support.push_back({double(j), double(j % 2)});
        r.values.push_back({U(rng), U(rng)});
        r.weights.push_back({U(rng), U(rng)});
    }
    std::vector<double> mags;
    for (const cplx& f : r.values) mags.push_back(std::abs(f));
    std::nth_element(mags.begin(), mags.begin() + mags.size() / 2, mags.end());
    const double med = mags[mags.size() / 2];

    PoleReport rep = poles_and_residues(r);
    REQUIRE(rep.poles.size() <= r.size() - 1);
    const cplx u = std::polar(1.0, 0.37);
    for (std::size_t k = 0; k < rep.poles.size(); ++k) {
        if (rep.offscale_mask[k]) continue;
        if (std::abs(rep.residues[k]) < 1e-10) continue;
        const cplx v = evaluate(r, rep.poles[k] + 1e-6 * u);
        CHECK(std::abs(v) > 1e3 * med);
        // Denominator-root check from the pole report contract.
        double dmin = 1e300;
        for (const cplx& s : r.support)
            dmin = std::min(dmin, std::abs(rep.poles[k] - s));
        cplx den = 0.0;
        for (std::size_t j = 0; j < r.size(); ++j)
            den += r.weights[j] / (rep.poles[k] - r.support[j]);
        CHECK(std::abs(den) * dmin <= 1e-8);
    }
}

TEST_CASE("degree bookkeeping and support scale") {
    BarycentricRational r = identity_rational();
    CHECK(r.degree() == 1);
    CHECK(r.size() == 2);
    CHECK(r.support_scale() == doctest::Approx(2.0));
}
