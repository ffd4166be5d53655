#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <set>

#include <sfn/curves.hpp>

using namespace sfn;

namespace {

bool all_distinct(const std::vector<cplx>& Z) {
    std::set<std::pair<double, double>> seen;
    for (const cplx& z : Z)
        if (!seen.insert({z.real(), z.imag()}).second) return false;
    return true;
}

double min_abs(const std::vector<cplx>& Z) {
    double m = 1e300;
    for (const cplx& z : Z) m = std::min(m, std::abs(z));
    return m;
}

}  // namespace

TEST_CASE("point_at: catalog spot values") {
    Curve e = make_curve(CurveKind::rho_ellipse, 2.0);
    CHECK(std::abs(point_at(e, 0, 0.0) - cplx(1.25)) <= 1e-15);
    CHECK(std::abs(point_at(e, 0, 0.5) - cplx(-1.25)) <= 1e-15);

    Curve sq = make_curve(CurveKind::polar_squiggle);
    const cplx expect = 1.2 * std::polar(1.0, std::numbers::pi / 10);
    CHECK(std::abs(point_at(sq, 0, 1.0 / 20) - expect) <= 1e-14);

    Curve se = make_curve(CurveKind::superellipse6);
    CHECK(std::abs(point_at(se, 0, 0.0) - cplx(1.0)) <= 1e-15);

    CHECK_THROWS_AS(point_at(e, 0, 1.5), invalid_input);
    CHECK_THROWS_AS(point_at(e, 3, 0.5), invalid_input);
}

TEST_CASE("rho-ellipse points satisfy the ellipse equation") {
    const double rho = 2.0;
    const double a1 = 0.5 * (rho + 1.0 / rho), b1 = 0.5 * (rho - 1.0 / rho);
    Curve e = make_curve(CurveKind::rho_ellipse, rho);
    for (int k = 0; k < 97; ++k) {
        const cplx z = point_at(e, 0, k / 97.0);
        const double lhs = std::pow(z.real() / a1, 2) + std::pow(z.imag() / b1, 2);
        CHECK(std::abs(lhs - 1.0) <= 1e-14);
    }
}

TEST_CASE("uniform sampling: circle n=4 gives the fourth roots of unity") {
    SampleSet s = sample_uniform(make_curve(CurveKind::circle), 4);
    REQUIRE(s.Z.size() == 4);
    CHECK(std::abs(s.Z[0] - cplx(1, 0)) <= 1e-15);
    CHECK(std::abs(s.Z[1] - cplx(0, 1)) <= 1e-15);
    CHECK(std::abs(s.Z[2] - cplx(-1, 0)) <= 1e-15);
    CHECK(std::abs(s.Z[3] - cplx(0, -1)) <= 1e-15);
    for (std::size_t k = 0; k < 4; ++k)
        CHECK(s.F[k] == std::conj(s.Z[k]));
}

TEST_CASE("uniform sampling: ellipse hits the real-axis extremes") {
    SampleSet s = sample_uniform(make_curve(CurveKind::rho_ellipse, 2.0), 100);
    REQUIRE(s.Z.size() == 100);
    CHECK(all_distinct(s.Z));
    auto near = [&](cplx target) {
        return std::count_if(s.Z.begin(), s.Z.end(), [&](cplx z) {
            return std::abs(z - target) <= 1e-14;
        });
    };
    CHECK(near(cplx(1.25)) == 1);
    CHECK(near(cplx(-1.25)) == 1);
    double zmax = 0.0;
    for (const cplx& z : s.Z) zmax = std::max(zmax, std::abs(z));
    CHECK(zmax == doctest::Approx(1.25));
}

TEST_CASE("uniform sampling: lshape 300 per side gives 1800 samples") {
    SampleSet s = sample_uniform(make_curve(CurveKind::lshape), 300);
    CHECK(s.Z.size() == 1800);
    CHECK(all_distinct(s.Z));
    CHECK(s.dropped_count == 0);
}

TEST_CASE("every sample set carries F = conj(Z) exactly") {
    for (CurveKind k :
         {CurveKind::circle, CurveKind::half_ellipse, CurveKind::inlet,
          CurveKind::semicircle_pair, CurveKind::lshape}) {
        SampleSet s = sample_uniform(make_curve(k), 25);
        REQUIRE(s.Z.size() == s.F.size());
        for (std::size_t i = 0; i < s.Z.size(); ++i)
            CHECK(s.F[i] == std::conj(s.Z[i]));
    }
}

TEST_CASE("clustered offsets increase strictly toward the interior") {
    Curve c = make_curve(CurveKind::semicircle_pair);
    SampleSet s = sample_clustered(c, 16);
    // First piece runs 2i -> 0 with clustering at the far (corner) end;
    // distances from the corner must be strictly ordered along it.
    std::vector<double> d;
    for (std::size_t k = 0; k < 16 && k < s.Z.size(); ++k)
        d.push_back(std::abs(s.Z[k]));
    CHECK(std::is_sorted(d.rbegin(), d.rend()));
}

TEST_CASE("semicircle pair clustering reaches the corner scale") {
    SampleSet s = sample_clustered(make_curve(CurveKind::semicircle_pair), 400);
    const double m = min_abs(s.Z);
    CHECK(m < 1e-6);
    CHECK(m > 1e-14);
    CHECK(all_distinct(s.Z));
}

TEST_CASE("lshape clustering keeps 300 distinct samples per side") {
    SampleSet s = sample_clustered(make_curve(CurveKind::lshape), 300);
    CHECK(s.Z.size() == 1800);
    CHECK(all_distinct(s.Z));
    // Drops happen at the corner scale but the quota is refilled.
    CHECK(s.dropped_count > 0);
}

TEST_CASE("adjacent pieces share endpoints bitwise") {
    for (CurveKind k :
         {CurveKind::inlet, CurveKind::semicircle_pair, CurveKind::lshape}) {
        Curve c = make_curve(k);
        const std::size_t n = c.piece_count();
        for (std::size_t p = 0; p + 1 < n; ++p) {
            const cplx a = c.pieces[p].map(1.0);
            const cplx b = c.pieces[p + 1].map(0.0);
            CHECK(a.real() == b.real());
            CHECK(a.imag() == b.imag());
        }
        if (c.closed) {
            const cplx a = c.pieces[n - 1].map(1.0);
            const cplx b = c.pieces[0].map(0.0);
            CHECK(a.real() == b.real());
            CHECK(a.imag() == b.imag());
        }
    }
}

TEST_CASE("corner metadata: cornered kinds list junctions, analytic kinds none") {
    CHECK(make_curve(CurveKind::circle).corner_params.empty());
    CHECK(make_curve(CurveKind::rho_ellipse).corner_params.empty());
    CHECK(make_curve(CurveKind::polar_squiggle).corner_params.empty());
    CHECK(make_curve(CurveKind::superellipse6).corner_params.empty());
    CHECK(make_curve(CurveKind::lshape).corner_params.size() == 6);
    CHECK(make_curve(CurveKind::semicircle_pair).corner_params.size() == 1);
    CHECK_FALSE(make_curve(CurveKind::inlet).corner_params.empty());
}

TEST_CASE("semicircle pair is C1 at the origin") {
    Curve c = make_curve(CurveKind::semicircle_pair);
    const double h = 1e-7;
    const cplx t1 = (c.pieces[0].map(1.0) - c.pieces[0].map(1.0 - h)) / h;
    const cplx t2 = (c.pieces[1].map(h) - c.pieces[1].map(0.0)) / h;
    const cplx u1 = t1 / std::abs(t1), u2 = t2 / std::abs(t2);
    CHECK(std::abs(u1 - u2) <= 1e-6);  // finite-difference limited
    // Exact tangents from the circle parameterizations agree to 1e-12:
    // both arcs leave the origin horizontally.
    CHECK(std::abs(u1.imag()) <= 1e-6);
}

TEST_CASE("curve spec strings parse and reject") {
    CHECK(parse_curve_spec("circle").kind == CurveKind::circle);
    CHECK(parse_curve_spec("ellipse:rho=2").kind == CurveKind::rho_ellipse);
    CHECK(parse_curve_spec("ellipse:rho=3").rho == doctest::Approx(3.0));
    CHECK(parse_curve_spec("halfellipse:rho=2").kind == CurveKind::half_ellipse);
    CHECK(parse_curve_spec("squiggle").kind == CurveKind::polar_squiggle);
    CHECK(parse_curve_spec("superellipse6").kind == CurveKind::superellipse6);
    CHECK(parse_curve_spec("inlet").kind == CurveKind::inlet);
    CHECK(parse_curve_spec("semis").kind == CurveKind::semicircle_pair);
    CHECK(parse_curve_spec("lshape").kind == CurveKind::lshape);
    CHECK_THROWS_AS(parse_curve_spec("pentagon"), invalid_input);
    CHECK_THROWS_AS(parse_curve_spec("ellipse:rho=0.5"), invalid_input);
}

TEST_CASE("sampling preconditions") {
    Curve c = make_curve(CurveKind::circle);
    CHECK_THROWS_AS(sample_uniform(c, 1), invalid_input);
    CHECK_THROWS_AS(sample_clustered(make_curve(CurveKind::lshape), 3),
                    invalid_input);
}
