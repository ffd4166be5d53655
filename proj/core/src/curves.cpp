#include "sfn/curves.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sfn {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// Pin the parametric endpoints to shared constants so adjacent pieces
// meet bitwise-exactly at junctions.
Piece pinned(std::function<cplx(double)> fn, cplx z0, cplx z1) {
    Piece p;
    p.map = [fn = std::move(fn), z0, z1](double t) {
        if (t == 0.0) return z0;
        if (t == 1.0) return z1;
        return fn(t);
    };
    return p;
}

Piece segment(cplx z0, cplx z1) {
    return pinned([z0, z1](double t) { return z0 + t * (z1 - z0); }, z0, z1);
}

}  // namespace

std::string to_string(CurveKind k) {
    switch (k) {
        case CurveKind::circle: return "circle";
        case CurveKind::rho_ellipse: return "ellipse";
        case CurveKind::half_ellipse: return "halfellipse";
        case CurveKind::polar_squiggle: return "squiggle";
        case CurveKind::superellipse6: return "superellipse6";
        case CurveKind::inlet: return "inlet";
        case CurveKind::semicircle_pair: return "semis";
        case CurveKind::lshape: return "lshape";
    }
    return "?";
}

Curve make_curve(CurveKind kind, double rho) {
    Curve c;
    c.kind = kind;
    c.id = to_string(kind);
    switch (kind) {
        case CurveKind::circle: {
            c.closed = true;
            Piece p;
            p.map = [](double t) { return std::polar(1.0, two_pi * t); };
            c.pieces.push_back(std::move(p));
            break;
        }
        case CurveKind::rho_ellipse:
        case CurveKind::half_ellipse: {
            if (!(rho > 1.0)) throw invalid_input("ellipse needs rho > 1");
            c.rho = rho;
            c.id = (kind == CurveKind::rho_ellipse ? "ellipse:rho=" : "halfellipse:rho=") +
                   std::to_string(rho);
            Piece p;
            if (kind == CurveKind::rho_ellipse) {
                c.closed = true;
                p.map = [rho](double t) {
                    const cplx w = std::polar(rho, two_pi * t);
                    return 0.5 * (w + 1.0 / w);
                };
            } else {
                // Upper half of the ellipse, an open analytic arc.
                p.map = [rho](double t) {
                    const cplx w = std::polar(rho, std::numbers::pi * t);
                    return 0.5 * (w + 1.0 / w);
                };
            }
            c.pieces.push_back(std::move(p));
            break;
        }
        case CurveKind::polar_squiggle: {
            c.closed = true;
            Piece p;
            p.map = [](double t) {
                const double th = two_pi * t;
                return std::polar(1.0 + 0.2 * std::sin(5.0 * th), th);
            };
            c.pieces.push_back(std::move(p));
            break;
        }
        case CurveKind::superellipse6: {
            // x^6 + y^6 = 1 via x = sgn(cos)|cos|^{1/3}, y = sgn(sin)|sin|^{1/3}.
            c.closed = true;
            Piece p;
            p.map = [](double t) {
                const double th = two_pi * t;
                const double cs = std::cos(th), sn = std::sin(th);
                const double x = std::copysign(std::cbrt(std::abs(cs)), cs);
                const double y = std::copysign(std::cbrt(std::abs(sn)), sn);
                return cplx(x, y);
            };
            c.pieces.push_back(std::move(p));
            break;
        }
        case CurveKind::semicircle_pair: {
            // Right half of the circle centered at +i (2i -> 1+i -> 0)
            // joined to the left half of the circle centered at -i
            // (0 -> -1-i -> -2i).  C^1 but not C^2 at the origin.
            const cplx top(0.0, 2.0), origin(0.0, 0.0), bottom(0.0, -2.0);
            Piece p0 = pinned(
                [](double t) {
                    return cplx(0.0, 1.0) +
                           std::polar(1.0, std::numbers::pi * (0.5 - t));
                },
                top, origin);
            p0.cluster_end = true;
            Piece p1 = pinned(
                [](double t) {
                    return cplx(0.0, -1.0) +
                           std::polar(1.0, std::numbers::pi * (0.5 + t));
                },
                origin, bottom);
            p1.cluster_start = true;
            c.pieces.push_back(std::move(p0));
            c.pieces.push_back(std::move(p1));
            c.corner_params = {1.0};
            break;
        }
        case CurveKind::lshape: {
            c.closed = true;
            const std::vector<cplx> v = {{0, 0}, {2, 0}, {2, 1},
                                         {1, 1}, {1, 2}, {0, 2}};
            for (std::size_t i = 0; i < v.size(); ++i) {
                Piece p = segment(v[i], v[(i + 1) % v.size()]);
                p.cluster_start = p.cluster_end = true;
                c.pieces.push_back(std::move(p));
                c.corner_params.push_back(static_cast<double>(i));
            }
            break;
        }
        case CurveKind::inlet: {
            // Unit circle with a rectangular slot of width 0.1 cut 0.7
            // deep along the positive real axis; one Jordan curve.
            c.closed = true;
            const double hw = 0.05;
            const double alpha = std::asin(hw);
            const cplx mouth_top(std::cos(alpha), hw);
            const cplx mouth_bot(std::cos(alpha), -hw);
            const cplx tip_top(0.3, hw), tip_bot(0.3, -hw);
            Piece arc = pinned(
                [alpha](double t) {
                    return std::polar(1.0, alpha + t * (two_pi - 2.0 * alpha));
                },
                mouth_top, mouth_bot);
            arc.cluster_start = arc.cluster_end = true;
            Piece bot = segment(mouth_bot, tip_bot);
            Piece tip = segment(tip_bot, tip_top);
            Piece top = segment(tip_top, mouth_top);
            bot.cluster_start = bot.cluster_end = true;
            tip.cluster_start = tip.cluster_end = true;
            top.cluster_start = top.cluster_end = true;
            c.pieces.push_back(std::move(arc));
            c.pieces.push_back(std::move(bot));
            c.pieces.push_back(std::move(tip));
            c.pieces.push_back(std::move(top));
            c.corner_params = {0.0, 1.0, 2.0, 3.0};
            break;
        }
    }
    return c;
}

Curve parse_curve_spec(const std::string& spec) {
    auto rho_of = [](const std::string& s, const std::string& prefix) {
        auto rest = s.substr(prefix.size());
        if (rest.empty()) return 2.0;
        if (rest.rfind(":rho=", 0) != 0)
            throw invalid_input("malformed curve spec: " + s);
        return std::stod(rest.substr(5));
    };
    if (spec == "circle") return make_curve(CurveKind::circle);
    if (spec.rfind("ellipse", 0) == 0)
        return make_curve(CurveKind::rho_ellipse, rho_of(spec, "ellipse"));
    if (spec.rfind("halfellipse", 0) == 0)
        return make_curve(CurveKind::half_ellipse, rho_of(spec, "halfellipse"));
    if (spec == "squiggle") return make_curve(CurveKind::polar_squiggle);
    if (spec == "superellipse6" || spec == "superellipse")
        return make_curve(CurveKind::superellipse6);
    if (spec == "inlet") return make_curve(CurveKind::inlet);
    if (spec == "semis" || spec == "semicircle_pair")
        return make_curve(CurveKind::semicircle_pair);
    if (spec == "lshape") return make_curve(CurveKind::lshape);
    throw invalid_input("unknown curve spec: " + spec);
}

cplx point_at(const Curve& c, std::size_t piece, double t) {
    if (piece >= c.pieces.size()) throw invalid_input("piece index out of range");
    if (!(t >= 0.0 && t <= 1.0)) throw invalid_input("parameter t outside [0,1]");
    return c.pieces[piece].map(t);
}

namespace {

// Endpoint inclusion for a piece: corners are owned by neither side,
// shared junctions by the piece that starts there.
void endpoint_inclusion(const Curve& c, std::size_t i, bool& inc_start,
                        bool& inc_end) {
    const Piece& p = c.pieces[i];
    const bool last = i + 1 == c.pieces.size();
    inc_start = !p.cluster_start;
    inc_end = !p.cluster_end && last && !c.closed;
}

void finalize(const Curve& c, SampleSet& out) {
    out.curve_id = c.id;
    out.F.resize(out.Z.size());
    for (std::size_t i = 0; i < out.Z.size(); ++i) out.F[i] = std::conj(out.Z[i]);
    // Exact duplicates across pieces would hand AAA conflicting data.
    std::vector<cplx> seen;
    std::vector<cplx> z2, f2;
    for (std::size_t i = 0; i < out.Z.size(); ++i) {
        bool dup = false;
        for (const cplx& s : seen)
            if (s == out.Z[i]) {
                dup = true;
                break;
            }
        if (dup) {
            ++out.dropped_count;
            continue;
        }
        seen.push_back(out.Z[i]);
        z2.push_back(out.Z[i]);
        f2.push_back(out.F[i]);
    }
    out.Z = std::move(z2);
    out.F = std::move(f2);
}

}  // namespace

SampleSet sample_uniform(const Curve& c, int n) {
    if (n < 2) throw invalid_input("n_per_piece must be >= 2");
    SampleSet out;
    out.clustering = "uniform";
    for (std::size_t i = 0; i < c.pieces.size(); ++i) {
        bool inc_s, inc_e;
        endpoint_inclusion(c, i, inc_s, inc_e);
        for (int k = 0; k < n; ++k) {
            double t;
            if (inc_s && inc_e)
                t = static_cast<double>(k) / (n - 1);
            else if (inc_s)
                t = static_cast<double>(k) / n;
            else if (inc_e)
                t = static_cast<double>(k + 1) / n;
            else
                t = static_cast<double>(k + 1) / (n + 1);
            out.Z.push_back(c.pieces[i].map(t));
        }
    }
    finalize(c, out);
    return out;
}

namespace {

// Root-exponential offsets toward one end: exp(-sigma*(sqrt(K)-sqrt(k))).
std::vector<double> cluster_offsets(int K, double sigma) {
    std::vector<double> d(K);
    const double sK = std::sqrt(static_cast<double>(K));
    for (int k = 1; k <= K; ++k)
        d[k - 1] = std::exp(-sigma * (sK - std::sqrt(static_cast<double>(k))));
    return d;
}

}  // namespace

SampleSet sample_clustered(const Curve& c, int n, double sigma) {
    if (n < 4) throw invalid_input("n_per_piece must be >= 4 for clustering");
    if (!(sigma > 0.0)) throw invalid_input("sigma must be positive");
    // Offsets closer to a corner than this (in parameter) are numerical
    // noise at the corner scale; coalesce them and refill the interior.
    const double underflow = 1e-14;

    SampleSet out;
    out.clustering = "exp:sigma=" + std::to_string(sigma);
    for (std::size_t i = 0; i < c.pieces.size(); ++i) {
        const Piece& p = c.pieces[i];
        bool inc_s, inc_e;
        endpoint_inclusion(c, i, inc_s, inc_e);

        std::vector<double> ts;
        if (p.cluster_start && p.cluster_end) {
            const int Kl = n - n / 2, Kr = n / 2;
            for (double d : cluster_offsets(Kl, sigma)) ts.push_back(d / 2.0);
            for (double d : cluster_offsets(Kr, sigma)) ts.push_back(1.0 - d / 2.0);
        } else if (p.cluster_start || p.cluster_end) {
            std::vector<double> d = cluster_offsets(n, sigma);
            for (double x : d)
                ts.push_back(p.cluster_start ? x : 1.0 - x);
        } else {
            for (int k = 0; k < n; ++k) {
                double t;
                if (inc_s && inc_e)
                    t = static_cast<double>(k) / (n - 1);
                else if (inc_s)
                    t = static_cast<double>(k) / n;
                else if (inc_e)
                    t = static_cast<double>(k + 1) / n;
                else
                    t = static_cast<double>(k + 1) / (n + 1);
                ts.push_back(t);
            }
        }

        // Filter endpoints that the piece does not own, and coalesced
        // corner offsets.
        std::sort(ts.begin(), ts.end());
        std::vector<double> kept;
        for (double t : ts) {
            if (t <= 0.0 && !inc_s) continue;
            if (t >= 1.0 && !inc_e) continue;
            if (p.cluster_start && t > 0.0 && t < underflow) {
                ++out.dropped_count;
                continue;
            }
            if (p.cluster_end && t < 1.0 && 1.0 - t < underflow) {
                ++out.dropped_count;
                continue;
            }
            if (!kept.empty() && kept.back() == t) {
                ++out.dropped_count;
                continue;
            }
            kept.push_back(t);
        }
        // Refill the quota by halving the largest interior gap.
        while (static_cast<int>(kept.size()) < n && kept.size() >= 2) {
            std::size_t g = 0;
            for (std::size_t a = 0; a + 1 < kept.size(); ++a)
                if (kept[a + 1] - kept[a] > kept[g + 1] - kept[g]) g = a;
            kept.insert(kept.begin() + g + 1, 0.5 * (kept[g] + kept[g + 1]));
        }
        for (double t : kept) out.Z.push_back(p.map(t));
    }
    finalize(c, out);
    return out;
}

}  // namespace sfn
