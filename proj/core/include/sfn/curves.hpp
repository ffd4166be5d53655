#ifndef SFN_CURVES_HPP
#define SFN_CURVES_HPP

#include <functional>
#include <string>
#include <vector>

#include "sfn/ratcore.hpp"

namespace sfn {

enum class CurveKind {
    circle,
    rho_ellipse,
    half_ellipse,
    polar_squiggle,
    superellipse6,
    inlet,
    semicircle_pair,
    lshape,
};

std::string to_string(CurveKind k);

/// One smooth parametric segment t in [0,1] -> C.
struct Piece {
    std::function<cplx(double)> map;
    bool cluster_start = false;  // endpoint adjoins a corner
    bool cluster_end = false;
};

/**
 * Boundary curve as an ordered list of smooth pieces with corner
 * metadata.  Adjacent pieces share endpoints exactly; corner_params
 * lists the junction parameters (global parameter u = piece + t) where
 * smoothness drops, and is empty for analytic kinds.
 */
struct Curve {
    CurveKind kind;
    double rho = 0.0;  // rho_ellipse / half_ellipse parameter
    std::vector<Piece> pieces;
    std::vector<double> corner_params;
    bool closed = false;
    std::string id;  // e.g. "ellipse:rho=2"

    std::size_t piece_count() const { return pieces.size(); }
};

/// Factory for the catalog kinds.  rho is only consulted for the
/// ellipse kinds (must be > 1 there).
Curve make_curve(CurveKind kind, double rho = 2.0);

/// Parse a CLI-facing spec string: "circle", "ellipse:rho=2",
/// "halfellipse:rho=2", "squiggle", "superellipse6", "inlet",
/// "semis", "lshape".  Throws invalid_input on unknown specs.
Curve parse_curve_spec(const std::string& spec);

struct SampleSet {
    std::vector<cplx> Z;
    std::vector<cplx> F;  // = conj(Z) for Schwarz use
    std::string curve_id;
    std::string clustering;  // descriptor of the sampling law
    int dropped_count = 0;   // points coalesced near corners
};

cplx point_at(const Curve& c, std::size_t piece, double t);

/// Equispaced samples per piece, open at corner junctions so no abscissa
/// carries conflicting boundary data.  F = conj(Z).
SampleSet sample_uniform(const Curve& c, int n_per_piece);

/// Root-exponentially clustered samples: offsets from each clustered
/// endpoint follow exp(-sigma*(sqrt(K) - sqrt(k))), K points per
/// clustered end.  Offsets that underflow the corner scale are dropped
/// and the quota refilled in the interior, keeping n per piece.
SampleSet sample_clustered(const Curve& c, int n_per_piece,
                           double sigma = 4.0);

}  // namespace sfn

#endif
