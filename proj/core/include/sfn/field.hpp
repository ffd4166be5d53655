#ifndef SFN_FIELD_HPP
#define SFN_FIELD_HPP

#include <optional>
#include <string>
#include <vector>

#include "sfn/schwarz.hpp"

namespace sfn {

enum class FieldMetric { involution, branch_vs_oracle };
enum class CellLabel : unsigned char { dark, light, white, pole };

std::string to_string(FieldMetric m);
std::string to_string(CellLabel l);

struct GridSpec {
    double x0, x1, y0, y1;
    int nx, ny;
};

/// Rectangular grid of per-point error values with threshold labels.
/// Index layout: iy * nx + ix; node (ix, iy) sits at the inclusive
/// linspace point of its axis.
struct FieldGrid {
    GridSpec spec;
    double level_dark;
    double level_light;
    FieldMetric metric;
    std::string provenance;  // curve id of the SchwarzApprox
    std::vector<double> values;
    std::vector<CellLabel> labels;
    std::vector<cplx> poles;          // on-scale poles, for plots
    std::vector<cplx> curve_samples;  // fit samples, for plots

    double x_at(int ix) const;
    double y_at(int iy) const;
    std::size_t index(int ix, int iy) const {
        return static_cast<std::size_t>(iy) * spec.nx + ix;
    }
};

/// Evaluate the chosen error metric over the grid.  branch_vs_oracle
/// needs an ellipse oracle; passing none is invalid input.  Every
/// point is computed independently, so output is deterministic.
FieldGrid evaluate_field(const SchwarzApprox& s, FieldMetric metric,
                         const GridSpec& spec,
                         double level_dark, double level_light,
                         const EllipseOracle* oracle = nullptr);

enum class FieldFormat { csv, json, svg };

/// csv: header `x,y,value,label`, one row per grid point.
/// json: full grid document, value-lossless.
/// svg: filled squares per non-white cell, circles for poles, dots for
/// curve samples.
void export_field(const FieldGrid& g, FieldFormat format,
                  const std::string& path);

}  // namespace sfn

#endif
