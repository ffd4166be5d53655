#include "sfn/field.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace sfn {

std::string to_string(FieldMetric m) {
    return m == FieldMetric::involution ? "involution" : "branch_vs_oracle";
}

std::string to_string(CellLabel l) {
    switch (l) {
        case CellLabel::dark: return "dark";
        case CellLabel::light: return "light";
        case CellLabel::white: return "white";
        case CellLabel::pole: return "pole";
    }
    return "?";
}

double FieldGrid::x_at(int ix) const {
    if (spec.nx == 1) return spec.x0;
    return spec.x0 + (spec.x1 - spec.x0) * ix / (spec.nx - 1);
}

double FieldGrid::y_at(int iy) const {
    if (spec.ny == 1) return spec.y0;
    return spec.y0 + (spec.y1 - spec.y0) * iy / (spec.ny - 1);
}

FieldGrid evaluate_field(const SchwarzApprox& s, FieldMetric metric,
                         const GridSpec& spec, double level_dark,
                         double level_light, const EllipseOracle* oracle) {
    if (spec.nx < 1 || spec.ny < 1)
        throw invalid_input("grid must have nx, ny >= 1");
    if (!(level_dark > 0.0 && level_dark < level_light))
        throw invalid_input("levels must satisfy 0 < dark < light");
    if (metric == FieldMetric::branch_vs_oracle && oracle == nullptr)
        throw invalid_input("branch_vs_oracle metric needs an ellipse oracle");

    FieldGrid g;
    g.spec = spec;
    g.level_dark = level_dark;
    g.level_light = level_light;
    g.metric = metric;
    g.provenance = s.curve_id;
    g.values.resize(static_cast<std::size_t>(spec.nx) * spec.ny);
    g.labels.resize(g.values.size());
    g.curve_samples = s.rat.support;

    PoleReport pr = poles_and_residues(s.rat);
    for (std::size_t i = 0; i < pr.poles.size(); ++i)
        if (!pr.offscale_mask[i]) g.poles.push_back(pr.poles[i]);

    for (int iy = 0; iy < spec.ny; ++iy) {
        for (int ix = 0; ix < spec.nx; ++ix) {
            const cplx z(g.x_at(ix), g.y_at(iy));
            const double v = metric == FieldMetric::involution
                                 ? involution_error(s, z)
                                 : branch_error(*oracle, s, z);
            const std::size_t idx = g.index(ix, iy);
            g.values[idx] = v;
            if (!std::isfinite(v))
                g.labels[idx] = CellLabel::pole;
            else if (v <= level_dark)
                g.labels[idx] = CellLabel::dark;
            else if (v <= level_light)
                g.labels[idx] = CellLabel::light;
            else
                g.labels[idx] = CellLabel::white;
        }
    }
    return g;
}

namespace {

void export_csv(const FieldGrid& g, std::ostream& os) {
    os << "x,y,value,label\n";
    os.precision(17);
    for (int iy = 0; iy < g.spec.ny; ++iy)
        for (int ix = 0; ix < g.spec.nx; ++ix) {
            const std::size_t idx = g.index(ix, iy);
            os << g.x_at(ix) << ',' << g.y_at(iy) << ',' << g.values[idx]
               << ',' << to_string(g.labels[idx]) << '\n';
        }
}

void export_svg(const FieldGrid& g, std::ostream& os) {
    const double w = 640.0;
    const double sx = w / (g.spec.x1 - g.spec.x0);
    const double h = (g.spec.y1 - g.spec.y0) * sx;
    auto px = [&](double x) { return (x - g.spec.x0) * sx; };
    auto py = [&](double y) { return h - (y - g.spec.y0) * sx; };
    const double cw = g.spec.nx > 1 ? w / (g.spec.nx - 1) : w;
    const double ch = g.spec.ny > 1 ? h / (g.spec.ny - 1) : h;

    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
       << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << ' ' << h
       << "\">\n";
    os << "<rect width=\"" << w << "\" height=\"" << h
       << "\" fill=\"white\"/>\n";
    const bool blue = g.metric == FieldMetric::branch_vs_oracle;
    const char* dark_fill = blue ? "#1f4e9c" : "#1a7a2e";
    const char* light_fill = blue ? "#9ec3ef" : "#9fdca9";
    for (int iy = 0; iy < g.spec.ny; ++iy)
        for (int ix = 0; ix < g.spec.nx; ++ix) {
            const CellLabel l = g.labels[g.index(ix, iy)];
            if (l == CellLabel::white) continue;
            const char* fill = l == CellLabel::dark    ? dark_fill
                               : l == CellLabel::light ? light_fill
                                                       : "#d08080";
            os << "<rect x=\"" << px(g.x_at(ix)) - cw / 2 << "\" y=\""
               << py(g.y_at(iy)) - ch / 2 << "\" width=\"" << cw
               << "\" height=\"" << ch << "\" fill=\"" << fill << "\"/>\n";
        }
    for (const cplx& p : g.poles) {
        const double x = px(p.real()), y = py(p.imag());
        if (x < 0 || x > w || y < 0 || y > h) continue;
        os << "<circle cx=\"" << x << "\" cy=\"" << y
           << "\" r=\"3\" fill=\"#2040c0\"/>\n";
    }
    for (const cplx& z : g.curve_samples)
        os << "<circle cx=\"" << px(z.real()) << "\" cy=\"" << py(z.imag())
           << "\" r=\"1\" fill=\"black\"/>\n";
    os << "</svg>\n";
}

}  // namespace

void export_field(const FieldGrid& g, FieldFormat format,
                  const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    if (format == FieldFormat::csv) {
        export_csv(g, os);
    } else if (format == FieldFormat::svg) {
        export_svg(g, os);
    } else {
        // JSON export lives in json_io to keep the serializer in one place.
        extern void export_field_json(const FieldGrid&, std::ostream&);
        export_field_json(g, os);
    }
    os.flush();
    if (!os) throw std::runtime_error("write failed: " + path);
}

}  // namespace sfn
