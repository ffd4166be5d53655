#include "sfn/json_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>

namespace sfn {

using nlohmann::json;

namespace {

json cx(const cplx& z) { return json::array({z.real(), z.imag()}); }

cplx cx_from(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw invalid_input("complex value must be a [re, im] pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

json cx_list(const std::vector<cplx>& v) {
    json a = json::array();
    for (const cplx& z : v) a.push_back(cx(z));
    return a;
}

std::vector<cplx> cx_list_from(const json& j) {
    std::vector<cplx> v;
    for (const auto& e : j) v.push_back(cx_from(e));
    return v;
}

}  // namespace

json to_json(const BarycentricRational& r) {
    return {{"support", cx_list(r.support)},
            {"values", cx_list(r.values)},
            {"weights", cx_list(r.weights)}};
}

BarycentricRational rational_from_json(const json& j) {
    BarycentricRational r;
    r.support = cx_list_from(j.at("support"));
    r.values = cx_list_from(j.at("values"));
    r.weights = cx_list_from(j.at("weights"));
    r.validate();
    return r;
}

json to_json(const SampleSet& s) {
    return {{"curve", s.curve_id},
            {"Z", cx_list(s.Z)},
            {"F", cx_list(s.F)},
            {"clustering", s.clustering},
            {"dropped", s.dropped_count}};
}

SampleSet samples_from_json(const json& j) {
    SampleSet s;
    s.curve_id = j.at("curve").get<std::string>();
    s.Z = cx_list_from(j.at("Z"));
    s.F = cx_list_from(j.at("F"));
    s.clustering = j.value("clustering", "");
    s.dropped_count = j.value("dropped", 0);
    if (s.Z.size() != s.F.size())
        throw invalid_input("sample set Z/F length mismatch");
    return s;
}

json to_json(const FitConfig& c) {
    return {{"rel_tol", c.rel_tol},
            {"max_degree", c.max_degree},
            {"cleanup_residue_tol", c.cleanup_residue_tol},
            {"mode", to_string(c.mode)}};
}

FitConfig fit_config_from_json(const json& j) {
    FitConfig c;
    c.rel_tol = j.value("rel_tol", c.rel_tol);
    c.max_degree = j.value("max_degree", c.max_degree);
    c.cleanup_residue_tol = j.value("cleanup_residue_tol", c.cleanup_residue_tol);
    if (j.contains("mode")) c.mode = fit_mode_from_string(j.at("mode"));
    c.validate();
    return c;
}

json to_json(const FitReport& r) {
    return {{"iterations", r.iterations},
            {"final_rel_error", r.final_rel_error},
            {"converged", r.converged},
            {"cleaned_pole_count", r.cleaned_pole_count}};
}

FitReport fit_report_from_json(const json& j) {
    FitReport r;
    r.iterations = j.at("iterations").get<int>();
    r.final_rel_error = j.at("final_rel_error").get<double>();
    r.converged = j.at("converged").get<bool>();
    r.cleaned_pole_count = j.at("cleaned_pole_count").get<int>();
    return r;
}

json to_json(const SchwarzApprox& s) {
    json j = to_json(s.rat);
    j["curve"] = s.curve_id;
    j["tol"] = s.tol_used;
    j["report"] = to_json(s.fit);
    return j;
}

SchwarzApprox schwarz_from_json(const json& j) {
    SchwarzApprox s;
    s.rat = rational_from_json(j);
    s.curve_id = j.value("curve", "");
    s.tol_used = j.value("tol", 0.0);
    if (j.contains("report")) s.fit = fit_report_from_json(j.at("report"));
    return s;
}

json to_json(const FieldGrid& g) {
    return {{"grid",
             {{"x0", g.spec.x0},
              {"x1", g.spec.x1},
              {"y0", g.spec.y0},
              {"y1", g.spec.y1},
              {"nx", g.spec.nx},
              {"ny", g.spec.ny}}},
            {"levels", {g.level_dark, g.level_light}},
            {"metric", to_string(g.metric)},
            {"provenance", g.provenance},
            // Pole cells carry +inf, which JSON numbers cannot express.
            {"values",
             [&] {
                 json a = json::array();
                 for (double v : g.values)
                     if (std::isfinite(v))
                         a.push_back(v);
                     else
                         a.push_back("inf");
                 return a;
             }()},
            {"labels",
             [&] {
                 json a = json::array();
                 for (CellLabel l : g.labels) a.push_back(to_string(l));
                 return a;
             }()},
            {"poles", cx_list(g.poles)},
            {"curve_samples", cx_list(g.curve_samples)}};
}

FieldGrid field_from_json(const json& j) {
    FieldGrid g;
    const json& gs = j.at("grid");
    g.spec = {gs.at("x0"), gs.at("x1"), gs.at("y0"),
              gs.at("y1"), gs.at("nx"), gs.at("ny")};
    g.level_dark = j.at("levels")[0];
    g.level_light = j.at("levels")[1];
    g.metric = j.at("metric") == "involution" ? FieldMetric::involution
                                              : FieldMetric::branch_vs_oracle;
    g.provenance = j.value("provenance", "");
    for (const auto& e : j.at("values"))
        g.values.push_back(e.is_string()
                               ? std::numeric_limits<double>::infinity()
                               : e.get<double>());
    for (const auto& e : j.at("labels")) {
        const std::string s = e.get<std::string>();
        g.labels.push_back(s == "dark"    ? CellLabel::dark
                           : s == "light" ? CellLabel::light
                           : s == "pole"  ? CellLabel::pole
                                          : CellLabel::white);
    }
    g.poles = cx_list_from(j.at("poles"));
    g.curve_samples = cx_list_from(j.at("curve_samples"));
    return g;
}

void export_field_json(const FieldGrid& g, std::ostream& os) {
    os << to_json(g).dump(2) << '\n';
}

json load_json_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open for reading: " + path);
    json j;
    is >> j;
    return j;
}

void save_json_file(const json& j, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    os << j.dump(2) << '\n';
    os.flush();
    if (!os) throw std::runtime_error("write failed: " + path);
}

}  // namespace sfn
