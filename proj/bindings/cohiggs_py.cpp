// Python bindings for the main operations. Structured data crosses the
// boundary as JSON text; the cohiggs package wraps these with dict-level
// helpers.

#include <pybind11/pybind11.h>

#include "cohiggs/errors.hpp"
#include "cohiggs/verify.hpp"

namespace py = pybind11;

namespace {

using namespace cohiggs;

std::string info_json(int k) { return schwarz_info_to_json(schwarz_info(k)).dump(); }

std::string det_json(const std::string& doc_text) {
    InputDocument doc = parse_document(doc_text);
    const auto* phi = std::get_if<CoHiggsField>(&doc);
    if (!phi) throw ParseError("det needs a co-Higgs field document");
    bool is_integrable = true;
    for (Chart c : kAllCharts) is_integrable = is_integrable && integrable(*phi, c);
    DetSection d = determinant(*phi);
    Json out;
    out["integrable"] = is_integrable;
    out["det"] = det_to_json(d);
    try {
        out["image_point"] = image_point_to_json(image_point(d, schwarz_index(*phi)));
    } catch (const Unclassifiable& e) {
        out["image_point"] = nullptr;
        out["unclassifiable"] = e.what();
    }
    return out.dump();
}

std::string canon_json(const std::string& doc_text) {
    InputDocument doc = parse_document(doc_text);
    if (const auto* pair = std::get_if<PairDocument>(&doc))
        return image_point_to_json(canonicalize_qc(pair->q, pair->C)).dump();
    if (const auto* sec = std::get_if<SectionDocument>(&doc)) {
        if (const auto* t = std::get_if<SectionT>(&sec->section)) {
            SectionT c = canonicalize_pm(*t);
            return image_point_to_json(ImageSymTangent{c, sym2_section(c)}).dump();
        }
        if (const auto* tm1 = std::get_if<SectionTm1>(&sec->section)) {
            Json j;
            j["type"] = "pm_tm1";
            j["C"] = section_tm1_to_json(canonicalize_pm(*tm1));
            return j.dump();
        }
        throw ParseError("canon expects a T or T(-1) section, or a (q, C) pair");
    }
    const auto& phi = std::get<CoHiggsField>(doc);
    return image_point_to_json(image_point(determinant(phi), schwarz_index(phi))).dump();
}

bool integrable_from_json(const std::string& doc_text) {
    InputDocument doc = parse_document(doc_text);
    const auto* phi = std::get_if<CoHiggsField>(&doc);
    if (!phi) throw ParseError("integrable needs a co-Higgs field document");
    for (Chart c : kAllCharts)
        if (!integrable(*phi, c)) return false;
    return true;
}

std::string verify_json(const std::string& theorem, int trials, std::uint64_t seed, int jobs) {
    auto t = theorem_from_name(theorem);
    if (!t) throw ParseError("unknown theorem '" + theorem + "'");
    RunOptions opts;
    opts.trials = trials;
    opts.seed = seed;
    opts.jobs = jobs;
    return report_to_json(run_verification(*t, opts)).dump();
}

std::string complete_square_json(const std::string& poly_text) {
    AffinePoly s = poly_from_json(Json::parse(poly_text));
    SquareDecomposition d = complete_square(s);
    Json j;
    j["lambda"] = poly_to_json(d.lambda);
    j["mu"] = poly_to_json(d.mu);
    j["case"] = square_case_name(d.case_tag);
    j["rotated"] = d.rotated;
    j["extended"] = d.extended;
    return j.dump();
}

std::string decompose_json(const std::string& poly_text) {
    AffinePoly s = poly_from_json(Json::parse(poly_text));
    LinearProductDecomposition d = decompose_linear_product(s);
    Json j;
    j["lambda"] = poly_to_json(d.lambda);
    j["mu"] = poly_to_json(d.mu);
    j["mu_prime"] = poly_to_json(d.mu_prime);
    j["extended"] = d.extended;
    return j.dump();
}

}  // namespace

PYBIND11_MODULE(_cohiggs, m) {
    m.doc() = "exact co-Higgs determinant classification on the projective plane";

    m.def("info_json", &info_json, py::arg("k"),
          "Schwarzenberger bundle data as a JSON string (k != 3)");
    m.def("det_json", &det_json, py::arg("document"),
          "determinant triple, structured form and image point of a field document");
    m.def("canon_json", &canon_json, py::arg("document"),
          "canonical form of a section, (q, C) pair or field document");
    m.def("integrable_json", &integrable_from_json, py::arg("document"),
          "integrability of a field document, checked on all three charts");
    m.def("verify_json", &verify_json, py::arg("theorem"), py::arg("trials") = 100,
          py::arg("seed") = 42, py::arg("jobs") = 1,
          "run a theorem verification suite; returns the JSON report");
    m.def("complete_square_json", &complete_square_json, py::arg("poly"),
          "s = lambda^2 + mu decomposition of a degree <= 2 polynomial document");
    m.def("decompose_linear_product_json", &decompose_json, py::arg("poly"),
          "s = lambda^2 + mu mu' decomposition");

    py::register_exception<cohiggs::ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<cohiggs::ExcludedIndex>(m, "ExcludedIndex", PyExc_ValueError);
}
