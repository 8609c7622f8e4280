// Command-line driver: theorem verification suites with seeded randomized
// trials, determinant / canonical-form / integrability queries on JSON
// input documents, and Schwarzenberger bundle metadata.
//
// Exit codes: 0 pass, 1 verification failure or non-integrable flag,
// 2 usage or parse error.

#include <CLI11.hpp>

#include "cohiggs/errors.hpp"
#include "cohiggs/verify.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace cohiggs;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int cmd_verify(const std::string& theorem, int trials, std::uint64_t seed, bool json,
               long coeff_bound, int jobs) {
    auto t = theorem_from_name(theorem);
    if (!t) {
        std::cerr << "unknown theorem '" << theorem << "'\n";
        return 2;
    }
    RunOptions opts;
    opts.trials = trials;
    opts.seed = seed;
    opts.coeff_bound = coeff_bound;
    opts.jobs = jobs;
    VerificationReport report = run_verification(*t, opts);
    if (json)
        std::cout << report_to_json(report).dump(2) << "\n";
    else
        std::cout << report_to_text(report);
    return report.passed() ? 0 : 1;
}

int cmd_det(const std::string& path, bool json) {
    InputDocument doc = parse_document(read_file(path));
    const auto* phi = std::get_if<CoHiggsField>(&doc);
    if (!phi) throw ParseError("det needs a co-Higgs field document");
    bool is_integrable = true;
    for (Chart c : kAllCharts) is_integrable = is_integrable && integrable(*phi, c);
    DetSection d = determinant(*phi);
    int k = schwarz_index(*phi);
    Json out;
    out["integrable"] = is_integrable;
    out["det"] = det_to_json(d);
    std::string image_text;
    try {
        ImagePoint p = image_point(d, k);
        out["image_point"] = image_point_to_json(p);
        image_text = image_point_to_text(p);
    } catch (const Unclassifiable& e) {
        out["image_point"] = nullptr;
        out["unclassifiable"] = e.what();
        image_text = std::string("unclassifiable: ") + e.what();
    }
    if (json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << det_to_text(d);
        std::cout << "image point: " << image_text << "\n";
        if (!is_integrable) std::cout << "warning: field is not integrable\n";
    }
    return is_integrable ? 0 : 1;
}

int cmd_canon(const std::string& path) {
    InputDocument doc = parse_document(read_file(path));
    if (const auto* pair = std::get_if<PairDocument>(&doc)) {
        ImagePoint p = canonicalize_qc(pair->q, pair->C);
        std::cout << image_point_to_text(p) << "\n";
        return 0;
    }
    if (const auto* sec = std::get_if<SectionDocument>(&doc)) {
        if (const auto* t = std::get_if<SectionT>(&sec->section)) {
            SectionT c = canonicalize_pm(*t);
            std::cout << image_point_to_text(ImageSymTangent{c, sym2_section(c)}) << "\n";
            return 0;
        }
        if (const auto* tm1 = std::get_if<SectionTm1>(&sec->section)) {
            SectionTm1 c = canonicalize_pm(*tm1);
            std::cout << "(" << c.v[0].to_string() << ", " << c.v[1].to_string() << ", "
                      << c.v[2].to_string() << ")\n";
            return 0;
        }
        throw ParseError("canon expects a T or T(-1) section, or a (q, C) pair");
    }
    // co-Higgs field: canonical image point of its determinant
    const auto& phi = std::get<CoHiggsField>(doc);
    ImagePoint p = image_point(determinant(phi), schwarz_index(phi));
    std::cout << image_point_to_text(p) << "\n";
    return 0;
}

int cmd_integrable(const std::string& path) {
    InputDocument doc = parse_document(read_file(path));
    const auto* phi = std::get_if<CoHiggsField>(&doc);
    if (!phi) throw ParseError("integrable needs a co-Higgs field document");
    bool ok = true;
    for (Chart c : kAllCharts) ok = ok && integrable(*phi, c);
    std::cout << (ok ? "true" : "false") << "\n";
    return ok ? 0 : 1;
}

int cmd_info(int k, bool json) {
    SchwarzInfo info = schwarz_info(k);
    if (json) {
        std::cout << schwarz_info_to_json(info).dump(2) << "\n";
    } else {
        std::cout << "V_" << info.k << ":  c1 = " << info.c1 << "H,  c2 = " << info.c2
                  << "H^2,  splitting = " << splitting_name(info.splitting)
                  << ",  h1(End0) = " << info.h1_end0 << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of the co-Higgs determinant classification on P^2"};
    app.require_subcommand(1);

    std::string theorem;
    int trials = 100;
    std::uint64_t seed = 42;
    bool as_json = false;
    long coeff_bound = 9;
    int jobs = 1;
    std::string input;
    int k = 0;

    auto* verify = app.add_subcommand("verify", "run a theorem verification suite");
    verify->add_option("--theorem", theorem,
                       "det1|det2|det3|det4|lemma1|lemma2|cocycle|integrability")
        ->required();
    verify->add_option("--trials", trials, "number of randomized trials")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "64-bit seed");
    verify->add_flag("--json", as_json, "emit one JSON object");
    verify->add_option("--coeff-bound", coeff_bound, "coefficient magnitude bound")
        ->check(CLI::PositiveNumber);
    verify->add_option("--jobs", jobs, "trial parallelism")->check(CLI::PositiveNumber);

    auto* det = app.add_subcommand("det", "determinant and image point of a field");
    det->add_option("--input", input, "JSON input document")->required();
    det->add_flag("--json", as_json, "emit one JSON object");

    auto* canon = app.add_subcommand("canon", "canonical form of a section, pair or field");
    canon->add_option("--input", input, "JSON input document")->required();

    auto* integ = app.add_subcommand("integrable", "integrability of a field");
    integ->add_option("--input", input, "JSON input document")->required();

    auto* info = app.add_subcommand("info", "Schwarzenberger bundle data");
    info->add_option("--k", k, "bundle index (k != 3)")->required();
    info->add_flag("--json", as_json, "emit one JSON object");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(theorem, trials, seed, as_json, coeff_bound, jobs);
        if (det->parsed()) return cmd_det(input, as_json);
        if (canon->parsed()) return cmd_canon(input);
        if (integ->parsed()) return cmd_integrable(input);
        if (info->parsed()) return cmd_info(k, as_json);
    } catch (const cohiggs::ExcludedIndex& e) {
        std::cerr << "excluded case: " << e.what() << "\n";
        return 2;
    } catch (const cohiggs::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
