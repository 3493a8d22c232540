#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "crsym/catalog.hpp"
#include "crsym/report.hpp"

namespace fs = std::filesystem;
using crsym::Json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitVerification = 3;

int cmd_canon(const std::string& spec_path) {
    crsym::SymbolSpec spec = crsym::load_spec_file(spec_path);
    auto [h, a] = crsym::build_pair(spec);
    std::cout << "n = " << spec.n() << "  (n-1 = " << spec.dim() << ")\n";
    std::cout << "H =\n" << h.str() << "\n";
    std::cout << "A =\n" << a.str() << "\n";
    crsym::PairDiagnostic d = crsym::validate_pair(h, a);
    std::cout << "validation: " << (d.ok ? "ok" : d.message) << "\n";
    std::cout << "regular: " << (crsym::is_regular(h, a) ? "true" : "false") << "\n";
    return d.ok ? kExitOk : kExitVerification;
}

int cmd_report(const std::string& spec_path, const std::string& out_path,
               const crsym::ReportOptions& options) {
    crsym::SymbolSpec spec = crsym::load_spec_file(spec_path);
    Json rep = crsym::build_report(spec, options);
    std::string err;
    if (!crsym::validate_schema(rep, crsym::report_schema(), &err)) {
        std::cerr << "internal error: report does not match its schema: " << err << "\n";
        return kExitVerification;
    }
    std::string text = rep.dump(2) + "\n";
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot open output file: " << out_path << "\n";
            return kExitInput;
        }
        out << text;
    }
    return kExitOk;
}

int cmd_verify_paper(const std::string& catalog_dir, const std::string& filter, unsigned jobs) {
    // validate the shipped catalog first: a corrupted spec fails by name
    fs::path manifest_path = fs::path(catalog_dir) / "manifest.json";
    std::ifstream min(manifest_path);
    if (!min) {
        std::cerr << "catalog manifest not found: " << manifest_path.string() << "\n";
        return kExitInput;
    }
    Json manifest;
    try {
        min >> manifest;
    } catch (const std::exception& e) {
        std::cerr << "catalog manifest unreadable: " << e.what() << "\n";
        return kExitInput;
    }
    size_t entries = 0;
    for (const Json& entry : manifest.at("entries")) {
        std::string rel = entry.at("path").get<std::string>();
        fs::path p = fs::path(catalog_dir) / rel;
        crsym::SymbolSpec spec;
        try {
            spec = crsym::load_spec_file(p.string());
        } catch (const std::exception& e) {
            std::cerr << "catalog spec " << rel << " is invalid: " << e.what() << "\n";
            return kExitInput;
        }
        if (entry.contains("expect_regular")) {
            auto [h, a] = crsym::build_pair(spec);
            bool reg = crsym::is_regular(h, a);
            if (reg != entry.at("expect_regular").get<bool>()) {
                std::cerr << "catalog spec " << rel << ": regularity annotation mismatch\n";
                return kExitVerification;
            }
        }
        ++entries;
    }
    std::cerr << "catalog: " << entries << " spec files ok\n";

    bool all_pass = true;
    for (int id : crsym::criteria_matching(filter)) {
        crsym::CriterionResult r = crsym::run_criterion(id, jobs);
        std::cout << (r.pass ? "[PASS]" : "[FAIL]") << " criterion " << r.id << " (" << r.name
                  << "): " << r.detail << "\n";
        std::cerr << "  criterion " << r.id << " took " << r.seconds << " s\n";
        if (!r.pass) all_pass = false;
    }
    return all_pass ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic toolkit for CR symbol algebras, their intersection "
                 "algebras, reduced modified symbols and Tanaka prolongations"};
    app.require_subcommand(1);

    std::string spec_path, out_path, catalog_dir = "data/catalog", filter;
    unsigned jobs = 0;
    crsym::ReportOptions ropt;

    CLI::App* canon = app.add_subcommand("canon", "build and validate the canonical pair (H, A)");
    canon->add_option("spec", spec_path, "spec JSON file")->required();

    CLI::App* report = app.add_subcommand("report", "full JSON report for one spec");
    report->add_option("spec", spec_path, "spec JSON file")->required();
    report->add_option("-o,--output", out_path, "output file (default stdout)");
    report->add_option("--k-max", ropt.k_max, "prolongation degree cap (default 6)");
    report->add_option("--search-limit", ropt.search_limit, "reduced-datum candidates to try");
    report->add_option("--max-found", ropt.max_found, "stop after this many verified data");
    report->add_flag("--float", ropt.with_float, "add decimal approximations");

    CLI::App* verify = app.add_subcommand("verify-paper", "run the acceptance catalog");
    verify->add_option("--catalog", catalog_dir, "catalog directory (default data/catalog)");
    verify->add_option("--filter", filter, "run only criteria whose name contains this");
    verify->add_option("--jobs", jobs, "worker threads (default: hardware)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (canon->parsed()) return cmd_canon(spec_path);
        if (report->parsed()) return cmd_report(spec_path, out_path, ropt);
        if (verify->parsed()) return cmd_verify_paper(catalog_dir, filter, jobs);
    } catch (const crsym::SpecError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    }
    return kExitInput;
}
