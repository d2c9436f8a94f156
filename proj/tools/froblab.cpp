// froblab: exact Frobenius/quasi-Frobenius analysis of structure-constant
// algebras, Hopf-style axiom verification, and endomorphism-algebra
// reconstruction.  Thin shell over the C API.
#include "froblab.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot read file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int emit(int status, char* report, const std::string& out_path) {
    if (report) {
        if (out_path.empty()) {
            std::cout << report << "\n";
        } else {
            std::ofstream out(out_path);
            out << report << "\n";
            if (!out) {
                std::cerr << "error: cannot write " << out_path << "\n";
                fl_string_free(report);
                return 1;
            }
        }
        fl_string_free(report);
    }
    if (status != 0 && fl_last_error()[0] != '\0')
        std::cerr << "error: " << fl_last_error() << "\n";
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Frobenius analysis of finite-dimensional algebras"};
    app.require_subcommand(1);

    unsigned long long seed = FL_DEFAULT_SEED;
    app.add_option("--seed", seed, "deterministic seed (printed in every report)")
        ->capture_default_str();

    int p = 0;
    std::string out_path, bundle_path, projectives_path, law, d_text, builtin_name;
    bool reconstruct = false;

    auto* ta = app.add_subcommand("taft-analyze",
                                  "axioms, radical and Frobenius analysis of the p^2 algebra");
    ta->add_option("--p", p, "prime parameter")->required();
    ta->add_option("--out", out_path, "write the JSON report to a file");

    auto* fc = app.add_subcommand("frobcheck", "quasi-Frobenius/Frobenius verdicts for a bundle");
    fc->add_option("--algebra", bundle_path, "algebra bundle JSON file")->required();
    fc->add_option("--projectives", projectives_path,
                   "projective indecomposable data JSON file");
    fc->add_option("--out", out_path, "write the JSON report to a file");

    auto* av = app.add_subcommand("axioms-verify", "verify an axiom family on a bundle");
    av->add_option("--bundle", bundle_path, "bundle JSON file with coalgebra data")->required();
    av->add_option("--law", law, "hopf | weak-hopf | quasi-hopf")->required();
    av->add_option("--out", out_path, "write the JSON report to a file");

    auto* td = app.add_subcommand("taftd",
                                  "criterion table for (p, d); --reconstruct builds and "
                                  "analyzes the endomorphism algebra");
    td->add_option("--p", p, "prime parameter")->required();
    td->add_option("--d", d_text, "comma-separated dimension vector d1,...,dp")->required();
    td->add_flag("--reconstruct", reconstruct, "build the endomorphism algebra and cross-check");
    td->add_option("--out", out_path, "write the JSON report to a file");

    auto* ex = app.add_subcommand("export", "emit a built-in algebra bundle");
    ex->add_option("--builtin", builtin_name, "taft-P | group-P | pair-groupoid-N")->required();
    ex->add_option("--out", out_path, "write the JSON report to a file");

    CLI11_PARSE(app, argc, argv);

    char* report = nullptr;
    try {
        if (ta->parsed()) {
            int status = fl_taft_analyze(p, seed, &report);
            return emit(status, report, out_path);
        }
        if (fc->parsed()) {
            std::string bundle = read_file(bundle_path);
            std::optional<std::string> proj;
            if (!projectives_path.empty()) proj = read_file(projectives_path);
            int status = fl_frobcheck(bundle.c_str(), proj ? proj->c_str() : nullptr, seed, &report);
            return emit(status, report, out_path);
        }
        if (av->parsed()) {
            std::string bundle = read_file(bundle_path);
            int status = fl_axioms_verify(bundle.c_str(), law.c_str(), &report);
            return emit(status, report, out_path);
        }
        if (td->parsed()) {
            std::vector<long long> d;
            std::stringstream ss(d_text);
            std::string item;
            while (std::getline(ss, item, ',')) {
                try {
                    d.push_back(std::stoll(item));
                } catch (const std::exception&) {
                    std::cerr << "error: bad dimension entry \"" << item << "\"\n";
                    return 2;
                }
            }
            int status = fl_taftd(p, d.data(), static_cast<int>(d.size()), reconstruct ? 1 : 0,
                                  seed, &report);
            return emit(status, report, out_path);
        }
        if (ex->parsed()) {
            int status = fl_export_builtin(builtin_name.c_str(), &report);
            return emit(status, report, out_path);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
