#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tropflux/tropflux.h"

namespace {

int finish(tf_status status, tf_report* report, const std::string& json_path) {
    if (status != TF_OK) {
        std::cerr << "error: " << tf_last_error() << '\n';
        return status;
    }
    std::cout << tf_report_text(report);
    int code = tf_report_ok(report) ? 0 : 1;
    if (!json_path.empty()) {
        std::ofstream out(json_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << json_path << '\n';
            code = TF_ERR_INPUT;
        } else {
            out << tf_report_json(report);
        }
    }
    tf_report_free(report);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tropical flux and symplectic lift computations"};
    app.require_subcommand(1);
    std::string json_path, plot_path, path, value, generators;
    int j = 0, k = 0, trials = 100;
    std::uint64_t seed = 1;
    app.add_option("--json", json_path, "write the machine-readable report here");

    auto* info = app.add_subcommand("curve-info", "genus, cycle basis and polarisation matrix");
    info->add_option("curve", path, "curve file")->required();
    info->add_option("--plot", plot_path, "write an SVG of the Abel-Jacobi image");
    info->add_option("--json", json_path, "write the machine-readable report here");

    auto* periods = app.add_subcommand("periods", "period group of the determinantal form");
    periods->add_option("curve", path, "curve file")->required();
    periods->add_option("j", j, "form degree")->required();
    periods->add_option("k", k, "framing degree")->required();
    periods->add_option("--json", json_path, "write the machine-readable report here");

    auto* ceresa = app.add_subcommand("ceresa", "flux of the Ceresa cycle of a K4 curve");
    ceresa->add_option("curve", path, "curve file")->required();
    ceresa->add_option("--json", json_path, "write the machine-readable report here");

    auto* classify = app.add_subcommand("flux-classify", "classify a value against a period group");
    classify->add_option("value", value, "polynomial")->required();
    classify->add_option("generators", generators, "JSON file with a generators array")->required();
    classify->add_option("--json", json_path, "write the machine-readable report here");

    auto* lift = app.add_subcommand("lift-check", "pairing preservation under the symplectic lift");
    lift->add_option("curve", path, "curve file (default: built-in K4)");
    lift->add_option("--trials", trials, "random trials")->check(CLI::NonNegativeNumber);
    lift->add_option("--seed", seed, "seed for the random trials");
    lift->add_option("--json", json_path, "write the machine-readable report here");

    auto* lef = app.add_subcommand("lefschetz", "Lefschetz lattice in degree n+1");
    lef->add_option("curve", path, "curve file")->required();
    lef->add_option("--json", json_path, "write the machine-readable report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : TF_ERR_INPUT;
    }

    tf_report* report = nullptr;
    tf_status status = TF_ERR_INTERNAL;
    if (*info) status = tf_cmd_curve_info(path.c_str(), plot_path.empty() ? nullptr : plot_path.c_str(), &report);
    else if (*periods) status = tf_cmd_periods(path.c_str(), j, k, &report);
    else if (*ceresa) status = tf_cmd_ceresa(path.c_str(), &report);
    else if (*classify) status = tf_cmd_flux_classify(value.c_str(), generators.c_str(), &report);
    else if (*lift) status = tf_cmd_lift_check(path.empty() ? nullptr : path.c_str(), trials, seed, &report);
    else if (*lef) status = tf_cmd_lefschetz(path.c_str(), &report);
    return finish(status, report, json_path);
}
