#include "tropflux/tropflux.h"

#include <optional>
#include <string>

#include "cli/commands.hpp"
#include "cli/curve_file.hpp"
#include "exact/errors.hpp"

struct tf_curve {
    tropflux::MetricGraph graph;
    std::vector<std::vector<std::string>> q;
    bool k4 = false;
};

struct tf_report {
    tropflux::Report report;
};

namespace {

thread_local std::string last_error;

template <class F>
tf_status guarded(F&& f) {
    try {
        f();
        last_error.clear();
        return TF_OK;
    } catch (const tropflux::InputError& e) {
        last_error = e.what();
        return TF_ERR_INPUT;
    } catch (const tropflux::PreconditionError& e) {
        last_error = e.what();
        return TF_ERR_PRECONDITION;
    } catch (const std::exception& e) {
        last_error = e.what();
        return TF_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return TF_ERR_INTERNAL;
    }
}

tf_status null_argument(const char* what) {
    last_error = std::string(what) + " must not be NULL";
    return TF_ERR_INPUT;
}

tf_curve* wrap(tropflux::MetricGraph g) {
    auto* c = new tf_curve{std::move(g), {}, false};
    tropflux::ScalarMatrix q = tropflux::polarisation_matrix(c->graph, tropflux::cycle_basis(c->graph));
    for (const auto& row : q) {
        c->q.emplace_back();
        for (const auto& e : row) c->q.back().push_back(e.str(c->graph.variables));
    }
    c->k4 = tropflux::is_k4(c->graph);
    return c;
}

template <class F>
tf_status run(tf_report** out, F&& f) {
    if (!out) return null_argument("out");
    *out = nullptr;
    return guarded([&] { *out = new tf_report{f()}; });
}

}  // namespace

extern "C" {

const char* tf_last_error(void) {
    return last_error.c_str();
}

const char* tf_version(void) {
    return "0.1.0";
}

tf_status tf_curve_load(const char* path, tf_curve** out) {
    if (!path) return null_argument("path");
    if (!out) return null_argument("out");
    *out = nullptr;
    return guarded([&] { *out = wrap(tropflux::load_curve(path)); });
}

tf_status tf_curve_parse(const char* json_text, tf_curve** out) {
    if (!json_text) return null_argument("json_text");
    if (!out) return null_argument("out");
    *out = nullptr;
    return guarded([&] { *out = wrap(tropflux::parse_curve(json_text)); });
}

void tf_curve_free(tf_curve* curve) {
    delete curve;
}

int tf_curve_genus(const tf_curve* curve) {
    return curve ? curve->graph.genus() : -1;
}

int tf_curve_is_k4(const tf_curve* curve) {
    return curve && curve->k4 ? 1 : 0;
}

int tf_curve_is_numeric(const tf_curve* curve) {
    return curve && curve->graph.is_numeric() ? 1 : 0;
}

const char* tf_curve_polarisation(const tf_curve* curve, int i, int j) {
    if (!curve || i < 0 || j < 0 || i >= static_cast<int>(curve->q.size()) || j >= static_cast<int>(curve->q.size()))
        return nullptr;
    return curve->q[i][j].c_str();
}

tf_status tf_cmd_curve_info(const char* path, const char* plot_path, tf_report** out) {
    if (!path) return null_argument("path");
    std::optional<std::string> plot;
    if (plot_path) plot = plot_path;
    return run(out, [&] { return tropflux::cmd_curve_info(path, plot); });
}

tf_status tf_cmd_periods(const char* path, int j, int k, tf_report** out) {
    if (!path) return null_argument("path");
    return run(out, [&] { return tropflux::cmd_periods(path, j, k); });
}

tf_status tf_cmd_ceresa(const char* path, tf_report** out) {
    if (!path) return null_argument("path");
    return run(out, [&] { return tropflux::cmd_ceresa(path); });
}

tf_status tf_cmd_flux_classify(const char* value, const char* generators_path, tf_report** out) {
    if (!value) return null_argument("value");
    if (!generators_path) return null_argument("generators_path");
    return run(out, [&] { return tropflux::cmd_flux_classify(value, generators_path); });
}

tf_status tf_cmd_lift_check(const char* path, int trials, uint64_t seed, tf_report** out) {
    std::optional<std::string> p;
    if (path) p = path;
    return run(out, [&] { return tropflux::cmd_lift_check(p, trials, seed); });
}

tf_status tf_cmd_lefschetz(const char* path, tf_report** out) {
    if (!path) return null_argument("path");
    return run(out, [&] { return tropflux::cmd_lefschetz(path); });
}

const char* tf_report_text(const tf_report* report) {
    return report ? report->report.text.c_str() : "";
}

const char* tf_report_json(const tf_report* report) {
    return report ? report->report.json.c_str() : "";
}

int tf_report_ok(const tf_report* report) {
    return report && report->report.ok ? 1 : 0;
}

void tf_report_free(tf_report* report) {
    delete report;
}

}  // extern "C"
