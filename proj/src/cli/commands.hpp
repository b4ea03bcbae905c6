#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace tropflux {

struct Report {
    std::string text;  // human-readable
    std::string json;  // machine-readable; byte-identical for identical inputs
    bool ok = true;    // every check in the report passed
};

// All commands throw InputError / PreconditionError.
Report cmd_curve_info(const std::string& path, const std::optional<std::string>& plot_path = {});
Report cmd_periods(const std::string& path, int j, int k);
Report cmd_ceresa(const std::string& path);
Report cmd_flux_classify(const std::string& value, const std::string& generators_path);
// Without a path the built-in K4 curve is used.
Report cmd_lift_check(const std::optional<std::string>& path, int trials, std::uint64_t seed);
Report cmd_lefschetz(const std::string& path);

std::string builtin_k4_curve();
std::uint64_t fnv1a(const std::string& bytes, std::uint64_t h = 0xcbf29ce484222325ULL);

}  // namespace tropflux
