#include <gtest/gtest.h>

#include <json.hpp>

#include "cli/commands.hpp"
#include "cli/curve_file.hpp"
#include "exact/errors.hpp"

using namespace tropflux;
using nlohmann::json;

namespace {

std::string data(const std::string& name) {
    return std::string(TROPFLUX_DATA_DIR) + "/" + name;
}

json results(const Report& r) {
    return json::parse(r.json)["results"];
}

}  // namespace

TEST(CurveFile, RejectsBadInput) {
    EXPECT_THROW(parse_curve("{"), InputError);
    EXPECT_THROW(parse_curve(R"({"vertices":[],"edges":[],"basepoint":"x"})"), InputError);
    EXPECT_THROW(parse_curve(R"({"vertices":["u"],"edges":[{"name":"L","from":"u","to":"w","length":"1"}],"basepoint":"u"})"),
                 InputError);
    EXPECT_THROW(parse_curve(R"({"vertices":["u"],"edges":[{"name":"L","from":"u","to":"u","length":0.5}],"basepoint":"u"})"),
                 InputError);
    EXPECT_THROW(parse_curve(R"({"vertices":["u"],"edges":[{"name":"L","from":"u","to":"u","length":"-1"}],"basepoint":"u"})"),
                 InputError);
    EXPECT_THROW(parse_curve(R"({"vertices":["u","v"],"edges":[],"basepoint":"u"})"), InputError);
    EXPECT_THROW(load_curve(data("missing.json")), InputError);
}

TEST(CurveFile, AcceptsIntegerAndRationalLengths) {
    MetricGraph g = parse_curve(
        R"({"vertices":["u"],"edges":[{"name":"L","from":"u","to":"u","length":3},{"name":"M","from":"u","to":"u","length":"3/2"}],"basepoint":"u"})");
    EXPECT_EQ(g.edges[0].length, Scalar(3));
    EXPECT_EQ(g.edges[1].length, Scalar(Rational(3, 2)));
    EXPECT_TRUE(g.is_numeric());
}

TEST(Commands, CurveInfo) {
    json r = results(cmd_curve_info(data("k4.json")));
    EXPECT_EQ(r["genus"], 3);
    EXPECT_TRUE(r["is_k4"]);
    EXPECT_EQ(r["polarisation_matrix"][0][0], "a + e + f");
    EXPECT_TRUE(r["positive_definite"].is_null());
    EXPECT_EQ(results(cmd_curve_info(data("loop.json")))["polarisation_matrix"], json::parse(R"([["l"]])"));
    EXPECT_TRUE(results(cmd_curve_info(data("k4_numeric.json")))["positive_definite"]);
}

TEST(Commands, Periods) {
    json r = results(cmd_periods(data("k4.json"), 2, 1));
    EXPECT_EQ(r["generators"].size(), 6U);
    EXPECT_TRUE(r["oracle_match"]);
    EXPECT_EQ(results(cmd_periods(data("loop.json"), 1, 0))["generators"], json::parse(R"(["l"])"));
    json id = results(cmd_periods(data("rose2.json"), 1, 1));
    for (const auto& g : id["generators"]) EXPECT_TRUE(g == "1" || g == "-1");
    EXPECT_THROW(cmd_periods(data("k4.json"), 3, 1), InputError);
    EXPECT_THROW(cmd_periods(data("k4.json"), -1, 1), InputError);
}

TEST(Commands, Ceresa) {
    Report rep = cmd_ceresa(data("k4.json"));
    EXPECT_TRUE(rep.ok);
    json r = results(rep);
    EXPECT_EQ(r["flux"], "-a*d");
    EXPECT_EQ(r["certificate"]["verdict"], "InfiniteOrder");
    EXPECT_TRUE(r["boundary_verified"]);
    EXPECT_TRUE(r["certificate_verified"]);
    EXPECT_EQ(r["cells"].size(), 5U);
    EXPECT_EQ(r["cells"][2]["contribution"], "-a*d");
    EXPECT_EQ(results(cmd_ceresa(data("k4_equal.json")))["certificate"]["verdict"], "Torsion(4)");
    json num = results(cmd_ceresa(data("k4_numeric.json")));
    EXPECT_EQ(num["flux"], "-1");
    EXPECT_TRUE(num.contains("caveat"));
    EXPECT_THROW(cmd_ceresa(data("theta.json")), PreconditionError);
}

TEST(Commands, FluxClassify) {
    EXPECT_EQ(results(cmd_flux_classify("0", data("k4_periods.json")))["certificate"]["verdict"], "InLattice");
    EXPECT_EQ(results(cmd_flux_classify("a*d + e*d + d*f + e*f", data("k4_periods.json")))["certificate"]["verdict"],
              "InLattice");
    EXPECT_EQ(results(cmd_flux_classify("-a*d", data("k4_periods.json")))["certificate"]["verdict"], "InfiniteOrder");
    EXPECT_THROW(cmd_flux_classify("a +", data("k4_periods.json")), InputError);
    EXPECT_THROW(cmd_flux_classify("a", data("k4.json")), InputError);
}

TEST(Commands, LiftCheck) {
    Report rep = cmd_lift_check(std::nullopt, 20, 7);
    EXPECT_TRUE(rep.ok);
    json r = results(rep);
    EXPECT_EQ(r["ceresa"]["tropical"], "-a*d");
    EXPECT_EQ(r["ceresa"]["symplectic"], "-a*d");
    EXPECT_EQ(r["psi_hat_omega_321"], r["half_omega_squared"]);
    EXPECT_TRUE(cmd_lift_check(std::nullopt, 0, 1).ok);
    EXPECT_TRUE(results(cmd_lift_check(data("loop.json"), 0, 1))["ceresa"].is_null());
}

TEST(Commands, Lefschetz) {
    EXPECT_EQ(results(cmd_lefschetz(data("loop_numeric.json")))["rank"], 1);
    EXPECT_EQ(results(cmd_lefschetz(data("rose2.json")))["rank"], 4);
    EXPECT_EQ(results(cmd_lefschetz(data("k4_numeric.json")))["rank"], 15);
    EXPECT_THROW(cmd_lefschetz(data("k4.json")), InputError);
}

TEST(Commands, MachineOutputIsDeterministic) {
    EXPECT_EQ(cmd_ceresa(data("k4.json")).json, cmd_ceresa(data("k4.json")).json);
    EXPECT_EQ(cmd_lift_check(std::nullopt, 10, 5).json, cmd_lift_check(std::nullopt, 10, 5).json);
    json a = json::parse(cmd_periods(data("k4.json"), 2, 1).json);
    json b = json::parse(cmd_periods(data("k4_subdivided.json"), 2, 1).json);
    EXPECT_NE(a["inputs"]["digest"], b["inputs"]["digest"]);
    EXPECT_TRUE(a["exact"]);
}
