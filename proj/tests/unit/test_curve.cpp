#include <gtest/gtest.h>

#include "cli/curve_file.hpp"
#include "curve/graph.hpp"
#include "exact/errors.hpp"

using namespace tropflux;

namespace {

MetricGraph curve(const std::string& name) {
    return load_curve(std::string(TROPFLUX_DATA_DIR) + "/" + name);
}

ScalarMatrix parse_matrix(std::vector<std::vector<const char*>> rows) {
    ScalarMatrix m;
    for (const auto& r : rows) {
        m.emplace_back();
        for (const char* e : r) m.back().push_back(Scalar::parse(e));
    }
    return m;
}

}  // namespace

TEST(Curve, K4PolarisationMatrix) {
    MetricGraph g = curve("k4.json");
    CycleBasis b = cycle_basis(g);
    EXPECT_EQ(g.genus(), 3);
    EXPECT_EQ(polarisation_matrix(g, b),
              parse_matrix({{"a+e+f", "-f", "-e"}, {"-f", "b+d+f", "-d"}, {"-e", "-d", "c+d+e"}}));
    for (const auto& c : b.cycles) EXPECT_TRUE(is_flow(g, c));
}

TEST(Curve, LoopAndTheta) {
    MetricGraph loop = curve("loop.json");
    EXPECT_EQ(polarisation_matrix(loop, cycle_basis(loop)), parse_matrix({{"l"}}));
    MetricGraph theta = curve("theta.json");
    EXPECT_EQ(polarisation_matrix(theta, cycle_basis(theta)),
              parse_matrix({{"l1+l2", "-l2"}, {"-l2", "l2+l3"}}));
}

TEST(Curve, NumericPositiveDefiniteness) {
    MetricGraph g = curve("k4_numeric.json");
    ScalarMatrix q = polarisation_matrix(g, cycle_basis(g));
    EXPECT_TRUE(is_positive_definite(q));
    EXPECT_FALSE(is_positive_definite(parse_matrix({{"1", "2"}, {"2", "1"}})));
    EXPECT_THROW(is_positive_definite(parse_matrix({{"a"}})), PreconditionError);
}

TEST(Curve, K4Recognition) {
    EXPECT_TRUE(is_k4(curve("k4.json")));
    EXPECT_TRUE(is_k4(curve("k4_subdivided.json")));
    EXPECT_FALSE(is_k4(curve("theta.json")));
    EXPECT_FALSE(is_k4(curve("loop.json")));
    SuppressedGraph s = suppress_two_valent(curve("k4_subdivided.json"));
    EXPECT_EQ(s.vertices.size(), 4U);
    EXPECT_EQ(s.branches.size(), 6U);
}

TEST(Curve, AbelJacobiImageIsACycle) {
    for (const char* name : {"k4.json", "k4_subdivided.json", "theta.json", "loop.json", "rose3.json"}) {
        MetricGraph g = curve(name);
        CycleBasis b = cycle_basis(g);
        AbelJacobi aj = abel_jacobi_cycle(g, b);
        EXPECT_TRUE(reduce_mod_lattice(boundary(aj.chain)).empty()) << name;
        EXPECT_TRUE(aj.positions[g.basepoint] == zero_vector(g.genus())) << name;
        EXPECT_TRUE(reduce_mod_lattice(boundary(branch_cycle(g, b, g.basepoint))).empty()) << name;
    }
}

TEST(Curve, InvolutionNegatesGeometry) {
    MetricGraph g = curve("loop.json");
    AbelJacobi aj = abel_jacobi_cycle(g, cycle_basis(g));
    FramedChain inv = involution_image(aj.chain);
    ASSERT_EQ(inv.cells.size(), 1U);
    EXPECT_EQ(inv.cells[0].spans[0], vneg(aj.chain.cells[0].spans[0]));
    EXPECT_EQ(inv.cells[0].framing, -aj.chain.cells[0].framing);
    EXPECT_TRUE(equal_mod_lattice(involution_image(inv), aj.chain));
}

TEST(Curve, BridgesAreSkipped) {
    MetricGraph g = parse_curve(R"({"vertices":["u","v"],"edges":[
        {"name":"L","from":"u","to":"u","length":"2"},
        {"name":"B","from":"u","to":"v","length":"1"}],"basepoint":"u"})");
    CycleBasis b = cycle_basis(g);
    EXPECT_EQ(g.genus(), 1);
    EXPECT_EQ(abel_jacobi_cycle(g, b).chain.cells.size(), 1U);
}
