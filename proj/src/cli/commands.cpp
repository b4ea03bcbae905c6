#include "cli/commands.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "chains/flux.hpp"
#include "chains/zharkov.hpp"
#include "cli/curve_file.hpp"
#include "cli/plot.hpp"
#include "exact/errors.hpp"
#include "lift/forms.hpp"
#include "lift/lefschetz.hpp"
#include "lift/sampling.hpp"

namespace tropflux {

using Json = nlohmann::ordered_json;

std::uint64_t fnv1a(const std::string& bytes, std::uint64_t h) {
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string builtin_k4_curve() {
    return R"({
  "variables": ["a", "b", "c", "d", "e", "f"],
  "vertices": ["pc", "t", "l", "g"],
  "edges": [
    {"name": "A", "from": "l", "to": "t", "length": "a"},
    {"name": "B", "from": "g", "to": "l", "length": "b"},
    {"name": "C", "from": "t", "to": "g", "length": "c"},
    {"name": "D", "from": "pc", "to": "g", "length": "d"},
    {"name": "E", "from": "pc", "to": "t", "length": "e"},
    {"name": "F", "from": "pc", "to": "l", "length": "f"}
  ],
  "basepoint": "t",
  "basepoint2": "g"
}
)";
}

namespace {

using Order = std::vector<std::string>;

class Builder {
public:
    Builder(std::string command, std::vector<std::string> args, const std::vector<std::string>& inputs) {
        std::uint64_t h = fnv1a(command);
        for (const auto& a : args) h = fnv1a(a + '\0', h);
        for (const auto& in : inputs) h = fnv1a(in, h);
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
        machine["command"] = command;
        machine["inputs"] = {{"args", args}, {"digest", std::string("fnv1a64:") + buf}};
        machine["exact"] = true;
        machine["results"] = Json::object();
        text << command;
        for (const auto& a : args) text << ' ' << a;
        text << '\n';
    }

    Json& results() { return machine["results"]; }

    Report finish(bool ok) {
        machine["ok"] = ok;
        Report r;
        r.text = text.str();
        r.json = machine.dump(2) + "\n";
        r.ok = ok;
        return r;
    }

    std::ostringstream text;
    Json machine;
};

Json matrix_json(const ScalarMatrix& q, const Order& order) {
    Json rows = Json::array();
    for (const auto& r : q) {
        Json row = Json::array();
        for (const auto& e : r) row.push_back(e.str(order));
        rows.push_back(row);
    }
    return rows;
}

void print_matrix(std::ostream& os, const ScalarMatrix& q, const Order& order) {
    std::vector<std::vector<std::string>> cells;
    std::size_t width = 1;
    for (const auto& r : q) {
        cells.emplace_back();
        for (const auto& e : r) {
            cells.back().push_back(e.str(order));
            width = std::max(width, cells.back().back().size());
        }
    }
    for (const auto& r : cells) {
        os << "  [";
        for (std::size_t c = 0; c < r.size(); ++c) {
            os << (c ? "  " : " ") << std::string(width - r[c].size(), ' ') << r[c];
        }
        os << " ]\n";
    }
}

std::string cycle_str(const MetricGraph& g, const IntVector& cycle) {
    std::string s;
    for (std::size_t e = 0; e < cycle.size(); ++e) {
        if (cycle[e] == 0) continue;
        bool neg = cycle[e] < 0;
        Integer mag = neg ? Integer(-cycle[e]) : cycle[e];
        if (s.empty()) s += neg ? "-" : "";
        else s += neg ? " - " : " + ";
        if (mag != 1) s += mag.get_str() + "*";
        s += g.edges[e].name;
    }
    return s.empty() ? "0" : s;
}

std::string rational_str(const Rational& q) {
    return q.get_str();
}

Json certificate_json(const FluxVerdict& v, const Order& order) {
    Json c;
    c["verdict"] = verdict_name(v);
    if (const auto* in = std::get_if<InLattice>(&v)) {
        Json co = Json::array();
        for (const auto& x : in->coefficients) co.push_back(x.get_str());
        c["coefficients"] = co;
    } else if (const auto* t = std::get_if<Torsion>(&v)) {
        c["order"] = t->order.get_str();
        Json q = Json::array(), z = Json::array();
        for (const auto& x : t->coefficients) q.push_back(rational_str(x));
        for (const auto& x : t->multiple_coefficients) z.push_back(x.get_str());
        c["coefficients"] = q;
        c["multiple_coefficients"] = z;
    } else {
        const auto& inf = std::get<InfiniteOrder>(v);
        Json f = Json::array();
        for (const auto& [m, w] : inf.functional)
            f.push_back({{"monomial", Scalar::monomial(m, Rational(1)).str(order)}, {"weight", rational_str(w)}});
        c["functional"] = f;
        c["value_on_target"] = rational_str(inf.value_on_target);
    }
    return c;
}

void print_certificate(std::ostream& os, const FluxVerdict& v, const PeriodGroup& p, const Order& order) {
    os << "verdict: " << verdict_name(v) << '\n';
    if (const auto* in = std::get_if<InLattice>(&v)) {
        os << "  coefficients:";
        for (const auto& x : in->coefficients) os << ' ' << x;
        os << '\n';
    } else if (const auto* t = std::get_if<Torsion>(&v)) {
        os << "  rational coefficients:";
        for (const auto& x : t->coefficients) os << ' ' << x;
        os << "\n  " << t->order << " * value = integer combination:";
        for (const auto& x : t->multiple_coefficients) os << ' ' << x;
        os << '\n';
    } else {
        const auto& inf = std::get<InfiniteOrder>(v);
        os << "  functional on monomial coefficients:";
        for (const auto& [m, w] : inf.functional)
            os << ' ' << w << "*[" << Scalar::monomial(m, Rational(1)).str(order) << ']';
        os << "\n  vanishes on all " << p.size() << " generators, value on target " << inf.value_on_target << '\n';
    }
}

Json group_json(const PeriodGroup& p, const Order& order) {
    Json a = Json::array();
    for (const auto& g : p.generators()) a.push_back(g.str(order));
    return a;
}

struct LoadedCurve {
    std::string bytes;
    MetricGraph graph;
};

LoadedCurve load(const std::string& path) {
    LoadedCurve c;
    c.bytes = read_file(path);
    c.graph = parse_curve(c.bytes);
    return c;
}

}  // namespace

Report cmd_curve_info(const std::string& path, const std::optional<std::string>& plot_path) {
    LoadedCurve c = load(path);
    const MetricGraph& g = c.graph;
    const Order& order = g.variables;
    Builder b("curve-info", {path}, {c.bytes});
    CycleBasis basis = cycle_basis(g);
    ScalarMatrix q = polarisation_matrix(g, basis);
    auto& r = b.results();
    r["genus"] = g.genus();
    r["vertices"] = g.vertices.size();
    r["edges"] = g.edges.size();
    r["is_k4"] = is_k4(g);
    Json cycles = Json::array();
    for (const auto& cyc : basis.cycles) cycles.push_back(cycle_str(g, cyc));
    r["cycle_basis"] = cycles;
    r["polarisation_matrix"] = matrix_json(q, order);
    std::optional<bool> pd;
    if (g.is_numeric() && !q.empty()) pd = is_positive_definite(q);
    r["positive_definite"] = pd ? Json(*pd) : Json(nullptr);

    auto& t = b.text;
    t << "genus " << g.genus() << ", " << g.vertices.size() << " vertices, " << g.edges.size() << " edges"
      << (is_k4(g) ? ", type K4" : "") << '\n';
    for (std::size_t i = 0; i < basis.cycles.size(); ++i)
        t << "  gamma" << i + 1 << " = " << cycle_str(g, basis.cycles[i]) << '\n';
    t << "Q =\n";
    print_matrix(t, q, order);
    if (pd) t << "positive definite: " << (*pd ? "yes" : "no") << '\n';
    bool ok = !pd || *pd;
    if (plot_path) {
        std::ofstream out(*plot_path, std::ios::binary);
        if (!out) throw InputError("cannot write " + *plot_path);
        out << plot_svg(g);
        t << "plot written to " << *plot_path << '\n';
    }
    return b.finish(ok);
}

Report cmd_periods(const std::string& path, int j, int k) {
    LoadedCurve c = load(path);
    const MetricGraph& g = c.graph;
    int n = g.genus();
    if (j < 0 || k < 0 || j + k > n)
        throw InputError("bidegree (" + std::to_string(j) + "," + std::to_string(k) + ") needs 0 <= j, k and j + k <= " +
                         std::to_string(n));
    const Order& order = g.variables;
    Builder b("periods", {path, std::to_string(j), std::to_string(k)}, {c.bytes});
    TropicalTorus t = TropicalTorus::from_matrix(polarisation_matrix(g, cycle_basis(g)));
    ConstantCochain omega = determinantal_form(n, j, k);
    PeriodGroup p = period_group(omega, t);
    PeriodGroup oracle = period_oracle(omega, t);
    bool match = same_group(p, oracle);
    auto& r = b.results();
    r["n"] = n;
    r["j"] = j;
    r["k"] = k;
    r["generators"] = group_json(p, order);
    r["oracle_match"] = match;
    b.text << "periods of Omega^" << n << "_{" << j << "," << k << "}: " << p.size() << " generators\n";
    for (const auto& gen : p.generators()) b.text << "  " << gen.str(order) << '\n';
    b.text << "oracle cross-check: " << (match ? "match" : "MISMATCH") << '\n';
    return b.finish(match);
}

Report cmd_ceresa(const std::string& path) {
    LoadedCurve c = load(path);
    const MetricGraph& g = c.graph;
    if (!is_k4(g)) throw PreconditionError("ceresa: curve is not of type K4");
    const Order& order = g.variables;
    Builder b("ceresa", {path}, {c.bytes});
    CeresaData d = zharkov_chain_k4(g);
    ConstantCochain omega = determinantal_form(3, 2, 1);
    bool boundary_ok = equal_mod_lattice(boundary(d.chain), d.curve - d.inverse_curve);
    FluxResult flux = tropical_flux(d.curve, d.inverse_curve, d.chain, d.torus, 2, 1);
    PeriodGroup p = period_group(omega, d.torus);
    bool cert_ok = verify_certificate(flux.verdict, flux.value, p);

    auto& r = b.results();
    r["basepoints"] = {g.vertices[d.p], g.vertices[d.p_prime]};
    r["polarisation_matrix"] = matrix_json(d.torus.Q, order);
    Json cells = Json::array();
    auto& t = b.text;
    t << "basepoints p = " << g.vertices[d.p] << ", p' = " << g.vertices[d.p_prime] << '\n';
    t << "cell  contribution\n";
    for (std::size_t i = 0; i < d.chain.cells.size(); ++i) {
        Scalar v = integrate_cell(omega, d.chain.cells[i]);
        cells.push_back({{"cell", d.labels[i]}, {"chain", d.chain.cells[i].str()}, {"contribution", v.str(order)}});
        t << "  " << d.labels[i] << "  " << v.str(order) << '\n';
    }
    r["cells"] = cells;
    r["boundary_verified"] = boundary_ok;
    r["flux"] = flux.value.str(order);
    r["period_generators"] = group_json(p, order);
    r["certificate"] = certificate_json(flux.verdict, order);
    r["certificate_verified"] = cert_ok;
    if (g.is_numeric())
        r["caveat"] = "numeric lengths: verdict is relative to the specialised period group";

    t << "boundary = AJ_p(C) - (-1)AJ_p'(C) mod lattice: " << (boundary_ok ? "yes" : "NO") << '\n';
    t << "flux: " << flux.value.str(order) << '\n';
    print_certificate(t, flux.verdict, p, order);
    t << "certificate re-verified: " << (cert_ok ? "yes" : "NO") << '\n';
    if (g.is_numeric()) t << "note: numeric lengths; the verdict only concerns this specialisation\n";
    return b.finish(boundary_ok && cert_ok);
}

Report cmd_flux_classify(const std::string& value, const std::string& generators_path) {
    std::string bytes = read_file(generators_path);
    Json doc;
    try {
        doc = Json::parse(bytes);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("generators file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("generators") || !doc.at("generators").is_array())
        throw InputError("generators file needs a \"generators\" array");
    Order order;
    if (doc.contains("variables")) {
        if (!doc.at("variables").is_array()) throw InputError("\"variables\" must be an array");
        for (const auto& v : doc.at("variables")) {
            if (!v.is_string()) throw InputError("variable names must be strings");
            order.push_back(v.get<std::string>());
        }
    }
    std::vector<Scalar> gens;
    for (const auto& v : doc.at("generators")) {
        if (!v.is_string()) throw InputError("generators must be strings");
        gens.push_back(Scalar::parse(v.get<std::string>()));
    }
    Scalar target = Scalar::parse(value);
    PeriodGroup p(gens);
    FluxVerdict verdict = classify_flux(target, p);
    bool cert_ok = verify_certificate(verdict, target, p);

    Builder b("flux-classify", {value, generators_path}, {bytes});
    auto& r = b.results();
    r["value"] = target.str(order);
    r["generators"] = group_json(p, order);
    r["certificate"] = certificate_json(verdict, order);
    r["certificate_verified"] = cert_ok;
    b.text << "value: " << target.str(order) << " against " << p.size() << " generators\n";
    print_certificate(b.text, verdict, p, order);
    b.text << "certificate re-verified: " << (cert_ok ? "yes" : "NO") << '\n';
    return b.finish(cert_ok);
}

Report cmd_lift_check(const std::optional<std::string>& path, int trials, std::uint64_t seed) {
    if (trials < 0) throw InputError("trials must be non-negative");
    std::string bytes = path ? read_file(*path) : builtin_k4_curve();
    MetricGraph g = parse_curve(bytes);
    const Order& order = g.variables;
    Builder b("lift-check", {path.value_or("<built-in K4>"), std::to_string(trials), std::to_string(seed)}, {bytes});
    auto& r = b.results();
    auto& t = b.text;
    bool ok = true;

    ConstantFormX psi = psi_hat(determinantal_form(3, 2, 1));
    ConstantFormX half_w2 = Scalar(Rational(1, 2)) * omega_power(3, 2);
    bool kunneth = psi == half_w2;
    ok = ok && kunneth;
    r["psi_hat_omega_321"] = psi.str();
    r["half_omega_squared"] = half_w2.str();
    r["kunneth_identity"] = kunneth;
    t << "psi_hat(Omega^3_{2,1}) = " << psi.str() << '\n';
    t << "1/2 omega^2            = " << half_w2.str() << '\n';
    t << "identical: " << (kunneth ? "yes" : "NO") << '\n';

    int closed = 0;
    bool closed_ok = true;
    for (int n = 1; n <= 4; ++n)
        for (int j = 0; j <= n; ++j)
            for (int k = 0; j + k <= n; ++k) {
                ++closed;
                closed_ok = closed_ok && psi_hat(determinantal_form(n, j, k)) == psi_hat_closed_form(n, j, k);
            }
    ok = ok && closed_ok;
    r["closed_form"] = {{"cases", closed}, {"holds", closed_ok}};
    t << "closed form for psi_hat, n <= 4: " << closed << " cases, " << (closed_ok ? "all hold" : "FAILED") << '\n';

    if (is_k4(g) && g.basepoint2) {
        CeresaData d = zharkov_chain_k4(g);
        ConstantCochain omega = determinantal_form(3, 2, 1);
        PairingResult std_pair = pairing(d.chain, omega, d.torus);
        PairingResult con_pair = pairing(d.chain, omega, d.torus, Decomposition::Conormal);
        bool holds = std_pair.holds && con_pair.holds;
        ok = ok && holds;
        r["ceresa"] = {{"tropical", std_pair.tropical.str(order)},
                       {"symplectic", std_pair.symplectic.str(order)},
                       {"symplectic_conormal", con_pair.symplectic.str(order)},
                       {"holds", holds}};
        t << "Ceresa chain: tropical " << std_pair.tropical.str(order) << ", symplectic "
          << std_pair.symplectic.str(order) << " (conormal lift " << con_pair.symplectic.str(order) << ")\n";
    } else {
        r["ceresa"] = nullptr;
        t << "Ceresa chain: skipped, curve is not K4 with two basepoints\n";
    }

    Rng rng(seed);
    int passed = 0;
    Json witness = nullptr;
    for (int trial = 0; trial < trials; ++trial) {
        int n = uniform_int(rng, 1, 4);
        int j = uniform_int(rng, 0, n);
        int k = uniform_int(rng, 0, n - j);
        TropicalTorus torus = random_torus(rng, n);
        ConstantCochain omega = random_cochain(rng, n, j, k);
        FramedChain c = random_framed_chain(rng, torus, j, k);
        PairingResult p1 = pairing(c, omega, torus);
        PairingResult p2 = pairing(c, omega, torus, Decomposition::Conormal);
        if (p1.holds && p2.holds && p1.symplectic == p2.symplectic) {
            ++passed;
        } else if (witness.is_null()) {
            witness = {{"trial", trial}, {"n", n}, {"j", j}, {"k", k}, {"chain", c.str()},
                       {"cochain", omega.str()}, {"tropical", p1.tropical.str()},
                       {"symplectic", p1.symplectic.str()}, {"symplectic_conormal", p2.symplectic.str()}};
        }
    }
    ok = ok && passed == trials;
    r["random"] = {{"seed", std::to_string(seed)}, {"trials", trials}, {"passed", passed}, {"witness", witness}};
    t << "random pairing trials (seed " << seed << "): " << passed << "/" << trials << " pass\n";
    if (!witness.is_null()) t << "first failure: " << witness.dump() << '\n';
    r["all_pass"] = ok;
    t << (ok ? "all checks pass" : "SOME CHECKS FAILED") << '\n';
    return b.finish(ok);
}

namespace {

std::string lattice_class_str(const ConstantFormX& f) {
    if (f.is_zero()) return "0";
    std::string s;
    int n = f.n();
    for (const auto& [idx, c] : f.terms()) {
        std::string coef = c.str();
        bool neg = coef[0] == '-';
        if (neg) coef = coef.substr(1);
        if (!s.empty()) s += neg ? " - " : " + ";
        else if (neg) s += "-";
        std::string mono;
        for (int x : idx) {
            if (!mono.empty()) mono += "^";
            mono += x < n ? "g" + std::to_string(x + 1) : "f" + std::to_string(x - n + 1);
        }
        if (mono.empty()) s += coef;
        else s += (coef == "1" ? "" : coef + "*") + mono;
    }
    return s;
}

}  // namespace

Report cmd_lefschetz(const std::string& path) {
    LoadedCurve c = load(path);
    const MetricGraph& g = c.graph;
    if (!g.is_numeric()) throw InputError("lefschetz: edge lengths must be numeric");
    Builder b("lefschetz", {path}, {c.bytes});
    TropicalTorus t = TropicalTorus::from_matrix(polarisation_matrix(g, cycle_basis(g)));
    LefschetzLattice lat = lefschetz_lattice(t);
    auto& r = b.results();
    auto& txt = b.text;
    r["n"] = lat.n;
    r["degree"] = lat.n + 1;
    r["omega"] = lattice_class_str(lat.omega);
    txt << "X(B) = T^" << 2 * lat.n << ", degree " << lat.n + 1 << " (g = gamma*, f = fibre dual)\n";
    txt << "[omega] = " << lattice_class_str(lat.omega) << '\n';
    Json levels = Json::array();
    for (const auto& l : lat.levels) {
        Json cls = Json::array();
        for (const auto& f : l.classes) cls.push_back(lattice_class_str(f));
        levels.push_back({{"i", l.i}, {"source_degree", l.source_degree}, {"rank", l.classes.size()}, {"basis", cls}});
        txt << "level i=" << l.i << ": [omega]^" << l.i << " cup ker on degree " << l.source_degree << ", rank "
            << l.classes.size() << '\n';
        for (const auto& f : l.classes) txt << "  " << lattice_class_str(f) << '\n';
    }
    r["levels"] = levels;
    r["rank"] = lat.rank;
    r["fibre_classes_in_level1"] = lat.fibre_classes_in_level1;
    r["omega_block_is_q"] = lat.omega_block_is_q;
    txt << "total rank " << lat.rank << '\n';
    txt << "[omega] cup fibre classes in level 1: " << (lat.fibre_classes_in_level1 ? "yes" : "NO") << '\n';
    txt << "[omega] coefficient block equals Q: " << (lat.omega_block_is_q ? "yes" : "NO") << '\n';
    return b.finish(lat.fibre_classes_in_level1 && lat.omega_block_is_q);
}

}  // namespace tropflux
