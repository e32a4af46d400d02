// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "phasealg/cli.hpp"
#include "phasealg/phasealg.hpp"

using namespace phasealg;
using G = GeneratorIndex;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

ParameterSet<double> to_float(const ParameterSet<Rational>& p) {
    return ParameterSet<double>(p.kappa.get_d(), p.lambda_sq.get_d(), p.mu_sq.get_d());
}

std::string describe(const ParameterSet<Rational>& p) {
    return "(" + p.kappa.get_str() + ", " + p.lambda_sq.get_str() + ", " + p.mu_sq.get_str() + ")";
}

// Random rational points drawn per region: the five sign/size rows of the
// (M^2, L^2, H^2) table, the surface lambda^2 mu^2 = kappa^2, and the origin.
std::vector<ParameterSet<Rational>> build_grid(std::map<std::string, int>& counts) {
    oracle::RationalSource src(20240611);
    std::vector<ParameterSet<Rational>> grid;
    auto add = [&](const std::string& region, ParameterSet<Rational> p) {
        grid.push_back(p);
        ++counts[region];
    };
    auto abs_q = [](Rational r) { return sgn(r) < 0 ? Rational(-r) : r; };
    while (grid.size() < 1000) {
        for (int row = 0; row < 5; ++row) {
            Rational m2 = src.positive(), l2 = src.positive(), h = src.positive();
            if (row == 2 || row == 3) m2 = -m2, l2 = -l2;
            if (row == 4) (src.any() < 0 ? m2 : l2) *= -1;
            Rational ml = abs_q(m2 * l2), h2 = h * h;
            if (h2 == ml) continue;
            // rows 0, 2: H^2 < M^2 L^2; rows 1, 3: H^2 > M^2 L^2
            const bool want_small = row == 0 || row == 2;
            if (row < 4 && (h2 < ml) != want_small) {
                h = want_small ? Rational(ml / (h2 + ml) * h) : Rational(h + ml);
                h.canonicalize();
                h2 = h * h;
                if ((h2 < ml) != want_small) continue;
            }
            add("row" + std::to_string(row + 1), convert_units(UnitsParams<Rational>{1, m2, l2, h2}));
        }
        Rational k = src.any(), l2 = src.nonzero();
        add("degenerate", ParameterSet<Rational>(k, l2, Rational(k * k / l2)));
        add("random", ParameterSet<Rational>(src.any(), src.any(), src.any()));
    }
    add("origin", ParameterSet<Rational>(0, 0, 0));
    add("degenerate", ParameterSet<Rational>(1, 1, 1));
    add("degenerate", ParameterSet<Rational>(0, 0, 3));
    return grid;
}

Outcome jacobi_exact(const std::vector<ParameterSet<Rational>>& grid) {
    for (const auto& p : grid)
        if (jacobi_residual(structure_constants(p)) != 0) return {false, "nonzero residual at " + describe(p)};
    return {true, std::to_string(grid.size()) + " points, residual 0"};
}

Outcome killing_equivalence(const std::vector<ParameterSet<Rational>>& grid) {
    int zeros = 0;
    for (const auto& p : grid) {
        const bool det_zero = determinant(killing_form(structure_constants(p))) == 0;
        const bool ind_zero = semisimplicity_indicator(p) == 0;
        if (det_zero != ind_zero) return {false, "mismatch at " + describe(p)};
        zeros += det_zero;
    }
    return {true, std::to_string(grid.size()) + " points, " + std::to_string(zeros) + " on the degenerate surface"};
}

Outcome table_reproduction(const std::vector<ParameterSet<Rational>>& grid) {
    const std::map<std::string, std::array<int, 6>> metrics = {{"SO(2,4)", {1, 1, -1, -1, -1, -1}},
                                                               {"SO(1,5)", {1, -1, -1, -1, -1, -1}},
                                                               {"SO(3,3)", {1, 1, 1, -1, -1, -1}}};
    std::map<std::string, Inertia> expected;
    for (const auto& [name, eta] : metrics) {
        auto in = oracle::PseudoOrthogonal(eta).killing_inertia();
        expected[name] = Inertia{in[0], in[1], in[2]};
    }
    const std::pair<ParameterSet<double>, std::string> reps[] = {
        {ParameterSet<double>(1.0, 1.0, 0.5), "SO(2,4)"},
        {ParameterSet<double>(0.5, 1.0, 1.0), "SO(1,5)"},
        {ParameterSet<double>(0.5, -1.0, -1.0), "SO(3,3)"}};
    for (const auto& [p, name] : reps) {
        const auto cls = classify(p);
        if (cls.name() != name) return {false, "representative point classified as " + cls.name()};
        const auto in = inertia(killing_form(structure_constants(p)), kDefaultTolerance);
        if (!(in == expected[name])) return {false, "float inertia " + to_string(in) + " at " + name};
    }
    std::map<std::string, int> seen;
    for (const auto& p : grid) {
        const auto cls = classify(p);
        if (!cls.semisimple()) continue;
        const auto in = inertia(killing_form(structure_constants(p)));
        if (!(in == expected[cls.name()]))
            return {false, cls.name() + " inertia " + to_string(in) + " at " + describe(p)};
        ++seen[cls.name()];
    }
    std::string detail = "oracle inertia";
    for (const auto& [name, in] : expected) detail += " " + name + to_string(in) + " x" + std::to_string(seen[name]);
    return {true, detail};
}

Outcome embedding(const std::vector<ParameterSet<Rational>>& grid) {
    int done = 0;
    double worst = 0.0;
    for (const auto& p : grid) {
        const auto cls = classify(p);
        if (!cls.semisimple()) continue;
        const auto emb = pseudo_orthogonal_embedding(p);
        const auto fresh = max_deviation(transform_constants(structure_constants(to_float(p)), emb.basis_map),
                                         pseudo_orthogonal_constants<double>(emb.six_metric));
        if (!(fresh < 1e-9)) return {false, "deviation " + std::to_string(fresh) + " at " + describe(p)};
        if (!(emb.algebra_class() == cls)) return {false, "six-metric signature disagrees at " + describe(p)};
        worst = std::max(worst, fresh);
        if (++done == 60) break;
    }
    if (done < 20) return {false, "only " + std::to_string(done) + " semisimple points"};
    std::ostringstream s;
    s << done << " embeddings, max deviation " << worst;
    return {true, s.str()};
}

Outcome casimir_centrality(const std::vector<ParameterSet<Rational>>& grid) {
    double worst_k2 = 0.0;
    for (const auto& p : grid) {
        const auto pf = to_float(p);
        const auto rep = adjoint_representation(structure_constants(pf));
        const auto report = casimir_k2(rep, pf);
        worst_k2 = std::max(worst_k2, report.centrality_residual);
        if (!(report.centrality_residual < 1e-9)) return {false, "K2 residual at " + describe(p)};
        if (classify(p).semisimple() && !report.scalar_value) return {false, "K2 not scalar at " + describe(p)};
    }
    std::map<std::string, int> per_class;
    double worst_eps = 0.0;
    for (const auto& p : grid) {
        const auto cls = classify(p);
        if (!cls.semisimple() || per_class[cls.name()] >= 3) continue;
        const auto pf = to_float(p);
        const auto rep = adjoint_representation(structure_constants(pf));
        const auto emb = pseudo_orthogonal_embedding(pf);
        for (auto kind : {EpsCasimir::K1, EpsCasimir::K3}) {
            const double r = casimir_eps(rep, emb, kind).centrality_residual;
            if (!(r < 1e-9)) return {false, "K1/K3 residual at " + describe(p)};
            worst_eps = std::max(worst_eps, r);
        }
        ++per_class[cls.name()];
    }
    for (const char* name : {"SO(2,4)", "SO(1,5)", "SO(3,3)"})
        if (per_class[name] < 3) return {false, std::string("fewer than 3 K1/K3 points for ") + name};
    std::ostringstream s;
    s << "K2 over " << grid.size() << " points (max " << worst_k2 << "), K1/K3 at 9 points (max " << worst_eps << ")";
    return {true, s.str()};
}

Outcome saturation() {
    const auto rep = spinor_momentum_rep(4.0);
    const auto r = robertson(rep, spin_up_state(rep), G::P(1), G::P(2));
    const double tol = 1e-12;
    if (std::abs(r.delta_a - 1.0) > tol || std::abs(r.delta_b - 1.0) > tol || std::abs(r.bound - 1.0) > tol ||
        std::abs(r.delta_a * r.delta_b - r.bound) > tol)
        return {false, "spin-up state not saturated"};
    std::mt19937_64 rng(7);
    std::normal_distribution<double> n;
    int violations = 0;
    for (int k = 0; k < 10000; ++k) {
        Eigen::VectorXcd v(4);
        for (int c = 0; c < 4; ++c) v(c) = Complex(n(rng), n(rng));
        try {
            robertson(rep, StateVector::normalized(v), G::P(1), G::P(2));
        } catch (const ConsistencyError&) {
            ++violations;
        }
    }
    if (violations) return {false, std::to_string(violations) + " violations in 10000 random states"};
    return {true, "dp1 = dp2 = bound = 1, 10000 random states, 0 violations"};
}

Outcome mass_pipeline() {
    const double mu = mu_s_from_masses(MassInputs(316.0, 2.0));
    if (mu != 157.0) return {false, "|mu_s| = " + format_double(mu)};
    const auto ev = dgl_spectrum(2.0, DGLOptions(mu));
    const double want[4] = {316, 316, 312, 312};
    for (int k = 0; k < 4; ++k)
        if (ev[k] != Complex(want[k], 0.0))
            return {false, "eigenvalue " + format_double(ev[k].real()) + "+" + format_double(ev[k].imag()) + "i"};
    return {true, "|mu_s| = 157, spectrum {316, 316, 312, 312}"};
}

Outcome canonical_contraction() {
    const auto t = structure_constants(ParameterSet<Rational>(0, 0, 0));
    if (!(t == oracle::canonical_by_hand())) return {false, "tensor differs from the hand-written one"};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (!t.terms(G::P(i).index(), G::P(j).index()).empty() || !t.terms(G::X(i).index(), G::X(j).index()).empty())
                return {false, "[p, p] or [x, x] nonzero"};
            const auto px = t.terms(G::P(i).index(), G::X(j).index());
            const bool ok = i == j ? px.size() == 1 && px[0].index == G::Id().index() && px[0].value == MinkowskiMetric::g(i, j)
                                   : px.empty();
            if (!ok) return {false, "[p_i, x_j] != i g_ij I"};
        }
    return {true, "entrywise equal"};
}

Outcome cli_determinism() {
    const std::vector<std::string> base = {"scan", "--kappa", "1:1:1", "--lambda2", "-2:2:5", "--mu2", "-2:2:5",
                                           "--format", "csv"};
    std::ifstream in(std::filesystem::path(PHASEALG_GOLDEN_DIR) / "scan_example.csv", std::ios::binary);
    const std::string golden((std::istreambuf_iterator<char>(in)), {});
    if (golden.empty()) return {false, "golden file missing"};
    for (const char* threads : {"1", "1", "2", "4", "8"}) {
        auto args = base;
        args.insert(args.end(), {"--threads", threads});
        std::ostringstream out, err;
        if (cli::run(args, out, err) != 0) return {false, "scan failed: " + err.str()};
        if (out.str() != golden) return {false, std::string("output differs from golden at --threads ") + threads};
    }
    return {true, "5 runs byte-identical to golden"};
}

}  // namespace

int main() {
    std::map<std::string, int> counts;
    const auto grid = build_grid(counts);
    std::cout << "grid: " << grid.size() << " points;";
    for (const auto& [region, n] : counts) std::cout << " " << region << "=" << n;
    std::cout << "\n";

    struct Criterion {
        int id;
        std::string name;
        double limit_s;
        std::function<Outcome()> check;
    };
    const std::vector<Criterion> criteria = {
        {1, "Jacobi identity, exact", 60, [&] { return jacobi_exact(grid); }},
        {2, "det Killing = 0 iff lambda^2 mu^2 - kappa^2 = 0, exact", 120, [&] { return killing_equivalence(grid); }},
        {3, "classification and Killing inertia vs so(p,q) oracle", 0, [&] { return table_reproduction(grid); }},
        {4, "pseudo-orthogonal embedding", 0, [&] { return embedding(grid); }},
        {5, "Casimir centrality", 0, [&] { return casimir_centrality(grid); }},
        {6, "uncertainty saturation at mu^2 = 4", 0, saturation},
        {7, "constituent/current mass pipeline", 0, mass_pipeline},
        {8, "canonical contraction", 0, canonical_contraction},
        {9, "scan determinism", 10, cli_determinism},
    };

    bool all = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_s > 0 && secs >= c.limit_s) {
            o.pass = false;
            o.detail += "; over the " + format_double(c.limit_s) + " s limit";
        }
        all = all && o.pass;
        std::ostringstream t;
        t.precision(3);
        t << std::fixed << secs;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " [" << o.detail << "] ("
                  << t.str() << " s)" << std::endl;
    }
    return all ? 0 : 1;
}
