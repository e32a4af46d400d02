#pragma once

// Command-line front end. `run` is the whole program; tools/phasealg.cpp only
// forwards argv to it so the tests can drive it in-process.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "phasealg/casimir.hpp"
#include "phasealg/classify.hpp"
#include "phasealg/phenomenology.hpp"
#include "phasealg/spinor.hpp"

namespace phasealg::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kSuccess = 0, kInvalidInput = 1, kConsistencyFailure = 2 };

/// One result: the JSON document plus the same data as rows for csv/table.
struct Output {
    Json json;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::string table_text;  // overrides the generic table when non-empty
};

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string render_csv(const Output& o) {
    std::string out;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out += ',';
            out += csv_escape(cells[i]);
        }
        out += '\n';
    };
    line(o.columns);
    for (const auto& r : o.rows) line(r);
    return out;
}

inline std::string render_table(const Output& o) {
    if (!o.table_text.empty()) return o.table_text;
    std::vector<std::size_t> width(o.columns.size());
    for (std::size_t c = 0; c < o.columns.size(); ++c) {
        width[c] = o.columns[c].size();
        for (const auto& r : o.rows) width[c] = std::max(width[c], r[c].size());
    }
    std::string out;
    auto line = [&](const std::vector<std::string>& cells) {
        std::string l;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c) l += "  ";
            l += cells[c] + std::string(width[c] - cells[c].size(), ' ');
        }
        while (!l.empty() && l.back() == ' ') l.pop_back();
        out += l + '\n';
    };
    line(o.columns);
    for (const auto& r : o.rows) line(r);
    return out;
}

inline std::string render(const Output& o, const std::string& format) {
    if (format == "json") return o.json.dump(2) + "\n";
    if (format == "csv") return render_csv(o);
    return render_table(o);
}

inline Json scalar_json(double x) { return Json(x); }
inline Json scalar_json(const Rational& x) { return Json(x.get_str()); }

inline Json complex_json(const Complex& z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

/// Single-row output from an ordered list of (key, json value, text).
struct RowBuilder {
    Output out;
    void add(const std::string& key, Json value, std::string text) {
        out.json[key] = std::move(value);
        out.columns.push_back(key);
        if (out.rows.empty()) out.rows.emplace_back();
        out.rows[0].push_back(std::move(text));
    }
    void add(const std::string& key, double v) { add(key, Json(v), format_double(v)); }
    void add(const std::string& key, const Rational& v) { add(key, Json(v.get_str()), v.get_str()); }
    void add(const std::string& key, int v) { add(key, Json(v), std::to_string(v)); }
    void add(const std::string& key, bool v) { add(key, Json(v), v ? "true" : "false"); }
    void add(const std::string& key, const std::string& v) { add(key, Json(v), v); }
    void add(const std::string& key, const char* v) { add(key, std::string(v)); }
    void add(const std::string& key, const std::optional<Complex>& z) {
        if (!z) {
            out.json[key] = nullptr;
            for (const char* part : {"_re", "_im"}) {
                out.columns.push_back(key + part);
                out.rows[0].push_back("");
            }
            return;
        }
        out.json[key] = complex_json(*z);
        out.columns.push_back(key + "_re");
        out.rows[0].push_back(format_double(z->real()));
        out.columns.push_back(key + "_im");
        out.rows[0].push_back(format_double(z->imag()));
    }
};

struct GridAxis {
    std::string start, stop;
    int steps = 1;
};

inline GridAxis parse_grid(const std::string& text, const std::string& name) {
    const auto a = text.find(':');
    const auto b = a == std::string::npos ? std::string::npos : text.find(':', a + 1);
    if (b == std::string::npos) throw InvalidInput("--" + name + " for scan must be start:stop:steps, got '" + text + "'");
    GridAxis g{text.substr(0, a), text.substr(a + 1, b - a - 1), 0};
    const std::string steps = text.substr(b + 1);
    try {
        std::size_t used = 0;
        g.steps = std::stoi(steps, &used);
        if (used != steps.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw InvalidInput("bad step count in '" + text + "'");
    }
    if (g.steps < 1) throw InvalidInput("grid steps must be >= 1 in '" + text + "'");
    return g;
}

template <Scalar S>
std::vector<S> grid_values(const GridAxis& g) {
    const S start = parse_scalar<S>(g.start);
    const S stop = parse_scalar<S>(g.stop);
    if (stop < start) throw InvalidInput("grid requires start <= stop");
    std::vector<S> out;
    for (int k = 0; k < g.steps; ++k) {
        if (g.steps == 1) {
            out.push_back(start);
        } else {
            S v = start + S(stop - start) * S(k) / S(g.steps - 1);
            out.push_back(v);
        }
    }
    return out;
}

struct ScanRecord {
    std::vector<std::string> cells;
    Json json;
};

class Program {
public:
    int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
        CLI::App app{"phasealg: generalized phase-space algebra toolkit", "phasealg"};
        app.require_subcommand(1);
        app.fallthrough();

        app.add_option("--kappa", kappa_, "kappa (scan: start:stop:steps)");
        app.add_option("--lambda2", lambda2_, "lambda^2 (scan: start:stop:steps)");
        app.add_option("--mu2", mu2_, "mu^2 (scan: start:stop:steps)");
        app.add_option("--f", f_, "action constant f");
        app.add_option("--M2", m2_units_, "M^2");
        app.add_option("--L2", l2_units_, "L^2");
        app.add_option("--H2", h2_units_, "H^2 (> 0)");
        app.add_option("--params", params_path_, "parameter JSON file {kappa, lambda_sq, mu_sq}");
        app.add_flag("--exact", exact_, "exact rational arithmetic (p/q inputs)");
        app.add_option("--tol", tol_, "absolute tolerance")->check(CLI::PositiveNumber);
        app.add_option("--format", format_, "output format")->check(CLI::IsMember({"json", "csv", "table"}));
        app.add_option("--output", output_path_, "output file (default stdout)");
        app.add_option("--threads", threads_, "worker threads for scan")->check(CLI::PositiveNumber);

        app.add_subcommand("jacobi", "maximum Jacobi-identity residual");
        app.add_subcommand("classify", "classify the algebra and cross-check the Killing inertia");
        app.add_subcommand("killing", "Killing-Cartan form, determinant and inertia");
        app.add_subcommand("embed", "explicit isomorphism onto so(p,q)");
        auto* casimir = app.add_subcommand("casimir", "Casimir operator on the adjoint representation");
        casimir->add_option("--kind", casimir_kind_, "k2, k1 or k3")->check(CLI::IsMember({"k1", "k2", "k3"}));
        auto* kgf = app.add_subcommand("kgf", "modified Klein-Gordon-Fock check on a representation");
        kgf->add_option("--rep", kgf_rep_, "adjoint or spinor")->check(CLI::IsMember({"adjoint", "spinor"}));
        auto* unc = app.add_subcommand("uncertainty", "Robertson uncertainty on the spinor representation");
        unc->add_option("--a", gen_a_, "first generator (e.g. P1)");
        unc->add_option("--b", gen_b_, "second generator (e.g. P2)");
        unc->add_option("--samples", samples_, "random states to test in addition to spin-up");
        unc->add_option("--seed", seed_, "random seed");
        auto* dgl = app.add_subcommand("dgl", "spectrum of the reduced Dirac-Gursey-Lee operator");
        dgl->add_option("--m0", m0_, "current mass, MeV")->required();
        dgl->add_option("--mus", mus_, "|mu_s|, MeV")->required();
        dgl->add_flag("--spin-spin", spin_spin_, "include the S_ij S^ij term");
        auto* mass = app.add_subcommand("mass", "quark-mass relation m = m0 + 2|mu_s|");
        mass->add_option("--m", m_, "constituent mass, MeV");
        mass->add_option("--m0", m0_, "current mass, MeV");
        mass->add_option("--mus", mus_, "|mu_s|, MeV");
        mass->add_option("--quarks", quarks_path_, "quark table JSON {flavor: {constituent_MeV}}");
        app.add_subcommand("scan", "classify every point of a parameter grid");

        try {
            std::vector<std::string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        } catch (const CLI::CallForHelp&) {
            out << app.help();
            return kSuccess;
        } catch (const CLI::CallForAllHelp&) {
            out << app.help("", CLI::AppFormatMode::All);
            return kSuccess;
        } catch (const CLI::ParseError& e) {
            err << "error: " << e.what() << "\n";
            return kInvalidInput;
        }

        try {
            const std::string cmd = app.get_subcommands().front()->get_name();
            Output result = dispatch(cmd);
            const std::string text = render(result, format_);
            if (output_path_.empty()) {
                out << text;
            } else {
                std::ofstream file(output_path_, std::ios::binary);
                if (!file) throw InvalidInput("cannot open output file '" + output_path_ + "'");
                file << text;
            }
            return status_;
        } catch (const ConsistencyError& e) {
            err << "internal consistency failure: " << e.what() << "\n";
            return kConsistencyFailure;
        } catch (const nlohmann::json::exception& e) {
            err << "error: " << e.what() << "\n";
            return kInvalidInput;
        } catch (const std::exception& e) {
            err << "error: " << e.what() << "\n";
            return kInvalidInput;
        }
    }

private:
    Output dispatch(const std::string& cmd) {
        if (cmd == "jacobi") return exact_ ? jacobi<Rational>() : jacobi<double>();
        if (cmd == "classify") return exact_ ? classify_cmd<Rational>() : classify_cmd<double>();
        if (cmd == "killing") return exact_ ? killing<Rational>() : killing<double>();
        if (cmd == "embed") return embed();
        if (cmd == "casimir") return casimir();
        if (cmd == "kgf") return kgf();
        if (cmd == "uncertainty") return uncertainty();
        if (cmd == "dgl") return dgl();
        if (cmd == "mass") return mass();
        if (cmd == "scan") return exact_ ? scan<Rational>() : scan<double>();
        throw InvalidInput("unknown subcommand " + cmd);
    }

    static void check_plain_number(const std::optional<std::string>& s, const char* name) {
        if (s && s->find(':') != std::string::npos)
            throw InvalidInput(std::string("--") + name + " takes a single number outside scan");
    }

    template <Scalar S>
    ParameterSet<S> parameters() const {
        S kappa(0), lambda_sq(0), mu_sq(0);
        if (!params_path_.empty()) {
            std::ifstream in(params_path_);
            if (!in) throw InvalidInput("cannot read parameter file '" + params_path_ + "'");
            const Json j = Json::parse(in);
            auto read = [&](const char* key, S& dst) {
                if (!j.contains(key)) throw InvalidInput(std::string("parameter file lacks '") + key + "'");
                const Json& v = j.at(key);
                if (v.is_string())
                    dst = parse_scalar<S>(v.get<std::string>());
                else if (v.is_number())
                    dst = parse_scalar<S>(v.dump());
                else
                    throw InvalidInput(std::string("parameter '") + key + "' must be a number or string");
            };
            read("kappa", kappa);
            read("lambda_sq", lambda_sq);
            read("mu_sq", mu_sq);
        }
        const bool units = f_ || m2_units_ || l2_units_ || h2_units_;
        if (units) {
            if (kappa_ || lambda2_ || mu2_) throw InvalidInput("give either --kappa/--lambda2/--mu2 or --f/--M2/--L2/--H2");
            if (!m2_units_ || !l2_units_ || !h2_units_) throw InvalidInput("--M2, --L2 and --H2 are all required");
            UnitsParams<S> u;
            u.f = f_ ? parse_scalar<S>(*f_) : S(1);
            u.M_sq = parse_scalar<S>(*m2_units_);
            u.L_sq = parse_scalar<S>(*l2_units_);
            u.H_sq = parse_scalar<S>(*h2_units_);
            return convert_units(u);
        }
        check_plain_number(kappa_, "kappa");
        check_plain_number(lambda2_, "lambda2");
        check_plain_number(mu2_, "mu2");
        if (kappa_) kappa = parse_scalar<S>(*kappa_);
        if (lambda2_) lambda_sq = parse_scalar<S>(*lambda2_);
        if (mu2_) mu_sq = parse_scalar<S>(*mu2_);
        return ParameterSet<S>(kappa, lambda_sq, mu_sq);
    }

    template <Scalar S>
    void add_params(RowBuilder& rb, const ParameterSet<S>& p) const {
        rb.add("kappa", p.kappa);
        rb.add("lambda_sq", p.lambda_sq);
        rb.add("mu_sq", p.mu_sq);
    }

    template <Scalar S>
    Output jacobi() {
        const auto p = parameters<S>();
        const S residual = jacobi_residual(structure_constants(p));
        RowBuilder rb;
        rb.add("mode", ScalarTraits<S>::mode_name);
        add_params(rb, p);
        rb.add("jacobi_residual", residual);
        if (!ScalarTraits<S>::is_zero(residual, tol_)) throw ConsistencyError("Jacobi identity fails: " + format_scalar(residual));
        return rb.out;
    }

    struct Classified {
        AlgebraClass cls = AlgebraClass::degenerate("");
        Inertia inertia;
    };

    /// Classification with the Killing-inertia cross-check; the indicator must
    /// vanish exactly when the Killing form is degenerate.
    template <Scalar S>
    static Classified classify_checked(const ParameterSet<S>& p, const SymmetricForm<S>& k, double tol) {
        Classified c{classify(p, tol), inertia(k, tol)};
        if (c.cls.semisimple()) {
            auto [pp, qq] = c.cls.signature();
            if (!(c.inertia == so_pq_killing_inertia(pp, qq)))
                throw ConsistencyError(c.cls.name() + " but Killing inertia is " + to_string(c.inertia));
        } else if (c.inertia.n_zero == 0) {
            throw ConsistencyError("indicator vanishes but Killing form is nondegenerate");
        }
        return c;
    }

    template <Scalar S>
    Output classify_cmd() {
        const auto p = parameters<S>();
        const auto k = killing_form(structure_constants(p));
        const Classified c = classify_checked(p, k, tol_);
        RowBuilder rb;
        rb.add("class", c.cls.name());
        rb.add("indicator", semisimplicity_indicator(p));
        rb.add("det_killing", determinant(k));
        rb.add("sig_pos", c.inertia.n_pos);
        rb.add("sig_neg", c.inertia.n_neg);
        rb.add("sig_zero", c.inertia.n_zero);
        add_params(rb, p);
        rb.add("mode", ScalarTraits<S>::mode_name);
        if (!c.cls.semisimple()) rb.add("reason", c.cls.reason());
        return rb.out;
    }

    template <Scalar S>
    Output killing() {
        const auto p = parameters<S>();
        const auto k = killing_form(structure_constants(p));
        const Inertia in = inertia(k, tol_);
        const S det = determinant(k);
        Output o;
        o.json["mode"] = ScalarTraits<S>::mode_name;
        o.json["kappa"] = scalar_json(p.kappa);
        o.json["lambda_sq"] = scalar_json(p.lambda_sq);
        o.json["mu_sq"] = scalar_json(p.mu_sq);
        o.json["det_killing"] = scalar_json(det);
        o.json["sig_pos"] = in.n_pos;
        o.json["sig_neg"] = in.n_neg;
        o.json["sig_zero"] = in.n_zero;
        o.columns.push_back("generator");
        Json names = Json::array();
        for (int a = 0; a < kNumGenerators; ++a) {
            names.push_back(GeneratorIndex::from_index(a).name());
            o.columns.push_back(GeneratorIndex::from_index(a).name());
        }
        o.json["generators"] = names;
        Json matrix = Json::array();
        for (int a = 0; a < kNumGenerators; ++a) {
            Json row = Json::array();
            std::vector<std::string> cells{GeneratorIndex::from_index(a).name()};
            for (int b = 0; b < kNumGenerators; ++b) {
                row.push_back(scalar_json(k(a, b)));
                cells.push_back(format_scalar(k(a, b)));
            }
            matrix.push_back(row);
            o.rows.push_back(cells);
        }
        o.json["matrix"] = matrix;
        o.table_text = render_table(o) + "det_killing = " + format_scalar(det) + "\ninertia (n+, n-, n0) = " + to_string(in) + "\n";
        return o;
    }

    static std::string j_name(int n) {
        const auto pairs = detail::six_pairs();
        return "J" + std::to_string(pairs[n].first) + std::to_string(pairs[n].second);
    }

    Output embed() {
        const auto p = parameters<double>();
        const Embedding emb = pseudo_orthogonal_embedding(p, tol_);
        Output o;
        o.json["class"] = emb.algebra_class().name();
        o.json["six_metric"] = emb.six_metric;
        o.json["sigma"] = emb.sigma;
        o.json["max_deviation"] = emb.max_deviation;
        o.columns.push_back("J");
        for (int a = 0; a < kNumGenerators; ++a) o.columns.push_back(GeneratorIndex::from_index(a).name());
        Json map = Json::object();
        for (int n = 0; n < kNumPairs6; ++n) {
            std::vector<std::string> cells{j_name(n)};
            Json row = Json::array();
            for (int a = 0; a < kNumGenerators; ++a) {
                row.push_back(emb.basis_map(n, a));
                cells.push_back(format_double(emb.basis_map(n, a)));
            }
            map[j_name(n)] = row;
            o.rows.push_back(cells);
        }
        o.json["basis_map"] = map;
        std::string metric;
        for (int e : emb.six_metric) metric += (metric.empty() ? "" : ", ") + std::to_string(e);
        o.table_text = "class = " + emb.algebra_class().name() + "\nsix_metric = diag(" + metric +
                       ")\nmax_deviation = " + format_double(emb.max_deviation) + "\n" + render_table(o);
        return o;
    }

    Output casimir() {
        const auto p = parameters<double>();
        const auto rep = adjoint_representation(structure_constants(p));
        CasimirReport report;
        if (casimir_kind_ == "k2") {
            report = casimir_k2(rep, p, tol_);
        } else {
            const Embedding emb = pseudo_orthogonal_embedding(p, tol_);
            report = casimir_eps(rep, emb, casimir_kind_ == "k1" ? EpsCasimir::K1 : EpsCasimir::K3, tol_);
        }
        if (report.centrality_residual > tol_)
            throw ConsistencyError("Casimir is not central (residual " + format_double(report.centrality_residual) + ")");
        RowBuilder rb;
        rb.add("kind", casimir_kind_);
        rb.add("representation", "adjoint");
        add_params(rb, p);
        rb.add("centrality_residual", report.centrality_residual);
        rb.add("scalar", report.scalar_value.has_value());
        rb.add("scalar_value", report.scalar_value);
        return rb.out;
    }

    Output kgf() {
        const auto p = parameters<double>();
        KgfResult r;
        if (kgf_rep_ == "adjoint") {
            r = kgf_check(adjoint_representation(structure_constants(p)), p, tol_);
        } else {
            r = kgf_check(spinor_momentum_rep(p.mu_sq), p, tol_);
        }
        RowBuilder rb;
        rb.add("representation", kgf_rep_);
        add_params(rb, p);
        rb.add("scalar", r.scalar);
        rb.add("eigenvalue", r.eigenvalue);
        rb.add("satisfied", r.satisfied);
        return rb.out;
    }

    Output uncertainty() {
        const auto p = parameters<double>();
        const auto rep = spinor_momentum_rep(p.mu_sq);
        const auto a = GeneratorIndex::parse(gen_a_);
        const auto b = GeneratorIndex::parse(gen_b_);
        const UncertaintyReport r = robertson(rep, spin_up_state(rep), a, b, tol_);

        int violations = 0;
        std::mt19937_64 rng(seed_);
        std::normal_distribution<double> normal;
        for (int s = 0; s < samples_; ++s) {
            Eigen::VectorXcd v(rep.dim());
            for (Eigen::Index k = 0; k < v.size(); ++k) v(k) = Complex(normal(rng), normal(rng));
            try {
                robertson(rep, StateVector::normalized(v), a, b, tol_);
            } catch (const ConsistencyError&) {
                ++violations;
            }
        }
        if (violations > 0) throw ConsistencyError(std::to_string(violations) + " Robertson violations");

        RowBuilder rb;
        rb.add("a", a.name());
        rb.add("b", b.name());
        rb.add("mu_sq", p.mu_sq);
        rb.add("mean_a", r.mean_a);
        rb.add("mean_b", r.mean_b);
        rb.add("delta_a", r.delta_a);
        rb.add("delta_b", r.delta_b);
        rb.add("product", r.delta_a * r.delta_b);
        rb.add("commutator_expectation", std::optional<Complex>(r.commutator_expectation));
        rb.add("bound", r.bound);
        rb.add("satisfied", r.satisfied);
        rb.add("samples", samples_);
        rb.add("violations", violations);
        return rb.out;
    }

    Output dgl() {
        const DGLOptions opts(mus_.value(), spin_spin_);
        const auto ev = dgl_spectrum(m0_.value(), opts);
        Output o;
        o.json["m0"] = *m0_;
        o.json["mu_s_abs"] = *mus_;
        o.json["spin_spin"] = spin_spin_;
        Json list = Json::array();
        o.columns = {"index", "re", "im"};
        for (std::size_t k = 0; k < ev.size(); ++k) {
            list.push_back(complex_json(ev[k]));
            o.rows.push_back({std::to_string(k), format_double(ev[k].real()), format_double(ev[k].imag())});
        }
        o.json["eigenvalues"] = list;
        o.json["positive_energy_mass"] = ev.front().real();
        std::string text = "eigenvalues (MeV):";
        for (const auto& z : ev) text += " " + format_double(z.real()) + (z.imag() != 0.0 ? "+" + format_double(z.imag()) + "i" : "");
        o.table_text = text + "\npositive-energy mass = " + format_double(ev.front().real()) + " MeV\n";
        return o;
    }

    Output mass() {
        if (!quarks_path_.empty()) {
            if (!mus_) throw InvalidInput("--quarks requires --mus");
            std::ifstream in(quarks_path_);
            if (!in) throw InvalidInput("cannot read quark table '" + quarks_path_ + "'");
            const Json table = Json::parse(in);
            if (!table.is_object()) throw InvalidInput("quark table must be a JSON object");
            Output o;
            o.columns = {"flavor", "constituent_MeV", "current_MeV"};
            o.json["mu_s_abs"] = *mus_;
            Json flavors = Json::object();
            std::string text;
            for (const auto& [flavor, entry] : table.items()) {
                if (!entry.contains("constituent_MeV") || !entry.at("constituent_MeV").is_number())
                    throw InvalidInput("flavor '" + flavor + "' lacks numeric constituent_MeV");
                const double m = entry.at("constituent_MeV").get<double>();
                const double m0 = current_mass(m, *mus_);
                flavors[flavor] = Json{{"constituent_MeV", m}, {"current_MeV", m0}};
                o.rows.push_back({flavor, format_double(m), format_double(m0)});
                text += flavor + ": m0 = " + format_double(m0) + " MeV\n";
            }
            o.json["flavors"] = flavors;
            o.table_text = text;
            return o;
        }
        if (!m_) throw InvalidInput("mass needs --m with --m0 or --mus (or --quarks with --mus)");
        RowBuilder rb;
        if (m0_) {
            const double mu = mu_s_from_masses(MassInputs(*m_, *m0_));
            rb.add("m", *m_);
            rb.add("m0", *m0_);
            rb.add("mu_s_abs", mu);
            rb.out.table_text = "|mu_s| = " + format_double(mu) + " MeV\n";
        } else if (mus_) {
            const double m0 = current_mass(*m_, *mus_);
            rb.add("m", *m_);
            rb.add("mu_s_abs", *mus_);
            rb.add("m0", m0);
            rb.out.table_text = "m0 = " + format_double(m0) + " MeV\n";
        } else {
            throw InvalidInput("mass needs --m0 or --mus together with --m");
        }
        return rb.out;
    }

    template <Scalar S>
    Output scan() {
        if (!kappa_ || !lambda2_ || !mu2_) throw InvalidInput("scan needs --kappa, --lambda2 and --mu2 grids");
        const auto ks = grid_values<S>(parse_grid(*kappa_, "kappa"));
        const auto ls = grid_values<S>(parse_grid(*lambda2_, "lambda2"));
        const auto ms = grid_values<S>(parse_grid(*mu2_, "mu2"));
        const std::size_t total = ks.size() * ls.size() * ms.size();
        std::vector<ScanRecord> records(total);

        const double tol = tol_;
        auto evaluate = [&](std::size_t n) {
            const std::size_t i = n / (ls.size() * ms.size());
            const std::size_t j = (n / ms.size()) % ls.size();
            const std::size_t k = n % ms.size();
            const ParameterSet<S> p(ks[i], ls[j], ms[k]);
            const auto kf = killing_form(structure_constants(p));
            const Classified c = classify_checked(p, kf, tol);
            const S indicator = semisimplicity_indicator(p);
            const S det = determinant(kf);
            if (ScalarTraits<S>::is_zero(indicator, tol) != (c.inertia.n_zero > 0))
                throw ConsistencyError("indicator/degeneracy mismatch at grid point " + std::to_string(n));
            ScanRecord& r = records[n];
            r.cells = {format_scalar(p.kappa), format_scalar(p.lambda_sq), format_scalar(p.mu_sq), c.cls.name(),
                       format_scalar(indicator), format_scalar(det), std::to_string(c.inertia.n_pos),
                       std::to_string(c.inertia.n_neg), std::to_string(c.inertia.n_zero)};
            r.json = Json{{"kappa", scalar_json(p.kappa)},
                          {"lambda_sq", scalar_json(p.lambda_sq)},
                          {"mu_sq", scalar_json(p.mu_sq)},
                          {"class", c.cls.name()},
                          {"indicator", scalar_json(indicator)},
                          {"det_killing", scalar_json(det)},
                          {"sig_pos", c.inertia.n_pos},
                          {"sig_neg", c.inertia.n_neg},
                          {"sig_zero", c.inertia.n_zero}};
        };

        const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1, threads_), std::max<std::size_t>(total, 1)));
        std::atomic<std::size_t> next{0};
        std::vector<std::exception_ptr> errors(workers);
        auto work = [&](unsigned w) {
            try {
                for (std::size_t n = next++; n < total; n = next++) evaluate(n);
            } catch (...) {
                errors[w] = std::current_exception();
                next = total;
            }
        };
        if (workers == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
            for (auto& t : pool) t.join();
        }
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);

        Output o;
        o.columns = {"kappa", "lambda_sq", "mu_sq", "class", "indicator", "det_killing", "sig_pos", "sig_neg", "sig_zero"};
        o.json = Json::array();
        for (auto& r : records) {
            o.rows.push_back(std::move(r.cells));
            o.json.push_back(std::move(r.json));
        }
        return o;
    }

    std::optional<std::string> kappa_, lambda2_, mu2_, f_, m2_units_, l2_units_, h2_units_;
    std::string params_path_, output_path_, quarks_path_;
    bool exact_ = false;
    double tol_ = kDefaultTolerance;
    std::string format_ = "table";
    int threads_ = 1;
    std::string casimir_kind_ = "k2";
    std::string kgf_rep_ = "adjoint";
    std::string gen_a_ = "P1", gen_b_ = "P2";
    int samples_ = 0;
    std::uint64_t seed_ = 1;
    std::optional<double> m0_, mus_, m_;
    bool spin_spin_ = false;
    int status_ = kSuccess;
};

/// Runs the command line (args exclude the program name). Returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Program program;
    return program.run(args, out, err);
}

}  // namespace phasealg::cli
