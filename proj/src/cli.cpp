#include "trinion/cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>

#include "trinion/integrable.hpp"
#include "trinion/serialize.hpp"

namespace trinion::cli {

namespace {

using serialize::json;
using Matrix = matgroup::Matrix;

struct RunConfig {
    std::uint64_t seed = 1;
    int n = 2;
    int samples = 100;
    std::vector<std::string> tolerance_overrides;
    std::string input_path;
    std::string output_path;

    double tolerance(const std::string& key, double fallback) const {
        for (const std::string& kv : tolerance_overrides) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos) throw SchemaError("--tolerance expects KEY=VAL");
            if (kv.substr(0, eq) == key) {
                try {
                    return std::stod(kv.substr(eq + 1));
                } catch (const std::exception&) {
                    throw SchemaError("malformed tolerance value in '" + kv + "'");
                }
            }
        }
        return fallback;
    }
};

std::optional<json> load_input(const RunConfig& config) {
    if (config.input_path.empty()) return std::nullopt;
    std::ifstream in(config.input_path);
    if (!in) throw SchemaError("cannot open input file '" + config.input_path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("malformed JSON input: ") + e.what());
    }
}

void emit(const RunConfig& config, const json& report) {
    const std::string text = report.dump(2) + "\n";
    std::cout << text;
    if (!config.output_path.empty()) {
        std::ofstream out(config.output_path);
        if (!out) throw Error("cannot open output file '" + config.output_path + "'");
        out << text;
    }
}

dk::NormalizedTriple random_triple(int n, std::mt19937_64& rng) {
    const matgroup::GroupElement u1 = matgroup::random_unitary(n, rng);
    const matgroup::GroupElement u2 = matgroup::random_unitary(n, rng);
    const alcove::TorusElement v1 = alcove::torus_exp(alcove::random_interior(n, rng));
    const alcove::TorusElement v2 = alcove::torus_exp(alcove::random_interior(n, rng));
    return dk::normalize_frame(dk::complete_triple(u1, v1, u2, v2));
}

int finish(const RunConfig& config, json report, bool pass) {
    report["pass"] = pass;
    emit(config, report);
    return pass ? 0 : 1;
}

int cmd_decompose(const RunConfig& config) {
    json report{{"command", "decompose"}, {"seed", config.seed}, {"n", config.n},
                {"samples", config.samples}};
    const std::optional<json> input = load_input(config);
    if (input && input->contains("matrix")) {
        const Matrix m = serialize::json_to_matrix((*input)["matrix"]);
        try {
            for (auto [name, order] :
                 {std::pair{"upper_diag_lower", matgroup::GaussOrder::UpperDiagLower},
                  std::pair{"lower_diag_upper", matgroup::GaussOrder::LowerDiagUpper}}) {
                const matgroup::GaussFactors f = matgroup::gauss_decompose(m, order);
                report[name] = json{{"upper", serialize::matrix_to_json(f.upper_unipotent)},
                                    {"diagonal", serialize::matrix_to_json(f.diagonal)},
                                    {"lower", serialize::matrix_to_json(f.lower_unipotent)}};
            }
        } catch (const SingularMinor& e) {
            report["error"] = e.what();
            return finish(config, std::move(report), false);
        }
        return finish(config, std::move(report), true);
    }

    std::mt19937_64 rng(config.seed);
    double worst_reconstruct = 0.0;
    double worst_roundtrip = 0.0;
    for (int s = 0; s < config.samples; ++s) {
        const matgroup::GroupElement g = matgroup::random_generic(config.n, rng);
        for (matgroup::GaussOrder order :
             {matgroup::GaussOrder::UpperDiagLower, matgroup::GaussOrder::LowerDiagUpper}) {
            const matgroup::GaussFactors f = matgroup::gauss_decompose(g, order);
            const double res = matgroup::inf_norm(f.reconstruct() - g.matrix()) /
                               std::max(1.0, matgroup::inf_norm(g.matrix()));
            worst_reconstruct = std::max(worst_reconstruct, res);
        }
        const alcove::AlcovePoint a = alcove::random_interior(config.n, rng);
        const alcove::AlcovePoint back = alcove::torus_log(alcove::torus_exp(a));
        for (int i = 0; i < config.n; ++i) {
            worst_roundtrip = std::max(worst_roundtrip, std::abs(back[i] - a[i]));
        }
    }
    const double reconstruct_tol = config.tolerance("reconstruct", 1e-10);
    const double roundtrip_tol = config.tolerance("roundtrip", 1e-9);
    report["max_residuals"] = json{{"gauss_reconstruct", worst_reconstruct},
                                   {"torus_roundtrip", worst_roundtrip}};
    report["tolerances"] =
        json{{"reconstruct", reconstruct_tol}, {"roundtrip", roundtrip_tol}};
    return finish(config, std::move(report),
                  worst_reconstruct <= reconstruct_tol && worst_roundtrip <= roundtrip_tol);
}

int cmd_hamiltonians(const RunConfig& config) {
    json report{{"command", "hamiltonians"}, {"seed", config.seed}, {"n", config.n},
                {"samples", config.samples}};
    std::mt19937_64 rng(config.seed);
    const int n = config.n;
    double worst_unit = 0.0;
    double worst_condition = 0.0;
    bool counts_ok = true;
    for (int s = 0; s < config.samples; ++s) {
        const dk::NormalizedTriple t = random_triple(n, rng);
        const auto locals = integrable::local_hamiltonians(t);
        const auto torus = integrable::torus_hamiltonians(t.v3());
        counts_ok = counts_ok && static_cast<int>(locals.size() + torus.size()) ==
                                     n * (n - 1) / 2 + (n - 1);
        const integrable::CoefficientMatrix cm = integrable::coefficient_matrix(t);
        for (Eigen::Index p = 0; p < cm.C.rows(); ++p) {
            worst_unit = std::max(worst_unit, std::abs(cm.C(p, p) - matgroup::Complex(1.0)));
        }
        const integrable::PairingMatrix pm = integrable::pairing_matrix(t);
        worst_condition = std::max(worst_condition, pm.condition_number);
        if (s == 0) {
            json locals_json = json::object();
            for (const auto& [idx, value] : locals) {
                locals_json[std::to_string(idx.i) + "," + std::to_string(idx.j)] =
                    serialize::complex_to_json(value);
            }
            json torus_json = json::array();
            for (const auto& v : torus) torus_json.push_back(serialize::complex_to_json(v));
            json diag_json = json::array();
            for (const auto& v : integrable::diagonal_hamiltonians(t)) {
                diag_json.push_back(serialize::complex_to_json(v));
            }
            report["example"] = json{{"local", std::move(locals_json)},
                                     {"torus", std::move(torus_json)},
                                     {"diagonal", std::move(diag_json)}};
        }
    }
    const double unit_tol = config.tolerance("unit_diagonal", 1e-10);
    report["max_residuals"] = json{{"unit_diagonal", worst_unit}};
    report["max_pairing_condition"] = worst_condition;
    report["count_identity"] = counts_ok;
    return finish(config, std::move(report), counts_ok && worst_unit <= unit_tol);
}

int cmd_poisson_check(const RunConfig& config) {
    json report{{"command", "poisson-check"}, {"seed", config.seed}, {"n", config.n},
                {"samples", config.samples}};
    std::mt19937_64 rng(config.seed);
    const int n = config.n;
    double local_local = 0.0, local_torus = 0.0, local_diagonal = 0.0;
    for (int s = 0; s < config.samples; ++s) {
        const dk::NormalizedTriple t = random_triple(n, rng);
        std::vector<dk::TangentTriple> fields;
        std::vector<double> norms;
        for (auto [i, j] : integrable::upper_pairs(n)) {
            fields.push_back(
                integrable::hamiltonian_field(t, integrable::HamiltonianIndex::local(i, j)));
            norms.push_back(std::max(1.0, matgroup::inf_norm(fields.back().mu_minus)));
        }
        const Matrix zero = Matrix::Zero(n, n);
        for (size_t a = 0; a < fields.size(); ++a) {
            for (size_t b = 0; b < fields.size(); ++b) {
                local_local = std::max(local_local, std::abs(dk::two_form(t, fields[a], fields[b])) /
                                                        (norms[a] * norms[b]));
            }
            for (int l = 1; l <= n; ++l) {
                if (l < n) {
                    Matrix delta = Matrix::Zero(n, n);
                    delta(l - 1, l - 1) = 1.0;
                    local_torus = std::max(
                        local_torus,
                        std::abs(dk::two_form(t, fields[a], dk::TangentTriple(delta, zero, zero))) /
                            norms[a]);
                }
                Matrix z = Matrix::Zero(n, n);
                z(l - 1, l - 1) = 1.0;
                local_diagonal = std::max(
                    local_diagonal,
                    std::abs(dk::two_form(t, fields[a], dk::TangentTriple(zero, zero, z))) /
                        norms[a]);
            }
        }
    }
    const double bracket_tol = config.tolerance("bracket", 1e-8);
    const double worst = std::max({local_local, local_torus, local_diagonal});
    report["max_residuals"] = json{{"local_local", local_local},
                                   {"local_torus", local_torus},
                                   {"local_diagonal", local_diagonal}};
    report["max_bracket_residual"] = worst;
    report["tolerances"] = json{{"bracket", bracket_tol}};
    return finish(config, std::move(report), worst <= bracket_tol);
}

int cmd_recover(const RunConfig& config) {
    json report{{"command", "recover"}, {"seed", config.seed}, {"n", config.n},
                {"samples", config.samples}};
    std::mt19937_64 rng(config.seed);
    const int n = config.n;
    double worst = 0.0;
    for (int s = 0; s < config.samples; ++s) {
        const dk::NormalizedTriple t = random_triple(n, rng);
        const volumes::VolumeTable table = volumes::hG(t);
        Matrix d1 = Matrix::Zero(n, n), d3 = Matrix::Zero(n, n);
        for (int k = 0; k < n; ++k) {
            d1(k, k) = t.b1_plus()(k, k);
            d3(k, k) = t.b3_plus()(k, k);
        }
        const Matrix n3 = volumes::recover_unipotent(table, d1, d3);
        Matrix b3 = n3;
        for (int j = 0; j < n; ++j) b3.col(j) *= d3(j, j);
        for (const auto& [idx, value] : table.values) {
            const matgroup::Complex back = volumes::hG_closed_form(idx, t.b1_plus(), b3);
            worst = std::max(worst, std::abs(back - value) / std::max(1.0, std::abs(value)));
        }
    }
    const double recover_tol = config.tolerance("recover", 1e-9);
    report["max_residuals"] = json{{"round_trip", worst}};
    report["tolerances"] = json{{"recover", recover_tol}};
    return finish(config, std::move(report), worst <= recover_tol);
}

int cmd_okounkov(const RunConfig& config) {
    json report{{"command", "okounkov"}};
    const std::optional<json> input = load_input(config);
    okounkov::MonomialSystem system;
    int m_max = 3;
    if (input) {
        system = serialize::json_to_system(*input);
        if (input->contains("m_max")) m_max = (*input)["m_max"].get<int>();
        if (m_max < 1) throw SchemaError("m_max must be positive");
    } else {
        // Default: the blown-up plane system x, y, x^2, xy, y^2.
        system.d = 2;
        for (const okounkov::ExponentVector& e :
             {okounkov::ExponentVector{1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}}) {
            system.generators.push_back(okounkov::make_polynomial(2, {{e, 1}}));
        }
    }
    const okounkov::RationalPolytope body = okounkov::okounkov_body(system, m_max);
    report["d"] = system.d;
    report["m_max"] = m_max;
    report["body"] = serialize::polytope_to_json(body);
    report["stabilized"] = okounkov::body_stabilized(system, m_max);
    if (!body.vertices.empty()) {
        report["lattice_count_scale1"] = okounkov::lattice_count(body, 1);
    }
    return finish(config, std::move(report), !body.vertices.empty());
}

int cmd_glue(const RunConfig& config) {
    json report{{"command", "glue"}, {"seed", config.seed}, {"n", config.n}};
    const std::optional<json> input = load_input(config);
    int genus = 2;
    if (input && input->contains("genus")) genus = (*input)["genus"].get<int>();
    report["genus"] = genus;

    const glue::TrinionGraph graph = glue::trinion_graph(genus);
    report["graph"] = serialize::graph_to_json(graph);
    const bool counts_ok = graph.trinions == 2 * genus - 2 &&
                           static_cast<int>(graph.edges.size()) == 3 * genus - 3 &&
                           3 * graph.trinions == 2 * static_cast<int>(graph.edges.size());
    report["count_identity"] = counts_ok;

    std::mt19937_64 rng(config.seed);
    double worst_residual = 0.0;
    for (int s = 0; s < config.samples; ++s) {
        const alcove::AlcovePoint a = alcove::random_interior(config.n, rng);
        worst_residual =
            std::max(worst_residual, glue::glue_residual(a, alcove::glue_partner(a)));
    }
    report["max_residuals"] = json{{"partner_residual", worst_residual}};

    bool polytope_ok = true;
    if (genus == 2) {
        okounkov::RationalPolytope trinion_polytope;
        if (input && input->contains("trinion_polytope")) {
            trinion_polytope = serialize::json_to_polytope((*input)["trinion_polytope"]);
        } else {
            // Default rank-2 trinion polytope: the standard 3-simplex.
            trinion_polytope.d = 3;
            trinion_polytope.vertices = {
                {okounkov::Rational(0), okounkov::Rational(0), okounkov::Rational(0)},
                {okounkov::Rational(1), okounkov::Rational(0), okounkov::Rational(0)},
                {okounkov::Rational(0), okounkov::Rational(1), okounkov::Rational(0)},
                {okounkov::Rational(0), okounkov::Rational(0), okounkov::Rational(1)}};
        }
        const okounkov::RationalPolytope glued =
            glue::assemble_moment_polytope(graph, trinion_polytope);
        report["glued_polytope"] = serialize::polytope_to_json(glued);
        polytope_ok = !glued.vertices.empty();
    }
    return finish(config, std::move(report), counts_ok && worst_residual == 0.0 && polytope_ok);
}

int cmd_validate_sheaf(const RunConfig& config) {
    json report{{"command", "validate-sheaf"}};
    const std::optional<json> input = load_input(config);
    if (!input) throw SchemaError("validate-sheaf requires --input");
    const glue::FramedSheafDescriptor d = serialize::json_to_sheaf(*input);
    report["n"] = d.n;
    try {
        glue::validate_framed_sheaf(d);
        report["valid"] = true;
        return finish(config, std::move(report), true);
    } catch (const TorsionTooLarge& e) {
        report["valid"] = false;
        report["reason"] = e.what();
    } catch (const TorsionPatternViolation& e) {
        report["valid"] = false;
        report["reason"] = e.what();
    }
    return finish(config, std::move(report), false);
}

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{"trinion moduli laboratory"};
    app.require_subcommand(1);

    RunConfig config;
    std::string command;
    for (const auto& [name, description] :
         std::vector<std::pair<std::string, std::string>>{
             {"decompose", "Gauss factorization and torus logarithm checks"},
             {"hamiltonians", "Hamiltonian tables on random normalized triples"},
             {"poisson-check", "bracket residuals of the commuting family"},
             {"recover", "determinant-table recovery round trip"},
             {"okounkov", "Okounkov body of a monomial system"},
             {"glue", "trinion graphs and glued moment polytopes"},
             {"validate-sheaf", "framed-sheaf vanishing-pattern validation"}}) {
        CLI::App* sub = app.add_subcommand(name, description);
        sub->add_option("--seed", config.seed, "random seed");
        sub->add_option("--n", config.n, "rank")->check(CLI::Range(2, 16));
        sub->add_option("--samples", config.samples, "sample count")->check(CLI::Range(1, 100000));
        sub->add_option("--tolerance", config.tolerance_overrides, "KEY=VAL override");
        sub->add_option("--input", config.input_path, "input JSON file");
        sub->add_option("--output", config.output_path, "output JSON file");
        sub->callback([&command, name = name] { command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (command == "decompose") return cmd_decompose(config);
        if (command == "hamiltonians") return cmd_hamiltonians(config);
        if (command == "poisson-check") return cmd_poisson_check(config);
        if (command == "recover") return cmd_recover(config);
        if (command == "okounkov") return cmd_okounkov(config);
        if (command == "glue") return cmd_glue(config);
        if (command == "validate-sheaf") return cmd_validate_sheaf(config);
        std::cerr << "unknown command\n";
        return 2;
    } catch (const SchemaError& e) {
        std::cout << json{{"error", e.what()}}.dump(2) << "\n";
        return 2;
    } catch (const Error& e) {
        std::cout << json{{"error", e.what()}, {"pass", false}}.dump(2) << "\n";
        return 1;
    }
}

}  // namespace trinion::cli
