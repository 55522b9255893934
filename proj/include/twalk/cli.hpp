#pragma once

// Command-line front end. Every subcommand prints machine-readable JSON (or
// CSV for `sweep`) on stdout and diagnostics on stderr. Exit status: 0 on
// success, 2 on usage or precondition errors, 1 on numeric failures.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "twalk/json_io.hpp"
#include "twalk/sweep.hpp"

namespace twalk::cli {

namespace detail {

inline std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char c : s)
        if (c != ' ' && c != '\t') out += c;
    return out;
}

inline double parse_number(const std::string& s) {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("invalid number '" + s + "'");
    return v;
}

inline int parse_int(const std::string& s) {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument("invalid integer '" + s + "'");
    return v;
}

}  // namespace detail

// Times are accepted as decimal radians or symbolically as "[k]pi[/d]"
// ("pi/2", "3pi/2", "2pi"), so the critical time pi/2 loses no precision.
inline double parse_time(const std::string& text) {
    const std::string s = detail::strip_spaces(text);
    if (s.empty()) throw std::invalid_argument("empty time");
    const std::size_t pos = s.find("pi");
    if (pos == std::string::npos) {
        try {
            return detail::parse_number(s);
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid time '" + text + "'");
        }
    }
    try {
        const std::string coef = s.substr(0, pos);
        const std::string rest = s.substr(pos + 2);
        double value = coef.empty() ? 1.0 : detail::parse_number(coef);
        value *= std::numbers::pi;
        if (!rest.empty()) {
            if (rest[0] != '/') throw std::invalid_argument("");
            value /= detail::parse_number(rest.substr(1));
        }
        return value;
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid time '" + text + "' (expected radians or [k]pi[/d])");
    }
}

inline Edge parse_edge(const std::string& text) {
    const std::string s = detail::strip_spaces(text);
    const std::size_t comma = s.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("invalid edge '" + text + "' (expected i,j)");
    return make_edge(detail::parse_int(s.substr(0, comma)), detail::parse_int(s.substr(comma + 1)));
}

// "1:2,3:4,5:6" -> vertex-disjoint pairs; empty string -> empty matching.
inline std::vector<Edge> parse_matching(const std::string& text) {
    const std::string s = detail::strip_spaces(text);
    std::vector<Edge> edges;
    if (s.empty()) return edges;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const std::size_t colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("invalid matching entry '" + item + "' (expected i:j)");
        edges.push_back(make_edge(detail::parse_int(item.substr(0, colon)),
                                  detail::parse_int(item.substr(colon + 1))));
    }
    return edges;
}

namespace detail {

inline BlockForm form_from_inputs(const std::string& word, const std::string& blocks) {
    if (word.empty() == blocks.empty())
        throw std::invalid_argument("exactly one of --word and --blocks is required");
    if (!word.empty()) return creation_to_block_form(parse_creation_sequence(word));
    return BlockForm::parse(blocks);
}

struct FormInputs {
    std::string word;
    std::string blocks;
};

inline void add_form_options(CLI::App* cmd, FormInputs& inputs) {
    cmd->add_option("--word", inputs.word, "creation sequence, e.g. 0011011");
    cmd->add_option("--blocks", inputs.blocks, "canonical block form, e.g. 2,6,4,4");
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"continuous-time quantum walks on threshold graphs"};
    app.require_subcommand(1);
    double tol = 1e-9;
    app.add_option("--tol", tol, "tolerance for modulus comparisons")->capture_default_str();

    detail::FormInputs graph_in, spectrum_in, prop_in, pst_in, bounds_in;
    std::string prop_t;
    int prop_from = 1;
    int detect_n = 0;
    std::string detect_hidden;
    std::uint64_t seed = 0;
    bool perfect = false;
    int delete_block = 0;
    int lemma_a = 0;
    int max_n = 0;
    std::string out_path;

    CLI::App* cmd_graph = app.add_subcommand("graph", "blocks, degrees and integer spectrum of a threshold graph");
    detail::add_form_options(cmd_graph, graph_in);

    CLI::App* cmd_spectrum = app.add_subcommand("spectrum", "closed-form eigenvalue/multiplicity components");
    detail::add_form_options(cmd_spectrum, spectrum_in);

    CLI::App* cmd_prop = app.add_subcommand("propagate", "amplitudes and probabilities of U_t applied to a basis state");
    detail::add_form_options(cmd_prop, prop_in);
    cmd_prop->add_option("--t", prop_t, "time in radians, or [k]pi[/d]")->required();
    cmd_prop->add_option("--from", prop_from, "start vertex (1-based)")->required();

    CLI::App* cmd_pst = app.add_subcommand("pst-check", "perfect state transfer certificate");
    detail::add_form_options(cmd_pst, pst_in);

    CLI::App* cmd_edge = app.add_subcommand("detect-edge", "locate a missing edge in K_n by pi/2 evolutions");
    cmd_edge->add_option("--n", detect_n, "number of vertices (must be 4m)")->required();
    cmd_edge->add_option("--hidden", detect_hidden, "hidden missing edge i,j")->required();
    cmd_edge->add_option("--seed", seed, "measurement RNG seed");

    CLI::App* cmd_match = app.add_subcommand("detect-matching", "locate a missing matching in K_n");
    cmd_match->add_option("--n", detect_n, "number of vertices (must be 4m)")->required();
    cmd_match->add_option("--hidden", detect_hidden, "hidden matching i:j,k:l,...")->required();
    cmd_match->add_flag("--perfect", perfect, "the matching is known to be perfect");
    cmd_match->add_option("--seed", seed, "measurement RNG seed");

    CLI::App* cmd_bounds = app.add_subcommand("node-bounds", "deleted-vertex modulus bound with grid verification");
    detail::add_form_options(cmd_bounds, bounds_in);
    cmd_bounds->add_option("--delete-block", delete_block, "canonical block the vertex is removed from")->required();

    CLI::App* cmd_lemma = app.add_subcommand("lemma-cos", "cosine max-min values, both variants");
    cmd_lemma->add_option("--a", lemma_a, "odd integer >= 3")->required();

    CLI::App* cmd_sweep = app.add_subcommand("sweep", "CSV over all canonical forms with n <= max-n");
    cmd_sweep->add_option("--max-n", max_n, "largest vertex count (<= 16)")->required();
    cmd_sweep->add_option("--out", out_path, "CSV output path (default: stdout)");

    std::vector<const char*> argv;
    argv.push_back("twalk");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(cmd_graph)) {
            const BlockForm form = detail::form_from_inputs(graph_in.word, graph_in.blocks);
            const Graph g = block_form_to_graph(form);
            const DegreeSequence degrees = degree_sequence(g);
            nlohmann::json j{{"n", form.order()},
                             {"blocks", form.canonical_blocks()},
                             {"degrees", degrees},
                             {"spectrum", conjugate_spectrum(degrees)}};
            out << j.dump(2) << "\n";
        } else if (app.got_subcommand(cmd_spectrum)) {
            const BlockForm form = detail::form_from_inputs(spectrum_in.word, spectrum_in.blocks);
            const ThresholdSpectralSystem sys = build_spectral_system(form);
            nlohmann::json comps = nlohmann::json::array();
            for (const auto& c : sys.components())
                comps.push_back({{"eigenvalue", c.eigenvalue}, {"multiplicity", c.multiplicity}});
            nlohmann::json j{{"n", form.order()}, {"spectrum", sys.spectrum()}, {"components", std::move(comps)}};
            out << j.dump(2) << "\n";
        } else if (app.got_subcommand(cmd_prop)) {
            const BlockForm form = detail::form_from_inputs(prop_in.word, prop_in.blocks);
            const double t = parse_time(prop_t);
            const Propagator u = propagator(build_spectral_system(form), t);
            const int n = form.order();
            if (prop_from < 1 || prop_from > n) throw std::invalid_argument("start vertex out of range");
            nlohmann::json amplitudes = nlohmann::json::array();
            nlohmann::json probabilities = nlohmann::json::array();
            double total = 0.0;
            for (int j = 1; j <= n; ++j) {
                const std::complex<double> amp = u.matrix(j - 1, prop_from - 1);
                amplitudes.push_back({amp.real(), amp.imag()});
                probabilities.push_back(std::norm(amp));
                total += std::norm(amp);
            }
            if (std::abs(total - 1.0) > tol)
                throw NumericError("probabilities sum to " + std::to_string(total));
            nlohmann::json j{{"t", t}, {"amplitudes", std::move(amplitudes)}, {"probabilities", std::move(probabilities)}};
            out << j.dump(2) << "\n";
        } else if (app.got_subcommand(cmd_pst)) {
            const BlockForm form = detail::form_from_inputs(pst_in.word, pst_in.blocks);
            out << nlohmann::json(pst_certificate(form)).dump(2) << "\n";
        } else if (app.got_subcommand(cmd_edge)) {
            const DetectionTranscript tr = detect_missing_edge(detect_n, parse_edge(detect_hidden), seed);
            out << nlohmann::json(tr).dump(2) << "\n";
        } else if (app.got_subcommand(cmd_match)) {
            const std::vector<Edge> hidden = parse_matching(detect_hidden);
            const std::optional<int> known =
                perfect ? std::optional<int>(static_cast<int>(hidden.size())) : std::nullopt;
            if (perfect && static_cast<int>(hidden.size()) * 2 != detect_n)
                throw std::invalid_argument("--perfect given but the matching does not cover all vertices");
            const DetectionTranscript tr = detect_missing_matching(detect_n, hidden, known, seed);
            out << nlohmann::json(tr).dump(2) << "\n";
        } else if (app.got_subcommand(cmd_bounds)) {
            const BlockForm form = detail::form_from_inputs(bounds_in.word, bounds_in.blocks);
            const NodeDeletionBound b = node_deletion_bound(form, delete_block);
            const double grid_max = oracle_grid_max_offdiag12(laplacian(block_form_to_graph(b.deleted_form)));
            if (grid_max > b.bound + tol)
                throw NumericError("grid maximum " + std::to_string(grid_max) + " exceeds bound " +
                                   std::to_string(b.bound));
            out << node_bound_report(b, grid_max).dump(2) << "\n";
        } else if (app.got_subcommand(cmd_lemma)) {
            const CosMaxMin vi = lemma_cos_maxmin(lemma_a, CosVariant::I);
            const CosMaxMin vii = lemma_cos_maxmin(lemma_a, CosVariant::II);
            nlohmann::json j{{"a", lemma_a},
                             {"analytic", vi.analytic},
                             {"variant_i", {{"t_star", vi.t_star}, {"value", vi.value}}},
                             {"variant_ii", {{"t_star", vii.t_star}, {"value", vii.value}}}};
            out << j.dump(2) << "\n";
        } else if (app.got_subcommand(cmd_sweep)) {
            const std::vector<SweepRow> rows = run_sweep(max_n);
            if (out_path.empty()) {
                write_sweep_csv(out, rows);
            } else {
                std::ofstream file(out_path);
                if (!file) throw std::invalid_argument("cannot write to '" + out_path + "'");
                write_sweep_csv(file, rows);
            }
        }
    } catch (const NumericError& e) {
        err << "numeric error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace twalk::cli
