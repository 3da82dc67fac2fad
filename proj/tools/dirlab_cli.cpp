// Batch front end: every computation as a subcommand with JSON/CSV reports.
// Exit codes: 0 success, 2 configuration error, 3 numerical flag raised.
#include <CLI11.hpp>

#include "dirlab/carleson.hpp"
#include "dirlab/energy.hpp"
#include "dirlab/selftest.hpp"
#include "dirlab/thresholds.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_config = 2;
constexpr int exit_flagged = 3;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<double> parse_number_list(const std::string& payload, const char* what) {
    std::vector<double> out;
    std::stringstream ss(payload);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ConfigError(std::string(what) + ": cannot parse number '" + item + "'");
        }
    }
    if (out.empty()) throw ConfigError(std::string(what) + ": empty list");
    return out;
}

// Accepts either a comma-separated coefficient list ("1,0.5") or a simple
// polynomial expression in z ("1+z/2", "1-0.3z^2+z^3").
std::vector<dirlab::complex> parse_poly(const std::string& payload) {
    std::vector<dirlab::complex> coeffs;
    if (payload.find('z') == std::string::npos) {
        for (double c : parse_number_list(payload, "poly"))
            coeffs.emplace_back(c, 0.0);
        return coeffs;
    }
    static const std::regex term_re(
        R"(^([0-9]*\.?[0-9]+)?\*?(z(\^([0-9]+))?)?(/([0-9]*\.?[0-9]+))?$)");
    std::size_t pos = 0;
    double sign = 1.0;
    while (pos < payload.size()) {
        std::size_t end = pos;
        while (end < payload.size() && payload[end] != '+' && payload[end] != '-') ++end;
        const std::string term = payload.substr(pos, end - pos);
        std::smatch m;
        if (term.empty() || !std::regex_match(term, m, term_re) ||
            (m[1].str().empty() && m[2].str().empty()))
            throw ConfigError("poly: cannot parse term '" + term + "'");
        double value = sign * (m[1].str().empty() ? 1.0 : std::stod(m[1].str()));
        if (!m[6].str().empty()) value /= std::stod(m[6].str());
        std::size_t degree = 0;
        if (!m[2].str().empty()) degree = m[4].str().empty() ? 1 : std::stoul(m[4].str());
        if (coeffs.size() <= degree) coeffs.resize(degree + 1, dirlab::complex(0.0, 0.0));
        coeffs[degree] += value;
        if (end < payload.size()) sign = payload[end] == '-' ? -1.0 : 1.0;
        pos = end + 1;
    }
    return coeffs;
}

dirlab::BoundaryFunction parse_boundary(const std::string& spec) {
    using BF = dirlab::BoundaryFunction;
    const std::size_t colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    const std::string payload = colon == std::string::npos ? "" : spec.substr(colon + 1);
    try {
        if (kind == "expcos" && payload.empty()) return BF::make_exp_trig({0.0, 1.0});
        if (kind == "const") return BF::make_constant(std::stod(payload));
        if (kind == "sin-bump") return BF::make_sin_bump(std::stod(payload));
        if (kind == "poly") return BF::make_poly_modulus(parse_poly(payload));
        if (kind == "exp-trig")
            return BF::make_exp_trig(parse_number_list(payload, "exp-trig"));
        if (kind == "step") {
            const auto v = parse_number_list(payload, "step");
            if (v.size() != 2) throw ConfigError("step: expected lo,hi");
            return BF::make_step(v[0], v[1]);
        }
        if (kind == "hbeta") {
            const auto v = parse_number_list(payload, "hbeta");
            if (v.size() != 2) throw ConfigError("hbeta: expected alpha,beta");
            return BF::make_hbeta(v[0], v[1]);
        }
        if (kind == "csv") return BF::from_csv(payload);
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError("boundary spec '" + spec + "': " + e.what());
    }
    throw ConfigError("unknown boundary spec '" + spec +
                      "' (expected const:, poly:, expcos, exp-trig:, sin-bump:, step:, "
                      "hbeta:, csv:)");
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open output file " + path);
    out << text << "\n";
}

std::string energy_csv(const dirlab::EnergyReport& rep) {
    std::ostringstream os;
    os.precision(17);
    os << "route,value\n";
    for (const auto& [name, value] : rep.routes) os << name << "," << value << "\n";
    for (const auto& [name, value] : rep.ratios) os << name << "," << value << "\n";
    os << "flagged," << (rep.flagged ? 1 : 0);
    return os.str();
}

std::string carleson_csv(const dirlab::CarlesonDecomposition& dec) {
    std::ostringstream os;
    os.precision(17);
    os << "field,value\n";
    os << "alpha," << dec.alpha << "\n";
    os << "h_norm_sq," << dec.h_norm_sq << "\n";
    os << "big_n," << dec.big_n.value << "\n";
    os << "n," << dec.n.value << "\n";
    os << "n_tilde," << dec.n_tilde.value << "\n";
    os << "lhs," << dec.lhs.value << "\n";
    os << "rhs," << dec.rhs << "\n";
    os << "ratio," << dec.ratio << "\n";
    os << "lhs_flagged," << (dec.lhs_flagged ? 1 : 0) << "\n";
    os << "rhs_flagged," << (dec.rhs_flagged ? 1 : 0);
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for radially weighted Dirichlet spaces"};
    app.require_subcommand(1);
    // "--h" names the boundary function, so help is long-form only
    app.set_help_flag("--help", "print help and exit");

    std::string h_spec, out_path, format = "json";
    double alpha = 0.0;
    std::size_t n = 1024;
    unsigned seed = 12345; // reserved: fixed seed keeps reports byte-identical
    std::string emit_mu_path;
    bool quick = false, mutate = false;
    std::string betas_spec = "0.3,0.8,1.3", quantity = "all";

    auto add_common = [&](CLI::App* cmd, bool needs_h) {
        cmd->set_help_flag("--help", "print help and exit");
        if (needs_h)
            cmd->add_option("--h", h_spec, "boundary function spec")->required();
        cmd->add_option("--alpha", alpha, "weight exponent in [0,1)");
        cmd->add_option("--out", out_path, "output file (default stdout)");
        cmd->add_option("--format", format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--seed", seed, "seed for randomized corpora");
    };

    CLI::App* energy = app.add_subcommand("energy", "energy by all routes");
    add_common(energy, true);
    energy->add_option("--n", n, "angular grid size (power of two)");

    CLI::App* carleson = app.add_subcommand("carleson", "two-sided boundary decomposition");
    add_common(carleson, true);
    carleson->add_option("--emit-mu", emit_mu_path, "also write the mu profile CSV here");

    CLI::App* thresholds = app.add_subcommand("thresholds", "power-log family verdicts");
    add_common(thresholds, false);
    thresholds->add_option("--betas", betas_spec, "comma-separated beta values");
    thresholds->add_option("--quantity", quantity, "N, D, C or all")
        ->check(CLI::IsMember({"N", "D", "C", "all"}));

    CLI::App* selftest = app.add_subcommand("selftest", "run the acceptance suite");
    selftest->set_help_flag("--help", "print help and exit");
    selftest->add_flag("--quick", quick, "reduced grids, same verdicts");
    selftest->add_flag("--mutate-douglas", mutate,
                       "debug: corrupt the prefactor so the suite must fail");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_config;
    }

    try {
        if (!(alpha >= 0.0 && alpha < 1.0)) throw ConfigError("alpha must lie in [0,1)");

        if (energy->parsed()) {
            if (!dirlab::is_power_of_two(n) || n < 64 || n > 16384)
                throw ConfigError("n must be a power of two in [64, 16384]");
            const auto h = parse_boundary(h_spec);
            const auto rep = dirlab::compute_energy_report(h, alpha, n);
            write_output(format == "csv" ? energy_csv(rep) : rep.to_json(), out_path);
            return rep.flagged ? exit_flagged : exit_ok;
        }

        if (carleson->parsed()) {
            const auto h = parse_boundary(h_spec);
            const auto dec = dirlab::theorem_decomposition(h, alpha);
            write_output(format == "csv" ? carleson_csv(dec) : dec.to_json(), out_path);
            if (!emit_mu_path.empty()) dirlab::mu_profile(h).to_csv(emit_mu_path);
            return dec.lhs_flagged || dec.rhs_flagged ? exit_flagged : exit_ok;
        }

        if (thresholds->parsed()) {
            if (!(alpha > 0.0)) throw ConfigError("thresholds: alpha must lie in (0,1)");
            const auto betas = parse_number_list(betas_spec, "betas");
            auto rows = dirlab::threshold_table(alpha, betas);
            if (quantity != "all") {
                std::erase_if(rows, [&](const dirlab::ThresholdRow& r) {
                    return dirlab::quantity_name(r.quantity) != quantity;
                });
            }
            write_output(format == "csv" ? dirlab::threshold_table_csv(rows)
                                         : dirlab::threshold_table_json(rows),
                         out_path);
            for (const auto& r : rows)
                if (!r.agree) return exit_flagged;
            return exit_ok;
        }

        // selftest
        dirlab::SelfTestOptions options;
        options.quick = quick;
        options.mutate_douglas_prefactor = mutate;
        const auto results = dirlab::run_selftest(options);
        for (const auto& r : results)
            std::printf("criterion %2d [%s]: %s (%.1fs) -- %s\n", r.id,
                        r.passed ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                        r.detail.c_str());
        const bool ok = dirlab::all_passed(results);
        std::printf("acceptance: %s\n", ok ? "ALL PASS" : "FAILURES PRESENT");
        return ok ? exit_ok : 1;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_config;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_config;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return exit_flagged;
    }
}
