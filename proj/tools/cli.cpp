#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "braidberry/berry.hpp"
#include "braidberry/braid.hpp"
#include "braidberry/decomposition.hpp"
#include "braidberry/entanglement.hpp"
#include "braidberry/errors.hpp"
#include "table.hpp"

namespace braidberry::cli {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct RunConfig {
    std::string command;
    std::optional<double> theta;
    std::string theta_grid;
    int n1 = 1;
    int n2 = 1;
    double omega = 1.0;
    int steps = 4096;
    std::uint64_t seed = 42;
    int samples = 0;  // 0 = command default
    std::optional<int> example;
    std::string format = "csv";
    std::string out_path;
    std::optional<double> tol;
    bool degrees = false;
    bool all_basis = false;
    double phi1 = 0.0;
    double phi2 = 0.0;
    double time = 0.37;
    std::string inject_fault;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Evaluates fn(0..count-1) on a small worker pool; results keep input order.
template <typename Fn>
auto parallel_map(std::size_t count, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
    using Result = decltype(fn(std::size_t{}));
    std::vector<std::optional<Result>> slots(count);
    std::atomic<std::size_t> next{0};
    const std::size_t workers =
        std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::future<void>> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.push_back(std::async(std::launch::async, [&] {
            for (std::size_t i = next++; i < count; i = next++) slots[i].emplace(fn(i));
        }));
    }
    for (auto& f : pool) f.get();  // rethrows the first worker exception
    std::vector<Result> out;
    out.reserve(count);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

double angle_input(const RunConfig& cfg, double value) {
    return cfg.degrees ? value * std::numbers::pi / 180.0 : value;
}

std::vector<double> theta_values(const RunConfig& cfg) {
    if (!cfg.theta_grid.empty()) {
        std::vector<std::string> parts;
        std::stringstream ss(cfg.theta_grid);
        for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
        if (parts.size() != 3) throw UsageError("--theta-grid expects start:stop:count, got '" + cfg.theta_grid + "'");
        double start = 0, stop = 0;
        long count = 0;
        try {
            std::size_t used = 0;
            start = std::stod(parts[0], &used);
            if (used != parts[0].size()) throw std::invalid_argument(parts[0]);
            stop = std::stod(parts[1], &used);
            if (used != parts[1].size()) throw std::invalid_argument(parts[1]);
            count = std::stol(parts[2], &used);
            if (used != parts[2].size()) throw std::invalid_argument(parts[2]);
        } catch (const std::exception&) {
            throw UsageError("--theta-grid: cannot parse '" + cfg.theta_grid + "'");
        }
        if (count < 1) throw UsageError("--theta-grid: count must be at least 1");
        std::vector<double> grid;
        for (long i = 0; i < count; ++i) {
            const double v = count == 1 ? start : start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1);
            grid.push_back(angle_input(cfg, v));
        }
        return grid;
    }
    if (cfg.theta) return {angle_input(cfg, *cfg.theta)};
    throw UsageError(cfg.command + ": supply --theta or --theta-grid");
}

double resolve_tolerance(const RunConfig& cfg, double fallback) {
    if (cfg.tol) {
        if (!(*cfg.tol > 0.0)) throw UsageError("--tol must be positive");
        return *cfg.tol;
    }
    if (const char* env = std::getenv("BRAIDBERRY_TOL"); env && *env) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(v > 0.0)) {
            throw UsageError(std::string("BRAIDBERRY_TOL is not a positive number: '") + env + "'");
        }
        return v;
    }
    return fallback;
}

DriveParams drive_from(const RunConfig& cfg, double theta, std::ostream& err) {
    if (cfg.steps < 64 || cfg.steps % 2 != 0) throw UsageError("--steps must be even and at least 64");
    const DriveParams d = DriveParams::make(theta, cfg.n1, cfg.n2, cfg.omega);
    if (d.n1 != cfg.n1 || d.n2 != cfg.n2) {
        err << "warning: (n1, n2) = (" << cfg.n1 << ", " << cfg.n2 << ") reduced to (" << d.n1 << ", " << d.n2
            << ")\n";
    }
    return d;
}

void common_parameters(Table& t, const RunConfig& cfg) {
    t.parameters["seed"] = cfg.seed;
    t.parameters["format"] = cfg.format;
}

// ---------------------------------------------------------------- verify

struct VerifyCheck {
    std::string name;
    int samples;
    std::function<double(std::mt19937_64&, bool)> residual;
};

ComplexMatrix perturbed(ComplexMatrix m, bool fault) {
    if (fault) m(0, 1) += 1e-2;
    return m;
}

std::vector<VerifyCheck> verify_checks(int samples) {
    const auto sets = coupled_sets();
    std::uniform_real_distribution<double> phase(-std::numbers::pi, std::numbers::pi);
    std::vector<VerifyCheck> checks;
    checks.push_back({"hecke", samples, [phase](std::mt19937_64& rng, bool fault) mutable {
                          const double p1 = phase(rng), p2 = phase(rng);
                          return check_hecke(perturbed(build_m(p1, p2), fault)).max();
                      }});
    checks.push_back({"ybe", samples, [phase](std::mt19937_64& rng, bool fault) mutable {
                          const double t1 = phase(rng), t2 = phase(rng), p1 = phase(rng), p2 = phase(rng);
                          return check_ybe(t1, t2, perturbed(build_m(p1, p2), fault));
                      }});
    checks.push_back({"unitarity", samples, [phase](std::mt19937_64& rng, bool fault) mutable {
                          const BraidParams p{phase(rng), phase(rng), phase(rng)};
                          const ComplexMatrix r = perturbed(build_r(p), fault);
                          return frobenius_norm(r.adjoint() * r - identity(9));
                      }});
    checks.push_back({"gauge", samples, [phase](std::mt19937_64& rng, bool fault) mutable {
                          const BraidParams p{phase(rng), phase(rng), phase(rng)};
                          return frobenius_norm(perturbed(gauge_transform(p), fault) - build_r(BraidParams{p.theta, 0, 0}));
                      }});
    checks.push_back({"baxterization", samples, [phase](std::mt19937_64& rng, bool fault) mutable {
                          const Complex x = std::polar(1.0, phase(rng)), y = std::polar(1.0, phase(rng));
                          return check_baxterization_functions(x, y).max() + (fault ? 1e-2 : 0.0);
                      }});
    checks.push_back({"su3_form", samples, [phase, sets](std::mt19937_64& rng, bool fault) mutable {
                          const BraidParams p{0.0, phase(rng), phase(rng)};
                          return frobenius_norm(perturbed(build_m_su3(p, sets), fault) - build_m(p));
                      }});
    checks.push_back({"su3_commutators", 1, [sets](std::mt19937_64&, bool fault) {
                          auto copy = sets;
                          copy[0].generator[0] = perturbed(copy[0].generator[0], fault);
                          return su3_closure_residual(copy, structure_constants(gell_mann()));
                      }});
    checks.push_back({"su2_commutators", 1, [sets](std::mt19937_64&, bool fault) {
                          std::array<Su2Set, 3> s{su2_set(sets[0]), su2_set(sets[1]), su2_set(sets[2])};
                          s[0].s_plus = perturbed(s[0].s_plus, fault);
                          return su2_relation_residual(s);
                      }});
    checks.push_back({"casimir", 1, [sets](std::mt19937_64&, bool fault) {
                          double worst = 0.0;
                          for (const auto& set : sets) {
                              Su2Set s = su2_set(set);
                              if (fault) s.casimir(0, 0) += 1e-2;
                              worst = std::max(worst, casimir_spectrum_residual(s));
                          }
                          return worst;
                      }});
    return checks;
}

Table cmd_verify(const RunConfig& cfg) {
    Table t;
    t.command = "verify";
    t.tolerance = resolve_tolerance(cfg, 1e-9);
    const int samples = cfg.samples > 0 ? cfg.samples : 100;
    common_parameters(t, cfg);
    t.parameters["samples"] = samples;
    t.columns = {"check", "samples", "max_residual", "tolerance", "status"};

    auto checks = verify_checks(samples);
    if (!cfg.inject_fault.empty() &&
        std::none_of(checks.begin(), checks.end(), [&](const auto& c) { return c.name == cfg.inject_fault; })) {
        throw UsageError("--inject-fault: unknown check '" + cfg.inject_fault + "'");
    }
    // Each check owns a generator seeded from (seed, position) so results do
    // not depend on scheduling.
    const auto worst = parallel_map(checks.size(), [&](std::size_t i) {
        std::seed_seq seq{cfg.seed, static_cast<std::uint64_t>(i)};
        std::mt19937_64 rng(seq);
        const bool fault = checks[i].name == cfg.inject_fault;
        double w = 0.0;
        for (int s = 0; s < checks[i].samples; ++s) w = std::max(w, checks[i].residual(rng, fault));
        return w;
    });
    for (std::size_t i = 0; i < checks.size(); ++i) {
        const bool pass = worst[i] <= t.tolerance;
        t.passed = t.passed && pass;
        t.add_row({checks[i].name, std::int64_t{checks[i].samples}, worst[i], t.tolerance,
                   std::string(pass ? "PASS" : "FAIL")});
    }
    return t;
}

// -------------------------------------------------------------- entangle

Table cmd_entangle(const RunConfig& cfg) {
    Table t;
    t.command = "entangle";
    t.tolerance = resolve_tolerance(cfg, 1e-9);
    common_parameters(t, cfg);
    const auto grid = theta_values(cfg);
    t.parameters["theta"] = grid;
    t.parameters["phi1"] = cfg.phi1;
    t.parameters["phi2"] = cfg.phi2;
    t.columns = {"theta", "basis_index", "negativity_numeric", "negativity_closed", "abs_diff"};

    const int basis_count = cfg.all_basis ? 9 : 1;
    const auto reports = parallel_map(grid.size() * static_cast<std::size_t>(basis_count), [&](std::size_t i) {
        const double theta = grid[i / static_cast<std::size_t>(basis_count)];
        const int basis = static_cast<int>(i % static_cast<std::size_t>(basis_count));
        return negativity_report(BraidParams{theta, cfg.phi1, cfg.phi2}, basis);
    });
    for (const auto& r : reports) {
        const double diff = std::abs(r.numeric - r.closed_form);
        t.passed = t.passed && diff <= t.tolerance;
        t.add_row({r.theta, std::int64_t{r.basis_state}, r.numeric, r.closed_form, diff});
    }
    return t;
}

// ----------------------------------------------------------------- berry

Table cmd_berry(const RunConfig& cfg, std::ostream& err) {
    Table t;
    t.command = "berry";
    t.tolerance = resolve_tolerance(cfg, 1e-5);
    RunConfig run = cfg;
    if (cfg.example) std::tie(run.n1, run.n2) = example_drive(*cfg.example);
    const auto grid = theta_values(run);
    common_parameters(t, run);
    t.parameters["theta"] = grid;
    t.parameters["n1"] = run.n1;
    t.parameters["n2"] = run.n2;
    t.parameters["omega"] = run.omega;
    t.parameters["steps"] = run.steps;
    if (cfg.example) t.parameters["example"] = *cfg.example;
    t.columns = {"theta", "n1", "n2", "k", "band", "gamma_numeric", "gamma_closed", "wrap_distance", "T", "steps"};
    if (cfg.example) t.columns.push_back("gamma_example");

    std::vector<DriveParams> drives;
    for (double theta : grid) {
        if (std::abs(std::sin(theta)) < 1e-12) {
            throw DomainError("berry: theta = " + format_double(theta) +
                              " has sin(theta) = 0; the Hamiltonian vanishes and no band is defined");
        }
        drives.push_back(drive_from(run, theta, err));
    }
    const std::size_t per_theta = 9;
    const auto results = parallel_map(drives.size() * per_theta, [&](std::size_t i) {
        const DriveParams& d = drives[i / per_theta];
        const SubsystemId k(static_cast<int>((i % per_theta) / 3) + 1);
        const Band band = kBands[i % 3];
        return std::pair{berry_numeric(d, k, band, run.steps), berry_closed(d, k, band)};
    });
    for (std::size_t i = 0; i < results.size(); ++i) {
        const DriveParams& d = drives[i / per_theta];
        const auto& [numeric, closed] = results[i];
        const double dist = wrap_distance(numeric.gamma, closed.gamma);
        bool pass = dist <= t.tolerance;
        std::vector<Cell> row{d.theta,
                              std::int64_t{d.n1},
                              std::int64_t{d.n2},
                              std::int64_t{numeric.subsystem.value()},
                              std::string(band_name(numeric.band)),
                              numeric.gamma,
                              closed.gamma,
                              dist,
                              period(d, numeric.subsystem),
                              std::int64_t{run.steps}};
        if (cfg.example) {
            const double ex = wrap_phase(example_phase(*cfg.example, d.theta, numeric.subsystem, numeric.band));
            pass = pass && wrap_distance(numeric.gamma, ex) <= t.tolerance;
            row.emplace_back(ex);
        }
        t.passed = t.passed && pass;
        t.add_row(std::move(row));
    }
    return t;
}

// -------------------------------------------------------------- spectrum

Table cmd_spectrum(const RunConfig& cfg, std::ostream& err) {
    Table t;
    t.command = "spectrum";
    t.tolerance = resolve_tolerance(cfg, 1e-9);
    const auto grid = theta_values(cfg);
    const int samples = cfg.samples > 0 ? cfg.samples : 5;
    common_parameters(t, cfg);
    t.parameters["theta"] = grid;
    t.parameters["n1"] = cfg.n1;
    t.parameters["n2"] = cfg.n2;
    t.parameters["omega"] = cfg.omega;
    t.parameters["samples"] = samples;
    t.columns = {"theta", "t", "k", "band", "eigenvalue_numeric", "eigenvalue_closed", "abs_diff"};

    for (double theta : grid) {
        const DriveParams d = drive_from(cfg, theta, err);
        for (int j = 0; j < samples; ++j) {
            const double time = kTwoPi / d.omega * j / samples;
            for (const SubsystemId k : SubsystemId::all()) {
                const RealVector numeric = herm_eig(subsystem_hamiltonian(d, k, time)).eigenvalues;
                std::array<std::pair<double, Band>, 3> closed{};
                for (std::size_t b = 0; b < 3; ++b) closed[b] = {closed_energy(d, k, kBands[b]), kBands[b]};
                std::sort(closed.begin(), closed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
                for (int b = 2; b >= 0; --b) {
                    const auto& [energy, band] = closed[static_cast<std::size_t>(b)];
                    const double diff = std::abs(numeric(b) - energy);
                    t.passed = t.passed && diff <= t.tolerance;
                    t.add_row({d.theta, time, std::int64_t{k.value()}, std::string(band_name(band)), numeric(b), energy,
                               diff});
                }
            }
        }
    }
    return t;
}

// ------------------------------------------------------------- decompose

Table cmd_decompose(const RunConfig& cfg, std::ostream& err) {
    Table t;
    t.command = "decompose";
    t.tolerance = resolve_tolerance(cfg, 1e-10);
    const double theta = cfg.theta ? angle_input(cfg, *cfg.theta) : std::numbers::pi / 3;
    const DriveParams d = drive_from(cfg, theta, err);
    if (d.n1 != d.n2) throw DomainError("decompose: requires n1 == n2 (equal phases)");
    common_parameters(t, cfg);
    t.parameters["theta"] = theta;
    t.parameters["omega"] = d.omega;
    t.parameters["time"] = cfg.time;
    t.columns = {"block", "subsystem", "spin", "size", "eigenvalue_low", "eigenvalue_high", "offdiag_re",
                 "offdiag_im", "casimir", "leakage", "pp_t_residual", "pp_t_exact"};

    const ComplexMatrix h = hamiltonian(d, cfg.time);
    const BlockDecomposition dec = block_diagonalize(h, std::max(t.tolerance, 1e-9));
    const auto sets = coupled_sets();
    constexpr std::array<int, 6> subsystem{1, 1, 2, 2, 3, 3};
    constexpr std::array<const char*, 6> spin{"1/2", "0", "0", "1/2", "0", "1/2"};
    int start = 0;
    t.passed = dec.pp_t_exact && dec.leakage <= t.tolerance;
    for (std::size_t b = 0; b < dec.blocks.size(); ++b) {
        const ComplexMatrix& block = dec.blocks[b];
        const RealVector eig = herm_eig(block).eigenvalues;
        const Complex off = block.rows() == 2 ? block(0, 1) : Complex{};
        const Su2Set s = su2_set(sets[static_cast<std::size_t>(subsystem[b] - 1)]);
        const ComplexMatrix j_tilde = dec.p * s.casimir * dec.p.transpose();
        t.add_row({std::int64_t(b + 1), std::int64_t{subsystem[b]}, std::string(spin[b]), std::int64_t{block.rows()},
                   eig(0), eig(eig.size() - 1), off.real(), off.imag(), j_tilde(start, start).real(), dec.leakage,
                   dec.pp_t_residual, dec.pp_t_exact});
        start += static_cast<int>(block.rows());
    }
    return t;
}

void emit(const Table& table, const RunConfig& cfg, std::ostream& out) {
    std::ostringstream buffer;
    if (cfg.format == "json") write_json(table, buffer);
    else write_csv(table, buffer);
    if (cfg.out_path.empty()) {
        out << buffer.str();
        return;
    }
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) throw std::ios_base::failure("cannot open '" + cfg.out_path + "' for writing");
    file << buffer.str();
    if (!file.flush()) throw std::ios_base::failure("write to '" + cfg.out_path + "' failed");
}

void add_common_options(CLI::App& sub, RunConfig& cfg) {
    sub.add_option("--theta", cfg.theta, "Spectral angle (radians unless --degrees)");
    sub.add_option("--theta-grid", cfg.theta_grid, "Inclusive grid start:stop:count");
    sub.add_option("--n1", cfg.n1, "Drive integer for phi1 = n1 omega t");
    sub.add_option("--n2", cfg.n2, "Drive integer for phi2 = n2 omega t");
    sub.add_option("--omega", cfg.omega, "Drive frequency")->check(CLI::PositiveNumber);
    sub.add_option("--steps", cfg.steps, "Samples per period for the Berry loop (even, >= 64)");
    sub.add_option("--seed", cfg.seed, "Seed for random-sample suites");
    sub.add_option("--samples", cfg.samples, "Sample count (verify) or time points (spectrum)")
        ->check(CLI::PositiveNumber);
    sub.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub.add_option("--out", cfg.out_path, "Write output to this path instead of stdout");
    sub.add_option("--tol", cfg.tol, "Pass/fail tolerance (overrides BRAIDBERRY_TOL)");
    sub.add_flag("--degrees", cfg.degrees, "Angles on input are in degrees");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Two-qutrit braid, entanglement and Berry phase toolkit", "braidberry"};
    app.require_subcommand(1, 1);

    auto* verify = app.add_subcommand("verify", "Hecke, Yang-Baxter, unitarity, gauge and algebra suites");
    add_common_options(*verify, cfg);
    verify->add_option("--inject-fault", cfg.inject_fault)->group("");

    auto* entangle = app.add_subcommand("entangle", "Negativity sweep over theta");
    add_common_options(*entangle, cfg);
    entangle->add_flag("--all-basis", cfg.all_basis, "Report all nine basis inputs");
    entangle->add_option("--phi1", cfg.phi1, "Phase phi1 of the braid matrix");
    entangle->add_option("--phi2", cfg.phi2, "Phase phi2 of the braid matrix");

    auto* berry = app.add_subcommand("berry", "Numeric and closed-form Berry phases");
    add_common_options(*berry, cfg);
    berry->add_option("--example", cfg.example, "Preset drive 1..4")->check(CLI::Range(1, 4));

    auto* spectrum = app.add_subcommand("spectrum", "Subsystem eigenvalues, numeric vs closed form");
    add_common_options(*spectrum, cfg);

    auto* decompose = app.add_subcommand("decompose", "Block decomposition in the equal-phase regime");
    add_common_options(*decompose, cfg);
    decompose->add_option("--time", cfg.time, "Time at which H is decomposed");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    try {
        Table table;
        if (cfg.command == "verify") table = cmd_verify(cfg);
        else if (cfg.command == "entangle") table = cmd_entangle(cfg);
        else if (cfg.command == "berry") table = cmd_berry(cfg, err);
        else if (cfg.command == "spectrum") table = cmd_spectrum(cfg, err);
        else table = cmd_decompose(cfg, err);
        emit(table, cfg, out);
        if (!table.passed) {
            err << cfg.command << ": FAIL";
            if (cfg.command == "verify") {
                for (const auto& row : table.rows)
                    if (std::get<std::string>(row.back()) == "FAIL") err << ' ' << std::get<std::string>(row.front());
            }
            err << '\n';
            return check_failed;
        }
        return ok;
    } catch (const std::ios_base::failure& e) {
        err << "error: " << e.what() << '\n';
        return io_error;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
}

}  // namespace braidberry::cli
