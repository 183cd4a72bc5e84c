// germlab: Milnor/Tjurina invariants of isolated hypersurface germs,
// with mechanical verification of the ratio theorem and its corollaries.

#include <atomic>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "germlab/corpus.hpp"
#include "germlab/oracle.hpp"
#include "germlab/report.hpp"

using namespace germlab;

namespace {

using ojson = nlohmann::ordered_json;

std::vector<std::string> split_vars(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

// Checks that must hold on a successfully analyzed germ; returns complaints.
std::vector<std::string> mandated_failures(const InvariantReport& r) {
    std::vector<std::string> out;
    if (r.status != GermStatus::Ok) return out;
    if (!r.theorem_ok) out.push_back("mu <= n*tau decomposition failed");
    if (!r.bs_holds) out.push_back("Briancon-Skoda f^n in J_f failed");
    if (r.newton && r.newton->convenient) {
        if (!*r.newton->mu_ge_nu) out.push_back("mu >= nu failed");
        if (!*r.newton->tau_ge_nu_over_n) out.push_back("n*tau >= nu failed");
    }
    if (r.sectional) {
        if (!r.sectional->log_convex) out.push_back("sectional log-convexity failed");
        if (!r.sectional->mu_ge_pow) out.push_back("mu >= (m-1)^n failed");
        if (!r.sectional->tau_ge_pow_over_n) out.push_back("n*tau >= (m-1)^n failed");
    }
    return out;
}

int report_exit(const InvariantReport& r) {
    if (r.status == GermStatus::NotIsolated || r.status == GermStatus::InputError) return 2;
    return mandated_failures(r).empty() ? 0 : 1;
}

void print_report(const InvariantReport& r, bool json) {
    if (json)
        std::cout << report_json(r) << "\n";
    else
        std::cout << report_table(r);
}

struct GermArgs {
    std::string vars;
    std::string poly;
    bool json = false;
};

struct PlanArgs {
    std::uint64_t seed = 0;
    int samples = 3;
    std::uint32_t coeff_bound = 20;

    SectionPlan plan() const { return SectionPlan{samples, seed, coeff_bound}; }
};

InvariantReport run_single(const GermArgs& g, unsigned checks, const SectionPlan& plan) {
    const auto vars = split_vars(g.vars);
    Polynomial f = parse_poly(g.poly, vars);
    AnalyzeOptions opt;
    opt.checks = checks;
    opt.plan = plan;
    return analyze(g.poly, f, opt);
}

// ---- verify ----------------------------------------------------------

struct VerifyRow {
    InvariantReport report;
    std::vector<std::string> failures;
    std::vector<std::string> infos;
    bool pass = true;
};

Int example24_bound(std::uint64_t m) {
    // (2m-3)(m+1)(m-1)/3, an integer for every m
    Int v = Int(2 * m - 3) * Int(m + 1) * Int(m - 1);
    return v / 3;
}

VerifyRow verify_one(const GermSpec& spec, unsigned checks, const SectionPlan& plan) {
    VerifyRow row;
    try {
        AnalyzeOptions opt;
        opt.checks = checks;
        opt.plan = plan;
        row.report = analyze(spec.name, spec.parse(), opt);
    } catch (const std::exception& e) {
        row.report.name = spec.name;
        row.failures.push_back(std::string("analysis aborted: ") + e.what());
        row.pass = false;
        return row;
    }
    const InvariantReport& r = row.report;
    auto fail = [&row](std::string msg) { row.failures.push_back(std::move(msg)); };

    const GermStatus want = spec.expected.status.value_or(GermStatus::Ok);
    if (r.status != want) {
        fail("status " + to_string(r.status) + " != expected " + to_string(want));
    } else if (r.status == GermStatus::Ok) {
        for (auto msg : mandated_failures(r)) fail(std::move(msg));
        if (spec.expected.mu && *spec.expected.mu != r.mu)
            fail("mu " + std::to_string(r.mu) + " != expected " + std::to_string(*spec.expected.mu));
        if (spec.expected.tau && *spec.expected.tau != r.tau)
            fail("tau " + std::to_string(r.tau) + " != expected " +
                 std::to_string(*spec.expected.tau));
        if (spec.expected.m && *spec.expected.m != r.m)
            fail("m " + std::to_string(r.m) + " != expected " + std::to_string(*spec.expected.m));
        if (spec.expected.nu) {
            if (!r.newton || !r.newton->convenient)
                fail("expected nu but the germ has no Newton number");
            else if (*r.newton->nu != *spec.expected.nu)
                fail("nu " + r.newton->nu->get_str() + " != expected " + spec.expected.nu->get_str());
        }
        if (spec.has_tag("swh")) {
            auto it = r.f_pow_checks.find(2);
            if (it == r.f_pow_checks.end() || !it->second)
                fail("semi-weighted-homogeneous germ without f^2 in J_f");
        }
        if (spec.has_tag("example24")) {
            const Int bound = example24_bound(r.m);
            std::ostringstream os;
            os << "family bound (2m-3)(m+1)(m-1)/3 = " << bound.get_str() << ", tau = " << r.tau
               << (Int(static_cast<unsigned long>(r.tau)) >= bound ? " (meets it)"
                                                                   : " (below it)");
            row.infos.push_back(os.str());
        }
    }
    row.pass = row.failures.empty();
    return row;
}

int cmd_verify(const std::string& path, bool json, unsigned checks, const SectionPlan& plan,
               unsigned jobs) {
    const std::vector<GermSpec> specs = read_corpus(path);
    std::vector<VerifyRow> rows(specs.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= specs.size()) return;
            rows[i] = verify_one(specs[i], checks, plan);
        }
    };
    std::vector<std::thread> pool;
    const unsigned count = std::max(1u, std::min<unsigned>(jobs, specs.size()));
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    std::size_t passed = 0;
    if (json) {
        ojson arr = ojson::array();
        for (const auto& row : rows) {
            ojson entry = ojson::parse(report_json(row.report));
            entry["pass"] = row.pass;
            entry["failures"] = row.failures;
            entry["info"] = row.infos;
            arr.push_back(std::move(entry));
            if (row.pass) ++passed;
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& row = rows[i];
            if (row.pass) {
                ++passed;
                std::cout << "PASS " << specs[i].name << "\n";
            } else {
                std::cout << "FAIL " << specs[i].name << ":";
                for (const auto& m : row.failures) std::cout << " " << m << ";";
                std::cout << "\n";
            }
            for (const auto& m : row.infos) std::cout << "INFO " << specs[i].name << ": " << m << "\n";
        }
        std::cout << specs.size() << " germs, " << passed << " pass, " << (specs.size() - passed)
                  << " fail\n";
    }
    return passed == specs.size() ? 0 : 1;
}

// ---- oracle ----------------------------------------------------------

ojson oracle_json(const Ideal& I, std::optional<std::uint64_t> degree) {
    ojson j;
    if (degree) {
        TruncationResult t = truncation_result(I, *degree);
        j["degree_cap"] = t.degree_cap;
        j["dim_at_cap"] = t.dim_at_cap;
        j["stable"] = t.stable;
    } else {
        OracleDim d = oracle_dim(I);
        if (d.finite) {
            j["dim"] = d.dim;
            j["stabilized_at"] = d.stabilized_at;
        } else {
            j["dim"] = "INFINITE-SUSPECTED";
        }
    }
    return j;
}

int cmd_oracle(const GermArgs& g, std::optional<std::uint64_t> degree) {
    const auto vars = split_vars(g.vars);
    Polynomial f = parse_poly(g.poly, vars);
    if (f.is_zero() || f.constant_term() != 0)
        throw std::invalid_argument("oracle expects a germ vanishing at the origin");
    ojson j;
    j["poly"] = g.poly;
    j["jacobian"] = oracle_json(jacobian_ideal(f), degree);
    j["tjurina"] = oracle_json(tjurina_ideal(f), degree);
    if (g.json) {
        std::cout << j.dump(2) << "\n";
    } else {
        for (const char* k : {"jacobian", "tjurina"}) {
            std::cout << k << ": ";
            if (degree) {
                std::cout << "dim " << j[k]["dim_at_cap"] << " at degree cap " << *degree
                          << (j[k]["stable"].get<bool>() ? " (stable)" : " (not stable)") << "\n";
            } else if (j[k]["dim"].is_string()) {
                std::cout << "INFINITE-SUSPECTED\n";
            } else {
                std::cout << "dim " << j[k]["dim"] << " (stabilized at degree "
                          << j[k]["stabilized_at"] << ")\n";
            }
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Milnor/Tjurina invariants of isolated hypersurface germs"};
    app.require_subcommand(1);

    GermArgs germ;
    PlanArgs plan;
    std::string checks_str = "algebra";
    std::string verify_checks = "all";
    std::string corpus_path;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    std::optional<std::uint64_t> oracle_degree;

    auto add_germ_flags = [&](CLI::App* cmd) {
        cmd->add_option("--vars", germ.vars, "comma-separated variable names")->required();
        cmd->add_option("--poly", germ.poly, "polynomial in those variables")->required();
        cmd->add_flag("--json", germ.json, "emit JSON instead of a table");
    };
    auto add_plan_flags = [&](CLI::App* cmd) {
        cmd->add_option("--seed", plan.seed, "RNG seed for generic sections");
        cmd->add_option("--samples", plan.samples, "sections sampled per dimension")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--coeff-bound", plan.coeff_bound, "max |entry| in section matrices")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* inv = app.add_subcommand("invariants", "mu, tau, filtration and the ratio theorem");
    add_germ_flags(inv);
    add_plan_flags(inv);
    inv->add_option("--checks", checks_str, "algebra,newton,sectional or all");

    CLI::App* newt = app.add_subcommand("newton", "Newton diagram volumes and the nu bounds");
    add_germ_flags(newt);

    CLI::App* sect = app.add_subcommand("sectional", "sectional Milnor numbers and log-convexity");
    add_germ_flags(sect);
    add_plan_flags(sect);

    CLI::App* ver = app.add_subcommand("verify", "run every check across a corpus file");
    ver->add_option("--corpus", corpus_path, "JSON-lines corpus path")->required();
    ver->add_flag("--json", germ.json, "emit a JSON array instead of text");
    ver->add_option("--jobs", jobs, "parallel corpus workers")->check(CLI::PositiveNumber);
    ver->add_option("--checks", verify_checks, "algebra,newton,sectional or all");
    add_plan_flags(ver);

    CLI::App* ora = app.add_subcommand("oracle", "brute-force truncated dimensions (debugging)");
    add_germ_flags(ora);
    ora->add_option("--degree", oracle_degree, "truncation degree cap (default: stabilize)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (inv->parsed()) {
            InvariantReport r = run_single(germ, parse_check_selection(checks_str), plan.plan());
            print_report(r, germ.json);
            return report_exit(r);
        }
        if (newt->parsed()) {
            InvariantReport r = run_single(germ, kCheckAlgebra | kCheckNewton, plan.plan());
            print_report(r, germ.json);
            if (r.status == GermStatus::Ok && r.newton && !r.newton->convenient) {
                std::cerr << "not convenient: no pure power on axis";
                for (int a : r.newton->missing_axes) std::cerr << " " << (a + 1);
                std::cerr << "\n";
                return 2;
            }
            return report_exit(r);
        }
        if (sect->parsed()) {
            InvariantReport r = run_single(germ, kCheckAlgebra | kCheckSectional, plan.plan());
            print_report(r, germ.json);
            return report_exit(r);
        }
        if (ver->parsed()) {
            return cmd_verify(corpus_path, germ.json, parse_check_selection(verify_checks), plan.plan(),
                              jobs);
        }
        if (ora->parsed()) {
            return cmd_oracle(germ, oracle_degree);
        }
    } catch (const CorpusError& e) {
        std::cerr << "corpus error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 2;
    } catch (const InternalCheckError& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
