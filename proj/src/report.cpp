#include "germlab/report.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

namespace germlab {

namespace {

using njson = nlohmann::ordered_json;

njson int_value(const Int& v) {
    if (mpz_fits_slong_p(v.get_mpz_t())) return njson(v.get_si());
    return njson(v.get_str());
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string to_string(GermStatus s) {
    switch (s) {
        case GermStatus::Ok: return "OK";
        case GermStatus::Smooth: return "SMOOTH";
        case GermStatus::NotIsolated: return "NOT_ISOLATED";
        case GermStatus::InputError: return "INPUT_ERROR";
    }
    return "INPUT_ERROR";
}

unsigned parse_check_selection(const std::string& s) {
    unsigned mask = 0;
    std::string cur;
    auto take = [&mask](const std::string& name) {
        if (name.empty()) return;
        if (name == "algebra")
            mask |= kCheckAlgebra;
        else if (name == "newton")
            mask |= kCheckNewton;
        else if (name == "sectional")
            mask |= kCheckSectional;
        else if (name == "all")
            mask |= kCheckAll;
        else
            throw std::invalid_argument("unknown check '" + name + "'");
    };
    for (char c : s) {
        if (c == ',') {
            take(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    take(cur);
    if (mask == 0) throw std::invalid_argument("empty check selection");
    return mask | kCheckAlgebra;
}

InvariantReport analyze(std::string name, const Polynomial& f, const AnalyzeOptions& opt) {
    InvariantReport r;
    r.name = std::move(name);
    r.n = f.n();
    try {
        AlgebraAnalysis a = analyze_algebra(f, opt.max_dim);
        r.status = GermStatus::Ok;
        r.m = a.m;
        r.mu = a.mu;
        r.tau = a.tau;
        r.ratio = rat_str(a.ratio);
        r.filtration_dims = a.profile.d;
        r.bs_holds = a.bs_holds;
        r.f_pow_checks = a.f_pow_in_jf;
        r.saito_membership = a.saito_membership;
        r.theorem_ok = a.theorem_ok;
        r.equality_case = a.equality_case;
    } catch (const SmoothGermError& e) {
        r.status = GermStatus::Smooth;
        r.message = e.what();
        r.m = 1;
        return r;
    } catch (const NotIsolatedError& e) {
        r.status = GermStatus::NotIsolated;
        r.message = e.what();
        if (auto ord = f.order()) r.m = *ord;
        return r;
    } catch (const std::invalid_argument& e) {
        r.status = GermStatus::InputError;
        r.message = e.what();
        return r;
    }

    if (opt.checks & kCheckNewton) {
        NewtonBlock nb;
        try {
            KushnirenkoReport kr = kushnirenko_report(f, r.mu, r.tau);
            nb.convenient = true;
            nb.volumes = kr.newton.volumes;
            nb.nu = kr.newton.nu;
            nb.mu_ge_nu = kr.mu_ge_nu;
            nb.tau_ge_nu_over_n = kr.n_tau_ge_nu;
        } catch (const NotConvenientError& e) {
            nb.convenient = false;
            nb.missing_axes = e.missing_axes();
        }
        r.newton = std::move(nb);
    }

    if (opt.checks & kCheckSectional) {
        SectionalBlock sb;
        SectionalProfile p = sectional_profile(f, opt.plan, opt.max_dim);
        sb.mu_i = p.mu_i;
        sb.log_convex = p.log_convex;
        MultiplicityBounds b = multiplicity_bounds(f, r.mu, r.tau);
        sb.mu_ge_pow = b.mu_ge;
        sb.tau_ge_pow_over_n = b.tau_ge;
        r.sectional = std::move(sb);
    }
    return r;
}

std::string report_json(const InvariantReport& r) {
    njson j;
    j["name"] = r.name;
    j["status"] = to_string(r.status);
    if (r.status != GermStatus::Ok) j["message"] = r.message;
    j["n"] = r.n;
    if (r.status != GermStatus::InputError) j["m"] = r.m;
    if (r.status == GermStatus::Smooth) {
        j["mu"] = 0;
        j["tau"] = 0;
    }
    if (r.status == GermStatus::Ok) {
        j["mu"] = r.mu;
        j["tau"] = r.tau;
        j["ratio"] = r.ratio;
        j["filtration_dims"] = r.filtration_dims;
        j["bs_holds"] = r.bs_holds;
        njson powers = njson::object();
        for (const auto& [k, v] : r.f_pow_checks) powers[std::to_string(k)] = v;
        j["f_pow_checks"] = std::move(powers);
        j["saito_membership"] = r.saito_membership;
        j["theorem_ok"] = r.theorem_ok;
        j["equality_case"] = r.equality_case;
        if (r.newton) {
            njson nb;
            nb["convenient"] = r.newton->convenient;
            if (r.newton->convenient) {
                njson vols = njson::array();
                for (const Rat& v : r.newton->volumes) vols.push_back(rat_str(v));
                nb["volumes"] = std::move(vols);
                nb["nu"] = int_value(*r.newton->nu);
                nb["mu_ge_nu"] = *r.newton->mu_ge_nu;
                nb["tau_ge_nu_over_n"] = *r.newton->tau_ge_nu_over_n;
            } else {
                njson axes = njson::array();
                for (int a : r.newton->missing_axes) axes.push_back(a + 1);
                nb["missing_axes"] = std::move(axes);
            }
            j["newton"] = std::move(nb);
        }
        if (r.sectional) {
            njson sb;
            sb["mu_i"] = r.sectional->mu_i;
            sb["log_convex"] = r.sectional->log_convex;
            sb["mu_ge_pow"] = r.sectional->mu_ge_pow;
            sb["tau_ge_pow_over_n"] = r.sectional->tau_ge_pow_over_n;
            j["sectional"] = std::move(sb);
        }
    }
    return j.dump(2);
}

std::string report_table(const InvariantReport& r) {
    std::ostringstream os;
    auto row = [&os](const std::string& key, const std::string& val) {
        os << key;
        for (std::size_t i = key.size(); i < 22; ++i) os << ' ';
        os << val << '\n';
    };
    row("name", r.name);
    row("status", to_string(r.status));
    if (r.status != GermStatus::Ok) {
        if (!r.message.empty()) row("note", r.message);
        row("n", std::to_string(r.n));
        if (r.status != GermStatus::InputError) row("m (order)", std::to_string(r.m));
        return os.str();
    }
    row("n", std::to_string(r.n));
    row("m (order)", std::to_string(r.m));
    row("mu", std::to_string(r.mu));
    row("tau", std::to_string(r.tau));
    row("mu/tau", r.ratio + "  (bound: " + std::to_string(r.n) + ")");
    {
        std::string d = "[";
        for (std::size_t i = 0; i < r.filtration_dims.size(); ++i)
            d += (i ? ", " : "") + std::to_string(r.filtration_dims[i]);
        d += "]";
        row("filtration d_i", d);
    }
    {
        std::string p;
        for (const auto& [k, v] : r.f_pow_checks)
            p += (p.empty() ? "" : ", ") + ("f^" + std::to_string(k) + ": " + yesno(v));
        row("powers in J_f", p);
    }
    row("briancon-skoda", yesno(r.bs_holds));
    row("f in J_f", yesno(r.saito_membership));
    row("theorem mu <= n*tau", r.theorem_ok ? "PASS" : "FAIL");
    row("equality mu = n*tau", yesno(r.equality_case));
    if (r.newton) {
        row("newton convenient", yesno(r.newton->convenient));
        if (r.newton->convenient) {
            std::string vols = "[";
            for (std::size_t i = 0; i < r.newton->volumes.size(); ++i)
                vols += (i ? ", " : "") + rat_str(r.newton->volumes[i]);
            vols += "]";
            row("newton V_1..V_n", vols);
            row("newton nu", r.newton->nu->get_str());
            row("mu >= nu", *r.newton->mu_ge_nu ? "PASS" : "FAIL");
            row("tau >= nu/n", *r.newton->tau_ge_nu_over_n ? "PASS" : "FAIL");
        } else {
            std::string ax;
            for (std::size_t i = 0; i < r.newton->missing_axes.size(); ++i)
                ax += (i ? ", " : "") + std::to_string(r.newton->missing_axes[i] + 1);
            row("missing axes", ax);
        }
    }
    if (r.sectional) {
        std::string mus = "[";
        for (std::size_t i = 0; i < r.sectional->mu_i.size(); ++i)
            mus += (i ? ", " : "") + std::to_string(r.sectional->mu_i[i]);
        mus += "]";
        row("sectional mu^i", mus);
        row("log-convex", r.sectional->log_convex ? "PASS" : "FAIL");
        row("mu >= (m-1)^n", r.sectional->mu_ge_pow ? "PASS" : "FAIL");
        row("tau >= (m-1)^n/n", r.sectional->tau_ge_pow_over_n ? "PASS" : "FAIL");
    }
    return os.str();
}

}  // namespace germlab
