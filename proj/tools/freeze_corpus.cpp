// Developer tool: fill the expected values of a corpus file from the
// brute-force dimension oracle (never from the engine under test).  mu and
// tau come from oracle_dim with a staircase-certified truncation cap; nu
// comes from the Newton module.  Output is JSON lines on stdout, ready to
// paste back into the corpus.

#include <iostream>

#include <json.hpp>

#include "germlab/corpus.hpp"
#include "germlab/oracle.hpp"

using namespace germlab;
using ojson = nlohmann::ordered_json;

namespace {

// Exact truncation degree for the oracle: any D >= 1 + max staircase degree
// has m^D inside the ideal.  nullopt = infinite quotient.
std::optional<std::uint64_t> certified_cap(const Ideal& I) {
    StandardBasis sb = standard_basis(I, MonomialOrder::LocalDegrevlex);
    Staircase st = staircase(sb);
    if (!st.finite) return std::nullopt;
    return std::max<std::uint64_t>(1, st.truncation_degree());
}

ojson freeze_one(const GermSpec& spec) {
    ojson out;
    out["name"] = spec.name;
    out["vars"] = spec.vars;
    out["poly"] = spec.poly;

    const Polynomial f = spec.parse();
    ojson exp;
    if (*f.order() == 1) {
        exp["status"] = "SMOOTH";
    } else if (auto jcap = certified_cap(jacobian_ideal(f)); !jcap) {
        exp["status"] = "NOT_ISOLATED";
    } else {
        const OracleDim mu = oracle_dim(jacobian_ideal(f), *jcap);
        const auto tcap = certified_cap(tjurina_ideal(f));
        const OracleDim tau = oracle_dim(tjurina_ideal(f), *tcap);
        exp["mu"] = mu.dim;
        exp["tau"] = tau.dim;
        exp["m"] = *f.order();
        try {
            exp["nu"] = newton_number(f).nu.get_si();
        } catch (const NotConvenientError&) {
            // no Newton number for non-convenient germs
        }
    }
    out["expected"] = std::move(exp);
    if (!spec.tags.empty()) out["tags"] = spec.tags;
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: freeze_corpus <corpus.jsonl>\n";
        return 2;
    }
    try {
        for (const GermSpec& spec : read_corpus(argv[1]))
            std::cout << freeze_one(spec).dump() << "\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
