#include "germlab/standard_basis.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <queue>

namespace germlab {

namespace {

constexpr std::size_t kMaxBasis = 5000;
constexpr std::size_t kMaxReductionSteps = 50'000'000;

// Degree cut-offs for the local strategy.  kNoTrunc disables the cut; the
// doubling loop in standard_basis() escalates D until the staircase certifies
// the result, then falls back to the exact computation.
constexpr std::uint64_t kNoTrunc = UINT64_MAX;
constexpr std::uint64_t kFirstTrunc = 8;
constexpr std::uint64_t kLastTrunc = 2048;
constexpr std::size_t kCertificateCap = 200'000;

// Engine-local term list, sorted strictly descending under the active order
// so the leading term is t.front().
struct OPoly {
    std::vector<Term> t;
    std::uint64_t maxdeg = 0;

    bool empty() const { return t.empty(); }
    const Term& lead() const { return t.front(); }
    std::uint64_t ecart() const { return maxdeg - total_degree(t.front().exp); }
};

OPoly to_opoly(const Polynomial& p, MonomialOrder ord) {
    OPoly r;
    r.t = p.terms();
    std::sort(r.t.begin(), r.t.end(),
              [ord](const Term& a, const Term& b) { return mono_cmp(a.exp, b.exp, ord) > 0; });
    for (const auto& term : r.t) r.maxdeg = std::max(r.maxdeg, total_degree(term.exp));
    return r;
}

Polynomial to_polynomial(int n, const OPoly& p) {
    return Polynomial::from_terms(n, p.t);
}

void recompute_maxdeg(OPoly& p) {
    p.maxdeg = 0;
    for (const auto& term : p.t) p.maxdeg = std::max(p.maxdeg, total_degree(term.exp));
}

// h := h - c * x^shift * r, where c*x^shift*LT(r) cancels LT(h).  Terms of
// total degree >= trunc are dropped (computation in the degree-D jet).
OPoly axpy_cancel(const OPoly& h, const Rat& c, const Exponent& shift, const OPoly& r,
                  MonomialOrder ord, std::uint64_t trunc) {
    OPoly out;
    out.t.reserve(h.t.size() + r.t.size());
    std::size_t i = 1;  // h's lead cancels by construction
    std::size_t j = 1;
    for (; j < r.t.size() || i < h.t.size();) {
        if (j >= r.t.size()) {
            out.t.push_back(h.t[i++]);
            continue;
        }
        const Exponent re = exp_add(r.t[j].exp, shift);
        if (total_degree(re) >= trunc) {
            ++j;
            continue;
        }
        if (i >= h.t.size()) {
            Rat v = -c * r.t[j].coeff;
            if (v != 0) out.t.push_back({std::move(v), re});
            ++j;
            continue;
        }
        const int cmp = mono_cmp(h.t[i].exp, re, ord);
        if (cmp > 0) {
            out.t.push_back(h.t[i++]);
        } else if (cmp < 0) {
            Rat v = -c * r.t[j].coeff;
            out.t.push_back({std::move(v), re});
            ++j;
        } else {
            Rat v = h.t[i].coeff - c * r.t[j].coeff;
            if (v != 0) out.t.push_back({std::move(v), h.t[i].exp});
            ++i, ++j;
        }
    }
    recompute_maxdeg(out);
    return out;
}

// Scale to a primitive integer polynomial with positive leading coefficient.
// Scaling is by a unit, so membership and the generated ideal are unchanged.
void make_primitive(OPoly& p) {
    if (p.empty()) return;
    Int den = 1;
    for (const auto& term : p.t) {
        Int l;
        mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), term.coeff.get_den().get_mpz_t());
        den = l;
    }
    Int content = 0;
    for (const auto& term : p.t) {
        Int num = term.coeff.get_num() * (den / term.coeff.get_den());
        Int g;
        mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
        content = g;
    }
    Rat scale(den, content);
    scale.canonicalize();
    if (p.t.front().coeff < 0) scale = -scale;
    for (auto& term : p.t) term.coeff *= scale;
}

// Weak normal form on the engine representation.  In the local case the
// reducer list grows by intermediate results (Mora); `extra` holds those so
// the caller's basis is never copied.
OPoly weak_nf(OPoly h, const std::vector<OPoly>& base, MonomialOrder ord,
              std::size_t* step_budget, std::uint64_t trunc) {
    const bool local = (ord == MonomialOrder::LocalDegrevlex);
    std::vector<OPoly> extra;
    const auto reducer = [&](std::size_t k) -> const OPoly& {
        return k < base.size() ? base[k] : extra[k - base.size()];
    };
    while (!h.empty()) {
        // Reducer whose lead divides LT(h): minimal ecart, tie by earliest index.
        const std::size_t count = base.size() + extra.size();
        std::size_t pick = count;
        for (std::size_t k = 0; k < count; ++k) {
            if (!divides(reducer(k).lead().exp, h.lead().exp)) continue;
            if (!local) {
                pick = k;
                break;
            }
            if (pick == count || reducer(k).ecart() < reducer(pick).ecart()) pick = k;
        }
        if (pick == count) break;
        if (*step_budget == 0) {
            throw ResourceLimitError("normal-form step budget exhausted");
        }
        --*step_budget;
        if (local && reducer(pick).ecart() > h.ecart()) extra.push_back(h);
        const Rat c = h.lead().coeff / reducer(pick).lead().coeff;
        const Exponent shift = exp_sub(h.lead().exp, reducer(pick).lead().exp);
        h = axpy_cancel(h, c, shift, reducer(pick), ord, trunc);
        make_primitive(h);
    }
    return h;
}

OPoly spoly(const OPoly& f, const OPoly& g, MonomialOrder ord, std::uint64_t trunc) {
    const Exponent l = exp_lcm(f.lead().exp, g.lead().exp);
    if (total_degree(l) >= trunc) return OPoly{};  // vanishes in the jet
    // x^(l-lm(f)) * f / lc(f)  -  x^(l-lm(g)) * g / lc(g)
    OPoly a;
    a.t.reserve(f.t.size());
    const Exponent sa = exp_sub(l, f.lead().exp);
    const Rat ca = f.lead().coeff;
    for (const auto& term : f.t) {
        Exponent e = exp_add(term.exp, sa);
        if (total_degree(e) >= trunc) continue;
        a.t.push_back({term.coeff / ca, std::move(e)});
    }
    recompute_maxdeg(a);
    if (a.empty()) return a;
    const Exponent sb = exp_sub(l, g.lead().exp);
    OPoly out = axpy_cancel(a, Rat(1) / g.lead().coeff, sb, g, ord, trunc);
    make_primitive(out);
    return out;
}

std::vector<Exponent> minimal_lead_exponents(const std::vector<OPoly>& basis) {
    std::vector<Exponent> leads;
    leads.reserve(basis.size());
    for (const auto& b : basis) leads.push_back(b.lead().exp);
    std::sort(leads.begin(), leads.end(), [](const Exponent& a, const Exponent& b) {
        return mono_cmp(a, b, MonomialOrder::GlobalDegrevlex) < 0;
    });
    leads.erase(std::unique(leads.begin(), leads.end()), leads.end());
    std::vector<Exponent> out;
    for (std::size_t i = 0; i < leads.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < leads.size() && !redundant; ++j) {
            if (i != j && divides(leads[j], leads[i]) && leads[j] != leads[i]) redundant = true;
        }
        if (!redundant) out.push_back(leads[i]);
    }
    return out;
}

}  // namespace

Ideal::Ideal(std::vector<Polynomial> g) {
    if (g.empty()) throw std::invalid_argument("ideal needs at least one generator");
    const int dim = g[0].n();
    for (auto& p : g) {
        if (p.n() != dim) throw std::invalid_argument("ideal generators in different rings");
        if (!p.is_zero()) gens.push_back(std::move(p));
    }
    if (gens.empty()) throw std::invalid_argument("ideal needs a nonzero generator");
}

std::uint64_t Staircase::truncation_degree() const {
    std::uint64_t d = 0;
    for (const auto& e : monomials) d = std::max(d, total_degree(e));
    return d + 1;
}

std::size_t max_dim_cap() {
    if (const char* env = std::getenv("GERMLAB_MAX_DIM")) {
        const long v = std::atol(env);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    return 5000;
}

Polynomial mora_normal_form(const Polynomial& g, const std::vector<Polynomial>& G,
                            MonomialOrder ord) {
    std::vector<OPoly> reducers;
    for (const auto& p : G) {
        if (!p.is_zero()) reducers.push_back(to_opoly(p, ord));
    }
    std::size_t budget = kMaxReductionSteps;
    OPoly h = weak_nf(to_opoly(g, ord), std::move(reducers), ord, &budget, kNoTrunc);
    return to_polynomial(g.n(), h);
}

namespace {

// One Buchberger/Mora run, optionally in the degree-trunc jet.
std::vector<OPoly> buchberger_loop(const Ideal& I, MonomialOrder ord, std::uint64_t trunc) {
    std::vector<OPoly> S;
    for (const auto& g : I.gens) {
        OPoly p = to_opoly(g, ord);
        if (trunc != kNoTrunc) {
            p.t.erase(std::remove_if(p.t.begin(), p.t.end(),
                                     [trunc](const Term& t) {
                                         return total_degree(t.exp) >= trunc;
                                     }),
                      p.t.end());
            recompute_maxdeg(p);
            if (p.empty()) continue;
        }
        make_primitive(p);
        S.push_back(std::move(p));
    }
    if (S.empty()) return S;

    // Normal strategy: (total degree of the lcm, i, j), smallest first.
    using PairKey = std::tuple<std::uint64_t, std::size_t, std::size_t>;
    std::priority_queue<PairKey, std::vector<PairKey>, std::greater<>> pairs;
    auto push_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            const Exponent l = exp_lcm(S[i].lead().exp, S[j].lead().exp);
            pairs.emplace(total_degree(l), i, j);
        }
    };
    for (std::size_t j = 1; j < S.size(); ++j) push_pairs_for(j);

    std::size_t budget = kMaxReductionSteps;
    while (!pairs.empty()) {
        const auto [deg, i, j] = pairs.top();
        pairs.pop();
        const Exponent l = exp_lcm(S[i].lead().exp, S[j].lead().exp);
        // Product criterion: coprime leads reduce to zero.
        if (l == exp_add(S[i].lead().exp, S[j].lead().exp)) continue;
        OPoly h = weak_nf(spoly(S[i], S[j], ord, trunc), S, ord, &budget, trunc);
        if (h.empty()) continue;
        make_primitive(h);
        S.push_back(std::move(h));
        if (S.size() > kMaxBasis) {
            throw ResourceLimitError("standard basis exceeded the element cap");
        }
        push_pairs_for(S.size() - 1);
    }
    return S;
}

StandardBasis pack_basis(int n, MonomialOrder ord, const std::vector<OPoly>& S) {
    StandardBasis out;
    out.ord = ord;
    for (const auto& p : S) out.basis.push_back(to_polynomial(n, p));
    out.lead_exponents = minimal_lead_exponents(S);
    return out;
}

}  // namespace

StandardBasis standard_basis(const Ideal& I, MonomialOrder ord) {
    if (ord == MonomialOrder::GlobalDegrevlex) {
        return pack_basis(I.n(), ord, buchberger_loop(I, ord, kNoTrunc));
    }

    // Local strategy: run in the degree-D jet to keep coefficients small.
    // The run computes a standard basis of I + m^D, whose leading ideal
    // agrees with that of I below degree D.  If the staircase of the
    // computed leads is finite and lives strictly below D, every monomial of
    // degree >= D is already led by the computed basis, so the leading
    // ideals agree everywhere, the truncated elements still lie in I
    // (their discarded tails are in m^D, and m^D is inside I), and the
    // result is an exact standard basis of I.  Otherwise double D; past
    // kLastTrunc settle it with the exact computation (the usual case for
    // that path is an infinite quotient, where jets can never certify).
    for (std::uint64_t D = kFirstTrunc; D <= kLastTrunc; D *= 2) {
        std::vector<OPoly> S = buchberger_loop(I, ord, D);
        if (S.empty()) continue;  // every generator lives in m^D
        StandardBasis cand = pack_basis(I.n(), ord, S);
        try {
            Staircase st = staircase(cand, kCertificateCap);
            if (st.finite && st.truncation_degree() <= D) return cand;
        } catch (const ResourceLimitError&) {
            // staircase too large to certify at this cut; escalate
        }
    }
    return pack_basis(I.n(), ord, buchberger_loop(I, ord, kNoTrunc));
}

Staircase staircase(const StandardBasis& sb, std::size_t max_dim) {
    const std::size_t n = sb.lead_exponents.empty() ? 0 : sb.lead_exponents[0].size();
    Staircase out;

    // A unit leading monomial kills the whole quotient.
    for (const auto& e : sb.lead_exponents) {
        if (is_zero_exponent(e)) {
            out.finite = true;
            return out;
        }
    }

    // Finite iff a pure power of every variable leads the ideal.
    std::vector<std::uint32_t> bound(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& e : sb.lead_exponents) {
            if (e[i] == 0) continue;
            bool pure = true;
            for (std::size_t k = 0; k < n && pure; ++k) {
                if (k != i && e[k] != 0) pure = false;
            }
            if (pure && (bound[i] == 0 || e[i] < bound[i])) bound[i] = e[i];
        }
        if (bound[i] == 0) return out;  // finite = false
    }
    out.finite = true;

    Exponent cur(n, 0);
    std::uint64_t box = 1;
    for (auto b : bound) {
        box *= b;
        if (box > 50'000'000ull) throw ResourceLimitError("staircase bounding box too large");
    }
    // Walk the box, keeping monomials outside the leading ideal.
    auto outside = [&](const Exponent& e) {
        for (const auto& l : sb.lead_exponents) {
            if (divides(l, e)) return false;
        }
        return true;
    };
    for (;;) {
        if (outside(cur)) {
            out.monomials.push_back(cur);
            if (out.monomials.size() > max_dim) {
                throw ResourceLimitError(
                    "quotient dimension exceeds the cap (raise GERMLAB_MAX_DIM)");
            }
        }
        std::size_t i = 0;
        while (i < n) {
            if (++cur[i] < bound[i]) break;
            cur[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    std::sort(out.monomials.begin(), out.monomials.end(), [](const Exponent& a, const Exponent& b) {
        return mono_cmp(a, b, MonomialOrder::GlobalDegrevlex) < 0;
    });
    return out;
}

std::optional<std::size_t> quotient_dim(const Ideal& I, std::size_t max_dim) {
    const StandardBasis sb = standard_basis(I, MonomialOrder::LocalDegrevlex);
    const Staircase st = staircase(sb, max_dim);
    if (!st.finite) return std::nullopt;
    return st.size();
}

namespace {

// 1 + sum_i (b_i - 1) where x_i^{b_i} are pure-power leads: every monomial of
// that degree has some exponent past its b_i, so m^B lies inside the ideal
// and membership can be decided in the degree-B jet.  nullopt when some
// variable has no pure-power lead (infinite quotient: no sound cut exists).
std::optional<std::uint64_t> jet_bound(const std::vector<Exponent>& leads) {
    if (leads.empty()) return std::nullopt;
    const std::size_t n = leads[0].size();
    std::uint64_t bound = 1;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t best = 0;
        for (const auto& e : leads) {
            bool pure = true;
            for (std::size_t k = 0; k < n && pure; ++k) {
                if (k != i && e[k] != 0) pure = false;
            }
            if (pure && (best == 0 || e[i] < best)) best = e[i];
            if (is_zero_exponent(e)) return 1;  // unit ideal
        }
        if (best == 0) return std::nullopt;
        bound += best - 1;
    }
    return bound;
}

}  // namespace

bool membership(const Polynomial& g, const StandardBasis& sb) {
    std::uint64_t trunc = kNoTrunc;
    if (sb.ord == MonomialOrder::LocalDegrevlex) {
        if (auto b = jet_bound(sb.lead_exponents)) trunc = *b;
    }
    std::vector<OPoly> reducers;
    reducers.reserve(sb.basis.size());
    for (const auto& p : sb.basis) {
        if (!p.is_zero()) reducers.push_back(to_opoly(p, sb.ord));
    }
    OPoly h = to_opoly(g, sb.ord);
    if (trunc != kNoTrunc) {
        h.t.erase(std::remove_if(h.t.begin(), h.t.end(),
                                 [trunc](const Term& t) { return total_degree(t.exp) >= trunc; }),
                  h.t.end());
        recompute_maxdeg(h);
    }
    std::size_t budget = kMaxReductionSteps;
    return weak_nf(std::move(h), std::move(reducers), sb.ord, &budget, trunc).empty();
}

Polynomial reduced_normal_form(const Polynomial& g, const StandardBasis& sb,
                               std::uint64_t trunc_deg) {
    if (sb.ord != MonomialOrder::LocalDegrevlex) {
        throw std::invalid_argument("reduced_normal_form requires a local standard basis");
    }
    const MonomialOrder ord = sb.ord;
    std::vector<OPoly> basis;
    basis.reserve(sb.basis.size());
    for (const auto& b : sb.basis) basis.push_back(to_opoly(b, ord));

    OPoly h = to_opoly(g, ord);
    std::vector<Term> done;
    std::size_t guard = kMaxReductionSteps;
    while (!h.empty()) {
        if (guard-- == 0) throw ResourceLimitError("reduced normal form step budget exhausted");
        const Term lt = h.lead();
        if (total_degree(lt.exp) >= trunc_deg) {
            h.t.erase(h.t.begin());
            continue;
        }
        std::size_t pick = basis.size();
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (divides(basis[k].lead().exp, lt.exp)) {
                pick = k;
                break;
            }
        }
        if (pick == basis.size()) {
            done.push_back(lt);
            h.t.erase(h.t.begin());
            continue;
        }
        const Rat c = lt.coeff / basis[pick].lead().coeff;
        const Exponent shift = exp_sub(lt.exp, basis[pick].lead().exp);
        h = axpy_cancel(h, c, shift, basis[pick], ord, trunc_deg);
    }
    return Polynomial::from_terms(g.n(), std::move(done));
}

}  // namespace germlab
