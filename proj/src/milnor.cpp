#include "germlab/milnor.hpp"

#include <algorithm>

namespace germlab {

namespace {

std::vector<Polynomial> partials(const Polynomial& f) {
    std::vector<Polynomial> out;
    out.reserve(static_cast<std::size_t>(f.n()));
    for (int i = 0; i < f.n(); ++i) out.push_back(f.partial(i));
    return out;
}

void require_germ(const Polynomial& f) {
    if (f == Polynomial::zero(f.n())) throw std::invalid_argument("f must be nonzero");
    if (f.constant_term() != 0) throw std::invalid_argument("f(0) must vanish");
}

}  // namespace

Ideal jacobian_ideal(const Polynomial& f) {
    require_germ(f);
    return Ideal(partials(f));
}

Ideal tjurina_ideal(const Polynomial& f) {
    require_germ(f);
    auto gens = partials(f);
    gens.push_back(f);
    return Ideal(std::move(gens));
}

std::size_t milnor_number(const Polynomial& f, std::size_t max_dim) {
    auto dim = quotient_dim(jacobian_ideal(f), max_dim);
    if (!dim) throw NotIsolatedError("dim S/J_f is infinite: the singularity is not isolated");
    return *dim;
}

std::size_t tjurina_number(const Polynomial& f, std::size_t max_dim) {
    auto dim = quotient_dim(tjurina_ideal(f), max_dim);
    auto mu = quotient_dim(jacobian_ideal(f), max_dim);
    if (dim.has_value() != mu.has_value())
        throw InternalCheckError("S/J_f and S/(J_f,f) disagree on finiteness");
    if (!dim) throw NotIsolatedError("dim S/(J_f,f) is infinite: the singularity is not isolated");
    return *dim;
}

MilnorAlgebra::MilnorAlgebra(Polynomial f, StandardBasis sb, Staircase st)
    : f_(std::move(f)), sb_(std::move(sb)), basis_(std::move(st)) {
    trunc_deg_ = basis_.truncation_degree();
    index_.reserve(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_.monomials[i], i);
}

MilnorAlgebra MilnorAlgebra::build(const Polynomial& f, std::size_t max_dim) {
    auto sb = standard_basis(jacobian_ideal(f), MonomialOrder::LocalDegrevlex);
    auto st = staircase(sb, max_dim);
    if (!st.finite)
        throw NotIsolatedError("dim S/J_f is infinite: the singularity is not isolated");
    return MilnorAlgebra(f, std::move(sb), std::move(st));
}

QMat MilnorAlgebra::coordinates(const Polynomial& g) const {
    QMat col(mu(), 1);
    Polynomial r = reduced_normal_form(g, sb_, trunc_deg_);
    for (const Term& t : r.terms()) {
        auto it = index_.find(t.exp);
        if (it == index_.end())
            throw InternalCheckError("reduced normal form left the staircase basis");
        col.at(it->second, 0) = t.coeff;
    }
    return col;
}

MultOperator MultOperator::build(const MilnorAlgebra& alg) {
    MultOperator op;
    op.mu_ = alg.mu();
    op.n_ = alg.n();

    QMat a(op.mu_, op.mu_);
    for (std::size_t j = 0; j < op.mu_; ++j) {
        Polynomial bj = Polynomial::monomial(Rat(1), alg.basis().monomials[j]);
        QMat col = alg.coordinates(alg.f() * bj);
        for (std::size_t i = 0; i < op.mu_; ++i) a.at(i, j) = col.at(i, 0);
    }

    op.pow_.push_back(QMat::identity(op.mu_));
    op.rank_.push_back(op.mu_);
    for (int k = 1; k <= op.n_; ++k) {
        op.pow_.push_back(op.pow_.back() * a);
        op.rank_.push_back(op.pow_.back().rank());
    }
    if (!op.pow_.back().is_zero())
        throw InternalCheckError("Briancon-Skoda failed: A^n != 0 on S/J_f");
    return op;
}

std::size_t FiltrationProfile::sum() const {
    std::size_t s = 0;
    for (auto v : d) s += v;
    return s;
}

bool FiltrationProfile::nonincreasing() const {
    for (std::size_t i = 1; i < d.size(); ++i)
        if (d[i] > d[i - 1]) return false;
    return true;
}

FiltrationProfile filtration_profile(const MultOperator& op, std::size_t tau) {
    FiltrationProfile p;
    p.mu = op.mu();
    p.tau = tau;
    const int n = op.n();
    QMat kernel = op.matrix().nullspace();
    for (int i = 1; i < n; ++i) {
        std::size_t di = op.rank_of_power(static_cast<unsigned>(i)) -
                         op.rank_of_power(static_cast<unsigned>(i + 1));
        std::size_t direct = intersection_dim(kernel, op.power(static_cast<unsigned>(i)));
        if (di != direct)
            throw InternalCheckError("filtration rank profile disagrees with ker cap im");
        p.d.push_back(di);
    }
    return p;
}

bool power_membership(const Polynomial& f, unsigned k, const StandardBasis& jacobian_sb) {
    return membership(f.pow(k), jacobian_sb);
}

AlgebraAnalysis analyze_algebra(const Polynomial& f, std::size_t max_dim) {
    require_germ(f);
    AlgebraAnalysis out;
    out.n = f.n();
    out.m = *f.order();
    if (out.m == 1) throw SmoothGermError("the germ is smooth: mu = tau = 0");

    auto sb_j = standard_basis(jacobian_ideal(f), MonomialOrder::LocalDegrevlex);
    auto st_j = staircase(sb_j, max_dim);
    auto sb_t = standard_basis(tjurina_ideal(f), MonomialOrder::LocalDegrevlex);
    auto st_t = staircase(sb_t, max_dim);
    if (st_j.finite != st_t.finite)
        throw InternalCheckError("S/J_f and S/(J_f,f) disagree on finiteness");
    if (!st_j.finite)
        throw NotIsolatedError("dim S/J_f is infinite: the singularity is not isolated");

    out.mu = st_j.size();
    out.tau = st_t.size();
    if (out.mu == 0 || out.tau == 0)
        throw InternalCheckError("isolated germ of multiplicity >= 2 with mu = 0 or tau = 0");
    if (out.tau > out.mu) throw InternalCheckError("tau exceeds mu");
    out.ratio = Rat(static_cast<unsigned long>(out.mu)) / Rat(static_cast<unsigned long>(out.tau));

    MilnorAlgebra alg(f, std::move(sb_j), std::move(st_j));
    MultOperator op = MultOperator::build(alg);
    if (op.kernel_dim() != out.tau)
        throw InternalCheckError("dim ker(A) != tau: annihilator identification failed");

    out.profile = filtration_profile(op, out.tau);

    const std::size_t n = static_cast<std::size_t>(out.n);
    out.theorem_ok = (out.mu <= n * out.tau) && (out.mu == out.tau + out.profile.sum()) &&
                     out.profile.nonincreasing();
    for (auto di : out.profile.d)
        if (di > out.tau) out.theorem_ok = false;

    out.equality_case =
        (op.rank_of_power(static_cast<unsigned>(out.n - 1)) == out.tau);
    if (out.equality_case != (out.mu == n * out.tau))
        throw InternalCheckError("ker(A) = im(A^{n-1}) disagrees with mu = n*tau");

    for (unsigned k = 1; k <= static_cast<unsigned>(out.n); ++k)
        out.f_pow_in_jf[k] = power_membership(f, k, alg.jacobian_sb());
    if (!out.f_pow_in_jf.at(static_cast<unsigned>(out.n)))
        throw InternalCheckError("normal form denies f^n in J_f although A^n = 0");
    out.bs_holds = true;

    out.saito_membership = out.f_pow_in_jf.at(1);
    if (out.saito_membership != (out.mu == out.tau))
        throw InternalCheckError("f in J_f disagrees with mu = tau");
    if (out.saito_membership != op.matrix().is_zero())
        throw InternalCheckError("f in J_f disagrees with A = 0");

    return out;
}

}  // namespace germlab
