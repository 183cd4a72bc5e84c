#include "germlab/polynomial.hpp"

#include <algorithm>
#include <map>

namespace germlab {

namespace {

struct GlobalDesc {
    bool operator()(const Exponent& a, const Exponent& b) const {
        return mono_cmp(a, b, MonomialOrder::GlobalDegrevlex) > 0;
    }
};

}  // namespace

Polynomial Polynomial::constant(int n, const Rat& c) {
    Polynomial p(n);
    if (c != 0) p.terms_.push_back({c, Exponent(n, 0)});
    return p;
}

Polynomial Polynomial::monomial(const Rat& c, const Exponent& e) {
    Polynomial p(static_cast<int>(e.size()));
    if (c == 0) throw std::invalid_argument("monomial with zero coefficient");
    p.terms_.push_back({c, e});
    return p;
}

Polynomial Polynomial::variable(int n, int i) {
    if (i < 0 || i >= n) throw std::out_of_range("variable index out of range");
    Exponent e(n, 0);
    e[i] = 1;
    return monomial(1, e);
}

Polynomial Polynomial::from_terms(int n, std::vector<Term> ts) {
    std::map<Exponent, Rat, GlobalDesc> acc;
    for (auto& t : ts) {
        if (static_cast<int>(t.exp.size()) != n) {
            throw std::invalid_argument("term exponent length differs from ring dimension");
        }
        acc[t.exp] += t.coeff;
    }
    Polynomial p(n);
    for (auto& [e, c] : acc) {
        if (c != 0) p.terms_.push_back({c, e});
    }
    return p;
}

std::optional<std::uint64_t> Polynomial::order() const {
    if (terms_.empty()) return std::nullopt;
    std::uint64_t best = total_degree(terms_[0].exp);
    for (const auto& t : terms_) best = std::min(best, total_degree(t.exp));
    return best;
}

std::optional<std::uint64_t> Polynomial::max_degree() const {
    if (terms_.empty()) return std::nullopt;
    std::uint64_t best = 0;
    for (const auto& t : terms_) best = std::max(best, total_degree(t.exp));
    return best;
}

const Term& Polynomial::leading_term(MonomialOrder ord) const {
    if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
    const Term* best = &terms_[0];
    for (const auto& t : terms_) {
        if (mono_cmp(t.exp, best->exp, ord) > 0) best = &t;
    }
    return *best;
}

Rat Polynomial::coeff_of(const Exponent& e) const {
    for (const auto& t : terms_) {
        if (t.exp == e) return t.coeff;
    }
    return Rat(0);
}

Rat Polynomial::constant_term() const { return coeff_of(Exponent(n_, 0)); }

Polynomial Polynomial::operator-() const {
    Polynomial r(n_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({-t.coeff, t.exp});
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_ring(o);
    Polynomial r(n_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        const int c = mono_cmp(terms_[i].exp, o.terms_[j].exp, MonomialOrder::GlobalDegrevlex);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Rat s = terms_[i].coeff + o.terms_[j].coeff;
            if (s != 0) r.terms_.push_back({std::move(s), terms_[i].exp});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(o);
    std::map<Exponent, Rat, GlobalDesc> acc;
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            acc[exp_add(a.exp, b.exp)] += a.coeff * b.coeff;
        }
    }
    Polynomial r(n_);
    for (auto& [e, c] : acc) {
        if (c != 0) r.terms_.push_back({c, e});
    }
    return r;
}

Polynomial Polynomial::operator*(const Rat& c) const {
    if (c == 0) return Polynomial(n_);
    Polynomial r(n_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.coeff * c, t.exp});
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (n_ != o.n_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].exp != o.terms_[i].exp || terms_[i].coeff != o.terms_[i].coeff) return false;
    }
    return true;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial acc = constant(n_, 1);
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1u) acc = acc * base;
        k >>= 1u;
        if (k > 0) base = base * base;
    }
    return acc;
}

Polynomial Polynomial::partial(int i) const {
    if (i < 0 || i >= n_) throw std::out_of_range("variable index out of range");
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) {
        if (t.exp[i] == 0) continue;
        Exponent e = t.exp;
        const Rat c = t.coeff * e[i];
        e[i] -= 1;
        ts.push_back({c, std::move(e)});
    }
    return from_terms(n_, std::move(ts));
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != n_) {
        throw std::invalid_argument("substitute needs one image per variable");
    }
    const int m = images[0].n();
    for (const auto& g : images) {
        if (g.n() != m) throw std::invalid_argument("substitution images in different rings");
    }
    // Per-variable power cache.
    std::vector<std::vector<Polynomial>> pows(n_);
    for (int i = 0; i < n_; ++i) pows[i].push_back(constant(m, 1));

    Polynomial acc(m);
    for (const auto& t : terms_) {
        Polynomial mono = constant(m, t.coeff);
        for (int i = 0; i < n_; ++i) {
            const std::uint32_t e = t.exp[i];
            while (pows[i].size() <= e) pows[i].push_back(pows[i].back() * images[i]);
            if (e > 0) mono = mono * pows[i][e];
        }
        acc = acc + mono;
    }
    return acc;
}

Polynomial Polynomial::degree_part(std::uint64_t d) const {
    Polynomial r(n_);
    for (const auto& t : terms_) {
        if (total_degree(t.exp) == d) r.terms_.push_back(t);
    }
    return r;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const std::uint64_t d = total_degree(terms_[0].exp);
    for (const auto& t : terms_) {
        if (total_degree(t.exp) != d) return false;
    }
    return true;
}

Polynomial Polynomial::times_term(const Rat& c, const Exponent& e) const {
    if (c == 0) throw std::invalid_argument("times_term with zero coefficient");
    Polynomial r(n_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.coeff * c, exp_add(t.exp, e)});
    return r;
}

Polynomial Polynomial::primitive_part() const {
    if (terms_.empty()) return *this;
    Int den = 1;
    for (const auto& t : terms_) {
        Int g;
        mpz_lcm(g.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den().get_mpz_t());
        den = g;
    }
    Int content = 0;
    for (const auto& t : terms_) {
        Int num = t.coeff.get_num() * (den / t.coeff.get_den());
        Int g;
        mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
        content = g;
    }
    Rat scale(den, content);
    scale.canonicalize();
    if (terms_[0].coeff < 0) scale = -scale;
    return *this * scale;
}

}  // namespace germlab
