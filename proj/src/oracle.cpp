#include "germlab/oracle.hpp"

#include <functional>
#include <queue>
#include <unordered_map>

namespace germlab {

namespace {

constexpr std::size_t kMonomialCap = 20000;

Int count_below(int n, std::uint64_t D) {  // #monomials of total degree < D
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), D - 1 + static_cast<unsigned long>(n),
                 static_cast<unsigned long>(n));
    return b;
}

std::vector<Exponent> monomials_below(int n, std::uint64_t D) {
    std::vector<Exponent> out;
    Exponent cur(static_cast<std::size_t>(n), 0);
    std::function<void(int, std::uint64_t)> rec = [&](int pos, std::uint64_t left) {
        if (pos == n) {
            out.push_back(cur);
            return;
        }
        for (std::uint64_t e = 0; e <= left; ++e) {
            cur[static_cast<std::size_t>(pos)] = static_cast<std::uint32_t>(e);
            rec(pos + 1, left - e);
        }
        cur[static_cast<std::size_t>(pos)] = 0;
    };
    rec(0, D - 1);
    return out;
}

}  // namespace

std::size_t oracle_monomial_cap() { return kMonomialCap; }

std::size_t truncated_dim(const Ideal& I, std::uint64_t D) {
    if (D < 1) throw std::invalid_argument("truncation degree must be >= 1");
    const int n = I.n();
    if (count_below(n, D) > static_cast<unsigned long>(kMonomialCap))
        throw ResourceLimitError("oracle monomial cap exceeded");

    auto mons = monomials_below(n, D);
    std::unordered_map<Exponent, std::size_t, ExponentHash> idx;
    idx.reserve(mons.size());
    for (std::size_t i = 0; i < mons.size(); ++i) idx.emplace(mons[i], i);
    const std::size_t cols = mons.size();

    // Sparse echelon form: pivots[c] holds the tail (entries right of c) of a
    // row whose leading entry at column c is normalized to 1.
    std::vector<std::vector<std::pair<std::size_t, Rat>>> pivots(cols);
    std::vector<bool> has_pivot(cols, false);
    std::size_t rank = 0;
    std::vector<Rat> dense(cols, Rat(0));

    // Worklist of columns that are actually nonzero, smallest first, so a
    // row costs its fill, not the full width.
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> work;

    for (const Polynomial& g : I.gens) {
        const std::uint64_t og = *g.order();
        if (og >= D) continue;
        for (const Exponent& a : monomials_below(n, D - og)) {
            for (const Term& t : g.terms()) {
                Exponent e = exp_add(t.exp, a);
                if (total_degree(e) >= D) continue;
                std::size_t c = idx.at(e);
                dense[c] = t.coeff;
                work.push(c);
            }
            while (!work.empty()) {
                std::size_t c = work.top();
                work.pop();
                if (dense[c] == 0) continue;  // cancelled or duplicate entry
                if (has_pivot[c]) {
                    Rat coef = dense[c];
                    dense[c] = 0;
                    for (const auto& [j, v] : pivots[c]) {
                        bool fill = (dense[j] == 0);
                        dense[j] -= coef * v;
                        if (fill && dense[j] != 0) work.push(j);
                    }
                } else {
                    Rat inv = Rat(1) / dense[c];
                    dense[c] = 0;
                    std::vector<std::pair<std::size_t, Rat>> tail;
                    while (!work.empty()) {
                        std::size_t j = work.top();
                        work.pop();
                        if (dense[j] == 0) continue;
                        tail.emplace_back(j, dense[j] * inv);
                        dense[j] = 0;
                    }
                    pivots[c] = std::move(tail);
                    has_pivot[c] = true;
                    ++rank;
                }
            }
        }
    }
    return cols - rank;
}

TruncationResult truncation_result(const Ideal& I, std::uint64_t D) {
    TruncationResult r;
    r.degree_cap = D;
    r.dim_at_cap = truncated_dim(I, D);
    r.stable = (truncated_dim(I, D + 1) == r.dim_at_cap);
    return r;
}

OracleDim oracle_dim(const Ideal& I, std::optional<std::uint64_t> certified_cap) {
    const int n = I.n();
    std::uint64_t D = certified_cap ? std::max<std::uint64_t>(*certified_cap, 1) : 2;
    std::optional<std::size_t> prev;
    for (;; ++D) {
        if (count_below(n, D) > static_cast<unsigned long>(kMonomialCap))
            return OracleDim{};  // infinite suspected
        std::size_t d = truncated_dim(I, D);
        if (prev && d < *prev)
            throw InternalCheckError("truncated dimension decreased with the cap");
        if (prev && d == *prev) return OracleDim{true, d, D - 1};
        prev = d;
    }
}

}  // namespace germlab
