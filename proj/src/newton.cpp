#include "germlab/newton.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "germlab/errors.hpp"
#include "germlab/ratmat.hpp"

namespace germlab {

namespace {

using IVec = std::vector<Int>;

constexpr int kMaxNewtonDim = 4;
constexpr std::size_t kMaxHullPoints = 64;

Int small_det(const std::vector<IVec>& m) {
    const std::size_t k = m.size();
    if (k == 0) return Int(1);
    if (k == 1) return m[0][0];
    if (k == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    Int acc(0);
    for (std::size_t j = 0; j < k; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<IVec> sub(k - 1, IVec(k - 1));
        for (std::size_t i = 1; i < k; ++i) {
            std::size_t c = 0;
            for (std::size_t jj = 0; jj < k; ++jj)
                if (jj != j) sub[i - 1][c++] = m[i][jj];
        }
        Int term = m[0][j] * small_det(sub);
        if (j % 2 == 1)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

Int dot(const IVec& a, const IVec& b) {
    Int s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Exact volume of the convex hull of integer points in dimension d, via
// vol = (1/d) sum over facets of |w.c0 - c| / |w_k| * vol(proj_k F),
// where w is the facet normal, c0 any reference point, and proj_k drops a
// coordinate with w_k != 0.  Every facet hyperplane is spanned by some
// d-subset of the points, so enumerating those (deduplicated) finds all.
Rat hull_volume(std::vector<IVec> pts, int d) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < static_cast<std::size_t>(d) + 1) return Rat(0);
    if (d == 1) return Rat(pts.back()[0] - pts.front()[0]);

    QMat diff(pts.size() - 1, static_cast<std::size_t>(d));
    for (std::size_t i = 1; i < pts.size(); ++i)
        for (int j = 0; j < d; ++j) diff.at(i - 1, static_cast<std::size_t>(j)) = Rat(pts[i][j] - pts[0][j]);
    if (diff.rank() < static_cast<std::size_t>(d)) return Rat(0);

    if (pts.size() > kMaxHullPoints)
        throw ResourceLimitError("too many Newton hull candidate points");

    std::vector<Rat> c0(static_cast<std::size_t>(d), Rat(0));
    for (const IVec& p : pts)
        for (int j = 0; j < d; ++j) c0[static_cast<std::size_t>(j)] += Rat(p[j]);
    for (int j = 0; j < d; ++j)
        c0[static_cast<std::size_t>(j)] /= Rat(static_cast<unsigned long>(pts.size()));

    std::set<IVec> seen;  // w with c appended
    Rat vol(0);

    auto process = [&](const std::vector<std::size_t>& sel) {
        std::vector<IVec> rows(static_cast<std::size_t>(d) - 1, IVec(static_cast<std::size_t>(d)));
        for (int i = 1; i < d; ++i)
            for (int j = 0; j < d; ++j)
                rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] =
                    pts[sel[static_cast<std::size_t>(i)]][j] - pts[sel[0]][j];

        IVec w(static_cast<std::size_t>(d));
        bool nonzero = false;
        for (int j = 0; j < d; ++j) {
            std::vector<IVec> minor(static_cast<std::size_t>(d) - 1, IVec(static_cast<std::size_t>(d) - 1));
            for (int r = 0; r + 1 < d; ++r) {
                std::size_t c = 0;
                for (int col = 0; col < d; ++col)
                    if (col != j) minor[static_cast<std::size_t>(r)][c++] = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            }
            Int det = small_det(minor);
            w[static_cast<std::size_t>(j)] = (j % 2 == 1) ? Int(-det) : det;
            if (w[static_cast<std::size_t>(j)] != 0) nonzero = true;
        }
        if (!nonzero) return;  // degenerate subset

        Int g(0);
        for (const Int& v : w) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        for (Int& v : w) v /= g;
        std::size_t fnz = 0;
        while (w[fnz] == 0) ++fnz;
        if (w[fnz] < 0)
            for (Int& v : w) v = -v;
        Int c = dot(w, pts[sel[0]]);

        IVec key = w;
        key.push_back(c);
        if (!seen.insert(key).second) return;

        bool above = false, below = false;
        std::vector<IVec> face;
        for (const IVec& p : pts) {
            Int s = dot(w, p);
            if (s > c)
                above = true;
            else if (s < c)
                below = true;
            else
                face.push_back(p);
            if (above && below) return;  // not a supporting hyperplane
        }

        std::vector<IVec> proj;
        proj.reserve(face.size());
        for (const IVec& q : face) {
            IVec r;
            r.reserve(static_cast<std::size_t>(d) - 1);
            for (int j = 0; j < d; ++j)
                if (static_cast<std::size_t>(j) != fnz) r.push_back(q[j]);
            proj.push_back(std::move(r));
        }

        Rat h(0);
        for (int j = 0; j < d; ++j) h += Rat(w[static_cast<std::size_t>(j)]) * c0[static_cast<std::size_t>(j)];
        h -= Rat(c);
        h = abs(h);
        vol += h / Rat(abs(w[fnz])) * hull_volume(proj, d - 1);
    };

    std::vector<std::size_t> sel(static_cast<std::size_t>(d));
    std::function<void(int, std::size_t)> rec = [&](int pos, std::size_t start) {
        if (pos == d) {
            process(sel);
            return;
        }
        for (std::size_t i = start; i + static_cast<std::size_t>(d - pos - 1) < pts.size(); ++i) {
            sel[static_cast<std::size_t>(pos)] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 0);

    return vol / d;
}

}  // namespace

SupportSet support(const Polynomial& f) {
    SupportSet s;
    s.n = f.n();
    for (const Term& t : f.terms()) s.points.push_back(t.exp);
    std::sort(s.points.begin(), s.points.end());
    s.points.erase(std::unique(s.points.begin(), s.points.end()), s.points.end());
    return s;
}

std::vector<int> missing_axes(const SupportSet& s) {
    std::vector<int> missing;
    for (int i = 0; i < s.n; ++i) {
        bool found = false;
        for (const Exponent& p : s.points) {
            bool pure = p[static_cast<std::size_t>(i)] > 0;
            for (int j = 0; pure && j < s.n; ++j)
                if (j != i && p[static_cast<std::size_t>(j)] != 0) pure = false;
            if (pure) {
                found = true;
                break;
            }
        }
        if (!found) missing.push_back(i);
    }
    return missing;
}

bool is_convenient(const SupportSet& s) { return missing_axes(s).empty(); }

Rat under_diagram_volume(const SupportSet& s, const std::vector<int>& axes) {
    const int d = static_cast<int>(axes.size());
    if (d < 1) throw std::invalid_argument("axes must be nonempty");
    if (d > kMaxNewtonDim)
        throw ResourceLimitError("Newton volumes are limited to 4 effective dimensions");
    for (int a : axes)
        if (a < 0 || a >= s.n) throw std::invalid_argument("axis index out of range");

    std::vector<IVec> rpts;
    for (const Exponent& p : s.points) {
        bool inside = true;
        for (int j = 0; inside && j < s.n; ++j)
            if (p[static_cast<std::size_t>(j)] != 0 &&
                !std::binary_search(axes.begin(), axes.end(), j))
                inside = false;
        if (!inside) continue;
        IVec q(static_cast<std::size_t>(d));
        for (int t = 0; t < d; ++t)
            q[static_cast<std::size_t>(t)] = Int(p[static_cast<std::size_t>(axes[static_cast<std::size_t>(t)])]);
        rpts.push_back(std::move(q));
    }

    for (int t = 0; t < d; ++t) {
        bool pure = false;
        for (const IVec& q : rpts) {
            bool ok = q[static_cast<std::size_t>(t)] > 0;
            for (int u = 0; ok && u < d; ++u)
                if (u != t && q[static_cast<std::size_t>(u)] != 0) ok = false;
            if (ok) {
                pure = true;
                break;
            }
        }
        if (!pure)
            throw NotConvenientError("support restricted to the subspace is not convenient",
                                     {axes[static_cast<std::size_t>(t)]});
    }

    Int M(0);
    for (const IVec& q : rpts)
        for (const Int& v : q)
            if (v > M) M = v;
    M += 1;

    // The part of the Newton polyhedron inside [0,M]^d is the hull of the
    // support points with arbitrary coordinate subsets pushed up to M.
    std::set<IVec> cand;
    for (const IVec& q : rpts) {
        for (unsigned mask = 0; mask < (1u << d); ++mask) {
            IVec c = q;
            for (int t = 0; t < d; ++t)
                if (mask & (1u << t)) c[static_cast<std::size_t>(t)] = M;
            cand.insert(std::move(c));
        }
    }

    Rat hull = hull_volume(std::vector<IVec>(cand.begin(), cand.end()), d);
    Rat box = Rat(int_pow(M, static_cast<unsigned long>(d)));
    Rat under = box - hull;
    if (under < 0 || under > box)
        throw InternalCheckError("under-diagram volume fell outside [0, M^d]");
    return under;
}

NewtonResult newton_number(const Polynomial& f) {
    if (f == Polynomial::zero(f.n())) throw std::invalid_argument("f must be nonzero");
    if (f.constant_term() != 0) throw std::invalid_argument("f(0) must vanish");
    const int n = f.n();
    if (n > kMaxNewtonDim)
        throw ResourceLimitError("Newton numbers are limited to 4 variables");

    SupportSet s = support(f);
    auto miss = missing_axes(s);
    if (!miss.empty()) {
        std::string msg = "the support is not convenient: no pure power on axis";
        for (std::size_t i = 0; i < miss.size(); ++i)
            msg += (i ? ", " : " ") + std::to_string(miss[i] + 1);
        throw NotConvenientError(std::move(msg), std::move(miss));
    }

    NewtonResult out;
    out.convenient = true;
    out.volumes.assign(static_cast<std::size_t>(n), Rat(0));
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> axes;
        for (int t = 0; t < n; ++t)
            if (mask & (1u << t)) axes.push_back(t);
        out.volumes[axes.size() - 1] += under_diagram_volume(s, axes);
    }

    Rat acc = (n % 2 == 0) ? Rat(1) : Rat(-1);
    Int fact(1);
    for (int q = 1; q <= n; ++q) {
        fact *= q;
        Rat term = Rat(fact) * out.volumes[static_cast<std::size_t>(q - 1)];
        if (term.get_den() != 1)
            throw InternalCheckError("q! * V_q is not an integer");
        if ((n - q) % 2 == 1) term = -term;
        acc += term;
    }
    if (acc.get_den() != 1) throw InternalCheckError("Newton number is not an integer");
    out.nu = acc.get_num();
    return out;
}

KushnirenkoReport kushnirenko_report(const Polynomial& f, std::size_t mu, std::size_t tau) {
    KushnirenkoReport rep;
    rep.newton = newton_number(f);
    rep.mu_ge_nu = Int(static_cast<unsigned long>(mu)) >= rep.newton.nu;
    rep.n_tau_ge_nu =
        Int(static_cast<unsigned long>(tau)) * f.n() >= rep.newton.nu;
    return rep;
}

}  // namespace germlab
