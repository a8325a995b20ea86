#include "tlocus/toric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace tlocus {

const char* to_string(Mode mode) { return mode == Mode::exact ? "exact" : "approximate"; }

TreeConstants tree_constants(const EGraph& g, const EdgeVector& k) {
    require_aligned(g, k, "tree_constants");
    if (!is_weakly_reversible(g))
        throw NotWeaklyReversible("tree constants need a weakly reversible graph");
    if (!all_positive(k))
        throw DomainError("tree constants need positive rate constants");

    TreeConstants out;
    out.classes = linkage_classes(g);
    out.values.assign(g.vertex_count(), Rational(0));
    for (const auto& members : out.classes) {
        const std::size_t m = members.size();
        std::vector<std::size_t> local(g.vertex_count(), SIZE_MAX);
        for (std::size_t i = 0; i < m; ++i)
            local[members[i]] = i;
        // Out-degree Laplacian; deleting row/column i counts trees into i.
        RationalMatrix lap(m, m);
        for (auto v : members)
            for (auto e : g.out_edges(v)) {
                const std::size_t a = local[v];
                const std::size_t b = local[g.edge(e).target];
                lap(a, a) += k[e];
                lap(a, b) -= k[e];
            }
        for (std::size_t i = 0; i < m; ++i) {
            RationalMatrix minor(m - 1, m - 1);
            for (std::size_t r = 0, rr = 0; r < m; ++r) {
                if (r == i)
                    continue;
                for (std::size_t c = 0, cc = 0; c < m; ++c) {
                    if (c == i)
                        continue;
                    minor(rr, cc++) = lap(r, c);
                }
                ++rr;
            }
            out.values[members[i]] = determinant(minor);
        }
    }
    return out;
}

bool check_complex_balanced_at(const EGraph& g, const EdgeVector& k, const RationalVector& x) {
    require_aligned(g, k, "check_complex_balanced_at");
    require_positive_state(g, x, "check_complex_balanced_at");
    if (!g.has_integer_coordinates())
        throw DomainError("exact complex-balance check needs integer vertex coordinates");
    std::vector<Rational> net(g.vertex_count(), Rational(0));
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const Rational rate = k[e] * monomial(x, g.vertex(g.edge(e).source));
        net[g.edge(e).target] += rate;
        net[g.edge(e).source] -= rate;
    }
    return std::all_of(net.begin(), net.end(), [](const Rational& v) { return v == 0; });
}

namespace {

/// Largest relative in/out mismatch over vertices.
double balance_residual(const EGraph& g, const std::vector<double>& k, const std::vector<double>& x) {
    std::vector<double> in(g.vertex_count(), 0.0), out(g.vertex_count(), 0.0);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const double rate = k[e] * monomial(x, g.vertex(g.edge(e).source));
        in[g.edge(e).target] += rate;
        out[g.edge(e).source] += rate;
    }
    double worst = 0.0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const double scale = std::max({std::abs(in[v]), std::abs(out[v]), std::numeric_limits<double>::min()});
        worst = std::max(worst, std::abs(in[v] - out[v]) / scale);
    }
    return worst;
}

} // namespace

bool check_complex_balanced_at(const EGraph& g, const EdgeVector& k, const std::vector<double>& x, double rel_tol) {
    require_aligned(g, k, "check_complex_balanced_at");
    if (x.size() != g.dim())
        throw DimensionMismatch("check_complex_balanced_at: state size mismatch");
    for (double v : x)
        if (!(v > 0))
            throw DomainError("check_complex_balanced_at: state must be positive");
    return balance_residual(g, to_doubles(k), x) <= rel_tol;
}

ToricDecision is_toric(const EGraph& g, const EdgeVector& k) {
    require_aligned(g, k, "is_toric");
    if (!all_positive(k))
        throw DomainError("is_toric needs positive rate constants");
    ToricDecision out;
    if (!is_weakly_reversible(g)) {
        out.reason = "graph is not weakly reversible";
        return out;
    }
    const TreeConstants tc = tree_constants(g, k);
    const std::size_t n = g.dim();

    // One row per non-root vertex of each class: y_i - y_root, ratio K_i/K_root.
    std::vector<RationalVector> rows;
    std::vector<Rational> ratios;
    for (const auto& members : tc.classes)
        for (std::size_t i = 1; i < members.size(); ++i) {
            rows.push_back(g.vertex(members[i]) - g.vertex(members[0]));
            ratios.push_back(tc.values[members[i]] / tc.values[members[0]]);
        }
    const std::size_t r = rows.size();
    const RationalMatrix m = RationalMatrix::from_rows(rows, n);

    // Exact consistency: every integer c with c^T M = 0 needs prod ratio^c = 1.
    const Subspace left_kernel = kernel_basis(m.transpose());
    for (const auto& c : left_kernel.basis()) {
        const Integer l = common_denominator(c);
        Rational product = 1;
        for (std::size_t j = 0; j < r; ++j) {
            if (c[j] == 0 || ratios[j] == 1)
                continue;
            const Integer exponent = c[j].get_num() * (l / c[j].get_den());
            if (!exponent.fits_slong_p())
                throw DomainError("is_toric: kernel exponent too large");
            product *= pow(ratios[j], exponent.get_si());
        }
        if (product != 1) {
            out.reason = "tree-constant ratios violate a multiplicative relation";
            return out;
        }
    }
    out.toric = true;

    // Witness: T with T M = rref(M) from rref([M | I]); u_pivot = T b, free u = 0.
    RationalMatrix aug(r, n + r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    const EchelonForm e = rref(aug);
    std::vector<double> u(n, 0.0);
    RationalVector exact(n, Rational(1));
    bool all_exact = true;
    for (std::size_t i = 0; i < e.pivots.size() && e.pivots[i] < n; ++i) {
        const std::size_t p = e.pivots[i];
        double acc = 0.0;
        Rational value = 1;
        for (std::size_t j = 0; j < r; ++j) {
            const Rational& t = e.reduced(i, n + j);
            if (t == 0 || ratios[j] == 1)
                continue;
            acc += t.get_d() * std::log(ratios[j].get_d());
            if (is_integer(t) && t.get_num().fits_slong_p())
                value *= pow(ratios[j], t.get_num().get_si());
            else
                all_exact = false;
        }
        u[p] = acc;
        exact[p] = value;
    }
    out.witness.resize(n);
    for (std::size_t j = 0; j < n; ++j)
        out.witness[j] = std::exp(u[j]);

    if (all_exact) {
        out.exact_witness = exact;
        out.witness = to_doubles(exact);
        if (g.has_integer_coordinates()) {
            if (!check_complex_balanced_at(g, k, exact))
                throw InternalInconsistency("exact toric witness is not complex balanced");
            out.witness_mode = Mode::exact;
            return out;
        }
    }
    if (!g.has_integer_coordinates())
        out.warning = "non-integer vertex coordinates: witness checked in floating point";
    out.witness_mode = Mode::approximate;
    if (balance_residual(g, to_doubles(k), out.witness) > 1e-9)
        throw InternalInconsistency("toric witness fails the floating complex-balance check");
    return out;
}

double lyapunov(const std::vector<double>& x, const std::vector<double>& x_star) {
    double h = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        h += x[i] * (std::log(x[i]) - std::log(x_star[i]) - 1.0);
    return h;
}

namespace {

std::vector<std::vector<double>> orthonormal_basis(const Subspace& s) {
    std::vector<std::vector<double>> out;
    for (const auto& v : s.basis()) {
        std::vector<double> w = to_doubles(v);
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& b : out) {
                const double c = std::inner_product(w.begin(), w.end(), b.begin(), 0.0);
                for (std::size_t i = 0; i < w.size(); ++i)
                    w[i] -= c * b[i];
            }
        const double norm = std::sqrt(std::inner_product(w.begin(), w.end(), w.begin(), 0.0));
        for (auto& x : w)
            x /= norm;
        out.push_back(std::move(w));
    }
    return out;
}

/// Solves the SPD system h d = rhs by Cholesky.
std::vector<double> solve_spd(std::vector<std::vector<double>> h, std::vector<double> rhs) {
    const std::size_t d = rhs.size();
    for (std::size_t j = 0; j < d; ++j) {
        double s = h[j][j];
        for (std::size_t k = 0; k < j; ++k)
            s -= h[j][k] * h[j][k];
        if (!(s > 0))
            throw std::runtime_error("Newton system is not positive definite");
        h[j][j] = std::sqrt(s);
        for (std::size_t i = j + 1; i < d; ++i) {
            double t = h[i][j];
            for (std::size_t k = 0; k < j; ++k)
                t -= h[i][k] * h[j][k];
            h[i][j] = t / h[j][j];
        }
    }
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < i; ++k)
            rhs[i] -= h[i][k] * rhs[k];
        rhs[i] /= h[i][i];
    }
    for (std::size_t i = d; i-- > 0;) {
        for (std::size_t k = i + 1; k < d; ++k)
            rhs[i] -= h[k][i] * rhs[k];
        rhs[i] /= h[i][i];
    }
    return rhs;
}

double slice_residual(const std::vector<std::vector<double>>& basis, const std::vector<double>& x,
                      const std::vector<double>& x0) {
    std::vector<double> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        r[i] = x[i] - x0[i];
    for (const auto& b : basis) {
        const double c = std::inner_product(r.begin(), r.end(), b.begin(), 0.0);
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] -= c * b[i];
    }
    double worst = 0.0;
    for (double v : r)
        worst = std::max(worst, std::abs(v));
    return worst;
}

} // namespace

SteadyState birch_point(const EGraph& g, const std::vector<double>& x_star, const std::vector<double>& x0,
                        const NewtonConfig& config) {
    const std::size_t n = g.dim();
    if (x_star.size() != n || x0.size() != n)
        throw DimensionMismatch("birch_point: state size mismatch");
    for (std::size_t i = 0; i < n; ++i)
        if (!(x_star[i] > 0) || !(x0[i] > 0))
            throw DomainError("birch_point: states must be positive");

    const auto basis = orthonormal_basis(stoichiometric_subspace(g));
    const std::size_t d = basis.size();
    const double scale = std::max(1.0, *std::max_element(x0.begin(), x0.end()));

    SteadyState out;
    std::vector<double> x = x0;
    auto gradient = [&](const std::vector<double>& at) {
        std::vector<double> grad(d, 0.0);
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t i = 0; i < n; ++i)
                grad[a] += basis[a][i] * (std::log(at[i]) - std::log(x_star[i]));
        return grad;
    };
    for (int it = 0; it <= config.max_iterations; ++it) {
        const std::vector<double> grad = gradient(x);
        double gnorm = 0.0;
        for (double v : grad)
            gnorm = std::max(gnorm, std::abs(v));
        if (gnorm <= config.gradient_tol && slice_residual(basis, x, x0) <= config.slice_tol * scale) {
            out.x = x;
            out.iterations = it;
            out.residual = 0.0;
            return out;
        }
        if (it == config.max_iterations)
            break;
        std::vector<std::vector<double>> hess(d, std::vector<double>(d, 0.0));
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b <= a; ++b) {
                double s = 0.0;
                for (std::size_t i = 0; i < n; ++i)
                    s += basis[a][i] * basis[b][i] / x[i];
                hess[a][b] = hess[b][a] = s;
            }
        std::vector<double> step = solve_spd(hess, grad);
        std::vector<double> dir(n, 0.0);
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t i = 0; i < n; ++i)
                dir[i] -= step[a] * basis[a][i];
        const double slope = -std::inner_product(grad.begin(), grad.end(), step.begin(), 0.0);
        const double h0 = lyapunov(x, x_star);
        double alpha = 1.0;
        std::vector<double> trial(n);
        while (true) {
            bool positive = true;
            for (std::size_t i = 0; i < n; ++i) {
                trial[i] = x[i] + alpha * dir[i];
                positive = positive && trial[i] > 0;
            }
            // Armijo, relaxed near the optimum where h is flat to rounding.
            if (positive && (lyapunov(trial, x_star) <= h0 + 1e-4 * alpha * slope || gnorm < 1e-8))
                break;
            alpha *= 0.5;
            if (alpha < 1e-20)
                throw ConvergenceError("birch_point: line search failed", x);
        }
        x = trial;
    }
    throw ConvergenceError("birch_point: no convergence within the iteration cap", x);
}

SteadyState birch_point(const EGraph& g, const EdgeVector& k, const std::vector<double>& x_star,
                        const RationalVector& x0, const NewtonConfig& config) {
    require_aligned(g, k, "birch_point");
    require_positive_state(g, x0, "birch_point");
    SteadyState out = birch_point(g, x_star, to_doubles(x0), config);
    out.residual = balance_residual(g, to_doubles(k), out.x);
    if (!g.has_integer_coordinates())
        return out;
    RationalVector snapped(out.x.size());
    const Integer max_den = 1000000;
    for (std::size_t i = 0; i < out.x.size(); ++i) {
        snapped[i] = best_rational_approximation(out.x[i], max_den);
        if (snapped[i] <= 0)
            return out;
    }
    if (!stoichiometric_subspace(g).contains(snapped - x0))
        return out;
    if (!check_complex_balanced_at(g, k, snapped))
        return out;
    out.mode = Mode::exact;
    out.x = to_doubles(snapped);
    out.exact = std::move(snapped);
    out.residual.reset();
    return out;
}

Trajectory ode_trajectory(const EGraph& g, const std::vector<double>& k, const std::vector<double>& x0, double t_end,
                          double dt, double dt_min) {
    const std::size_t n = g.dim();
    if (x0.size() != n || k.size() != g.edge_count())
        throw DimensionMismatch("ode_trajectory: size mismatch");
    for (double v : x0)
        if (!(v > 0))
            throw DomainError("ode_trajectory: initial state must be positive");
    Trajectory out;
    std::vector<double> x = x0;
    double t = 0.0;
    out.t.push_back(t);
    out.x.push_back(x);
    auto f = [&](const std::vector<double>& at) { return mass_action_rhs(g, k, at); };
    double h = dt;
    std::vector<double> tmp(n), next(n);
    while (t < t_end - 1e-15) {
        const double step = std::min(h, t_end - t);
        bool ok = true;
        auto stage = [&](const std::vector<double>& base, const std::vector<double>& slope, double c) {
            for (std::size_t i = 0; i < n; ++i) {
                tmp[i] = base[i] + c * slope[i];
                if (!(tmp[i] > 0))
                    ok = false;
            }
            return tmp;
        };
        const auto k1 = f(x);
        std::vector<double> k2, k3, k4;
        if (auto s = stage(x, k1, step / 2); ok)
            k2 = f(s);
        if (ok)
            if (auto s = stage(x, k2, step / 2); ok)
                k3 = f(s);
        if (ok)
            if (auto s = stage(x, k3, step); ok)
                k4 = f(s);
        if (ok)
            for (std::size_t i = 0; i < n; ++i) {
                next[i] = x[i] + step / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
                if (!(next[i] > 0) || !std::isfinite(next[i]))
                    ok = false;
            }
        if (!ok) {
            h /= 2;
            if (h < dt_min)
                throw DomainError("ode_trajectory: state left the positive orthant");
            continue;
        }
        x = next;
        t += step;
        out.t.push_back(t);
        out.x.push_back(x);
    }
    return out;
}

} // namespace tlocus
