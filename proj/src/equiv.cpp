#include "tlocus/equiv.hpp"

#include <cmath>
#include <map>
#include <string>

namespace tlocus {

void require_aligned(const EGraph& g, const EdgeVector& w, const char* what) {
    if (w.size() != g.edge_count())
        throw DimensionMismatch(std::string(what) + ": vector has " + std::to_string(w.size()) +
                                " entries but the graph has " + std::to_string(g.edge_count()) + " edges");
}

void require_positive_state(const EGraph& g, const RationalVector& x, const char* what) {
    if (x.size() != g.dim())
        throw DimensionMismatch(std::string(what) + ": state has " + std::to_string(x.size()) +
                                " entries, expected " + std::to_string(g.dim()));
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] <= 0)
            throw DomainError(std::string(what) + ": state entry " + std::to_string(i) + " is not positive");
}

NetVectorMap net_vectors(const EGraph& g, const EdgeVector& w) {
    require_aligned(g, w, "net_vectors");
    NetVectorMap out(g.vertex_count(), zeros(g.dim()));
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (w[e] == 0)
            continue;
        const Edge& ed = g.edge(e);
        const RationalVector& y0 = g.vertex(ed.source);
        const RationalVector& y = g.vertex(ed.target);
        RationalVector& acc = out[ed.source];
        for (std::size_t i = 0; i < g.dim(); ++i)
            if (y[i] != y0[i])
                acc[i] += w[e] * (y[i] - y0[i]);
    }
    return out;
}

Rational monomial(const RationalVector& x, const RationalVector& y) {
    Rational out = 1;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] == 0)
            continue;
        if (y[i].get_den() != 1 || !y[i].get_num().fits_slong_p())
            throw DomainError("exact monomial needs integer exponents");
        out *= pow(x[i], y[i].get_num().get_si());
    }
    return out;
}

double monomial(const std::vector<double>& x, const RationalVector& y) {
    double out = 1.0;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (y[i] != 0)
            out *= std::pow(x[i], y[i].get_d());
    return out;
}

const RationalVector& RhsValue::exact_value() const {
    if (approximate)
        throw DomainError("right-hand side was evaluated in floating point (non-integer vertex coordinates)");
    return exact;
}

std::vector<double> RhsValue::as_doubles() const { return approximate ? approx : to_doubles(exact); }

RhsValue mass_action_rhs(const EGraph& g, const EdgeVector& k, const RationalVector& x) {
    require_aligned(g, k, "mass_action_rhs");
    require_positive_state(g, x, "mass_action_rhs");
    RhsValue out;
    if (!g.has_integer_coordinates()) {
        out.approximate = true;
        out.approx = mass_action_rhs(g, to_doubles(k), to_doubles(x));
        return out;
    }
    out.exact = zeros(g.dim());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (k[e] == 0)
            continue;
        const Rational rate = k[e] * monomial(x, g.vertex(g.edge(e).source));
        axpy(out.exact, rate, g.reaction_vector(e));
    }
    return out;
}

std::vector<double> mass_action_rhs(const EGraph& g, const std::vector<double>& k, const std::vector<double>& x) {
    if (k.size() != g.edge_count() || x.size() != g.dim())
        throw DimensionMismatch("mass_action_rhs: size mismatch");
    std::vector<double> out(g.dim(), 0.0);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        const double rate = k[e] * monomial(x, g.vertex(ed.source));
        for (std::size_t i = 0; i < g.dim(); ++i)
            out[i] += rate * (g.vertex(ed.target)[i].get_d() - g.vertex(ed.source)[i].get_d());
    }
    return out;
}

EdgeVector flux_from_rates(const EGraph& g, const EdgeVector& k, const RationalVector& x) {
    require_aligned(g, k, "flux_from_rates");
    require_positive_state(g, x, "flux_from_rates");
    EdgeVector out(g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        out[e] = k[e] * monomial(x, g.vertex(g.edge(e).source));
    return out;
}

EdgeVector rates_from_flux(const EGraph& g, const EdgeVector& flux, const RationalVector& x) {
    require_aligned(g, flux, "rates_from_flux");
    require_positive_state(g, x, "rates_from_flux");
    EdgeVector out(g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        out[e] = flux[e] / monomial(x, g.vertex(g.edge(e).source));
    return out;
}

RationalMatrix d0_constraints(const EGraph& g) {
    const std::size_t n = g.dim();
    RationalMatrix m(g.vertex_count() * n, g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        for (std::size_t i = 0; i < n; ++i)
            m(ed.source * n + i, e) = g.vertex(ed.target)[i] - g.vertex(ed.source)[i];
    }
    return m;
}

RationalMatrix balance_constraints(const EGraph& g) {
    RationalMatrix m(g.vertex_count(), g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        m(g.edge(e).target, e) += 1;
        m(g.edge(e).source, e) -= 1;
    }
    return m;
}

Subspace d0_basis(const EGraph& g) { return kernel_basis(d0_constraints(g)); }

Subspace j0_basis(const EGraph& g) {
    RationalMatrix m = d0_constraints(g);
    const RationalMatrix b = balance_constraints(g);
    for (std::size_t r = 0; r < b.rows(); ++r)
        m.append_row(b.row(r));
    return kernel_basis(m);
}

std::optional<RationalVector> first_net_mismatch(const EGraph& g, const EdgeVector& w, const EGraph& g2,
                                                 const EdgeVector& w2) {
    if (g.dim() != g2.dim())
        throw DimensionMismatch("equivalence test: graphs live in different dimensions");
    const NetVectorMap a = net_vectors(g, w);
    const NetVectorMap b = net_vectors(g2, w2);
    std::map<RationalVector, std::pair<RationalVector, RationalVector>> sides;
    const RationalVector zero = zeros(g.dim());
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        sides.try_emplace(g.vertex(v), zero, zero).first->second.first = a[v];
    for (std::size_t v = 0; v < g2.vertex_count(); ++v)
        sides.try_emplace(g2.vertex(v), zero, zero).first->second.second = b[v];
    for (const auto& [coords, nets] : sides)
        if (nets.first != nets.second)
            return coords;
    return std::nullopt;
}

bool is_dynamically_equivalent(const EGraph& g, const EdgeVector& k, const EGraph& g2, const EdgeVector& k2) {
    return !first_net_mismatch(g, k, g2, k2).has_value();
}

bool is_flux_equivalent(const EGraph& g, const EdgeVector& flux, const EGraph& g2, const EdgeVector& flux2) {
    return !first_net_mismatch(g, flux, g2, flux2).has_value();
}

std::optional<std::size_t> first_unbalanced_vertex(const EGraph& g, const EdgeVector& flux) {
    require_aligned(g, flux, "balance check");
    std::vector<Rational> net(g.vertex_count(), Rational(0));
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        net[g.edge(e).target] += flux[e];
        net[g.edge(e).source] -= flux[e];
    }
    for (std::size_t v = 0; v < net.size(); ++v)
        if (net[v] != 0)
            return v;
    return std::nullopt;
}

bool is_complex_balanced_flux(const EGraph& g, const EdgeVector& flux) {
    return all_positive(flux) && !first_unbalanced_vertex(g, flux);
}

Realization realize_on(const EGraph& source, const EdgeVector& w_source, const EGraph& target) {
    if (source.dim() != target.dim())
        throw DimensionMismatch("realize_on: graphs live in different dimensions");
    const std::size_t n = target.dim();
    const NetVectorMap nets = net_vectors(source, w_source);

    Realization out;
    // Source vertices unknown to the target need a zero net vector.
    for (std::size_t v = 0; v < source.vertex_count(); ++v)
        if (!target.find_vertex(source.vertex(v)) && !is_zero(nets[v])) {
            out.failed_vertex = source.vertex(v);
            return out;
        }

    EdgeVector w = zeros(target.edge_count());
    for (std::size_t v = 0; v < target.vertex_count(); ++v) {
        const auto src = source.find_vertex(target.vertex(v));
        const RationalVector want = src ? nets[*src] : zeros(n);
        const auto& outs = target.out_edges(v);
        if (outs.empty()) {
            if (!is_zero(want)) {
                out.failed_vertex = target.vertex(v);
                return out;
            }
            continue;
        }
        if (is_zero(want))
            continue;
        RationalMatrix y(n, outs.size());
        for (std::size_t c = 0; c < outs.size(); ++c) {
            const RationalVector r = target.reaction_vector(outs[c]);
            for (std::size_t i = 0; i < n; ++i)
                y(i, c) = r[i];
        }
        const auto coeffs = solve_particular(y, want);
        if (!coeffs) {
            out.failed_vertex = target.vertex(v);
            return out;
        }
        for (std::size_t c = 0; c < outs.size(); ++c)
            w[outs[c]] = (*coeffs)[c];
    }
    out.values = std::move(w);
    return out;
}

} // namespace tlocus
