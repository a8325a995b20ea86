#include "tlocus/cone.hpp"

#include "tlocus/detail/integer_kernels.hpp"

namespace tlocus {

const char* to_string(ConeStatus status) { return status == ConeStatus::empty ? "empty" : "nonempty"; }

namespace {

template <class Int>
PositivePoint run_phase1(const std::vector<std::vector<Integer>>& rows, std::size_t cols) {
    // x = 1 + z with z >= 0 turns {A x = 0, x >= 1} into {A z = -A 1, z >= 0}.
    const auto a = detail::convert<Int>(rows, cols);
    std::vector<Int> b(rows.size(), Int(0));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j)
            b[i] -= a.at(i, j);
    const auto result = detail::integer_phase1(a, b);

    PositivePoint out;
    out.pivots = result.pivots;
    const Integer denom = to_mpz(result.denom);
    if (result.feasible) {
        RationalVector x(cols);
        for (std::size_t j = 0; j < cols; ++j) {
            Rational z(to_mpz(result.numer[j]), denom);
            z.canonicalize();
            x[j] = 1 + z;
        }
        out.witness = std::move(x);
        return out;
    }
    // u = -A^T y; scaling by the positive denominator keeps it a certificate.
    std::vector<Integer> u(cols, Integer(0));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Integer y = to_mpz(result.dual_numer[i]);
        if (y == 0)
            continue;
        for (std::size_t j = 0; j < cols; ++j)
            u[j] -= y * rows[i][j];
    }
    Integer g = 0;
    for (const auto& v : u)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    RationalVector cert(cols);
    for (std::size_t j = 0; j < cols; ++j)
        cert[j] = g > 1 ? Rational(Integer(u[j] / g)) : Rational(u[j]);
    out.certificate = std::move(cert);
    return out;
}

} // namespace

PositivePoint positive_point_in_kernel(const RationalMatrix& constraints) {
    const auto rows = integer_rows(constraints);
    const std::size_t cols = constraints.cols();
    if (rows.empty()) {
        PositivePoint out;
        out.witness = RationalVector(cols, Rational(1));
        return out;
    }
    try {
        return run_phase1<CheckedInt>(rows, cols);
    } catch (const OverflowError&) {
        return run_phase1<Integer>(rows, cols);
    }
}

PositivePoint positive_point(const Subspace& s) {
    if (s.dim() == 0) {
        // Only the origin; any standard basis vector certifies emptiness.
        PositivePoint out;
        if (s.ambient() == 0) {
            out.witness = RationalVector{};
            return out;
        }
        RationalVector u = zeros(s.ambient());
        u[0] = 1;
        out.certificate = std::move(u);
        return out;
    }
    return positive_point_in_kernel(orthogonal_complement(s).as_rows());
}

bool certifies_empty(const Subspace& s, const RationalVector& u) {
    if (u.size() != s.ambient())
        return false;
    bool some_positive = false;
    for (const auto& x : u) {
        if (x < 0)
            return false;
        if (x > 0)
            some_positive = true;
    }
    if (!some_positive)
        return false;
    for (const auto& b : s.basis())
        if (dot(b, u) != 0)
            return false;
    return true;
}

RealizabilityConstraints::RealizabilityConstraints(const EGraph& target) : target_(target) {
    const std::size_t n = target_.dim();
    for (std::size_t v = 0; v < target_.vertex_count(); ++v) {
        std::vector<RationalVector> directions;
        for (auto e : target_.out_edges(v))
            directions.push_back(target_.reaction_vector(e));
        const Subspace span = Subspace::span_of(n, directions);
        complement_.emplace(target_.vertex(v), orthogonal_complement(span).basis());
    }
}

RationalMatrix RealizabilityConstraints::for_source(const EGraph& g1) const {
    if (g1.dim() != target_.dim())
        throw DimensionMismatch("J_R constraints: graphs live in different dimensions");
    const std::size_t n = g1.dim();
    const std::size_t e1 = g1.edge_count();
    RationalMatrix m(0, e1);
    for (std::size_t v = 0; v < g1.vertex_count(); ++v) {
        const auto& outs = g1.out_edges(v);
        if (outs.empty())
            continue;
        std::vector<RationalVector> reactions;
        for (auto e : outs)
            reactions.push_back(g1.reaction_vector(e));
        auto add_row = [&](const RationalVector& normal) {
            RationalVector row = zeros(e1);
            bool nonzero = false;
            for (std::size_t c = 0; c < outs.size(); ++c) {
                row[outs[c]] = dot(normal, reactions[c]);
                nonzero = nonzero || row[outs[c]] != 0;
            }
            if (nonzero)
                m.append_row(row);
        };
        const auto it = complement_.find(g1.vertex(v));
        if (it == complement_.end()) {
            for (std::size_t i = 0; i < n; ++i) {
                RationalVector unit = zeros(n);
                unit[i] = 1;
                add_row(unit);
            }
        } else {
            for (const auto& normal : it->second)
                add_row(normal);
        }
    }
    const RationalMatrix balance = balance_constraints(g1);
    for (std::size_t r = 0; r < balance.rows(); ++r)
        m.append_row(balance.row(r));
    return m;
}

RationalMatrix jr_constraints(const EGraph& g1, const EGraph& g) { return RealizabilityConstraints(g).for_source(g1); }

Subspace jr_subspace(const EGraph& g1, const EGraph& g) {
    if (!is_weakly_reversible(g1))
        throw NotWeaklyReversible("J_R(G1, G) needs a weakly reversible G1");
    return kernel_basis(jr_constraints(g1, g));
}

ConeSummary jr_summary(const RealizabilityConstraints& context, const EGraph& g1) {
    if (!is_weakly_reversible(g1))
        throw NotWeaklyReversible("J_R(G1, G) needs a weakly reversible G1");
    const RationalMatrix a = context.for_source(g1);
    ConeSummary out;
    out.tilde_dim = g1.edge_count() - rank(a);
    PositivePoint pp = positive_point_in_kernel(a);
    if (pp.feasible()) {
        if (!is_complex_balanced_flux(g1, *pp.witness) || !realize_on(g1, *pp.witness, context.target()))
            throw InternalInconsistency("LP witness is not a member of J_R(G1, G)");
        out.status = ConeStatus::nonempty;
        out.dim = out.tilde_dim;
        out.witness = std::move(pp.witness);
    } else {
        out.certificate = std::move(pp.certificate);
    }
    return out;
}

ConeResult jr_dimension(const EGraph& g1, const EGraph& g) {
    const RealizabilityConstraints context(g);
    ConeSummary summary = jr_summary(context, g1);
    ConeResult out;
    out.tilde_basis = kernel_basis(context.for_source(g1));
    if (out.tilde_basis.dim() != summary.tilde_dim)
        throw InternalInconsistency("kernel dimension disagrees with rank");
    if (summary.certificate && !certifies_empty(out.tilde_basis, *summary.certificate))
        throw InternalInconsistency("simplex emptiness certificate failed verification");
    out.status = summary.status;
    out.dim = summary.dim;
    out.tilde_dim = summary.tilde_dim;
    out.witness = std::move(summary.witness);
    out.certificate = std::move(summary.certificate);
    return out;
}

std::size_t hat_jr_dimension(const EGraph& g1, const EGraph& g) {
    const ConeResult cone = jr_dimension(g1, g);
    if (cone.status == ConeStatus::empty)
        throw DomainError("hat J_R dimension is only defined for a nonempty cone");
    std::vector<RationalVector> stacked = cone.tilde_basis.basis();
    const Subspace j0 = j0_basis(g1);
    stacked.insert(stacked.end(), j0.basis().begin(), j0.basis().end());
    const std::size_t d = stacked.empty() ? 0 : rank_of_vectors(stacked, g1.edge_count());
    if (d != cone.dim)
        throw InternalInconsistency("J0(G1) is not contained in the hull of J_R(G1, G): " + std::to_string(d) +
                                    " != " + std::to_string(cone.dim));
    return d;
}

bool is_member_jr(const EGraph& g1, const EGraph& g, const EdgeVector& flux) {
    require_aligned(g1, flux, "is_member_jr");
    for (std::size_t e = 0; e < flux.size(); ++e)
        if (flux[e] <= 0)
            throw DomainError("is_member_jr: flux entry " + std::to_string(e) + " is not positive");
    if (first_unbalanced_vertex(g1, flux))
        return false;
    return realize_on(g1, flux, g).values.has_value();
}

Rational openness_radius(const EdgeVector& flux, const RationalVector& direction) {
    if (flux.size() != direction.size())
        throw DimensionMismatch("openness_radius: length mismatch");
    std::optional<Rational> eps;
    for (std::size_t j = 0; j < flux.size(); ++j) {
        if (direction[j] == 0)
            continue;
        const Rational bound = flux[j] / (2 * abs(direction[j]));
        if (!eps || bound < *eps)
            eps = bound;
    }
    return eps.value_or(Rational(1));
}

Subspace balance_subspace(const EGraph& g) { return kernel_basis(balance_constraints(g)); }

} // namespace tlocus
