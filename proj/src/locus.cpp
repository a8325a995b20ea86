#include "tlocus/locus.hpp"

#include "tlocus/detail/integer_kernels.hpp"
#include "tlocus/enumerate.hpp"

#include <exception>
#include <tuple>

namespace tlocus {

Subspace psi_basis_a(const EGraph& g1) { return orthogonalize(j0_basis(g1)); }
Subspace psi_basis_b(const EGraph& g) { return orthogonalize(d0_basis(g)); }

namespace {

void require_member(const EGraph& g1, const EGraph& g, const EdgeVector& flux) {
    if (flux.size() != g1.edge_count())
        throw PsiDomainError("flux-length", "flux has " + std::to_string(flux.size()) + " entries, G1 has " +
                                                std::to_string(g1.edge_count()) + " edges");
    for (std::size_t e = 0; e < flux.size(); ++e)
        if (flux[e] <= 0)
            throw PsiDomainError("flux-positive", "flux entry " + std::to_string(e) + " is not positive");
    if (const auto v = first_unbalanced_vertex(g1, flux))
        throw PsiDomainError("flux-balanced", "flux is not balanced at vertex " + std::to_string(*v));
    const Realization r = realize_on(g1, flux, g);
    if (!r)
        throw PsiDomainError("flux-realizable", "net flux at a vertex of G1 is not realizable on G");
}

bool exact_monomials(const EGraph& g1) { return g1.has_integer_coordinates(); }

} // namespace

RationalVector psi_small(const EGraph& g1, const EGraph& g, const EdgeVector& flux) {
    require_member(g1, g, flux);
    return coords_in_basis(flux, psi_basis_a(g1));
}

PsiOutput psi_map(const EGraph& g1, const EGraph& g, const PsiInput& input) {
    require_member(g1, g, input.flux);
    const std::size_t n = g1.dim();
    if (g.dim() != n)
        throw DimensionMismatch("psi_map: G and G1 live in different dimensions");
    if (input.x.size() != n || input.x0.size() != n)
        throw PsiDomainError("state-length", "x and x0 must have length " + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i)
        if (input.x[i] <= 0)
            throw PsiDomainError("state-positive", "x entry " + std::to_string(i) + " is not positive");
    if (!stoichiometric_subspace(g1).contains(input.x - input.x0))
        throw PsiDomainError("state-slice", "x - x0 is not in the stoichiometric subspace of G1");
    const Subspace b = psi_basis_b(g);
    if (input.p.size() != b.dim())
        throw PsiDomainError("p-length", "p must have length dim D0(G) = " + std::to_string(b.dim()));

    PsiOutput out;
    if (exact_monomials(g1)) {
        out.k1 = rates_from_flux(g1, input.flux, input.x);
    } else {
        out.mode = Mode::approximate;
        const std::vector<double> xd = to_doubles(input.x);
        out.k1.resize(g1.edge_count());
        for (std::size_t e = 0; e < g1.edge_count(); ++e)
            out.k1[e] = from_double(input.flux[e].get_d() / monomial(xd, g1.vertex(g1.edge(e).source)));
    }
    const Realization part = realize_on(g1, out.k1, g);
    if (!part)
        throw InternalInconsistency("psi_map: J is realizable on G but J/x^y is not");
    const RationalVector c = coords_in_basis(*part.values, b);
    out.k = *part.values + combine(b, input.p - c);
    out.q = coords_in_basis(input.flux, psi_basis_a(g1));
    return out;
}

PsiPreimage psi_hat_inverse(const EGraph& g1, const EGraph& g, const EdgeVector& k, const EdgeVector& k1,
                            const RationalVector& q_hat, const RationalVector& x0, const NewtonConfig& config) {
    require_aligned(g, k, "psi_hat_inverse (k)");
    require_aligned(g1, k1, "psi_hat_inverse (k1)");
    if (!all_positive(k1))
        throw PsiDomainError("k1-positive", "k1 must be positive");
    require_positive_state(g1, x0, "psi_hat_inverse (x0)");
    if (!is_dynamically_equivalent(g, k, g1, k1))
        throw PsiDomainError("realization", "(G, k) is not dynamically equivalent to (G1, k1)");
    const ToricDecision toric = is_toric(g1, k1);
    if (!toric.toric)
        throw PsiDomainError("realization-toric", "(G1, k1) is not complex balanced: " + toric.reason);
    const Subspace a = psi_basis_a(g1);
    if (q_hat.size() != a.dim())
        throw PsiDomainError("q-length", "q must have length dim J0(G1) = " + std::to_string(a.dim()));

    PsiPreimage out;
    const SteadyState steady = birch_point(g1, k1, toric.witness, x0, config);
    EdgeVector j1;
    if (steady.mode == Mode::exact) {
        out.x = *steady.exact;
        j1 = flux_from_rates(g1, k1, out.x);
    } else {
        out.mode = Mode::approximate;
        out.x.resize(steady.x.size());
        for (std::size_t i = 0; i < steady.x.size(); ++i)
            out.x[i] = from_double(steady.x[i]);
        j1.resize(g1.edge_count());
        for (std::size_t e = 0; e < g1.edge_count(); ++e)
            j1[e] = from_double(k1[e].get_d() * monomial(steady.x, g1.vertex(g1.edge(e).source)));
    }
    out.flux = j1 + combine(a, q_hat - coords_in_basis(j1, a));
    out.p = coords_in_basis(k, psi_basis_b(g));
    return out;
}

std::string BoundReport::formula() const {
    return std::to_string(dim_jr) + " + " + std::to_string(dim_s) + " + " + std::to_string(dim_d0) + " - " +
           std::to_string(dim_j0) + " = " + std::to_string(raw) + ", capped at |E(G)| = " + std::to_string(edges_g) +
           ": " + std::to_string(capped);
}

namespace {

/// Everything about G that every subgraph query reuses.
class BoundContext {
public:
    explicit BoundContext(const EGraph& g) : constraints_(g), dim_d0_(g.edge_count() - rank(d0_constraints(g))) {}

    BoundReport evaluate(const EGraph& g1) const {
        const ConeSummary cone = jr_summary(constraints_, g1);
        BoundReport r;
        r.edges_g = constraints_.target().edge_count();
        r.edges_g1 = g1.edge_count();
        r.dim_jr = cone.dim;
        r.dim_s = stoich_dim(g1);
        r.dim_d0 = dim_d0_;
        RationalMatrix j0 = d0_constraints(g1);
        const RationalMatrix bal = balance_constraints(g1);
        for (std::size_t i = 0; i < bal.rows(); ++i)
            j0.append_row(bal.row(i));
        r.dim_j0 = g1.edge_count() - rank(j0);
        r.applicable = cone.status == ConeStatus::nonempty;
        r.raw = static_cast<long>(r.dim_jr + r.dim_s + r.dim_d0) - static_cast<long>(r.dim_j0);
        r.capped = std::min(r.raw, static_cast<long>(r.edges_g));
        r.witness = cone.witness;
        r.certificate = cone.certificate;
        return r;
    }

private:
    RealizabilityConstraints constraints_;
    std::size_t dim_d0_;
};

/// Subgraph queries on the complete graph. Every per-subgraph constraint
/// matrix (J_R hull, J0, reaction vectors) is the column restriction of one
/// integer matrix over all edges of G_c, so a query is integer rank plus an
/// integer LP with no rational arithmetic.
class MaskKernel {
public:
    MaskKernel(const EGraph& g, const EGraph& complete)
        : edges_g_(static_cast<long>(g.edge_count())), dim_d0_(g.edge_count() - rank(d0_constraints(g))) {
        const std::size_t e = complete.edge_count();
        jr_ = both(integer_rows(RealizabilityConstraints(g).for_source(complete)));
        RationalMatrix j0 = d0_constraints(complete);
        const RationalMatrix bal = balance_constraints(complete);
        for (std::size_t i = 0; i < bal.rows(); ++i)
            j0.append_row(bal.row(i));
        j0_ = both(integer_rows(j0));
        std::vector<RationalVector> reactions;
        for (std::size_t i = 0; i < e; ++i)
            reactions.push_back(complete.reaction_vector(i));
        reactions_ = both(integer_rows(RationalMatrix::from_columns(reactions, complete.dim())));
    }

    BoundRow evaluate(std::uint64_t mask) const {
        if (small_) {
            try {
                return evaluate_with<CheckedInt>(mask);
            } catch (const OverflowError&) {
            }
        }
        return evaluate_with<Integer>(mask);
    }

private:
    template <class Int>
    using Rows = std::vector<std::vector<Int>>;

    template <class Int>
    const Rows<Int>& rows(const std::tuple<Rows<Integer>, Rows<CheckedInt>>& both) const {
        return std::get<Rows<Int>>(both);
    }

    template <class Int>
    static detail::IntMatrix<Int> restrict(const Rows<Int>& rows, const std::vector<std::size_t>& cols) {
        detail::IntMatrix<Int> m;
        m.cols = cols.size();
        m.data.reserve(rows.size() * cols.size());
        for (const auto& row : rows) {
            bool nonzero = false;
            for (auto c : cols)
                nonzero = nonzero || !is_zero_int(row[c]);
            if (!nonzero)
                continue;
            for (auto c : cols)
                m.data.push_back(row[c]);
            ++m.rows;
        }
        return m;
    }

    /// Keeps the mpz rows and, when every entry fits, an int64 copy.
    std::tuple<Rows<Integer>, Rows<CheckedInt>> both(Rows<Integer> wide) {
        Rows<CheckedInt> narrow;
        for (const auto& row : wide) {
            std::vector<CheckedInt> r;
            for (const auto& x : row) {
                if (!x.fits_slong_p()) {
                    small_ = false;
                    return {std::move(wide), {}};
                }
                r.push_back(to_checked(x));
            }
            narrow.push_back(std::move(r));
        }
        return {std::move(wide), std::move(narrow)};
    }

    template <class Int>
    BoundRow evaluate_with(std::uint64_t mask) const {
        std::vector<std::size_t> cols;
        for (std::uint64_t m = mask; m; m &= m - 1)
            cols.push_back(static_cast<std::size_t>(__builtin_ctzll(m)));
        const std::size_t e1 = cols.size();

        BoundRow row;
        row.mask = mask;
        row.edges = static_cast<std::uint32_t>(e1);
        detail::IntMatrix<Int> a = restrict<Int>(rows<Int>(jr_), cols);
        const std::size_t r = detail::bareiss_eliminate(a);
        const std::size_t tilde = e1 - r;
        // The echelon rows have the same kernel; dropping the rest shrinks the LP.
        a.rows = r;
        a.data.resize(r * a.cols);
        row.applicable = positive_kernel_point(a);
        row.dim_jr = static_cast<std::uint16_t>(row.applicable ? tilde : 0);
        row.dim_s = static_cast<std::uint16_t>(detail::bareiss_rank(restrict<Int>(rows<Int>(reactions_), cols)));
        row.dim_j0 = static_cast<std::uint16_t>(e1 - detail::bareiss_rank(restrict<Int>(rows<Int>(j0_), cols)));
        row.raw = static_cast<long>(row.dim_jr + row.dim_s + dim_d0_) - static_cast<long>(row.dim_j0);
        row.capped = std::min(row.raw, edges_g_);
        return row;
    }

    /// Phase-1 LP on {A x = 0, x >= 1}; both outcomes are checked in place.
    template <class Int>
    static bool positive_kernel_point(const detail::IntMatrix<Int>& a) {
        if (a.rows == 0)
            return true;
        std::vector<Int> b(a.rows, Int(0));
        for (std::size_t i = 0; i < a.rows; ++i)
            for (std::size_t j = 0; j < a.cols; ++j)
                b[i] -= a.at(i, j);
        const detail::Phase1Result<Int> lp = detail::integer_phase1(a, b);
        if (lp.feasible) {
            // denom * x = denom + numer must be annihilated by A.
            for (std::size_t i = 0; i < a.rows; ++i) {
                Int acc = 0;
                for (std::size_t j = 0; j < a.cols; ++j)
                    acc += a.at(i, j) * (lp.denom + lp.numer[j]);
                if (!is_zero_int(acc))
                    throw InternalInconsistency("subgraph LP witness is not in the kernel");
            }
            return true;
        }
        bool some_positive = false;
        for (std::size_t j = 0; j < a.cols; ++j) {
            Int u = 0;
            for (std::size_t i = 0; i < a.rows; ++i)
                u -= lp.dual_numer[i] * a.at(i, j);
            if (sign_of(u) < 0)
                throw InternalInconsistency("subgraph LP certificate has a negative entry");
            some_positive = some_positive || sign_of(u) > 0;
        }
        if (!some_positive)
            throw InternalInconsistency("subgraph LP certificate is zero");
        return false;
    }

    long edges_g_;
    std::size_t dim_d0_;
    bool small_ = true;
    std::tuple<Rows<Integer>, Rows<CheckedInt>> jr_;
    std::tuple<Rows<Integer>, Rows<CheckedInt>> j0_;
    std::tuple<Rows<Integer>, Rows<CheckedInt>> reactions_;
};

/// Better = larger capped bound, then fewer edges; earlier rows win ties.
bool better(const BoundRow& a, const BoundRow& b) {
    if (a.capped != b.capped)
        return a.capped > b.capped;
    return a.edges < b.edges;
}

GlobalBound finish(EGraph complete, std::vector<BoundRow> table, const BoundContext& context) {
    GlobalBound out{std::move(complete), std::nullopt, std::nullopt, std::move(table)};
    const BoundRow* best = nullptr;
    for (const auto& row : out.table)
        if (row.applicable && (!best || better(row, *best)))
            best = &row;
    if (best) {
        EGraph sub = out.complete.subgraph(best->mask);
        BoundReport report = context.evaluate(sub);
        if (report.capped != best->capped || report.dim_jr != best->dim_jr || report.dim_j0 != best->dim_j0)
            throw InternalInconsistency("subgraph kernel disagrees with the full pair evaluation");
        report.mask = best->mask;
        out.best = std::move(report);
        out.best_subgraph = std::move(sub);
    }
    return out;
}

} // namespace

BoundReport pair_lower_bound(const EGraph& g, const EGraph& g1) {
    if (!is_weakly_reversible(g1))
        throw NotWeaklyReversible("pair_lower_bound: G1 is not weakly reversible");
    return BoundContext(g).evaluate(g1);
}

GlobalBound global_lower_bound_serial(const EGraph& g, std::optional<std::size_t> cap) {
    EGraph complete = complete_graph(g);
    const std::vector<std::uint64_t> masks = wr_subgraph_masks_serial(complete, cap);
    const MaskKernel kernel(g, complete);
    std::vector<BoundRow> table;
    table.reserve(masks.size());
    for (auto mask : masks)
        table.push_back(kernel.evaluate(mask));
    return finish(std::move(complete), std::move(table), BoundContext(g));
}

GlobalBound global_lower_bound(const EGraph& g, std::optional<std::size_t> cap) {
    EGraph complete = complete_graph(g);
    const std::vector<std::uint64_t> masks = wr_subgraph_masks(complete, cap);
    const MaskKernel kernel(g, complete);
    std::vector<BoundRow> table(masks.size());
    const long count = static_cast<long>(masks.size());
    std::exception_ptr failure;
    // Rows are written by index, so the table order does not depend on scheduling.
#pragma omp parallel for schedule(dynamic, 256)
    for (long i = 0; i < count; ++i) {
        try {
            table[i] = kernel.evaluate(masks[i]);
        } catch (...) {
#pragma omp critical(tlocus_bound_failure)
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    return finish(std::move(complete), std::move(table), BoundContext(g));
}

} // namespace tlocus
