#pragma once

#include "tlocus/egraph.hpp"
#include "tlocus/equiv.hpp"
#include "tlocus/exactla.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace tlocus {

/// A constraint-assembly or certificate check failed; indicates a bug rather
/// than bad input.
class InternalInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Outcome of the exact phase-1 LP deciding whether a subspace meets the
/// open positive orthant.
struct PositivePoint {
    /// Feasible: a vector of the subspace with every entry >= 1.
    std::optional<RationalVector> witness;
    /// Infeasible: u >= 0, u != 0, orthogonal to the subspace (a Farkas
    /// certificate read off the final simplex dictionary).
    std::optional<RationalVector> certificate;
    std::size_t pivots = 0;

    bool feasible() const { return witness.has_value(); }
};

/// Decides {x in span(S) : x > 0} != {} with exact rational simplex,
/// Bland's rule.
PositivePoint positive_point(const Subspace& s);
/// Same question for ker(A) given the constraint rows directly.
PositivePoint positive_point_in_kernel(const RationalMatrix& constraints);

/// True iff u is a valid emptiness certificate for span(S).
bool certifies_empty(const Subspace& s, const RationalVector& u);

/// Per-target-graph data for assembling the constraints that define the
/// linear hull of J_R(G1, G): the orthogonal complement of the span of the
/// reaction vectors leaving each vertex of G.
class RealizabilityConstraints {
public:
    explicit RealizabilityConstraints(const EGraph& target);

    /// Rows over R^{E1}: net vector zero at vertices of G1 missing from G,
    /// net vector orthogonal to each complement row at shared vertices, and
    /// in-flux = out-flux at every vertex of G1. Zero rows are dropped.
    RationalMatrix for_source(const EGraph& g1) const;

    const EGraph& target() const { return target_; }

private:
    EGraph target_;
    std::map<RationalVector, std::vector<RationalVector>> complement_;
};

RationalMatrix jr_constraints(const EGraph& g1, const EGraph& g);
/// Throws NotWeaklyReversible unless G1 is weakly reversible.
Subspace jr_subspace(const EGraph& g1, const EGraph& g);

enum class ConeStatus { empty, nonempty };
const char* to_string(ConeStatus status);

struct ConeResult {
    Subspace tilde_basis;
    std::optional<EdgeVector> witness;
    std::optional<RationalVector> certificate;
    ConeStatus status = ConeStatus::empty;
    /// dim J_R(G1,G): the hull dimension when nonempty, 0 when empty.
    std::size_t dim = 0;
    std::size_t tilde_dim = 0;
};

/// Status and dimensions without materializing the hull basis.
struct ConeSummary {
    ConeStatus status = ConeStatus::empty;
    std::size_t dim = 0;
    std::size_t tilde_dim = 0;
    std::optional<EdgeVector> witness;
    std::optional<RationalVector> certificate;
};

/// Witnesses are checked for balance and realizability before returning.
ConeSummary jr_summary(const RealizabilityConstraints& context, const EGraph& g1);
ConeResult jr_dimension(const EGraph& g1, const EGraph& g);

/// dim span(hull of J_R u J0(G1)); must equal dim J_R. Requires a nonempty
/// cone; throws InternalInconsistency if the equality fails.
std::size_t hat_jr_dimension(const EGraph& g1, const EGraph& g);

/// J positive, balanced on G1 and R-realizable on G.
bool is_member_jr(const EGraph& g1, const EGraph& g, const EdgeVector& flux);

/// A rational eps > 0 with flux +/- eps*direction strictly positive.
Rational openness_radius(const EdgeVector& flux, const RationalVector& direction);

/// The in-flux = out-flux subspace alone.
Subspace balance_subspace(const EGraph& g);

} // namespace tlocus
