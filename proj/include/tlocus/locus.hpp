#pragma once

#include "tlocus/cone.hpp"
#include "tlocus/egraph.hpp"
#include "tlocus/equiv.hpp"
#include "tlocus/toric.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tlocus {

/// A Psi argument violated its domain; `constraint` names which one.
class PsiDomainError : public DomainError {
public:
    PsiDomainError(std::string constraint, const std::string& what)
        : DomainError(what), constraint_(std::move(constraint)) {}
    const std::string& constraint() const { return constraint_; }

private:
    std::string constraint_;
};

/// Domain point (J, x, p) of Psi. x must lie in (x0 + S_{G1}) with x > 0.
struct PsiInput {
    EdgeVector flux;     // J on G1
    RationalVector x;
    RationalVector x0;
    RationalVector p;    // length dim D0(G)
};

struct PsiOutput {
    EdgeVector k;        // on G, sign-unrestricted
    EdgeVector k1;       // J / x^y on G1
    RationalVector q;    // length dim J0(G1)
    Mode mode = Mode::exact;
};

struct PsiPreimage {
    EdgeVector flux;
    RationalVector x;
    RationalVector p;
    Mode mode = Mode::exact;
};

/// The pinned orthogonal bases: A for J0(G1), B for D0(G).
Subspace psi_basis_a(const EGraph& g1);
Subspace psi_basis_b(const EGraph& g);

/// q = coordinates of J against A. Throws PsiDomainError unless J is a
/// member of J_R(G1, G).
RationalVector psi_small(const EGraph& g1, const EGraph& g, const EdgeVector& flux);

/// k = k_part + sum (p_i - c_i) B_i where k_part realizes (G1, J/x^y) on G
/// and c are its B-coordinates, so coords(k, B) = p exactly.
/// Non-integer coordinates of G1 switch to approximate mode.
PsiOutput psi_map(const EGraph& g1, const EGraph& g, const PsiInput& input);

/// Inverse direction: x is the Birch point of k1 in x0 + S_{G1},
/// J1 = k1 x^y, J = J1 + sum (q_i - <J1,A_i>/<A_i,A_i>) A_i, p = coords(k, B).
/// Requires (G, k) dynamically equivalent to (G1, k1) and k1 toric.
PsiPreimage psi_hat_inverse(const EGraph& g1, const EGraph& g, const EdgeVector& k, const EdgeVector& k1,
                            const RationalVector& q_hat, const RationalVector& x0, const NewtonConfig& config = {});

struct BoundReport {
    std::size_t edges_g = 0;
    std::size_t edges_g1 = 0;
    std::size_t dim_jr = 0;
    std::size_t dim_s = 0;
    std::size_t dim_d0 = 0;
    std::size_t dim_j0 = 0;
    long raw = 0;
    long capped = 0;
    /// False when J_R(G1, G) is empty; the numbers are then not a bound.
    bool applicable = false;
    std::optional<EdgeVector> witness;
    std::optional<RationalVector> certificate;
    /// Bitmask of G1 inside the complete graph, for global searches.
    std::optional<std::uint64_t> mask;

    std::string formula() const;
};

/// raw = dim J_R(G1,G) + dim S_{G1} + dim D0(G) - dim J0(G1), capped at |E(G)|.
/// Throws NotWeaklyReversible unless G1 is weakly reversible.
BoundReport pair_lower_bound(const EGraph& g, const EGraph& g1);

/// Compact per-subgraph row of a global search.
struct BoundRow {
    std::uint64_t mask = 0;
    std::uint32_t edges = 0;
    std::uint16_t dim_jr = 0;
    std::uint16_t dim_s = 0;
    std::uint16_t dim_j0 = 0;
    bool applicable = false;
    long raw = 0;
    long capped = 0;
};

struct GlobalBound {
    EGraph complete;
    /// Full report for the argmax; nullopt when no subgraph is applicable.
    std::optional<BoundReport> best;
    std::optional<EGraph> best_subgraph;
    std::vector<BoundRow> table;   // ascending mask order
};

/// Maximizes the capped bound over weakly reversible subgraphs of the
/// complete graph on G's vertices; ties go to fewer edges, then lower mask.
GlobalBound global_lower_bound_serial(const EGraph& g, std::optional<std::size_t> cap = std::nullopt);
/// OpenMP fan-out over subgraphs; identical result to the serial version.
GlobalBound global_lower_bound(const EGraph& g, std::optional<std::size_t> cap = std::nullopt);

} // namespace tlocus
