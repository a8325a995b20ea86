#pragma once

#include "tlocus/egraph.hpp"
#include "tlocus/exactla.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace tlocus {

/// Edge-indexed values (rate constants k or fluxes J), aligned with the
/// owning graph's edge order. Sign-unrestricted unless a function says so.
using EdgeVector = RationalVector;

/// Per-vertex net reaction vectors sum_{y0->y} w (y - y0); vertices without
/// outgoing edges map to zero.
using NetVectorMap = std::vector<RationalVector>;

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

void require_aligned(const EGraph& g, const EdgeVector& w, const char* what);
void require_positive_state(const EGraph& g, const RationalVector& x, const char* what);

NetVectorMap net_vectors(const EGraph& g, const EdgeVector& w);

/// x^y for integer exponents, exact. Throws DomainError for non-integer y.
Rational monomial(const RationalVector& x, const RationalVector& y);
double monomial(const std::vector<double>& x, const RationalVector& y);

/// Right-hand side of dx/dt = sum_e k_e x^{source} (target - source).
/// Exact when all vertex coordinates are integers, floating otherwise.
struct RhsValue {
    bool approximate = false;
    RationalVector exact;
    std::vector<double> approx;

    /// Throws when the value was only computed in floating point.
    const RationalVector& exact_value() const;
    std::vector<double> as_doubles() const;
};

RhsValue mass_action_rhs(const EGraph& g, const EdgeVector& k, const RationalVector& x);
std::vector<double> mass_action_rhs(const EGraph& g, const std::vector<double>& k, const std::vector<double>& x);

/// J_e = k_e x^{source(e)} and its inverse. Exact; integer coordinates only.
EdgeVector flux_from_rates(const EGraph& g, const EdgeVector& k, const RationalVector& x);
EdgeVector rates_from_flux(const EGraph& g, const EdgeVector& flux, const RationalVector& x);

/// Stacked per-vertex blocks: row (v, i) has (y - v)_i in the column of each
/// edge v -> y. Its kernel is D0(G).
RationalMatrix d0_constraints(const EGraph& g);
/// One row per vertex: +1 on incoming edges, -1 on outgoing edges.
RationalMatrix balance_constraints(const EGraph& g);

Subspace d0_basis(const EGraph& g);
Subspace j0_basis(const EGraph& g);

/// First vertex (by coordinates, over V u V') where the two systems' net
/// vectors differ, or nullopt if they agree everywhere.
std::optional<RationalVector> first_net_mismatch(const EGraph& g, const EdgeVector& w, const EGraph& g2,
                                                 const EdgeVector& w2);

bool is_dynamically_equivalent(const EGraph& g, const EdgeVector& k, const EGraph& g2, const EdgeVector& k2);
bool is_flux_equivalent(const EGraph& g, const EdgeVector& flux, const EGraph& g2, const EdgeVector& flux2);

/// Vertex where in-flux differs from out-flux, if any.
std::optional<std::size_t> first_unbalanced_vertex(const EGraph& g, const EdgeVector& flux);
/// Strictly positive and balanced at every vertex.
bool is_complex_balanced_flux(const EGraph& g, const EdgeVector& flux);

struct Realization {
    std::optional<EdgeVector> values;
    /// Where the source system's net vector left the span of the target
    /// graph's reaction vectors.
    std::optional<RationalVector> failed_vertex;

    explicit operator bool() const { return values.has_value(); }
};

/// A sign-unrestricted w on `target` with the same net vectors as
/// (source, w_source). The particular solution sets non-pivot edges to zero
/// at each vertex; the full solution set is that plus D0(target).
Realization realize_on(const EGraph& source, const EdgeVector& w_source, const EGraph& target);

} // namespace tlocus
