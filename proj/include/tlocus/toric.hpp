#pragma once

#include "tlocus/egraph.hpp"
#include "tlocus/cone.hpp"
#include "tlocus/equiv.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tlocus {

/// Matrix-Tree constants: K_i is the total weight of spanning trees of i's
/// linkage class oriented towards i. Raw principal minors, no per-class
/// normalization.
struct TreeConstants {
    std::vector<Rational> values;                    // per vertex
    std::vector<std::vector<std::size_t>> classes;   // linkage classes
};

/// Requires a weakly reversible graph and k > 0.
TreeConstants tree_constants(const EGraph& g, const EdgeVector& k);

enum class Mode { exact, approximate };
const char* to_string(Mode mode);

struct ToricDecision {
    bool toric = false;
    std::string reason;
    /// Complex-balanced steady state, when toric.
    std::optional<RationalVector> exact_witness;
    std::vector<double> witness;
    Mode witness_mode = Mode::approximate;
    /// Set when the witness could only be checked in floating point.
    std::string warning;
};

/// Complex balance is possible iff the graph is weakly reversible and the
/// log-linear system (y_i - y_j).u = ln(K_i/K_j) is consistent. Consistency
/// is decided exactly through the multiplicative identities given by the
/// integer kernel vectors of the transposed coefficient matrix.
ToricDecision is_toric(const EGraph& g, const EdgeVector& k);

/// Exact per-vertex check of sum_out k x^{y0} = sum_in k x^{y}; integer
/// coordinates required.
bool check_complex_balanced_at(const EGraph& g, const EdgeVector& k, const RationalVector& x);
/// Floating check with relative tolerance.
bool check_complex_balanced_at(const EGraph& g, const EdgeVector& k, const std::vector<double>& x,
                               double rel_tol = 1e-10);

struct NewtonConfig {
    double gradient_tol = 1e-12;
    double slice_tol = 1e-12;
    int max_iterations = 200;
};

class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, std::vector<double> last) : std::runtime_error(what), last_(std::move(last)) {}
    const std::vector<double>& last_iterate() const { return last_; }

private:
    std::vector<double> last_;
};

struct SteadyState {
    Mode mode = Mode::approximate;
    std::vector<double> x;
    std::optional<RationalVector> exact;
    /// Largest complex-balance residual at x (relative), for approximate mode.
    std::optional<double> residual;
    int iterations = 0;
};

/// h(x) = sum x_i (ln x_i - ln x*_i - 1).
double lyapunov(const std::vector<double>& x, const std::vector<double>& x_star);

/// The unique point of (x0 + S) n R^n_{>0} with ln x - ln x* orthogonal to S,
/// by damped Newton on h restricted to the slice.
SteadyState birch_point(const EGraph& g, const std::vector<double>& x_star, const std::vector<double>& x0,
                        const NewtonConfig& config = {});

/// As above, then tries to snap the result to a rational point and verifies
/// it exactly (slice membership and complex balance for (G, k)).
SteadyState birch_point(const EGraph& g, const EdgeVector& k, const std::vector<double>& x_star,
                        const RationalVector& x0, const NewtonConfig& config = {});

struct Trajectory {
    std::vector<double> t;
    std::vector<std::vector<double>> x;
};

/// Classical RK4 with fixed step; steps that leave the positive orthant are
/// rejected and retried with half the step.
Trajectory ode_trajectory(const EGraph& g, const std::vector<double>& k, const std::vector<double>& x0, double t_end,
                          double dt, double dt_min = 1e-9);

} // namespace tlocus
