// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Known upstream errata print as XFAIL and do not fail.

#include "tlocus/cone.hpp"
#include "tlocus/equiv.hpp"
#include "tlocus/locus.hpp"

#include "fixtures.hpp"
#include "suites.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace tlocus;

namespace {

using suites::kBirchAgreement;
using suites::kContinuityFactor;
using suites::kLyapunovStep;
using suites::kTerminalDistance;

struct Verdict {
    bool pass = false;
    std::string detail;
    std::string xfail;   // nonempty: a sub-claim known to be wrong upstream
};

int failures = 0;

void report(int id, const std::string& name, const std::function<Verdict()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
        v = body();
    } catch (const std::exception& e) {
        v = {false, std::string("exception: ") + e.what(), ""};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!v.pass)
        ++failures;
    std::printf("%s [%d] %s: %s (%.2fs)\n", v.pass ? "PASS" : "FAIL", id, name.c_str(), v.detail.c_str(), secs);
    if (!v.xfail.empty())
        std::printf("XFAIL [%d] %s\n", id, v.xfail.c_str());
    std::fflush(stdout);
}

std::string counts(const suites::Outcome& o) {
    std::ostringstream s;
    s << o.trials << " trials, " << o.failures << " failures, " << o.positives << " equivalent";
    if (!o.passed())
        s << "; first: " << o.first_failure;
    return s.str();
}

Verdict example_spaces() {
    const EGraph cyc = fixtures::g_cyc(), k4 = fixtures::g_k4();
    const Subspace j0 = j0_basis(k4);
    const auto v = fixtures::example_d0_vectors();
    const bool dims = d0_basis(cyc).dim() == 0 && j0_basis(cyc).dim() == 0 && d0_basis(k4).dim() == 4 && j0.dim() == 3;
    bool in_d0 = true;
    for (const auto& vi : v)
        in_d0 = in_d0 && d0_basis(k4).contains(vi);
    const bool sum12 = j0.contains(v[0] + v[1]);
    const bool v1_out = !j0.contains(v[0]);
    const bool literal = j0.contains(v[0] + v[2]) && j0.contains(v[0] - v[3]);
    const bool corrected = j0.contains(v[0] - v[2]) && j0.contains(v[0] + v[3]);
    Verdict out;
    out.pass = dims && in_d0 && sum12 && v1_out && (literal || corrected);
    out.detail = "dims D0/J0: G_CYC 0/0, G_K4 4/3 " + std::string(dims ? "ok" : "MISMATCH") + "; v1+v2 in J0 " +
                 (sum12 ? "yes" : "no") + "; v1 notin J0 " + (v1_out ? "yes" : "no");
    if (!literal)
        out.xfail = "v1+v3 and v1-v4 are not balanced (per-vertex imbalance (-2,2,-2,2)); the sign-corrected "
                    "v1-v3 and v1+v4 are in J0: " + std::string(corrected ? "yes" : "no");
    return out;
}

Verdict example_bounds() {
    const EGraph cyc = fixtures::g_cyc(), k4 = fixtures::g_k4(), in = fixtures::g_in();
    struct Pair {
        EGraph g, g1;
        std::size_t jr;
        long capped;
    };
    const Pair pairs[] = {{in, cyc, 1, 3}, {in, k4, 5, 4}, {cyc, k4, 9, 8}, {k4, k4, 9, 12}};
    bool ok = true;
    std::string detail = "pairs";
    for (const auto& p : pairs) {
        const BoundReport r = pair_lower_bound(p.g, p.g1);
        ok = ok && r.applicable && r.dim_jr == p.jr && r.capped == p.capped;
        detail += " " + std::to_string(r.dim_jr) + "/" + std::to_string(r.capped);
    }
    detail += "; global";
    const std::pair<EGraph, long> globals[] = {{in, 4}, {cyc, 8}, {k4, 12}};
    for (const auto& [g, want] : globals) {
        const GlobalBound b = global_lower_bound(g);
        const long got = b.best ? b.best->capped : -1;
        ok = ok && got == want;
        detail += " " + std::to_string(got) + " (" + std::to_string(b.table.size()) + " subgraphs)";
    }
    return {ok, detail, ""};
}

Verdict lemmas() {
    const suites::Outcome a = suites::lemma_dynamical(200, 2019);
    const suites::Outcome b = suites::lemma_flux(200, 2024);
    const bool both_ways = a.positives > 0 && a.positives < a.trials && b.positives > 0 && b.positives < b.trials;
    return {a.passed() && b.passed() && both_ways, "rates: " + counts(a) + "; fluxes: " + counts(b), ""};
}

Verdict rates_vs_fluxes() {
    const suites::Outcome o = suites::flux_vs_rates(100, 2026);
    return {o.passed() && o.positives > 0 && o.positives < o.trials, counts(o), ""};
}

Verdict cones() {
    const suites::Outcome c = suites::cone_certification(60, 77);
    const suites::Outcome s = suites::balance_sweep();
    return {c.passed() && s.passed() && c.positives > 0 && c.positives < c.trials,
            "certified: " + std::to_string(c.trials) + " results (" + std::to_string(c.positives) + " nonempty, " +
                std::to_string(c.trials - c.positives) + " empty), " + std::to_string(c.failures) +
                " failures; sweep: " + std::to_string(s.trials) + " graphs, " + std::to_string(s.positives) +
                " weakly reversible, " + std::to_string(s.failures) + " failures",
            ""};
}

Verdict matrix_tree() {
    const suites::Outcome o = suites::matrix_tree(6);
    return {o.passed(), std::to_string(o.trials) + " graphs, " + std::to_string(o.failures) + " mismatches", ""};
}

Verdict psi() {
    const suites::Outcome inj = suites::psi_determinism_and_injectivity(50, 35);
    const suites::Outcome well = suites::psi_well_defined(40, 36);
    const suites::Outcome trip = suites::psi_round_trip(20, 37);
    const suites::Outcome open = suites::q_openness();
    const suites::ContinuityReport cont = suites::psi_continuity();
    std::ostringstream s;
    s << "injective " << inj.trials - inj.failures << "/" << inj.trials << ", well-defined "
      << well.trials - well.failures << "/" << well.trials << ", round trip " << trip.trials - trip.failures << "/"
      << trip.trials << ", openness " << open.trials - open.failures << "/" << open.trials << ", continuity C =";
    for (double c : cont.constants)
        s << ' ' << c;
    s << " (factor < " << kContinuityFactor << ")";
    return {inj.passed() && well.passed() && trip.passed() && open.passed() && cont.passed, s.str(), ""};
}

Verdict birch() {
    const suites::Outcome agree = suites::birch_agreement(31);
    const suites::Outcome descent = suites::lyapunov_descent(32);
    std::ostringstream s;
    s << "agreement " << agree.trials - agree.failures << "/" << agree.trials << " within " << kBirchAgreement
      << "; descent " << descent.trials - descent.failures << "/" << descent.trials << " (step tol " << kLyapunovStep
      << ", terminal " << kTerminalDistance << ")";
    if (!agree.passed())
        s << "; " << agree.first_failure;
    if (!descent.passed())
        s << "; " << descent.first_failure;
    return {agree.passed() && descent.passed(), s.str(), ""};
}

} // namespace

int main() {
    report(1, "D0/J0 worked example", example_spaces);
    report(2, "cone dimensions and bounds", example_bounds);
    report(3, "equivalence lemmas", lemmas);
    report(4, "rates vs fluxes", rates_vs_fluxes);
    report(5, "cone certification", cones);
    report(6, "Matrix-Tree oracle", matrix_tree);
    report(7, "Psi suite", psi);
    report(8, "Birch/Lyapunov", birch);
    std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILED", failures);
    return failures == 0 ? 0 : 1;
}
