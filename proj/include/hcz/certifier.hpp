#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hcz/graph.hpp"
#include "hcz/indpoly.hpp"

namespace hcz {

// One (L, U) pair of the front-growing derivation, linked to its parent by
// index into the emission order (-1 for the root pair (empty, V)).
struct AdmissiblePair {
    VertexSet L, U;
    int parent = -1;
};

// Depth-first emission of the derivation tree. Children of (L, U) are the
// pairs (S, U minus the front of L) over nonempty independent subsets S of
// the front restricted to U, in lexicographic order; the front of the empty
// set is {u} by convention.
struct AdmissibleEnumeration {
    std::vector<AdmissiblePair> pairs;
    bool truncated = false;  // emission stopped at the cap
    int max_L_size = 0;
};
AdmissibleEnumeration admissible_enumerate(const Graph& g, int u, size_t cap = 1000000);

// Observed front sizes versus the theoretical bound 2 * vol(delta_eff, 2t),
// delta_eff = max(max degree, 3). Requires the spider-freeness that makes
// the bound valid; violating inputs are rejected up front.
struct LBoundReport {
    int max_L = 0;
    long long bound = 0;
    bool ok = false;
    bool truncated = false;
};
LBoundReport check_L_bound(const Graph& g, int u, int t, size_t cap = 1000000);

enum class CertOutcome { Certified, PreconditionFailed, RatioEscaped };

// One evaluated context and the ratio Z(U) / Z(U minus front) it produced.
struct CertStep {
    std::string context;  // canonical "U=..;D=.." or "U=..;x=.." rendering
    BigComplex ratio;
};

// Replayable record of a non-vanishing run. When outcome is Certified every
// recorded ratio has real part >= 1/2 and final_z is the (nonzero) partition
// function, cross-checked against the direct evaluator.
struct Certificate {
    enum class Mode { Sttt, Clawfree };
    Mode mode = Mode::Sttt;
    CertOutcome outcome = CertOutcome::Certified;
    int delta_eff = 0;       // effective degree bound (spider mode)
    int t = 0;               // spider arm length (spider mode)
    long long r = 0;         // front-size bound (spider mode)
    long long parabola_pow = 0;  // weights checked against R(2^parabola_pow)
    int k = 0;               // clique bound (clique mode)
    std::vector<CertStep> steps;
    BigComplex final_z;
    int max_terms = 0;       // widest expansion encountered
    std::string diagnostic;  // offending weight / escape ancestry when failed

    bool certified() const { return outcome == CertOutcome::Certified; }
};

// Non-vanishing run for spider-free graphs: walks the admissible-pair
// recursion, checking every encountered set weight against the parabola
// R(2^{delta_eff * r}) and every ratio against the halfplane Re >= 1/2.
// Exact arithmetic for exact weights, 100-digit floating otherwise.
Certificate certify_sttt(const Graph& g, const WeightAssignment& w, int t);

// Non-vanishing run for claw-free graphs with clique number <= k and a
// simplicial clique K: walks rooted paths from an artificial vertex joined
// to K, checking per-vertex weights against R(k) and ratios against
// Re >= 1/2; asserts every expansion front is a clique of size <= k.
Certificate certify_clawfree(const Graph& g, const VertexSet& K, const WeightAssignment& w,
                             int k);

// Line format: "MODE params outcome", one "context-hash re im" line per step,
// then "FINAL re im"; 30 significant digits throughout.
std::string serialize_certificate(const Certificate& c);

}  // namespace hcz
