#pragma once

#include <complex>
#include <vector>

#include "hcz/graph.hpp"
#include "hcz/numbers.hpp"

namespace hcz {

// Even cycle C_len; len even, >= 4.
Graph make_cycle(int len);

// Path power on nv vertices: i ~ j iff 1 <= |i - j| <= d.
Graph make_path_power(int nv, int d);

// a parts of size n plus b parts of size m, complete multipartite.
struct MultipartiteSpec {
    int a = 1, b = 1, n = 1, m = 1;
};
Graph make_multipartite(const MultipartiteSpec& spec);

// Spider with three arms of i, j, k edges hanging off center vertex 0; arm
// lengths are sorted internally. S_{1,1,1} is the claw.
Graph make_subdivided_claw(int i, int j, int k);

// Complete binary tree of height d (root = vertex 0) with every edge
// subdivided 2k times: 2^{d+1}-1 + 2k(2^{d+1}-2) vertices, max degree 3.
Graph make_tree_T(int d, int k);

// Alternating weights lambda = a + bi on even positions, mu = conj(lambda) on
// odd, with b > 0 chosen so that tr(M^n) = 0 for the half-length-n transfer
// matrix: 4b^2 = ((2a+1) tan(pi/2n))^2 + 4a + 1.
struct CycleZeroWeights {
    double a = 0, b = 0;
    int n = 0;  // half-length; the cycle is C_{2n}
    std::complex<double> lambda, mu;
    bool valid = false;  // 4b^2 > 4a + 1, i.e. lambda strictly above the parabola
};
CycleZeroWeights cycle_zero_weights(double a, int n);

// Clique blow-up grouping: class weight is the plain sum over the class.
std::vector<std::complex<double>> blowup_reduce_clique(
    const std::vector<std::complex<double>>& w, int s);
std::vector<GaussianRational> blowup_reduce_clique_exact(
    const std::vector<GaussianRational>& w, int s);

// Independent blow-up grouping: 1 + mu_i = prod_j (1 + w_{ij}).
std::vector<std::complex<double>> blowup_reduce_independent(
    const std::vector<std::complex<double>>& w, int s);
std::vector<GaussianRational> blowup_reduce_independent_exact(
    const std::vector<GaussianRational>& w, int s);

// Per-vertex weight z/s, so a K_s class carries total weight z.
std::complex<double> scale_weight_for_blowup(std::complex<double> z, int s);

// Bounded-degree zero construction on C_{2n}[2K_1]: each class holds the
// integer weight W on one side and 1 +- (delta)i alternating on the other;
// the grouped weights (2W+1) +- (W+1)(delta)i sit on a transfer-matrix zero.
struct SparseCounterexample {
    double eps = 0;
    int W = 0;        // smallest integer with eps^2 (W+1) > 2
    double a = 0;     // 2W + 1
    int n = 0;        // half-length of the base cycle
    double b = 0;     // (W+1) delta, from the cycle zero equation at a
    double delta = 0;
    std::complex<double> z_delta;                       // a + bi
    std::vector<std::complex<double>> blowup_weights;   // 4n entries, one per vertex
    std::vector<std::complex<double>> grouped_weights;  // 2n entries, one per class
};
SparseCounterexample find_sparse_counterexample(double eps);

// Closed form a(1+z)^n + b(1+z)^m + (1-a-b).
std::complex<double> multipartite_z(const MultipartiteSpec& spec, std::complex<double> z);
GaussianRational multipartite_z_exact(const MultipartiteSpec& spec, const GaussianRational& z);

// A root of A x^{2N} + B x^N + (1-A-B) within 3*eps of the target z, where
// A = L and B = tL for an integer t with 1+t ~ |z|^N. Requires |z| > 1 + eps.
struct MultipartiteRoot {
    BigInt A, B, t;
    int N = 0;
    std::complex<double> root;
    double distance = 0;   // |root - z|
    double residual = 0;   // |p(root)| / (|A x^{2N}| + |B x^N| + |C|), extended precision
};
MultipartiteRoot multipartite_root_near(std::complex<double> z, double eps);

// Occupation-ratio maps of the subdivided binary trees:
// f1(z) = lambda/(1+z), f2(z) = lambda/(1+z)^2, g = f2 o f1^(2k).
std::complex<double> tree_g(std::complex<double> lambda, int k, std::complex<double> z);
// d-fold iterate of g starting at lambda itself; equals the occupation ratio
// of the root of the height-d subdivided tree. d = 0 gives lambda.
std::complex<double> tree_g_iter(std::complex<double> lambda, int k, int d);
// dg/dz by the chain rule.
std::complex<double> tree_g_prime(std::complex<double> lambda, int k, std::complex<double> z);
// Unique nonnegative fixed point of g for lambda >= 0, bisection to 1e-14.
double tree_fixed_point(double lambda, int k);
// The positive lambda where |g'(fixed point)| passes through 1, to 1e-10.
double find_indifferent_lambda(int k);

// Newton search for g^(d)(lambda) = -1 (a zero of the height-d tree);
// the lambda-derivative is tracked exactly through the iteration.
struct TreeZero {
    std::complex<double> lambda;
    double residual = 0;  // |g^(d)(lambda) + 1|
    // Minimum |1 + z| over all intermediate values of the accepted iterate.
    // A trajectory that grazes the pole at z = -1 can blow up and collapse
    // back onto -1 numerically without lambda being a zero of the tree
    // partition function, so solutions with tiny clearance are rejected.
    double pole_clearance = 0;
    int iterations = 0;
    bool converged = false;
    std::vector<std::complex<double>> trajectory;  // seed, then each Newton step
};
TreeZero tree_zero_search(int k, int d, std::complex<double> seed);

}  // namespace hcz
