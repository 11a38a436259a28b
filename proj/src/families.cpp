#include "hcz/families.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

#include "hcz/roots.hpp"

namespace hcz {

namespace {

std::complex<double> cpow_ui(std::complex<double> z, unsigned long e) {
    std::complex<double> acc(1.0, 0.0);
    while (e) {
        if (e & 1) acc *= z;
        z *= z;
        e >>= 1;
    }
    return acc;
}

}  // namespace

Graph make_cycle(int len) {
    if (len < 4 || len % 2 != 0) {
        throw std::invalid_argument("make_cycle: length must be even and >= 4");
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i) edges.emplace_back(i, (i + 1) % len);
    return Graph::from_edges(len, edges);
}

Graph make_path_power(int nv, int d) {
    if (nv < 1) throw std::invalid_argument("make_path_power: need at least one vertex");
    if (d < 1) throw std::invalid_argument("make_path_power: distance bound must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < nv; ++i) {
        for (int j = i + 1; j < nv && j - i <= d; ++j) edges.emplace_back(i, j);
    }
    return Graph::from_edges(nv, edges);
}

Graph make_multipartite(const MultipartiteSpec& spec) {
    if (spec.a < 1 || spec.b < 1 || spec.n < 1 || spec.m < 1) {
        throw std::invalid_argument("make_multipartite: all parameters must be >= 1");
    }
    const long long nv_ll = static_cast<long long>(spec.a) * spec.n +
                            static_cast<long long>(spec.b) * spec.m;
    if (nv_ll > 100000) throw std::invalid_argument("make_multipartite: too many vertices");
    const int nv = static_cast<int>(nv_ll);
    std::vector<int> part(nv);
    int v = 0;
    for (int p = 0; p < spec.a; ++p) {
        for (int i = 0; i < spec.n; ++i) part[v++] = p;
    }
    for (int p = 0; p < spec.b; ++p) {
        for (int i = 0; i < spec.m; ++i) part[v++] = spec.a + p;
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < nv; ++i) {
        for (int j = i + 1; j < nv; ++j) {
            if (part[i] != part[j]) edges.emplace_back(i, j);
        }
    }
    return Graph::from_edges(nv, edges);
}

Graph make_subdivided_claw(int i, int j, int k) {
    int arm[3] = {i, j, k};
    std::sort(arm, arm + 3);
    if (arm[0] < 1) throw std::invalid_argument("make_subdivided_claw: arm lengths must be >= 1");
    const long long nv_ll = 1LL + arm[0] + arm[1] + arm[2];
    if (nv_ll > 1000000) throw std::invalid_argument("make_subdivided_claw: arms too long");
    std::vector<std::pair<int, int>> edges;
    int next = 1;
    for (int armlen : arm) {
        int prev = 0;
        for (int step = 0; step < armlen; ++step) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Graph::from_edges(static_cast<int>(nv_ll), edges);
}

Graph make_tree_T(int d, int k) {
    if (d < 0) throw std::invalid_argument("make_tree_T: height must be >= 0");
    if (k < 0) throw std::invalid_argument("make_tree_T: subdivision parameter must be >= 0");
    if (d > 25) throw std::invalid_argument("make_tree_T: height too large");
    const long long nodes = (1LL << (d + 1)) - 1;
    const long long tree_edges = nodes - 1;
    const long long nv_ll = nodes + 2LL * k * tree_edges;
    if (nv_ll > 10000000) throw std::invalid_argument("make_tree_T: too many vertices");
    std::vector<std::pair<int, int>> edges;
    int next = static_cast<int>(nodes);
    for (long long c = 1; c < nodes; ++c) {
        // Heap indexing: parent of c is (c-1)/2; subdivide the edge 2k times.
        int prev = static_cast<int>((c - 1) / 2);
        for (int s = 0; s < 2 * k; ++s) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, static_cast<int>(c));
    }
    return Graph::from_edges(static_cast<int>(nv_ll), edges);
}

CycleZeroWeights cycle_zero_weights(double a, int n) {
    if (!(a >= 0)) throw std::invalid_argument("cycle_zero_weights: real part must be >= 0");
    if (n < 2) throw std::invalid_argument("cycle_zero_weights: half-length must be >= 2");
    CycleZeroWeights out;
    out.a = a;
    out.n = n;
    const double pi = std::atan2(0.0, -1.0);
    const double tn = std::tan(pi / (2.0 * n));
    const double b2x4 = (2 * a + 1) * tn * (2 * a + 1) * tn + 4 * a + 1;
    out.b = std::sqrt(b2x4) / 2.0;
    out.lambda = {a, out.b};
    out.mu = {a, -out.b};
    out.valid = b2x4 > 4 * a + 1;
    return out;
}

namespace {

template <typename T>
std::vector<T> reduce_groups(const std::vector<T>& w, int s, bool independent) {
    if (s < 1) throw std::invalid_argument("blow-up reduction: class size must be >= 1");
    if (w.empty() || w.size() % static_cast<size_t>(s) != 0) {
        throw std::invalid_argument("blow-up reduction: weight count is not a multiple of the class size");
    }
    const size_t groups = w.size() / static_cast<size_t>(s);
    std::vector<T> out;
    out.reserve(groups);
    for (size_t g = 0; g < groups; ++g) {
        if (independent) {
            T prod = T(1);
            for (int j = 0; j < s; ++j) prod = prod * (T(1) + w[g * s + j]);
            out.push_back(prod - T(1));
        } else {
            T sum = T(0);
            for (int j = 0; j < s; ++j) sum = sum + w[g * s + j];
            out.push_back(sum);
        }
    }
    return out;
}

}  // namespace

std::vector<std::complex<double>> blowup_reduce_clique(
    const std::vector<std::complex<double>>& w, int s) {
    return reduce_groups(w, s, false);
}

std::vector<GaussianRational> blowup_reduce_clique_exact(
    const std::vector<GaussianRational>& w, int s) {
    return reduce_groups(w, s, false);
}

std::vector<std::complex<double>> blowup_reduce_independent(
    const std::vector<std::complex<double>>& w, int s) {
    return reduce_groups(w, s, true);
}

std::vector<GaussianRational> blowup_reduce_independent_exact(
    const std::vector<GaussianRational>& w, int s) {
    return reduce_groups(w, s, true);
}

std::complex<double> scale_weight_for_blowup(std::complex<double> z, int s) {
    if (s < 1) throw std::invalid_argument("scale_weight_for_blowup: class size must be >= 1");
    return z / static_cast<double>(s);
}

SparseCounterexample find_sparse_counterexample(double eps) {
    if (!(eps > 0)) throw std::invalid_argument("find_sparse_counterexample: eps must be positive");
    SparseCounterexample out;
    out.eps = eps;
    // Smallest integer W with eps^2 (W+1) > 2.
    int W = std::max(0, static_cast<int>(std::floor(2.0 / (eps * eps))) - 1);
    while (!(eps * eps * (W + 1) > 2.0)) ++W;
    out.W = W;
    out.a = 2.0 * W + 1.0;

    // delta(n) decreases toward sqrt(2W + 5/4)/(W+1), which lies strictly
    // below the sqrt(2/(W+1)) threshold, so the feasibility window is finite;
    // scan ascending n and take the first hit.
    const int n_cap = 1000000;
    double last_delta = 0;
    for (int n = 2; n <= n_cap; ++n) {
        const CycleZeroWeights cw = cycle_zero_weights(out.a, n);
        const double delta = cw.b / (W + 1);
        last_delta = delta;
        if (delta * delta * (W + 1) <= 2.0) {
            std::ostringstream msg;
            msg << "find_sparse_counterexample: window exhausted for eps=" << eps
                << " (W=" << W << ", n=" << n << ", delta=" << delta
                << " fell to the lower threshold before dropping below eps)";
            throw std::runtime_error(msg.str());
        }
        if (delta < eps) {
            out.n = n;
            out.b = cw.b;
            out.delta = delta;
            out.z_delta = {out.a, out.b};
            out.grouped_weights.assign(static_cast<size_t>(2 * n), {});
            out.blowup_weights.assign(static_cast<size_t>(4 * n), {});
            for (int v = 0; v < 2 * n; ++v) {
                const double sign = (v % 2 == 0) ? 1.0 : -1.0;
                out.grouped_weights[v] = {out.a, sign * out.b};
                out.blowup_weights[2 * v] = {static_cast<double>(W), 0.0};
                out.blowup_weights[2 * v + 1] = {1.0, sign * delta};
            }
            return out;
        }
    }
    std::ostringstream msg;
    msg << "find_sparse_counterexample: no qualifying half-length up to " << n_cap
        << " for eps=" << eps << " (W=" << W << ", last delta=" << last_delta << ")";
    throw std::runtime_error(msg.str());
}

std::complex<double> multipartite_z(const MultipartiteSpec& spec, std::complex<double> z) {
    const std::complex<double> w = z + 1.0;
    return static_cast<double>(spec.a) * cpow_ui(w, static_cast<unsigned long>(spec.n)) +
           static_cast<double>(spec.b) * cpow_ui(w, static_cast<unsigned long>(spec.m)) +
           (1.0 - spec.a - spec.b);
}

GaussianRational multipartite_z_exact(const MultipartiteSpec& spec, const GaussianRational& z) {
    const GaussianRational w = GaussianRational(1) + z;
    const GaussianRational pa = pow_ui(w, static_cast<unsigned long>(spec.n));
    const GaussianRational pb = pow_ui(w, static_cast<unsigned long>(spec.m));
    return GaussianRational(spec.a) * pa + GaussianRational(spec.b) * pb +
           GaussianRational(Rational(1 - spec.a - spec.b), Rational(0));
}

MultipartiteRoot multipartite_root_near(std::complex<double> z, double eps) {
    if (!(eps > 0)) throw std::invalid_argument("multipartite_root_near: eps must be positive");
    const double rho_d = std::abs(z);
    if (!(rho_d > 1.0 + eps)) {
        throw std::domain_error("multipartite_root_near: target must satisfy |z| > 1 + eps");
    }
    const double pi_d = std::atan2(0.0, -1.0);
    const int N = std::max(1, static_cast<int>(std::ceil(pi_d * rho_d / eps)));
    if (2 * N > 4000) {
        throw std::runtime_error(
            "multipartite_root_near: required degree exceeds 4000; increase eps or move the target inward");
    }

    const BigComplex zb(z.real(), z.imag());
    const BigFloat rho = zb.abs();
    const BigFloat rho_n = pow(rho, N);
    // Integer t with 1+t as close as possible to |z|^N; the annulus
    // [(|z|-eps)^N, (|z|+eps)^N] is astronomically wider than the rounding.
    const BigInt t = static_cast<BigInt>(round(rho_n)) - 1;
    if (t < 1) throw std::runtime_error("multipartite_root_near: degenerate target modulus");
    const BigFloat annulus_lo = pow(rho - BigFloat(eps), N);
    const BigFloat annulus_hi = pow(rho + BigFloat(eps), N);

    // Grow L until the negative root of L x^2 + tL x + (1 - L - tL), which
    // approaches -(1+t) from outside, has modulus inside the annulus.
    BigInt L = 10;
    BigFloat u1;  // the negative quadratic root
    bool placed = false;
    for (int attempt = 0; attempt < 40; ++attempt, L *= 2) {
        const BigFloat Lf(L), tf(t);
        const BigFloat disc = Lf * Lf * (tf + 2) * (tf + 2) - 4 * Lf;
        u1 = (-tf * Lf - sqrt(disc)) / (2 * Lf);
        const BigFloat mod = -u1;
        if (mod >= annulus_lo && mod <= annulus_hi) {
            placed = true;
            break;
        }
    }
    if (!placed) {
        throw std::runtime_error("multipartite_root_near: quadratic root never entered the target annulus");
    }

    const MultipartiteRoot partial{L, t * L, t, N, {}, 0, 0};
    const BigInt A = partial.A;
    const BigInt B = partial.B;
    const BigInt C = 1 - A - B;

    // N-th roots of u1 (negative real) have arguments (pi + 2 pi j)/N and a
    // common modulus; pick the argument closest to arg(z).
    const BigFloat root_mod = exp(log(-u1) / N);
    const double root_mod_d = root_mod.convert_to<double>();
    int best_j = 0;
    double best_dist = std::numeric_limits<double>::infinity();
    for (int j = 0; j < N; ++j) {
        const double theta = pi_d * (1.0 + 2.0 * j) / N;
        const std::complex<double> cand = root_mod_d * std::complex<double>(std::cos(theta), std::sin(theta));
        const double dist = std::abs(cand - z);
        if (dist < best_dist) {
            best_dist = dist;
            best_j = j;
        }
    }
    const BigFloat theta = bigfloat_pi() * (1 + 2 * BigFloat(best_j)) / N;
    const BigComplex x0(root_mod * cos(theta), root_mod * sin(theta));

    MultipartiteRoot out = partial;
    out.root = x0.to_double();
    out.distance = std::abs(out.root - z);
    if (!(out.distance <= 3 * eps)) {
        throw std::runtime_error("multipartite_root_near: constructed root missed the 3*eps disc");
    }

    // Residual of the exact trinomial at x0, normalized by term magnitudes so
    // enormous coefficients cannot mask (or fake) a zero.
    const BigComplex xN = pow_ui(x0, static_cast<unsigned long>(N));
    const BigComplex x2N = xN * xN;
    const BigFloat Af(A), Bf(B), Cf(C);
    const BigComplex value = BigComplex(Af, 0) * x2N + BigComplex(Bf, 0) * xN + BigComplex(Cf, 0);
    const BigFloat denom = abs(Af) * x2N.abs() + abs(Bf) * xN.abs() + abs(Cf);
    out.residual = (value.abs() / denom).convert_to<double>();
    if (!(out.residual < 1e-10)) {
        throw std::runtime_error("multipartite_root_near: residual check failed");
    }

    // Independent root-finder confirmation on the quadratic, rescaled by 1+t
    // so both roots are O(1).
    {
        const BigInt scale = t + 1;
        UnivariatePolynomial quad;
        quad.coeffs = {C, B * scale, A * scale * scale};
        const RootResult rr = poly_roots(quad);
        const double target = (u1 / BigFloat(scale)).convert_to<double>();
        double best = std::numeric_limits<double>::infinity();
        for (const auto& r : rr.roots) best = std::min(best, std::abs(r - std::complex<double>(target, 0)));
        if (!(best < 1e-6)) {
            throw std::runtime_error("multipartite_root_near: quadratic cross-check disagreed");
        }
    }

    // Full-degree confirmation where the general-purpose finder is practical.
    if (2 * N <= 256) {
        UnivariatePolynomial full;
        full.coeffs.assign(static_cast<size_t>(2 * N + 1), BigInt(0));
        full.coeffs[0] = C;
        full.coeffs[static_cast<size_t>(N)] = B;
        full.coeffs[static_cast<size_t>(2 * N)] = A;
        const RootResult rr = poly_roots(full);
        double best = std::numeric_limits<double>::infinity();
        for (const auto& r : rr.roots) best = std::min(best, std::abs(r - out.root));
        if (!(best < 1e-4 * rho_d)) {
            throw std::runtime_error("multipartite_root_near: full-degree cross-check disagreed");
        }
    }
    return out;
}

namespace {

void pole_guard(const std::complex<double>& z, int step) {
    if (std::abs(z + 1.0) <= 1e-13) {
        throw std::domain_error("occupation-ratio map hit the pole at -1 (step " +
                                std::to_string(step) + ")");
    }
}

}  // namespace

std::complex<double> tree_g(std::complex<double> lambda, int k, std::complex<double> z) {
    if (k < 1) throw std::invalid_argument("tree_g: subdivision parameter must be >= 1");
    for (int s = 0; s < 2 * k; ++s) {
        pole_guard(z, s);
        z = lambda / (1.0 + z);
    }
    pole_guard(z, 2 * k);
    const std::complex<double> w = 1.0 + z;
    return lambda / (w * w);
}

std::complex<double> tree_g_iter(std::complex<double> lambda, int k, int d) {
    if (d < 0) throw std::invalid_argument("tree_g_iter: iteration count must be >= 0");
    std::complex<double> z = lambda;
    for (int i = 0; i < d; ++i) z = tree_g(lambda, k, z);
    return z;
}

std::complex<double> tree_g_prime(std::complex<double> lambda, int k, std::complex<double> z) {
    if (k < 1) throw std::invalid_argument("tree_g_prime: subdivision parameter must be >= 1");
    std::complex<double> acc(1.0, 0.0);
    for (int s = 0; s < 2 * k; ++s) {
        pole_guard(z, s);
        const std::complex<double> w = 1.0 + z;
        acc *= -lambda / (w * w);
        z = lambda / w;
    }
    pole_guard(z, 2 * k);
    const std::complex<double> w = 1.0 + z;
    acc *= -2.0 * lambda / (w * w * w);
    return acc;
}

double tree_fixed_point(double lambda, int k) {
    if (!(lambda >= 0)) throw std::invalid_argument("tree_fixed_point: lambda must be >= 0");
    if (k < 1) throw std::invalid_argument("tree_fixed_point: subdivision parameter must be >= 1");
    if (lambda == 0) return 0.0;
    // g maps [0, lambda] into itself and is strictly decreasing there, so
    // g(z) - z has exactly one sign change.
    double lo = 0.0, hi = lambda;
    for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double gap = tree_g({lambda, 0}, k, {mid, 0}).real() - mid;
        if (gap > 0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double find_indifferent_lambda(int k) {
    if (k < 1) throw std::invalid_argument("find_indifferent_lambda: subdivision parameter must be >= 1");
    const auto h = [k](double lambda) {
        const double z = tree_fixed_point(lambda, k);
        return std::abs(tree_g_prime({lambda, 0}, k, {z, 0})) - 1.0;
    };
    double lo = 0.01;
    while (h(lo) >= 0) {
        lo *= 0.1;
        if (lo < 1e-12) throw std::runtime_error("find_indifferent_lambda: no attracting regime found");
    }
    double hi = std::max(1.0, 2 * lo);
    int doublings = 0;
    while (h(hi) <= 0) {
        hi *= 2;
        if (++doublings > 60) {
            throw std::runtime_error("find_indifferent_lambda: derivative magnitude never exceeded 1");
        }
    }
    for (int it = 0; it < 300; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double val = h(mid);
        if (std::abs(val) < 1e-10) return mid;
        if (val < 0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    throw std::runtime_error("find_indifferent_lambda: bisection failed to reach tolerance");
}

TreeZero tree_zero_search(int k, int d, std::complex<double> seed) {
    if (k < 1) throw std::invalid_argument("tree_zero_search: subdivision parameter must be >= 1");
    if (d < 1) throw std::invalid_argument("tree_zero_search: height must be >= 1");
    TreeZero out;
    out.lambda = seed;
    out.trajectory.push_back(seed);
    // Below this clearance the evaluation amplifies roundoff by ~1/clearance^2
    // per map and a final value of -1 is numerical collapse, not a zero;
    // genuine zeros observed so far keep clearance well above 1e-2.
    constexpr double kMinPoleClearance = 1e-6;
    for (int it = 0; it < 200; ++it) {
        // Value and d/d(lambda) of g^(d)(lambda), propagated through every map.
        std::complex<double> zv = out.lambda;
        std::complex<double> dz(1.0, 0.0);
        double clearance = std::numeric_limits<double>::infinity();
        bool hit_pole = false;
        try {
            for (int level = 0; level < d; ++level) {
                for (int s = 0; s < 2 * k; ++s) {
                    pole_guard(zv, s);
                    clearance = std::min(clearance, std::abs(1.0 + zv));
                    const std::complex<double> w = 1.0 + zv;
                    dz = 1.0 / w - out.lambda * dz / (w * w);
                    zv = out.lambda / w;
                }
                pole_guard(zv, 2 * k);
                clearance = std::min(clearance, std::abs(1.0 + zv));
                const std::complex<double> w = 1.0 + zv;
                dz = 1.0 / (w * w) - 2.0 * out.lambda * dz / (w * w * w);
                zv = out.lambda / (w * w);
            }
        } catch (const std::domain_error&) {
            hit_pole = true;
        }
        if (hit_pole) break;
        const std::complex<double> h = zv + 1.0;
        out.residual = std::abs(h);
        out.pole_clearance = clearance;
        out.iterations = it;
        if (out.residual < 1e-10) {
            out.converged = clearance >= kMinPoleClearance;
            return out;
        }
        if (!(std::abs(dz) > 1e-300) || !std::isfinite(std::abs(dz)) || !std::isfinite(out.residual)) break;
        out.lambda -= h / dz;
        out.trajectory.push_back(out.lambda);
    }
    out.converged = false;
    return out;
}

}  // namespace hcz
