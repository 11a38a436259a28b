#pragma once

// Shared test helpers: deterministic generators and small oracles.

#include <bit>
#include <complex>
#include <random>
#include <vector>

#include "hcz/graph.hpp"
#include "hcz/indpoly.hpp"

namespace testutil {

inline std::mt19937_64 rng(uint64_t seed) { return std::mt19937_64(seed); }

inline hcz::Graph random_graph(int n, double p, std::mt19937_64& gen) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    hcz::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(gen) < p) g.add_edge(u, v);
    return g;
}

// Random spanning tree plus density-p extra edges; connected for n >= 1.
inline hcz::Graph random_connected_graph(int n, double p, std::mt19937_64& gen) {
    hcz::Graph g(n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        g.add_edge(pick(gen), v);
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v) && coin(gen) < p) g.add_edge(u, v);
    return g;
}

// Small exact rational weights, numerators in [-bound, bound], denominators in [1, bound].
inline std::vector<hcz::GaussianRational> random_exact_weights(int n, int bound,
                                                               std::mt19937_64& gen) {
    std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
    std::vector<hcz::GaussianRational> w;
    for (int i = 0; i < n; ++i)
        w.emplace_back(hcz::Rational(num(gen), den(gen)), hcz::Rational(num(gen), den(gen)));
    return w;
}

inline std::vector<std::complex<double>> random_complex_weights(int n, double mag,
                                                                std::mt19937_64& gen) {
    std::uniform_real_distribution<double> u(-mag, mag);
    std::vector<std::complex<double>> w;
    for (int i = 0; i < n; ++i) w.emplace_back(u(gen), u(gen));
    return w;
}

// Independent-set census by brute force; position k counts sets of size k.
inline std::vector<long> independent_set_census(const hcz::Graph& g) {
    int n = g.vertex_count();
    std::vector<uint64_t> nbr(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) nbr[v] |= uint64_t(1) << u;
    std::vector<long> census(n + 1, 0);
    for (uint64_t s = 0; s < (uint64_t(1) << n); ++s) {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            if (s >> v & 1)
                if (s & nbr[v]) ok = false;
        if (ok) census[std::popcount(s)]++;
    }
    while (census.size() > 1 && census.back() == 0) census.pop_back();
    return census;
}

// Uniform draw from a bounded patch of the open parabola region R(k).
inline std::complex<double> sample_in_parabola(double k, std::mt19937_64& gen) {
    std::uniform_real_distribution<double> ux(-1.0 / (4.0 * k) * 0.999, 3.0);
    std::uniform_real_distribution<double> uy(0.0, 1.0);
    std::uniform_int_distribution<int> sign(0, 1);
    for (;;) {
        double x = ux(gen);
        double half = std::sqrt(x / k + 1.0 / (4.0 * k * k)) * 0.999;
        double y = uy(gen) * half * (sign(gen) ? 1 : -1);
        if (y * y < x / k + 1.0 / (4.0 * k * k)) return {x, y};
    }
}

// Draw from a bounded patch of the closed halfplane Re >= t.
inline std::complex<double> sample_in_halfplane(double t, std::mt19937_64& gen) {
    std::uniform_real_distribution<double> ux(t, t + 4.0), uy(-4.0, 4.0);
    return {ux(gen), uy(gen)};
}

// Line graph: vertices are edges of the base, adjacent when sharing an endpoint.
inline hcz::Graph line_graph(const hcz::Graph& base) {
    auto e = base.edges();
    hcz::Graph lg(static_cast<int>(e.size()));
    for (size_t i = 0; i < e.size(); ++i)
        for (size_t j = i + 1; j < e.size(); ++j) {
            auto [a, b] = e[i];
            auto [c, d] = e[j];
            if (a == c || a == d || b == c || b == d)
                lg.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    return lg;
}

}  // namespace testutil
