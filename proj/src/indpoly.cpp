#include "hcz/indpoly.hpp"

#include <algorithm>
#include <cmath>

namespace hcz {

std::complex<double> z_eval(const Graph& g, const WeightAssignment& w) {
    if (w.is_exact()) {
        GaussianRational z = z_eval_exact(g, w.exact);
        return {static_cast<double>(z.re), static_cast<double>(z.im)};
    }
    return z_eval_t(g, w.floating);
}

GaussianRational z_eval_exact(const Graph& g, const std::vector<GaussianRational>& w) {
    return z_eval_t(g, w);
}

BigComplex z_eval_big(const Graph& g, const std::vector<BigComplex>& w) {
    return z_eval_t(g, w);
}

std::complex<double> z_brute(const Graph& g, const WeightAssignment& w) {
    if (w.is_exact()) {
        GaussianRational z = z_brute_t(g, w.exact);
        return {static_cast<double>(z.re), static_cast<double>(z.im)};
    }
    return z_brute_t(g, w.floating);
}

GaussianRational z_brute_exact(const Graph& g, const std::vector<GaussianRational>& w) {
    return z_brute_t(g, w);
}

double z_scale(const Graph& g, const WeightAssignment& w) {
    std::vector<std::complex<double>> mags;
    for (const auto& z : w.as_doubles()) mags.emplace_back(std::abs(z), 0.0);
    return z_eval_t(g, mags).real();
}

bool UnivariatePolynomial::is_zero() const {
    for (const auto& c : coeffs)
        if (c != 0) return false;
    return true;
}

std::complex<double> UnivariatePolynomial::eval(std::complex<double> x) const {
    std::complex<double> acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * x + std::complex<double>(static_cast<double>(*it), 0.0);
    return acc;
}

BigComplex UnivariatePolynomial::eval_big(const BigComplex& x) const {
    BigComplex acc;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * x + BigComplex(BigFloat(*it), BigFloat(0));
    return acc;
}

UnivariatePolynomial univariate_coeffs(const Graph& g) {
    int n = g.vertex_count();
    auto nbr = closed_neighbor_masks(g);
    using Poly = std::vector<BigInt>;
    std::unordered_map<VertexMask, Poly, VertexMaskHash> memo;

    auto add_shifted = [](Poly& dst, const Poly& src) {
        // dst += x * src
        if (dst.size() < src.size() + 1) dst.resize(src.size() + 1, BigInt(0));
        for (size_t i = 0; i < src.size(); ++i) dst[i + 1] += src[i];
    };

    auto rec = [&](auto&& self, const VertexMask& active) -> Poly {
        if (active.empty()) return {BigInt(1)};
        auto it = memo.find(active);
        if (it != memo.end()) return it->second;
        int pivot = -1, best = -1;
        for (int v : active.to_set()) {
            int d = nbr[v].intersect(active).count() - 1;
            if (d > best) best = d, pivot = v;
        }
        VertexMask without = active;
        without.reset(pivot);
        Poly p = self(self, without);
        add_shifted(p, self(self, active.minus(nbr[pivot])));
        memo.emplace(active, p);
        return p;
    };

    UnivariatePolynomial out;
    out.coeffs = rec(rec, VertexMask::full(n));
    return out;
}

std::complex<double> cycle_transfer_eval(int n, std::complex<double> lambda,
                                         std::complex<double> mu) {
    return cycle_transfer_eval_t(n, lambda, mu);
}

GaussianRational cycle_transfer_eval_exact(int n, const GaussianRational& lambda,
                                           const GaussianRational& mu) {
    return cycle_transfer_eval_t(n, lambda, mu);
}

std::pair<std::complex<double>, std::complex<double>> cycle_eigenvalues(
    std::complex<double> lambda, std::complex<double> mu) {
    std::complex<double> t = lambda + mu + 1.0;
    std::complex<double> disc = t * t - 4.0 * lambda * mu;
    std::complex<double> root = std::sqrt(disc);  // principal branch
    return {0.5 * (t + root), 0.5 * (t - root)};
}

}  // namespace hcz
