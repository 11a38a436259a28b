#pragma once

#include <complex>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hcz/graph.hpp"
#include "hcz/numbers.hpp"

namespace hcz {

// Per-vertex complex weights, either exact Gaussian rationals or doubles.
struct WeightAssignment {
    enum class Repr { Exact, Floating };
    Repr repr = Repr::Floating;
    std::vector<GaussianRational> exact;
    std::vector<std::complex<double>> floating;

    static WeightAssignment constant(int n, std::complex<double> lambda) {
        WeightAssignment w;
        w.repr = Repr::Floating;
        w.floating.assign(n, lambda);
        return w;
    }
    static WeightAssignment constant_exact(int n, const GaussianRational& lambda) {
        WeightAssignment w;
        w.repr = Repr::Exact;
        w.exact.assign(n, lambda);
        return w;
    }

    bool is_exact() const { return repr == Repr::Exact; }
    size_t size() const { return is_exact() ? exact.size() : floating.size(); }

    std::vector<std::complex<double>> as_doubles() const {
        if (!is_exact()) return floating;
        std::vector<std::complex<double>> out;
        out.reserve(exact.size());
        for (const auto& q : exact)
            out.emplace_back(static_cast<double>(q.re), static_cast<double>(q.im));
        return out;
    }
    std::vector<BigComplex> as_bigcomplex() const {
        std::vector<BigComplex> out;
        if (is_exact())
            for (const auto& q : exact) out.emplace_back(q);
        else
            for (const auto& z : floating) out.emplace_back(z);
        return out;
    }
};

// Memoized deletion recursion Z(S) = Z(S - v) + w_v * Z(S - N[v]), pivot of
// highest degree inside S. Works for any field type with +, *, and 1.
template <class F>
class IndependenceEvaluator {
  public:
    IndependenceEvaluator(const Graph& g, std::vector<F> weights)
        : g_(g), w_(std::move(weights)), nbr_(closed_neighbor_masks(g)) {
        if (static_cast<int>(w_.size()) != g.vertex_count())
            throw std::invalid_argument("weight count does not match vertex count");
    }

    F eval(const VertexMask& active) {
        if (active.empty()) return F(1);
        auto it = memo_.find(active);
        if (it != memo_.end()) return it->second;
        int pivot = -1, best = -1;
        for (int v : active.to_set()) {
            int d = nbr_[v].intersect(active).count() - 1;
            if (d > best) best = d, pivot = v;
        }
        VertexMask without = active;
        without.reset(pivot);
        F z = eval(without) + w_[pivot] * eval(active.minus(nbr_[pivot]));
        memo_.emplace(active, z);
        return z;
    }

    F eval_full() { return eval(VertexMask::full(g_.vertex_count())); }

  private:
    const Graph& g_;
    std::vector<F> w_;
    std::vector<VertexMask> nbr_;
    std::unordered_map<VertexMask, F, VertexMaskHash> memo_;
};

template <class F>
F z_eval_t(const Graph& g, const std::vector<F>& weights) {
    IndependenceEvaluator<F> ev(g, weights);
    return ev.eval_full();
}

// Plain enumeration of every independent set; oracle-grade, n <= 30.
template <class F>
F z_brute_t(const Graph& g, const std::vector<F>& weights) {
    int n = g.vertex_count();
    if (n > 30) throw std::invalid_argument("z_brute: more than 30 vertices");
    if (static_cast<int>(weights.size()) != n)
        throw std::invalid_argument("weight count does not match vertex count");
    std::vector<uint64_t> nbr(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) nbr[v] |= uint64_t(1) << u;
    F total(0);
    auto rec = [&](auto&& self, int v, uint64_t blocked, const F& prod) -> void {
        if (v == n) {
            total += prod;
            return;
        }
        self(self, v + 1, blocked, prod);
        if (!(blocked >> v & 1)) self(self, v + 1, blocked | nbr[v], prod * weights[v]);
    };
    rec(rec, 0, 0, F(1));
    return total;
}

std::complex<double> z_eval(const Graph& g, const WeightAssignment& w);
GaussianRational z_eval_exact(const Graph& g, const std::vector<GaussianRational>& w);
BigComplex z_eval_big(const Graph& g, const std::vector<BigComplex>& w);

std::complex<double> z_brute(const Graph& g, const WeightAssignment& w);
GaussianRational z_brute_exact(const Graph& g, const std::vector<GaussianRational>& w);

// Z at the entrywise absolute weights; dominates |Z| and every partial sum.
double z_scale(const Graph& g, const WeightAssignment& w);

// Exact integer coefficients of the univariate independence polynomial.
struct UnivariatePolynomial {
    std::vector<BigInt> coeffs;  // c0 .. cd

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const;
    std::complex<double> eval(std::complex<double> x) const;
    BigComplex eval_big(const BigComplex& x) const;
};

UnivariatePolynomial univariate_coeffs(const Graph& g);

// M = ((mu+1, 1), (lambda, lambda)); Z of the even cycle C_{2n} is tr(M^n).
template <class F>
struct Mat2 {
    F a, b, c, d;
};

template <class F>
Mat2<F> transfer_matrix(const F& lambda, const F& mu) {
    return {mu + F(1), F(1), lambda, lambda};
}

template <class F>
Mat2<F> mat_mul(const Mat2<F>& x, const Mat2<F>& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

template <class F>
F cycle_transfer_eval_t(int n, const F& lambda, const F& mu) {
    if (n < 2) throw std::invalid_argument("cycle_transfer_eval: need n >= 2 (C_2 is not simple)");
    Mat2<F> m = transfer_matrix(lambda, mu);
    Mat2<F> acc{F(1), F(0), F(0), F(1)};
    int e = n;
    while (e > 0) {
        if (e & 1) acc = mat_mul(acc, m);
        m = mat_mul(m, m);
        e >>= 1;
    }
    return acc.a + acc.d;
}

std::complex<double> cycle_transfer_eval(int n, std::complex<double> lambda,
                                         std::complex<double> mu);
GaussianRational cycle_transfer_eval_exact(int n, const GaussianRational& lambda,
                                           const GaussianRational& mu);

// Power sum p_n = alpha^n + beta^n via p_k = T p_{k-1} - D p_{k-2} with
// T = lambda + mu + 1, D = lambda * mu. Equals tr(M^n); usable whenever
// T and D are exact even if lambda itself is not (e.g. lambda = a + ib
// with irrational b but rational b^2).
template <class F>
F cycle_trace_from_sym(int n, const F& trace, const F& det) {
    if (n < 2) throw std::invalid_argument("cycle_trace_from_sym: need n >= 2");
    F pm2(2), pm1 = trace;
    for (int k = 2; k <= n; ++k) {
        F p = trace * pm1 - det * pm2;
        pm2 = pm1;
        pm1 = p;
    }
    return pm1;
}

// Eigenvalues (alpha, beta) of the transfer matrix, principal square root,
// alpha carrying the + branch.
std::pair<std::complex<double>, std::complex<double>> cycle_eigenvalues(
    std::complex<double> lambda, std::complex<double> mu);

}  // namespace hcz
