#include "hcz/roots.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hcz {

namespace {

// Dense polynomials over Q, coefficient order c0..cd.
using QPoly = std::vector<Rational>;

void q_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int q_deg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly q_deriv(const QPoly& p) {
    QPoly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
    q_trim(d);
    return d;
}

QPoly q_monic(QPoly p) {
    q_trim(p);
    if (p.empty()) return p;
    Rational lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

// Remainder of a by b (b nonzero).
QPoly q_mod(QPoly a, const QPoly& b) {
    q_trim(a);
    while (q_deg(a) >= q_deg(b)) {
        Rational f = a.back() / b.back();
        int shift = q_deg(a) - q_deg(b);
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
        a.pop_back();
        q_trim(a);
        if (a.empty()) break;
    }
    return a;
}

// Exact quotient a / b; throws if the division leaves a remainder.
QPoly q_divexact(QPoly a, const QPoly& b) {
    q_trim(a);
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    QPoly q(std::max(0, q_deg(a) - q_deg(b) + 1), Rational(0));
    while (q_deg(a) >= q_deg(b)) {
        Rational f = a.back() / b.back();
        int shift = q_deg(a) - q_deg(b);
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
        a.pop_back();
        q_trim(a);
        if (a.empty()) break;
    }
    if (!a.empty()) throw std::domain_error("polynomial division was not exact");
    q_trim(q);
    return q;
}

QPoly q_gcd(QPoly a, QPoly b) {
    a = q_monic(std::move(a));
    b = q_monic(std::move(b));
    while (!b.empty()) {
        QPoly r = q_mod(a, b);
        a = std::move(b);
        b = q_monic(std::move(r));
    }
    return a.empty() ? QPoly{Rational(1)} : a;
}

QPoly q_sub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    q_trim(a);
    return a;
}

// Yun's algorithm: p = prod factors[i].first ^ factors[i].second, each factor
// square-free, pairwise coprime.
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p) {
    std::vector<std::pair<QPoly, int>> out;
    QPoly f = q_monic(p);
    if (q_deg(f) < 1) return out;
    QPoly fp = q_deriv(f);
    QPoly a0 = q_gcd(f, fp);
    if (q_deg(a0) == 0) {
        out.emplace_back(f, 1);
        return out;
    }
    QPoly b = q_divexact(f, a0);
    QPoly c = q_divexact(fp, a0);
    QPoly d = q_sub(c, q_deriv(b));
    int i = 1;
    const int max_iter = q_deg(p) + 2;
    while (q_deg(b) > 0) {
        if (i > max_iter) throw std::logic_error("squarefree decomposition failed to terminate");
        QPoly ai = q_gcd(b, d);
        if (q_deg(ai) > 0) out.emplace_back(ai, i);
        b = q_divexact(b, ai);
        c = q_divexact(d, ai);
        d = q_sub(c, q_deriv(b));
        ++i;
    }
    return out;
}

std::vector<double> to_scaled_doubles(const QPoly& p) {
    BigFloat maxabs(0);
    for (const auto& c : p) {
        BigFloat a = abs(BigFloat(c));
        if (a > maxabs) maxabs = a;
    }
    std::vector<double> out;
    out.reserve(p.size());
    for (const auto& c : p) out.push_back(static_cast<double>(BigFloat(c) / maxabs));
    return out;
}

std::complex<double> horner(const std::vector<double>& c, std::complex<double> z) {
    std::complex<double> acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

std::complex<double> horner_deriv(const std::vector<double>& c, std::complex<double> z) {
    std::complex<double> acc = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 1; --i)
        acc = acc * z + static_cast<double>(i) * c[i];
    return acc;
}

// Fujiwara-style upper bound on root modulus: 2 max_k |c_{d-k}/c_d|^{1/k},
// computed with logarithms so extreme coefficient ratios cannot overflow.
double root_radius(const std::vector<double>& c) {
    int d = static_cast<int>(c.size()) - 1;
    double log_lead = std::log(std::abs(c.back()));
    double best = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < d; ++i) {
        if (c[i] == 0) continue;
        best = std::max(best, (std::log(std::abs(c[i])) - log_lead) / (d - i));
    }
    if (!std::isfinite(best)) return 1.0;  // monomial: every root at the origin
    return 2.0 * std::exp(best);
}

// Aberth-Ehrlich simultaneous iteration on a square-free polynomial.
bool aberth(const std::vector<double>& c, std::vector<std::complex<double>>& z) {
    int d = static_cast<int>(c.size()) - 1;
    double radius = root_radius(c);
    z.resize(d);
    for (int k = 0; k < d; ++k) {
        double ang = 2.0 * M_PI * k / d + 0.4;
        z[k] = 0.7 * radius * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    for (int iter = 0; iter < 300; ++iter) {
        double worst = 0;
        for (int k = 0; k < d; ++k) {
            std::complex<double> p = horner(c, z[k]);
            std::complex<double> dp = horner_deriv(c, z[k]);
            if (!std::isfinite(std::abs(p)) || !std::isfinite(std::abs(dp))) {
                z[k] *= 0.5;  // evaluation overflowed at this magnitude
                worst = 1;
                continue;
            }
            if (dp == 0.0) {
                z[k] += 1e-8 * radius;
                worst = 1;
                continue;
            }
            std::complex<double> newton = p / dp;
            std::complex<double> sum = 0;
            for (int j = 0; j < d; ++j)
                if (j != k) {
                    std::complex<double> diff = z[k] - z[j];
                    if (diff == 0.0) diff = 1e-12 * radius;
                    sum += 1.0 / diff;
                }
            std::complex<double> denom = 1.0 - newton * sum;
            std::complex<double> w = (denom == 0.0) ? newton : newton / denom;
            double step = std::abs(w) / (1.0 + std::abs(z[k] - w));
            if (!std::isfinite(step)) {
                z[k] *= 0.5;
                worst = 1;
                continue;
            }
            z[k] -= w;
            worst = std::max(worst, step);
        }
        if (worst < 1e-14) return true;
    }
    return false;
}

std::vector<std::complex<double>> companion_eigen(const std::vector<double>& c) {
    int d = static_cast<int>(c.size()) - 1;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 1; i < d; ++i) m(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) m(i, d - 1) = -c[i] / c[d];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
    std::vector<std::complex<double>> z(d);
    for (int i = 0; i < d; ++i) z[i] = solver.eigenvalues()[i];
    return z;
}

void newton_pass(const std::vector<double>& c, std::vector<std::complex<double>>& z, int passes) {
    for (auto& zk : z)
        for (int t = 0; t < passes; ++t) {
            std::complex<double> dp = horner_deriv(c, zk);
            if (dp == 0.0) break;
            zk -= horner(c, zk) / dp;
        }
}

BigFloat residual_big(const UnivariatePolynomial& p, std::complex<double> z) {
    BigFloat norm1(1);
    for (const auto& c : p.coeffs) norm1 += abs(BigFloat(c));
    return p.eval_big(BigComplex(z)).abs() / norm1;
}

}  // namespace

RootResult poly_roots(const UnivariatePolynomial& input) {
    QPoly p;
    for (const auto& c : input.coeffs) p.emplace_back(c);
    q_trim(p);
    if (p.empty()) throw std::invalid_argument("poly_roots: zero polynomial");
    if (q_deg(p) < 1) throw std::invalid_argument("poly_roots: degree must be >= 1");

    RootResult result;

    // Roots at the origin.
    size_t low = 0;
    while (low < p.size() && p[low] == 0) ++low;
    for (size_t i = 0; i < low; ++i) result.roots.emplace_back(0.0, 0.0);
    if (low > 0) p.erase(p.begin(), p.begin() + low);

    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        if (q_deg(factor) < 1) continue;
        std::vector<double> c = to_scaled_doubles(factor);
        std::vector<std::complex<double>> z;
        bool converged = aberth(c, z);
        newton_pass(c, z, 1);
        if (!converged) {
            result.used_fallback = true;
            std::vector<std::complex<double>> alt = companion_eigen(c);
            newton_pass(c, alt, 3);
            auto score = [&](const std::vector<std::complex<double>>& v) {
                double s = 0;
                for (auto r : v) s = std::max(s, std::abs(horner(c, r)));
                return s;
            };
            if (score(alt) < score(z)) z = alt;
        }
        for (auto r : z)
            for (int m = 0; m < mult; ++m) result.roots.push_back(r);
    }

    double worst = 0;
    for (auto r : result.roots) worst = std::max(worst, static_cast<double>(residual_big(input, r)));
    result.max_residual = worst;

    std::sort(result.roots.begin(), result.roots.end(), [](auto a, auto b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return result;
}

}  // namespace hcz
