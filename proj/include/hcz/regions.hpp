#pragma once

#include <complex>
#include <vector>

#include "hcz/numbers.hpp"

namespace hcz {

// 1 + Delta((Delta-1)^t - 1)/(Delta-2); requires Delta >= 3, t >= 1.
long long vol_bound(int delta, int t);

// Front-size bound 2 * vol_bound(delta, 2t).
long long r_bound(int delta, int t);

// Open parabola region R(k): Im(z)^2 < Re(z)/k + 1/(4k^2), k > 0.
bool in_parabola(std::complex<double> z, double k);
bool in_parabola_exact(const GaussianRational& z, const Rational& k);
// k = 2^p; evaluated in extended precision.
bool in_parabola_pow2(const BigComplex& z, long p);

// Closed halfplane H(t): Re(z) >= t.
bool in_halfplane(std::complex<double> z, double t);
bool in_halfplane_exact(const GaussianRational& z, const Rational& t);

// lambda^r in R(2^{delta*r}) with r = r_bound(delta, t); extended precision
// throughout (double powers misclassify near the boundary).
bool lambda_power_in_parabola(std::complex<double> lambda, int delta, int t);

// F: Re(lambda) >= 0 and lambda^r in R(2^{delta*r}).
bool in_region_F(std::complex<double> lambda, int delta, int t);

// F*: x >= 2^{-delta} and |y| <= 2^{-(delta+3)r/2} * x^{1 - r/2}.
bool in_region_Fstar(std::complex<double> lambda, int delta, int t);

// Largest half-angle psi such that 512 boundary samples of the sector
// {|z| < lam0 + eps, |arg z| < psi} all satisfy z^r in R(2^{delta*r});
// analytic positive seed, then 20 bisection steps. Requires lam0 >= 1.
double sector_for_interval(double lam0, double eps, int delta, int t);

// 1 + sum_j a_j / z_j; the contraction step of the halfplane induction.
std::complex<double> invariant_map(const std::vector<std::complex<double>>& a,
                                   const std::vector<std::complex<double>>& z);

// Boundary parametrization (y^2 - 1/k0^2) + (2y/k0) i of R(k0^2 / 4).
std::complex<double> asano_boundary_point(double k0, double y);

struct RegionSpec {
    enum class Kind { Parabola, Halfplane, F, Fstar, Sector, Asano };
    Kind kind = Kind::Parabola;
    double k = 1.0;          // Parabola
    double t = 0.0;          // Halfplane
    int delta = 3;           // F / Fstar
    int depth = 1;           // F / Fstar tree depth parameter t
    double lam0 = 1.0;       // Sector
    double eps = 0.05;       // Sector
    double psi = 0.1;        // Sector
    double k0 = 2.0;         // Asano

    static RegionSpec parabola(double k);
    static RegionSpec halfplane(double t);
    static RegionSpec region_f(int delta, int t);
    static RegionSpec region_fstar(int delta, int t);
    static RegionSpec sector(double lam0, double eps, double psi);
    static RegionSpec asano(double k0);

    void validate() const;
    bool contains(std::complex<double> z) const;
};

}  // namespace hcz
