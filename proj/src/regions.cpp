#include "hcz/regions.hpp"

#include <cmath>
#include <stdexcept>

namespace hcz {

long long vol_bound(int delta, int t) {
    if (delta < 3) throw std::invalid_argument("vol_bound: requires delta >= 3");
    if (t < 1) throw std::invalid_argument("vol_bound: requires t >= 1");
    BigInt v = 1 + BigInt(delta) * (pow(BigInt(delta - 1), static_cast<unsigned>(t)) - 1) /
                       BigInt(delta - 2);
    if (v > BigInt(1) << 62) throw std::overflow_error("vol_bound: bound exceeds 2^62");
    return static_cast<long long>(v);
}

long long r_bound(int delta, int t) { return 2 * vol_bound(delta, 2 * t); }

bool in_parabola(std::complex<double> z, double k) {
    if (!(k > 0)) throw std::invalid_argument("in_parabola: requires k > 0");
    return z.imag() * z.imag() < z.real() / k + 1.0 / (4.0 * k * k);
}

bool in_parabola_exact(const GaussianRational& z, const Rational& k) {
    if (!(k > 0)) throw std::invalid_argument("in_parabola_exact: requires k > 0");
    return z.im * z.im < z.re / k + Rational(1) / (4 * k * k);
}

bool in_parabola_pow2(const BigComplex& z, long p) {
    // Im^2 < Re * 2^-p + 2^(-2p) / 4.
    BigFloat rhs = ldexp(z.re, -p) + ldexp(BigFloat(0.25), -2 * p);
    return z.im * z.im < rhs;
}

bool in_halfplane(std::complex<double> z, double t) { return z.real() >= t; }

bool in_halfplane_exact(const GaussianRational& z, const Rational& t) { return z.re >= t; }

bool lambda_power_in_parabola(std::complex<double> lambda, int delta, int t) {
    long long r = r_bound(delta, t);
    BigComplex zr = pow_ui(BigComplex(lambda), static_cast<unsigned long>(r));
    return in_parabola_pow2(zr, delta * r);
}

bool in_region_F(std::complex<double> lambda, int delta, int t) {
    if (lambda.real() < 0) return false;
    return lambda_power_in_parabola(lambda, delta, t);
}

bool in_region_Fstar(std::complex<double> lambda, int delta, int t) {
    long long r = r_bound(delta, t);
    BigFloat x(lambda.real()), y(lambda.imag());
    if (x < ldexp(BigFloat(1), -delta)) return false;
    // |y| <= 2^{-(delta+3)r/2} * x^{1 - r/2}; squared to stay in rationals of x.
    // (delta+3)*r is even since r is even.
    BigFloat bound2 = ldexp(pow(x, 2 - static_cast<int>(r)), -static_cast<long>((delta + 3) * r));
    return y * y <= bound2;
}

namespace {

// All 512 sector boundary samples (arc plus both radial edges) satisfy
// z^r in R(2^{delta*r}).
bool sector_boundary_passes(double lam0, double eps, const BigFloat& psi, int delta, int t) {
    long long r = r_bound(delta, t);
    long p = static_cast<long>(delta * r);
    BigFloat rho(lam0 + eps);
    auto point_ok = [&](const BigFloat& modulus, const BigFloat& angle) {
        BigComplex z(modulus * cos(angle), modulus * sin(angle));
        return in_parabola_pow2(pow_ui(z, static_cast<unsigned long>(r)), p);
    };
    for (int j = 0; j < 256; ++j) {  // arc, both signs covered by symmetry of j
        BigFloat theta = psi * (2 * j - 255) / 255;
        if (!point_ok(rho, theta)) return false;
    }
    for (int j = 1; j <= 128; ++j) {  // radial edges at +-psi
        BigFloat modulus = rho * j / 128;
        if (!point_ok(modulus, psi)) return false;
        if (!point_ok(modulus, -psi)) return false;
    }
    return true;
}

}  // namespace

double sector_for_interval(double lam0, double eps, int delta, int t) {
    if (!(lam0 >= 1)) throw std::invalid_argument("sector_for_interval: requires lam0 >= 1");
    if (!(eps > 0)) throw std::invalid_argument("sector_for_interval: requires eps > 0");
    long long r = r_bound(delta, t);
    long p = static_cast<long>(delta * r);
    BigFloat rho(lam0 + eps);

    // Seed angle: rho^r * (r*psi)^2 <= rho^r/(2k) inside the parabola as long
    // as r*psi <= pi/4; always positive.
    BigFloat k_half = ldexp(BigFloat(2), p);  // 2k
    BigFloat seed = 1 / (BigFloat(r) * sqrt(k_half * pow(rho, static_cast<int>(r))));
    BigFloat quarter = bigfloat_pi() / (4 * r);
    if (seed > quarter) seed = quarter;
    for (int tries = 0; tries < 200 && !sector_boundary_passes(lam0, eps, seed, delta, t);
         ++tries)
        seed /= 2;

    BigFloat lo = seed, hi = bigfloat_pi() / 2;
    if (sector_boundary_passes(lam0, eps, hi, delta, t)) return static_cast<double>(hi);
    for (int iter = 0; iter < 20; ++iter) {
        BigFloat mid = (lo + hi) / 2;
        if (sector_boundary_passes(lam0, eps, mid, delta, t))
            lo = mid;
        else
            hi = mid;
    }
    return static_cast<double>(lo);
}

std::complex<double> invariant_map(const std::vector<std::complex<double>>& a,
                                   const std::vector<std::complex<double>>& z) {
    if (a.size() != z.size()) throw std::invalid_argument("invariant_map: size mismatch");
    if (a.empty()) throw std::invalid_argument("invariant_map: needs at least one term");
    std::complex<double> acc(1.0, 0.0);
    for (size_t j = 0; j < a.size(); ++j) {
        if (z[j] == std::complex<double>(0.0, 0.0))
            throw std::invalid_argument("invariant_map: zero argument");
        acc += a[j] / z[j];
    }
    return acc;
}

std::complex<double> asano_boundary_point(double k0, double y) {
    if (!(k0 > 0)) throw std::invalid_argument("asano_boundary_point: requires k0 > 0");
    return {y * y - 1.0 / (k0 * k0), 2.0 * y / k0};
}

RegionSpec RegionSpec::parabola(double k) {
    RegionSpec s;
    s.kind = Kind::Parabola;
    s.k = k;
    s.validate();
    return s;
}

RegionSpec RegionSpec::halfplane(double t) {
    RegionSpec s;
    s.kind = Kind::Halfplane;
    s.t = t;
    return s;
}

RegionSpec RegionSpec::region_f(int delta, int t) {
    RegionSpec s;
    s.kind = Kind::F;
    s.delta = delta;
    s.depth = t;
    s.validate();
    return s;
}

RegionSpec RegionSpec::region_fstar(int delta, int t) {
    RegionSpec s;
    s.kind = Kind::Fstar;
    s.delta = delta;
    s.depth = t;
    s.validate();
    return s;
}

RegionSpec RegionSpec::sector(double lam0, double eps, double psi) {
    RegionSpec s;
    s.kind = Kind::Sector;
    s.lam0 = lam0;
    s.eps = eps;
    s.psi = psi;
    s.validate();
    return s;
}

RegionSpec RegionSpec::asano(double k0) {
    RegionSpec s;
    s.kind = Kind::Asano;
    s.k0 = k0;
    s.validate();
    return s;
}

void RegionSpec::validate() const {
    switch (kind) {
        case Kind::Parabola:
            if (!(k > 0)) throw std::invalid_argument("Parabola requires k > 0");
            break;
        case Kind::Halfplane:
            break;
        case Kind::F:
        case Kind::Fstar:
            if (delta < 3) throw std::invalid_argument("F regions require delta >= 3");
            if (depth < 1) throw std::invalid_argument("F regions require t >= 1");
            break;
        case Kind::Sector:
            if (!(lam0 >= 1)) throw std::invalid_argument("Sector requires lam0 >= 1");
            if (!(eps > 0)) throw std::invalid_argument("Sector requires eps > 0");
            if (!(psi > 0 && psi <= std::atan2(1.0, 0.0)))
                throw std::invalid_argument("Sector requires psi in (0, pi/2]");
            break;
        case Kind::Asano:
            if (!(k0 > 0)) throw std::invalid_argument("Asano requires k0 > 0");
            break;
    }
}

bool RegionSpec::contains(std::complex<double> z) const {
    switch (kind) {
        case Kind::Parabola:
            return in_parabola(z, k);
        case Kind::Halfplane:
            return in_halfplane(z, t);
        case Kind::F:
            return in_region_F(z, delta, depth);
        case Kind::Fstar:
            return in_region_Fstar(z, delta, depth);
        case Kind::Sector:
            return std::abs(z) < lam0 + eps && std::abs(std::arg(z)) < psi;
        case Kind::Asano:
            return in_parabola(z, k0 * k0 / 4.0);
    }
    return false;
}

}  // namespace hcz
