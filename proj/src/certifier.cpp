#include "hcz/certifier.hpp"

#include <algorithm>
#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "hcz/recognizers.hpp"
#include "hcz/regions.hpp"

namespace hcz {

namespace {

std::string render_vertices(const std::vector<int>& vs) {
    std::string s;
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(vs[i]);
    }
    return s;
}

std::string context_front(const VertexMask& u, const VertexMask& d) {
    return "U=" + render_vertices(u.to_set()) + ";D=" + render_vertices(d.to_set());
}

std::string context_path(const VertexMask& u, int x) {
    return "U=" + render_vertices(u.to_set()) + ";x=" + std::to_string(x);
}

std::string context_path_root(const VertexMask& u, const VertexMask& k) {
    return "U=" + render_vertices(u.to_set()) + ";x=+" + render_vertices(k.to_set());
}

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hash16(const std::string& s) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(s)));
    return buf;
}

// Mode-dependent predicates: exact rationals get exact region tests, floats
// get 100-digit extended precision (membership near the boundary is the
// whole point of the certificate).
bool weight_in_pow2_parabola(const GaussianRational& z, long long p) {
    Rational k(pow(BigInt(2), static_cast<unsigned long>(p)));
    return in_parabola_exact(z, k);
}
bool weight_in_pow2_parabola(const BigComplex& z, long long p) {
    return in_parabola_pow2(z, static_cast<long>(p));
}

bool re_at_least_half(const GaussianRational& z) {
    return in_halfplane_exact(z, Rational(1, 2));
}
bool re_at_least_half(const BigComplex& z) { return z.re >= BigFloat(0.5); }

BigComplex to_big(const GaussianRational& z) { return BigComplex(z); }
BigComplex to_big(const BigComplex& z) { return z; }

std::string describe(const GaussianRational& z) {
    return z.re.str() + (z.im < 0 ? "" : "+") + z.im.str() + "i";
}
std::string describe(const BigComplex& z) { return format_complex30(z); }

// Thrown after the certificate has been marked failed; unwinds the engines.
struct AbortRun {};

// Walks the front-growing recursion ratio(U, D) = Z(U) / Z(U minus D),
// expanding over nonempty independent subsets S of D within U:
//   ratio(U, D) = 1 + sum_S w_S / ratio(U minus D, nbr(S) within),
// memoized on the (U, D) pair. Every subset weight w_S must lie in the
// parabola R(2^p) and every ratio in the halfplane Re >= 1/2.
template <class F>
class FrontEngine {
  public:
    FrontEngine(const Graph& g, std::vector<F> w, long long p, long long r, Certificate* cert)
        : w_(std::move(w)), nbr_(closed_neighbor_masks(g)), p_(p), r_(r), cert_(cert) {}

    F ratio(const VertexMask& u_set, const VertexMask& d_raw) {
        VertexMask d = d_raw.intersect(u_set);
        auto key = std::make_pair(u_set, d);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;

        const std::string ctx = context_front(u_set, d);
        stack_.push_back(ctx);
        F val(1);
        if (!u_set.empty() && !d.empty()) {
            int terms = 0;
            VertexMask rest = u_set.minus(d);
            std::vector<int> dverts = d.to_set();
            std::vector<int> chosen;
            expand(rest, dverts, 0, F(1), VertexMask(u_set.size()), chosen, val, terms);
            cert_->max_terms = std::max(cert_->max_terms, terms);
        }
        if (!re_at_least_half(val)) {
            cert_->outcome = CertOutcome::RatioEscaped;
            cert_->diagnostic = "ratio " + describe(val) + " left the halfplane Re >= 1/2 at " +
                                ctx + "; ancestry:";
            for (const auto& a : stack_) cert_->diagnostic += " [" + a + "]";
            cert_->steps.push_back({ctx, to_big(val)});
            stack_.pop_back();
            throw AbortRun{};
        }
        cert_->steps.push_back({ctx, to_big(val)});
        memo_.emplace(std::move(key), val);
        stack_.pop_back();
        return val;
    }

  private:
    // Lexicographic enumeration of nonempty independent subsets of dverts:
    // each extension is visited before longer ones sharing its prefix.
    void expand(const VertexMask& rest, const std::vector<int>& dverts, size_t start, F w_so_far,
                VertexMask snbrs, std::vector<int>& chosen, F& val, int& terms) {
        for (size_t i = start; i < dverts.size(); ++i) {
            int v = dverts[i];
            if (snbrs.test(v)) continue;  // adjacent to the current subset
            chosen.push_back(v);
            if (static_cast<long long>(chosen.size()) > r_) {
                throw std::runtime_error(
                    "structural violation: independent expansion set exceeds the front bound " +
                    std::to_string(r_) + " at {" + render_vertices(chosen) +
                    "}; the input cannot be spider-free as claimed");
            }
            F w_s = w_so_far * w_[v];
            ++terms;
            if (!weight_in_pow2_parabola(w_s, p_)) {
                cert_->outcome = CertOutcome::PreconditionFailed;
                cert_->diagnostic = "set weight " + describe(w_s) + " for S={" +
                                    render_vertices(chosen) +
                                    "} lies outside the parabola R(2^" + std::to_string(p_) + ")";
                throw AbortRun{};
            }
            VertexMask snext = snbrs.unite(nbr_[v]);
            val += w_s / ratio(rest, snext.intersect(rest));
            expand(rest, dverts, i + 1, w_s, snext, chosen, val, terms);
            chosen.pop_back();
        }
    }

    std::vector<F> w_;
    std::vector<VertexMask> nbr_;
    long long p_, r_;
    Certificate* cert_;
    std::unordered_map<std::pair<VertexMask, VertexMask>, F, VertexMaskPairHash> memo_;
    std::vector<std::string> stack_;
};

// Walks the rooted-path recursion ratio(U, x) = Z(U) / Z(U minus nbr(x)):
//   ratio(U, x) = 1 + sum_{y in U cap nbr(x)} w_y / ratio(U minus nbr(x), y),
// memoized on (U, x). Every expansion front U cap nbr(x) must induce a
// clique of size <= k, and every ratio must keep Re >= 1/2.
template <class F>
class PathEngine {
  public:
    PathEngine(const Graph& g, std::vector<F> w, int k, Certificate* cert)
        : g_(g), w_(std::move(w)), nbr_(closed_neighbor_masks(g)), k_(k), cert_(cert) {}

    // Context rooted at the artificial vertex adjacent to exactly the clique
    // front; the artificial vertex carries no weight and is never in U.
    F root_ratio(const VertexMask& u_set, const VertexMask& front) {
        return expand_context(u_set, front, context_path_root(u_set, front));
    }

    F ratio(const VertexMask& u_set, int x) {
        auto key = std::make_pair(u_set, x);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        VertexMask front = nbr_[x].intersect(u_set);  // x itself is never in U
        F val = expand_context(u_set, front, context_path(u_set, x));
        memo_.emplace(std::move(key), val);
        return val;
    }

  private:
    F expand_context(const VertexMask& u_set, const VertexMask& front, const std::string& ctx) {
        assert_clique(front, ctx);
        stack_.push_back(ctx);
        F val(1);
        if (!front.empty()) {
            VertexMask rest = u_set.minus(front);
            int terms = 0;
            for (int y : front.to_set()) {
                val += w_[y] / ratio(rest, y);
                ++terms;
            }
            cert_->max_terms = std::max(cert_->max_terms, terms);
        }
        if (!re_at_least_half(val)) {
            cert_->outcome = CertOutcome::RatioEscaped;
            cert_->diagnostic = "ratio " + describe(val) + " left the halfplane Re >= 1/2 at " +
                                ctx + "; ancestry:";
            for (const auto& a : stack_) cert_->diagnostic += " [" + a + "]";
            cert_->steps.push_back({ctx, to_big(val)});
            stack_.pop_back();
            throw AbortRun{};
        }
        cert_->steps.push_back({ctx, to_big(val)});
        stack_.pop_back();
        return val;
    }

    void assert_clique(const VertexMask& front, const std::string& ctx) {
        std::vector<int> vs = front.to_set();
        if (static_cast<int>(vs.size()) > k_) {
            throw std::runtime_error("structural violation: expansion front {" +
                                     render_vertices(vs) + "} exceeds the clique bound " +
                                     std::to_string(k_) + " at " + ctx);
        }
        for (size_t a = 0; a < vs.size(); ++a)
            for (size_t b = a + 1; b < vs.size(); ++b)
                if (!g_.adjacent(vs[a], vs[b])) {
                    throw std::runtime_error(
                        "structural violation: expansion front {" + render_vertices(vs) +
                        "} is not a clique at " + ctx +
                        "; the input cannot be claw-free with this simplicial clique");
                }
    }

    const Graph& g_;
    std::vector<F> w_;
    std::vector<VertexMask> nbr_;
    int k_;
    Certificate* cert_;

    struct KeyHash {
        size_t operator()(const std::pair<VertexMask, int>& p) const {
            return p.first.hash() * 1000003u ^ static_cast<size_t>(p.second);
        }
    };
    std::unordered_map<std::pair<VertexMask, int>, F, KeyHash> memo_;
    std::vector<std::string> stack_;
};

// Telescoping driver shared by both spider-mode representations: peel the
// smallest remaining vertex u, multiply by ratio(active, {u}), repeat. The
// product over all steps is Z of the whole graph.
template <class F>
F telescope_front(FrontEngine<F>& engine, int n) {
    VertexMask active = VertexMask::full(n);
    F total(1);
    while (!active.empty()) {
        int u = active.first();
        VertexMask d(n);
        d.set(u);
        total = total * engine.ratio(active, d);
        active.reset(u);
    }
    return total;
}

void cross_check(const GaussianRational& total, const Graph& g,
                 const std::vector<GaussianRational>& w) {
    if (z_eval_exact(g, w) != total)
        throw std::logic_error("certificate telescoping disagrees with the direct evaluator");
}

void cross_check(const BigComplex& total, const Graph& g, const std::vector<BigComplex>& w) {
    BigComplex direct = z_eval_big(g, w);
    BigFloat err = (direct - total).abs();
    BigFloat scale = direct.abs() + total.abs() + 1;
    if (err > scale * BigFloat("1e-60"))
        throw std::logic_error("certificate telescoping disagrees with the direct evaluator");
}

}  // namespace

AdmissibleEnumeration admissible_enumerate(const Graph& g, int u, size_t cap) {
    const int n = g.vertex_count();
    if (u < 0 || u >= n) throw std::invalid_argument("admissible_enumerate: root out of range");
    if (cap == 0) throw std::invalid_argument("admissible_enumerate: cap must be positive");
    auto nbr = closed_neighbor_masks(g);
    AdmissibleEnumeration out;

    // Emits (L, U), then derives children (S, U minus D) for nonempty
    // independent S inside D = front(L) cap U, in lexicographic order.
    auto walk = [&](auto&& self, const VertexMask& l_set, const VertexMask& u_set,
                    const VertexMask& d_raw, int parent) -> bool {
        if (out.pairs.size() >= cap) {
            out.truncated = true;
            return false;
        }
        int idx = static_cast<int>(out.pairs.size());
        out.pairs.push_back({l_set.to_set(), u_set.to_set(), parent});
        out.max_L_size = std::max(out.max_L_size, l_set.count());

        VertexMask d = d_raw.intersect(u_set);
        if (d.empty()) return true;
        VertexMask rest = u_set.minus(d);
        std::vector<int> dverts = d.to_set();
        std::vector<int> chosen;
        VertexMask smask(n), snbrs(n);
        auto subsets = [&](auto&& sub, size_t start) -> bool {
            for (size_t i = start; i < dverts.size(); ++i) {
                int v = dverts[i];
                if (snbrs.test(v)) continue;
                chosen.push_back(v);
                smask.set(v);
                VertexMask saved = snbrs;
                snbrs = snbrs.unite(nbr[v]);
                bool go = self(self, smask, rest, snbrs.intersect(rest), idx) && sub(sub, i + 1);
                snbrs = saved;
                smask.reset(v);
                chosen.pop_back();
                if (!go) return false;
            }
            return true;
        };
        return subsets(subsets, 0);
    };

    VertexMask root_front(n);
    root_front.set(u);
    walk(walk, VertexMask(n), VertexMask::full(n), root_front, -1);
    return out;
}

LBoundReport check_L_bound(const Graph& g, int u, int t, size_t cap) {
    if (t < 1) throw std::invalid_argument("check_L_bound: arm length must be >= 1");
    if (!is_sttt_free(g, t))
        throw std::invalid_argument(
            "check_L_bound: the graph contains a subdivided claw at this arm length");
    const int delta_eff = std::max(g.max_degree(), 3);
    LBoundReport rep;
    rep.bound = r_bound(delta_eff, t);
    AdmissibleEnumeration en = admissible_enumerate(g, u, cap);
    rep.max_L = en.max_L_size;
    rep.truncated = en.truncated;
    rep.ok = rep.max_L <= rep.bound;
    return rep;
}

Certificate certify_sttt(const Graph& g, const WeightAssignment& w, int t) {
    if (t < 1) throw std::invalid_argument("certify_sttt: arm length must be >= 1");
    if (static_cast<int>(w.size()) != g.vertex_count())
        throw std::invalid_argument("certify_sttt: weight count does not match vertex count");
    if (!is_sttt_free(g, t))
        throw std::invalid_argument(
            "certify_sttt: the graph contains a subdivided claw at this arm length");

    Certificate cert;
    cert.mode = Certificate::Mode::Sttt;
    cert.t = t;
    cert.delta_eff = std::max(g.max_degree(), 3);
    cert.r = r_bound(cert.delta_eff, t);
    cert.parabola_pow = static_cast<long long>(cert.delta_eff) * cert.r;

    try {
        if (w.is_exact()) {
            FrontEngine<GaussianRational> engine(g, w.exact, cert.parabola_pow, cert.r, &cert);
            GaussianRational total = telescope_front(engine, g.vertex_count());
            cross_check(total, g, w.exact);
            cert.final_z = to_big(total);
        } else {
            std::vector<BigComplex> wb = w.as_bigcomplex();
            FrontEngine<BigComplex> engine(g, wb, cert.parabola_pow, cert.r, &cert);
            BigComplex total = telescope_front(engine, g.vertex_count());
            cross_check(total, g, wb);
            cert.final_z = total;
        }
    } catch (const AbortRun&) {
        return cert;  // outcome and diagnostic already recorded
    }
    cert.outcome = CertOutcome::Certified;
    return cert;
}

Certificate certify_clawfree(const Graph& g, const VertexSet& K, const WeightAssignment& w,
                             int k) {
    const int n = g.vertex_count();
    if (k < 1) throw std::invalid_argument("certify_clawfree: clique bound must be >= 1");
    if (static_cast<int>(w.size()) != n)
        throw std::invalid_argument("certify_clawfree: weight count does not match vertex count");
    if (K.empty() || !valid_vertex_set(K, n))
        throw std::invalid_argument("certify_clawfree: K must be a nonempty valid vertex set");
    if (!in_class_cls(g, k))
        throw std::invalid_argument(
            "certify_clawfree: graph is not claw-free with clique number <= k and a simplicial "
            "clique per component");
    if (!is_simplicial_clique(g, K))
        throw std::invalid_argument("certify_clawfree: K is not a simplicial clique");

    Certificate cert;
    cert.mode = Certificate::Mode::Clawfree;
    cert.k = k;

    // Per-vertex parabola membership, exact even for floating inputs (every
    // double is an exact rational).
    for (int v = 0; v < n; ++v) {
        GaussianRational lam = w.is_exact()
                                   ? w.exact[v]
                                   : GaussianRational{Rational(w.floating[v].real()),
                                                      Rational(w.floating[v].imag())};
        if (!in_parabola_exact(lam, Rational(k))) {
            cert.outcome = CertOutcome::PreconditionFailed;
            cert.diagnostic = "weight " + describe(lam) + " on vertex " + std::to_string(v) +
                              " lies outside the parabola R(" + std::to_string(k) + ")";
            return cert;
        }
    }

    // Telescope: strip the supplied simplicial clique, then repeatedly the
    // lexicographically first simplicial clique of what remains.
    auto run = [&](auto engine, const auto& weights) {
        using F = std::decay_t<decltype(engine.ratio(VertexMask(0), 0))>;
        VertexMask active = VertexMask::full(n);
        VertexMask front = mask_of(K, n);
        F total(1);
        while (!active.empty()) {
            total = total * engine.root_ratio(active, front);
            active = active.minus(front);
            if (active.empty()) break;
            InducedSubgraph sub = induced_subgraph(g, active.to_set());
            auto cliques = find_simplicial_cliques(sub.graph);
            if (cliques.empty())
                throw std::runtime_error(
                    "structural violation: a remaining component has no simplicial clique");
            front = VertexMask(n);
            for (int local : cliques.front()) front.set(sub.mapping[local]);
        }
        cross_check(total, g, weights);
        cert.final_z = to_big(total);
    };

    try {
        if (w.is_exact()) {
            run(PathEngine<GaussianRational>(g, w.exact, k, &cert), w.exact);
        } else {
            std::vector<BigComplex> wb = w.as_bigcomplex();
            run(PathEngine<BigComplex>(g, wb, k, &cert), wb);
        }
    } catch (const AbortRun&) {
        return cert;
    }
    cert.outcome = CertOutcome::Certified;
    return cert;
}

std::string serialize_certificate(const Certificate& c) {
    std::ostringstream os;
    os << (c.mode == Certificate::Mode::Sttt ? "STTT" : "CLAWFREE");
    if (c.mode == Certificate::Mode::Sttt)
        os << " delta=" << c.delta_eff << " t=" << c.t << " r=" << c.r;
    else
        os << " k=" << c.k;
    switch (c.outcome) {
        case CertOutcome::Certified: os << " certified"; break;
        case CertOutcome::PreconditionFailed: os << " precondition-failed"; break;
        case CertOutcome::RatioEscaped: os << " ratio-escaped"; break;
    }
    os << "\n";
    for (const auto& step : c.steps)
        os << hash16(step.context) << " " << format_complex30(step.ratio) << "\n";
    os << "FINAL " << format_complex30(c.final_z) << "\n";
    return os.str();
}

}  // namespace hcz
