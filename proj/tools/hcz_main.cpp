// Command-line surface: evaluation, recognition, certification, region
// membership, family generation, grid scans, and zero-construction drivers.
//
// Exit codes are a stable contract: 0 success (or certified), 2 input error,
// 3 certification precondition failed, 4 structural violation.
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "hcz/certifier.hpp"
#include "hcz/families.hpp"
#include "hcz/graph.hpp"
#include "hcz/graph_io.hpp"
#include "hcz/indpoly.hpp"
#include "hcz/numbers.hpp"
#include "hcz/recognizers.hpp"
#include "hcz/regions.hpp"
#include "hcz/roots.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitStructural = 4;

using hcz::Graph;
using hcz::WeightAssignment;

// "re,im" (or a bare real) to a complex double.
std::complex<double> parse_complex(const std::string& s) {
    std::stringstream ss(s);
    std::string re_s, im_s;
    if (!std::getline(ss, re_s, ',')) throw std::runtime_error("empty complex literal");
    if (!std::getline(ss, im_s, ',')) im_s = "0";
    std::string rest;
    if (std::getline(ss, rest, ','))
        throw std::runtime_error("too many components in \"" + s + "\"");
    std::size_t used = 0;
    double re = std::stod(re_s, &used);
    if (used != re_s.size()) throw std::runtime_error("bad real part \"" + re_s + "\"");
    double im = std::stod(im_s, &used);
    if (used != im_s.size()) throw std::runtime_error("bad imaginary part \"" + im_s + "\"");
    return {re, im};
}

// "p/q,r/s" (or a bare rational) to a Gaussian rational.
hcz::GaussianRational parse_complex_exact(const std::string& s) {
    std::stringstream ss(s);
    std::string re_s, im_s;
    if (!std::getline(ss, re_s, ',')) throw std::runtime_error("empty complex literal");
    if (!std::getline(ss, im_s, ',')) im_s = "0";
    std::string rest;
    if (std::getline(ss, rest, ','))
        throw std::runtime_error("too many components in \"" + s + "\"");
    return {hcz::parse_rational(re_s), hcz::parse_rational(im_s)};
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        out.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw std::runtime_error("bad integer \"" + tok + "\"");
    }
    return out;
}

// Shared weight-source flags: exactly one of a constant lambda or a
// per-vertex weights file, with --exact switching to rational parsing.
struct WeightFlags {
    std::string lambda;
    std::string weights_file;
    bool exact = false;

    void attach(CLI::App* cmd, bool required = true) {
        auto* l = cmd->add_option("--lambda", lambda,
                                  "constant vertex weight \"re,im\" (rationals with --exact)");
        auto* w = cmd->add_option("--weights", weights_file,
                                  "per-vertex weights file, lines \"v re im\"");
        l->excludes(w);
        w->excludes(l);
        cmd->add_flag("--exact", exact, "parse weights as rationals p/q and compute exactly");
        if (required) {
            // Enforced manually in resolve() so the error lands on exit 2.
        }
    }

    WeightAssignment resolve(const Graph& g) const {
        int n = g.vertex_count();
        if (!lambda.empty() && !weights_file.empty())
            throw std::runtime_error("--lambda and --weights are mutually exclusive");
        if (lambda.empty() && weights_file.empty())
            throw std::runtime_error("need --lambda or --weights");
        if (!lambda.empty()) {
            if (exact) return WeightAssignment::constant_exact(n, parse_complex_exact(lambda));
            return WeightAssignment::constant(n, parse_complex(lambda));
        }
        return hcz::read_weights_file(weights_file, n, exact);
    }
};

// Region flags shared by `region` and `scan --mode region`.
struct RegionFlags {
    std::string kind;
    double k = 1.0;
    double t = 0.0;
    int delta = 3;
    int depth = 1;
    double lam0 = 1.0;
    double eps = 0.05;
    double psi = 0.1;
    double k0 = 2.0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--k", k, "parabola parameter k (kind parabola)");
        cmd->add_option("--t", t, "halfplane threshold Re >= t (kind halfplane)");
        cmd->add_option("--delta", delta, "degree bound (kinds F, Fstar)");
        cmd->add_option("--depth", depth, "arm-length parameter (kinds F, Fstar)");
        cmd->add_option("--lam0", lam0, "interval center (kind sector)");
        cmd->add_option("--eps", eps, "interval radius (kind sector)");
        cmd->add_option("--psi", psi, "half-angle (kind sector)");
        cmd->add_option("--k0", k0, "boundary parameter (kind asano)");
    }

    hcz::RegionSpec resolve() const {
        if (kind == "parabola") return hcz::RegionSpec::parabola(k);
        if (kind == "halfplane") return hcz::RegionSpec::halfplane(t);
        if (kind == "F") return hcz::RegionSpec::region_f(delta, depth);
        if (kind == "Fstar") return hcz::RegionSpec::region_fstar(delta, depth);
        if (kind == "sector") return hcz::RegionSpec::sector(lam0, eps, psi);
        if (kind == "asano") return hcz::RegionSpec::asano(k0);
        throw std::runtime_error("unknown region kind \"" + kind + "\"");
    }
};

// Family construction shared by `family` and `scan --family`.
Graph build_family(const std::string& name, const std::vector<int>& p,
                   const std::string& base_file, int s, const std::string& mode) {
    auto want = [&](std::size_t cnt, const char* usage) {
        if (p.size() != cnt)
            throw std::runtime_error("family " + name + " expects --params " + usage);
    };
    if (name == "cycle") {
        want(1, "len");
        return hcz::make_cycle(p[0]);
    }
    if (name == "pathpower") {
        want(2, "n,d");
        return hcz::make_path_power(p[0], p[1]);
    }
    if (name == "multipartite") {
        want(4, "a,b,n,m");
        return hcz::make_multipartite({p[0], p[1], p[2], p[3]});
    }
    if (name == "tree") {
        want(2, "d,k");
        return hcz::make_tree_T(p[0], p[1]);
    }
    if (name == "blowup") {
        if (base_file.empty()) throw std::runtime_error("family blowup needs --graph base file");
        if (mode != "clique" && mode != "independent")
            throw std::runtime_error("family blowup needs --blowup-mode clique|independent");
        Graph base = hcz::read_graph_file(base_file);
        return hcz::blowup(base, s,
                           mode == "clique" ? hcz::BlowupMode::Clique
                                            : hcz::BlowupMode::Independent);
    }
    throw std::runtime_error("unknown family \"" + name + "\"");
}

std::ostream& open_or_stdout(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file \"" + path + "\"");
    return file;
}

int run_eval(const std::string& graph_file, const WeightFlags& wf) {
    Graph g = hcz::read_graph_file(graph_file);
    WeightAssignment w = wf.resolve(g);
    if (w.repr == WeightAssignment::Repr::Exact) {
        hcz::GaussianRational z = hcz::z_eval_exact(g, w.exact);
        std::cout << z.re.str() << ' ' << z.im.str() << '\n';
    } else {
        std::vector<hcz::BigComplex> wb;
        wb.reserve(w.floating.size());
        for (const auto& lam : w.floating) wb.emplace_back(lam);
        std::cout << hcz::format_complex30(hcz::z_eval_big(g, wb)) << '\n';
    }
    return kExitOk;
}

int run_coeffs(const std::string& graph_file) {
    Graph g = hcz::read_graph_file(graph_file);
    auto poly = hcz::univariate_coeffs(g);
    for (std::size_t i = 0; i < poly.coeffs.size(); ++i)
        std::cout << i << ' ' << poly.coeffs[i].str() << '\n';
    return kExitOk;
}

int run_roots(const std::string& graph_file) {
    Graph g = hcz::read_graph_file(graph_file);
    auto poly = hcz::univariate_coeffs(g);
    if (poly.degree() < 1) {
        return kExitOk;  // constant polynomial: no roots, no rows
    }
    auto res = hcz::poly_roots(poly);
    hcz::BigFloat denom(1);
    for (const auto& c : poly.coeffs) denom += abs(hcz::BigFloat(c));
    for (std::size_t i = 0; i < res.roots.size(); ++i) {
        hcz::BigComplex val = poly.eval_big(hcz::BigComplex(res.roots[i]));
        double resid = static_cast<double>(val.abs() / denom);
        std::printf("%zu,%.17g,%.17g,%.17g\n", i, res.roots[i].real(), res.roots[i].imag(),
                    resid);
    }
    return kExitOk;
}

int run_recognize(const std::string& what, const std::string& graph_file, int t, int k) {
    Graph g = hcz::read_graph_file(graph_file);
    if (what == "claw") {
        std::cout << (hcz::is_claw_free(g) ? "yes" : "no") << '\n';
        return kExitOk;
    }
    if (what == "sttt") {
        std::cout << (hcz::is_sttt_free(g, t) ? "yes" : "no") << '\n';
        return kExitOk;
    }
    if (what == "cls") {
        std::cout << (hcz::in_class_cls(g, k) ? "yes" : "no") << '\n';
        return kExitOk;
    }
    if (what == "linecover") {
        auto cover = hcz::multigraph_line_cover(g);
        if (!cover) {
            std::cout << "no\n";
            return kExitOk;
        }
        std::cout << "yes " << cover->k0 << '\n';
        for (const auto& clique : cover->cliques) {
            for (std::size_t i = 0; i < clique.size(); ++i)
                std::cout << (i ? " " : "") << clique[i];
            std::cout << '\n';
        }
        return kExitOk;
    }
    throw std::runtime_error("unknown recognizer \"" + what + "\"");
}

int run_region(const RegionFlags& rf, const std::string& point) {
    hcz::RegionSpec spec = rf.resolve();
    spec.validate();
    std::cout << (spec.contains(parse_complex(point)) ? 1 : 0) << '\n';
    return kExitOk;
}

int run_certify(const std::string& graph_file, const WeightFlags& wf, const std::string& mode,
                int t, int k, const std::string& clique_csv, const std::string& out_path) {
    Graph g = hcz::read_graph_file(graph_file);
    WeightAssignment w = wf.resolve(g);
    hcz::Certificate cert;
    try {
        if (mode == "sttt") {
            cert = hcz::certify_sttt(g, w, t);
        } else if (mode == "clawfree") {
            if (clique_csv.empty())
                throw std::runtime_error("clawfree mode needs --clique v1,v2,...");
            cert = hcz::certify_clawfree(g, parse_int_list(clique_csv), w, k);
        } else {
            throw std::runtime_error("unknown mode \"" + mode + "\" (use sttt or clawfree)");
        }
    } catch (const std::invalid_argument& e) {
        // Class membership or parameter preconditions of the engine itself.
        std::cerr << "structural violation: " << e.what() << '\n';
        return kExitStructural;
    }

    std::ofstream file;
    std::ostream& out = open_or_stdout(out_path, file);
    out << hcz::serialize_certificate(cert);

    switch (cert.outcome) {
        case hcz::CertOutcome::Certified:
            return kExitOk;
        case hcz::CertOutcome::PreconditionFailed:
            std::cerr << "precondition failed: " << cert.diagnostic << '\n';
            return kExitPrecondition;
        case hcz::CertOutcome::RatioEscaped:
            std::cerr << "structural violation: " << cert.diagnostic << '\n';
            return kExitStructural;
    }
    return kExitStructural;
}

int run_family(const std::string& name, const std::vector<int>& params,
               const std::string& base_file, int s, const std::string& mode,
               const std::string& out_path) {
    Graph g = build_family(name, params, base_file, s, mode);
    std::ofstream file;
    std::ostream& out = open_or_stdout(out_path, file);
    hcz::write_graph(out, g);
    return kExitOk;
}

struct ScanGrid {
    double re_min, re_max, im_min, im_max;
    int nx, ny;
};

// Row-major scan: rows sweep the imaginary axis bottom-up, each row sweeps
// the real axis left to right. Rows are computed in parallel and emitted in
// order, so output bytes are independent of the thread count.
int run_scan(const ScanGrid& grid, const std::string& mode, const std::string& graph_file,
             const std::string& family, const std::vector<int>& fparams,
             const RegionFlags& rf, double tol) {
    if (grid.nx < 2 || grid.ny < 2) throw std::runtime_error("resolution must be >= 2 per axis");
    if (!(grid.re_min < grid.re_max) || !(grid.im_min < grid.im_max))
        throw std::runtime_error("scan bounds must be ordered");
    long long points = static_cast<long long>(grid.nx) * grid.ny;
    if (points > 1000000) throw std::runtime_error("grid exceeds 10^6 points");

    std::optional<Graph> g;
    std::optional<hcz::RegionSpec> region;
    if (mode == "region") {
        region = rf.resolve();
        region->validate();
    } else {
        if (!graph_file.empty()) {
            g = hcz::read_graph_file(graph_file);
        } else if (!family.empty()) {
            g = build_family(family, fparams, "", 1, "");
        } else {
            throw std::runtime_error("scan needs --graph or --family for mode " + mode);
        }
    }

    double dre = (grid.re_max - grid.re_min) / (grid.nx - 1);
    double dim = (grid.im_max - grid.im_min) / (grid.ny - 1);
    auto value_at = [&](std::complex<double> lam) -> std::string {
        char buf[96];
        if (mode == "region") {
            std::snprintf(buf, sizeof buf, "%d", region->contains(lam) ? 1 : 0);
        } else {
            auto w = WeightAssignment::constant(g->vertex_count(), lam);
            double az = std::abs(hcz::z_eval(*g, w));
            if (mode == "absz") {
                std::snprintf(buf, sizeof buf, "%.17g", az);
            } else if (mode == "zeros") {
                double scale = hcz::z_scale(*g, w);
                std::snprintf(buf, sizeof buf, "%d", az < tol * scale ? 1 : 0);
            } else {
                throw std::runtime_error("unknown scan mode \"" + mode + "\"");
            }
        }
        return buf;
    };

    std::vector<std::string> rows(static_cast<std::size_t>(grid.ny));
    auto fill_row = [&](int iy) {
        std::string row;
        double im = grid.im_min + iy * dim;
        for (int ix = 0; ix < grid.nx; ++ix) {
            double re = grid.re_min + ix * dre;
            char head[64];
            std::snprintf(head, sizeof head, "%.17g,%.17g,", re, im);
            row += head;
            row += value_at({re, im});
            row += '\n';
        }
        rows[static_cast<std::size_t>(iy)] = std::move(row);
    };

    unsigned nthreads = std::max(1u, std::thread::hardware_concurrency());
    nthreads = std::min<unsigned>(nthreads, static_cast<unsigned>(grid.ny));
    std::vector<std::thread> pool;
    for (unsigned tix = 0; tix < nthreads; ++tix) {
        pool.emplace_back([&, tix] {
            for (int iy = static_cast<int>(tix); iy < grid.ny; iy += static_cast<int>(nthreads))
                fill_row(iy);
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& row : rows) std::cout << row;
    return kExitOk;
}

int run_counterexample_cycle(double a, int n_max) {
    if (n_max < 2) throw std::runtime_error("need --n-max >= 2");
    for (int n = 2; n <= n_max; ++n) {
        auto czw = hcz::cycle_zero_weights(a, n);
        auto [alpha, beta] = hcz::cycle_eigenvalues(czw.lambda, czw.mu);
        double scale = std::pow(std::max(std::abs(alpha), std::abs(beta)), n);
        double resid = std::abs(hcz::cycle_transfer_eval(n, czw.lambda, czw.mu)) / scale;
        std::printf("%d,%.17g,%.17g,%.17g\n", n, czw.lambda.real(), czw.lambda.imag(), resid);
    }
    return kExitOk;
}

int run_counterexample_sparse(double eps) {
    auto ce = hcz::find_sparse_counterexample(eps);
    std::printf("eps %.17g\n", ce.eps);
    std::printf("W %d\n", ce.W);
    std::printf("a %.17g\n", ce.a);
    std::printf("n %d\n", ce.n);
    std::printf("b %.17g\n", ce.b);
    std::printf("delta %.17g\n", ce.delta);
    std::printf("z_delta %.17g %.17g\n", ce.z_delta.real(), ce.z_delta.imag());
    for (std::size_t v = 0; v < ce.blowup_weights.size(); ++v)
        std::printf("%zu %.17g %.17g\n", v, ce.blowup_weights[v].real(),
                    ce.blowup_weights[v].imag());
    return kExitOk;
}

int run_counterexample_multipartite(const std::string& target, double eps) {
    auto res = hcz::multipartite_root_near(parse_complex(target), eps);
    std::printf("N %d\n", res.N);
    std::printf("A %s\n", res.A.str().c_str());
    std::printf("B %s\n", res.B.str().c_str());
    std::printf("t %s\n", res.t.str().c_str());
    std::printf("root %.17g %.17g\n", res.root.real(), res.root.imag());
    std::printf("distance %.17g\n", res.distance);
    std::printf("residual %.17g\n", res.residual);
    return kExitOk;
}

int run_counterexample_tree(int k, int d, const std::string& seed) {
    auto res = hcz::tree_zero_search(k, d, parse_complex(seed));
    for (std::size_t i = 0; i < res.trajectory.size(); ++i) {
        std::complex<double> lam = res.trajectory[i];
        double resid = std::abs(hcz::tree_g_iter(lam, k, d) + std::complex<double>(1, 0));
        std::printf("%zu,%.17g,%.17g,%.17g\n", i, lam.real(), lam.imag(), resid);
    }
    if (!res.converged) {
        std::cerr << "search did not converge from this seed\n";
        return kExitInput;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Independence-polynomial zero-free-region toolkit"};
    app.require_subcommand(1);

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate the partition function Z_G");
    std::string eval_graph;
    WeightFlags eval_w;
    eval_cmd->add_option("graph", eval_graph, "edge-list graph file")->required();
    eval_w.attach(eval_cmd);

    // coeffs
    auto* coeffs_cmd =
        app.add_subcommand("coeffs", "independent-set counts by size (univariate coefficients)");
    std::string coeffs_graph;
    coeffs_cmd->add_option("graph", coeffs_graph, "edge-list graph file")->required();

    // roots
    auto* roots_cmd =
        app.add_subcommand("roots", "all roots of the univariate polynomial, CSV idx,re,im,residual");
    std::string roots_graph;
    roots_cmd->add_option("graph", roots_graph, "edge-list graph file")->required();

    // recognize
    auto* rec_cmd = app.add_subcommand("recognize", "graph-class membership tests");
    std::string rec_what, rec_graph;
    int rec_t = 1, rec_k = 2;
    rec_cmd->add_option("what", rec_what, "claw|sttt|cls|linecover")->required();
    rec_cmd->add_option("graph", rec_graph, "edge-list graph file")->required();
    rec_cmd->add_option("--t", rec_t, "spider arm length (sttt)");
    rec_cmd->add_option("--k", rec_k, "clique bound (cls)");

    // region
    auto* region_cmd = app.add_subcommand("region", "membership test for a zero-free region");
    RegionFlags region_rf;
    std::string region_point;
    region_cmd->add_option("kind", region_rf.kind, "parabola|halfplane|F|Fstar|sector|asano")
        ->required();
    region_cmd->add_option("--point", region_point, "query point \"re,im\"")->required();
    region_rf.attach(region_cmd);

    // certify
    auto* cert_cmd = app.add_subcommand("certify", "run the non-vanishing certifier");
    std::string cert_graph, cert_mode, cert_clique, cert_out;
    int cert_t = 1, cert_k = 2;
    WeightFlags cert_w;
    cert_cmd->add_option("graph", cert_graph, "edge-list graph file")->required();
    cert_cmd->add_option("--mode", cert_mode, "sttt|clawfree")->required();
    cert_cmd->add_option("--t", cert_t, "spider arm length (sttt mode)");
    cert_cmd->add_option("--k", cert_k, "clique bound (clawfree mode)");
    cert_cmd->add_option("--clique", cert_clique, "simplicial clique \"v1,v2,...\" (clawfree)");
    cert_cmd->add_option("--out", cert_out, "certificate output file (default stdout)");
    cert_w.attach(cert_cmd);

    // family
    auto* fam_cmd = app.add_subcommand("family", "emit a constructed graph as an edge list");
    std::string fam_name, fam_base, fam_mode, fam_out;
    std::string fam_params;
    int fam_s = 1;
    fam_cmd->add_option("name", fam_name, "cycle|pathpower|multipartite|tree|blowup")->required();
    fam_cmd->add_option("--params", fam_params,
                        "comma-separated integers: cycle len | pathpower n,d | "
                        "multipartite a,b,n,m | tree d,k");
    fam_cmd->add_option("--graph", fam_base, "base graph file (blowup)");
    fam_cmd->add_option("--s", fam_s, "class size (blowup)");
    fam_cmd->add_option("--blowup-mode", fam_mode, "clique|independent (blowup)");
    fam_cmd->add_option("--out", fam_out, "output file (default stdout)");

    // scan
    auto* scan_cmd = app.add_subcommand("scan", "grid scan of the complex plane, CSV re,im,value");
    ScanGrid grid{-1, 1, -1, 1, 100, 100};
    std::string scan_mode = "absz", scan_graph, scan_family, scan_fparams;
    RegionFlags scan_rf;
    double scan_tol = 1e-9;
    scan_cmd->add_option("--re-min", grid.re_min)->required();
    scan_cmd->add_option("--re-max", grid.re_max)->required();
    scan_cmd->add_option("--im-min", grid.im_min)->required();
    scan_cmd->add_option("--im-max", grid.im_max)->required();
    scan_cmd->add_option("--nx", grid.nx, "grid resolution, real axis (>= 2)")->required();
    scan_cmd->add_option("--ny", grid.ny, "grid resolution, imaginary axis (>= 2)")->required();
    scan_cmd->add_option("--mode", scan_mode, "absz|zeros|region (default absz)");
    scan_cmd->add_option("--graph", scan_graph, "target graph file (absz/zeros)");
    scan_cmd->add_option("--family", scan_family, "target family name (absz/zeros)");
    scan_cmd->add_option("--params", scan_fparams, "family parameters, comma-separated");
    scan_cmd->add_option("--tol", scan_tol, "relative zero threshold (zeros mode)");
    scan_cmd->add_option("--region-kind", scan_rf.kind, "region kind (region mode)");
    scan_rf.attach(scan_cmd);

    // counterexample
    auto* ce_cmd = app.add_subcommand("counterexample", "zero-construction drivers");
    std::string ce_what, ce_target = "2,2", ce_seed = "-8,0.5";
    double ce_a = 0.0, ce_eps = 0.5;
    int ce_nmax = 40, ce_k = 1, ce_d = 1;
    ce_cmd->add_option("what", ce_what, "cycle|sparse|multipartite|tree")->required();
    ce_cmd->add_option("--a", ce_a, "cycle: real part of the weight");
    ce_cmd->add_option("--n-max", ce_nmax, "cycle: largest half-length");
    ce_cmd->add_option("--eps", ce_eps, "sparse/multipartite: epsilon");
    ce_cmd->add_option("--target", ce_target, "multipartite: target point \"re,im\"");
    ce_cmd->add_option("--k", ce_k, "tree: subdivision parameter");
    ce_cmd->add_option("--d", ce_d, "tree: height");
    ce_cmd->add_option("--seed", ce_seed, "tree: Newton seed \"re,im\"");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return kExitInput;
    }

    try {
        if (eval_cmd->parsed()) return run_eval(eval_graph, eval_w);
        if (coeffs_cmd->parsed()) return run_coeffs(coeffs_graph);
        if (roots_cmd->parsed()) return run_roots(roots_graph);
        if (rec_cmd->parsed()) return run_recognize(rec_what, rec_graph, rec_t, rec_k);
        if (region_cmd->parsed()) return run_region(region_rf, region_point);
        if (cert_cmd->parsed())
            return run_certify(cert_graph, cert_w, cert_mode, cert_t, cert_k, cert_clique,
                               cert_out);
        if (fam_cmd->parsed()) {
            std::vector<int> params =
                fam_params.empty() ? std::vector<int>{} : parse_int_list(fam_params);
            return run_family(fam_name, params, fam_base, fam_s, fam_mode, fam_out);
        }
        if (scan_cmd->parsed()) {
            std::vector<int> fparams =
                scan_fparams.empty() ? std::vector<int>{} : parse_int_list(scan_fparams);
            return run_scan(grid, scan_mode, scan_graph, scan_family, fparams, scan_rf,
                            scan_tol);
        }
        if (ce_cmd->parsed()) {
            if (ce_what == "cycle") return run_counterexample_cycle(ce_a, ce_nmax);
            if (ce_what == "sparse") return run_counterexample_sparse(ce_eps);
            if (ce_what == "multipartite")
                return run_counterexample_multipartite(ce_target, ce_eps);
            if (ce_what == "tree") return run_counterexample_tree(ce_k, ce_d, ce_seed);
            throw std::runtime_error("unknown counterexample \"" + ce_what + "\"");
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
