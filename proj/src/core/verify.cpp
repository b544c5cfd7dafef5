#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "affine.hpp"
#include "counting.hpp"

namespace weyldft {

bool all_pass(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

namespace {

double rel(double err, double scale) { return scale > 0.0 ? err / scale : err; }

void check_counts(const RootSystemData& R, const GammaGroup& G, SignHom sigma, Int M,
                  std::vector<CheckResult>& out) {
    Int closed = closed_count(R, sigma, M);
    Int burn = burnside_count(R, G, sigma, M);
    Int weights = enumerated_weight_count(R, G, sigma, M);
    Int points = enumerated_point_count(R, sigma, M);
    CheckResult r;
    r.name = "counts";
    r.pass = closed == burn && burn == weights && weights == points;
    r.note = "closed=" + std::to_string(closed) + " orbit=" + std::to_string(burn) +
             " weights=" + std::to_string(weights) + " points=" + std::to_string(points);
    out.push_back(std::move(r));
}

void check_congruence(const RootSystemData& R, SignHom sigma, Int M,
                      std::vector<CheckResult>& out) {
    CheckResult r;
    r.name = "congruence";
    r.pass = true;
    IntVec lo = point_lower_bounds(R, sigma);
    for (const IntVec& kac : enumerate_labels(R.marks, lo, M))
        if (congruence_general(R, kac, nullptr) != congruence_simplified(R, kac)) {
            r.pass = false;
            break;
        }
    out.push_back(std::move(r));
}

void check_torus_sum(const RootSystemData& R, Int M, std::vector<CheckResult>& out) {
    PointSet F = point_set(R, SignHom::Identity, M, /*relaxed=*/true);
    Int total = 0;
    for (const GridPoint& p : F.points) total += p.eps;
    Int expected = 1;
    for (int i = 0; i < R.rank; ++i) expected *= M;
    CheckResult r;
    r.name = "torus-sum";
    r.pass = total == expected;
    r.note = "sum=" + std::to_string(total) + " expected=" + std::to_string(expected);
    out.push_back(std::move(r));
}

void check_rho_shift(const RootSystemData& R, const GammaGroup& G, SignHom sigma, Int M,
                     std::vector<CheckResult>& out) {
    Int msig = generalized_coxeter(R, sigma);
    IntVec rho = rho_sigma(R, sigma);
    auto [plain, negative] = tilde_sets(R, G, sigma, M - msig);
    (void)negative;
    std::vector<IntVec> shifted;
    for (const IntVec& lam : plain) {
        IntVec v(lam.size());
        for (std::size_t i = 0; i < lam.size(); ++i) v[i] = lam[i] + rho[i];
        shifted.push_back(std::move(v));
    }
    std::sort(shifted.begin(), shifted.end(), std::greater<>());
    std::vector<IntVec> direct = weight_labels_direct(R, G, sigma, M);
    CheckResult r;
    r.name = "rho-shift";
    r.pass = shifted == direct;
    out.push_back(std::move(r));
}

void check_transforms(Transform& T, const VerifyOptions& opt, std::vector<CheckResult>& out) {
    const std::size_t nl = T.labels().weights.size();
    const std::size_t np = T.grid().points.size();
    if (nl == 0 || np == 0) return;

    // Gram matrices, Fourier and Hartley.
    double gram_dev = 0.0, hartley_dev = 0.0;
    for (std::size_t a = 0; a < nl; ++a) {
        std::vector<Complex> fa(np), fb(np);
        std::vector<double> za(np), zb(np);
        for (std::size_t s = 0; s < np; ++s) {
            fa[s] = T.basis(a, s);
            za[s] = T.basis_cas(a, s);
        }
        for (std::size_t b = a; b < nl; ++b) {
            Complex gram(0.0, 0.0);
            double hgram = 0.0;
            for (std::size_t s = 0; s < np; ++s) {
                double eps = static_cast<double>(T.grid().points[s].eps);
                Complex vb = T.basis(b, s);
                gram += eps * fa[s] * std::conj(vb);
                hgram += eps * za[s] * (vb.real() + vb.imag());
            }
            double scale = std::sqrt(T.norm(a) * T.norm(b));
            if (a == b) {
                gram_dev = std::max(gram_dev, rel(std::abs(gram - T.norm(a)), T.norm(a)));
                hartley_dev = std::max(hartley_dev, rel(std::abs(hgram - T.norm(a)), T.norm(a)));
            } else {
                gram_dev = std::max(gram_dev, rel(std::abs(gram), scale));
                hartley_dev = std::max(hartley_dev, rel(std::abs(hgram), scale));
            }
        }
    }
    out.push_back({"gram-diagonal", gram_dev <= 1e-9, gram_dev, ""});
    out.push_back({"hartley-gram-diagonal", hartley_dev <= 1e-9, hartley_dev, ""});

    // Round trips and Plancherel on random samples.
    std::mt19937_64 rng(opt.rng_seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    double rt_dev = 0.0, hrt_dev = 0.0, plancherel_dev = 0.0, hplancherel_dev = 0.0;
    for (int trial = 0; trial < opt.random_trials; ++trial) {
        std::vector<Complex> f(np);
        std::vector<double> g(np);
        double fmax = 0.0, gmax = 0.0;
        for (std::size_t s = 0; s < np; ++s) {
            f[s] = Complex(dist(rng), dist(rng));
            g[s] = dist(rng);
            fmax = std::max(fmax, std::abs(f[s]));
            gmax = std::max(gmax, std::abs(g[s]));
        }
        std::vector<Complex> c = T.forward(f);
        std::vector<Complex> back = T.inverse(c);
        for (std::size_t s = 0; s < np; ++s)
            rt_dev = std::max(rt_dev, std::abs(back[s] - f[s]) / fmax);

        std::vector<double> d = T.hartley_forward(g);
        std::vector<double> hback = T.hartley_inverse(d);
        for (std::size_t s = 0; s < np; ++s)
            hrt_dev = std::max(hrt_dev, std::abs(hback[s] - g[s]) / gmax);

        double lhs = 0.0, hlhs = 0.0;
        for (std::size_t s = 0; s < np; ++s) {
            double eps = static_cast<double>(T.grid().points[s].eps);
            lhs += eps * std::norm(f[s]);
            hlhs += eps * g[s] * g[s];
        }
        double rhs = 0.0, hrhs = 0.0;
        for (std::size_t li = 0; li < nl; ++li) {
            rhs += T.norm(li) * std::norm(c[li]);
            hrhs += T.norm(li) * d[li] * d[li];
        }
        plancherel_dev = std::max(plancherel_dev, rel(std::abs(lhs - rhs), lhs));
        hplancherel_dev = std::max(hplancherel_dev, rel(std::abs(hlhs - hrhs), hlhs));
    }
    out.push_back({"roundtrip", rt_dev <= 1e-10, rt_dev, ""});
    out.push_back({"hartley-roundtrip", hrt_dev <= 1e-10, hrt_dev, ""});
    out.push_back({"plancherel", plancherel_dev <= 1e-9, plancherel_dev, ""});
    out.push_back({"hartley-plancherel", hplancherel_dev <= 1e-9, hplancherel_dev, ""});
}

}  // namespace

std::vector<CheckResult> verify_config(const RootSystemData& R, SignHom sigma, Int M,
                                       const VerifyOptions& opt) {
    require_level(R, sigma, M, opt.relaxed);
    GammaGroup G(R);
    std::vector<CheckResult> out;
    check_counts(R, G, sigma, M, out);
    check_congruence(R, sigma, M, out);
    check_torus_sum(R, M, out);
    check_rho_shift(R, G, sigma, M, out);
    if (R.weyl_order <= opt.weyl_cap) {
        Transform T(R, sigma, M, opt.weyl_cap, opt.relaxed);
        if (opt.corrupt_eps) T.corrupt_epsilon(opt.corrupt_eps->first, opt.corrupt_eps->second);
        check_transforms(T, opt, out);
    } else {
        out.push_back({"transforms", true, 0.0,
                       "skipped: Weyl group above enumeration cap (counting checks only)"});
    }
    return out;
}

}  // namespace weyldft
