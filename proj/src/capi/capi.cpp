#include "weyldft/weyldft.h"

#include <cstdlib>
#include <cstring>
#include <random>
#include <string>

#include <json.hpp>

#include "../core/counting.hpp"
#include "../core/io.hpp"
#include "../core/transforms.hpp"
#include "../core/verify.hpp"

namespace {

using namespace weyldft;

thread_local std::string g_last_error;

wdft_status to_status(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidAlgebra: return WDFT_INVALID_ALGEBRA;
        case ErrorCode::InadmissibleSign: return WDFT_INADMISSIBLE_SIGN;
        case ErrorCode::LevelTooSmall: return WDFT_LEVEL_TOO_SMALL;
        case ErrorCode::GroupTooLarge: return WDFT_GROUP_TOO_LARGE;
        case ErrorCode::GridMismatch: return WDFT_GRID_MISMATCH;
        case ErrorCode::MalformedKac: return WDFT_MALFORMED_KAC;
        case ErrorCode::InvalidArgument: return WDFT_INVALID_ARGUMENT;
        case ErrorCode::Internal: return WDFT_INTERNAL;
    }
    return WDFT_INTERNAL;
}

template <typename Fn>
wdft_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return WDFT_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return WDFT_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::string pick_format(const char* format) {
    std::string f = format ? format : "json";
    if (f != "json" && f != "csv")
        fail(ErrorCode::InvalidArgument, "format must be 'json' or 'csv'");
    return f;
}

void require(bool ok, const char* what) {
    if (!ok) fail(ErrorCode::InvalidArgument, what);
}

}  // namespace

struct wdft_plan {
    weyldft::Transform transform;
};

extern "C" {

const char* wdft_last_error(void) { return g_last_error.c_str(); }

void wdft_string_free(char* s) { std::free(s); }

wdft_status wdft_points(const char* algebra, const char* sigma, long long M, const char* format,
                        int relaxed, char** out) {
    return guarded([&] {
        require(algebra && sigma && out, "null argument");
        std::string fmt = pick_format(format);
        RootSystemData R = build(parse_algebra(algebra));
        PointSet F = point_set(R, parse_sign(sigma), M, relaxed != 0);
        *out = dup_string(fmt == "json" ? points_to_json(F) : points_to_csv(F));
    });
}

wdft_status wdft_weights(const char* algebra, const char* sigma, long long M, const char* format,
                         int relaxed, char** out) {
    return guarded([&] {
        require(algebra && sigma && out, "null argument");
        std::string fmt = pick_format(format);
        RootSystemData R = build(parse_algebra(algebra));
        GammaGroup G(R);
        WeightSet L = weight_set_P(R, G, parse_sign(sigma), M, relaxed != 0);
        *out = dup_string(fmt == "json" ? weights_to_json(L) : weights_to_csv(L));
    });
}

wdft_status wdft_count(const char* algebra, const char* sigma, long long M, long long* closed_form,
                       long long* orbit_count, long long* n_weights, long long* n_points) {
    return guarded([&] {
        require(algebra && sigma, "null argument");
        RootSystemData R = build(parse_algebra(algebra));
        SignHom s = parse_sign(sigma);
        GammaGroup G(R);
        if (closed_form) *closed_form = closed_count(R, s, M);
        if (orbit_count) *orbit_count = burnside_count(R, G, s, M);
        if (n_weights) *n_weights = enumerated_weight_count(R, G, s, M);
        if (n_points) *n_points = enumerated_point_count(R, s, M);
    });
}

wdft_status wdft_plan_create(const char* algebra, const char* sigma, long long M,
                             long long weyl_cap, int relaxed, wdft_plan** out) {
    return guarded([&] {
        require(algebra && sigma && out, "null argument");
        RootSystemData R = build(parse_algebra(algebra));
        Int cap = weyl_cap > 0 ? weyl_cap : kDefaultWeylCap;
        *out = new wdft_plan{Transform(R, parse_sign(sigma), M, cap, relaxed != 0)};
    });
}

void wdft_plan_destroy(wdft_plan* plan) { delete plan; }

wdft_status wdft_plan_sizes(const wdft_plan* plan, size_t* n_points, size_t* n_weights) {
    return guarded([&] {
        require(plan != nullptr, "null plan");
        if (n_points) *n_points = plan->transform.grid().points.size();
        if (n_weights) *n_weights = plan->transform.labels().weights.size();
    });
}

wdft_status wdft_forward(const wdft_plan* plan, const double* re, const double* im, size_t n,
                         double* out_re, double* out_im) {
    return guarded([&] {
        require(plan && re && out_re && out_im, "null argument");
        std::vector<Complex> f(n);
        for (size_t i = 0; i < n; ++i) f[i] = Complex(re[i], im ? im[i] : 0.0);
        std::vector<Complex> c = plan->transform.forward(f);
        for (size_t i = 0; i < c.size(); ++i) {
            out_re[i] = c[i].real();
            out_im[i] = c[i].imag();
        }
    });
}

wdft_status wdft_inverse(const wdft_plan* plan, const double* re, const double* im, size_t n,
                         double* out_re, double* out_im) {
    return guarded([&] {
        require(plan && re && out_re && out_im, "null argument");
        std::vector<Complex> c(n);
        for (size_t i = 0; i < n; ++i) c[i] = Complex(re[i], im ? im[i] : 0.0);
        std::vector<Complex> f = plan->transform.inverse(c);
        for (size_t i = 0; i < f.size(); ++i) {
            out_re[i] = f[i].real();
            out_im[i] = f[i].imag();
        }
    });
}

wdft_status wdft_hartley_forward(const wdft_plan* plan, const double* f, size_t n, double* out) {
    return guarded([&] {
        require(plan && f && out, "null argument");
        std::vector<double> d = plan->transform.hartley_forward(std::vector<double>(f, f + n));
        std::copy(d.begin(), d.end(), out);
    });
}

wdft_status wdft_hartley_inverse(const wdft_plan* plan, const double* d, size_t n, double* out) {
    return guarded([&] {
        require(plan && d && out, "null argument");
        std::vector<double> f = plan->transform.hartley_inverse(std::vector<double>(d, d + n));
        std::copy(f.begin(), f.end(), out);
    });
}

wdft_status wdft_transform_json(const wdft_plan* plan, const char* samples_json, int hartley,
                                char** out_json) {
    return guarded([&] {
        require(plan && samples_json && out_json, "null argument");
        const Transform& T = plan->transform;
        std::vector<Complex> f = samples_from_json(samples_json, T.grid());
        if (hartley) {
            std::vector<double> rf(f.size());
            for (size_t i = 0; i < f.size(); ++i) {
                if (f[i].imag() != 0.0)
                    fail(ErrorCode::InvalidArgument,
                         "the cas-kernel transform needs real-valued samples");
                rf[i] = f[i].real();
            }
            *out_json = dup_string(hartley_spectrum_to_json(T.labels(), T.hartley_forward(rf)));
        } else {
            *out_json = dup_string(spectrum_to_json(T.labels(), T.forward(f)));
        }
    });
}

wdft_status wdft_roundtrip_error(const wdft_plan* plan, int hartley, unsigned long long seed,
                                 int trials, double* max_rel_err) {
    return guarded([&] {
        require(plan && max_rel_err, "null argument");
        require(trials > 0, "trials must be positive");
        const Transform& T = plan->transform;
        const size_t np = T.grid().points.size();
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        double worst = 0.0;
        for (int t = 0; t < trials; ++t) {
            if (hartley) {
                std::vector<double> f(np);
                double fmax = 0.0;
                for (auto& v : f) {
                    v = dist(rng);
                    fmax = std::max(fmax, std::abs(v));
                }
                std::vector<double> back = T.hartley_inverse(T.hartley_forward(f));
                for (size_t i = 0; i < np; ++i)
                    worst = std::max(worst, std::abs(back[i] - f[i]) / fmax);
            } else {
                std::vector<Complex> f(np);
                double fmax = 0.0;
                for (auto& v : f) {
                    v = Complex(dist(rng), dist(rng));
                    fmax = std::max(fmax, std::abs(v));
                }
                std::vector<Complex> back = T.inverse(T.forward(f));
                for (size_t i = 0; i < np; ++i)
                    worst = std::max(worst, std::abs(back[i] - f[i]) / fmax);
            }
        }
        *max_rel_err = worst;
    });
}

wdft_status wdft_verify(const char* algebra, const char* sigma, long long M, long long weyl_cap,
                        int relaxed, long long corrupt_eps_index, char** out_json,
                        int* all_passed) {
    return guarded([&] {
        require(algebra && sigma && out_json && all_passed, "null argument");
        RootSystemData R = build(parse_algebra(algebra));
        VerifyOptions opt;
        opt.weyl_cap = weyl_cap > 0 ? weyl_cap : kDefaultWeylCap;
        opt.relaxed = relaxed != 0;
        if (corrupt_eps_index >= 0)
            opt.corrupt_eps = {static_cast<std::size_t>(corrupt_eps_index), Int(0)};
        std::vector<CheckResult> results = verify_config(R, parse_sign(sigma), M, opt);

        nlohmann::ordered_json j;
        j["algebra"] = to_string(R.type);
        j["sigma"] = to_string(parse_sign(sigma));
        j["M"] = M;
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const CheckResult& r : results) {
            nlohmann::ordered_json rec;
            rec["check"] = r.name;
            rec["pass"] = r.pass;
            rec["deviation"] = r.deviation;
            if (!r.note.empty()) rec["note"] = r.note;
            arr.push_back(std::move(rec));
        }
        j["checks"] = std::move(arr);
        bool ok = all_pass(results);
        j["all_passed"] = ok;
        *all_passed = ok ? 1 : 0;
        *out_json = dup_string(j.dump(2) + "\n");
    });
}

}  // extern "C"
