// Command-line front end.  Talks to the library exclusively through the
// C interface in weyldft/weyldft.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "weyldft/weyldft.h"

namespace {

// Exit codes, also documented in the README.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalidConfig = 2;
constexpr int kExitLevelTooSmall = 3;
constexpr int kExitCountDisagreement = 4;
constexpr int kExitGridMismatch = 5;
constexpr int kExitVerifyFailure = 6;
constexpr int kExitGroupTooLarge = 7;
constexpr int kExitInternal = 8;

int status_to_exit(wdft_status s) {
    switch (s) {
        case WDFT_OK: return kExitOk;
        case WDFT_LEVEL_TOO_SMALL: return kExitLevelTooSmall;
        case WDFT_GRID_MISMATCH: return kExitGridMismatch;
        case WDFT_GROUP_TOO_LARGE: return kExitGroupTooLarge;
        case WDFT_INVALID_ALGEBRA:
        case WDFT_INADMISSIBLE_SIGN:
        case WDFT_MALFORMED_KAC:
        case WDFT_INVALID_ARGUMENT: return kExitInvalidConfig;
        case WDFT_INTERNAL: return kExitInternal;
    }
    return kExitInternal;
}

int report_error(wdft_status s) {
    std::cerr << "error: " << wdft_last_error() << "\n";
    return status_to_exit(s);
}

bool write_output(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        return true;
    }
    std::ofstream out(path, std::ios::binary);
    out << data;
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        return false;
    }
    return true;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

// "7" or "4..12" -> inclusive list.
bool parse_m_range(const std::string& spec, std::vector<long long>& out) {
    auto dots = spec.find("..");
    try {
        if (dots == std::string::npos) {
            out.push_back(std::stoll(spec));
        } else {
            long long lo = std::stoll(spec.substr(0, dots));
            long long hi = std::stoll(spec.substr(dots + 2));
            for (long long m = lo; m <= hi; ++m) out.push_back(m);
        }
    } catch (const std::exception&) {
        return false;
    }
    return !out.empty();
}

struct CommonOpts {
    std::string algebra;
    std::string sigma = "1";
    std::string M_spec;
    std::string format = "json";
    std::string output;
    bool relaxed = false;
    bool allow_large = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_format) {
    cmd->add_option("--algebra", o.algebra, "Algebra name, e.g. A2, B3, E7")->required();
    cmd->add_option("--sigma", o.sigma, "Sign homomorphism: 1, e, s or l");
    cmd->add_option("--M", o.M_spec, "Grid level (count also accepts a range lo..hi)")
        ->required();
    if (with_format) cmd->add_option("--format", o.format, "Output format: json or csv");
    cmd->add_option("--output", o.output, "Output file (default: stdout)");
    cmd->add_flag("--relaxed-M", o.relaxed, "Allow levels M <= m^sigma (sets may be empty)");
}

long long weyl_cap(bool allow_large) { return allow_large ? 2'000'000'000LL : 0; }

int run_points_or_weights(const CommonOpts& o, bool weights) {
    std::vector<long long> Ms;
    if (!parse_m_range(o.M_spec, Ms) || Ms.size() != 1) {
        std::cerr << "error: --M must be a single integer here\n";
        return kExitInvalidConfig;
    }
    char* text = nullptr;
    wdft_status s =
        weights
            ? wdft_weights(o.algebra.c_str(), o.sigma.c_str(), Ms[0], o.format.c_str(),
                           o.relaxed ? 1 : 0, &text)
            : wdft_points(o.algebra.c_str(), o.sigma.c_str(), Ms[0], o.format.c_str(),
                          o.relaxed ? 1 : 0, &text);
    if (s != WDFT_OK) return report_error(s);
    bool ok = write_output(o.output, text);
    wdft_string_free(text);
    if (!ok) return kExitInternal;
    long long nw = 0, np = 0;
    if (wdft_count(o.algebra.c_str(), o.sigma.c_str(), Ms[0], nullptr, nullptr, &nw, &np) ==
        WDFT_OK)
        std::cerr << o.algebra << " sigma=" << o.sigma << " M=" << Ms[0] << ": " << (weights ? nw : np)
                  << (weights ? " weights\n" : " points\n");
    return kExitOk;
}

int run_count(const CommonOpts& o) {
    std::vector<long long> Ms;
    if (!parse_m_range(o.M_spec, Ms)) {
        std::cerr << "error: bad --M value '" << o.M_spec << "'\n";
        return kExitInvalidConfig;
    }
    std::vector<std::string> algebras = split_csv(o.algebra);
    std::vector<std::string> sigmas =
        o.sigma == "all" ? std::vector<std::string>{"1", "e", "s", "l"} : split_csv(o.sigma);

    std::ostringstream csv;
    csv << "algebra,sigma,M,closed,orbit,weights,points,agree\n";
    bool disagreement = false;
    for (const std::string& alg : algebras)
        for (const std::string& sg : sigmas)
            for (long long M : Ms) {
                long long closed = 0, orbit = 0, nw = 0, np = 0;
                wdft_status s =
                    wdft_count(alg.c_str(), sg.c_str(), M, &closed, &orbit, &nw, &np);
                if (s == WDFT_INADMISSIBLE_SIGN && o.sigma == "all") continue;
                if (s != WDFT_OK) return report_error(s);
                bool agree = closed == orbit && orbit == nw && nw == np;
                if (!agree) disagreement = true;
                csv << alg << "," << sg << "," << M << "," << closed << "," << orbit << "," << nw
                    << "," << np << "," << (agree ? 1 : 0) << "\n";
            }
    if (!write_output(o.output, csv.str())) return kExitInternal;
    if (disagreement) {
        std::cerr << "error: counting routes disagree (see 'agree' column)\n";
        return kExitCountDisagreement;
    }
    return kExitOk;
}

int run_transform(const CommonOpts& o, const std::string& input, bool hartley, bool roundtrip) {
    std::vector<long long> Ms;
    if (!parse_m_range(o.M_spec, Ms) || Ms.size() != 1) {
        std::cerr << "error: --M must be a single integer here\n";
        return kExitInvalidConfig;
    }
    wdft_plan* plan = nullptr;
    wdft_status s = wdft_plan_create(o.algebra.c_str(), o.sigma.c_str(), Ms[0],
                                     weyl_cap(o.allow_large), o.relaxed ? 1 : 0, &plan);
    if (s != WDFT_OK) return report_error(s);

    int rc = kExitOk;
    if (roundtrip) {
        double err = 0.0;
        s = wdft_roundtrip_error(plan, hartley ? 1 : 0, 20240815ull, 10, &err);
        if (s != WDFT_OK) {
            rc = report_error(s);
        } else {
            std::ostringstream line;
            line << "max_relative_roundtrip_error=" << err << "\n";
            if (!write_output(o.output, line.str())) rc = kExitInternal;
        }
    } else {
        if (input.empty()) {
            std::cerr << "error: transform needs --input (or --roundtrip)\n";
            rc = kExitInvalidConfig;
        } else {
            std::ifstream in(input, std::ios::binary);
            std::stringstream buf;
            buf << in.rdbuf();
            if (!in) {
                std::cerr << "error: cannot read " << input << "\n";
                rc = kExitInvalidConfig;
            } else {
                char* out_json = nullptr;
                s = wdft_transform_json(plan, buf.str().c_str(), hartley ? 1 : 0, &out_json);
                if (s != WDFT_OK) {
                    rc = report_error(s);
                } else {
                    if (!write_output(o.output, out_json)) rc = kExitInternal;
                    wdft_string_free(out_json);
                }
            }
        }
    }
    wdft_plan_destroy(plan);
    return rc;
}

int run_verify(const CommonOpts& o, long long corrupt_eps) {
    std::vector<long long> Ms;
    if (!parse_m_range(o.M_spec, Ms) || Ms.size() != 1) {
        std::cerr << "error: --M must be a single integer here\n";
        return kExitInvalidConfig;
    }
    char* report = nullptr;
    int all_passed = 0;
    wdft_status s = wdft_verify(o.algebra.c_str(), o.sigma.c_str(), Ms[0],
                                weyl_cap(o.allow_large), o.relaxed ? 1 : 0, corrupt_eps, &report,
                                &all_passed);
    if (s != WDFT_OK) return report_error(s);
    bool ok = write_output(o.output, report);
    wdft_string_free(report);
    if (!ok) return kExitInternal;
    return all_passed ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dual-root-lattice discretization of Weyl orbit functions"};
    app.require_subcommand(1);

    CommonOpts points_opts, weights_opts, count_opts, transform_opts, verify_opts;
    std::string transform_input;
    bool hartley = false, roundtrip = false;
    long long corrupt_eps = -1;

    CLI::App* points = app.add_subcommand("points", "Emit the sampling point set");
    add_common(points, points_opts, true);

    CLI::App* weights = app.add_subcommand("weights", "Emit the weight label set");
    add_common(weights, weights_opts, true);

    CLI::App* count = app.add_subcommand("count", "Cardinality sweep by three methods");
    add_common(count, count_opts, false);

    CLI::App* transform = app.add_subcommand("transform", "Forward transform of a sample file");
    add_common(transform, transform_opts, false);
    transform->add_option("--input", transform_input, "Sample table JSON file");
    transform->add_flag("--hartley", hartley, "Use the real cas-kernel transform");
    transform->add_flag("--roundtrip", roundtrip,
                        "Report max reconstruction error on random samples instead");
    transform->add_flag("--allow-large-weyl", transform_opts.allow_large,
                        "Lift the Weyl group enumeration cap (E7/E8)");

    CLI::App* verify = app.add_subcommand("verify", "Run the property suite for one config");
    add_common(verify, verify_opts, false);
    verify->add_flag("--allow-large-weyl", verify_opts.allow_large,
                     "Lift the Weyl group enumeration cap (E7/E8)");
    verify->add_option("--corrupt-eps", corrupt_eps,
                       "Test hook: corrupt the orbit weight at this grid index");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    if (points->parsed()) return run_points_or_weights(points_opts, false);
    if (weights->parsed()) return run_points_or_weights(weights_opts, true);
    if (count->parsed()) return run_count(count_opts);
    if (transform->parsed()) return run_transform(transform_opts, transform_input, hartley, roundtrip);
    if (verify->parsed()) return run_verify(verify_opts, corrupt_eps);
    return kExitUsage;
}
