/*
   Copyright 2026 The sqdisc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// sqdisc command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 computation error. The resolved configuration of every run is echoed to
// stderr as "# config:" lines; stdout carries only results.

#include "sqdisc/sqdisc.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace {

using Config = std::vector<std::pair<std::string, std::string>>;

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kComputation = 3 };

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void echo_config(const std::string& subcommand, const Config& cfg) {
    std::cerr << "# config: subcommand = " << subcommand << '\n';
    for (const auto& [k, v] : cfg) {
        std::cerr << "# config: " << k << " = " << v << '\n';
    }
}

sqdisc::IntPolynomial parse_poly(const std::string& text, const char* flag) {
    try {
        return sqdisc::IntPolynomial::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

sqdisc::CoeffSet parse_set(const std::string& text) {
    try {
        return sqdisc::CoeffSet::parse(text);
    } catch (const std::exception& e) {
        throw UsageError(std::string("--set: ") + e.what());
    }
}

sqdisc::Complex parse_point(const std::string& text) {
    try {
        return sqdisc::parse_complex(text);
    } catch (const sqdisc::CertificateParseError&) {
        throw UsageError("--center: expected X,Y but got '" + text + "'");
    }
}

struct DiscArgs {
    std::string poly;
};

int run_disc(const DiscArgs& a) {
    const auto f = parse_poly(a.poly, "--poly");
    echo_config("disc", {{"poly", f.to_string()}});
    const auto d = sqdisc::discriminant(f);
    std::cout << d.to_string() << '\n' << "square: " << (d.is_square ? "true" : "false") << '\n';
    return kOk;
}

struct ResultantArgs {
    std::string f;
    std::string g;
};

int run_resultant(const ResultantArgs& a) {
    const auto f = parse_poly(a.f, "--f");
    const auto g = parse_poly(a.g, "--g");
    echo_config("resultant", {{"f", f.to_string()}, {"g", g.to_string()}});
    std::cout << sqdisc::resultant(f, g).get_str() << '\n';
    return kOk;
}

struct ApproxArgs {
    std::string poly;
    std::size_t root_index = 0;
    double eps = 1e-2;
    std::string set = "pm1";
    std::string kase = "auto";
    std::string out;
};

int run_approx(const ApproxArgs& a) {
    const auto f = parse_poly(a.poly, "--poly");
    const auto set = parse_set(a.set);
    const auto request = sqdisc::parse_case_request(a.kase);
    if (!request) {
        throw UsageError("--case: expected auto, i, ii or iii");
    }
    if (!(a.eps > 0.0)) {
        throw UsageError("--eps must be positive");
    }
    if (f.degree() < 1 || !set.admits(f)) {
        throw UsageError("--poly is not a nonconstant polynomial with coefficients in {" + set.to_string() +
                         "} and nonzero constant term");
    }
    const Config cfg{{"poly", f.to_string()},
                     {"root_index", std::to_string(a.root_index)},
                     {"eps", sqdisc::format_double(a.eps)},
                     {"set", set.to_string()},
                     {"case", a.kase},
                     {"out", a.out}};
    echo_config("approx", cfg);

    const auto roots = sqdisc::sorted_by_modulus_then_arg(sqdisc::find_all_roots(f).roots);
    if (a.root_index >= roots.size()) {
        throw UsageError("--root-index must be below " + std::to_string(roots.size()));
    }
    const auto cert = sqdisc::approximate_root(f, roots[a.root_index], a.eps, set, *request);

    std::ofstream os(a.out, std::ios::binary);
    if (!os) {
        throw std::runtime_error("cannot open '" + a.out + "' for writing");
    }
    sqdisc::write_certificate(os, cert, cfg);
    os.close();
    if (!os) {
        throw std::runtime_error("failed writing '" + a.out + "'");
    }

    std::cout << "root = " << sqdisc::format_complex(cert.original_root) << '\n'
              << "inverted = " << (cert.inverted ? "true" : "false") << '\n'
              << "case = " << sqdisc::case_name(cert.case_used) << '\n'
              << "k = " << cert.k << '\n'
              << "degree = " << cert.f_k.degree() << '\n'
              << "beta = " << sqdisc::format_complex(cert.beta) << '\n'
              << "achieved_error = " << sqdisc::format_double(cert.achieved_error) << '\n'
              << "square: " << (cert.disc.is_square ? "true" : "false") << '\n';
    return kOk;
}

struct RenderArgs {
    std::string set = "pm1";
    int max_degree = 12;
    std::string out;
    std::string csv;
    int width = 512;
    int height = 512;
    std::string center = "0,0";
    double half_width = 2.0;
    bool square_only = false;
    bool no_overlay = false;
    unsigned threads = 0;
};

int run_render(const RenderArgs& a) {
    sqdisc::RenderConfig rc;
    rc.set = parse_set(a.set);
    rc.max_degree = a.max_degree;
    rc.center = parse_point(a.center);
    rc.half_width = a.half_width;
    rc.width = a.width;
    rc.height = a.height;
    rc.square_only = a.square_only;
    rc.overlay = !a.no_overlay;
    try {
        rc.validate();
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    }
    echo_config("render", {{"set", rc.set.to_string()},
                           {"max_degree", std::to_string(rc.max_degree)},
                           {"out", a.out},
                           {"csv", a.csv},
                           {"width", std::to_string(rc.width)},
                           {"height", std::to_string(rc.height)},
                           {"center", sqdisc::format_complex(rc.center)},
                           {"half_width", sqdisc::format_double(rc.half_width)},
                           {"square_only", rc.square_only ? "true" : "false"},
                           {"overlay", rc.overlay ? "true" : "false"},
                           {"threads", std::to_string(a.threads)}});

    sqdisc::RasterOptions opt;
    opt.threads = a.threads;
    opt.keep_cloud = !a.csv.empty();
    const auto raster = sqdisc::rasterize(rc, opt);
    sqdisc::emit_artifacts(raster, a.out, a.csv);

    std::uint64_t square_pixels = 0;
    std::uint64_t occupied = 0;
    for (std::size_t i = 0; i < raster.all.size(); ++i) {
        occupied += raster.all[i] != 0;
        square_pixels += raster.square[i] != 0;
    }
    std::cout << "polynomials = " << raster.polynomials << '\n'
              << "roots = " << raster.roots << '\n'
              << "skipped = " << raster.skipped << '\n'
              << "occupied_pixels = " << occupied << '\n'
              << "square_pixels = " << square_pixels << '\n';
    if (raster.skipped != 0) {
        std::cerr << "warning: " << raster.skipped << " polynomials skipped (root finder did not converge)\n";
    }
    return kOk;
}

struct VerifyArgs {
    std::string cert;
};

int run_verify(const VerifyArgs& a) {
    echo_config("verify", {{"cert", a.cert}});
    std::ifstream is(a.cert, std::ios::binary);
    if (!is) {
        throw UsageError("cannot open certificate '" + a.cert + "'");
    }
    sqdisc::ApproxCertificate cert;
    try {
        cert = sqdisc::read_certificate(is);
    } catch (const sqdisc::CertificateParseError& e) {
        std::cout << "FAIL parse: " << e.what() << '\n' << "result: rejected\n";
        return kVerifyFailed;
    }
    sqdisc::VerificationReport rep;
    try {
        rep = sqdisc::verify_certificate(cert);
    } catch (const std::exception& e) {
        std::cout << "FAIL evaluation: " << e.what() << '\n' << "result: rejected\n";
        return kVerifyFailed;
    }
    for (const auto& c : rep.checks) {
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) {
            std::cout << ": " << c.detail;
        }
        std::cout << '\n';
    }
    std::cout << "result: " << (rep.passed() ? "accepted" : "rejected") << '\n';
    return rep.passed() ? kOk : kVerifyFailed;
}

struct SelftestArgs {
    bool quick = false;
    std::uint64_t seed = 1;
};

int run_selftest(const SelftestArgs& a) {
    namespace su = sqdisc::suites;
    echo_config("selftest", {{"quick", a.quick ? "true" : "false"}, {"seed", std::to_string(a.seed)}});
    const std::size_t scale = a.quick ? 10 : 1;
    std::vector<su::SuiteResult> results;
    results.push_back(su::exact_identity_suite());
    results.push_back(su::multiplicativity_suite(1000 / scale, a.seed));
    results.push_back(su::reciprocal_criterion_suite(1000 / scale, a.seed + 1));
    results.push_back(su::compose_power_suite(500 / scale, a.seed + 2));
    results.push_back(su::construction_suite(sqdisc::ConstructionCase::negation, 200 / scale, a.seed + 3));
    results.push_back(su::construction_suite(sqdisc::ConstructionCase::multiplicative, 200 / scale, a.seed + 4));
    results.push_back(su::construction_suite(sqdisc::ConstructionCase::pm1, 200 / scale, a.seed + 5));
    results.push_back(su::root_reconstruction_suite(500 / scale, a.seed + 6));
    results.push_back(su::roots_of_unity_suite());
    bool ok = true;
    for (const auto& r : results) {
        ok = ok && r.passed();
        std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << r.trials - r.failures << "/" << r.trials;
        if (r.failures != 0) {
            std::cout << " (first failure: " << r.first_failure << ")";
        }
        std::cout << '\n';
        std::cerr << "# time: " << r.name << " " << r.seconds << " s\n";
    }
    return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Square-discriminant polynomials: exact discriminants, certified approximation, root atlas"};
    app.require_subcommand(1);

    DiscArgs disc;
    auto* c_disc = app.add_subcommand("disc", "Exact discriminant and square verdict");
    c_disc->add_option("--poly", disc.poly, "Coefficients, constant term first")->required();

    ResultantArgs res;
    auto* c_res = app.add_subcommand("resultant", "Exact resultant Res(f, g)");
    c_res->add_option("--f", res.f, "Coefficients of f")->required();
    c_res->add_option("--g", res.g, "Coefficients of g")->required();

    ApproxArgs ap;
    auto* c_ap = app.add_subcommand("approx", "Certified square-discriminant approximation of a root");
    c_ap->add_option("--poly", ap.poly, "Coefficients of f in P(N)")->required();
    c_ap->add_option("--root-index", ap.root_index, "Root index, roots sorted by (|z|, arg)")->required();
    c_ap->add_option("--eps", ap.eps, "Target distance")->required();
    c_ap->add_option("--set", ap.set, "Coefficient set: pm1, zo, zpm1 or a comma list")->capture_default_str();
    c_ap->add_option("--case", ap.kase, "auto, i, ii or iii")->capture_default_str();
    c_ap->add_option("--out", ap.out, "Certificate output path")->required();

    RenderArgs rd;
    auto* c_rd = app.add_subcommand("render", "Rasterize the roots of all polynomials in P(N) up to a degree");
    c_rd->add_option("--set", rd.set, "Coefficient set")->capture_default_str();
    c_rd->add_option("--max-degree", rd.max_degree, "Largest degree")->capture_default_str();
    c_rd->add_option("--out", rd.out, "PPM output path")->required();
    c_rd->add_option("--csv", rd.csv, "Optional CSV root cloud output path");
    c_rd->add_option("--width", rd.width, "Image width")->capture_default_str();
    c_rd->add_option("--height", rd.height, "Image height")->capture_default_str();
    c_rd->add_option("--center", rd.center, "Window center X,Y")->capture_default_str();
    c_rd->add_option("--half-width", rd.half_width, "Half of the window width")->capture_default_str();
    c_rd->add_flag("--square-only", rd.square_only, "Draw only roots of square-discriminant polynomials");
    c_rd->add_flag("--no-overlay", rd.no_overlay, "Do not paint square-discriminant pixels red");
    c_rd->add_option("--threads", rd.threads, "Worker threads, 0 = hardware concurrency")->capture_default_str();

    VerifyArgs vf;
    auto* c_vf = app.add_subcommand("verify", "Re-check every certificate invariant");
    c_vf->add_option("--cert", vf.cert, "Certificate path")->required();

    SelftestArgs st;
    auto* c_st = app.add_subcommand("selftest", "Run the randomized property suites");
    c_st->add_flag("--quick", st.quick, "Run a tenth of the trials");
    c_st->add_option("--seed", st.seed, "Base seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*c_disc) return run_disc(disc);
        if (*c_res) return run_resultant(res);
        if (*c_ap) return run_approx(ap);
        if (*c_rd) return run_render(rd);
        if (*c_vf) return run_verify(vf);
        if (*c_st) return run_selftest(st);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n' << app.help();
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kComputation;
    }
    return kUsage;
}
