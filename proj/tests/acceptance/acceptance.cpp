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

// Acceptance runner: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include "cli_runner.hpp"
#include "sqdisc/sqdisc.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace sqdisc;
using sqdisc::testing::read_file;
using sqdisc::testing::run_cli;
using sqdisc::testing::ScratchDir;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

template <class Fn>
void criterion(int number, const std::string& title, Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = fn();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += o.pass ? 0 : 1;
    char t[32];
    std::snprintf(t, sizeof t, "%.1f s", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " [" << o.detail << "; " << t
              << "]" << std::endl;
}

std::string summary(const suites::SuiteResult& r) {
    std::ostringstream os;
    os << r.name << " " << (r.trials - r.failures) << "/" << r.trials;
    if (r.failures != 0) {
        os << ", first failure " << r.first_failure;
    }
    return os.str();
}

std::string key_value(const std::string& text, const std::string& key) {
    const auto at = text.find(key + " = ");
    if (at == std::string::npos) {
        return {};
    }
    const auto begin = at + key.size() + 3;
    return text.substr(begin, text.find('\n', begin) - begin);
}

struct Image {
    int width = 0;
    int height = 0;
    std::vector<unsigned char> rgb;

    bool red(int x, int y) const {
        const auto* p = &rgb[3 * (static_cast<std::size_t>(y) * width + x)];
        return p[0] == 255 && p[1] == 0 && p[2] == 0;
    }
    bool grey(int x, int y) const {
        const auto* p = &rgb[3 * (static_cast<std::size_t>(y) * width + x)];
        return p[0] == p[1] && p[1] == p[2] && p[0] != 255;
    }
};

Image read_ppm(const std::string& path) {
    const std::string bytes = read_file(path);
    std::istringstream is(bytes);
    std::string magic;
    int maxval = 0;
    Image img;
    is >> magic >> img.width >> img.height >> maxval;
    if (magic != "P6" || maxval != 255) {
        throw std::runtime_error("not a P6 image: " + path);
    }
    is.get();
    const auto offset = static_cast<std::size_t>(is.tellg());
    img.rgb.assign(bytes.begin() + static_cast<std::ptrdiff_t>(offset), bytes.end());
    if (img.rgb.size() != static_cast<std::size_t>(img.width) * img.height * 3) {
        throw std::runtime_error("truncated image: " + path);
    }
    return img;
}

// Mean distance from grey pixels to the nearest red pixel (exact, two-pass
// separable squared Euclidean distance transform).
double mean_grey_to_red(const Image& img) {
    const int w = img.width;
    const int h = img.height;
    const double inf = 1e18;
    std::vector<double> col(static_cast<std::size_t>(w) * h, inf);
    for (int x = 0; x < w; ++x) {
        double last = -inf;
        for (int y = 0; y < h; ++y) {
            if (img.red(x, y)) last = y;
            col[static_cast<std::size_t>(y) * w + x] = last > -inf ? (y - last) * (y - last) : inf;
        }
        last = inf;
        for (int y = h - 1; y >= 0; --y) {
            if (img.red(x, y)) last = y;
            if (last < inf) {
                auto& c = col[static_cast<std::size_t>(y) * w + x];
                c = std::min(c, (last - y) * (last - y));
            }
        }
    }
    double sum = 0.0;
    std::size_t count = 0;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (!img.grey(x, y)) {
                continue;
            }
            double best = inf;
            for (int x2 = 0; x2 < w; ++x2) {
                const double c = col[static_cast<std::size_t>(y) * w + x2];
                if (c < inf) {
                    best = std::min(best, c + static_cast<double>(x - x2) * (x - x2));
                }
            }
            sum += std::sqrt(best);
            ++count;
        }
    }
    return count == 0 ? std::numeric_limits<double>::quiet_NaN() : sum / static_cast<double>(count);
}

// Number of 5-degree sectors containing a red pixel whose center lies within 2 pixels of the unit circle.
int occupied_sectors(const Image& img, double half_width) {
    std::array<bool, 72> hit{};
    const double scale = img.width / (2.0 * half_width);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            if (!img.red(x, y)) {
                continue;
            }
            const double dx = x + 0.5 - img.width / 2.0;
            const double dy = img.height / 2.0 - (y + 0.5);
            if (std::abs(std::hypot(dx, dy) - scale) > 2.0) {
                continue;
            }
            double angle = std::atan2(dy, dx) * 180.0 / std::numbers::pi;
            if (angle < 0) angle += 360.0;
            hit[std::min(71, static_cast<int>(angle / 5.0))] = true;
        }
    }
    int n = 0;
    for (bool b : hit) n += b;
    return n;
}

}  // namespace

int main() {
    std::cout.setf(std::ios::unitbuf);
    ScratchDir dir("acceptance");

    criterion(1, "exact identities: disc(X^{n+1}-1) closed form n<=30, disc(p_n) square n=1 mod 4, n<=101", [] {
        const auto r = suites::exact_identity_suite(30, 101);
        return Outcome{r.passed() && r.seconds < 30.0, summary(r)};
    });

    criterion(2, "disc(fg) = disc(f) disc(g) Res(f,g)^2 on 1000 random pairs", [] {
        const auto r = suites::multiplicativity_suite(1000, 2026);
        return Outcome{r.passed() && r.trials == 1000, summary(r)};
    });

    criterion(3, "reciprocal criterion (1000) and f(X) f(X^k) square (500)", [] {
        const auto a = suites::reciprocal_criterion_suite(1000, 2027);
        const auto b = suites::compose_power_suite(500, 2028);
        return Outcome{a.passed() && b.passed() && a.trials == 1000 && b.trials == 500,
                       summary(a) + "; " + summary(b)};
    });

    criterion(4, "construction invariants, 200 instances per case", [] {
        std::string detail;
        bool ok = true;
        double secs = 0.0;
        std::uint64_t seed = 2029;
        for (auto c : {ConstructionCase::negation, ConstructionCase::multiplicative, ConstructionCase::pm1}) {
            const auto r = suites::construction_suite(c, 200, seed++);
            ok = ok && r.passed() && r.trials == 200;
            secs += r.seconds;
            detail += (detail.empty() ? "" : "; ") + summary(r);
        }
        return Outcome{ok && secs < 300.0, detail};
    });

    criterion(5, "end-to-end approx + verify: 25 roots of random {+-1} polynomials, eps 1e-2 and 1e-3", [&] {
        const auto set = CoeffSet::parse("pm1");
        suites::Rng rng(2030);
        struct Target {
            IntPolynomial f;
            std::size_t index;
        };
        std::vector<Target> targets;
        while (targets.size() < 25) {
            const auto f = suites::random_member(rng, set, static_cast<int>(suites::uniform(rng, 2, 10)));
            const auto roots = sorted_by_modulus_then_arg(find_all_roots(f).roots);
            std::vector<std::size_t> inside;
            for (std::size_t i = 0; i < roots.size(); ++i) {
                if (std::abs(roots[i]) < 0.95) inside.push_back(i);
            }
            if (!inside.empty()) {
                targets.push_back({f, inside[static_cast<std::size_t>(suites::uniform(rng, 0, static_cast<long>(inside.size()) - 1))]});
            }
        }
        int good = 0;
        int total = 0;
        std::string first_bad;
        std::size_t max_degree = 0;
        for (const auto& t : targets) {
            for (const char* eps : {"1e-2", "1e-3"}) {
                ++total;
                const std::string cert = dir.path("cert_" + std::to_string(total) + ".txt");
                const auto a = run_cli("approx --poly " + t.f.to_string() + " --root-index " + std::to_string(t.index) +
                                       " --eps " + eps + " --set pm1 --out " + cert);
                bool ok = a.exit_code == 0;
                if (ok) {
                    const std::string text = read_file(cert);
                    const auto c = certificate_from_string(text);
                    ok = c.achieved_error < std::stod(eps) && discriminant(c.f_k).is_square &&
                         run_cli("verify --cert " + cert).exit_code == 0;
                    max_degree = std::max(max_degree, static_cast<std::size_t>(c.f_k.degree()));
                }
                good += ok;
                if (!ok && first_bad.empty()) {
                    first_bad = t.f.to_string() + " #" + std::to_string(t.index) + " eps " + eps + ": " + a.err;
                }
            }
        }
        std::string detail = std::to_string(good) + "/" + std::to_string(total) +
                             " certificates verified, largest f_k degree " + std::to_string(max_degree);
        if (!first_bad.empty()) detail += ", first failure " + first_bad;
        return Outcome{good == total && total == 50, detail};
    });

    criterion(6, "atlas at degrees 12 and 16: unit circle covered by square pixels, grey-to-red distance shrinks", [&] {
        const std::string common = "render --set pm1 --width 512 --height 512 --center 0,0 --half-width 2";
        std::array<double, 2> mean{};
        std::array<int, 2> sectors{};
        bool zero_skips = true;
        int i = 0;
        for (int degree : {12, 16}) {
            const std::string out = dir.path("atlas_" + std::to_string(degree) + ".ppm");
            const auto r = run_cli(common + " --max-degree " + std::to_string(degree) + " --out " + out);
            if (r.exit_code != 0) {
                return Outcome{false, "render failed: " + r.err};
            }
            zero_skips = zero_skips && key_value(r.out, "skipped") == "0";
            const Image img = read_ppm(out);
            mean[i] = mean_grey_to_red(img);
            sectors[i] = occupied_sectors(img, 2.0);
            ++i;
        }
        char buf[200];
        std::snprintf(buf, sizeof buf, "sectors %d/72 (deg 12), %d/72 (deg 16); mean distance %.4f (deg 12), %.4f (deg 16); skips %s",
                      sectors[0], sectors[1], mean[0], mean[1], zero_skips ? "none" : "present");
        return Outcome{sectors[1] == 72 && mean[1] <= mean[0] && zero_skips, buf};
    });

    criterion(7, "determinism: repeated render/approx byte-identical, parallel raster equals serial", [&] {
        const std::string render = "render --set pm1 --max-degree 12 --width 256 --height 256 --center 0,0 --half-width 2";
        const auto s = run_cli(render + " --threads 1 --out " + dir.path("s.ppm") + " --csv " + dir.path("s.csv"));
        const auto p = run_cli(render + " --threads 8 --out " + dir.path("p.ppm") + " --csv " + dir.path("p.csv"));
        const auto q = run_cli(render + " --threads 8 --out " + dir.path("q.ppm") + " --csv " + dir.path("q.csv"));
        bool ok = s.exit_code == 0 && p.exit_code == 0 && q.exit_code == 0 && s.out == p.out && p.out == q.out;
        ok = ok && read_file(dir.path("s.ppm")) == read_file(dir.path("p.ppm")) &&
             read_file(dir.path("p.ppm")) == read_file(dir.path("q.ppm")) &&
             read_file(dir.path("s.csv")) == read_file(dir.path("p.csv")) &&
             read_file(dir.path("p.csv")) == read_file(dir.path("q.csv"));

        RenderConfig cfg;
        cfg.set = CoeffSet::parse("zpm1");
        cfg.max_degree = 8;
        const Raster serial = rasterize(cfg, {1, false});
        const Raster parallel = rasterize(cfg, {8, false});
        const bool raster_equal = serial.all == parallel.all && serial.square == parallel.square;

        const std::string approx = "approx --poly 1,-1,1,1,-1,-1,1,1,-1 --root-index 0 --eps 1e-3 --set pm1 --out " +
                                   dir.path("det.txt");
        const auto a = run_cli(approx);
        const std::string first = read_file(dir.path("det.txt"));
        const auto b = run_cli(approx);
        const bool approx_equal = a.exit_code == 0 && a.out == b.out && first == read_file(dir.path("det.txt"));
        return Outcome{ok && raster_equal && approx_equal,
                       std::string("render ") + (ok ? "identical" : "differs") + ", in-process raster " +
                           (raster_equal ? "identical" : "differs") + ", approx " +
                           (approx_equal ? "identical" : "differs")};
    });

    criterion(8, "root finder: symmetric functions (deg <= 32, rel 1e-6), p_n roots of unity (1e-7, n <= 101)", [] {
        const auto a = suites::root_reconstruction_suite(1000, 2031, 32);
        const auto b = suites::roots_of_unity_suite(101);
        return Outcome{a.passed() && b.passed(), summary(a) + "; " + summary(b)};
    });

    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAILED") << std::endl;
    return failures == 0 ? 0 : 1;
}
