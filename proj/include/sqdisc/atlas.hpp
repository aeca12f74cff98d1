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

#pragma once

// Enumeration of P(N) up to a degree bound, the tagged root cloud, and its
// rasterization into an all-roots channel and a square-discriminant channel.

#include "sqdisc/coeff_set.hpp"
#include "sqdisc/discriminant.hpp"
#include "sqdisc/polynomial.hpp"
#include "sqdisc/roots.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace sqdisc {

struct RenderConfig {
    CoeffSet set = CoeffSet::classify({-1, 1});
    int max_degree = 1;
    Complex center{0.0, 0.0};
    double half_width = 2.0;
    int width = 512;
    int height = 512;
    bool square_only = false;
    bool overlay = true;

    void validate() const {
        if (max_degree < 1) {
            throw std::domain_error("render: max_degree must be at least 1");
        }
        if (width <= 0 || height <= 0) {
            throw std::domain_error("render: resolution must be positive");
        }
        if (!(half_width > 0.0)) {
            throw std::domain_error("render: half_width must be positive");
        }
    }
};

/**
 * Index-addressable enumeration of the polynomials of one degree in P(N).
 *
 * Coefficient choices: the leading coefficient ranges over nonzero elements
 * (positive ones only when N is closed under negation, since f and -f share
 * roots and discriminant), the constant term over nonzero elements, and the
 * rest over all of N. Order is lexicographic in (a_d, a_{d-1}, ..., a_0) with
 * elements ascending.
 */
class DegreeEnumeration {
public:
    DegreeEnumeration(const CoeffSet& set, int degree) : degree_(degree) {
        if (degree < 1) {
            throw std::domain_error("DegreeEnumeration: degree must be at least 1");
        }
        for (std::int64_t e : set.elements()) {
            if (e != 0) {
                constant_.push_back(e);
                if (!set.negation_closed() || e > 0) {
                    leading_.push_back(e);
                }
            }
            middle_.push_back(e);
        }
        per_leading_ = constant_.size();
        for (int i = 1; i < degree; ++i) {
            if (per_leading_ > UINT64_MAX / middle_.size()) {
                throw std::length_error("DegreeEnumeration: too many polynomials");
            }
            per_leading_ *= middle_.size();
        }
    }

    int degree() const { return degree_; }
    std::size_t leading_choices() const { return leading_.size(); }
    std::uint64_t per_leading() const { return per_leading_; }
    std::uint64_t count() const { return per_leading_ * leading_.size(); }

    IntPolynomial at(std::uint64_t index) const {
        std::vector<BigInt> c(static_cast<std::size_t>(degree_) + 1);
        c[0] = static_cast<long>(constant_[index % constant_.size()]);
        index /= constant_.size();
        for (int i = 1; i < degree_; ++i) {
            c[static_cast<std::size_t>(i)] = static_cast<long>(middle_[index % middle_.size()]);
            index /= middle_.size();
        }
        c[static_cast<std::size_t>(degree_)] = static_cast<long>(leading_[index]);
        return IntPolynomial(std::move(c));
    }

private:
    int degree_;
    std::vector<std::int64_t> leading_;
    std::vector<std::int64_t> constant_;
    std::vector<std::int64_t> middle_;
    std::uint64_t per_leading_ = 0;
};

/// Calls fn(f) for every polynomial of degree 1..max_degree in enumeration order.
template <class Fn>
void for_each_polynomial(const CoeffSet& set, int max_degree, Fn&& fn) {
    for (int d = 1; d <= max_degree; ++d) {
        const DegreeEnumeration en(set, d);
        for (std::uint64_t i = 0; i < en.count(); ++i) {
            fn(en.at(i));
        }
    }
}

inline std::vector<IntPolynomial> enumerate_polynomials(const CoeffSet& set, int max_degree) {
    std::vector<IntPolynomial> out;
    for_each_polynomial(set, max_degree, [&](IntPolynomial f) { out.push_back(std::move(f)); });
    return out;
}

struct RootRecord {
    Complex root;
    int degree = 0;
    bool disc_is_square = false;
    bool disc_is_zero = false;
};

/// A contiguous run of one degree's enumeration inside a single leading-coefficient block.
struct WorkBlock {
    int degree = 0;
    std::uint64_t begin = 0;
    std::uint64_t end = 0;
};

inline constexpr std::uint64_t kBlockSize = 512;

/// Deterministic partition of the enumeration, independent of the worker count.
inline std::vector<WorkBlock> work_blocks(const RenderConfig& config) {
    std::vector<WorkBlock> out;
    for (int d = 1; d <= config.max_degree; ++d) {
        const DegreeEnumeration en(config.set, d);
        for (std::size_t lead = 0; lead < en.leading_choices(); ++lead) {
            const std::uint64_t lo = lead * en.per_leading();
            const std::uint64_t hi = lo + en.per_leading();
            for (std::uint64_t b = lo; b < hi; b += kBlockSize) {
                out.push_back({d, b, std::min(hi, b + kBlockSize)});
            }
        }
    }
    return out;
}

struct CloudChunk {
    std::vector<RootRecord> records;
    std::uint64_t polynomials = 0;
    std::uint64_t skipped = 0;
};

/// Roots of every polynomial in the block, tagged with its exact discriminant class.
inline CloudChunk build_root_cloud(const RenderConfig& config, const WorkBlock& block) {
    CloudChunk out;
    const DegreeEnumeration en(config.set, block.degree);
    for (std::uint64_t i = block.begin; i < block.end; ++i) {
        const IntPolynomial f = en.at(i);
        ++out.polynomials;
        RootSet roots;
        try {
            roots = find_all_roots(f);
        } catch (const RootFindingError&) {
            ++out.skipped;
            continue;
        }
        const DiscriminantValue disc = discriminant(f);
        for (const auto& z : roots.roots) {
            out.records.push_back({z, f.degree(), disc.is_square, disc.is_zero});
        }
    }
    return out;
}

/// The whole tagged root cloud in enumeration order.
inline CloudChunk build_root_cloud(const RenderConfig& config) {
    config.validate();
    CloudChunk all;
    for (const auto& b : work_blocks(config)) {
        CloudChunk c = build_root_cloud(config, b);
        all.records.insert(all.records.end(), c.records.begin(), c.records.end());
        all.polynomials += c.polynomials;
        all.skipped += c.skipped;
    }
    return all;
}

struct Pixel {
    int x = 0;
    int y = 0;
};

/// x = floor((Re z - cx + w)/(2w) W), y = floor((cy + w - Im z)/(2w) H); nullopt outside the window.
inline std::optional<Pixel> pixel_of(const RenderConfig& config, Complex z) {
    const double w = config.half_width;
    const double fx = std::floor((z.real() - config.center.real() + w) / (2.0 * w) * config.width);
    const double fy = std::floor((config.center.imag() + w - z.imag()) / (2.0 * w) * config.height);
    if (!(fx >= 0.0 && fx < config.width && fy >= 0.0 && fy < config.height)) {
        return std::nullopt;
    }
    return Pixel{static_cast<int>(fx), static_cast<int>(fy)};
}

struct Raster {
    RenderConfig config;
    std::vector<std::uint64_t> all;     // every root
    std::vector<std::uint64_t> square;  // roots of square-discriminant polynomials
    std::uint64_t polynomials = 0;
    std::uint64_t roots = 0;
    std::uint64_t skipped = 0;
    std::vector<RootRecord> cloud;  // kept only on request

    explicit Raster(RenderConfig c)
        : config(std::move(c)),
          all(static_cast<std::size_t>(config.width) * static_cast<std::size_t>(config.height), 0),
          square(all.size(), 0) {}

    std::size_t index(Pixel p) const { return static_cast<std::size_t>(p.y) * config.width + static_cast<std::size_t>(p.x); }

    void accumulate(const RootRecord& r) {
        ++roots;
        if (const auto p = pixel_of(config, r.root)) {
            ++all[index(*p)];
            if (r.disc_is_square) {
                ++square[index(*p)];
            }
        }
    }

    /// Adds counts; the cloud is not merged.
    Raster& operator+=(const Raster& other) {
        for (std::size_t i = 0; i < all.size(); ++i) {
            all[i] += other.all[i];
            square[i] += other.square[i];
        }
        polynomials += other.polynomials;
        roots += other.roots;
        skipped += other.skipped;
        return *this;
    }
};

struct RasterOptions {
    unsigned threads = 0;  // 0 = hardware concurrency
    bool keep_cloud = false;
};

/// Rasterizes the given blocks. Workers pull blocks from a shared counter and
/// keep private grids; grids are summed and chunks concatenated in block order.
inline Raster rasterize_blocks(const RenderConfig& config, const std::vector<WorkBlock>& blocks, RasterOptions opt = {}) {
    config.validate();
    unsigned threads = opt.threads != 0 ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, blocks.size())));

    std::vector<Raster> partial(threads, Raster(config));
    std::vector<std::vector<RootRecord>> chunks(opt.keep_cloud ? blocks.size() : 0);
    std::atomic<std::size_t> next{0};
    auto work = [&](unsigned t) {
        Raster& mine = partial[t];
        for (std::size_t b = next++; b < blocks.size(); b = next++) {
            CloudChunk c = build_root_cloud(config, blocks[b]);
            for (const auto& r : c.records) {
                mine.accumulate(r);
            }
            mine.polynomials += c.polynomials;
            mine.skipped += c.skipped;
            if (opt.keep_cloud) {
                chunks[b] = std::move(c.records);
            }
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(work, t);
        }
    }

    Raster out(config);
    for (const auto& p : partial) {
        out += p;
    }
    for (auto& c : chunks) {
        out.cloud.insert(out.cloud.end(), c.begin(), c.end());
    }
    return out;
}

inline Raster rasterize(const RenderConfig& config, RasterOptions opt = {}) {
    return rasterize_blocks(config, work_blocks(config), opt);
}

/// 255 (1 - log(1+c)/log(1+c_max)); zero counts stay white.
inline std::uint8_t grey_level(std::uint64_t c, std::uint64_t c_max) {
    if (c == 0 || c_max == 0) {
        return 255;
    }
    const double t = std::log1p(static_cast<double>(c)) / std::log1p(static_cast<double>(c_max));
    return static_cast<std::uint8_t>(std::lround(255.0 * (1.0 - t)));
}

/// RGB bytes of the rendered image, row-major from the top-left pixel.
inline std::vector<std::uint8_t> render_rgb(const Raster& raster) {
    const auto& cfg = raster.config;
    const auto& base = cfg.square_only ? raster.square : raster.all;
    const std::uint64_t c_max = base.empty() ? 0 : *std::max_element(base.begin(), base.end());
    std::vector<std::uint8_t> rgb(base.size() * 3);
    for (std::size_t i = 0; i < base.size(); ++i) {
        std::uint8_t r = grey_level(base[i], c_max);
        std::uint8_t g = r;
        std::uint8_t b = r;
        if (!cfg.square_only && cfg.overlay && raster.square[i] > 0) {
            r = 255;
            g = 0;
            b = 0;
        }
        rgb[3 * i] = r;
        rgb[3 * i + 1] = g;
        rgb[3 * i + 2] = b;
    }
    return rgb;
}

inline std::string ppm_bytes(const Raster& raster) {
    std::string out = "P6\n" + std::to_string(raster.config.width) + " " + std::to_string(raster.config.height) + "\n255\n";
    const auto rgb = render_rgb(raster);
    out.append(reinterpret_cast<const char*>(rgb.data()), rgb.size());
    return out;
}

inline std::string csv_bytes(const std::vector<RootRecord>& cloud) {
    std::string out = "re,im,degree,disc_square,disc_zero\n";
    char buf[96];
    for (const auto& r : cloud) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%d,%d,%d\n", r.root.real(), r.root.imag(), r.degree,
                      r.disc_is_square ? 1 : 0, r.disc_is_zero ? 1 : 0);
        out += buf;
    }
    return out;
}

namespace detail {

inline void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    os.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    os.close();
    if (!os) {
        throw std::runtime_error("failed writing '" + path + "'");
    }
}

}  // namespace detail

/// Writes the P6 image and, when out_csv is non-empty, the root cloud as CSV.
inline void emit_artifacts(const Raster& raster, const std::string& out_image, const std::string& out_csv) {
    detail::write_file(out_image, ppm_bytes(raster));
    if (!out_csv.empty()) {
        if (raster.cloud.size() != raster.roots) {
            throw std::logic_error("emit_artifacts: CSV requested but the root cloud was not kept");
        }
        detail::write_file(out_csv, csv_bytes(raster.cloud));
    }
}

}  // namespace sqdisc
