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

// Flat `key = value` text form of ApproxCertificate. Doubles use 17
// significant digits so that parsing reproduces them bit for bit; complex
// numbers are written "re,im"; polynomials use the comma coefficient format.
// Keys starting with "config." are informational and ignored on parsing.

#include "sqdisc/constructions.hpp"

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sqdisc {

inline constexpr const char* kCertificateFormat = "sqdisc-certificate-1";

class CertificateParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string format_complex(Complex z) { return format_double(z.real()) + "," + format_double(z.imag()); }

inline double parse_double(const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size()) {
        throw CertificateParseError("bad number '" + s + "'");
    }
    return v;
}

inline Complex parse_complex(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) {
        throw CertificateParseError("bad complex number '" + s + "'");
    }
    return {parse_double(s.substr(0, comma)), parse_double(s.substr(comma + 1))};
}

inline const char* format_bool(bool b) { return b ? "true" : "false"; }

inline bool parse_bool(const std::string& s) {
    if (s == "true") return true;
    if (s == "false") return false;
    throw CertificateParseError("bad boolean '" + s + "'");
}

/// Writes the certificate; `config` lines are emitted first as config.<key> entries.
inline void write_certificate(std::ostream& os, const ApproxCertificate& c,
                              const std::vector<std::pair<std::string, std::string>>& config = {}) {
    os << "# square-discriminant approximation certificate\n";
    os << "format = " << kCertificateFormat << '\n';
    for (const auto& [k, v] : config) {
        os << "config." << k << " = " << v << '\n';
    }
    os << "polynomial = " << c.polynomial.to_string() << '\n';
    os << "coeff_set = " << c.set.to_string() << '\n';
    os << "alpha = " << format_complex(c.alpha) << '\n';
    os << "epsilon = " << format_double(c.epsilon) << '\n';
    os << "case = " << case_name(c.case_used) << '\n';
    os << "k = " << c.k << '\n';
    os << "free_coefficient = " << c.free_coefficient << '\n';
    os << "g = " << c.g.to_string() << '\n';
    os << "f_k = " << c.f_k.to_string() << '\n';
    os << "beta = " << format_complex(c.beta) << '\n';
    os << "achieved_error = " << format_double(c.achieved_error) << '\n';
    os << "rouche.R = " << format_double(c.rouche.R) << '\n';
    os << "rouche.m = " << format_double(c.rouche.m) << '\n';
    os << "rouche.B = " << format_double(c.rouche.B) << '\n';
    os << "rouche.r = " << format_double(c.rouche.r) << '\n';
    os << "rouche.samples = " << c.rouche.samples << '\n';
    os << "disc = " << c.disc.to_string() << '\n';
    os << "disc.is_square = " << format_bool(c.disc.is_square) << '\n';
    os << "disc.is_zero = " << format_bool(c.disc.is_zero) << '\n';
    os << "galois.in_alternating = " << format_bool(c.galois.in_alternating) << '\n';
    os << "galois.in_wreath = " << format_bool(c.galois.in_wreath) << '\n';
    os << "inverted = " << format_bool(c.inverted) << '\n';
    os << "original_root = " << format_complex(c.original_root) << '\n';
}

inline std::string certificate_to_string(const ApproxCertificate& c,
                                         const std::vector<std::pair<std::string, std::string>>& config = {}) {
    std::ostringstream os;
    write_certificate(os, c, config);
    return os.str();
}

inline ApproxCertificate read_certificate(std::istream& is) {
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const auto eq = line.find(" = ");
        if (eq == std::string::npos) {
            throw CertificateParseError("line " + std::to_string(lineno) + ": expected 'key = value'");
        }
        std::string key = line.substr(0, eq);
        if (key.rfind("config.", 0) == 0) {
            continue;
        }
        if (!kv.emplace(key, line.substr(eq + 3)).second) {
            throw CertificateParseError("duplicate key '" + key + "'");
        }
    }
    auto take = [&](const std::string& key) -> std::string {
        const auto it = kv.find(key);
        if (it == kv.end()) {
            throw CertificateParseError("missing key '" + key + "'");
        }
        std::string v = std::move(it->second);
        kv.erase(it);
        return v;
    };
    auto take_uint = [&](const std::string& key) {
        const std::string v = take(key);
        char* end = nullptr;
        const unsigned long long x = std::strtoull(v.c_str(), &end, 10);
        if (v.empty() || v.front() == '-' || end != v.c_str() + v.size()) {
            throw CertificateParseError("bad unsigned integer for '" + key + "'");
        }
        return x;
    };

    if (take("format") != kCertificateFormat) {
        throw CertificateParseError("unknown certificate format");
    }
    ApproxCertificate c;
    try {
        c.polynomial = IntPolynomial::parse(take("polynomial"));
        c.set = CoeffSet::parse(take("coeff_set"));
        c.g = IntPolynomial::parse(take("g"));
        c.f_k = IntPolynomial::parse(take("f_k"));
    } catch (const std::invalid_argument& e) {
        throw CertificateParseError(e.what());
    } catch (const std::domain_error& e) {
        throw CertificateParseError(e.what());
    }
    c.alpha = parse_complex(take("alpha"));
    c.epsilon = parse_double(take("epsilon"));
    const auto cs = parse_case_name(take("case"));
    if (!cs) {
        throw CertificateParseError("unknown construction case");
    }
    c.case_used = *cs;
    c.k = static_cast<unsigned>(take_uint("k"));
    {
        const std::string v = take("free_coefficient");
        char* end = nullptr;
        c.free_coefficient = std::strtoll(v.c_str(), &end, 10);
        if (v.empty() || end != v.c_str() + v.size()) {
            throw CertificateParseError("bad free_coefficient");
        }
    }
    c.beta = parse_complex(take("beta"));
    c.achieved_error = parse_double(take("achieved_error"));
    c.rouche.R = parse_double(take("rouche.R"));
    c.rouche.m = parse_double(take("rouche.m"));
    c.rouche.B = parse_double(take("rouche.B"));
    c.rouche.r = parse_double(take("rouche.r"));
    c.rouche.samples = static_cast<std::size_t>(take_uint("rouche.samples"));
    {
        const std::string v = take("disc");
        try {
            c.disc.value = RationalValue(v);
        } catch (const std::invalid_argument&) {
            throw CertificateParseError("bad discriminant '" + v + "'");
        }
        c.disc.value.canonicalize();
    }
    c.disc.is_square = parse_bool(take("disc.is_square"));
    c.disc.is_zero = parse_bool(take("disc.is_zero"));
    c.galois.in_alternating = parse_bool(take("galois.in_alternating"));
    c.galois.in_wreath = parse_bool(take("galois.in_wreath"));
    c.inverted = parse_bool(take("inverted"));
    c.original_root = parse_complex(take("original_root"));
    if (!kv.empty()) {
        throw CertificateParseError("unknown key '" + kv.begin()->first + "'");
    }
    return c;
}

inline ApproxCertificate certificate_from_string(const std::string& text) {
    std::istringstream is(text);
    return read_certificate(is);
}

}  // namespace sqdisc
