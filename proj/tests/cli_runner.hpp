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

// Helpers for driving the sqdisc executable from tests.

#include "sqdisc/atlas.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <stdexcept>
#include <string>

#ifndef SQDISC_CLI_PATH
#error "SQDISC_CLI_PATH must name the sqdisc executable"
#endif

namespace sqdisc::testing {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string read_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) {
        throw std::runtime_error("cannot read '" + path + "'");
    }
    return {std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
}

class ScratchDir {
public:
    explicit ScratchDir(const std::string& name)
        : dir_(std::filesystem::temp_directory_path() / ("sqdisc_" + name + "_" + std::to_string(::getpid()))) {
        std::filesystem::remove_all(dir_);
        std::filesystem::create_directories(dir_);
    }
    ~ScratchDir() {
        std::error_code ec;
        std::filesystem::remove_all(dir_, ec);
    }
    ScratchDir(const ScratchDir&) = delete;
    ScratchDir& operator=(const ScratchDir&) = delete;

    std::string path(const std::string& file) const { return (dir_ / file).string(); }

private:
    std::filesystem::path dir_;
};

/// Runs `sqdisc <args>` through the shell, capturing stdout and stderr.
inline CliResult run_cli(const std::string& args) {
    static int counter = 0;
    const auto err_path = std::filesystem::temp_directory_path() /
                          ("sqdisc_stderr_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    const std::string cmd = std::string("'") + SQDISC_CLI_PATH + "' " + args + " 2>'" + err_path.string() + "'";
    CliResult r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        throw std::runtime_error("popen failed");
    }
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) {
        r.out.append(buf, n);
    }
    const int status = ::pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.err = read_file(err_path.string());
    std::filesystem::remove(err_path);
    return r;
}

}  // namespace sqdisc::testing
