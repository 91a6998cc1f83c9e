#pragma once

#include <array>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "latmat/error.hpp"
#include "latmat/matrix.hpp"

namespace latmat::testutil {

// Runs f and reports the latmat error code it threw, if any.
template <class F>
std::optional<Errc> thrown_code(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return std::nullopt;
}

inline RingElem re(RingKind kind, const std::string& text) {
    return RingElem::parse(kind, text);
}

inline FieldElem fe(RingKind kind, const std::string& text) {
    return FieldElem::parse(kind, text);
}

inline Mat mat(RingKind kind, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::vector<FieldElem>> parsed;
    for (const auto& row : rows) {
        std::vector<FieldElem> r;
        for (const auto& cell : row) r.push_back(fe(kind, cell));
        parsed.push_back(std::move(r));
    }
    return Mat::from_rows(kind, parsed);
}

inline const std::array<RingKind, 3>& all_rings() {
    static const std::array<RingKind, 3> rings = {
        RingKind::Integers, RingKind::Rationals, RingKind::QuadraticSqrt2};
    return rings;
}

// ---- spawning the installed CLI (path given by the LATMAT_CLI env var) ----

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string cli_path() {
    const char* p = std::getenv("LATMAT_CLI");
    return p ? std::string(p) : std::string();
}

inline std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void spit(const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

inline std::filesystem::path fresh_temp_dir(const std::string& tag) {
    static int counter = 0;
    auto dir = std::filesystem::temp_directory_path() /
               ("latmat_" + tag + "_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter++));
    std::filesystem::create_directories(dir);
    return dir;
}

inline std::string shell_quote(const std::string& s) {
    std::string q = "'";
    for (char c : s) {
        if (c == '\'') q += "'\\''";
        else q += c;
    }
    return q + "'";
}

inline CliResult run_cli(const std::string& binary, const std::vector<std::string>& args) {
    auto dir = fresh_temp_dir("cli_io");
    auto out_path = dir / "stdout.txt";
    auto err_path = dir / "stderr.txt";
    std::string cmd = shell_quote(binary);
    for (const auto& a : args) cmd += " " + shell_quote(a);
    cmd += " > " + shell_quote(out_path.string()) + " 2> " + shell_quote(err_path.string());
    int status = std::system(cmd.c_str());
    CliResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::filesystem::remove_all(dir);
    return r;
}

inline CliResult run_cli(const std::vector<std::string>& args) {
    return run_cli(cli_path(), args);
}

}  // namespace latmat::testutil
