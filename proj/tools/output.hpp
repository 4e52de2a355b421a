#pragma once

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace annealgap::cli {

// 17-significant-digit, locale-independent float formatting.
inline std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// RFC-4180-style field quoting.
inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        out += c;
        if (c == '"') out += '"';
    }
    out += '"';
    return out;
}

class CsvWriter {
public:
    explicit CsvWriter(const std::string& path) : path_(path) {}

    void header(const std::vector<std::string>& cols) { row_strings(cols); }

    // A cell is a string, a number, or empty (nullopt).
    using Cell = std::optional<std::string>;
    static Cell num(double x) { return fmt_double(x); }
    static Cell num(int x) { return std::to_string(x); }
    static Cell text(const std::string& s) { return s; }
    static Cell empty() { return std::nullopt; }

    void row(const std::vector<Cell>& cells) {
        std::vector<std::string> out;
        out.reserve(cells.size());
        for (const auto& c : cells) out.push_back(c ? *c : "");
        row_strings(out);
    }

    const std::string& path() const { return path_; }

    void write() const {
        std::ofstream f(path_, std::ios::binary);
        f << body_;
    }

private:
    void row_strings(const std::vector<std::string>& cols) {
        for (std::size_t i = 0; i < cols.size(); ++i) {
            if (i) body_ += ',';
            body_ += csv_escape(cols[i]);
        }
        body_ += '\n';
    }

    std::string path_;
    std::string body_;
};

inline std::uint64_t fnv1a64_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::uint64_t h = 1469598103934665603ull;
    char c;
    while (f.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

// Reproducibility record written next to every run's outputs.
class Manifest {
public:
    Manifest(std::string out_dir, std::string command_line, nlohmann::json resolved_config)
        : out_dir_(std::move(out_dir)),
          command_(std::move(command_line)),
          config_(std::move(resolved_config)),
          start_(std::chrono::steady_clock::now()) {}

    void add_output(const std::string& path) { outputs_.push_back(path); }

    void add_timing(const std::string& stage, double seconds) {
        timings_[stage] = seconds;
    }

    void write(const std::string& version) const {
        nlohmann::json j;
        j["tool"] = "annealgap";
        j["version"] = version;
        j["command"] = command_;
        j["config"] = config_;
        j["determinism"] = "no randomness anywhere; identical invocations give identical bytes";
        j["timings_seconds"] = timings_;
        auto& outs = j["outputs"] = nlohmann::json::array();
        for (const auto& p : outputs_) {
            char digest[32];
            std::snprintf(digest, sizeof digest, "%016llx",
                          static_cast<unsigned long long>(fnv1a64_file(p)));
            outs.push_back({{"file", p}, {"fnv1a64", digest}});
        }
        std::ofstream f(out_dir_ + "/manifest.json", std::ios::binary);
        f << j.dump(2) << '\n';
    }

    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::string out_dir_;
    std::string command_;
    nlohmann::json config_;
    std::vector<std::string> outputs_;
    std::map<std::string, double> timings_;
    std::chrono::steady_clock::time_point start_;
};

inline void write_text(const std::string& path, const std::string& body) {
    std::ofstream f(path, std::ios::binary);
    f << body;
}

}  // namespace annealgap::cli
