#include "hfsas/trace.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "hfsas/errors.hpp"

namespace hfsas {

const std::vector<double>& RawTrace::channel(const std::string& name) const {
    auto it = channels.find(name);
    if (it == channels.end())
        throw ConfigError("trace: missing channel '" + name + "'");
    return it->second;
}

double RawTrace::sample_interval_s() const {
    if (time_s.size() < 2) throw ComputeError("trace: too短 for a sample interval");
    return (time_s.back() - time_s.front()) / static_cast<double>(time_s.size() - 1);
}

RawTrace load_trace_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open trace file: " + path.string());

    RawTrace trace;
    std::string line;
    std::vector<std::string> names;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string tok;
        if (names.empty()) {
            while (std::getline(ss, tok, ',')) names.push_back(tok);
            if (names.empty() || names.front() != "time_s")
                throw IoError(path.string() + ":1: first column must be time_s");
            for (std::size_t c = 1; c < names.size(); ++c) trace.channels[names[c]];
            continue;
        }
        std::vector<double> row;
        while (std::getline(ss, tok, ',')) {
            try {
                std::size_t used = 0;
                row.push_back(std::stod(tok, &used));
                if (used != tok.size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw IoError(path.string() + ":" + std::to_string(lineno) +
                              ": malformed number '" + tok + "'");
            }
        }
        if (row.size() != names.size())
            throw IoError(path.string() + ":" + std::to_string(lineno) + ": expected " +
                          std::to_string(names.size()) + " columns, got " + std::to_string(row.size()));
        trace.time_s.push_back(row[0]);
        for (std::size_t c = 1; c < names.size(); ++c)
            trace.channels[names[c]].push_back(row[c]);
    }

    if (trace.size() < 1000)
        throw ConfigError(path.string() + ": trace holds " + std::to_string(trace.size()) +
                          " samples; at least 1000 required");
    // uniform sampling to 1e-6 relative jitter
    const double dt = trace.sample_interval_s();
    if (!(dt > 0)) throw ConfigError(path.string() + ": time axis must be increasing");
    for (std::size_t i = 1; i < trace.time_s.size(); ++i) {
        const double step = trace.time_s[i] - trace.time_s[i - 1];
        if (std::abs(step - dt) > 1e-6 * std::abs(dt) + 1e-15)
            throw ConfigError(path.string() + ": non-uniform sampling at row " + std::to_string(i + 1));
    }
    return trace;
}

void write_trace_csv(const RawTrace& trace, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write trace file: " + path.string());
    out << "time_s";
    for (const auto& [name, _] : trace.channels) out << ',' << name;
    out << '\n';
    char buf[48];
    for (std::size_t i = 0; i < trace.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.9g", trace.time_s[i]);
        out << buf;
        for (const auto& [_, data] : trace.channels) {
            std::snprintf(buf, sizeof buf, ",%.9g", data[i]);
            out << buf;
        }
        out << '\n';
    }
}

} // namespace hfsas
