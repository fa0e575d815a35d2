#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace hfsas {

/// Oscilloscope-style trace: a time column plus named channel columns
/// (time_s, pd1_V, pd2_V, ...). Missing channels are allowed; sampling must
/// be uniform to 1e-6 relative jitter and hold at least 1000 samples.
struct RawTrace {
    std::vector<double> time_s;
    std::map<std::string, std::vector<double>> channels;

    bool has_channel(const std::string& name) const { return channels.count(name) != 0; }
    const std::vector<double>& channel(const std::string& name) const;
    std::size_t size() const { return time_s.size(); }
    double sample_interval_s() const;
};

RawTrace load_trace_csv(const std::filesystem::path& path);
void write_trace_csv(const RawTrace& trace, const std::filesystem::path& path);

} // namespace hfsas
