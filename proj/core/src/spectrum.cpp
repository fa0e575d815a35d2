#include "hfsas/spectrum.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "hfsas/config_file.hpp"
#include "hfsas/errors.hpp"

namespace hfsas {

namespace {
std::filesystem::path meta_path(const std::filesystem::path& csv_path) {
    std::filesystem::path p = csv_path;
    p += ".meta";
    return p;
}
} // namespace

void write_spectrum(const Spectrum& spectrum, const std::filesystem::path& csv_path) {
    std::ofstream out(csv_path);
    if (!out) throw IoError("cannot write spectrum file: " + csv_path.string());
    out << "detuning_MHz,signal\n";
    char buf[80];
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.9g,%.9g\n", spectrum.detuning_mhz[i], spectrum.signal[i]);
        out << buf;
    }
    out.close();
    if (!out) throw IoError("failed writing spectrum file: " + csv_path.string());

    std::ofstream meta(meta_path(csv_path));
    if (!meta) throw IoError("cannot write spectrum metadata: " + meta_path(csv_path).string());
    char num[64];
    meta << "schema_version = " << spectrum.meta.schema_version << "\n";
    std::snprintf(num, sizeof num, "%.17g", spectrum.meta.field_tesla);
    meta << "field_T = " << num << "\n";
    meta << "params_digest = " << digest_hex(spectrum.meta.params_digest) << "\n";
    meta << "constants_version = " << spectrum.meta.constants_version << "\n";
    meta << "constants_digest = " << digest_hex(spectrum.meta.constants_digest) << "\n";
    std::snprintf(num, sizeof num, "%.17g", spectrum.meta.raw_peak_signal);
    meta << "raw_peak_signal = " << num << "\n";
    meta << "normalized = " << (spectrum.meta.normalized ? "true" : "false") << "\n";
    if (!spectrum.meta.created_utc.empty())
        meta << "created_utc = " << spectrum.meta.created_utc << "\n";
}

Spectrum read_spectrum(const std::filesystem::path& csv_path) {
    std::ifstream in(csv_path);
    if (!in) throw IoError("cannot open spectrum file: " + csv_path.string());
    Spectrum s;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (lineno == 1) {
            if (line != "detuning_MHz,signal")
                throw IoError(csv_path.string() + ":1: expected header 'detuning_MHz,signal'");
            continue;
        }
        double d = 0, v = 0;
        if (std::sscanf(line.c_str(), "%lf,%lf", &d, &v) != 2)
            throw IoError(csv_path.string() + ":" + std::to_string(lineno) + ": malformed row");
        s.detuning_mhz.push_back(d);
        s.signal.push_back(v);
    }

    if (std::filesystem::exists(meta_path(csv_path))) {
        ConfigFile cfg = ConfigFile::parse_file(meta_path(csv_path));
        s.meta.schema_version = static_cast<int>(cfg.get_int_or("", "schema_version", 1));
        s.meta.field_tesla = cfg.get_double_or("", "field_T", 0.0);
        s.meta.params_digest = std::stoull(cfg.get_string_or("", "params_digest", "0"), nullptr, 16);
        s.meta.constants_version = cfg.get_string_or("", "constants_version", "");
        s.meta.constants_digest = std::stoull(cfg.get_string_or("", "constants_digest", "0"), nullptr, 16);
        s.meta.raw_peak_signal = cfg.get_double_or("", "raw_peak_signal", 0.0);
        s.meta.normalized = cfg.get_bool_or("", "normalized", true);
        s.meta.created_utc = cfg.get_string_or("", "created_utc", "");
    }
    return s;
}

} // namespace hfsas
