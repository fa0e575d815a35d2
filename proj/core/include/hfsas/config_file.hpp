#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hfsas {

/// FNV-1a 64-bit digest, used for params/constants/file fingerprints.
std::uint64_t fnv1a(std::string_view data);
std::uint64_t fnv1a_file(const std::filesystem::path& path);
std::string digest_hex(std::uint64_t d);

/// Line-oriented `key = value` file with optional `[section]` headers and
/// `#` comments. Physical quantities carry their unit in the key name
/// (e.g. temperature_K). Strict mode: every key must be consumed by the
/// reader; leftover keys are configuration errors.
class ConfigFile {
public:
    static ConfigFile parse_file(const std::filesystem::path& path);
    static ConfigFile parse_string(const std::string& text, const std::string& origin = "<string>");

    bool has(const std::string& section, const std::string& key) const;

    std::string get_string(const std::string& section, const std::string& key);
    double get_double(const std::string& section, const std::string& key);
    long get_int(const std::string& section, const std::string& key);
    bool get_bool(const std::string& section, const std::string& key);
    std::vector<double> get_doubles(const std::string& section, const std::string& key);

    std::string get_string_or(const std::string& section, const std::string& key, const std::string& dflt);
    double get_double_or(const std::string& section, const std::string& key, double dflt);
    long get_int_or(const std::string& section, const std::string& key, long dflt);
    bool get_bool_or(const std::string& section, const std::string& key, bool dflt);

    /// Throws ConfigError naming every key that no reader consumed.
    void reject_unknown() const;
    /// Marks a whole section consumed (for sections owned by another command).
    void ignore_section(const std::string& section);

    const std::string& origin() const { return origin_; }
    std::uint64_t digest() const { return digest_; }

private:
    struct Entry {
        std::string value;
        int line = 0;
        mutable bool consumed = false;
    };
    std::map<std::string, std::map<std::string, Entry>> sections_;
    std::string origin_;
    std::uint64_t digest_ = 0;

    const Entry& lookup(const std::string& section, const std::string& key);
};

} // namespace hfsas
