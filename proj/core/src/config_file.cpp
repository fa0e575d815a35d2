#include "hfsas/config_file.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "hfsas/errors.hpp"

namespace hfsas {

std::uint64_t fnv1a(std::string_view data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::uint64_t fnv1a_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file for digest: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return fnv1a(ss.str());
}

std::string digest_hex(std::uint64_t d) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(d));
    return buf;
}

namespace {

std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

} // namespace

ConfigFile ConfigFile::parse_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_string(ss.str(), path.string());
}

ConfigFile ConfigFile::parse_string(const std::string& text, const std::string& origin) {
    ConfigFile cfg;
    cfg.origin_ = origin;
    cfg.digest_ = fnv1a(text);

    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::string s = trim(line);
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']')
                throw ConfigError(origin + ":" + std::to_string(lineno) + ": malformed section header");
            section = trim(std::string_view(s).substr(1, s.size() - 2));
            cfg.sections_[section];  // sections may be empty
            continue;
        }
        auto eq = s.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(std::string_view(s).substr(0, eq));
        std::string value = trim(std::string_view(s).substr(eq + 1));
        if (key.empty())
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key");
        auto [it, inserted] = cfg.sections_[section].emplace(key, Entry{value, lineno, false});
        if (!inserted)
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": duplicate key '" + key + "'");
    }
    return cfg;
}

bool ConfigFile::has(const std::string& section, const std::string& key) const {
    auto s = sections_.find(section);
    return s != sections_.end() && s->second.count(key) != 0;
}

const ConfigFile::Entry& ConfigFile::lookup(const std::string& section, const std::string& key) {
    auto s = sections_.find(section);
    if (s == sections_.end() || !s->second.count(key)) {
        std::string where = section.empty() ? "top level" : "section [" + section + "]";
        throw ConfigError(origin_ + ": missing key '" + key + "' in " + where);
    }
    const Entry& e = s->second.at(key);
    e.consumed = true;
    return e;
}

std::string ConfigFile::get_string(const std::string& section, const std::string& key) {
    return lookup(section, key).value;
}

double ConfigFile::get_double(const std::string& section, const std::string& key) {
    const Entry& e = lookup(section, key);
    try {
        size_t used = 0;
        double v = std::stod(e.value, &used);
        if (used != e.value.size()) throw std::invalid_argument("trailing junk");
        return v;
    } catch (const std::exception&) {
        throw ConfigError(origin_ + ":" + std::to_string(e.line) + ": '" + key +
                          "' is not a number: " + e.value);
    }
}

long ConfigFile::get_int(const std::string& section, const std::string& key) {
    const Entry& e = lookup(section, key);
    try {
        size_t used = 0;
        long v = std::stol(e.value, &used);
        if (used != e.value.size()) throw std::invalid_argument("trailing junk");
        return v;
    } catch (const std::exception&) {
        throw ConfigError(origin_ + ":" + std::to_string(e.line) + ": '" + key +
                          "' is not an integer: " + e.value);
    }
}

bool ConfigFile::get_bool(const std::string& section, const std::string& key) {
    const Entry& e = lookup(section, key);
    if (e.value == "true" || e.value == "1") return true;
    if (e.value == "false" || e.value == "0") return false;
    throw ConfigError(origin_ + ":" + std::to_string(e.line) + ": '" + key +
                      "' is not a boolean: " + e.value);
}

std::vector<double> ConfigFile::get_doubles(const std::string& section, const std::string& key) {
    const Entry& e = lookup(section, key);
    std::istringstream ss(e.value);
    std::vector<double> out;
    std::string tok;
    while (ss >> tok) {
        try {
            size_t used = 0;
            out.push_back(std::stod(tok, &used));
            if (used != tok.size()) throw std::invalid_argument("trailing junk");
        } catch (const std::exception&) {
            throw ConfigError(origin_ + ":" + std::to_string(e.line) + ": '" + key +
                              "' contains a non-number: " + tok);
        }
    }
    return out;
}

std::string ConfigFile::get_string_or(const std::string& section, const std::string& key,
                                      const std::string& dflt) {
    return has(section, key) ? get_string(section, key) : dflt;
}
double ConfigFile::get_double_or(const std::string& section, const std::string& key, double dflt) {
    return has(section, key) ? get_double(section, key) : dflt;
}
long ConfigFile::get_int_or(const std::string& section, const std::string& key, long dflt) {
    return has(section, key) ? get_int(section, key) : dflt;
}
bool ConfigFile::get_bool_or(const std::string& section, const std::string& key, bool dflt) {
    return has(section, key) ? get_bool(section, key) : dflt;
}

void ConfigFile::reject_unknown() const {
    std::string bad;
    for (const auto& [section, entries] : sections_)
        for (const auto& [key, e] : entries)
            if (!e.consumed) {
                if (!bad.empty()) bad += ", ";
                bad += (section.empty() ? key : section + "." + key);
            }
    if (!bad.empty())
        throw ConfigError(origin_ + ": unknown key(s): " + bad);
}

void ConfigFile::ignore_section(const std::string& section) {
    auto s = sections_.find(section);
    if (s == sections_.end()) return;
    for (auto& [key, e] : s->second) e.consumed = true;
}

} // namespace hfsas
