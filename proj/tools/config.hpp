#ifndef DUNKL_TOOLS_CONFIG_HPP
#define DUNKL_TOOLS_CONFIG_HPP

#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "dunkl/core.hpp"

namespace dunkl::cli {

struct RunConfig {
    double mu_x = 0.3;
    double mu_y = 0.5;
    int level_max = 8;
    int quadrature_nodes = 64;
    double tolerance = 1e-10;
    std::string output_format = "csv";
    std::string output_path; // empty: stdout

    MuParams mu() const { return MuParams(mu_x, mu_y); }

    void validate() const
    {
        if (!(mu_x > -0.5) || !(mu_y > -0.5)) {
            throw UsageError("mu_x and mu_y must exceed -1/2 (got " + std::to_string(mu_x) + ", " +
                             std::to_string(mu_y) + ")");
        }
        if (level_max < 0) throw UsageError("level_max must be >= 0");
        if (quadrature_nodes < 8) throw UsageError("nodes must be >= 8");
        if (!(tolerance > 0.0)) throw UsageError("tolerance must be positive");
        if (output_format != "csv" && output_format != "json") {
            throw UsageError("format must be csv or json, got '" + output_format + "'");
        }
    }
};

inline std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

/// Reads `key = value` lines; '#' starts a comment. Dashes in keys are
/// treated as underscores.
inline std::map<std::string, std::string> read_key_values(std::istream& in, const std::string& source)
{
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw UsageError(source + ":" + std::to_string(lineno) + ": expected 'key = value'");
        }
        std::string key = trim(line.substr(0, eq));
        for (char& c : key) {
            if (c == '-') c = '_';
        }
        kv[key] = trim(line.substr(eq + 1));
    }
    return kv;
}

namespace detail {

inline double to_double(const std::string& key, const std::string& v)
{
    try {
        std::size_t used = 0;
        const double d = std::stod(v, &used);
        if (used == v.size()) return d;
    } catch (const std::exception&) {
    }
    throw UsageError("config key '" + key + "': not a number: '" + v + "'");
}

inline int to_int(const std::string& key, const std::string& v)
{
    try {
        std::size_t used = 0;
        const int i = std::stoi(v, &used);
        if (used == v.size()) return i;
    } catch (const std::exception&) {
    }
    throw UsageError("config key '" + key + "': not an integer: '" + v + "'");
}

} // namespace detail

inline void apply_key_values(RunConfig& cfg, const std::map<std::string, std::string>& kv)
{
    for (const auto& [key, v] : kv) {
        if (key == "mu_x") cfg.mu_x = detail::to_double(key, v);
        else if (key == "mu_y") cfg.mu_y = detail::to_double(key, v);
        else if (key == "level_max") cfg.level_max = detail::to_int(key, v);
        else if (key == "nodes" || key == "quadrature_nodes") cfg.quadrature_nodes = detail::to_int(key, v);
        else if (key == "tol" || key == "tolerance") cfg.tolerance = detail::to_double(key, v);
        else if (key == "format" || key == "output_format") cfg.output_format = v;
        else if (key == "out" || key == "output_path") cfg.output_path = v;
        else throw UsageError("unknown config key '" + key + "'");
    }
}

inline void load_config_file(RunConfig& cfg, const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file '" + path + "'");
    apply_key_values(cfg, read_key_values(in, path));
}

} // namespace dunkl::cli

#endif
