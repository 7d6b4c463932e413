#ifndef DUNKL_REPORT_HPP
#define DUNKL_REPORT_HPP

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

namespace dunkl {

struct Check {
    std::string name;
    double residual = 0.0;
};

/// Named residuals from a verification run.
struct Report {
    std::vector<Check> checks;

    void add(std::string name, double residual) { checks.push_back({std::move(name), residual}); }

    /// Keeps the larger residual when the name is already present.
    void add_max(const std::string& name, double residual)
    {
        for (auto& c : checks) {
            if (c.name == name) {
                c.residual = std::max(c.residual, residual);
                return;
            }
        }
        add(name, residual);
    }

    void merge_max(const Report& other)
    {
        for (const auto& c : other.checks) add_max(c.name, c.residual);
    }

    double max_residual() const
    {
        double m = 0.0;
        for (const auto& c : checks) m = std::max(m, c.residual);
        return m;
    }

    bool passed(double tol) const
    {
        return std::all_of(checks.begin(), checks.end(), [tol](const Check& c) { return c.residual < tol; });
    }

    const Check* find(const std::string& name) const
    {
        for (const auto& c : checks) {
            if (c.name == name) return &c;
        }
        return nullptr;
    }

    /// One "name residual" line per check.
    std::string text() const
    {
        std::string out;
        char buf[64];
        for (const auto& c : checks) {
            std::snprintf(buf, sizeof buf, "%.17e", c.residual);
            out += c.name + " " + buf + "\n";
        }
        return out;
    }
};

} // namespace dunkl

#endif
