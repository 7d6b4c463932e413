#ifndef DUNKL_IO_HPP
#define DUNKL_IO_HPP

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "dunkl/overlaps.hpp"
#include "dunkl/report.hpp"

namespace dunkl::io {

/// Scientific notation, 17 significant digits.
inline std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v + 0.0);
    return buf;
}

/// Quotes a CSV field when it contains a separator, quote or newline.
inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string csv_row(const std::vector<std::string>& fields)
{
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += csv_field(fields[i]);
    }
    return out + "\n";
}

inline const char* overlap_csv_header = "provenance,row,column,real,imag,modulus\n";

/// Rows of an overlap table, one per entry.
inline std::string overlap_csv_rows(const OverlapTable& t)
{
    std::string out;
    for (Eigen::Index r = 0; r < t.matrix.rows(); ++r) {
        for (Eigen::Index c = 0; c < t.matrix.cols(); ++c) {
            const complex z = t.matrix(r, c);
            out += csv_row({provenance_name(t.provenance), t.row_labels[r], t.col_labels[c], format_double(z.real()),
                            format_double(z.imag()), format_double(std::abs(z))});
        }
    }
    return out;
}

inline nlohmann::ordered_json overlap_json(const OverlapTable& t)
{
    nlohmann::ordered_json j;
    j["level"] = t.level;
    j["sector"] = t.sector;
    j["provenance"] = provenance_name(t.provenance);
    j["rows"] = t.row_labels;
    j["columns"] = t.col_labels;
    if (!t.weight_indexing.empty()) j["weight_indexing"] = t.weight_indexing;
    nlohmann::ordered_json re = nlohmann::ordered_json::array();
    nlohmann::ordered_json im = nlohmann::ordered_json::array();
    for (Eigen::Index r = 0; r < t.matrix.rows(); ++r) {
        std::vector<double> a;
        std::vector<double> b;
        for (Eigen::Index c = 0; c < t.matrix.cols(); ++c) {
            a.push_back(t.matrix(r, c).real());
            b.push_back(t.matrix(r, c).imag());
        }
        re.push_back(a);
        im.push_back(b);
    }
    j["real"] = re;
    j["imag"] = im;
    j["unitarity_defect"] = t.unitarity_defect();
    return j;
}

inline nlohmann::ordered_json report_json(const Report& r, double tol)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        arr.push_back({{"name", c.name}, {"residual", c.residual}, {"pass", c.residual < tol}});
    }
    return arr;
}

} // namespace dunkl::io

#endif
