#pragma once

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ecci/verify.hpp"

namespace ecci {

enum class ReportFormat { Json, Csv, Text };

inline std::optional<ReportFormat> report_format_from_name(std::string_view s) {
    if (s == "json") return ReportFormat::Json;
    if (s == "csv") return ReportFormat::Csv;
    if (s == "text") return ReportFormat::Text;
    return std::nullopt;
}

namespace detail {

inline std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

}  // namespace detail

/// Stable field order; rationals as p/q plus a 12-significant-digit decimal.
inline void report_emit(std::ostream& os, const std::vector<TheoremReport>& reports,
                        ReportFormat format) {
    switch (format) {
        case ReportFormat::Json: {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto& r : reports) {
                nlohmann::ordered_json j;
                j["theorem"] = r.theorem;
                j["n"] = r.n;
                j["params"] = r.params;
                j["claimed_value"] = r.claimed_value.str();
                j["claimed_decimal"] = r.claimed_value.decimal();
                j["found_value"] = r.found_value.str();
                j["found_decimal"] = r.found_value.decimal();
                j["family_match"] = r.claimed_family_match;
                j["verdict"] = std::string(TheoremReport::verdict_name(r.verdict));
                j["detail"] = r.detail;
                arr.push_back(std::move(j));
            }
            os << arr.dump(2) << '\n';
            return;
        }
        case ReportFormat::Csv: {
            os << "theorem,n,params,claimed_value,claimed_decimal,found_value,found_decimal,"
                  "family_match,verdict,detail\n";
            for (const auto& r : reports) {
                os << r.theorem << ',' << r.n << ',' << detail::csv_quote(r.params) << ','
                   << detail::csv_quote(r.claimed_value.str()) << ',' << r.claimed_value.decimal()
                   << ',' << detail::csv_quote(r.found_value.str()) << ','
                   << r.found_value.decimal() << ',' << (r.claimed_family_match ? "true" : "false")
                   << ',' << TheoremReport::verdict_name(r.verdict) << ','
                   << detail::csv_quote(r.detail) << '\n';
            }
            return;
        }
        case ReportFormat::Text: {
            os << std::left << std::setw(8) << "theorem" << std::setw(5) << "n" << std::setw(16)
               << "params" << std::setw(14) << "claimed" << std::setw(14) << "found"
               << std::setw(7) << "family" << std::setw(9) << "verdict" << "detail\n";
            for (const auto& r : reports) {
                bool fail = r.verdict == TheoremReport::Verdict::Fail;
                os << std::left << std::setw(8) << r.theorem << std::setw(5) << r.n
                   << std::setw(16) << r.params << std::setw(14) << r.claimed_value.str()
                   << std::setw(14) << r.found_value.str() << std::setw(7)
                   << (r.claimed_family_match ? "yes" : "NO") << std::setw(9)
                   << TheoremReport::verdict_name(r.verdict) << (fail ? "<<< " : "")
                   << r.detail << '\n';
            }
            return;
        }
    }
    fail(Errc::UnsupportedFormat, "unknown report format");
}

inline std::string report_to_string(const std::vector<TheoremReport>& reports,
                                    ReportFormat format) {
    std::ostringstream os;
    report_emit(os, reports, format);
    return os.str();
}

}  // namespace ecci
