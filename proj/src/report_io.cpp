// SPDX-License-Identifier: Apache-2.0
#include "qtel/report_io.hpp"

#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace qtel {

std::optional<OutputFormat> parse_format(std::string_view name) {
    if (name == "text") return OutputFormat::text;
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    return std::nullopt;
}

std::string format_significant(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return buf;
}

std::string format_value(const ExtendedReal& v) {
    if (v.is_infinite()) return "inf";
    return format_significant(v.value());
}

namespace {

std::string classification_string(const Classification& c, bool joint) {
    std::string s = to_string(c.purity_class);
    if (joint) {
        s += ", ";
        s += to_string(c.factorization_class);
    }
    return s;
}

bool is_joint_system(std::string_view key) { return key.size() > 1; }

// Round through the 12-digit decimal rendering so JSON numbers carry the
// same precision as the other formats.
double round_significant(double v) {
    return std::stod(format_significant(v));
}

} // namespace

void write_reports_text(std::ostream& os, const std::vector<StageReport>& reports) {
    for (const StageReport& rep : reports) {
        os << "stage " << stage_name(rep.stage) << "\n";
        os << "  entropies [bits]\n";
        for (const char* key : kEntropyReportKeys) {
            os << "    " << key << " = "
               << format_significant(entropy_field(rep.entropies, key)) << "\n";
        }
        os << "  relative entropies [bits]\n";
        for (const char* key : kRelativeEntropyKeys) {
            const ExtendedReal v =
                relative_entropy_field(rep.relative_entropies, key);
            os << "    " << key << " = " << format_value(v);
            if (v.is_infinite()) os << "  (support/kernel divergence)";
            os << "\n";
        }
        os << "  classifications\n";
        for (const char* key : kSystemKeys) {
            os << "    " << key << ": "
               << classification_string(
                      classification_field(rep.classifications, key),
                      is_joint_system(key))
               << "\n";
        }
    }
}

void write_reports_csv(std::ostream& os, const std::vector<StageReport>& reports) {
    os << "stage,quantity,value\n";
    for (const StageReport& rep : reports) {
        const char* stage = stage_name(rep.stage);
        for (const char* key : kEntropyReportKeys) {
            os << stage << ',' << key << ','
               << format_significant(entropy_field(rep.entropies, key)) << '\n';
        }
        for (const char* key : kRelativeEntropyKeys) {
            os << stage << ',' << key << ','
               << format_value(relative_entropy_field(rep.relative_entropies, key))
               << '\n';
        }
        for (const char* key : kSystemKeys) {
            const Classification& c =
                classification_field(rep.classifications, key);
            os << stage << ",purity_" << key << ',' << to_string(c.purity_class)
               << '\n';
            if (is_joint_system(key)) {
                os << stage << ",factorization_" << key << ','
                   << to_string(c.factorization_class) << '\n';
            }
        }
    }
}

void write_reports_json(std::ostream& os, const std::vector<StageReport>& reports) {
    nlohmann::ordered_json root = nlohmann::ordered_json::object();
    for (const StageReport& rep : reports) {
        nlohmann::ordered_json stage = nlohmann::ordered_json::object();
        for (const char* key : kEntropyReportKeys) {
            stage[key] = round_significant(entropy_field(rep.entropies, key));
        }
        nlohmann::ordered_json rel = nlohmann::ordered_json::object();
        for (const char* key : kRelativeEntropyKeys) {
            const ExtendedReal v =
                relative_entropy_field(rep.relative_entropies, key);
            if (v.is_infinite()) {
                rel[key] = "inf";
            } else {
                rel[key] = round_significant(v.value());
            }
        }
        stage["relative_entropies"] = std::move(rel);
        nlohmann::ordered_json cls = nlohmann::ordered_json::object();
        for (const char* key : kSystemKeys) {
            const Classification& c =
                classification_field(rep.classifications, key);
            nlohmann::ordered_json item = nlohmann::ordered_json::object();
            item["purity"] = to_string(c.purity_class);
            if (is_joint_system(key)) {
                item["factorization"] = to_string(c.factorization_class);
            }
            cls[key] = std::move(item);
        }
        stage["classifications"] = std::move(cls);
        root[stage_name(rep.stage)] = std::move(stage);
    }
    os << root.dump(2) << "\n";
}

void write_scan_csv(std::ostream& os, const std::vector<ScanRow>& rows) {
    os << "r,theta,s_ac_451,s_ac_452\n";
    for (const ScanRow& row : rows) {
        os << format_significant(row.r) << ',' << format_significant(row.theta)
           << ',' << format_significant(row.s_ac_451) << ','
           << format_significant(row.s_ac_452) << '\n';
    }
}

} // namespace qtel
