// SPDX-License-Identifier: Apache-2.0
//
// Text, CSV and JSON rendering of stage reports and scan grids. Numeric
// fields are emitted with 12 significant digits; divergent relative
// entropies serialize as the literal "inf" so CSV and JSON round-trip
// losslessly.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qtel/pipeline.hpp"

namespace qtel {

enum class OutputFormat { text, csv, json };

std::optional<OutputFormat> parse_format(std::string_view name);

/// %.12g rendering.
std::string format_significant(double v, int digits = 12);
/// "inf" or the 12-digit rendering of the finite value.
std::string format_value(const ExtendedReal& v);

void write_reports_text(std::ostream& os, const std::vector<StageReport>& reports);

/// Long-form CSV: header "stage,quantity,value", one row per entropy,
/// relative entropy and classification entry.
void write_reports_csv(std::ostream& os, const std::vector<StageReport>& reports);

/// One JSON object per stage keyed by stage id. The sixteen entropy fields
/// sit flat in the stage object; "relative_entropies" and
/// "classifications" are nested objects.
void write_reports_json(std::ostream& os, const std::vector<StageReport>& reports);

/// CSV with header "r,theta,s_ac_451,s_ac_452", rows in scan order.
void write_scan_csv(std::ostream& os, const std::vector<ScanRow>& rows);

} // namespace qtel
