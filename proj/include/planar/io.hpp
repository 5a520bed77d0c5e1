#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "planar/family.hpp"
#include "planar/line.hpp"
#include "planar/number_set.hpp"

namespace planar {

// Set files hold one serialized element per line; blank lines and lines
// starting with '#' are skipped. The element suffix (e or j) fixes the
// system, which must be uniform across the file.
NumberSet read_set_file(const std::string& path);
void write_set_file(const std::string& path, const NumberSet& a, const std::string& comment = "");

// Line files open with a `system dual|double` directive followed by one row
// per line: `slope a_re a_im b_re b_im`, `vert b_re b_im`, or
// `gen a_re a_im b_re b_im c_re c_im`, rationals as p/q.
std::vector<Line2> read_line_file(const std::string& path);
void write_line_file(const std::string& path, const std::vector<Line2>& lines);

// Families detected among the given lines as a JSON report:
// members, parameters, special point / point parameter, and skip warnings.
nlohmann::json family_report_json(const std::vector<Line2>& lines);

// Shared report conventions: every JSON document carries this version.
inline constexpr int kSchemaVersion = 1;

} // namespace planar
