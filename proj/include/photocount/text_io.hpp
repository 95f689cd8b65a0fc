#pragma once

#include <string>

namespace photocount {

// 17 significant digits: enough to round-trip any double, and used for both
// CSV and JSON so the two formats carry byte-identical numbers
std::string fmt_g17(double v);

std::string json_escape(const std::string& s);

}  // namespace photocount
