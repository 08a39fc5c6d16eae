// Report emission in json, csv and markdown.
#pragma once

#include <json.hpp>
#include <ostream>
#include <string>

namespace hopflab::cli {

enum class Format { Json, Csv, Md };
Format parse_format(const std::string& s);

// A report is a JSON object. Tables use the keys "table" (rows of strings),
// "basis" (row names) and optionally "columns"; everything else is a field.
void emit(std::ostream& os, const nlohmann::json& report, Format f);

}  // namespace hopflab::cli
