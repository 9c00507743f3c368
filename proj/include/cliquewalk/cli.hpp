#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

namespace cliquewalk::cli {

// Full command line, argv[0] included. Returns the process exit code:
// 0 ok, 1 validation, 2 hypothesis, 3 numerical or failed verification, 4 usage.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// json as-is, or flattened to "key value" lines (table) or header + rows (csv).
// A top-level array of objects becomes one row per element.
void write_formatted(std::ostream& out, const nlohmann::json& doc, const std::string& format);

// CLIQUEWALK_MAX_N, default 2000.
int max_vertices();

}  // namespace cliquewalk::cli
