#ifndef POLYPHASE_CLI_HPP
#define POLYPHASE_CLI_HPP

// Command-line front end: thresholds | bound | levelcurve | angles |
// experiment | ecc | selftest.  Exit codes: 0 success, 2 validation error,
// 3 I/O error.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polyphase/experiments.hpp"
#include "polyphase/thresholds.hpp"

namespace polyphase {

// Flat key=value config text; '#' starts a comment line.  Unknown keys are
// rejected against the caller-supplied whitelist.
std::map<std::string, std::string> parse_config(const std::string& text,
                                                const std::vector<std::string>& allowed_keys);
std::map<std::string, std::string> load_config(const std::string& path,
                                               const std::vector<std::string>& allowed_keys);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// 12 significant digits, locale independent.
std::string format_double(double v);

// Header row + data rows, newline-terminated, written atomically
// (temp file then rename).
void emit_csv(const Table& table, const std::string& path);
std::string csv_string(const Table& table);

// Static SVG phase diagram: axes delta, rho in (0,1), one polyline per curve,
// optional success-fraction heat cells from a grid result.
void emit_svg_phase_diagram(const std::vector<PhaseCurve>& curves,
                            const GridResult* grid, const std::string& path);
std::string svg_string(const std::vector<PhaseCurve>& curves, const GridResult* grid);

int run(int argc, const char* const* argv);

}  // namespace polyphase

#endif
