#ifndef POLYCONST_CLI_HPP
#define POLYCONST_CLI_HPP

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace polyconst::cli {

enum class Format { Text, Csv, Json };

/// Empty cells print as "---" (text, CSV) or null (JSON).
using Cell = std::variant<std::monostate, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Writes `table`. Numbers use 6 significant digits, or 17 when `full`.
void write_table(std::ostream& out, const Table& table, Format format, bool full);

/// Row parameters for the named tables.
Table make_table(const std::string& name);

/// (parameter, value) rows. `p` is used by f-curves only; p <= 0 selects all
/// nine p in {2.2, 2.4, ..., 3.8} as separate columns.
Table make_figure(const std::string& name, double from, double to, int points, double p);

/// Parses `args` (without the program name) and runs one subcommand.
/// Returns 0 on success, 2 on a usage or domain error, 3 on a numerical
/// failure (including a failed `verify`).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyconst::cli

#endif
