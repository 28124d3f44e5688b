#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "brillouin/types.hpp"

namespace brillouin {

using Cell = std::variant<Real, std::string>;

/// Column-ordered result table shared by every sweep command.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;
};

/// 9 significant digits, the fixed CSV float format.
std::string format_sig9(Real value);

/// Byte-stable CSV: fixed column order, %.9g floats, '\n' line endings.
void write_csv(const Table& table, std::ostream& out);

/// Same content as one JSON object per row (array of objects); non-finite
/// numbers become null.
void write_json(const Table& table, std::ostream& out);

void write_table(const Table& table, const std::string& format, std::ostream& out);

}  // namespace brillouin
