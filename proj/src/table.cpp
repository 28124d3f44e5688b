#include "brillouin/table.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace brillouin {

std::string format_sig9(Real value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", value);
    return buf;
}

void write_csv(const Table& table, std::ostream& out) {
    for (std::size_t c = 0; c < table.header.size(); ++c) {
        out << (c ? "," : "") << table.header[c];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << ',';
            if (const Real* v = std::get_if<Real>(&row[c])) {
                out << format_sig9(*v);
            } else {
                out << std::get<std::string>(row[c]);
            }
        }
        out << '\n';
    }
}

void write_json(const Table& table, std::ostream& out) {
    out << "[\n";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        nlohmann::ordered_json obj;
        for (std::size_t c = 0; c < table.header.size(); ++c) {
            if (const Real* v = std::get_if<Real>(&table.rows[r][c])) {
                obj[table.header[c]] = *v;  // non-finite values serialize as null
            } else {
                obj[table.header[c]] = std::get<std::string>(table.rows[r][c]);
            }
        }
        out << "  " << obj.dump() << (r + 1 < table.rows.size() ? "," : "") << '\n';
    }
    out << "]\n";
}

void write_table(const Table& table, const std::string& format, std::ostream& out) {
    if (format == "csv") {
        write_csv(table, out);
    } else if (format == "json") {
        write_json(table, out);
    } else {
        throw std::invalid_argument("table: unknown format '" + format + "'");
    }
}

}  // namespace brillouin
