#include <cerrno>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "moead/core.hpp"

namespace moead {

std::string format_real(double v) { return fmt::format("{}", v); }

namespace {

bool parse_row(const std::string& line, std::vector<double>& out, std::size_t line_no) {
    out.clear();
    const char* p = line.c_str();
    for (;;) {
        while (*p == ' ' || *p == '\t' || *p == '\r' || *p == ',') ++p;
        if (*p == '\0') break;
        char* end = nullptr;
        errno = 0;
        const double v = std::strtod(p, &end);
        if (end == p || errno == ERANGE) {
            throw ParseError("malformed number near '" + std::string(p).substr(0, 20) + "'", line_no);
        }
        out.push_back(v);
        p = end;
    }
    return !out.empty();
}

}  // namespace

std::vector<ObjectiveVector> read_real_rows(std::istream& in, std::size_t expected_columns) {
    std::vector<ObjectiveVector> rows;
    std::string line;
    std::vector<double> row;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.front() == '#') continue;
        if (!parse_row(line, row, line_no)) continue;
        if (expected_columns == 0) expected_columns = row.size();
        if (row.size() != expected_columns) {
            throw ParseError("expected " + std::to_string(expected_columns) + " columns, found " +
                                 std::to_string(row.size()),
                             line_no);
        }
        rows.push_back(row);
    }
    if (in.bad()) throw IoError("read failure");
    return rows;
}

void write_real_rows(std::ostream& out, const std::vector<ObjectiveVector>& rows) {
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i) out << '\t';
            out << format_real(r[i]);
        }
        out << '\n';
    }
}

void write_solutions(std::ostream& out, std::span<const Solution> solutions) {
    for (const auto& s : solutions) {
        out << s.eval_index;
        for (double v : s.decision) out << '\t' << format_real(v);
        for (double v : s.objectives) out << '\t' << format_real(v);
        out << '\n';
    }
}

std::vector<Solution> read_solutions(std::istream& in, std::size_t num_variables, std::size_t num_objectives) {
    const std::size_t columns = 1 + num_variables + num_objectives;
    std::vector<Solution> out;
    std::string line;
    std::vector<double> row;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.front() == '#') continue;
        if (!parse_row(line, row, line_no)) continue;
        if (row.size() != columns) {
            throw ParseError("expected " + std::to_string(columns) + " columns, found " + std::to_string(row.size()),
                             line_no);
        }
        if (row[0] < 0 || row[0] != static_cast<double>(static_cast<std::uint64_t>(row[0]))) {
            throw ParseError("eval_index must be a non-negative integer", line_no);
        }
        Solution s;
        s.eval_index = static_cast<std::uint64_t>(row[0]);
        s.decision.assign(row.begin() + 1, row.begin() + 1 + static_cast<std::ptrdiff_t>(num_variables));
        s.objectives.assign(row.begin() + 1 + static_cast<std::ptrdiff_t>(num_variables), row.end());
        out.push_back(std::move(s));
    }
    if (in.bad()) throw IoError("read failure");
    return out;
}

}  // namespace moead
