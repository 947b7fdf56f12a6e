#include "cocite/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <istream>

#include "cocite/errors.hpp"

namespace cocite::csv {

std::vector<std::string> split_line(const std::string &line, std::size_t line_no) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    std::size_t i = 0;
    const std::size_t n = line.size();

    // A field is either bare (ends at the next comma) or quoted.
    while (true) {
        cur.clear();
        if (i < n && line[i] == '"') {
            quoted = true;
            ++i;
            while (true) {
                if (i >= n)
                    throw ParseError("unterminated quoted field", line_no);
                if (line[i] == '"') {
                    if (i + 1 < n && line[i + 1] == '"') {
                        cur.push_back('"');
                        i += 2;
                    } else {
                        ++i;
                        break;
                    }
                } else {
                    cur.push_back(line[i++]);
                }
            }
            if (i < n && line[i] != ',')
                throw ParseError("unexpected character after closing quote", line_no);
        } else {
            quoted = false;
            while (i < n && line[i] != ',')
                cur.push_back(line[i++]);
        }
        (void)quoted;
        fields.push_back(cur);
        if (i >= n)
            break;
        ++i; // skip comma; a trailing comma yields a final empty field
        if (i == n) {
            fields.emplace_back();
            break;
        }
    }
    return fields;
}

std::string quote(const std::string &field) {
    if (field.find_first_of(",\"\n") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += "\"\"";
        else
            out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::vector<std::string> read_lines(std::istream &in) {
    std::vector<std::string> lines;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (first) {
            if (line.rfind("\xEF\xBB\xBF", 0) == 0)
                line.erase(0, 3);
            first = false;
        }
        lines.push_back(line);
    }
    return lines;
}

std::string format_full(double v) {
    char buf[40];
    for (int prec = 15; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v)
            return buf;
    }
    return buf;
}

std::string format_sig6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

} // namespace cocite::csv
