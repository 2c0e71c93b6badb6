#include "coulomb1d/io/table.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "coulomb1d/errors.hpp"

namespace c1d::io {

namespace {

using ojson = nlohmann::ordered_json;

bool same_double(double a, double b) {
    if (std::isnan(a) && std::isnan(b)) return true;
    return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

bool same_cell(const Cell& a, const Cell& b) {
    if (a.index() != b.index()) return false;
    if (a.index() == 0) return same_double(std::get<0>(a), std::get<0>(b));
    return std::get<1>(a) == std::get<1>(b);
}

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

// Splits one CSV record; quoted fields come back flagged.
std::vector<std::pair<std::string, bool>> split_record(const std::string& line) {
    std::vector<std::pair<std::string, bool>> out;
    std::string cur;
    bool quoted = false, in_quotes = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            in_quotes = quoted = true;
        } else if (c == ',') {
            out.emplace_back(cur, quoted);
            cur.clear();
            quoted = false;
        } else {
            cur += c;
        }
    }
    if (in_quotes) throw config_error("unterminated quote in CSV record");
    out.emplace_back(cur, quoted);
    return out;
}

double parse_double(const std::string& s) {
    double v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) throw config_error("not a number: '" + s + "'");
    return v;
}

std::string nonfinite_name(double x) {
    if (std::isnan(x)) return "nan";
    return x > 0 ? "inf" : "-inf";
}

void write_csv(const Table& t, std::ostream& os) {
    for (const auto& [k, v] : t.meta) os << "# " << k << '=' << v << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        os << (i ? "," : "") << t.columns[i].name << " [" << t.columns[i].unit << ']';
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            if (row[i].index() == 0)
                os << format_double(std::get<0>(row[i]));
            else
                os << quote(std::get<1>(row[i]));
        }
        os << '\n';
    }
}

Table read_csv(std::istream& is) {
    Table t;
    std::string line;
    bool header = false;
    while (std::getline(is, line)) {
        if (!header && line.rfind("# ", 0) == 0) {
            auto eq = line.find('=');
            if (eq == std::string::npos) throw config_error("malformed CSV meta line");
            t.meta.emplace_back(line.substr(2, eq - 2), line.substr(eq + 1));
            continue;
        }
        if (!header) {
            for (auto& [f, q] : split_record(line)) {
                auto lb = f.rfind(" [");
                if (lb == std::string::npos || f.back() != ']') throw config_error("CSV header needs 'name [unit]'");
                t.columns.push_back({f.substr(0, lb), f.substr(lb + 2, f.size() - lb - 3)});
            }
            header = true;
            continue;
        }
        std::vector<Cell> row;
        for (auto& [f, q] : split_record(line)) {
            if (q)
                row.emplace_back(f);
            else
                row.emplace_back(parse_double(f));
        }
        t.add_row(std::move(row));
    }
    return t;
}

void write_json(const Table& t, std::ostream& os) {
    ojson j;
    j["meta"] = ojson::object();
    for (const auto& [k, v] : t.meta) j["meta"][k] = v;
    j["columns"] = ojson::array();
    for (const auto& c : t.columns) j["columns"].push_back({{"name", c.name}, {"unit", c.unit}});
    j["rows"] = ojson::array();
    for (const auto& row : t.rows) {
        ojson r = ojson::array();
        for (const auto& c : row) {
            if (c.index() == 1) {
                r.push_back(std::get<1>(c));
            } else {
                double x = std::get<0>(c);
                if (std::isfinite(x))
                    r.push_back(x);
                else
                    r.push_back({{"nonfinite", nonfinite_name(x)}});
            }
        }
        j["rows"].push_back(std::move(r));
    }
    os << j.dump(1) << '\n';
}

Table read_json(std::istream& is) {
    ojson j;
    try {
        j = ojson::parse(is);
    } catch (const ojson::parse_error& e) {
        throw config_error(std::string("JSON parse error: ") + e.what());
    }
    Table t;
    for (const auto& [k, v] : j.at("meta").items()) t.meta.emplace_back(k, v.get<std::string>());
    for (const auto& c : j.at("columns")) t.columns.push_back({c.at("name"), c.at("unit")});
    for (const auto& r : j.at("rows")) {
        std::vector<Cell> row;
        for (const auto& c : r) {
            if (c.is_string())
                row.emplace_back(c.get<std::string>());
            else if (c.is_object())
                row.emplace_back(parse_double(c.at("nonfinite").get<std::string>()));
            else
                row.emplace_back(c.get<double>());
        }
        t.add_row(std::move(row));
    }
    return t;
}

} // namespace

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) throw config_error("row width does not match the column count");
    rows.push_back(std::move(row));
}

bool Table::operator==(const Table& o) const {
    if (meta != o.meta || columns.size() != o.columns.size() || rows.size() != o.rows.size()) return false;
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i].name != o.columns[i].name || columns[i].unit != o.columns[i].unit) return false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != o.rows[i].size()) return false;
        for (std::size_t k = 0; k < rows[i].size(); ++k)
            if (!same_cell(rows[i][k], o.rows[i][k])) return false;
    }
    return true;
}

std::string format_double(double x) {
    if (!std::isfinite(x)) return nonfinite_name(x);
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, p);
}

void write(const Table& t, Format f, std::ostream& os) {
    if (f == Format::csv)
        write_csv(t, os);
    else
        write_json(t, os);
}

Table read(Format f, std::istream& is) { return f == Format::csv ? read_csv(is) : read_json(is); }

} // namespace c1d::io
