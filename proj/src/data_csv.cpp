#include "bellwig/data_csv.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string_view>

namespace bellwig {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        cells.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return cells;
}

Outcome parse_cell(std::string_view cell, std::size_t line) {
    if (cell == "+1" || cell == "1") return Outcome::plus();
    if (cell == "-1") return Outcome::minus();
    throw ParseError(line, "invalid cell '" + std::string(cell) + "' (expected +1 or -1)");
}

const char* sign(Outcome o) { return o.value() > 0 ? "+1" : "-1"; }

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

LengthError::LengthError(std::size_t line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

TrialData read_trials(std::istream& in) {
    std::optional<std::size_t> width;
    std::vector<TrialTriple> triples;
    std::vector<TrialQuad> quads;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto line = trim(raw);
        if (line.empty()) continue;
        const auto cells = split(line);
        if (!width) {
            if (line == "a,b,bp" || line == "a,ap,b,bp") {
                width = cells.size();
                continue;
            }
            if (cells.size() != 3 && cells.size() != 4) {
                throw LengthError(line_no, "expected 3 or 4 cells, got " + std::to_string(cells.size()));
            }
            width = cells.size();
        }
        if (cells.size() != *width) {
            throw LengthError(line_no, "expected " + std::to_string(*width) + " cells, got " +
                                           std::to_string(cells.size()));
        }
        if (*width == 3) {
            triples.push_back({parse_cell(cells[0], line_no), parse_cell(cells[1], line_no),
                               parse_cell(cells[2], line_no)});
        } else {
            quads.push_back({parse_cell(cells[0], line_no), parse_cell(cells[1], line_no),
                             parse_cell(cells[2], line_no), parse_cell(cells[3], line_no)});
        }
    }
    if (in.bad()) throw IoError("read failure");
    if (width.value_or(3) == 4) {
        if (quads.empty()) throw EmptyData("data file has no trials");
        return quads;
    }
    if (triples.empty()) throw EmptyData("data file has no trials");
    return DataSetTriple(std::move(triples));
}

TrialData read_trials(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    return read_trials(in);
}

void write_triples(std::ostream& out, const DataSetTriple& d) {
    out << "a,b,bp\n";
    for (const auto& t : d.trials()) out << sign(t.a) << ',' << sign(t.b) << ',' << sign(t.bp) << '\n';
}

void write_triples(const std::filesystem::path& path, const DataSetTriple& d) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    write_triples(out, d);
    out.flush();
    if (!out) throw IoError("write to '" + path.string() + "' failed");
}

void write_quads(std::ostream& out, const std::vector<TrialQuad>& quads) {
    out << "a,ap,b,bp\n";
    for (const auto& q : quads) {
        out << sign(q.a) << ',' << sign(q.ap) << ',' << sign(q.b) << ',' << sign(q.bp) << '\n';
    }
}

}  // namespace bellwig
