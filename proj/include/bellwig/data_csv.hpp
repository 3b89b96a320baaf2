#pragma once

// CSV files of +-1 trial records.
//
//   a,b,bp          one TrialTriple per row
//   a,ap,b,bp       one TrialQuad per row
//
// Cells are +1, -1, 1 or -1, optionally padded with spaces. The header is
// optional; without one the layout is taken from the first row's width.
// Blank lines are skipped. Line numbers in errors are 1-based.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "bellwig/core.hpp"

namespace bellwig {

/// A cell could not be read as an outcome.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A row has the wrong number of cells.
class LengthError : public Error {
public:
    LengthError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A file could not be opened, read or written.
class IoError : public Error {
public:
    using Error::Error;
};

using TrialData = std::variant<DataSetTriple, std::vector<TrialQuad>>;

/// Throws ParseError, LengthError, or EmptyData when there are no rows.
TrialData read_trials(std::istream& in);
TrialData read_trials(const std::filesystem::path& path);

/// Writes the `a,b,bp` header and one `+1,-1,+1`-style row per trial.
void write_triples(std::ostream& out, const DataSetTriple& d);
void write_triples(const std::filesystem::path& path, const DataSetTriple& d);

void write_quads(std::ostream& out, const std::vector<TrialQuad>& quads);

}  // namespace bellwig
