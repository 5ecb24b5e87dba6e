#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace extal {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text (FASTA, raw sequences, model files). CLI exit code 2.
struct ParseError : Error {
    using Error::Error;
};

struct InvalidSymbolError : ParseError {
    InvalidSymbolError(std::string record, int line_no, int column_no, char sym)
        : ParseError("invalid symbol '" + std::string(1, sym) + "' in record '" + record +
                     "' at line " + std::to_string(line_no) + ", column " + std::to_string(column_no)),
          record_id(std::move(record)), line(line_no), column(column_no), symbol(sym) {}

    std::string record_id;
    int line = 0;
    int column = 0;
    char symbol = '\0';
};

struct EmptyRecordError : ParseError {
    explicit EmptyRecordError(const std::string& record)
        : ParseError("record '" + record + "' has no sequence lines"), record_id(record) {}
    std::string record_id;
};

struct NoRecordsError : ParseError {
    NoRecordsError() : ParseError("no FASTA records found ('>' header missing)") {}
};

struct EmptySequenceError : ParseError {
    EmptySequenceError() : ParseError("sequence is empty after removing whitespace") {}
};

// DP table would exceed the configured cell budget. CLI exit code 3.
struct SizeLimitError : Error {
    SizeLimitError(std::uint64_t requested, std::uint64_t limit)
        : Error("DP table of " + std::to_string(requested) + " cells exceeds budget of " +
                std::to_string(limit)),
          cells(requested), budget(limit) {}
    std::uint64_t cells = 0;
    std::uint64_t budget = 0;
};

struct TooManyAlignmentsError : Error {
    explicit TooManyAlignmentsError(std::uint64_t limit)
        : Error("more than " + std::to_string(limit) + " optimal alignments exist"), cap(limit) {}
    std::uint64_t cap = 0;
};

// Per-rank extremal selection failed strict monotonicity; indicates a bug.
struct ChainError : std::logic_error {
    using std::logic_error::logic_error;
};

// Model parameters outside the supported regime. CLI exit code 4.
struct DegenerateModelError : Error {
    using Error::Error;
};

struct DegenerateLawError : Error {
    explicit DegenerateLawError(std::string which, const std::string& detail)
        : Error("degenerate letter law: " + which + " (" + detail + ")"), quantity(std::move(which)) {}
    std::string quantity;
};

// Argument outside its mathematical domain. CLI exit code 2.
struct DomainError : Error {
    using Error::Error;
};

}  // namespace extal
