#pragma once

#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "extal/alphabet.hpp"
#include "extal/errors.hpp"
#include "extal/sequence.hpp"

namespace extal {

/// Parses a FASTA document. Header text up to the first whitespace becomes
/// the id; sequence lines are uppercased and whitespace-stripped. Any other
/// character is an InvalidSymbolError carrying record id, line and column.
inline std::vector<Sequence> parse_fasta(std::string_view text, const Alphabet& alphabet) {
    std::vector<Sequence> out;
    std::string current_id;
    std::string current_letters;
    bool in_record = false;

    auto flush = [&] {
        if (!in_record) return;
        if (current_letters.empty()) throw EmptyRecordError(current_id);
        out.push_back(Sequence{current_id, current_letters});
        current_letters.clear();
    };

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = (eol == std::string_view::npos)
                                    ? text.substr(pos)
                                    : text.substr(pos, eol - pos);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        if (!line.empty() && line.front() == '>') {
            flush();
            in_record = true;
            std::string_view header = line.substr(1);
            std::size_t ws = 0;
            while (ws < header.size() && !std::isspace(static_cast<unsigned char>(header[ws]))) ++ws;
            current_id = std::string(header.substr(0, ws));
            if (current_id.empty()) current_id = "unnamed";
        } else {
            for (std::size_t k = 0; k < line.size(); ++k) {
                unsigned char c = static_cast<unsigned char>(line[k]);
                if (std::isspace(c)) continue;
                if (!in_record) {
                    throw ParseError("line " + std::to_string(line_no) +
                                     ": sequence data before first '>' header");
                }
                char up = static_cast<char>(std::toupper(c));
                if (!alphabet.contains(up)) {
                    throw InvalidSymbolError(current_id, line_no, static_cast<int>(k) + 1, line[k]);
                }
                current_letters.push_back(up);
            }
        }

        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    flush();
    if (out.empty()) throw NoRecordsError();
    return out;
}

inline std::vector<Sequence> parse_fasta(std::istream& in, const Alphabet& alphabet) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_fasta(std::string_view(buf.str()), alphabet);
}

inline void write_fasta(std::ostream& out, const Sequence& seq, int width = 70) {
    out << '>' << seq.id << '\n';
    for (std::size_t k = 0; k < seq.letters.size(); k += static_cast<std::size_t>(width)) {
        out << seq.letters.substr(k, static_cast<std::size_t>(width)) << '\n';
    }
}

/// Reads one sequence from a file: FASTA if the first non-whitespace
/// character is '>', otherwise raw text with all whitespace ignored.
/// A multi-record FASTA yields its first record.
inline Sequence read_sequence_file(const std::string& path, const Alphabet& alphabet) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();

    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw EmptySequenceError();
    if (text[first] == '>') {
        return parse_fasta(std::string_view(text), alphabet).front();
    }
    std::string stem = path;
    if (auto slash = stem.find_last_of("/\\"); slash != std::string::npos) stem = stem.substr(slash + 1);
    if (auto dot = stem.find_last_of('.'); dot != std::string::npos && dot > 0) stem = stem.substr(0, dot);
    return validate_sequence(text, alphabet, stem);
}

}  // namespace extal
