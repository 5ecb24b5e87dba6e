#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <utility>

#include "extal/alphabet.hpp"
#include "extal/errors.hpp"

namespace extal {

struct Sequence {
    std::string id;
    std::string letters;

    int length() const { return static_cast<int>(letters.size()); }
    char at(int i) const { return letters[static_cast<std::size_t>(i) - 1]; }  // 1-based
};

/// Uppercases, strips all whitespace, and checks every remaining symbol
/// against the alphabet. Reported column is the 1-based index into the raw
/// input.
inline Sequence validate_sequence(std::string_view raw, const Alphabet& alphabet,
                                  std::string id = "seq") {
    std::string letters;
    letters.reserve(raw.size());
    for (std::size_t k = 0; k < raw.size(); ++k) {
        unsigned char c = static_cast<unsigned char>(raw[k]);
        if (std::isspace(c)) continue;
        char up = static_cast<char>(std::toupper(c));
        if (!alphabet.contains(up)) {
            throw InvalidSymbolError(id, 1, static_cast<int>(k) + 1, raw[k]);
        }
        letters.push_back(up);
    }
    if (letters.empty()) throw EmptySequenceError();
    return Sequence{std::move(id), std::move(letters)};
}

}  // namespace extal
