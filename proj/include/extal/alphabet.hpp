#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace extal {

/// Ordered set of distinct symbols; index <-> symbol is a bijection.
class Alphabet {
public:
    explicit Alphabet(std::string_view symbols) : symbols_(symbols) {
        if (symbols_.size() < 2) {
            throw std::invalid_argument("alphabet needs at least 2 symbols");
        }
        index_.fill(-1);
        for (std::size_t k = 0; k < symbols_.size(); ++k) {
            unsigned char c = static_cast<unsigned char>(symbols_[k]);
            if (index_[c] != -1) {
                throw std::invalid_argument("duplicate alphabet symbol '" + std::string(1, symbols_[k]) + "'");
            }
            index_[c] = static_cast<std::int16_t>(k);
        }
    }

    static const Alphabet& dna() {
        static const Alphabet a("ACGT");
        return a;
    }

    int size() const { return static_cast<int>(symbols_.size()); }
    char symbol(int idx) const { return symbols_.at(static_cast<std::size_t>(idx)); }
    int index_of(char c) const { return index_[static_cast<unsigned char>(c)]; }
    bool contains(char c) const { return index_of(c) >= 0; }
    const std::string& symbols() const { return symbols_; }

    bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

private:
    std::string symbols_;
    std::array<std::int16_t, 256> index_{};
};

}  // namespace extal
