#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace median {

// Index of a symbol inside its Alphabet. The empty symbol is the index one
// past the last real symbol.
using Symbol = std::uint16_t;
using Sequence = std::vector<Symbol>;

// Ordered set of single-character symbols. Symbol codes are positions in
// declaration order, so code order is also the tie-break order.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::string_view chars);

    std::size_t size() const { return chars_.size(); }
    Symbol epsilon() const { return static_cast<Symbol>(chars_.size()); }
    bool contains(char c) const { return lookup_[static_cast<unsigned char>(c)] >= 0; }

    char symbol_char(Symbol s) const;
    Symbol code(char c) const;
    const std::string& chars() const { return chars_; }

    Sequence encode(std::string_view text) const;
    std::string decode(const Sequence& seq) const;

    // First `n` characters of "0-9a-zA-Z".
    static Alphabet first_n(std::size_t n);

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.chars_ == b.chars_; }

private:
    std::string chars_;
    std::array<int, 256> lookup_{};
};

}  // namespace median
