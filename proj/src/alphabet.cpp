#include "median/alphabet.hpp"

#include "median/errors.hpp"

namespace median {

Alphabet::Alphabet(std::string_view chars) : chars_(chars) {
    lookup_.fill(-1);
    if (chars_.empty()) {
        throw InputError("alphabet must contain at least one symbol");
    }
    for (std::size_t i = 0; i < chars_.size(); ++i) {
        auto& slot = lookup_[static_cast<unsigned char>(chars_[i])];
        if (slot >= 0) {
            throw InputError(std::string("duplicate alphabet symbol '") + chars_[i] + "'");
        }
        slot = static_cast<int>(i);
    }
}

char Alphabet::symbol_char(Symbol s) const {
    if (s >= chars_.size()) {
        throw InputError("symbol code " + std::to_string(s) + " outside alphabet");
    }
    return chars_[s];
}

Symbol Alphabet::code(char c) const {
    const int idx = lookup_[static_cast<unsigned char>(c)];
    if (idx < 0) {
        throw InputError(std::string("symbol '") + c + "' is not in the alphabet");
    }
    return static_cast<Symbol>(idx);
}

Sequence Alphabet::encode(std::string_view text) const {
    Sequence out;
    out.reserve(text.size());
    for (char c : text) {
        out.push_back(code(c));
    }
    return out;
}

std::string Alphabet::decode(const Sequence& seq) const {
    std::string out;
    out.reserve(seq.size());
    for (Symbol s : seq) {
        out.push_back(symbol_char(s));
    }
    return out;
}

Alphabet Alphabet::first_n(std::size_t n) {
    static constexpr std::string_view pool =
        "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
    if (n == 0 || n > pool.size()) {
        throw InputError("alphabet size must be in 1.." + std::to_string(pool.size()));
    }
    return Alphabet(pool.substr(0, n));
}

}  // namespace median
