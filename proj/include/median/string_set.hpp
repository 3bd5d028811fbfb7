#pragma once

#include <string>
#include <vector>

#include "median/alphabet.hpp"

namespace median {

// Members are identified by their index, which stays stable for the
// lifetime of the set.
struct StringSet {
    std::vector<Sequence> members;
    std::vector<std::string> labels;  // parallel to members; may be empty strings

    StringSet() = default;
    explicit StringSet(std::vector<Sequence> seqs);

    std::size_t size() const { return members.size(); }
    bool empty() const { return members.empty(); }
    const Sequence& operator[](std::size_t id) const { return members[id]; }

    void add(Sequence seq, std::string label = {});

    // Members at the given ids, in order; labels follow.
    StringSet subset(const std::vector<std::size_t>& ids) const;
};

}  // namespace median
