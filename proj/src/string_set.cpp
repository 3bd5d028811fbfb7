#include "median/string_set.hpp"

namespace median {

StringSet::StringSet(std::vector<Sequence> seqs)
    : members(std::move(seqs)), labels(members.size()) {}

void StringSet::add(Sequence seq, std::string label) {
    members.push_back(std::move(seq));
    labels.push_back(std::move(label));
}

StringSet StringSet::subset(const std::vector<std::size_t>& ids) const {
    StringSet out;
    for (std::size_t id : ids) {
        out.add(members.at(id), id < labels.size() ? labels[id] : std::string{});
    }
    return out;
}

}  // namespace median
