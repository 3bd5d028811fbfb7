#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>

#include "median/alphabet.hpp"
#include "median/cost_model.hpp"
#include "median/string_set.hpp"

namespace median {

struct LoadedStrings {
    Alphabet alphabet;
    StringSet set;
};

// One string per line, optional "label<TAB>" prefix, after a mandatory
// "#alphabet: <chars>" header. Blank lines and other '#' lines are skipped.
LoadedStrings read_strings(std::istream& in);
LoadedStrings load_strings(const std::filesystem::path& path);
void write_strings(std::ostream& out, const Alphabet& alphabet, const StringSet& set);
void save_strings(const std::filesystem::path& path, const Alphabet& alphabet,
                  const StringSet& set);

// Tab-separated matrix: a header row with the alphabet symbols followed by
// EPS, then one row of costs per source symbol (EPS last). Diagonal entries
// may be written as '-'. A row may start with its symbol as a label.
std::pair<Alphabet, CostModel> read_cost_matrix(std::istream& in);
std::pair<Alphabet, CostModel> load_cost_matrix(const std::filesystem::path& path);
// Reorders the file's rows and columns into `alphabet`'s code order; throws
// InputError if the symbol sets differ.
CostModel load_cost_matrix(const std::filesystem::path& path, const Alphabet& alphabet);
void write_cost_matrix(std::ostream& out, const Alphabet& alphabet, const CostModel& model);
void save_cost_matrix(const std::filesystem::path& path, const Alphabet& alphabet,
                      const CostModel& model);

// The four-symbol worked-example table over {0,1,2,4}.
std::pair<Alphabet, CostModel> builtin_table1();

// Shortest decimal text that parses back to the same double.
std::string format_number(double value);

}  // namespace median
