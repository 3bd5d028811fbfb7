#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "median/alphabet.hpp"
#include "median/cost_model.hpp"
#include "median/counters.hpp"

namespace median {

// Declaration order is the tie-break order used when ranking operations.
enum class OpKind : std::uint8_t { substitution = 0, deletion = 1, insertion = 2 };

const char* to_string(OpKind kind);

// A single positioned edit. Substitutions and deletions address a symbol
// index of the source; insertions address a gap index 0..len, where gap g
// sits immediately before source symbol g.
struct EditOp {
    OpKind kind = OpKind::substitution;
    std::size_t position = 0;
    Symbol from = 0;
    Symbol to = 0;

    friend auto operator<=>(const EditOp&, const EditOp&) = default;
};

EditOp substitution_op(std::size_t position, Symbol from, Symbol to);
EditOp deletion_op(std::size_t position, Symbol from, Symbol epsilon);
EditOp insertion_op(std::size_t gap, Symbol to, Symbol epsilon);

// Throws InputError if kind and (from, to) disagree under the given epsilon.
void check_op(const EditOp& op, Symbol epsilon);

double op_cost(const EditOp& op, const CostModel& model);

std::string describe(const EditOp& op, const Alphabet& alphabet);

// Cost-bearing operations only (matches are omitted), ordered by source
// coordinate with insertions at gap g before the operation on symbol g.
struct EditScript {
    Sequence source;
    Sequence target;
    std::vector<EditOp> ops;
    double total_cost = 0.0;
};

double distance(const Sequence& from, const Sequence& to, const CostModel& model,
                OpCounter* counter = nullptr);

// Minimum-cost script with a canonical traceback: walking back from the last
// cell, a diagonal step (match or substitution) is preferred over a deletion,
// and a deletion over an insertion.
std::pair<double, EditScript> distance_with_script(const Sequence& from, const Sequence& to,
                                                   const CostModel& model,
                                                   OpCounter* counter = nullptr);

Sequence apply_op(const Sequence& s, const EditOp& op);

// Applies the script right to left so earlier coordinates stay valid.
Sequence apply_script(const Sequence& s, const EditScript& script);

// Throws InputError for symbols outside the model's alphabet.
void check_sequence(const Sequence& s, const CostModel& model);

}  // namespace median
