#include "median/edit_distance.hpp"

#include <algorithm>

#include "dp_kernels.hpp"
#include "median/errors.hpp"

namespace median {

const char* to_string(OpKind kind) {
    switch (kind) {
        case OpKind::substitution: return "sub";
        case OpKind::deletion: return "del";
        case OpKind::insertion: return "ins";
    }
    return "?";
}

EditOp substitution_op(std::size_t position, Symbol from, Symbol to) {
    return {OpKind::substitution, position, from, to};
}

EditOp deletion_op(std::size_t position, Symbol from, Symbol epsilon) {
    return {OpKind::deletion, position, from, epsilon};
}

EditOp insertion_op(std::size_t gap, Symbol to, Symbol epsilon) {
    return {OpKind::insertion, gap, epsilon, to};
}

void check_op(const EditOp& op, Symbol epsilon) {
    const bool from_eps = op.from == epsilon;
    const bool to_eps = op.to == epsilon;
    if (from_eps && to_eps) {
        throw InputError("(eps -> eps) is not an edit operation");
    }
    if (op.from > epsilon || op.to > epsilon) {
        throw InputError("edit operation symbol outside alphabet");
    }
    const bool consistent = (op.kind == OpKind::substitution && !from_eps && !to_eps) ||
                            (op.kind == OpKind::deletion && to_eps) ||
                            (op.kind == OpKind::insertion && from_eps);
    if (!consistent) {
        throw InputError(std::string("edit operation kind '") + to_string(op.kind) +
                         "' does not match its symbols");
    }
}

double op_cost(const EditOp& op, const CostModel& model) { return model.cost(op.from, op.to); }

std::string describe(const EditOp& op, const Alphabet& alphabet) {
    auto sym = [&](Symbol s) {
        return s == alphabet.epsilon() ? std::string("eps") : std::string(1, alphabet.symbol_char(s));
    };
    return std::string(to_string(op.kind)) + "@" + std::to_string(op.position) + ":" +
           sym(op.from) + "->" + sym(op.to);
}

void check_sequence(const Sequence& s, const CostModel& model) {
    for (Symbol c : s) {
        if (c >= model.alphabet_size()) {
            throw InputError("symbol code " + std::to_string(c) + " outside the cost model alphabet");
        }
    }
}

namespace {

void count_cells(OpCounter* counter, std::size_t n, std::size_t m) {
    if (counter != nullptr) {
        counter->dp_cells += static_cast<std::uint64_t>(n + 1) * (m + 1);
        counter->distance_evals += 1;
    }
}

}  // namespace

namespace {

// Row-by-row DP over a per-symbol profile of substitution costs against
// `to`. The diagonal and vertical candidates of a row are independent, so
// only the horizontal (insertion) recurrence is left on the serial chain.
template <typename Cost>
Cost dp_distance(const Sequence& from, const Sequence& to, const CostModel& model,
                 const Cost* costs) {
    const std::size_t m = to.size();
    const std::size_t dim = model.dimension();
    const std::size_t sigma = model.alphabet_size();
    std::vector<Cost> profile(sigma * m);
    for (std::size_t a = 0; a < sigma; ++a) {
        for (std::size_t j = 0; j < m; ++j) {
            profile[a * m + j] = costs[a * dim + to[j]];
        }
    }
    std::vector<Cost> ins(m);
    for (std::size_t j = 0; j < m; ++j) {
        ins[j] = costs[sigma * dim + to[j]];
    }
    std::vector<Cost> prev(m + 1);
    std::vector<Cost> cur(m + 1);
    prev[0] = Cost{0};
    for (std::size_t j = 1; j <= m; ++j) {
        prev[j] = prev[j - 1] + ins[j - 1];
    }
    for (const Symbol a : from) {
        const Cost* sub = profile.data() + a * m;
        const Cost del = costs[a * dim + sigma];
        cur[0] = prev[0] + del;
        for (std::size_t j = 1; j <= m; ++j) {
            cur[j] = std::min(prev[j - 1] + sub[j - 1], prev[j] + del);
        }
        Cost left = cur[0];
        for (std::size_t j = 1; j <= m; ++j) {
            left = std::min(cur[j], left + ins[j - 1]);
            cur[j] = left;
        }
        std::swap(prev, cur);
    }
    return prev[m];
}

}  // namespace

double distance(const Sequence& from, const Sequence& to, const CostModel& model,
                OpCounter* counter) {
    check_sequence(from, model);
    check_sequence(to, model);
    count_cells(counter, from.size(), to.size());
    // Any path costs at most max_cost * (|from| + |to|); the margin covers
    // the vector kernel's padding columns.
    if (model.integral() &&
        model.max_cost() * static_cast<double>(from.size() + to.size() + 16) < 0x1.0p29) {
        if (detail::simd_dp_available()) {
            return static_cast<double>(detail::simd_dp_distance(
                from.data(), from.size(), to.data(), to.size(), model.raw_integral().data(),
                model.alphabet_size()));
        }
        return static_cast<double>(dp_distance(from, to, model, model.raw_integral().data()));
    }
    return dp_distance(from, to, model, model.raw().data());
}

std::pair<double, EditScript> distance_with_script(const Sequence& from, const Sequence& to,
                                                   const CostModel& model, OpCounter* counter) {
    check_sequence(from, model);
    check_sequence(to, model);
    count_cells(counter, from.size(), to.size());

    const std::size_t n = from.size();
    const std::size_t m = to.size();
    const std::size_t cols = m + 1;
    std::vector<double> dp((n + 1) * cols);
    auto at = [&](std::size_t i, std::size_t j) -> double& { return dp[i * cols + j]; };

    at(0, 0) = 0.0;
    for (std::size_t j = 1; j <= m; ++j) {
        at(0, j) = at(0, j - 1) + model.insertion(to[j - 1]);
    }
    for (std::size_t i = 1; i <= n; ++i) {
        const Symbol a = from[i - 1];
        at(i, 0) = at(i - 1, 0) + model.deletion(a);
        for (std::size_t j = 1; j <= m; ++j) {
            const Symbol b = to[j - 1];
            at(i, j) = std::min({at(i - 1, j - 1) + model.substitution(a, b),
                                 at(i - 1, j) + model.deletion(a),
                                 at(i, j - 1) + model.insertion(b)});
        }
    }

    const Symbol eps = model.epsilon();
    EditScript script;
    script.source = from;
    script.target = to;
    std::size_t i = n;
    std::size_t j = m;
    while (i > 0 || j > 0) {
        const double here = at(i, j);
        if (i > 0 && j > 0 &&
            costs_equal(here, at(i - 1, j - 1) + model.substitution(from[i - 1], to[j - 1]))) {
            if (from[i - 1] != to[j - 1]) {
                script.ops.push_back(substitution_op(i - 1, from[i - 1], to[j - 1]));
            }
            --i;
            --j;
        } else if (i > 0 && costs_equal(here, at(i - 1, j) + model.deletion(from[i - 1]))) {
            script.ops.push_back(deletion_op(i - 1, from[i - 1], eps));
            --i;
        } else {
            script.ops.push_back(insertion_op(i, to[j - 1], eps));
            --j;
        }
    }
    std::reverse(script.ops.begin(), script.ops.end());
    for (const auto& op : script.ops) {
        script.total_cost += op_cost(op, model);
    }
    return {at(n, m), std::move(script)};
}

Sequence apply_op(const Sequence& s, const EditOp& op) {
    Sequence out = s;
    switch (op.kind) {
        case OpKind::substitution:
        case OpKind::deletion:
            if (op.position >= s.size()) {
                throw InputError("edit position " + std::to_string(op.position) +
                                 " out of range for length " + std::to_string(s.size()));
            }
            if (s[op.position] != op.from) {
                throw InputError("edit source symbol does not match position " +
                                 std::to_string(op.position));
            }
            if (op.kind == OpKind::substitution) {
                out[op.position] = op.to;
            } else {
                out.erase(out.begin() + static_cast<std::ptrdiff_t>(op.position));
            }
            break;
        case OpKind::insertion:
            if (op.position > s.size()) {
                throw InputError("insertion gap " + std::to_string(op.position) +
                                 " out of range for length " + std::to_string(s.size()));
            }
            out.insert(out.begin() + static_cast<std::ptrdiff_t>(op.position), op.to);
            break;
    }
    return out;
}

Sequence apply_script(const Sequence& s, const EditScript& script) {
    if (s != script.source) {
        throw StructuralError("script source does not match the input string");
    }
    // Key: (coordinate, gap-before-symbol); insertions at the same gap keep
    // their listed order.
    auto key = [](const EditOp& op) {
        return std::pair{op.position, op.kind == OpKind::insertion ? 0 : 1};
    };
    for (std::size_t k = 1; k < script.ops.size(); ++k) {
        if (key(script.ops[k]) < key(script.ops[k - 1]) ||
            (key(script.ops[k]) == key(script.ops[k - 1]) &&
             script.ops[k].kind != OpKind::insertion)) {
            throw StructuralError("script operations are not in source order");
        }
    }
    Sequence out = s;
    try {
        for (auto it = script.ops.rbegin(); it != script.ops.rend(); ++it) {
            out = apply_op(out, *it);
        }
    } catch (const InputError& e) {
        throw StructuralError(std::string("inconsistent script: ") + e.what());
    }
    if (out != script.target) {
        throw StructuralError("script does not produce its target");
    }
    return out;
}

}  // namespace median
