#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "median/alphabet.hpp"

namespace median {

inline constexpr double kCostTolerance = 1e-9;

inline bool costs_equal(double a, double b) {
    return (a > b ? a - b : b - a) <= kCostTolerance;
}

enum class CostProperty { non_negative, zero_diagonal, symmetry, triangle };

struct CostViolation {
    CostProperty property;
    Symbol a;
    Symbol b;
    Symbol c;  // only meaningful for triangle violations

    friend bool operator==(const CostViolation&, const CostViolation&) = default;
};

std::string to_string(const CostViolation& v);

// (|S|+1) x (|S|+1) matrix of edit costs, row = source symbol, column =
// target symbol, with the empty symbol as the last index. The (eps, eps)
// entry is not an edit operation and is stored as zero.
class CostModel {
public:
    CostModel() = default;
    // `costs` is row-major with dimension (alphabet_size+1)^2.
    CostModel(std::size_t alphabet_size, std::vector<double> costs);

    std::size_t alphabet_size() const { return alphabet_size_; }
    std::size_t dimension() const { return alphabet_size_ + 1; }
    Symbol epsilon() const { return static_cast<Symbol>(alphabet_size_); }

    double cost(Symbol from, Symbol to) const { return costs_[from * dimension() + to]; }
    double substitution(Symbol from, Symbol to) const { return cost(from, to); }
    double insertion(Symbol to) const { return cost(epsilon(), to); }
    double deletion(Symbol from) const { return cost(from, epsilon()); }

    // True when the matrix passed every check in validate_cost_model.
    bool metric_validated() const { return metric_validated_; }

    const std::vector<double>& raw() const { return costs_; }

    // Set when every entry is a whole number below 2^20; the same matrix is
    // then also available as integers for exact fast arithmetic.
    bool integral() const { return !int_costs_.empty(); }
    const std::vector<std::int32_t>& raw_integral() const { return int_costs_; }
    double max_cost() const { return max_cost_; }

    CostModel scaled(double factor) const;

    // All off-diagonal entries 1.
    static CostModel unit(std::size_t alphabet_size);
    // Substitution cost is the circular distance between symbol codes,
    // insertion and deletion cost `indel`.
    static CostModel circular(std::size_t alphabet_size, double indel);

private:
    std::size_t alphabet_size_ = 0;
    std::vector<double> costs_;
    std::vector<std::int32_t> int_costs_;
    double max_cost_ = 0.0;
    bool metric_validated_ = false;
};

// Empty iff the model is non-negative, has a zero diagonal, is symmetric and
// satisfies the triangle inequality over every triple including eps.
std::vector<CostViolation> validate_cost_model(const CostModel& model);

// Same checks on a raw row-major matrix; throws StructuralError when the
// size is not (alphabet_size+1)^2.
std::vector<CostViolation> validate_cost_matrix(std::size_t alphabet_size,
                                                const std::vector<double>& costs);

}  // namespace median
