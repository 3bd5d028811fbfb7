#include "median/cost_model.hpp"

#include <algorithm>
#include <cmath>

#include "median/errors.hpp"

namespace median {

namespace {

const char* property_name(CostProperty p) {
    switch (p) {
        case CostProperty::non_negative: return "non-negativity";
        case CostProperty::zero_diagonal: return "zero diagonal";
        case CostProperty::symmetry: return "symmetry";
        case CostProperty::triangle: return "triangle inequality";
    }
    return "?";
}

}  // namespace

std::string to_string(const CostViolation& v) {
    std::string out = property_name(v.property);
    out += " (" + std::to_string(v.a) + "," + std::to_string(v.b);
    if (v.property == CostProperty::triangle) {
        out += "," + std::to_string(v.c);
    }
    return out + ")";
}

std::vector<CostViolation> validate_cost_matrix(std::size_t alphabet_size,
                                                const std::vector<double>& costs) {
    const std::size_t dim = alphabet_size + 1;
    if (costs.size() != dim * dim) {
        throw StructuralError("cost matrix has " + std::to_string(costs.size()) +
                              " entries, expected " + std::to_string(dim * dim));
    }
    const auto eps = alphabet_size;
    auto at = [&](std::size_t a, std::size_t b) {
        return (a == eps && b == eps) ? 0.0 : costs[a * dim + b];
    };
    auto sym = [](std::size_t s) { return static_cast<Symbol>(s); };

    std::vector<CostViolation> out;
    for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t b = 0; b < dim; ++b) {
            if (a == eps && b == eps) {
                continue;
            }
            if (!(at(a, b) >= 0.0) || !std::isfinite(at(a, b))) {
                out.push_back({CostProperty::non_negative, sym(a), sym(b), 0});
            }
        }
    }
    for (std::size_t a = 0; a < alphabet_size; ++a) {
        if (!costs_equal(at(a, a), 0.0)) {
            out.push_back({CostProperty::zero_diagonal, sym(a), sym(a), 0});
        }
    }
    for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t b = a + 1; b < dim; ++b) {
            if (!costs_equal(at(a, b), at(b, a))) {
                out.push_back({CostProperty::symmetry, sym(a), sym(b), 0});
            }
        }
    }
    for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t b = 0; b < dim; ++b) {
            for (std::size_t c = 0; c < dim; ++c) {
                if (at(a, c) > at(a, b) + at(b, c) + kCostTolerance) {
                    out.push_back({CostProperty::triangle, sym(a), sym(b), sym(c)});
                }
            }
        }
    }
    return out;
}

std::vector<CostViolation> validate_cost_model(const CostModel& model) {
    return validate_cost_matrix(model.alphabet_size(), model.raw());
}

CostModel::CostModel(std::size_t alphabet_size, std::vector<double> costs)
    : alphabet_size_(alphabet_size), costs_(std::move(costs)) {
    if (alphabet_size_ == 0) {
        throw StructuralError("cost model needs a non-empty alphabet");
    }
    const auto violations = validate_cost_matrix(alphabet_size_, costs_);
    for (const auto& v : violations) {
        if (v.property == CostProperty::non_negative || v.property == CostProperty::zero_diagonal) {
            throw InputError("invalid cost model: " + to_string(v));
        }
    }
    costs_[alphabet_size_ * dimension() + alphabet_size_] = 0.0;
    metric_validated_ = violations.empty();
    const bool whole = std::all_of(costs_.begin(), costs_.end(), [](double c) {
        return c >= 0.0 && c < 0x1.0p20 && std::floor(c) == c;
    });
    for (double c : costs_) {
        max_cost_ = std::max(max_cost_, c);
    }
    if (whole) {
        int_costs_.assign(costs_.begin(), costs_.end());
    }
}

CostModel CostModel::scaled(double factor) const {
    std::vector<double> c = costs_;
    for (double& x : c) {
        x *= factor;
    }
    return CostModel(alphabet_size_, std::move(c));
}

CostModel CostModel::unit(std::size_t alphabet_size) {
    const std::size_t dim = alphabet_size + 1;
    std::vector<double> c(dim * dim, 1.0);
    for (std::size_t i = 0; i < dim; ++i) {
        c[i * dim + i] = 0.0;
    }
    return CostModel(alphabet_size, std::move(c));
}

CostModel CostModel::circular(std::size_t alphabet_size, double indel) {
    const std::size_t dim = alphabet_size + 1;
    std::vector<double> c(dim * dim, indel);
    for (std::size_t a = 0; a < alphabet_size; ++a) {
        for (std::size_t b = 0; b < alphabet_size; ++b) {
            const std::size_t diff = a > b ? a - b : b - a;
            c[a * dim + b] = static_cast<double>(std::min(diff, alphabet_size - diff));
        }
    }
    c[dim * dim - 1] = 0.0;
    return CostModel(alphabet_size, std::move(c));
}

}  // namespace median
