#pragma once
// Independent reference implementations used only by tests. None of these
// call into the library's distance or refinement code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <queue>
#include <random>
#include <vector>

#include "median/alphabet.hpp"
#include "median/cost_model.hpp"

namespace median::oracle {

inline double raw_cost(const CostModel& m, std::size_t from, std::size_t to) {
    return m.raw()[from * m.dimension() + to];
}

// Enumerates every alignment of `a` against `b` as an explicit list of
// match/substitute, delete and insert steps (no memoisation) and returns the
// cheapest total. Exponential; keep inputs short.
inline double alignment_enumeration(const Sequence& a, const Sequence& b, const CostModel& m) {
    const std::size_t eps = m.alphabet_size();
    double best = std::numeric_limits<double>::infinity();
    std::function<void(std::size_t, std::size_t, double)> walk = [&](std::size_t i, std::size_t j,
                                                                     double acc) {
        if (acc >= best) return;
        if (i == a.size() && j == b.size()) {
            best = acc;
            return;
        }
        if (i < a.size() && j < b.size()) walk(i + 1, j + 1, acc + raw_cost(m, a[i], b[j]));
        if (i < a.size()) walk(i + 1, j, acc + raw_cost(m, a[i], eps));
        if (j < b.size()) walk(i, j + 1, acc + raw_cost(m, eps, b[j]));
    };
    walk(0, 0, 0.0);
    return best;
}

// Shortest paths in the graph whose nodes are all strings of length
// <= max_len over `sigma` symbols and whose edges are single edit operations
// weighted by their cost. With a metric cost model this is the edit
// distance (an optimal sequence never needs a string longer than both
// endpoints).
class StringGraph {
public:
    StringGraph(std::size_t sigma, std::size_t max_len, const CostModel& model)
        : sigma_(sigma), max_len_(max_len), model_(model) {
        offsets_.push_back(0);
        std::size_t count = 1;
        for (std::size_t len = 0; len <= max_len_; ++len) {
            offsets_.push_back(offsets_.back() + count);
            count *= sigma_;
        }
    }

    std::size_t node_count() const { return offsets_.back(); }

    std::size_t index(const Sequence& s) const {
        std::size_t code = 0;
        for (Symbol c : s) code = code * sigma_ + c;
        return offsets_[s.size()] + code;
    }

    Sequence string_at(std::size_t node) const {
        std::size_t len = 0;
        while (offsets_[len + 1] <= node) ++len;
        std::size_t code = node - offsets_[len];
        Sequence s(len);
        for (std::size_t k = len; k-- > 0;) {
            s[k] = static_cast<Symbol>(code % sigma_);
            code /= sigma_;
        }
        return s;
    }

    // Distances from `source` to every node.
    std::vector<double> dijkstra(const Sequence& source) const {
        const double inf = std::numeric_limits<double>::infinity();
        std::vector<double> dist(node_count(), inf);
        using Item = std::pair<double, std::size_t>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
        dist[index(source)] = 0.0;
        heap.emplace(0.0, index(source));
        const std::size_t eps = model_.alphabet_size();
        while (!heap.empty()) {
            auto [d, node] = heap.top();
            heap.pop();
            if (d > dist[node]) continue;
            const Sequence s = string_at(node);
            auto relax = [&](const Sequence& t, double w) {
                const std::size_t ti = index(t);
                if (d + w < dist[ti]) {
                    dist[ti] = d + w;
                    heap.emplace(dist[ti], ti);
                }
            };
            Sequence t;
            for (std::size_t p = 0; p < s.size(); ++p) {
                for (std::size_t c = 0; c < sigma_; ++c) {
                    if (c == s[p]) continue;
                    t = s;
                    t[p] = static_cast<Symbol>(c);
                    relax(t, raw_cost(model_, s[p], c));
                }
                t = s;
                t.erase(t.begin() + static_cast<std::ptrdiff_t>(p));
                relax(t, raw_cost(model_, s[p], eps));
            }
            if (s.size() < max_len_) {
                for (std::size_t p = 0; p <= s.size(); ++p) {
                    for (std::size_t c = 0; c < sigma_; ++c) {
                        t = s;
                        t.insert(t.begin() + static_cast<std::ptrdiff_t>(p), static_cast<Symbol>(c));
                        relax(t, raw_cost(model_, eps, c));
                    }
                }
            }
        }
        return dist;
    }

private:
    std::size_t sigma_;
    std::size_t max_len_;
    const CostModel& model_;
    std::vector<std::size_t> offsets_;
};

// All strings of length 0..max_len over sigma symbols, shortest first.
inline std::vector<Sequence> all_strings(std::size_t sigma, std::size_t max_len) {
    std::vector<Sequence> out{Sequence{}};
    std::vector<Sequence> layer{Sequence{}};
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<Sequence> next;
        for (const auto& s : layer) {
            for (std::size_t c = 0; c < sigma; ++c) {
                Sequence t = s;
                t.push_back(static_cast<Symbol>(c));
                next.push_back(t);
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

// Random symmetric integer costs in [1, max_cost] closed under shortest
// paths (Floyd-Warshall over all symbols including eps), hence metric.
inline CostModel random_metric_model(std::size_t sigma, std::mt19937_64& rng, int max_cost = 9) {
    const std::size_t dim = sigma + 1;
    std::uniform_int_distribution<int> pick(1, max_cost);
    std::vector<double> c(dim * dim, 0.0);
    for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t b = a + 1; b < dim; ++b) {
            c[a * dim + b] = c[b * dim + a] = pick(rng);
        }
    }
    for (std::size_t k = 0; k < dim; ++k) {
        for (std::size_t a = 0; a < dim; ++a) {
            for (std::size_t b = 0; b < dim; ++b) {
                c[a * dim + b] = std::min(c[a * dim + b], c[a * dim + k] + c[k * dim + b]);
            }
        }
    }
    return CostModel(sigma, std::move(c));
}

// Arbitrary non-negative integer costs, usually not metric.
inline CostModel random_model(std::size_t sigma, std::mt19937_64& rng, int max_cost = 9) {
    const std::size_t dim = sigma + 1;
    std::uniform_int_distribution<int> pick(0, max_cost);
    std::vector<double> c(dim * dim, 0.0);
    for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t b = 0; b < dim; ++b) {
            if (a != b) c[a * dim + b] = pick(rng);
        }
    }
    return CostModel(sigma, std::move(c));
}

inline Sequence random_string(std::size_t sigma, std::size_t min_len, std::size_t max_len,
                              std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> len(min_len, max_len);
    std::uniform_int_distribution<std::size_t> sym(0, sigma - 1);
    Sequence s(len(rng));
    for (auto& c : s) c = static_cast<Symbol>(sym(rng));
    return s;
}

// Exact median over all candidate strings up to max_len, by exhaustive
// evaluation with the alignment oracle's memoised form.
inline double brute_force_median_sum(const std::vector<Sequence>& set, std::size_t sigma,
                                     std::size_t max_len, const CostModel& m) {
    auto memo_distance = [&](const Sequence& a, const Sequence& b) {
        const std::size_t eps = m.alphabet_size();
        std::vector<std::vector<double>> t(a.size() + 1, std::vector<double>(b.size() + 1));
        for (std::size_t i = 0; i <= a.size(); ++i) {
            for (std::size_t j = 0; j <= b.size(); ++j) {
                if (i == 0 && j == 0) { t[i][j] = 0; continue; }
                double best = std::numeric_limits<double>::infinity();
                if (i > 0 && j > 0) best = std::min(best, t[i - 1][j - 1] + raw_cost(m, a[i - 1], b[j - 1]));
                if (i > 0) best = std::min(best, t[i - 1][j] + raw_cost(m, a[i - 1], eps));
                if (j > 0) best = std::min(best, t[i][j - 1] + raw_cost(m, eps, b[j - 1]));
                t[i][j] = best;
            }
        }
        return t[a.size()][b.size()];
    };
    double best = std::numeric_limits<double>::infinity();
    for (const auto& cand : all_strings(sigma, max_len)) {
        double s = 0;
        for (const auto& member : set) s += memo_distance(cand, member);
        best = std::min(best, s);
    }
    return best;
}

}  // namespace median::oracle
