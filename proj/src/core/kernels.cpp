#include "core/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "core/error.hpp"
#include "core/feasibility.hpp"

namespace margin_mcmc {

namespace {

void require_space(const std::shared_ptr<const StateSpace>& space) {
    if (!space || space->size() == 0) {
        throw Error(ErrorCode::invalid_argument, "kernel requires a non-empty state space");
    }
}

std::vector<Rational> zero_entries(std::size_t n) {
    return std::vector<Rational>(n * n, Rational{});
}

// Diagonal entries as the complement of each row's off-diagonal mass.
void close_rows(std::vector<Rational>& entries, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        Rational off{};
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) off += entries[i * n + j];
        }
        entries[i * n + i] = Rational{1} - off;
    }
}

}  // namespace

TransitionMatrix::TransitionMatrix(std::shared_ptr<const StateSpace> space,
                                   std::vector<Rational> entries)
    : space_(std::move(space)), entries_(std::move(entries)) {
    std::size_t n = space_->size();
    if (entries_.size() != n * n) {
        throw Error(ErrorCode::internal, "kernel entry count does not match the space");
    }
    for (std::size_t i = 0; i < n; ++i) {
        Rational row_sum{};
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& p = entries_[i * n + j];
            if (p < Rational{0} || p > Rational{1}) {
                throw Error(ErrorCode::internal, "kernel entry outside [0,1]");
            }
            row_sum += p;
        }
        if (row_sum != Rational{1}) {
            throw Error(ErrorCode::internal,
                        "kernel row " + std::to_string(i) + " sums to " +
                            row_sum.to_string() + ", not 1");
        }
    }
}

std::optional<SwapQuad> swap_difference(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return std::nullopt;
    std::vector<std::pair<int, int>> diff;
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            if (a.get(i, j) != b.get(i, j)) {
                diff.emplace_back(i, j);
                if (diff.size() > 4) return std::nullopt;
            }
        }
    }
    if (diff.size() != 4) return std::nullopt;
    int r1 = diff[0].first, c1 = diff[0].second;
    int r2 = -1, c2 = -1;
    for (auto [i, j] : diff) {
        if (i != r1) r2 = i;
        if (j != c1) c2 = j;
    }
    if (r2 < 0 || c2 < 0) return std::nullopt;
    // The four cells must be exactly the crossing of {r1,r2} x {c1,c2}.
    std::vector<std::pair<int, int>> expected = {{r1, c1}, {r1, c2}, {r2, c1}, {r2, c2}};
    std::sort(diff.begin(), diff.end());
    std::sort(expected.begin(), expected.end());
    if (diff != expected) return std::nullopt;
    SwapQuad q{r1, r2, c1, c2};
    if (!a.is_checkerboard(q)) return std::nullopt;
    return q;
}

TransitionMatrix build_swap_kernel(std::shared_ptr<const StateSpace> space) {
    require_space(space);
    std::size_t n = space->size();
    int rows = static_cast<int>(space->margins.rows.size());
    int cols = static_cast<int>(space->margins.cols.size());
    if (rows < 2 || cols < 2) {
        throw Error(ErrorCode::invalid_argument,
                    "swap kernel needs at least two rows and two columns");
    }
    std::int64_t quad_count = (static_cast<std::int64_t>(rows) * (rows - 1) / 2) *
                              (static_cast<std::int64_t>(cols) * (cols - 1) / 2);
    Rational move{1, quad_count};

    auto entries = zero_entries(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (swap_difference(space->states[i], space->states[j])) {
                entries[i * n + j] = move;
                entries[j * n + i] = move;
            }
        }
    }
    close_rows(entries, n);
    return TransitionMatrix(std::move(space), std::move(entries));
}

namespace {

// All size-k subsets of `pool` in lexicographic order.
void for_each_subset(const std::vector<int>& pool, int k,
                     const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int from, int need) {
        if (need == 0) {
            visit(current);
            return;
        }
        for (int idx = from; idx <= static_cast<int>(pool.size()) - need; ++idx) {
            current.push_back(pool[idx]);
            rec(idx + 1, need - 1);
            current.pop_back();
        }
    };
    rec(0, k);
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
    }
    return result;
}

}  // namespace

TransitionMatrix build_curveball_kernel(std::shared_ptr<const StateSpace> space) {
    require_space(space);
    std::size_t n = space->size();
    int rows = static_cast<int>(space->margins.rows.size());
    if (rows < 2) {
        throw Error(ErrorCode::invalid_argument, "curveball kernel needs at least two rows");
    }
    Rational pair_weight{2, static_cast<std::int64_t>(rows) * (rows - 1)};

    auto entries = zero_entries(n);
    for (std::size_t s = 0; s < n; ++s) {
        const BinaryMatrix& state = space->states[s];
        for (int a = 0; a < rows; ++a) {
            for (int b = a + 1; b < rows; ++b) {
                std::vector<int> only_a, only_b;
                for (int j = 0; j < state.cols(); ++j) {
                    bool in_a = state.get(a, j), in_b = state.get(b, j);
                    if (in_a && !in_b) only_a.push_back(j);
                    if (in_b && !in_a) only_b.push_back(j);
                }
                if (only_a.empty() || only_b.empty()) {
                    entries[s * n + s] += pair_weight;
                    continue;
                }
                std::vector<int> pool;
                std::merge(only_a.begin(), only_a.end(), only_b.begin(), only_b.end(),
                           std::back_inserter(pool));
                std::int64_t subset_count =
                    binomial(static_cast<int>(pool.size()), static_cast<int>(only_a.size()));
                Rational choice = pair_weight / Rational{subset_count - 1};
                for_each_subset(pool, static_cast<int>(only_a.size()),
                                [&](const std::vector<int>& selected) {
                    if (selected == only_a) return;  // identity trade excluded
                    BinaryMatrix target = state;
                    std::size_t cursor = 0;
                    for (int j : pool) {
                        bool want_a = cursor < selected.size() && selected[cursor] == j;
                        if (want_a) ++cursor;
                        target.set(a, j, want_a);
                        target.set(b, j, !want_a);
                    }
                    entries[s * n + space->index_of(target)] += choice;
                });
            }
        }
    }
    // All mass was placed explicitly, so the constructor's exact row-sum
    // check doubles as a check on the enumeration itself.
    return TransitionMatrix(std::move(space), std::move(entries));
}

Rational rectangle_pair_probability(const BinaryMatrix& a, const BinaryMatrix& b) {
    auto quad = swap_difference(a, b);
    if (!quad) {
        throw Error(ErrorCode::invalid_argument,
                    "matrices do not differ in exactly one checkerboard unit");
    }
    std::int64_t m = a.rows(), n = a.cols();
    std::int64_t zr1 = n - a.row_sums()[quad->r1];
    std::int64_t zr2 = n - a.row_sums()[quad->r2];
    std::int64_t oc1 = a.col_sums()[quad->c1];
    std::int64_t oc2 = a.col_sums()[quad->c2];
    // Quad rows always contain a 0 and quad columns a 1, so no factor is 0.
    Rational sum = Rational{1, zr1 * oc2} + Rational{1, oc2 * zr2} +
                   Rational{1, zr2 * oc1} + Rational{1, oc1 * zr1};
    return Rational{1, m * n} * sum;
}

namespace {

// Route (b): exhaustive enumeration of every starting cell and every
// conditional choice of the Rectangle Loop step, with exact probabilities.
std::vector<Rational> rectangle_entries_by_enumeration(const StateSpace& space) {
    std::size_t n = space.size();
    auto entries = zero_entries(n);
    int rows = static_cast<int>(space.margins.rows.size());
    int cols = static_cast<int>(space.margins.cols.size());
    Rational cell_weight{1, static_cast<std::int64_t>(rows) * cols};

    for (std::size_t s = 0; s < n; ++s) {
        const BinaryMatrix& state = space.states[s];
        const auto& row_sums = state.row_sums();
        const auto& col_sums = state.col_sums();
        for (int r1 = 0; r1 < rows; ++r1) {
            for (int c1 = 0; c1 < cols; ++c1) {
                if (state.get(r1, c1)) {
                    Rational p_col{1, cols - row_sums[r1]};
                    for (int c2 = 0; c2 < cols; ++c2) {
                        if (state.get(r1, c2)) continue;
                        Rational p_row{1, col_sums[c2]};
                        for (int r2 = 0; r2 < rows; ++r2) {
                            if (!state.get(r2, c2)) continue;
                            Rational p = cell_weight * p_col * p_row;
                            SwapQuad q{r1, r2, c1, c2};
                            if (state.is_checkerboard(q)) {
                                entries[s * n + space.index_of(state.swapped(q))] += p;
                            } else {
                                entries[s * n + s] += p;
                            }
                        }
                    }
                } else {
                    Rational p_row{1, col_sums[c1]};
                    for (int r2 = 0; r2 < rows; ++r2) {
                        if (!state.get(r2, c1)) continue;
                        Rational p_col{1, cols - row_sums[r2]};
                        for (int c2 = 0; c2 < cols; ++c2) {
                            if (state.get(r2, c2)) continue;
                            Rational p = cell_weight * p_row * p_col;
                            SwapQuad q{r1, r2, c1, c2};
                            if (state.is_checkerboard(q)) {
                                entries[s * n + space.index_of(state.swapped(q))] += p;
                            } else {
                                entries[s * n + s] += p;
                            }
                        }
                    }
                }
            }
        }
    }
    return entries;
}

// Route (a): closed form between swappable pairs, diagonal by complement.
std::vector<Rational> rectangle_entries_by_closed_form(const StateSpace& space) {
    std::size_t n = space.size();
    auto entries = zero_entries(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (swap_difference(space.states[i], space.states[j])) {
                Rational p = rectangle_pair_probability(space.states[i], space.states[j]);
                entries[i * n + j] = p;
                entries[j * n + i] = rectangle_pair_probability(space.states[j], space.states[i]);
            }
        }
    }
    close_rows(entries, n);
    return entries;
}

}  // namespace

TransitionMatrix build_rectangle_kernel(std::shared_ptr<const StateSpace> space) {
    require_space(space);
    if (is_degenerate(space->margins)) {
        throw Error(ErrorCode::invalid_argument,
                    "rectangle loop kernel requires non-degenerate margins; strip first");
    }
    auto enumerated = rectangle_entries_by_enumeration(*space);
    auto closed = rectangle_entries_by_closed_form(*space);
    if (enumerated != closed) {
        throw Error(ErrorCode::internal,
                    "rectangle loop kernel: closed form and enumeration disagree");
    }
    return TransitionMatrix(std::move(space), std::move(enumerated));
}

TransitionMatrix build_kernel(std::shared_ptr<const StateSpace> space, Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::swap: return build_swap_kernel(std::move(space));
        case Algorithm::curveball: return build_curveball_kernel(std::move(space));
        case Algorithm::rectangle_loop: return build_rectangle_kernel(std::move(space));
    }
    throw Error(ErrorCode::internal, "unhandled algorithm");
}

StationarityResult check_stationarity(const TransitionMatrix& kernel) {
    std::size_t n = kernel.size();
    Rational pi{1, static_cast<std::int64_t>(n)};
    Rational max_residual{};
    for (std::size_t j = 0; j < n; ++j) {
        Rational mass{};
        for (std::size_t i = 0; i < n; ++i) {
            mass += pi * kernel.at(i, j);
        }
        Rational residual = (mass - pi).abs();
        if (residual > max_residual) max_residual = residual;
    }
    return {max_residual.is_zero(), max_residual};
}

bool is_symmetric(const TransitionMatrix& kernel) {
    std::size_t n = kernel.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (kernel.at(i, j) != kernel.at(j, i)) return false;
        }
    }
    return true;
}

DominanceResult check_peskun_dominance(const TransitionMatrix& first,
                                       const TransitionMatrix& second) {
    if (first.size() != second.size() ||
        first.space().margins != second.space().margins) {
        throw Error(ErrorCode::invalid_argument,
                    "Peskun comparison requires kernels on the same state space");
    }
    std::size_t n = first.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (first.at(i, j) < second.at(i, j)) {
                return {false, std::make_pair(i, j)};
            }
        }
    }
    return {true, std::nullopt};
}

double tv_from_uniform(const std::vector<double>& distribution) {
    double pi = 1.0 / static_cast<double>(distribution.size());
    double sum = 0.0;
    for (double p : distribution) sum += std::abs(p - pi);
    return 0.5 * sum;
}

std::vector<double> tv_distance_curve(const TransitionMatrix& kernel, int k_max) {
    if (k_max < 1) {
        throw Error(ErrorCode::invalid_argument, "k_max must be positive");
    }
    std::size_t n = kernel.size();
    std::vector<double> base(n * n), power(n * n, 0.0), next(n * n);
    for (std::size_t i = 0; i < n * n; ++i) {
        base[i] = kernel.at(i / n, i % n).to_double();
    }
    for (std::size_t i = 0; i < n; ++i) power[i * n + i] = 1.0;

    std::vector<double> curve;
    curve.reserve(k_max);
    for (int k = 1; k <= k_max; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                double sum = 0.0;
                for (std::size_t l = 0; l < n; ++l) {
                    sum += power[i * n + l] * base[l * n + j];
                }
                next[i * n + j] = sum;
            }
        }
        std::swap(power, next);
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<double> row(power.begin() + i * n, power.begin() + (i + 1) * n);
            worst = std::max(worst, tv_from_uniform(row));
        }
        curve.push_back(worst);
    }
    return curve;
}

}  // namespace margin_mcmc
