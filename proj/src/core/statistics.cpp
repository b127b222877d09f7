#include "core/statistics.hpp"

#include <chrono>
#include <cmath>

#include "core/error.hpp"
#include "core/feasibility.hpp"

namespace margin_mcmc {

double s_bar_squared(const BinaryMatrix& a) {
    if (a.rows() < 2) {
        throw Error(ErrorCode::invalid_argument, "statistic needs at least two rows");
    }
    std::vector<int> informative;
    for (int i = 0; i < a.rows(); ++i) {
        int r = a.row_sums()[i];
        if (r > 0 && r < a.cols()) informative.push_back(i);
    }
    std::size_t m = informative.size();
    if (m < 2) {
        throw Error(ErrorCode::invalid_argument,
                    "statistic needs at least two rows with both a 0 and a 1");
    }
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            std::uint64_t s = a.row_inner_product(informative[i], informative[j]);
            total += 2 * s * s;  // ordered pairs count both directions
        }
    }
    return static_cast<double>(total) / (static_cast<double>(m) * (m - 1));
}

double perturbation_score(const BinaryMatrix& current, const BinaryMatrix& initial) {
    if (current.rows() != initial.rows() || current.cols() != initial.cols()) {
        throw Error(ErrorCode::invalid_argument,
                    "perturbation score requires matrices of equal shape");
    }
    std::uint64_t diff = 0;
    for (int i = 0; i < current.rows(); ++i) {
        for (int j = 0; j < current.cols(); ++j) {
            diff += current.get(i, j) != initial.get(i, j);
        }
    }
    return static_cast<double>(diff) /
           (static_cast<double>(current.rows()) * current.cols());
}

void StatTrace::add(std::uint64_t iteration, double value) {
    if (!values_.empty() && iteration <= values_.back().first) {
        throw Error(ErrorCode::invalid_argument, "trace iterations must strictly increase");
    }
    values_.emplace_back(iteration, value);
    double n = static_cast<double>(values_.size());
    double delta = value - mean_;
    mean_ += delta / n;
    m2_ += delta * (value - mean_);
}

double StatTrace::stddev() const {
    if (values_.size() < 2) return 0.0;
    return std::sqrt(m2_ / (static_cast<double>(values_.size()) - 1.0));
}

Statistic statistic_from_name(const std::string& name) {
    if (name == "s2") return Statistic::s_bar_squared;
    if (name == "perturbation") return Statistic::perturbation;
    throw Error(ErrorCode::invalid_argument,
                "unknown statistic '" + name + "' (valid: s2, perturbation)");
}

std::string statistic_name(Statistic s) {
    return s == Statistic::s_bar_squared ? "s2" : "perturbation";
}

StatTrace estimate_statistic(const BinaryMatrix& start, Statistic statistic,
                             const EstimateConfig& config) {
    StatTrace trace(statistic_name(statistic));
    auto evaluate = [&](const BinaryMatrix& snapshot) {
        return statistic == Statistic::s_bar_squared
                   ? s_bar_squared(snapshot)
                   : perturbation_score(snapshot, start);
    };
    run_chain(start, config.algorithm, config.iterations,
              RngStream(config.seed, config.stream), config.thin, config.burn_in,
              [&](const BinaryMatrix& snapshot, std::uint64_t iteration) {
                  trace.add(iteration, evaluate(snapshot));
              });
    return trace;
}

EfficiencyReport swap_efficiency_report(const ChainState& final_state, double wall_seconds) {
    EfficiencyReport report;
    report.iterations = final_state.iteration;
    report.swaps = final_state.successful_swaps;
    report.seconds = wall_seconds;
    if (report.swaps > 0) {
        report.time_per_swap = wall_seconds / static_cast<double>(report.swaps);
    }
    return report;
}

BinaryMatrix random_bernoulli(int rows, int cols, double fill, RngStream& rng) {
    if (rows < 1 || cols < 1) {
        throw Error(ErrorCode::invalid_argument, "matrix dimensions must be positive");
    }
    if (!(fill >= 0.0 && fill <= 1.0)) {
        throw Error(ErrorCode::invalid_argument, "fill must lie in [0,1]");
    }
    BinaryMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            if (rng.bernoulli(fill)) m.set(i, j, true);
        }
    }
    return m;
}

BenchmarkRow run_benchmark(int rows, int cols, double fill, std::uint64_t iterations,
                           Algorithm algorithm, std::uint64_t seed, std::uint64_t stream) {
    RngStream fill_rng(seed, stream);
    BinaryMatrix full = random_bernoulli(rows, cols, fill, fill_rng);
    BinaryMatrix reduced = strip_degenerate(full).reduced;

    BenchmarkRow row;
    row.algorithm = algorithm_name(algorithm);
    row.fill = fill;
    row.rows = rows;
    row.cols = cols;
    row.seed = seed;
    row.iterations = iterations;
    if (reduced.empty()) {
        return row;  // nothing left to mix; zero swaps, undefined time per swap
    }

    Chain chain(reduced, algorithm, RngStream(seed, stream + 1));
    auto begin = std::chrono::steady_clock::now();
    chain.run(iterations);
    auto end = std::chrono::steady_clock::now();
    row.seconds = std::chrono::duration<double>(end - begin).count();
    row.swaps = chain.successful_swaps();
    if (row.swaps > 0) {
        row.time_per_swap = row.seconds / static_cast<double>(row.swaps);
    }
    return row;
}

}  // namespace margin_mcmc
