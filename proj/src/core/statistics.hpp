#ifndef MARGIN_MCMC_STATISTICS_HPP
#define MARGIN_MCMC_STATISTICS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/binary_matrix.hpp"
#include "core/chains.hpp"

namespace margin_mcmc {

// Mean squared off-diagonal entry of R R^T, where R collects the rows of A
// that contain both a 0 and a 1. Rows of constant value co-occur with every
// row by a margin-determined amount and carry no signal, so they are left
// out of both the sum and the normalization. Inner products are integral;
// the single division happens last.
double s_bar_squared(const BinaryMatrix& a);

// Fraction of cells where `current` differs from `initial`.
double perturbation_score(const BinaryMatrix& current, const BinaryMatrix& initial);

// Per-iteration record of a scalar statistic with Welford running moments.
class StatTrace {
public:
    explicit StatTrace(std::string name = "") : name_(std::move(name)) {}

    void add(std::uint64_t iteration, double value);

    const std::string& name() const { return name_; }
    const std::vector<std::pair<std::uint64_t, double>>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    double mean() const { return mean_; }
    // Sample standard deviation (n-1 denominator); 0 before two values.
    double stddev() const;

private:
    std::string name_;
    std::vector<std::pair<std::uint64_t, double>> values_;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

enum class Statistic { s_bar_squared, perturbation };

Statistic statistic_from_name(const std::string& name);
std::string statistic_name(Statistic s);

struct EstimateConfig {
    Algorithm algorithm = Algorithm::swap;
    std::uint64_t iterations = 0;
    std::uint64_t burn_in = 0;
    std::uint64_t thin = 1;
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
};

// Runs the chain from `start`, evaluating the statistic on every retained
// full-size snapshot. Perturbation is measured against `start`.
StatTrace estimate_statistic(const BinaryMatrix& start, Statistic statistic,
                             const EstimateConfig& config);

struct EfficiencyReport {
    std::uint64_t iterations = 0;
    std::uint64_t swaps = 0;
    double seconds = 0.0;
    std::optional<double> time_per_swap;  // empty when swaps == 0
};

EfficiencyReport swap_efficiency_report(const ChainState& final_state, double wall_seconds);

// I.i.d. Bernoulli(p) cells from the stream.
BinaryMatrix random_bernoulli(int rows, int cols, double fill, RngStream& rng);

struct BenchmarkRow {
    std::string algorithm;
    double fill = 0.0;
    int rows = 0;
    int cols = 0;
    std::uint64_t seed = 0;
    std::uint64_t iterations = 0;
    std::uint64_t swaps = 0;
    double seconds = 0.0;
    std::optional<double> time_per_swap;
};

// Generates a Bernoulli(fill) matrix, strips degenerate lines, and times
// `iterations` steps of the algorithm on the reduced instance.
BenchmarkRow run_benchmark(int rows, int cols, double fill, std::uint64_t iterations,
                           Algorithm algorithm, std::uint64_t seed, std::uint64_t stream);

}  // namespace margin_mcmc

#endif
