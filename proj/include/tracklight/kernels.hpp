#pragma once

// Data-parallel inner loops. Every kernel has a serial reference in
// kernels::serial and an OpenMP variant in kernels::omp. Both run the same
// per-column (per-player) routine with a fixed summation order, so their
// outputs are bit-identical for any thread count.
//
// Matrices are row-major `rows x cols` spans. Missing values are NaN.

#include <cstddef>
#include <span>
#include <vector>

#include "tracklight/filter.hpp"

namespace tracklight {

enum class Exec { Serial, Parallel };

namespace kernels {

namespace serial {

/// Zero-phase filter of every column, per contiguous non-missing run; runs of
/// length <= padlen become missing.
std::vector<double> filter_columns(std::span<const double> matrix, std::size_t rows, std::size_t cols,
                                   std::span<const SecondOrderSection> sections, std::size_t padlen);

/// Speed of each player from an interleaved (x, y) matrix: central differences
/// inside, one-sided at both ends.
std::vector<double> speed(std::span<const double> coords, std::size_t frames, std::size_t players, double framerate);

/// Signed rate of change of each column, same stencil as speed().
std::vector<double> rate_of_change(std::span<const double> values, std::size_t frames, std::size_t cols,
                                   double framerate);

std::vector<double> metabolic_power(std::span<const double> speed, std::span<const double> acceleration,
                                    double terrain_factor, double gravity);

/// Approximate entropy of each gap-free series with tolerance tolerances[i].
std::vector<double> approximate_entropy(std::span<const std::vector<double>> series, int m,
                                        std::span<const double> tolerances);

}  // namespace serial

namespace omp {

std::vector<double> filter_columns(std::span<const double> matrix, std::size_t rows, std::size_t cols,
                                   std::span<const SecondOrderSection> sections, std::size_t padlen);
std::vector<double> speed(std::span<const double> coords, std::size_t frames, std::size_t players, double framerate);
std::vector<double> rate_of_change(std::span<const double> values, std::size_t frames, std::size_t cols,
                                   double framerate);
std::vector<double> metabolic_power(std::span<const double> speed, std::span<const double> acceleration,
                                    double terrain_factor, double gravity);
std::vector<double> approximate_entropy(std::span<const std::vector<double>> series, int m,
                                        std::span<const double> tolerances);

}  // namespace omp

/// Energy cost of accelerated running in J/(kg m) at equivalent slope `es`,
/// before the equivalent-mass and terrain factors.
double running_energy_cost(double es) noexcept;

/// Threads an OpenMP parallel region would use (1 when built without OpenMP).
int max_threads() noexcept;

}  // namespace kernels
}  // namespace tracklight
