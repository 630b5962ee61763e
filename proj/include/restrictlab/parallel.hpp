#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace restrictlab {

/// Worker count: RESTRICTLAB_THREADS when set to a positive integer,
/// otherwise std::thread::hardware_concurrency().
std::size_t thread_count();

/// Overrides thread_count() for the calling process; 0 restores the default.
void set_thread_count(std::size_t threads);

/// Calls body(i) for every i in [0, count) on up to thread_count() threads.
/// Each index runs exactly once; the first exception thrown is rethrown
/// after all workers stop.
template <class Body>
void parallel_for(std::size_t count, Body&& body);

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Seed for the random stream identified by (seed, stream, index). Streams
/// with distinct keys are independent; the value does not depend on the
/// thread that asks for it.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) noexcept;

using Rng = std::mt19937_64;

Rng make_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/// Standard complex Gaussian: real and imaginary parts N(0, 1/2).
std::complex<double> complex_gaussian(Rng& rng);

/// k distinct values from [0, n), ascending.
std::vector<std::size_t> random_subset(Rng& rng, std::size_t n, std::size_t k);

}  // namespace restrictlab

#include "restrictlab/parallel_impl.hpp"
