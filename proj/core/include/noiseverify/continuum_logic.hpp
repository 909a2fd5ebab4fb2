#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "noiseverify/bitstring.hpp"
#include "noiseverify/common_coin.hpp"

namespace noiseverify {

// Sampled real-valued waveform.  stream_id records which derived noise
// stream produced it (0 for composites such as products).
struct ContinuumSignal {
    std::vector<double> samples;
    double sample_rate = 1.0;
    std::uint64_t stream_id = 0;

    std::size_t size() const { return samples.size(); }
    double duration() const { return static_cast<double>(samples.size()) / sample_rate; }
};

// The two reference noises assigned to one string position: `high` is the
// waveform meaning bit +1, `low` the waveform meaning bit -1.  Streams are
// addressed 2*position for high and 2*position + 1 for low, so both parties
// derive the same pair from the shared seed.
struct NoiseBitPair {
    ContinuumSignal high;
    ContinuumSignal low;
    std::uint64_t position = 0;
};

// Outcome of a sample-wise comparator sweep.  violation_index is the first
// offending sample and is meaningful only when consistent is false.
struct CompareResult {
    bool consistent = true;
    std::size_t violation_index = 0;
};

inline std::uint64_t basis_stream(std::uint64_t index) { return index; }
inline std::uint64_t high_stream(std::uint64_t position) { return 2 * position; }
inline std::uint64_t low_stream(std::uint64_t position) { return 2 * position + 1; }

// count independent zero-mean unit-variance white Gaussian signals,
// deterministic in the seed.  Signal i (1-based) draws from stream i.
std::vector<ContinuumSignal> make_basis(const CoinSeed& seed, std::size_t count,
                                        std::size_t n_samples, double sample_rate = 1.0);

NoiseBitPair make_noise_pair(const CoinSeed& seed, std::uint64_t position, std::size_t n_samples,
                             double sample_rate = 1.0);

// Sample-wise product, multiplied left to right so both parties get the
// bit-identical result.  Throws on shape mismatch.
ContinuumSignal signal_product(std::span<const ContinuumSignal> signals);

// W(t) = product over positions i of the reference noise selected by the
// string bit at i (high for +1, low for -1).  Equal strings under the same
// seed give bit-identical waveforms.
ContinuumSignal string_hyperspace_vector(const BitString& s, const CoinSeed& seed,
                                         std::size_t n_samples, double sample_rate = 1.0);

// Consistent iff wA - wB is exactly zero at every sample.  Zero tolerance
// on purpose: equal strings reproduce the identical waveform, so any
// nonzero difference is proof of inequality.
CompareResult compare_difference(const ContinuumSignal& wA, const ContinuumSignal& wB);

// Consistent iff wA * wB >= 0 at every sample; equal strings give squares.
CompareResult compare_product(const ContinuumSignal& wA, const ContinuumSignal& wB);

// Single-pole recursive low-pass: y[n] = a*x[n] + r*y[n-1] with
// r = exp(-2*pi*cutoff/sample_rate) and a = 1 - r (unity DC gain).
// Requires 0 < cutoff < sample_rate/2.
ContinuumSignal lowpass(const ContinuumSignal& sig, double cutoff);

// Autocorrelation time: the lag (in time units) where the normalized
// autocorrelation first drops below 1/e, linearly interpolated between
// the bracketing integer lags.  For the one-pole filter above this sits
// near 1/(2*pi*cutoff).  Throws if no crossing occurs within half the
// signal length.
double autocorrelation_time(const ContinuumSignal& sig);

// Debug export, one sample per line under a `tick,value` header.
void write_csv(const ContinuumSignal& sig, std::ostream& out);

}  // namespace noiseverify
