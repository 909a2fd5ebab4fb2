#include "noiseverify/continuum_logic.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <stdexcept>

namespace noiseverify {

namespace {

ContinuumSignal draw_signal(const Prf& prf, std::uint64_t stream_id, std::size_t n_samples,
                            double sample_rate) {
    ContinuumSignal sig;
    sig.sample_rate = sample_rate;
    sig.stream_id = stream_id;
    sig.samples.resize(n_samples);
    for (std::size_t t = 0; t < n_samples; ++t)
        sig.samples[t] = derive_gaussian_sample(prf, stream_id, t);
    return sig;
}

void require_same_shape(const ContinuumSignal& a, const ContinuumSignal& b) {
    if (a.samples.size() != b.samples.size() || a.sample_rate != b.sample_rate)
        throw std::invalid_argument("signal shapes differ");
}

}  // namespace

std::vector<ContinuumSignal> make_basis(const CoinSeed& seed, std::size_t count,
                                        std::size_t n_samples, double sample_rate) {
    if (count < 1 || n_samples < 1)
        throw std::invalid_argument("basis needs at least one signal and one sample");
    Prf prf(seed);
    std::vector<ContinuumSignal> basis;
    basis.reserve(count);
    for (std::size_t i = 1; i <= count; ++i)
        basis.push_back(draw_signal(prf, basis_stream(i), n_samples, sample_rate));
    return basis;
}

NoiseBitPair make_noise_pair(const CoinSeed& seed, std::uint64_t position, std::size_t n_samples,
                             double sample_rate) {
    if (position < 1) throw std::invalid_argument("positions are 1-based");
    if (n_samples < 1) throw std::invalid_argument("need at least one sample");
    Prf prf(seed);
    NoiseBitPair pair;
    pair.position = position;
    pair.high = draw_signal(prf, high_stream(position), n_samples, sample_rate);
    pair.low = draw_signal(prf, low_stream(position), n_samples, sample_rate);
    return pair;
}

ContinuumSignal signal_product(std::span<const ContinuumSignal> signals) {
    if (signals.empty()) throw std::invalid_argument("product of an empty signal list");
    ContinuumSignal out = signals.front();
    out.stream_id = signals.size() == 1 ? signals.front().stream_id : 0;
    for (std::size_t n = 1; n < signals.size(); ++n) {
        require_same_shape(out, signals[n]);
        for (std::size_t t = 0; t < out.samples.size(); ++t)
            out.samples[t] *= signals[n].samples[t];
    }
    return out;
}

ContinuumSignal string_hyperspace_vector(const BitString& s, const CoinSeed& seed,
                                         std::size_t n_samples, double sample_rate) {
    if (s.length() < 1) throw std::invalid_argument("empty string has no hyperspace vector");
    if (n_samples < 1) throw std::invalid_argument("need at least one sample");
    Prf prf(seed);
    ContinuumSignal out;
    out.sample_rate = sample_rate;
    out.samples.assign(n_samples, 1.0);
    for (std::size_t i = 1; i <= s.length(); ++i) {
        const std::uint64_t stream =
            s.bits()[i - 1] > 0 ? high_stream(i) : low_stream(i);
        for (std::size_t t = 0; t < n_samples; ++t)
            out.samples[t] *= derive_gaussian_sample(prf, stream, t);
    }
    out.stream_id = s.length() == 1 ? (s.bits()[0] > 0 ? high_stream(1) : low_stream(1)) : 0;
    return out;
}

CompareResult compare_difference(const ContinuumSignal& wA, const ContinuumSignal& wB) {
    require_same_shape(wA, wB);
    for (std::size_t t = 0; t < wA.samples.size(); ++t)
        if (wA.samples[t] - wB.samples[t] != 0.0) return {false, t};
    return {};
}

CompareResult compare_product(const ContinuumSignal& wA, const ContinuumSignal& wB) {
    require_same_shape(wA, wB);
    for (std::size_t t = 0; t < wA.samples.size(); ++t)
        if (wA.samples[t] * wB.samples[t] < 0.0) return {false, t};
    return {};
}

ContinuumSignal lowpass(const ContinuumSignal& sig, double cutoff) {
    if (!(cutoff > 0.0) || !(cutoff < sig.sample_rate / 2.0))
        throw std::invalid_argument("cutoff must lie in (0, sample_rate/2)");
    const double r = std::exp(-2.0 * std::numbers::pi * cutoff / sig.sample_rate);
    const double a = 1.0 - r;
    ContinuumSignal out;
    out.sample_rate = sig.sample_rate;
    out.stream_id = sig.stream_id;
    out.samples.resize(sig.samples.size());
    double y = 0.0;
    for (std::size_t t = 0; t < sig.samples.size(); ++t) {
        y = a * sig.samples[t] + r * y;
        out.samples[t] = y;
    }
    return out;
}

double autocorrelation_time(const ContinuumSignal& sig) {
    const std::size_t n = sig.samples.size();
    if (n < 4) throw std::invalid_argument("signal too short for autocorrelation");
    double mean = 0.0;
    for (double x : sig.samples) mean += x;
    mean /= static_cast<double>(n);

    const auto corr_at = [&](std::size_t lag) {
        double acc = 0.0;
        for (std::size_t t = 0; t + lag < n; ++t)
            acc += (sig.samples[t] - mean) * (sig.samples[t + lag] - mean);
        return acc / static_cast<double>(n - lag);
    };

    const double c0 = corr_at(0);
    if (c0 <= 0.0) throw std::runtime_error("signal has no variance");
    const double target = 1.0 / std::numbers::e;
    double prev = 1.0;
    for (std::size_t lag = 1; lag <= n / 2; ++lag) {
        const double cur = corr_at(lag) / c0;
        if (cur < target) {
            // interpolate the crossing between lag-1 and lag
            const double frac = (prev - target) / (prev - cur);
            return (static_cast<double>(lag - 1) + frac) / sig.sample_rate;
        }
        prev = cur;
    }
    throw std::runtime_error("no 1/e crossing within half the signal length");
}

void write_csv(const ContinuumSignal& sig, std::ostream& out) {
    out << "tick,value\n";
    out << std::setprecision(17);
    for (std::size_t t = 0; t < sig.samples.size(); ++t)
        out << t << ',' << sig.samples[t] << '\n';
}

}  // namespace noiseverify
