#include "noiseverify/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "noiseverify/rtw_logic.hpp"

namespace noiseverify {

namespace {

std::string fmt(double v, int precision = 10) {
    std::ostringstream os;
    os << std::setprecision(precision) << v;
    return os.str();
}

std::string yesno(bool b) { return b ? "true" : "false"; }

double binomial_sigma(double p, std::uint64_t n) {
    return std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

}  // namespace

BitString random_bitstring(std::mt19937_64& rng, std::size_t length) {
    std::vector<std::int8_t> bits(length);
    std::uint64_t word = 0;
    int have = 0;
    for (std::size_t i = 0; i < length; ++i) {
        if (have == 0) {
            word = rng();
            have = 64;
        }
        bits[i] = (word & 1) ? std::int8_t{1} : std::int8_t{-1};
        word >>= 1;
        --have;
    }
    return BitString(std::move(bits));
}

std::pair<BitString, BitString> random_unequal_pair(std::mt19937_64& rng, std::size_t length) {
    BitString a = random_bitstring(rng, length);
    for (;;) {
        BitString b = random_bitstring(rng, length);
        if (!(b == a)) return {std::move(a), std::move(b)};
    }
}

TrialReport mc_error_rate(std::uint32_t k, std::uint64_t L, std::uint64_t trials, bool unequal,
                          std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (L < 1) throw std::invalid_argument("L must be positive");
    if (trials < 1) throw std::invalid_argument("need at least one trial");

    std::mt19937_64 rng(seed);
    const CoinSeed base = CoinSeed::from_uint64(seed);
    const double epsilon = epsilon_for_k(k);
    std::uint64_t accepts = 0;

    for (std::uint64_t t = 0; t < trials; ++t) {
        const CoinSeed coin = base.child(t);
        BitString a = random_bitstring(rng, L);
        BitString b;
        if (unequal) {
            do {
                b = random_bitstring(rng, L);
            } while (b == a);
        } else {
            b = a;
        }
        SessionEngine initiator(Role::Initiator, coin, epsilon,
                                [&](double e, std::uint32_t kk) {
                                    RtwFingerprint fp = fingerprint_with_k(a, coin, kk);
                                    fp.epsilon = e;
                                    return fp;
                                });
        SessionEngine responder(Role::Responder, coin, std::nullopt,
                                [&](double e, std::uint32_t kk) {
                                    RtwFingerprint fp = fingerprint_with_k(b, coin, kk);
                                    fp.epsilon = e;
                                    return fp;
                                });
        const auto [vi, vr] = run_loopback(initiator, responder);
        if (vi.decision != vr.decision)
            throw std::logic_error("loopback sides disagree on the verdict");
        if (vi.decision == Decision::EqualPresumed) ++accepts;
    }

    TrialReport r;
    r.k = k;
    r.L = L;
    r.trials = trials;
    r.false_accepts = accepts;
    r.unequal = unequal;
    r.rate = static_cast<double>(accepts) / static_cast<double>(trials);
    r.expected = unequal ? std::exp2(-static_cast<double>(k)) : 1.0;
    r.sigma = binomial_sigma(r.expected, trials);
    r.pass = std::abs(r.rate - r.expected) <= 3.0 * r.sigma;
    return r;
}

std::pair<VerificationVerdict, VerificationVerdict> verify_loopback(const BitString& a,
                                                                    const BitString& b,
                                                                    const CoinSeed& seed,
                                                                    double epsilon) {
    SessionEngine initiator(Role::Initiator, seed, epsilon, fingerprinter_for(a, seed));
    SessionEngine responder(Role::Responder, seed, std::nullopt, fingerprinter_for(b, seed));
    auto verdicts = run_loopback(initiator, responder);
    verdicts.first.lengths_known = {a.length(), b.length()};
    verdicts.second.lengths_known = {a.length(), b.length()};
    return verdicts;
}

namespace {

BitString bitstring_from_index(std::uint32_t s, std::uint32_t L) {
    std::vector<std::int8_t> bits(L);
    for (std::uint32_t i = 0; i < L; ++i)
        bits[i] = ((s >> i) & 1) ? std::int8_t{1} : std::int8_t{-1};
    return BitString(std::move(bits));
}

void reduce_fraction(std::uint64_t common, std::uint64_t tables, std::uint64_t& num,
                     std::uint64_t& den) {
    const std::uint64_t g = std::gcd(common, tables);
    num = g == 0 ? common : common / g;
    den = g == 0 ? tables : tables / g;
}

}  // namespace

OracleReport exhaustive_oracle(std::uint32_t L, std::uint32_t k) {
    if (L < 1 || L > 3 || k < 1 || k > 3 || 2 * L * k > 18)
        throw std::domain_error("oracle instance too large to enumerate");

    const std::uint32_t cells = 2 * L * k;
    const std::uint64_t tables = std::uint64_t{1} << cells;
    const std::uint32_t nstr = 1u << L;

    // cell (position i, branch b, component j) lives at table bit
    // (i*2 + b)*k + j, with b = 1 for the +1 branch
    std::vector<std::array<std::uint64_t, 3>> masks(nstr);
    for (std::uint32_t s = 0; s < nstr; ++s) {
        for (std::uint32_t j = 0; j < k; ++j) {
            std::uint64_t mask = 0;
            for (std::uint32_t i = 0; i < L; ++i) {
                const std::uint32_t b = (s >> i) & 1;
                mask |= std::uint64_t{1} << ((i * 2 + b) * k + j);
            }
            masks[s][j] = mask;
        }
    }

    std::vector<std::vector<std::uint64_t>> counts(nstr, std::vector<std::uint64_t>(nstr, 0));
    std::vector<std::uint32_t> sig(nstr);
    for (std::uint64_t t = 0; t < tables; ++t) {
        for (std::uint32_t s = 0; s < nstr; ++s) {
            std::uint32_t bits = 0;
            for (std::uint32_t j = 0; j < k; ++j)
                bits |= static_cast<std::uint32_t>(std::popcount(t & masks[s][j]) & 1) << j;
            sig[s] = bits;
        }
        for (std::uint32_t a = 0; a < nstr; ++a)
            for (std::uint32_t b = 0; b < nstr; ++b)
                if (sig[a] == sig[b]) ++counts[a][b];
    }

    OracleReport r;
    r.L = L;
    r.k = k;
    r.tables = tables;
    r.equal_pairs_never_reject = true;
    r.uniform = true;
    bool first = true;
    for (std::uint32_t a = 0; a < nstr; ++a) {
        for (std::uint32_t b = 0; b < nstr; ++b) {
            if (a == b) {
                if (counts[a][b] != tables) r.equal_pairs_never_reject = false;
                continue;
            }
            r.unequal_pairs.push_back(
                {bitstring_from_index(a, L), bitstring_from_index(b, L), counts[a][b]});
            if (first) {
                r.common_equal_tables = counts[a][b];
                first = false;
            } else if (counts[a][b] != r.common_equal_tables) {
                r.uniform = false;
            }
        }
    }
    reduce_fraction(r.common_equal_tables, r.tables, r.num, r.den);
    return r;
}

bool gf2_baseline(const BitString& a, const BitString& b, std::uint32_t k, std::uint64_t table) {
    const std::size_t L = a.length();
    if (b.length() != L) throw std::invalid_argument("strings must share a length");
    if (L < 1 || k < 1 || L * k > 64) throw std::domain_error("baseline table exceeds 64 bits");

    // {-1,+1} -> {1,0} via (1-s)/2, so the -1 symbol is the GF(2) one
    std::uint64_t xa = 0, xb = 0;
    for (std::size_t i = 0; i < L; ++i) {
        if (a.at(i) < 0) xa |= std::uint64_t{1} << i;
        if (b.at(i) < 0) xb |= std::uint64_t{1} << i;
    }
    const std::uint64_t row_mask = (L == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << L) - 1;
    for (std::uint32_t j = 0; j < k; ++j) {
        const std::uint64_t rj = (table >> (j * L)) & row_mask;
        if ((std::popcount(rj & xa) & 1) != (std::popcount(rj & xb) & 1)) return false;
    }
    return true;
}

Gf2Report gf2_exhaustive(std::uint32_t L, std::uint32_t k) {
    if (L < 1 || L > 3 || k < 1 || k > 3)
        throw std::domain_error("baseline instance too large to enumerate");

    const std::uint64_t tables = std::uint64_t{1} << (L * k);
    const std::uint32_t nstr = 1u << L;

    std::vector<BitString> strings(nstr);
    for (std::uint32_t s = 0; s < nstr; ++s) strings[s] = bitstring_from_index(s, L);

    std::vector<std::vector<std::uint64_t>> counts(nstr, std::vector<std::uint64_t>(nstr, 0));
    for (std::uint64_t t = 0; t < tables; ++t)
        for (std::uint32_t a = 0; a < nstr; ++a)
            for (std::uint32_t b = 0; b < nstr; ++b)
                if (gf2_baseline(strings[a], strings[b], k, t)) ++counts[a][b];

    Gf2Report r;
    r.L = L;
    r.k = k;
    r.tables = tables;
    r.equal_pairs_never_reject = true;
    r.uniform = true;
    bool first = true;
    for (std::uint32_t a = 0; a < nstr; ++a) {
        for (std::uint32_t b = 0; b < nstr; ++b) {
            if (a == b) {
                if (counts[a][b] != tables) r.equal_pairs_never_reject = false;
                continue;
            }
            r.unequal_pairs.push_back({strings[a], strings[b], counts[a][b]});
            if (first) {
                r.common_equal_tables = counts[a][b];
                first = false;
            } else if (counts[a][b] != r.common_equal_tables) {
                r.uniform = false;
            }
        }
    }
    reduce_fraction(r.common_equal_tables, r.tables, r.num, r.den);
    return r;
}

namespace {

std::vector<std::int8_t> telegraph_row(const Prf& prf, std::uint64_t position, std::uint64_t n) {
    std::vector<std::int8_t> row(n);
    const std::uint64_t blocks = (n + 63) / 64;
    for (std::uint64_t blk = 0; blk < blocks; ++blk) {
        const std::uint64_t word = rtw_word(prf, position, 1, blk);
        const std::uint64_t limit = std::min<std::uint64_t>(64, n - blk * 64);
        for (std::uint64_t bit = 0; bit < limit; ++bit)
            row[blk * 64 + bit] = ((word >> bit) & 1) ? std::int8_t{1} : std::int8_t{-1};
    }
    return row;
}

}  // namespace

OrthogonalityReport orthogonality_suite(const CoinSeed& seed, std::uint64_t n) {
    if (n < 10000) throw std::invalid_argument("need at least 10^4 samples");

    OrthogonalityReport report;
    report.n = n;
    const double tol = 4.0 / std::sqrt(static_cast<double>(n));
    const auto add = [&](const std::string& name, double estimate, double target) {
        report.checks.push_back(
            {name, estimate, target, tol, std::abs(estimate - target) <= tol});
    };

    Prf prf(seed);

    // continuum side: basis self/cross products plus two- and higher-fold
    // hyperspace products against disjoint-index vectors
    {
        double avg[10] = {};
        for (std::uint64_t t = 0; t < n; ++t) {
            double v[7];
            for (std::uint64_t i = 1; i <= 6; ++i)
                v[i] = derive_gaussian_sample(prf, basis_stream(i), t);
            const double h12 = v[1] * v[2];
            const double h34 = v[3] * v[4];
            const double h56 = v[5] * v[6];
            const double l1234 = h12 * h34;
            const double l123 = h12 * v[3];
            avg[0] += v[1] * v[1];
            avg[1] += v[1] * v[2];
            avg[2] += v[2] * v[3];
            avg[3] += h12 * v[1];
            avg[4] += h12 * v[2];
            avg[5] += h12 * v[3];
            avg[6] += l1234 * v[5];
            avg[7] += l1234 * h56;
            avg[8] += l123 * v[4];
            // distinct from the L1234*V5 statistic: this one is V1V2V3*V5V6
            avg[9] += l123 * h56;
        }
        for (double& a : avg) a /= static_cast<double>(n);
        add("<V1*V1>", avg[0], 1.0);
        add("<V1*V2>", avg[1], 0.0);
        add("<V2*V3>", avg[2], 0.0);
        add("<H12*V1>", avg[3], 0.0);
        add("<H12*V2>", avg[4], 0.0);
        add("<H12*V3>", avg[5], 0.0);
        add("<L1234*V5>", avg[6], 0.0);
        add("<L1234*H56>", avg[7], 0.0);
        add("<L123*V4>", avg[8], 0.0);
        add("<L123*H56>", avg[9], 0.0);
    }

    // telegraph side: same-row, cross-row and shifted-row correlation, and
    // a five-fold product against a member row and a foreign row
    {
        std::array<std::vector<std::int8_t>, 8> rows;
        for (std::uint64_t i = 1; i <= 7; ++i) rows[i] = telegraph_row(prf, i, n + 1);

        std::int64_t same = 0, cross = 0, shifted = 0, w_member = 0, w_foreign = 0;
        for (std::uint64_t t = 0; t < n; ++t) {
            const int r1 = rows[1][t];
            same += r1 * r1;
            cross += r1 * rows[2][t];
            shifted += r1 * rows[1][t + 1];
            const int w5 = rows[1][t] * rows[2][t] * rows[3][t] * rows[4][t] * rows[5][t];
            w_member += w5 * rows[3][t];
            w_foreign += w5 * rows[7][t];
        }
        const double dn = static_cast<double>(n);
        add("<R1*R1>", static_cast<double>(same) / dn, 1.0);
        add("<R1*R2>", static_cast<double>(cross) / dn, 0.0);
        add("<R1(j)*R1(j+1)>", static_cast<double>(shifted) / dn, 0.0);
        add("<W5*R3>", static_cast<double>(w_member) / dn, 0.0);
        add("<W5*R7>", static_cast<double>(w_foreign) / dn, 0.0);
    }

    report.all_pass = true;
    for (const auto& c : report.checks)
        if (!c.pass) report.all_pass = false;
    return report;
}

ScenarioReport scenario_report(std::uint64_t L, double channel_rate, double epsilon) {
    if (L < 1) throw std::invalid_argument("string length must be positive");
    if (!(channel_rate > 0.0)) throw std::invalid_argument("channel rate must be positive");

    ScenarioReport r;
    r.L = L;
    r.channel_rate = channel_rate;
    r.epsilon = epsilon;
    r.k = compute_k(epsilon);
    r.protocol_time = static_cast<double>(r.k) / channel_rate;
    r.naive_time = static_cast<double>(L) / channel_rate;
    r.error_bound = std::exp2(-static_cast<double>(r.k));
    r.k_reduced = r.k > 1 ? r.k - 1 : r.k;
    r.protocol_time_reduced = static_cast<double>(r.k_reduced) / channel_rate;
    r.error_bound_reduced = std::exp2(-static_cast<double>(r.k_reduced));
    return r;
}

ContinuumStats continuum_comparator_stats(std::uint64_t L, std::uint64_t n_samples,
                                          std::uint64_t trials_per_m, std::uint32_t max_m,
                                          std::uint64_t seed) {
    if (L < 1 || n_samples < 1 || trials_per_m < 1 || max_m < 1)
        throw std::invalid_argument("all comparator-stat sizes must be positive");

    std::mt19937_64 rng(seed);
    const CoinSeed base = CoinSeed::from_uint64(seed);

    ContinuumStats stats;
    stats.L = L;
    stats.samples = n_samples;

    // per-sample sign law on one unequal pair
    {
        const auto [a, b] = random_unequal_pair(rng, L);
        const ContinuumSignal wa = string_hyperspace_vector(a, base, n_samples);
        const ContinuumSignal wb = string_hyperspace_vector(b, base, n_samples);
        for (std::uint64_t t = 0; t < n_samples; ++t)
            if (wa.samples[t] * wb.samples[t] < 0.0) ++stats.negatives;
        stats.negative_rate =
            static_cast<double>(stats.negatives) / static_cast<double>(n_samples);
        stats.negative_sigma = binomial_sigma(0.5, n_samples);
        stats.negative_pass = std::abs(stats.negative_rate - 0.5) <= 3.0 * stats.negative_sigma;
    }

    // survival of the product comparator after m inspected samples
    std::uint64_t trial_counter = 0;
    for (std::uint32_t m = 1; m <= max_m; ++m) {
        SurvivalRow row;
        row.m = m;
        row.trials = trials_per_m;
        for (std::uint64_t t = 0; t < trials_per_m; ++t) {
            const CoinSeed coin = base.child(++trial_counter);
            const Prf prf(coin);
            const auto [a, b] = random_unequal_pair(rng, L);
            bool survived = true;
            for (std::uint32_t sample = 0; sample < m && survived; ++sample) {
                double wa = 1.0, wb = 1.0;
                for (std::uint64_t i = 1; i <= L; ++i) {
                    const std::uint64_t sa =
                        a.at(i - 1) > 0 ? high_stream(i) : low_stream(i);
                    const std::uint64_t sb =
                        b.at(i - 1) > 0 ? high_stream(i) : low_stream(i);
                    wa *= derive_gaussian_sample(prf, sa, sample);
                    wb *= derive_gaussian_sample(prf, sb, sample);
                }
                if (wa * wb < 0.0) survived = false;
            }
            if (survived) ++row.accepts;
        }
        row.rate = static_cast<double>(row.accepts) / static_cast<double>(row.trials);
        row.expected = std::exp2(-static_cast<double>(m));
        row.sigma = binomial_sigma(row.expected, row.trials);
        row.pass = std::abs(row.rate - row.expected) <= 3.0 * row.sigma;
        stats.survival.push_back(row);
    }

    stats.all_pass = stats.negative_pass;
    for (const auto& row : stats.survival)
        if (!row.pass) stats.all_pass = false;
    return stats;
}

BandwidthReport bandwidth_report(const CoinSeed& seed, std::size_t n_factors,
                                 std::uint64_t n_samples, double cutoff) {
    if (n_factors < 2) throw std::invalid_argument("need at least two factors");

    const auto basis = make_basis(seed, n_factors, n_samples);
    std::vector<ContinuumSignal> filtered;
    filtered.reserve(n_factors);
    for (const auto& sig : basis) filtered.push_back(lowpass(sig, cutoff));

    BandwidthReport r;
    r.n_factors = n_factors;
    r.cutoff = cutoff;
    r.tau_single = autocorrelation_time(filtered.front());
    r.tau_product = autocorrelation_time(signal_product(filtered));
    r.tau_predicted = 1.0 / (2.0 * std::numbers::pi * cutoff);
    r.ratio = r.tau_product / r.tau_single;
    r.single_pass = std::abs(r.tau_single - r.tau_predicted) <= 0.3 * r.tau_predicted;
    const double target = 1.0 / static_cast<double>(n_factors);
    r.ratio_pass = std::abs(r.ratio - target) <= 0.3 * target;
    return r;
}

std::string trial_csv_header() { return "k,L,trials,false_accepts,rate,expected,sigma,pass"; }

std::string to_csv(const TrialReport& r) {
    std::ostringstream os;
    os << r.k << ',' << r.L << ',' << r.trials << ',' << r.false_accepts << ',' << fmt(r.rate)
       << ',' << fmt(r.expected) << ',' << fmt(r.sigma) << ',' << yesno(r.pass);
    return os.str();
}

std::string to_text(const TrialReport& r) {
    std::ostringstream os;
    os << "k=" << r.k << " L=" << r.L << " trials=" << r.trials
       << " mode=" << (r.unequal ? "unequal" : "equal") << " false_accepts=" << r.false_accepts
       << " rate=" << fmt(r.rate, 6) << " expected=" << fmt(r.expected, 6)
       << " sigma=" << fmt(r.sigma, 4) << " pass=" << yesno(r.pass);
    return os.str();
}

namespace {

template <typename Report>
std::string enumeration_text(const char* label, const Report& r) {
    std::ostringstream os;
    os << label << " L=" << r.L << " k=" << r.k << ": " << r.tables << " coin tables\n";
    os << "  unequal ordered pairs: " << r.unequal_pairs.size();
    if (r.uniform) {
        os << ", every pair accepts under " << r.common_equal_tables << "/" << r.tables
           << " tables = " << r.num << "/" << r.den << "\n";
    } else {
        os << ", counts differ across pairs (unexpected)\n";
        for (const auto& p : r.unequal_pairs)
            os << "    " << p.a.to_string() << " vs " << p.b.to_string() << ": "
               << p.equal_tables << "/" << r.tables << "\n";
    }
    os << "  equal pairs always accepted: " << yesno(r.equal_pairs_never_reject);
    return os.str();
}

}  // namespace

std::string to_text(const OracleReport& r) { return enumeration_text("exhaustive oracle", r); }

std::string to_csv(const OracleReport& r) {
    std::ostringstream os;
    os << "L,k,a,b,equal_tables,tables\n";
    for (const auto& p : r.unequal_pairs)
        os << r.L << ',' << r.k << ',' << p.a.to_string() << ',' << p.b.to_string() << ','
           << p.equal_tables << ',' << r.tables << '\n';
    return os.str();
}

std::string to_text(const Gf2Report& r) { return enumeration_text("gf2 baseline", r); }

std::string to_text(const OrthogonalityReport& r) {
    std::ostringstream os;
    os << "orthogonality suite, n=" << r.n << ", tolerance=" << fmt(4.0 / std::sqrt(double(r.n)), 4)
       << "\n";
    for (const auto& c : r.checks)
        os << "  " << std::left << std::setw(18) << c.name << " estimate=" << std::right
           << std::setw(12) << fmt(c.estimate, 6) << " target=" << c.target
           << " pass=" << yesno(c.pass) << "\n";
    os << "  all_pass=" << yesno(r.all_pass);
    return os.str();
}

std::string to_csv(const OrthogonalityReport& r) {
    std::ostringstream os;
    os << "name,estimate,target,tolerance,pass\n";
    for (const auto& c : r.checks)
        os << c.name << ',' << fmt(c.estimate) << ',' << fmt(c.target) << ',' << fmt(c.tolerance)
           << ',' << yesno(c.pass) << '\n';
    return os.str();
}

std::string to_text(const ScenarioReport& r) {
    std::ostringstream os;
    const double years = r.naive_time / (365.25 * 24.0 * 3600.0);
    os << "string length L      : " << r.L << " bits\n";
    os << "channel rate         : " << fmt(r.channel_rate) << " bit/s\n";
    os << "target error epsilon : " << fmt(r.epsilon) << "\n";
    os << "components k         : " << r.k << " (error bound 2^-" << r.k << " = "
       << fmt(r.error_bound, 4) << ")\n";
    os << std::fixed << std::setprecision(3);
    os << "protocol time        : " << r.protocol_time << " s at k=" << r.k << "\n";
    os << "protocol time        : " << r.protocol_time_reduced << " s at k=" << r.k_reduced
       << " (error bound 2^-" << r.k_reduced << " = " << fmt(r.error_bound_reduced, 4) << ")\n";
    os.unsetf(std::ios_base::floatfield);
    os << std::setprecision(10);
    os << "naive transfer time  : " << fmt(r.naive_time) << " s (" << fmt(years, 3) << " years)";
    return os.str();
}

std::string to_csv(const ScenarioReport& r) {
    std::ostringstream os;
    os << "L,channel_rate,epsilon,k,protocol_time,naive_time,error_bound,k_reduced,"
          "protocol_time_reduced,error_bound_reduced\n";
    os << r.L << ',' << fmt(r.channel_rate) << ',' << fmt(r.epsilon) << ',' << r.k << ','
       << fmt(r.protocol_time) << ',' << fmt(r.naive_time) << ',' << fmt(r.error_bound) << ','
       << r.k_reduced << ',' << fmt(r.protocol_time_reduced) << ','
       << fmt(r.error_bound_reduced);
    return os.str();
}

std::string to_text(const ContinuumStats& r) {
    std::ostringstream os;
    os << "continuum comparators, L=" << r.L << "\n";
    os << "  negative products: " << r.negatives << "/" << r.samples
       << " rate=" << fmt(r.negative_rate, 6) << " target=0.5 sigma=" << fmt(r.negative_sigma, 4)
       << " pass=" << yesno(r.negative_pass) << "\n";
    os << "  survival of m inspected samples (target 2^-m):\n";
    for (const auto& row : r.survival)
        os << "    m=" << std::setw(2) << row.m << " accepts=" << std::setw(8) << row.accepts
           << "/" << row.trials << " rate=" << fmt(row.rate, 6)
           << " expected=" << fmt(row.expected, 6) << " pass=" << yesno(row.pass) << "\n";
    os << "  all_pass=" << yesno(r.all_pass);
    return os.str();
}

std::string to_csv(const ContinuumStats& r) {
    std::ostringstream os;
    os << "m,trials,accepts,rate,expected,sigma,pass\n";
    os << "0," << r.samples << ',' << r.negatives << ',' << fmt(r.negative_rate) << ",0.5,"
       << fmt(r.negative_sigma) << ',' << yesno(r.negative_pass) << '\n';
    for (const auto& row : r.survival)
        os << row.m << ',' << row.trials << ',' << row.accepts << ',' << fmt(row.rate) << ','
           << fmt(row.expected) << ',' << fmt(row.sigma) << ',' << yesno(row.pass) << '\n';
    return os.str();
}

std::string to_text(const BandwidthReport& r) {
    std::ostringstream os;
    os << "low-pass bandwidth comparison, cutoff=" << fmt(r.cutoff) << "\n";
    os << "  tau(single filtered noise)  = " << fmt(r.tau_single, 6) << " (predicted "
       << fmt(r.tau_predicted, 6) << ", pass=" << yesno(r.single_pass) << ")\n";
    os << "  tau(product of " << r.n_factors << " filtered) = " << fmt(r.tau_product, 6) << "\n";
    os << "  ratio = " << fmt(r.ratio, 6) << " (target " << fmt(1.0 / double(r.n_factors), 6)
       << " within 30%, pass=" << yesno(r.ratio_pass) << ")";
    return os.str();
}

}  // namespace noiseverify
