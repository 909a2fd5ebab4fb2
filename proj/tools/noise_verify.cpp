// noise-verify: fingerprint digests, TCP string verification, and the
// statistical harnesses, all behind one binary.
//
// Exit codes: 0 ok / equal_presumed, 1 different, 2 usage or validation,
// 3 connection failure, 4 protocol error reported on the wire.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "noiseverify/analysis.hpp"
#include "noiseverify/channel.hpp"
#include "noiseverify/continuum_logic.hpp"
#include "noiseverify/hex.hpp"
#include "noiseverify/rtw_logic.hpp"

namespace nv = noiseverify;

namespace {

constexpr int kExitDifferent = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTransport = 3;
constexpr int kExitProtocol = 4;

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CLI::ValidationError("--input", "cannot open " + path);
    return in;
}

void print_verdict(const nv::VerificationVerdict& v) {
    std::cout << "decision=" << nv::decision_name(v.decision) << "\n";
    std::cout << "epsilon=" << std::setprecision(17) << v.epsilon << "\n";
    std::cout << "k=" << v.k << "\n";
    std::cout << "bits_communicated=" << v.bits_communicated << "\n";
    std::cout << "transport_bytes=" << v.transport_bytes << "\n";
}

int verdict_exit(const nv::VerificationVerdict& v) {
    return v.decision == nv::Decision::EqualPresumed ? 0 : kExitDifferent;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"string verification over shared reference noise"};
    app.require_subcommand(1);
    int rc = 0;

    // digest
    auto* digest = app.add_subcommand("digest", "print the packed fingerprint of a file");
    std::string digest_input, digest_seed_file;
    std::uint32_t digest_k = 0;
    digest->add_option("--input", digest_input, "file to fingerprint")->required();
    digest->add_option("--seed-file", digest_seed_file, "32-byte master seed")
        ->required()
        ->envname("NOISE_VERIFY_SEED_FILE");
    digest->add_option("--k", digest_k, "number of components")
        ->required()
        ->check(CLI::PositiveNumber);
    digest->callback([&] {
        const auto seed = nv::CoinSeed::load_file(digest_seed_file);
        auto in = open_input(digest_input);
        const auto packed = nv::hash_digest(in, seed, digest_k);
        std::cout << "digest=" << nv::digest_hex(packed) << "\n";
        std::cout << "k=" << digest_k << "\n";
        std::cout << "seed_id=" << seed.seed_id_hex() << "\n";
    });

    // serve
    auto* serve = app.add_subcommand("serve", "answer one verification session over TCP");
    std::string serve_listen, serve_input, serve_seed_file;
    double serve_epsilon = 0.0;
    auto* serve_eps_opt =
        serve->add_option("--epsilon", serve_epsilon, "insist on this error bound")
            ->check(CLI::Range(0.0, 1.0, "(0,1)"));
    serve->add_option("--listen", serve_listen, "host:port to bind")->required();
    serve->add_option("--input", serve_input, "file to verify")->required();
    serve->add_option("--seed-file", serve_seed_file, "32-byte master seed")
        ->required()
        ->envname("NOISE_VERIFY_SEED_FILE");
    serve->callback([&] {
        const auto seed = nv::CoinSeed::load_file(serve_seed_file);
        auto in = open_input(serve_input);
        const auto [host, port] = nv::parse_host_port(serve_listen);
        nv::TcpListener listener(host, port);
        std::cerr << "listening on port " << listener.local_port() << "\n";
        auto channel = listener.accept_one();
        std::optional<double> eps;
        if (*serve_eps_opt) eps = serve_epsilon;
        const auto verdict = nv::run_responder(in, seed, eps, *channel);
        print_verdict(verdict);
        rc = verdict_exit(verdict);
    });

    // connect
    auto* connect = app.add_subcommand("connect", "start a verification session over TCP");
    std::string connect_peer, connect_input, connect_seed_file;
    double connect_epsilon = 0.0;
    std::uint32_t connect_k = 0;
    auto* connect_eps_opt =
        connect->add_option("--epsilon", connect_epsilon, "target error bound")
            ->check(CLI::Range(0.0, 1.0, "(0,1)"));
    auto* connect_k_opt = connect->add_option("--k", connect_k, "component count instead")
                              ->check(CLI::PositiveNumber);
    connect_eps_opt->excludes(connect_k_opt);
    connect_k_opt->excludes(connect_eps_opt);
    connect->add_option("--peer", connect_peer, "host:port to reach")->required();
    connect->add_option("--input", connect_input, "file to verify")->required();
    connect->add_option("--seed-file", connect_seed_file, "32-byte master seed")
        ->required()
        ->envname("NOISE_VERIFY_SEED_FILE");
    connect->callback([&] {
        if (!*connect_eps_opt && !*connect_k_opt)
            throw CLI::RequiredError("--epsilon or --k");
        const auto seed = nv::CoinSeed::load_file(connect_seed_file);
        auto in = open_input(connect_input);
        const double eps =
            *connect_eps_opt ? connect_epsilon : nv::epsilon_for_k(connect_k);
        const auto [host, port] = nv::parse_host_port(connect_peer);
        auto channel = nv::tcp_connect(host, port);
        const auto verdict = nv::run_initiator(in, seed, eps, *channel);
        print_verdict(verdict);
        rc = verdict_exit(verdict);
    });

    // mc-error
    auto* mc = app.add_subcommand("mc-error", "Monte Carlo false-accept rate");
    std::uint32_t mc_k = 0;
    std::uint64_t mc_L = 0, mc_trials = 0, mc_seed = 1;
    bool mc_equal = false;
    std::string mc_format = "text";
    mc->add_option("--k", mc_k, "components")->required()->check(CLI::PositiveNumber);
    mc->add_option("--L", mc_L, "string length in bits")->required()->check(CLI::PositiveNumber);
    mc->add_option("--trials", mc_trials, "session count")
        ->required()
        ->check(CLI::PositiveNumber);
    mc->add_flag("--equal", mc_equal, "equal inputs instead of unequal");
    mc->add_option("--seed", mc_seed, "harness seed");
    mc->add_option("--format", mc_format)->check(CLI::IsMember({"text", "csv"}));
    mc->callback([&] {
        const auto report = nv::mc_error_rate(mc_k, mc_L, mc_trials, !mc_equal, mc_seed);
        if (mc_format == "csv")
            std::cout << nv::trial_csv_header() << "\n" << nv::to_csv(report) << "\n";
        else
            std::cout << nv::to_text(report) << "\n";
        if (!report.pass) rc = kExitDifferent;
    });

    // orthogonality
    auto* ortho = app.add_subcommand("orthogonality", "time-average checks for the noise algebra");
    std::uint64_t ortho_n = 1000000, ortho_seed = 1;
    std::string ortho_seed_file, ortho_format = "text";
    ortho->add_option("--n", ortho_n, "samples per estimate")
        ->check(CLI::Range(std::uint64_t{10000}, std::uint64_t{1} << 32));
    ortho->add_option("--seed", ortho_seed, "integer seed");
    ortho->add_option("--seed-file", ortho_seed_file, "32-byte master seed instead")
        ->envname("NOISE_VERIFY_SEED_FILE");
    ortho->add_option("--format", ortho_format)->check(CLI::IsMember({"text", "csv"}));
    ortho->callback([&] {
        const auto seed = ortho_seed_file.empty() ? nv::CoinSeed::from_uint64(ortho_seed)
                                                  : nv::CoinSeed::load_file(ortho_seed_file);
        const auto report = nv::orthogonality_suite(seed, ortho_n);
        std::cout << (ortho_format == "csv" ? nv::to_csv(report) : nv::to_text(report)) << "\n";
        if (!report.all_pass) rc = kExitDifferent;
    });

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exhaustive small-instance enumeration");
    std::uint32_t oracle_L = 0, oracle_k = 0;
    std::string oracle_format = "text";
    oracle->add_option("--L", oracle_L, "string length")->required()->check(CLI::Range(1, 3));
    oracle->add_option("--k", oracle_k, "components")->required()->check(CLI::Range(1, 3));
    oracle->add_option("--format", oracle_format)->check(CLI::IsMember({"text", "csv"}));
    oracle->callback([&] {
        const auto report = nv::exhaustive_oracle(oracle_L, oracle_k);
        const auto baseline = nv::gf2_exhaustive(oracle_L, oracle_k);
        if (oracle_format == "csv") {
            std::cout << nv::to_csv(report);
        } else {
            std::cout << nv::to_text(report) << "\n";
            std::cout << nv::to_text(baseline) << "\n";
            const bool match = report.uniform && baseline.uniform &&
                               report.num == baseline.num && report.den == baseline.den;
            std::cout << "baseline matches oracle: " << (match ? "true" : "false") << "\n";
            if (!match) rc = kExitDifferent;
        }
    });

    // scenario
    auto* scenario = app.add_subcommand("scenario", "communication-cost arithmetic");
    double scenario_L = 0.0, scenario_rate = 0.0, scenario_epsilon = 0.0;
    std::string scenario_format = "text";
    scenario->add_option("--L", scenario_L, "string length in bits")
        ->required()
        ->check(CLI::PositiveNumber);
    scenario->add_option("--rate", scenario_rate, "channel rate, bit/s")
        ->required()
        ->check(CLI::PositiveNumber);
    scenario->add_option("--epsilon", scenario_epsilon, "target error bound")
        ->required()
        ->check(CLI::Range(0.0, 1.0, "(0,1)"));
    scenario->add_option("--format", scenario_format)->check(CLI::IsMember({"text", "csv"}));
    scenario->callback([&] {
        const auto report = nv::scenario_report(static_cast<std::uint64_t>(scenario_L),
                                                scenario_rate, scenario_epsilon);
        std::cout << (scenario_format == "csv" ? nv::to_csv(report) : nv::to_text(report))
                  << "\n";
    });

    // continuum
    auto* continuum = app.add_subcommand("continuum", "waveform comparator statistics");
    std::uint64_t cont_L = 4, cont_samples = 1000000, cont_trials = 20000, cont_seed = 1;
    std::uint32_t cont_max_m = 10;
    std::size_t cont_factors = 4;
    double cont_cutoff = 0.005;
    std::string cont_format = "text", cont_dump;
    continuum->add_option("--L", cont_L, "string length")->check(CLI::PositiveNumber);
    continuum->add_option("--samples", cont_samples, "samples for the sign law")
        ->check(CLI::PositiveNumber);
    continuum->add_option("--trials", cont_trials, "trials per survival row")
        ->check(CLI::PositiveNumber);
    continuum->add_option("--max-m", cont_max_m, "deepest inspected-sample count")
        ->check(CLI::PositiveNumber);
    continuum->add_option("--factors", cont_factors, "filtered noises in the product")
        ->check(CLI::Range(2, 16));
    continuum->add_option("--cutoff", cont_cutoff, "low-pass cutoff as fraction of rate")
        ->check(CLI::Range(0.0, 0.5, "(0,0.5)"));
    continuum->add_option("--seed", cont_seed, "harness seed");
    continuum->add_option("--dump", cont_dump, "write one filtered waveform as CSV here");
    continuum->add_option("--format", cont_format)->check(CLI::IsMember({"text", "csv"}));
    continuum->callback([&] {
        const auto stats =
            nv::continuum_comparator_stats(cont_L, cont_samples, cont_trials, cont_max_m,
                                           cont_seed);
        const auto seed = nv::CoinSeed::from_uint64(cont_seed);
        const auto bandwidth = nv::bandwidth_report(seed, cont_factors, cont_samples,
                                                    cont_cutoff);
        if (cont_format == "csv") {
            std::cout << nv::to_csv(stats);
        } else {
            std::cout << nv::to_text(stats) << "\n";
            std::cout << nv::to_text(bandwidth) << "\n";
        }
        if (!cont_dump.empty()) {
            std::ofstream out(cont_dump);
            if (!out) throw CLI::ValidationError("--dump", "cannot write " + cont_dump);
            const auto basis = nv::make_basis(seed, 1, cont_samples);
            nv::write_csv(nv::lowpass(basis.front(), cont_cutoff), out);
        }
        if (!stats.all_pass || !bandwidth.ratio_pass) rc = kExitDifferent;
    });

    // seed-gen
    auto* seedgen = app.add_subcommand("seed-gen", "write a fresh 32-byte seed file");
    std::string seedgen_out;
    std::uint64_t seedgen_value = 0;
    bool seedgen_fixed = false;
    seedgen->add_option("--out", seedgen_out, "destination path")->required();
    auto* seedgen_value_opt =
        seedgen->add_option("--value", seedgen_value, "expand this 64-bit value instead");
    seedgen->callback([&] {
        seedgen_fixed = static_cast<bool>(*seedgen_value_opt);
        std::uint64_t value = seedgen_value;
        if (!seedgen_fixed) {
            std::random_device rd;
            value = (std::uint64_t{rd()} << 32) ^ rd();
        }
        const auto seed = nv::CoinSeed::from_uint64(value);
        seed.save_file(seedgen_out);
        std::cout << "seed_id=" << seed.seed_id_hex() << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const nv::SessionError& e) {
        std::cerr << "protocol error: " << e.what() << "\n";
        return kExitProtocol;
    } catch (const nv::TransportError& e) {
        std::cerr << "transport error: " << e.what() << "\n";
        return kExitTransport;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return rc;
}
