// Command-line interface: every operation of the library is reachable from
// here, including full reproductions of the census tables and the
// verification suite.  Data goes to stdout, progress to stderr.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <string>

#include "permix/acceptance.hpp"
#include "permix/census.hpp"
#include "permix/classify.hpp"
#include "permix/fredholm.hpp"
#include "permix/json_io.hpp"
#include "permix/rates.hpp"
#include "permix/spectrum.hpp"

using namespace permix;

namespace {

struct GlobalOpts {
    std::string output = "json";  // json | csv | text
    int threads = 0;
    bool long_run = false;
    double tol = kUnitCircleTol;
    std::uint64_t seed = 20250810;
    long long samples = 10000;
};

void emit(const Json& j, const GlobalOpts& g) {
    if (g.output == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump() << "\n";
}

Permutation parse_sigma(const std::string& text, int N) {
    Permutation p = Permutation::parse(text, N);
    if (N > 0 && p.degree() != N)
        throw DomainError("permutation degree " + std::to_string(p.degree()) +
                          " does not match N = " + std::to_string(N));
    return p;
}

int cmd_classify(const GlobalOpts& g, int m, int N, const std::string& sigma_text,
                 const std::string& family) {
    Permutation sigma = sigma_text.empty() ? Permutation::identity(N) : parse_sigma(sigma_text, N);
    MixingVerdict verdict = family == "subshift"
                                ? classify_mixing_oracle(sigma, MapFamily::subshift(N))
                                : classify_mixing_fast(sigma, m, N);
    Json j;
    j["family"] = family;
    if (family != "subshift") j["m"] = m;
    j["N"] = N;
    j["sigma"] = to_json(sigma);
    j.update(to_json(verdict));
    emit(j, g);
    return 0;
}

int cmd_spectrum(const GlobalOpts& g, int m, int N, const std::string& sigma_text,
                 const std::string& which, bool scaled, bool dump_matrix) {
    Permutation sigma = sigma_text.empty() ? Permutation::identity(N) : parse_sigma(sigma_text, N);
    IntMatrix M;
    if (which == "A") M = build_A(m, N);
    else if (which == "B") M = build_B(m, N);
    else if (which == "C") M = build_C(m, N);
    else if (which == "P") M = build_P(sigma);
    else if (which == "Q") M = build_Q(sigma, m);
    else if (which == "AP") M = build_AP(sigma, m);
    else if (which == "BQ") M = build_BQ(sigma, m);
    else throw DomainError("unknown matrix name: " + which);
    if (dump_matrix) {
        std::cout << M.to_csv();
        return 0;
    }
    Eigen::MatrixXd E = M.to_eigen();
    if (scaled) E /= m;
    Spectrum s = eigen_spectrum(E, kEigenSolveTol, g.tol);
    Json j;
    j["matrix"] = which;
    j["m"] = m;
    j["N"] = N;
    j["scaled"] = scaled;
    j.update(to_json(s));
    if (g.output == "csv") {
        std::cout << "re,im\n";
        for (const auto& l : s.eigenvalues) std::cout << l.real() << ',' << l.imag() << '\n';
        return 0;
    }
    emit(j, g);
    return 0;
}

int cmd_rate(const GlobalOpts& g, int m, int N, const std::string& sigma_text, int steps) {
    Permutation sigma = sigma_text.empty() ? Permutation::identity(N) : parse_sigma(sigma_text, N);
    RateReport rep = lambda_sigma(sigma, m, N, g.tol);
    Json j;
    j["m"] = m;
    j["N"] = N;
    j["sigma"] = to_json(sigma);
    j.update(to_json(rep));
    if (steps > 0) {
        j["empirical_rate"] = density_evolution_rate(sigma, m, N, steps, g.seed);
        j["empirical_steps"] = steps;
    }
    emit(j, g);
    return 0;
}

int cmd_worst(const GlobalOpts& g, int m, int N) {
    Permutation tau = worst_permutation(m, N);
    RateReport rep = lambda_sigma(tau, m, N, g.tol);
    Json j;
    j["m"] = m;
    j["N"] = N;
    j["tau"] = to_json(tau);
    j["bound"] = worst_rate_bound(m, N);
    j["lambda_tau"] = rep.lambda_sigma;
    j["row_relabeling_identity"] = true;  // P(tau) A == C, checked at construction
    emit(j, g);
    return 0;
}

int cmd_enumerate(const GlobalOpts& g, int m, int N) {
    CensusRow row = slowdown_census(m, N, g.long_run, g.threads);
    Json j = to_json(row);
    if (N % m == 0) {
        Rational p(row.nonmixing_count, row.total);
        j["nonmixing_proportion"] = p.str();
    }
    if (g.output == "csv") {
        std::cout << "N,m,count\n" << N << ',' << m << ',' << row.slow_count.str() << "\n";
        return 0;
    }
    emit(j, g);
    return 0;
}

int cmd_sample(const GlobalOpts& g, int m, int N) {
    MCEstimate e = mc_slowdown(m, N, g.samples, g.seed, g.threads);
    Json j;
    j["m"] = m;
    j["N"] = N;
    j.update(to_json(e));
    if (g.output == "csv") {
        std::cout << "N,m,proportion,std_error,samples,seed\n"
                  << N << ',' << m << ',' << e.proportion << ',' << e.std_error << ','
                  << e.samples << ',' << e.seed << "\n";
        return 0;
    }
    emit(j, g);
    return 0;
}

int cmd_tables(const GlobalOpts& g, int which) {
    if (which == 1) {
        std::cout << "N,m,count\n";
        for (int N : {3, 4, 6, 8}) {
            for (int m : {2, 3, 4}) {
                std::cerr << "table 1: sweeping S_" << N << " for m=" << m << "\n";
                CensusRow row = slowdown_census(m, N, g.long_run, g.threads);
                std::cout << N << ',' << m << ',' << row.slow_count.str() << "\n";
            }
        }
        return 0;
    }
    if (which == 2) {
        std::cout << "N,m,proportion,std_error,samples,seed\n";
        for (int N : {8, 30, 40, 50}) {
            for (int m : {2, 3}) {
                std::cerr << "table 2: sampling (m=" << m << ", N=" << N << ")\n";
                MCEstimate e = mc_slowdown(m, N, g.samples, g.seed, g.threads);
                std::cout << N << ',' << m << ',' << e.proportion << ',' << e.std_error << ','
                          << e.samples << ',' << e.seed << "\n";
            }
        }
        return 0;
    }
    throw DomainError("tables: --which must be 1 or 2");
}

int cmd_subshift(const GlobalOpts& g, int ell, const std::string& sigma_text) {
    Json j;
    j["ell"] = ell;
    j["N"] = 2 * ell;
    if (!sigma_text.empty()) {
        Permutation sigma = parse_sigma(sigma_text, 2 * ell);
        MixingVerdict v = classify_mixing_oracle(sigma, MapFamily::subshift(2 * ell));
        j["sigma"] = to_json(sigma);
        j["verdict"] = to_json(v);
        emit(j, g);
        return 0;
    }
    SubshiftCensus c = subshift_census(ell, g.threads);
    j["witness_proportion"] = c.witness_closed.str();
    j["witness_proportion_float"] = to_double(c.witness_closed);
    if (c.exhaustive) {
        j["total"] = c.row.total.str();
        j["nonmixing_count"] = c.row.nonmixing_count.str();
        j["witness_count"] = c.witness_brute.str();
        j["nonmixing_proportion_float"] =
            to_double(Rational(c.row.nonmixing_count, c.row.total));
    }
    FredholmModel model = subshift_model();
    auto zeros = fredholm_zeros(model);
    Json zj = Json::array();
    for (const auto& z : zeros) zj.push_back(Json{{"re", z.real()}, {"im", z.imag()}});
    j["fredholm_zeros"] = zj;
    auto rho = invariant_density(model);
    Json rj = Json::array();
    for (const auto& r : rho) rj.push_back(r.str());
    j["invariant_density"] = rj;
    auto [ress, entropy] = r_ess_and_entropy(model);
    j["r_ess"] = ress;
    j["entropy"] = entropy;
    emit(j, g);
    return 0;
}

int cmd_verify(const GlobalOpts& g) {
    AcceptanceOptions opts;
    opts.threads = g.threads;
    opts.long_run = g.long_run;
    opts.mc_samples = g.samples;
    opts.seed = g.seed;
    auto results = run_acceptance(opts);
    int failures = 0;
    for (const auto& r : results) {
        if (!r.pass) ++failures;
        std::printf("%s  criterion %2d: %s (%.1fs)\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.seconds);
        if (!r.details.empty()) std::printf("      %s\n", r.details.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failures,
                results.size());
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mixing analysis of interval maps composed with interval-exchange permutations"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--output", g.output, "output format: json|csv|text")->capture_default_str();
    app.add_option("--threads", g.threads, "worker pool size (0 = PERMIX_THREADS or hardware)");
    app.add_flag("--long-run", g.long_run, "allow the expensive exhaustive sweeps");
    app.add_option("--tol", g.tol, "unit-circle tolerance for floating spectra")->capture_default_str();
    app.add_option("--seed", g.seed, "PRNG seed (mt19937_64)")->capture_default_str();
    app.add_option("--samples", g.samples, "Monte Carlo sample count")->capture_default_str();

    int m = 2, N = 4, ell = 2, steps = 0, which_table = 1;
    std::string sigma_text, family = "multiply", matrix = "AP";
    bool scaled = false, dump_matrix = false;

    auto* classify = app.add_subcommand("classify", "mixing verdict for sigma∘f");
    classify->add_option("--m", m, "slope of f(x) = m x mod 1");
    classify->add_option("--N", N, "number of equal subintervals")->required();
    classify->add_option("--sigma", sigma_text, "permutation literal, e.g. \"[0,2,1,3]\" or \"(0 1 2)\"");
    classify->add_option("--family", family, "multiply|subshift")->capture_default_str();

    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of a transition matrix");
    spectrum->add_option("--m", m)->required();
    spectrum->add_option("--N", N)->required();
    spectrum->add_option("--sigma", sigma_text, "permutation literal (identity if omitted)");
    spectrum->add_option("--matrix", matrix, "A|B|C|P|Q|AP|BQ")->capture_default_str();
    spectrum->add_flag("--scaled", scaled, "divide by m (transfer-operator scale)");
    spectrum->add_flag("--dump-matrix", dump_matrix, "print the integer matrix as CSV instead");

    auto* rate = app.add_subcommand("rate", "mixing rate report for sigma∘f");
    rate->add_option("--m", m)->required();
    rate->add_option("--N", N)->required();
    rate->add_option("--sigma", sigma_text);
    rate->add_option("--steps", steps, "also fit an empirical density-evolution rate");

    auto* worst = app.add_subcommand("worst", "worst-rate permutation and bound (gcd(m,N)=1)");
    worst->add_option("--m", m)->required();
    worst->add_option("--N", N)->required();

    auto* enumerate = app.add_subcommand("enumerate", "exhaustive slowdown census over S_N");
    enumerate->add_option("--m", m)->required();
    enumerate->add_option("--N", N)->required();

    auto* sample = app.add_subcommand("sample", "seeded Monte Carlo slowdown estimate");
    sample->add_option("--m", m)->required();
    sample->add_option("--N", N)->required();

    auto* tables = app.add_subcommand("tables", "reproduce census table 1 or 2 as CSV");
    tables->add_option("--which", which_table, "1 or 2")->required();

    auto* subshift = app.add_subcommand("subshift", "subshift-family census and Fredholm data");
    subshift->add_option("--ell", ell, "half the number of subintervals")->required();
    subshift->add_option("--sigma", sigma_text, "classify one permutation instead");

    auto* verify = app.add_subcommand("verify", "run the verification suite (PASS/FAIL per criterion)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (classify->parsed()) return cmd_classify(g, m, N, sigma_text, family);
        if (spectrum->parsed()) return cmd_spectrum(g, m, N, sigma_text, matrix, scaled, dump_matrix);
        if (rate->parsed()) return cmd_rate(g, m, N, sigma_text, steps);
        if (worst->parsed()) return cmd_worst(g, m, N);
        if (enumerate->parsed()) return cmd_enumerate(g, m, N);
        if (sample->parsed()) return cmd_sample(g, m, N);
        if (tables->parsed()) return cmd_tables(g, which_table);
        if (subshift->parsed()) return cmd_subshift(g, ell, sigma_text);
        if (verify->parsed()) return cmd_verify(g);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
