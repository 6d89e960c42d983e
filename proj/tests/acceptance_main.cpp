// Verification suite runner: one PASS/FAIL line per criterion, nonzero exit
// on any failure.  Shares its checks with `permix verify`.

#include <cstdio>
#include <cstring>
#include <string>

#include "permix/acceptance.hpp"

int main(int argc, char** argv) {
    permix::AcceptanceOptions opts;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--long-run") opts.long_run = true;
        else if (arg == "--threads" && i + 1 < argc) opts.threads = std::atoi(argv[++i]);
        else if (arg == "--samples" && i + 1 < argc) opts.mc_samples = std::atoll(argv[++i]);
        else if (arg == "--seed" && i + 1 < argc) opts.seed = std::strtoull(argv[++i], nullptr, 10);
        else {
            std::fprintf(stderr, "usage: acceptance [--long-run] [--threads T] [--samples S] [--seed X]\n");
            return 2;
        }
    }
    auto results = permix::run_acceptance(opts);
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
