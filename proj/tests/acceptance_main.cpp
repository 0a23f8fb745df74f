// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <thread>

#include "qising/validate.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = 12345;
    int parallelism = static_cast<int>(std::thread::hardware_concurrency());
    if (parallelism < 1) parallelism = 1;
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::strcmp(argv[i], "--seed") == 0)
            seed = std::strtoull(argv[i + 1], nullptr, 10);
        if (std::strcmp(argv[i], "--parallelism") == 0)
            parallelism = std::atoi(argv[i + 1]);
    }
    auto results = qising::validate::run_all(seed, parallelism);
    return qising::validate::report(results) ? 0 : 1;
}
