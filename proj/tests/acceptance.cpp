#include <cstdio>

#include "nnil/selftest.hpp"

int main() {
    const auto results = nnil::run_acceptance();
    std::size_t passed = 0;
    for (const auto& r : results) {
        if (r.pass) ++passed;
        std::printf("%s %2d %s (%s) [%.2fs]\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.detail.c_str(), r.seconds);
    }
    std::printf("%zu/%zu passed\n", passed, results.size());
    return passed == results.size() ? 0 : 1;
}
