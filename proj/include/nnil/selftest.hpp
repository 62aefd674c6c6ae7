#ifndef NNIL_SELFTEST_HPP
#define NNIL_SELFTEST_HPP

#include <string>
#include <vector>

namespace nnil {

struct CriterionResult {
    int id;
    std::string name;
    bool pass;
    std::string detail;
    double seconds;
};

// Runs the twelve acceptance checks in order.
std::vector<CriterionResult> run_acceptance();

}  // namespace nnil

#endif
