#pragma once

#include <string>
#include <vector>

#include "qgalois/params.hpp"

namespace qgalois {

// Outcome of one verification suite: how many identities were checked, the
// overall flag, and textual descriptions of the first counterexamples.
struct CheckReport {
    std::string suite;
    bool pass = true;
    long checks = 0;
    std::vector<std::string> failures;

    void count() { ++checks; }
    void fail(const std::string& message) {
        pass = false;
        if (failures.size() < 8) failures.push_back(message);
    }
};

// Suite drivers. Each one checks a documented identity family exhaustively
// on small enumerations plus seeded random sampling; all comparisons are
// exact. `cap` bounds truncation degrees where one applies.
CheckReport verify_cocycle(const ParamSet& params, unsigned seed);
CheckReport verify_hopf(const ParamSet& params, unsigned seed);
CheckReport verify_comodule(const ParamSet& params, unsigned seed, int cap);
CheckReport verify_serre_transport(const ParamSet& params);
CheckReport verify_oracle(const ParamSet& params, unsigned seed);
CheckReport verify_lemma_mu(const ParamSet& params, unsigned seed, int cap);
CheckReport verify_ms_twist(const ParamSet& params);
CheckReport verify_engine(const ParamSet& params, unsigned seed);

// Dispatch by the command-line suite name: cocycle, hopf, comodule,
// serre-transport, oracle, lemma1, ms-twist. Throws Error on unknown names.
CheckReport run_suite(const std::string& name, const ParamSet& params, unsigned seed, int cap);

}  // namespace qgalois
