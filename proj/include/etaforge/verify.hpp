#pragma once

#include <string>
#include <vector>

#include "etaforge/analytic.hpp"

namespace etaforge::verify {

struct CheckResult {
    std::string name;
    bool pass;
    std::string observed;
    std::string expected;
    double deviation = 0.0;  // meaningful for toleranced checks only
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// q_log_derivative(eta_chi) == -(g(conj chi)/2) E2^{chi, conj chi}, exact,
// for the five reference characters.
SuiteResult lemma1(long precision = 200);

// eta_chi == prod (eta_{chi0}|V_t)^{chi0(t) mu(t)} for the induced
// reference characters, exact.
SuiteResult lemma2(long precision = 100);

// Analytic triple-sum cusp orders against the exact closed form on
// Gamma_0(9), Gamma_0(16), Gamma_0(25).
SuiteResult lemma3(double tolerance = 1e-6);

// Integrality of l_s and the zero valence sum for all real primitive
// characters of conductor <= max_conductor.
SuiteResult valence(long max_conductor = 12);

// Full column rank of the basis coefficient matrix up to the Sturm bound
// and the cusp-count dimension bookkeeping.
SuiteResult basis(const std::vector<long>& levels = {9, 12, 16, 18, 25, 50});

// |nu^12 - 1| on the fixture generator lists of Gamma_0(9)/(16)/(25).
SuiteResult multiplier(double tolerance = 1e-4, long truncation = 500);

// The recorded generator matrices used by the multiplier suite.
const std::vector<UnimodularMatrix>& fixture_generators(long level);

SuiteResult run_suite(const std::string& name);

}  // namespace etaforge::verify
