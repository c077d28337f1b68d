#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gcfluct/gcs_linalg.hpp"

namespace gcfluct {

enum class Bound { AtMost, AtLeast };

struct CheckResult {
    std::string name;
    double value = 0.0;
    double limit = 0.0;
    Bound bound = Bound::AtMost;

    bool pass() const;
};

struct VerifyOptions {
    int n = 2;
    std::uint64_t seed = 42;
    int trials = 40;
    /// Extra candidate GCS (e.g. from a matrix file) checked against the axioms.
    std::optional<Gcs> candidate;
};

/// Random structures with bounded conditioning, for property checks.
SymplecticForm random_symplectic(int n, std::mt19937_64& gen);
ComplexStructure random_complex(int n, std::mt19937_64& gen);
TwoForm random_two_form(int n, std::mt19937_64& gen, double scale = 1.0);

/// Runs the GCS, fluctuation, coherent-state and accelerated-frame
/// property checks at fibre half-dimension `opts.n`.
std::vector<CheckResult> run_verify_suite(const VerifyOptions& opts);

/// One line per check.
std::string format_check(const CheckResult& c);

}  // namespace gcfluct
