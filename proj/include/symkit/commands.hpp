#pragma once

#include <cstdint>
#include <string>

#include "symkit/pencil.hpp"
#include "symkit/report.hpp"

namespace symkit {

/// Runs every registered claim of a registry example. Throws UnknownExample.
VerificationReport cmd_verify(const std::string& id, std::uint64_t seed);

/// The claim-free pipeline: quartic, cone test, base locus, ranks at sample
/// points and a positive definite search of `budget` trials.
VerificationReport cmd_analyze(const SymmetricPencil& pencil, std::uint64_t seed, int budget = 500,
                               const std::string& id = "pencil");

}  // namespace symkit
