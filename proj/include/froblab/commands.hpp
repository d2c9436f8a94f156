#pragma once

#include "froblab/bundle.hpp"
#include "froblab/reconstruct.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace froblab {

/// Outcome of one CLI-level command: process exit status (0 success,
/// 1 verdict/assertion failure, 2 malformed input) plus the JSON report.
struct CommandResult {
    int status = 0;
    Json report;
};

/// Cap for the cubic axiom loop; FROBLAB_MAX_DIM overrides the default 64.
int axiom_triple_cap();

/// Builds the dimension-p^2 algebra, verifies its Hopf axioms and
/// radical, tabulates the projective indecomposables (dim, soc, cosoc,
/// dual index) and decides Frobenius.
CommandResult cmd_taft_analyze(int p, std::uint64_t seed);

/// Loads an algebra bundle and decides quasi-Frobenius/Frobenius.  The
/// optional projectives JSON ({"quasi_frobenius": bool, "soc_cosoc":
/// [[s, c], ...]}) supplies exact structural data for algebras too large
/// for the generic computations.
CommandResult cmd_frobcheck(const std::string& bundle_text,
                            const std::optional<std::string>& projectives_text,
                            std::uint64_t seed);

/// Verifies the axiom family ("hopf", "weak-hopf" or "quasi-hopf") on a
/// bundle carrying coalgebra data.
CommandResult cmd_axioms_verify(const std::string& bundle_text, const std::string& law);

/// Prints the convolution criterion table and verdict for (p, d); with
/// reconstruct also builds the endomorphism algebra, analyzes it
/// directly, and cross-checks prediction against computation.
CommandResult cmd_taftd(int p, const std::vector<long long>& d, bool reconstruct,
                        std::uint64_t seed);

/// Bundle JSON for a built-in algebra: "taft-P", "group-P" or
/// "pair-groupoid-N" (P prime, N >= 1).
CommandResult cmd_export_builtin(const std::string& name);

}  // namespace froblab
