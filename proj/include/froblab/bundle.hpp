#pragma once

#include "froblab/hopfax.hpp"

#include <json.hpp>

#include <memory>
#include <optional>

namespace froblab {

using Json = nlohmann::ordered_json;

/// JSON-interchangeable algebra, optionally with coalgebra/antipode and
/// quasi-Hopf data.  Scalars travel as exact text in the scalar grammar.
struct AlgebraBundle {
    std::shared_ptr<Algebra> algebra;
    std::optional<Matrix> delta;    // n^2 x n
    std::optional<Matrix> counit;   // 1 x n
    std::optional<Matrix> antipode; // n x n
    std::optional<std::vector<CycScalar>> phi;      // length n^3
    std::optional<std::vector<CycScalar>> phi_inv;  // length n^3
    std::optional<std::vector<CycScalar>> alpha;    // length n
    std::optional<std::vector<CycScalar>> beta;     // length n

    bool has_coalgebra() const { return delta && counit && antipode; }
};

Json bundle_to_json(const AlgebraBundle& b);

/// Parses and validates: field types, consistent dimensions, prime p,
/// and check_algebra.  Any defect throws Error ("malformed bundle: ...").
AlgebraBundle bundle_from_json(const Json& j);

AlgebraBundle bundle_of(std::shared_ptr<Algebra> A);
AlgebraBundle bundle_of(const HopfData& Hd);

/// Requires delta/counit/antipode to be present; throws otherwise.
HopfData hopf_data_of(const AlgebraBundle& b);

}  // namespace froblab
