#pragma once

// m-rigid sets (pairwise non-crossing m-arcs) and (m+2)-angulations (maximal
// ones). Requires odd m.

#include <cstddef>
#include <cstdint>

#include "mcd/arc_set.hpp"
#include "mcd/homcalc.hpp"
#include "mcd/ptolemy.hpp"

namespace mcd {

bool is_rigid(const PairTable &table, const ArcSet &set);
/// Rigid, and every arc outside the set crosses some member.
bool is_angulation(const PairTable &table, const ArcSet &set);

/// Default cap on the arc universe for the enumerators.
inline constexpr std::size_t kAngulationArcCap = 256;

struct AngulationResult {
    std::uint64_t count = 0;
    /// False when the sink stopped the run.
    bool complete = true;
};

/// Maximal non-crossing sets, by pivoted Bron-Kerbosch over the
/// compatibility graph with branching in arc-index order. Throws
/// PreconditionViolation when the universe exceeds `max_arcs`.
AngulationResult enumerate_angulations(const PairTable &table, const ArcSetSink &sink = nullptr,
                                       std::size_t max_arcs = kAngulationArcCap);

/// Every non-crossing set including the empty one, in depth-first order by
/// arc index.
AngulationResult enumerate_rigid(const PairTable &table, const ArcSetSink &sink = nullptr,
                                 std::size_t max_arcs = kAngulationArcCap);

}  // namespace mcd
