#pragma once

// Ptolemy diagrams of type D: forced arcs, violations, completion, torsion
// pairs and enumeration. Everything here requires odd m.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <variant>
#include <vector>

#include "mcd/arc_set.hpp"
#include "mcd/homcalc.hpp"
#include "mcd/model.hpp"

namespace mcd {

/// Arcs a Ptolemy diagram containing the crossing pair u, v must also contain,
/// sorted by arc order.
///
/// Two chords: every m-arc joining an endpoint of one crossing representative
/// to an endpoint of the other; opposite endpoints give both diameters.
/// Two diameters: the m-arcs among (i,k), (i,k+N), (i+N,k), (i+N,k+N).
/// Diameter (i,i+N) and chord: for the representative (k,l) it crosses, taken
/// clockwise along its short side with e the diameter end inside it, the
/// m-arcs among (i,k), (i,l), (i+N,k), (i+N,l) that miss (k+N,l+N), plus the
/// diameter at k of the same colour when l - e = 1 mod m and the one at l
/// when e - k = 1 mod m.
///
/// Throws PreconditionViolation if u and v do not cross and UnsupportedRegime
/// for even m.
std::vector<PairedArc> forced_arcs(const ModelParams &params, const PairedArc &u, const PairedArc &v);

struct TorsionPair {
    ArcSet torsion;
    ArcSet torsion_free;
};

struct Violation {
    std::size_t first;
    std::size_t second;
    ArcSet missing;
};

/// Pair table plus the forced-arc set of every crossing pair.
class PtolemyChecker {
public:
    /// Throws UnsupportedRegime for even m.
    explicit PtolemyChecker(const ModelParams &params);

    const PairTable &table() const noexcept { return table_; }
    const ArcUniverse &universe() const noexcept { return table_.universe(); }
    std::size_t size() const noexcept { return table_.size(); }

    /// Throws PreconditionViolation unless arcs a and b cross.
    ArcSet forced(std::size_t a, std::size_t b) const;

    /// One entry per unordered crossing pair in U with forced arcs missing
    /// from U, ordered by (first, second) with first < second.
    std::vector<Violation> violations(const ArcSet &set) const;
    bool is_ptolemy(const ArcSet &set) const;
    /// Smallest Ptolemy diagram containing the set.
    ArcSet complete(const ArcSet &set) const;
    /// (U, U^perp). Throws PreconditionViolation listing the violations for a
    /// non-Ptolemy set, and Error if the double-perp fixpoint fails.
    TorsionPair torsion_pair(const ArcSet &set) const;

private:
    const std::uint64_t *forced_words(std::size_t a, std::size_t b) const noexcept {
        return forced_.data() + (a * size() + b) * words_;
    }

    PairTable table_;
    std::size_t words_;
    // Forced arcs per ordered crossing pair, `words_` words each.
    std::vector<std::uint64_t> forced_;
};

inline std::vector<Violation> ptolemy_violations(const PtolemyChecker &c, const ArcSet &s) { return c.violations(s); }
inline bool is_ptolemy(const PtolemyChecker &c, const ArcSet &s) { return c.is_ptolemy(s); }
inline ArcSet ptolemy_complete(const PtolemyChecker &c, const ArcSet &s) { return c.complete(s); }
inline TorsionPair torsion_pair_of(const PtolemyChecker &c, const ArcSet &s) { return c.torsion_pair(s); }

struct Exhaustive {
    /// Refuse universes larger than this many arcs (2^bits subsets).
    std::size_t max_bits = 20;
    /// Worker threads over disjoint bit-pattern ranges; output order and
    /// count do not depend on it.
    unsigned threads = 1;
};

/// Closures of every generator set with at most `max_generators` arcs.
/// Under-approximates the census.
struct ClosureGenerated {
    std::size_t max_generators = 2;
};

/// `count` pseudo-random subsets from `seed`, each with its own random
/// density. Ptolemy ones are emitted once each.
struct RandomSample {
    std::uint64_t count = 10000;
    std::uint64_t seed = 1;
};

using EnumerationStrategy = std::variant<Exhaustive, ClosureGenerated, RandomSample>;

struct EnumerationResult {
    std::uint64_t count = 0;
    /// True only for a complete exhaustive run.
    bool exact = false;
};

/// Return false to stop the enumeration early.
using ArcSetSink = std::function<bool(const ArcSet &)>;

/// Emits distinct Ptolemy diagrams in a deterministic order: bit-pattern order
/// for Exhaustive, first-seen order otherwise. A null sink only counts.
/// Throws PreconditionViolation when Exhaustive exceeds its cap.
EnumerationResult enumerate_ptolemy(const PtolemyChecker &checker, const EnumerationStrategy &strategy,
                                    const ArcSetSink &sink = nullptr);

/// Deterministic random subset generator shared by sampling code: draws a
/// density, then each arc independently.
class SubsetSampler {
public:
    SubsetSampler(std::size_t universe_size, std::uint64_t seed);
    ArcSet next();

private:
    std::size_t size_;
    std::mt19937_64 rng_;
};

}  // namespace mcd
