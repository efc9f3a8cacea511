#pragma once

// Crossing, distance and Ext-nonvanishing of m-arcs, and the perpendicular
// set operators.

#include <cstdint>
#include <optional>
#include <vector>

#include "mcd/arc_set.hpp"
#include "mcd/model.hpp"

namespace mcd {

/// True iff the oriented arcs p and q have four distinct endpoints that
/// interleave around the 2N-gon.
bool representatives_cross(const ModelParams &params, OrientedArc p, OrientedArc q);

/// Crossing of paired arcs. Chord orbits (and a chord with a diameter) cross
/// iff some pair of representatives interleaves. Two diameters on different
/// bases cross iff "colours differ" equals "d(u,v) is odd"; the two colours
/// on one base never cross.
///
/// Throws InvalidParameters for malformed arcs and UnsupportedRegime for two
/// diameters when m is even.
bool crossing(const ModelParams &params, const PairedArc &u, const PairedArc &v);

/// Distance from u to v in 1..m, or nothing when they do not cross: clockwise
/// steps from the start of a representative of u to the nearest endpoint of a
/// crossing representative of v, reduced modulo m (residue 0 reported as m).
std::optional<int> distance(const ModelParams &params, const PairedArc &u, const PairedArc &v);

/// crossing(u,v) and distance(u,v) == degree. Throws InvalidParameters unless
/// 1 <= degree <= m.
bool ext_nonzero(const ModelParams &params, const PairedArc &u, const PairedArc &v, int degree);

/// Precomputed crossing and distance matrices over an ArcUniverse.
class PairTable {
public:
    explicit PairTable(const ModelParams &params);

    const ModelParams &params() const noexcept { return universe_.params(); }
    const ArcUniverse &universe() const noexcept { return universe_; }
    std::size_t size() const noexcept { return universe_.size(); }

    ArcSet empty_set() const { return ArcSet(size()); }
    ArcSet full_set() const { return ArcSet::full(size()); }

    /// Throws UnsupportedRegime for a pair of diameters when m is even.
    bool crosses(std::size_t a, std::size_t b) const;
    /// 0 when the pair does not cross. Same regime rule as `crosses`.
    int distance(std::size_t a, std::size_t b) const;
    /// {b : a crosses b}. Throws UnsupportedRegime when m is even.
    const ArcSet &crossing_set(std::size_t a) const;
    /// {b : d(a,b) = 1}. Throws UnsupportedRegime when m is even.
    const ArcSet &dist1_from(std::size_t a) const;
    /// {b : d(b,a) = 1}. Throws UnsupportedRegime when m is even.
    const ArcSet &dist1_to(std::size_t a) const;

    /// Throws UnsupportedRegime when m is even.
    void require_odd_m() const;

private:
    std::size_t cell(std::size_t a, std::size_t b) const noexcept { return a * size() + b; }
    bool undecided(std::size_t a, std::size_t b) const noexcept;

    ArcUniverse universe_;
    // Distance per ordered pair, 0 when not crossing.
    std::vector<int> dist_;
    std::vector<ArcSet> crossing_;
    std::vector<ArcSet> dist1_from_;
    std::vector<ArcSet> dist1_to_;
};

/// {u : every v in U crossing u has d(v,u) > 1}. Requires odd m.
ArcSet right_perp(const PairTable &table, const ArcSet &set);
/// {u : every v in U crossing u has d(u,v) > 1}. Requires odd m.
ArcSet left_perp(const PairTable &table, const ArcSet &set);

}  // namespace mcd
