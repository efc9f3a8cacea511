#include "mcd/homcalc.hpp"

#include <algorithm>

#include "mcd/error.hpp"

namespace mcd {

namespace {

// Strictly inside the clockwise walk from `from` to `to`.
bool strictly_between(const ModelParams &params, int x, int from, int to) {
    const int s = params.clockwise_steps(from, x);
    return s > 0 && s < params.clockwise_steps(from, to);
}

void require_valid(const ModelParams &params, const PairedArc &arc) {
    if (!is_valid_arc(params, arc)) throw InvalidParameters("malformed arc " + to_literal(arc));
}

// Clockwise steps from base i to whichever end of the diameter at k lies in
// the open half (i, i+N).
int diameter_offset(const ModelParams &params, int i, int k) {
    int s = params.clockwise_steps(i, k);
    if (s > params.big_n()) s -= params.big_n();
    return s;
}

}  // namespace

bool representatives_cross(const ModelParams &params, OrientedArc p, OrientedArc q) {
    const int i = params.wrap(p.from), j = params.wrap(p.to);
    const int k = params.wrap(q.from), l = params.wrap(q.to);
    if (i == k || i == l || j == k || j == l) return false;
    return strictly_between(params, k, i, j) != strictly_between(params, l, i, j);
}

bool crossing(const ModelParams &params, const PairedArc &u, const PairedArc &v) {
    require_valid(params, u);
    require_valid(params, v);
    if (u.is_diameter() && v.is_diameter()) {
        if (!params.m_is_odd()) {
            throw UnsupportedRegime("crossing of two diameters is only defined for odd m");
        }
        if (u.base() == v.base()) return false;
        const int d = params.residue_1_to_m(diameter_offset(params, u.base(), v.base()));
        return (u.color() != v.color()) == (d % 2 == 1);
    }
    for (const OrientedArc &p : representatives(params, u)) {
        for (const OrientedArc &q : representatives(params, v)) {
            if (representatives_cross(params, p, q)) return true;
        }
    }
    return false;
}

std::optional<int> distance(const ModelParams &params, const PairedArc &u, const PairedArc &v) {
    if (!crossing(params, u, v)) return std::nullopt;
    if (u.is_diameter() && v.is_diameter()) {
        return params.residue_1_to_m(diameter_offset(params, u.base(), v.base()));
    }
    for (const OrientedArc &p : representatives(params, u)) {
        for (const OrientedArc &q : representatives(params, v)) {
            if (!representatives_cross(params, p, q)) continue;
            const int s = std::min(params.clockwise_steps(p.from, q.from), params.clockwise_steps(p.from, q.to));
            return params.residue_1_to_m(s);
        }
    }
    return std::nullopt;
}

bool ext_nonzero(const ModelParams &params, const PairedArc &u, const PairedArc &v, int degree) {
    if (degree < 1 || degree > params.m()) {
        throw InvalidParameters("Ext degree must lie in 1.." + std::to_string(params.m()) + ", got " +
                                std::to_string(degree));
    }
    auto d = distance(params, u, v);
    return d && *d == degree;
}

PairTable::PairTable(const ModelParams &params) : universe_(params) {
    const std::size_t count = universe_.size();
    dist_.assign(count * count, 0);
    crossing_.assign(count, ArcSet(count));
    dist1_from_.assign(count, ArcSet(count));
    dist1_to_.assign(count, ArcSet(count));
    for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t b = 0; b < count; ++b) {
            if (undecided(a, b)) continue;
            auto d = mcd::distance(params, universe_.arc(a), universe_.arc(b));
            if (!d) continue;
            dist_[cell(a, b)] = *d;
            crossing_[a].insert(b);
            if (*d == 1) {
                dist1_from_[a].insert(b);
                dist1_to_[b].insert(a);
            }
        }
    }
}

bool PairTable::undecided(std::size_t a, std::size_t b) const noexcept {
    return !params().m_is_odd() && universe_.arc(a).is_diameter() && universe_.arc(b).is_diameter();
}

void PairTable::require_odd_m() const {
    if (!params().m_is_odd()) {
        throw UnsupportedRegime("torsion machinery is only defined for odd m, got m = " +
                                std::to_string(params().m()));
    }
}

bool PairTable::crosses(std::size_t a, std::size_t b) const { return distance(a, b) != 0; }

int PairTable::distance(std::size_t a, std::size_t b) const {
    if (undecided(a, b)) throw UnsupportedRegime("crossing of two diameters is only defined for odd m");
    return dist_.at(cell(a, b));
}

const ArcSet &PairTable::crossing_set(std::size_t a) const {
    require_odd_m();
    return crossing_.at(a);
}

const ArcSet &PairTable::dist1_from(std::size_t a) const {
    require_odd_m();
    return dist1_from_.at(a);
}

const ArcSet &PairTable::dist1_to(std::size_t a) const {
    require_odd_m();
    return dist1_to_.at(a);
}

ArcSet right_perp(const PairTable &table, const ArcSet &set) {
    table.require_odd_m();
    ArcSet blocked = table.empty_set();
    set.for_each([&](std::size_t v) { blocked |= table.dist1_from(v); });
    return blocked.complement();
}

ArcSet left_perp(const PairTable &table, const ArcSet &set) {
    table.require_odd_m();
    ArcSet blocked = table.empty_set();
    set.for_each([&](std::size_t v) { blocked |= table.dist1_to(v); });
    return blocked.complement();
}

}  // namespace mcd
