#pragma once

// The unpunctured 2N-gon model of the m-cluster category of type D_n.
//
// Vertices are labelled 1..2N clockwise, N = m(n-1)+1. An indecomposable
// object is a PairedArc: either the 180-degree rotation orbit of a chord
// {(a,b), (a+N,b+N)} or one of the two coloured copies of a diameter
// (i, i+N). Every arithmetic result is wrapped back into 1..2N.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

namespace mcd {

class ModelParams {
public:
    /// Throws InvalidParameters unless n >= 3 and m >= 1.
    static ModelParams make(int n, int m);

    int n() const noexcept { return n_; }
    int m() const noexcept { return m_; }
    /// N = m*n - m + 1.
    int big_n() const noexcept { return big_n_; }
    int vertex_count() const noexcept { return 2 * big_n_; }
    bool m_is_odd() const noexcept { return (m_ & 1) != 0; }

    /// Wraps any integer label into 1..2N.
    int wrap(long long v) const noexcept;
    /// Wraps any integer label into 1..N (punctured model and diameter bases).
    int wrap_half(long long v) const noexcept;
    /// Number of clockwise boundary steps from `from` to `to`, in 0..2N-1.
    int clockwise_steps(int from, int to) const noexcept;
    /// Residue of `steps` modulo m expressed in 1..m.
    int residue_1_to_m(long long steps) const noexcept;

    friend bool operator==(const ModelParams &, const ModelParams &) = default;

private:
    ModelParams(int n, int m) : n_(n), m_(m), big_n_(m * n - m + 1) {}

    int n_;
    int m_;
    int big_n_;
};

enum class Color : std::uint8_t { Red, Green };

inline Color opposite(Color c) noexcept { return c == Color::Red ? Color::Green : Color::Red; }
const char *to_string(Color c) noexcept;

/// Clockwise oriented endpoint pair of one geometric arc in the 2N-gon.
struct OrientedArc {
    int from;
    int to;
};

/// A rotation orbit of a chord, or a coloured diameter.
///
/// Chords are stored by their canonical representative: the lexicographically
/// least (a,b) in the orbit with a < b and 2 <= b - a <= N - 1. Diameters are
/// stored once by their base vertex i in 1..N.
class PairedArc {
public:
    /// Requires an already canonical chord; see `arc_from_endpoints` for the
    /// canonicalising constructor.
    static PairedArc chord(int a, int b) noexcept { return PairedArc(false, a, b, Color::Red); }
    static PairedArc diameter(int base, Color color) noexcept {
        return PairedArc(true, base, 0, color);
    }

    bool is_diameter() const noexcept { return diameter_; }
    /// Chord: smaller endpoint. Diameter: base vertex.
    int a() const noexcept { return a_; }
    /// Chord only.
    int b() const noexcept { return b_; }
    int base() const noexcept { return a_; }
    /// Diameter only.
    Color color() const noexcept { return color_; }

    /// Chords before diameters; chords lexicographic, diameters by (base, Red < Green).
    friend std::strong_ordering operator<=>(const PairedArc &x, const PairedArc &y) noexcept;
    friend bool operator==(const PairedArc &x, const PairedArc &y) noexcept {
        return (x <=> y) == std::strong_ordering::equal;
    }

private:
    PairedArc(bool d, int a, int b, Color c) : diameter_(d), a_(a), b_(b), color_(c) {}

    bool diameter_;
    int a_;
    int b_;
    Color color_;
};

/// Literal form: "a-b" for chords, "dIr" / "dIg" for diameters.
std::string to_literal(const PairedArc &arc);
std::ostream &operator<<(std::ostream &os, const PairedArc &arc);

/// The (up to two) oriented representatives of an arc. Chords are oriented
/// along their short side, so `to - from` (clockwise) is below N. A diameter
/// has one representative (i, i+N).
struct Representatives {
    std::array<OrientedArc, 2> arcs;
    int count;

    const OrientedArc *begin() const noexcept { return arcs.data(); }
    const OrientedArc *end() const noexcept { return arcs.data() + count; }
};
Representatives representatives(const ModelParams &params, const PairedArc &arc);

/// The paired arc through vertices x and y (any labels, any orientation).
/// Returns nothing when {x,y} is not an arc (equal or neighbouring vertices).
/// Opposite vertices yield the diameter in `diameter_color`.
std::optional<PairedArc> arc_from_endpoints(const ModelParams &params, long long x, long long y,
                                            Color diameter_color = Color::Red);

/// True iff `arc` is well formed for `params` (canonical chord or in-range diameter).
bool is_valid_arc(const ModelParams &params, const PairedArc &arc);

/// Chords: clockwise gap congruent to 1 mod m. Diameters: always.
bool is_m_arc(const ModelParams &params, const PairedArc &arc);

/// All m-arcs in index order (chords lexicographic, then diameters by base and
/// colour). The position in this list is the arc's permanent index.
std::vector<PairedArc> enumerate_m_arcs(const ModelParams &params);

/// AR-translation: rotate by m vertices counterclockwise; diameters change
/// colour when m is odd.
PairedArc tau(const ModelParams &params, const PairedArc &arc);
PairedArc tau_inverse(const ModelParams &params, const PairedArc &arc);

/// Targets of the clockwise m-moves starting at `arc`, sorted by arc order.
std::vector<PairedArc> m_move_successors(const ModelParams &params, const PairedArc &arc);

/// Fixed indexing of the m-arcs of one model; the basis for ArcSet bit positions.
class ArcUniverse {
public:
    explicit ArcUniverse(const ModelParams &params);

    const ModelParams &params() const noexcept { return params_; }
    std::size_t size() const noexcept { return arcs_.size(); }
    const PairedArc &arc(std::size_t index) const { return arcs_.at(index); }
    const std::vector<PairedArc> &arcs() const noexcept { return arcs_; }
    std::optional<std::size_t> index_of(const PairedArc &arc) const;
    /// Like `index_of` but throws InvalidParameters for arcs outside the universe.
    std::size_t require_index(const PairedArc &arc) const;

private:
    static std::uint64_t key(const PairedArc &arc) noexcept;

    ModelParams params_;
    std::vector<PairedArc> arcs_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
};

}  // namespace mcd
