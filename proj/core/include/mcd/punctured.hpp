#pragma once

// Tagged arcs in a punctured N-gon, vertices 1..N, all arithmetic modulo N.

#include <compare>
#include <ostream>
#include <string>
#include <vector>

#include "mcd/model.hpp"

namespace mcd {

enum class Tag : std::uint8_t { Plus, Minus };

/// D_ij (clockwise from i to j, j not in {i, i+1}) or a tagged loop D_ii^{+/-}.
class TaggedArc {
public:
    static TaggedArc plain(int i, int j) noexcept { return TaggedArc(i, j, Tag::Plus); }
    static TaggedArc loop(int i, Tag tag) noexcept { return TaggedArc(i, i, tag); }

    bool is_loop() const noexcept { return i_ == j_; }
    int i() const noexcept { return i_; }
    int j() const noexcept { return j_; }
    /// Loops only.
    Tag tag() const noexcept { return tag_; }

    /// Plain arcs lexicographic by (i,j), loops last by (i, Plus < Minus).
    friend std::strong_ordering operator<=>(const TaggedArc &x, const TaggedArc &y) noexcept;
    friend bool operator==(const TaggedArc &x, const TaggedArc &y) noexcept {
        return (x <=> y) == std::strong_ordering::equal;
    }

private:
    TaggedArc(int i, int j, Tag t) : i_(i), j_(j), tag_(t) {}

    int i_;
    int j_;
    Tag tag_;
};

/// "D3-6", "D1+", "D1-".
std::string to_literal(const TaggedArc &arc);
std::ostream &operator<<(std::ostream &os, const TaggedArc &arc);

bool is_valid_tagged_arc(const ModelParams &params, const TaggedArc &arc);
bool is_tagged_m_arc(const ModelParams &params, const TaggedArc &arc);

/// All tagged m-arcs, plain arcs lexicographic then loops by (i, tag).
std::vector<TaggedArc> enumerate_tagged_m_arcs(const ModelParams &params);

TaggedArc tau_tagged(const ModelParams &params, const TaggedArc &arc);

/// Union of the four m-move forms; only m-arcs are returned, sorted.
std::vector<TaggedArc> m_move_successors_tagged(const ModelParams &params, const TaggedArc &arc);

/// The bijection onto the paired m-arcs of the 2N-gon.
/// D_ij (i<j) -> (i,j), D_ij (i>j) -> (i,j+N), D_ii^+ -> red diameter, D_ii^- -> green.
PairedArc phi(const ModelParams &params, const TaggedArc &arc);

}  // namespace mcd
