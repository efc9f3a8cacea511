#include "mcd/punctured.hpp"

#include <algorithm>
#include <sstream>

#include "mcd/error.hpp"

namespace mcd {

std::strong_ordering operator<=>(const TaggedArc &x, const TaggedArc &y) noexcept {
    if (x.is_loop() != y.is_loop()) return x.is_loop() ? std::strong_ordering::greater : std::strong_ordering::less;
    if (auto c = x.i_ <=> y.i_; c != 0) return c;
    if (!x.is_loop()) return x.j_ <=> y.j_;
    return static_cast<int>(x.tag_) <=> static_cast<int>(y.tag_);
}

std::string to_literal(const TaggedArc &arc) {
    std::ostringstream os;
    os << arc;
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const TaggedArc &arc) {
    if (arc.is_loop()) return os << 'D' << arc.i() << (arc.tag() == Tag::Plus ? '+' : '-');
    return os << 'D' << arc.i() << '-' << arc.j();
}

namespace {

// Clockwise length of D_ij in the N-gon, in 1..N-1 for plain arcs.
int clockwise_length(const ModelParams &params, int i, int j) {
    return i < j ? j - i : j + params.big_n() - i;
}

}  // namespace

bool is_valid_tagged_arc(const ModelParams &params, const TaggedArc &arc) {
    const int big_n = params.big_n();
    if (arc.i() < 1 || arc.i() > big_n || arc.j() < 1 || arc.j() > big_n) return false;
    if (arc.is_loop()) return true;
    return arc.j() != params.wrap_half(arc.i() + 1);
}

bool is_tagged_m_arc(const ModelParams &params, const TaggedArc &arc) {
    if (arc.is_loop()) return true;
    return clockwise_length(params, arc.i(), arc.j()) % params.m() == 1 % params.m();
}

std::vector<TaggedArc> enumerate_tagged_m_arcs(const ModelParams &params) {
    std::vector<TaggedArc> out;
    const int big_n = params.big_n();
    for (int i = 1; i <= big_n; ++i) {
        for (int j = 1; j <= big_n; ++j) {
            if (i == j) continue;
            auto arc = TaggedArc::plain(i, j);
            if (is_valid_tagged_arc(params, arc) && is_tagged_m_arc(params, arc)) out.push_back(arc);
        }
    }
    for (int i = 1; i <= big_n; ++i) {
        out.push_back(TaggedArc::loop(i, Tag::Plus));
        out.push_back(TaggedArc::loop(i, Tag::Minus));
    }
    return out;
}

TaggedArc tau_tagged(const ModelParams &params, const TaggedArc &arc) {
    const int m = params.m();
    if (arc.is_loop()) {
        Tag t = arc.tag();
        if (params.m_is_odd()) t = t == Tag::Plus ? Tag::Minus : Tag::Plus;
        return TaggedArc::loop(params.wrap_half(arc.i() - m), t);
    }
    return TaggedArc::plain(params.wrap_half(arc.i() - m), params.wrap_half(arc.j() - m));
}

std::vector<TaggedArc> m_move_successors_tagged(const ModelParams &params, const TaggedArc &arc) {
    const int m = params.m();
    std::vector<TaggedArc> out;
    auto emit_plain = [&](int i, int j) {
        if (i == j) return;
        auto candidate = TaggedArc::plain(i, j);
        if (is_valid_tagged_arc(params, candidate) && is_tagged_m_arc(params, candidate)) {
            out.push_back(candidate);
        }
    };
    if (arc.is_loop()) {
        // Form (4): D_ii -> D_ji with j - i = m, from either tag.
        emit_plain(params.wrap_half(arc.i() + m), arc.i());
    } else {
        const int i = arc.i();
        const int j = arc.j();
        // Form (1): D_ij -> D_ik with k - j = m.
        emit_plain(i, params.wrap_half(j + m));
        // Form (2): D_ij -> D_kj with k - i = m.
        emit_plain(params.wrap_half(i + m), j);
        // Form (3): D_ij -> D_ii^{+/-} when i - j = m.
        if (params.wrap_half(j + m) == i) {
            out.push_back(TaggedArc::loop(i, Tag::Plus));
            out.push_back(TaggedArc::loop(i, Tag::Minus));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

PairedArc phi(const ModelParams &params, const TaggedArc &arc) {
    if (!is_valid_tagged_arc(params, arc) || !is_tagged_m_arc(params, arc)) {
        throw InvalidParameters("phi is defined on tagged m-arcs only, got " + to_literal(arc));
    }
    if (arc.is_loop()) {
        return PairedArc::diameter(arc.i(), arc.tag() == Tag::Plus ? Color::Red : Color::Green);
    }
    const int j = arc.i() < arc.j() ? arc.j() : arc.j() + params.big_n();
    return *arc_from_endpoints(params, arc.i(), j);
}

}  // namespace mcd
