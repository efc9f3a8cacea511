#include "mcd/model.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mcd/error.hpp"

namespace mcd {

ModelParams ModelParams::make(int n, int m) {
    if (n < 3) {
        throw InvalidParameters("rank n must be at least 3, got " + std::to_string(n));
    }
    if (m < 1) {
        throw InvalidParameters("level m must be at least 1, got " + std::to_string(m));
    }
    // Keeps 2N and all intermediate labels comfortably inside int.
    if (static_cast<long long>(m) * n > 1'000'000) {
        throw InvalidParameters("model too large: m*n must not exceed 1000000");
    }
    return ModelParams(n, m);
}

int ModelParams::wrap(long long v) const noexcept {
    const long long size = vertex_count();
    long long r = (v - 1) % size;
    if (r < 0) r += size;
    return static_cast<int>(r + 1);
}

int ModelParams::wrap_half(long long v) const noexcept {
    const long long size = big_n_;
    long long r = (v - 1) % size;
    if (r < 0) r += size;
    return static_cast<int>(r + 1);
}

int ModelParams::clockwise_steps(int from, int to) const noexcept {
    return wrap(static_cast<long long>(to) - from + 1) - 1;
}

int ModelParams::residue_1_to_m(long long steps) const noexcept {
    long long r = steps % m_;
    if (r <= 0) r += m_;
    return static_cast<int>(r);
}

const char *to_string(Color c) noexcept { return c == Color::Red ? "red" : "green"; }

std::strong_ordering operator<=>(const PairedArc &x, const PairedArc &y) noexcept {
    if (x.diameter_ != y.diameter_) return x.diameter_ ? std::strong_ordering::greater : std::strong_ordering::less;
    if (auto c = x.a_ <=> y.a_; c != 0) return c;
    if (!x.diameter_) return x.b_ <=> y.b_;
    return static_cast<int>(x.color_) <=> static_cast<int>(y.color_);
}

std::string to_literal(const PairedArc &arc) {
    std::ostringstream os;
    os << arc;
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const PairedArc &arc) {
    if (arc.is_diameter()) {
        return os << 'd' << arc.base() << (arc.color() == Color::Red ? 'r' : 'g');
    }
    return os << arc.a() << '-' << arc.b();
}

Representatives representatives(const ModelParams &params, const PairedArc &arc) {
    const int big_n = params.big_n();
    if (arc.is_diameter()) {
        return Representatives{{OrientedArc{arc.base(), arc.base() + big_n}, OrientedArc{}}, 1};
    }
    return Representatives{{OrientedArc{arc.a(), arc.b()},
                            OrientedArc{params.wrap(arc.a() + big_n), params.wrap(arc.b() + big_n)}},
                           2};
}

std::optional<PairedArc> arc_from_endpoints(const ModelParams &params, long long x, long long y,
                                            Color diameter_color) {
    const int big_n = params.big_n();
    const int size = params.vertex_count();
    int p = params.wrap(x);
    int q = params.wrap(y);
    int steps = params.clockwise_steps(p, q);
    if (steps == 0 || steps == 1 || steps == size - 1) return std::nullopt;
    if (steps == big_n) return PairedArc::diameter(params.wrap_half(p), diameter_color);
    if (steps > big_n) {
        std::swap(p, q);
        steps = size - steps;
    }
    // Among the two rotations of the short orientation keep the non-wrapping
    // one with the smaller start.
    int best = 0;
    for (int start : {p, params.wrap(p + big_n)}) {
        if (start + steps <= size && (best == 0 || start < best)) best = start;
    }
    return PairedArc::chord(best, best + steps);
}

bool is_valid_arc(const ModelParams &params, const PairedArc &arc) {
    if (arc.is_diameter()) return arc.base() >= 1 && arc.base() <= params.big_n();
    if (arc.a() < 1 || arc.b() > params.vertex_count() || arc.a() >= arc.b()) return false;
    auto canonical = arc_from_endpoints(params, arc.a(), arc.b());
    return canonical && *canonical == arc;
}

bool is_m_arc(const ModelParams &params, const PairedArc &arc) {
    if (arc.is_diameter()) return true;
    return (arc.b() - arc.a()) % params.m() == 1 % params.m();
}

std::vector<PairedArc> enumerate_m_arcs(const ModelParams &params) {
    std::set<PairedArc> chords;
    const int size = params.vertex_count();
    for (int a = 1; a <= size; ++a) {
        for (int gap = 2; gap < params.big_n(); ++gap) {
            if (gap % params.m() != 1 % params.m()) continue;
            chords.insert(*arc_from_endpoints(params, a, a + gap));
        }
    }
    std::vector<PairedArc> out(chords.begin(), chords.end());
    for (int i = 1; i <= params.big_n(); ++i) {
        out.push_back(PairedArc::diameter(i, Color::Red));
        out.push_back(PairedArc::diameter(i, Color::Green));
    }
    return out;
}

namespace {

PairedArc rotate(const ModelParams &params, const PairedArc &arc, int shift) {
    if (arc.is_diameter()) {
        Color c = params.m_is_odd() ? opposite(arc.color()) : arc.color();
        return PairedArc::diameter(params.wrap_half(arc.base() + shift), c);
    }
    return *arc_from_endpoints(params, arc.a() + shift, arc.b() + shift);
}

}  // namespace

PairedArc tau(const ModelParams &params, const PairedArc &arc) { return rotate(params, arc, -params.m()); }

PairedArc tau_inverse(const ModelParams &params, const PairedArc &arc) {
    return rotate(params, arc, params.m());
}

std::vector<PairedArc> m_move_successors(const ModelParams &params, const PairedArc &arc) {
    const int m = params.m();
    const int big_n = params.big_n();
    std::vector<PairedArc> out;
    if (arc.is_diameter()) {
        // Advancing either end of (i, i+N) by m gives the same orbit.
        out.push_back(*arc_from_endpoints(params, arc.base() + m, arc.base() + big_n));
        return out;
    }
    const int a = arc.a();
    const int b = arc.b();
    const int length = b - a;
    // Pivot on b, advance a.
    if (length - m >= 2) out.push_back(*arc_from_endpoints(params, a + m, b));
    // Pivot on a, advance b; landing opposite a yields both diameters.
    if (length + m < big_n) {
        out.push_back(*arc_from_endpoints(params, a, b + m));
    } else if (length + m == big_n) {
        out.push_back(PairedArc::diameter(params.wrap_half(a), Color::Red));
        out.push_back(PairedArc::diameter(params.wrap_half(a), Color::Green));
    }
    std::sort(out.begin(), out.end());
    return out;
}

ArcUniverse::ArcUniverse(const ModelParams &params) : params_(params), arcs_(enumerate_m_arcs(params)) {
    index_.reserve(arcs_.size());
    for (std::size_t i = 0; i < arcs_.size(); ++i) index_.emplace(key(arcs_[i]), i);
}

std::uint64_t ArcUniverse::key(const PairedArc &arc) noexcept {
    const std::uint64_t d = arc.is_diameter() ? 1 : 0;
    const std::uint64_t second = arc.is_diameter() ? static_cast<std::uint64_t>(arc.color()) : arc.b();
    return (d << 63) | (static_cast<std::uint64_t>(arc.a()) << 32) | second;
}

std::optional<std::size_t> ArcUniverse::index_of(const PairedArc &arc) const {
    auto it = index_.find(key(arc));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t ArcUniverse::require_index(const PairedArc &arc) const {
    if (auto i = index_of(arc)) return *i;
    throw InvalidParameters("arc " + to_literal(arc) + " is not an m-arc of this model");
}

}  // namespace mcd
