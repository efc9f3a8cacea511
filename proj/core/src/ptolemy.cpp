#include "mcd/ptolemy.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <thread>

#include "mcd/error.hpp"

namespace mcd {

namespace {

void require_odd(const ModelParams &params) {
    if (!params.m_is_odd()) {
        throw UnsupportedRegime("Ptolemy diagrams are only defined for odd m, got m = " + std::to_string(params.m()));
    }
}

class Collector {
public:
    explicit Collector(const ModelParams &params) : params_(params) {}

    // The arc through x and y if it is an m-arc; both colours when opposite.
    void add_span(long long x, long long y) {
        auto arc = arc_from_endpoints(params_, x, y);
        if (!arc) return;
        if (arc->is_diameter()) {
            add(PairedArc::diameter(arc->base(), Color::Red));
            add(PairedArc::diameter(arc->base(), Color::Green));
        } else if (is_m_arc(params_, *arc)) {
            add(*arc);
        }
    }
    void add(const PairedArc &arc) { arcs_.insert(arc); }
    std::vector<PairedArc> take() const { return {arcs_.begin(), arcs_.end()}; }

private:
    const ModelParams &params_;
    std::set<PairedArc> arcs_;
};

void forced_chord_chord(const ModelParams &params, const PairedArc &u, const PairedArc &v, Collector &out) {
    for (const OrientedArc &p : representatives(params, u)) {
        for (const OrientedArc &q : representatives(params, v)) {
            if (!representatives_cross(params, p, q)) continue;
            out.add_span(p.from, q.from);
            out.add_span(p.from, q.to);
            out.add_span(p.to, q.from);
            out.add_span(p.to, q.to);
        }
    }
}

void forced_diameter_diameter(const ModelParams &params, const PairedArc &u, const PairedArc &v, Collector &out) {
    const int big_n = params.big_n();
    const int i = u.base();
    const int k = v.base();
    out.add_span(i, k);
    out.add_span(i, k + big_n);
    out.add_span(i + big_n, k);
    out.add_span(i + big_n, k + big_n);
}

void forced_diameter_chord(const ModelParams &params, const PairedArc &diam, const PairedArc &chord,
                           Collector &out) {
    const int big_n = params.big_n();
    const int m = params.m();
    const OrientedArc d{diam.base(), diam.base() + big_n};
    for (const OrientedArc &q : representatives(params, chord)) {
        if (!representatives_cross(params, d, q)) continue;
        // Representatives are already oriented along the short side.
        const int k = q.from;
        const int l = q.to;
        const OrientedArc partner{params.wrap(k + big_n), params.wrap(l + big_n)};
        for (int x : {d.from, d.to}) {
            for (int y : {k, l}) {
                auto arc = arc_from_endpoints(params, x, y);
                if (!arc || !is_m_arc(params, *arc)) continue;
                if (representatives_cross(params, OrientedArc{x, y}, partner)) continue;
                out.add(*arc);
            }
        }
        const int inside = params.clockwise_steps(k, d.from) < params.clockwise_steps(k, l) ? d.from : d.to;
        if (params.clockwise_steps(inside, l) % m == 1 % m) {
            out.add(PairedArc::diameter(params.wrap_half(k), diam.color()));
        }
        if (params.clockwise_steps(k, inside) % m == 1 % m) {
            out.add(PairedArc::diameter(params.wrap_half(l), diam.color()));
        }
    }
}

std::string describe(const ArcUniverse &universe, const std::vector<Violation> &violations) {
    std::ostringstream os;
    for (const Violation &v : violations) {
        os << "\n  " << to_literal(universe.arc(v.first)) << " x " << to_literal(universe.arc(v.second))
           << " misses";
        v.missing.for_each([&](std::size_t i) { os << ' ' << to_literal(universe.arc(i)); });
    }
    return os.str();
}

}  // namespace

std::vector<PairedArc> forced_arcs(const ModelParams &params, const PairedArc &u, const PairedArc &v) {
    require_odd(params);
    if (!crossing(params, u, v)) {
        throw PreconditionViolation("forced arcs need a crossing pair; " + to_literal(u) + " and " + to_literal(v) +
                                    " do not cross");
    }
    Collector out(params);
    if (u.is_diameter() && v.is_diameter()) {
        forced_diameter_diameter(params, u, v, out);
    } else if (u.is_diameter()) {
        forced_diameter_chord(params, u, v, out);
    } else if (v.is_diameter()) {
        forced_diameter_chord(params, v, u, out);
    } else {
        forced_chord_chord(params, u, v, out);
    }
    return out.take();
}

PtolemyChecker::PtolemyChecker(const ModelParams &params)
    : table_((require_odd(params), params)), words_((table_.size() + 63) / 64) {
    const std::size_t count = size();
    forced_.assign(count * count * words_, 0);
    for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t b = a + 1; b < count; ++b) {
            if (!table_.crosses(a, b)) continue;
            for (const PairedArc &arc : forced_arcs(params, universe().arc(a), universe().arc(b))) {
                const std::size_t idx = universe().require_index(arc);
                forced_[(a * count + b) * words_ + idx / 64] |= std::uint64_t{1} << (idx % 64);
            }
            std::copy_n(forced_words(a, b), words_, forced_.begin() + static_cast<std::ptrdiff_t>((b * count + a) * words_));
        }
    }
}

ArcSet PtolemyChecker::forced(std::size_t a, std::size_t b) const {
    if (!table_.crosses(a, b)) {
        throw PreconditionViolation("forced arcs need a crossing pair; " + to_literal(universe().arc(a)) + " and " +
                                    to_literal(universe().arc(b)) + " do not cross");
    }
    ArcSet out(size());
    std::copy_n(forced_words(a, b), words_, out.mutable_words().begin());
    return out;
}

std::vector<Violation> PtolemyChecker::violations(const ArcSet &set) const {
    std::vector<Violation> out;
    set.for_each([&](std::size_t a) {
        ArcSet partners = table_.crossing_set(a) & set;
        partners.for_each([&](std::size_t b) {
            if (b <= a) return;
            ArcSet missing = forced(a, b) - set;
            if (!missing.empty()) out.push_back(Violation{a, b, std::move(missing)});
        });
    });
    return out;
}

bool PtolemyChecker::is_ptolemy(const ArcSet &set) const {
    const auto &sw = set.words();
    bool ok = true;
    set.for_each([&](std::size_t a) {
        if (!ok) return;
        const auto &cw = table_.crossing_set(a).words();
        for (std::size_t k = 0; k < words_ && ok; ++k) {
            std::uint64_t w = cw[k] & sw[k];
            while (w != 0 && ok) {
                const std::size_t b = k * 64 + static_cast<std::size_t>(std::countr_zero(w));
                w &= w - 1;
                if (b <= a) continue;
                const std::uint64_t *f = forced_words(a, b);
                for (std::size_t j = 0; j < words_; ++j) {
                    if (f[j] & ~sw[j]) {
                        ok = false;
                        break;
                    }
                }
            }
        }
    });
    return ok;
}

ArcSet PtolemyChecker::complete(const ArcSet &set) const {
    ArcSet result = set;
    ArcSet done(size());
    std::deque<std::size_t> queue;
    set.for_each([&](std::size_t a) { queue.push_back(a); });
    while (!queue.empty()) {
        const std::size_t a = queue.front();
        queue.pop_front();
        ArcSet partners = table_.crossing_set(a) & done;
        partners.for_each([&](std::size_t b) {
            const std::uint64_t *f = forced_words(a, b);
            for (std::size_t k = 0; k < words_; ++k) {
                std::uint64_t fresh = f[k] & ~result.words()[k];
                result.mutable_words()[k] |= fresh;
                while (fresh != 0) {
                    queue.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(fresh)));
                    fresh &= fresh - 1;
                }
            }
        });
        done.insert(a);
    }
    return result;
}

TorsionPair PtolemyChecker::torsion_pair(const ArcSet &set) const {
    auto bad = violations(set);
    if (!bad.empty()) {
        throw PreconditionViolation("not a Ptolemy diagram:" + describe(universe(), bad));
    }
    TorsionPair pair{set, right_perp(table_, set)};
    if (left_perp(table_, pair.torsion_free) != set) {
        throw Error("double-perp fixpoint failed for a Ptolemy diagram");
    }
    return pair;
}

SubsetSampler::SubsetSampler(std::size_t universe_size, std::uint64_t seed) : size_(universe_size), rng_(seed) {}

ArcSet SubsetSampler::next() {
    ArcSet out(size_);
    const std::uint64_t threshold = rng_();
    for (std::size_t i = 0; i < size_; ++i) {
        if (rng_() < threshold) out.insert(i);
    }
    return out;
}

namespace {

EnumerationResult run_exhaustive(const PtolemyChecker &checker, const Exhaustive &opts, const ArcSetSink &sink) {
    const std::size_t bits = checker.size();
    if (bits > opts.max_bits || bits > 62) {
        throw PreconditionViolation("exhaustive enumeration over " + std::to_string(bits) +
                                    " arcs exceeds the cap of " + std::to_string(opts.max_bits) +
                                    " bits; use the closure or random strategy");
    }
    const std::uint64_t total = std::uint64_t{1} << bits;
    EnumerationResult result;
    result.exact = true;
    if (opts.threads <= 1) {
        for (std::uint64_t pattern = 0; pattern < total; ++pattern) {
            ArcSet set = ArcSet::from_bits(bits, pattern);
            if (!checker.is_ptolemy(set)) continue;
            ++result.count;
            if (sink && !sink(set)) {
                result.exact = false;
                break;
            }
        }
        return result;
    }
    const unsigned threads = opts.threads;
    std::vector<std::vector<std::uint64_t>> found(threads);
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < threads; ++t) {
        workers.emplace_back([&, t] {
            const std::uint64_t lo = total * t / threads;
            const std::uint64_t hi = total * (t + 1) / threads;
            for (std::uint64_t pattern = lo; pattern < hi; ++pattern) {
                if (checker.is_ptolemy(ArcSet::from_bits(bits, pattern))) found[t].push_back(pattern);
            }
        });
    }
    for (auto &w : workers) w.join();
    for (const auto &chunk : found) {
        for (std::uint64_t pattern : chunk) {
            ++result.count;
            if (sink && !sink(ArcSet::from_bits(bits, pattern))) {
                result.exact = false;
                return result;
            }
        }
    }
    return result;
}

// Emits each distinct set once, in first-seen order.
class DistinctEmitter {
public:
    explicit DistinctEmitter(const ArcSetSink &sink) : sink_(sink) {}

    bool offer(const ArcSet &set) {
        if (!seen_.insert(set).second) return true;
        ++count_;
        return !sink_ || sink_(set);
    }
    std::uint64_t count() const noexcept { return count_; }

private:
    const ArcSetSink &sink_;
    std::set<ArcSet> seen_;
    std::uint64_t count_ = 0;
};

// Calls f on every index combination of size `k` in lexicographic order
// until f returns false.
template <typename F>
bool for_each_combination(std::size_t n, std::size_t k, F &&f) {
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    if (k > n) return true;
    while (true) {
        if (!f(pick)) return false;
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
        if (i == 0) return true;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

EnumerationResult run_closure(const PtolemyChecker &checker, const ClosureGenerated &opts, const ArcSetSink &sink) {
    DistinctEmitter emitter(sink);
    const std::size_t n = checker.size();
    for (std::size_t k = 0; k <= opts.max_generators && k <= n; ++k) {
        const bool more = for_each_combination(n, k, [&](const std::vector<std::size_t> &pick) {
            ArcSet gens(n);
            for (std::size_t i : pick) gens.insert(i);
            return emitter.offer(checker.complete(gens));
        });
        if (!more) break;
    }
    return EnumerationResult{emitter.count(), false};
}

EnumerationResult run_random(const PtolemyChecker &checker, const RandomSample &opts, const ArcSetSink &sink) {
    DistinctEmitter emitter(sink);
    SubsetSampler sampler(checker.size(), opts.seed);
    for (std::uint64_t i = 0; i < opts.count; ++i) {
        ArcSet set = sampler.next();
        if (checker.is_ptolemy(set) && !emitter.offer(set)) break;
    }
    return EnumerationResult{emitter.count(), false};
}

}  // namespace

EnumerationResult enumerate_ptolemy(const PtolemyChecker &checker, const EnumerationStrategy &strategy,
                                    const ArcSetSink &sink) {
    return std::visit(
        [&](const auto &opts) -> EnumerationResult {
            using T = std::decay_t<decltype(opts)>;
            if constexpr (std::is_same_v<T, Exhaustive>) {
                return run_exhaustive(checker, opts, sink);
            } else if constexpr (std::is_same_v<T, ClosureGenerated>) {
                return run_closure(checker, opts, sink);
            } else {
                return run_random(checker, opts, sink);
            }
        },
        strategy);
}

}  // namespace mcd
