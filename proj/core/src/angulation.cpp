#include "mcd/angulation.hpp"

#include "mcd/error.hpp"

namespace mcd {

bool is_rigid(const PairTable &table, const ArcSet &set) {
    bool ok = true;
    set.for_each([&](std::size_t a) {
        if (ok && table.crossing_set(a).intersects(set)) ok = false;
    });
    return ok;
}

bool is_angulation(const PairTable &table, const ArcSet &set) {
    if (!is_rigid(table, set)) return false;
    for (std::size_t a = 0; a < table.size(); ++a) {
        if (!set.contains(a) && !table.crossing_set(a).intersects(set)) return false;
    }
    return true;
}

namespace {

void check_cap(const PairTable &table, std::size_t max_arcs) {
    table.require_odd_m();
    if (table.size() > max_arcs) {
        throw PreconditionViolation("arc universe of " + std::to_string(table.size()) + " exceeds the cap of " +
                                    std::to_string(max_arcs));
    }
}

class BronKerbosch {
public:
    BronKerbosch(const PairTable &table, const ArcSetSink &sink) : table_(table), sink_(sink) {
        compatible_.reserve(table.size());
        for (std::size_t a = 0; a < table.size(); ++a) {
            ArcSet c = table.crossing_set(a).complement();
            c.erase(a);
            compatible_.push_back(std::move(c));
        }
    }

    AngulationResult run() {
        ArcSet clique = table_.empty_set();
        expand(clique, table_.full_set(), table_.empty_set());
        return result_;
    }

private:
    // Returns false once the sink asks to stop.
    bool expand(ArcSet &clique, ArcSet candidates, ArcSet excluded) {
        if (candidates.empty()) {
            if (!excluded.empty()) return true;
            ++result_.count;
            if (sink_ && !sink_(clique)) {
                result_.complete = false;
                return false;
            }
            return true;
        }
        // Pivot: the vertex of candidates or excluded with most compatible candidates.
        std::size_t pivot = 0;
        std::size_t best = 0;
        bool have = false;
        (candidates | excluded).for_each([&](std::size_t u) {
            const std::size_t c = (compatible_[u] & candidates).count();
            if (!have || c > best) {
                pivot = u;
                best = c;
                have = true;
            }
        });
        const ArcSet branch = candidates - compatible_[pivot];
        for (std::size_t v : branch.members()) {
            clique.insert(v);
            const bool go_on = expand(clique, candidates & compatible_[v], excluded & compatible_[v]);
            clique.erase(v);
            if (!go_on) return false;
            candidates.erase(v);
            excluded.insert(v);
        }
        return true;
    }

    const PairTable &table_;
    const ArcSetSink &sink_;
    std::vector<ArcSet> compatible_;
    AngulationResult result_;
};

class RigidWalker {
public:
    RigidWalker(const PairTable &table, const ArcSetSink &sink) : table_(table), sink_(sink) {}

    AngulationResult run() {
        ArcSet current = table_.empty_set();
        walk(current, 0, table_.empty_set());
        return result_;
    }

private:
    bool walk(ArcSet &current, std::size_t from, const ArcSet &blocked) {
        ++result_.count;
        if (sink_ && !sink_(current)) {
            result_.complete = false;
            return false;
        }
        for (std::size_t a = from; a < table_.size(); ++a) {
            if (blocked.contains(a)) continue;
            current.insert(a);
            const bool go_on = walk(current, a + 1, blocked | table_.crossing_set(a));
            current.erase(a);
            if (!go_on) return false;
        }
        return true;
    }

    const PairTable &table_;
    const ArcSetSink &sink_;
    AngulationResult result_;
};

}  // namespace

AngulationResult enumerate_angulations(const PairTable &table, const ArcSetSink &sink, std::size_t max_arcs) {
    check_cap(table, max_arcs);
    return BronKerbosch(table, sink).run();
}

AngulationResult enumerate_rigid(const PairTable &table, const ArcSetSink &sink, std::size_t max_arcs) {
    check_cap(table, max_arcs);
    return RigidWalker(table, sink).run();
}

}  // namespace mcd
