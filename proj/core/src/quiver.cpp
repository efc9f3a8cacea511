#include "mcd/quiver.hpp"

#include <algorithm>
#include <json.hpp>
#include <numeric>
#include <sstream>

#include "mcd/error.hpp"

namespace mcd {

TranslationQuiver::TranslationQuiver(std::vector<std::string> labels, std::vector<Arrow> arrows,
                                     std::vector<std::size_t> translation)
    : labels_(std::move(labels)), arrows_(std::move(arrows)), translation_(std::move(translation)) {
    const std::size_t n = labels_.size();
    if (translation_.size() != n) throw InvalidParameters("translation must be defined on every vertex");
    std::vector<bool> hit(n, false);
    for (std::size_t t : translation_) {
        if (t >= n || hit[t]) throw InvalidParameters("translation is not a permutation of the vertices");
        hit[t] = true;
    }
    for (const auto &[from, to] : arrows_) {
        if (from >= n || to >= n) throw InvalidParameters("arrow endpoint out of range");
    }
    std::sort(arrows_.begin(), arrows_.end());
    arrows_.erase(std::unique(arrows_.begin(), arrows_.end()), arrows_.end());
}

bool TranslationQuiver::has_arrow(std::size_t from, std::size_t to) const {
    return std::binary_search(arrows_.begin(), arrows_.end(), Arrow{from, to});
}

std::vector<std::size_t> TranslationQuiver::successors(std::size_t v) const {
    std::vector<std::size_t> out;
    auto it = std::lower_bound(arrows_.begin(), arrows_.end(), Arrow{v, 0});
    for (; it != arrows_.end() && it->first == v; ++it) out.push_back(it->second);
    return out;
}

bool TranslationQuiver::is_connected() const {
    const std::size_t n = labels_.size();
    if (n == 0) return true;
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t components = n;
    for (const auto &[a, b] : arrows_) {
        auto ra = find(a), rb = find(b);
        if (ra != rb) {
            parent[ra] = rb;
            --components;
        }
    }
    return components == 1;
}

namespace {

template <typename Arc, typename Successors, typename Translate>
TranslationQuiver build(const std::vector<Arc> &vertices, Successors successors, Translate translate) {
    auto index_of = [&](const Arc &arc) {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), arc);
        return static_cast<std::size_t>(it - vertices.begin());
    };
    std::vector<std::string> labels;
    std::vector<TranslationQuiver::Arrow> arrows;
    std::vector<std::size_t> translation;
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        labels.push_back(to_literal(vertices[v]));
        for (const Arc &next : successors(vertices[v])) arrows.emplace_back(v, index_of(next));
        translation.push_back(index_of(translate(vertices[v])));
    }
    return TranslationQuiver(std::move(labels), std::move(arrows), std::move(translation));
}

}  // namespace

TranslationQuiver build_gamma(const ModelParams &params) {
    return build(
        enumerate_tagged_m_arcs(params),
        [&](const TaggedArc &t) { return m_move_successors_tagged(params, t); },
        [&](const TaggedArc &t) { return tau_tagged(params, t); });
}

TranslationQuiver build_delta(const ModelParams &params) {
    return build(
        enumerate_m_arcs(params), [&](const PairedArc &a) { return m_move_successors(params, a); },
        [&](const PairedArc &a) { return tau(params, a); });
}

IsoReport verify_translation_iso(const ModelParams &params) {
    IsoReport report;
    const auto tagged = enumerate_tagged_m_arcs(params);
    const ArcUniverse universe(params);
    const TranslationQuiver gamma = build_gamma(params);
    const TranslationQuiver delta = build_delta(params);

    auto fail = [&](std::string why) {
        report.isomorphic = false;
        report.counterexample = std::move(why);
        return report;
    };

    if (tagged.size() != universe.size()) {
        return fail("vertex counts differ: " + std::to_string(tagged.size()) + " tagged vs " +
                    std::to_string(universe.size()) + " paired");
    }
    std::vector<bool> hit(universe.size(), false);
    report.mapping.reserve(tagged.size());
    for (const TaggedArc &t : tagged) {
        const PairedArc image = phi(params, t);
        auto idx = universe.index_of(image);
        if (!idx) return fail("phi(" + to_literal(t) + ") = " + to_literal(image) + " is not an m-arc");
        if (hit[*idx]) return fail("phi is not injective at " + to_literal(t));
        hit[*idx] = true;
        report.mapping.push_back(*idx);
    }
    for (std::size_t g = 0; g < tagged.size(); ++g) {
        if (report.mapping[gamma.translation()[g]] != delta.translation()[report.mapping[g]]) {
            return fail("phi does not commute with tau at " + to_literal(tagged[g]));
        }
    }
    std::vector<TranslationQuiver::Arrow> transported;
    for (const auto &[from, to] : gamma.arrows()) transported.emplace_back(report.mapping[from], report.mapping[to]);
    std::sort(transported.begin(), transported.end());
    if (transported != delta.arrows()) {
        std::vector<TranslationQuiver::Arrow> diff;
        std::set_symmetric_difference(transported.begin(), transported.end(), delta.arrows().begin(),
                                      delta.arrows().end(), std::back_inserter(diff));
        const auto &[from, to] = diff.front();
        const bool missing_in_delta = std::binary_search(transported.begin(), transported.end(), diff.front());
        return fail("arrow " + delta.labels()[from] + " -> " + delta.labels()[to] +
                    (missing_in_delta ? " is transported from Gamma but missing in Delta"
                                      : " is in Delta but not transported from Gamma"));
    }
    report.isomorphic = true;
    return report;
}

std::string export_quiver(const TranslationQuiver &quiver, QuiverFormat format) {
    std::ostringstream os;
    if (format == QuiverFormat::Json) {
        nlohmann::ordered_json doc;
        doc["vertices"] = quiver.labels();
        auto arrows = nlohmann::ordered_json::array();
        for (const auto &[from, to] : quiver.arrows()) arrows.push_back({from, to});
        doc["arrows"] = std::move(arrows);
        doc["translation"] = quiver.translation();
        os << doc.dump(2) << '\n';
        return os.str();
    }
    os << "digraph quiver {\n";
    os << "  rankdir=LR;\n";
    os << "  node [shape=plaintext];\n";
    for (std::size_t v = 0; v < quiver.vertex_count(); ++v) {
        os << "  v" << v << " [label=\"" << quiver.labels()[v] << "\"];\n";
    }
    for (const auto &[from, to] : quiver.arrows()) os << "  v" << from << " -> v" << to << ";\n";
    for (std::size_t v = 0; v < quiver.vertex_count(); ++v) {
        os << "  v" << v << " -> v" << quiver.translation()[v]
           << " [style=dashed, constraint=false, arrowhead=empty];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace mcd
