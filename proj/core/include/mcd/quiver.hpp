#pragma once

// Translation quivers Gamma(n,m) (tagged arcs of the punctured N-gon) and
// Delta(n,m) (paired arcs of the 2N-gon), their isomorphism check, and export.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcd/model.hpp"
#include "mcd/punctured.hpp"

namespace mcd {

class TranslationQuiver {
public:
    using Arrow = std::pair<std::size_t, std::size_t>;

    /// Arrows are sorted and deduplicated. Throws InvalidParameters if an
    /// endpoint is out of range or the translation is not a permutation.
    TranslationQuiver(std::vector<std::string> labels, std::vector<Arrow> arrows,
                      std::vector<std::size_t> translation);

    std::size_t vertex_count() const noexcept { return labels_.size(); }
    const std::vector<std::string> &labels() const noexcept { return labels_; }
    const std::vector<Arrow> &arrows() const noexcept { return arrows_; }
    const std::vector<std::size_t> &translation() const noexcept { return translation_; }

    bool has_arrow(std::size_t from, std::size_t to) const;
    std::vector<std::size_t> successors(std::size_t v) const;
    /// Undirected connectivity, ignoring the translation.
    bool is_connected() const;

private:
    std::vector<std::string> labels_;
    std::vector<Arrow> arrows_;
    std::vector<std::size_t> translation_;
};

/// Vertices: tagged m-arcs in `enumerate_tagged_m_arcs` order.
TranslationQuiver build_gamma(const ModelParams &params);
/// Vertices: paired m-arcs in `enumerate_m_arcs` order; arrows from the direct
/// geometric m-moves.
TranslationQuiver build_delta(const ModelParams &params);

struct IsoReport {
    bool isomorphic = false;
    /// mapping[g] = index in Delta of phi(Gamma vertex g).
    std::vector<std::size_t> mapping;
    /// Empty when isomorphic.
    std::string counterexample;
};

/// Checks that phi is a bijection of vertices, maps arrows onto arrows and
/// commutes with the translations.
IsoReport verify_translation_iso(const ModelParams &params);

enum class QuiverFormat { Dot, Json };

/// DOT: arrows solid, translation as dashed back-edges. JSON:
/// {"vertices":[...],"arrows":[[a,b],...],"translation":[...]}.
std::string export_quiver(const TranslationQuiver &quiver, QuiverFormat format);

}  // namespace mcd
