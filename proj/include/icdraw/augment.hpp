#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "icdraw/graph.hpp"

namespace icdraw {

/// A crossing pair together with its four kite corners.
struct KiteRecord {
    int crossing = -1;
    int dummy = -1;
    /// Clockwise around the kite boundary (same order as around the dummy).
    std::array<int, 4> corners{};
    /// Real edge ids of corners[0]-corners[2] and corners[1]-corners[3].
    std::array<int, 2> diagonals{};
    /// Planarization edge ids of (c0,c1), (c1,c2), (c2,c3), (c3,c0).
    std::array<int, 4> sides{-1, -1, -1, -1};

    // Roles assigned once the kite face has been oriented.
    int origin = -1;
    int destination = -1;
    int left = -1;
    int right = -1;

    int corner_index(int v) const {
        for (int i = 0; i < 4; ++i)
            if (corners[i] == v) return i;
        return -1;
    }
};

struct CrossingConfig {
    enum class Tag { X, B };
    Tag tag = Tag::X;
    /// For B: the side edge whose cycle through the crossing encloses the
    /// other two endpoints (-1 for X).
    int enclosing_edge = -1;
    std::string witness;
};

/// Thomassen-style classification of one crossing of g.
CrossingConfig classify_crossing(const ICPlaneGraph& g, int crossing);

/// True when the four faces around the dummy are exactly the triangles
/// {c0,x,c1}, {c1,x,c2}, {c2,x,c3}, {c3,x,c0} and none is the outer face.
bool kite_is_empty(const EmbeddedGraph& g, const KiteRecord& kite);

struct KiteAugmentation {
    ICPlaneGraph graph;
    std::vector<KiteRecord> kites;
    int added_edges = 0;
    int rerouted_edges = 0;
};

/// Adds or reroutes the four side edges of every crossing so that each
/// crossing induces an empty kite.
KiteAugmentation make_empty_kites(const ICPlaneGraph& g);

struct BiconnectResult {
    ICPlaneGraph graph;
    std::vector<KiteRecord> kites;
    int added_edges = 0;
};

/// Adds uncrossed edges until the real graph is biconnected, every kite
/// corner has an edge leaving the kite, and contracting each kite to a
/// single vertex leaves a biconnected graph. Kites must be empty.
BiconnectResult biconnect(const ICPlaneGraph& g, std::span<const KiteRecord> kites);

/// Re-reads diagonal ids after the real edge list was rebuilt.
void refresh_kites(const ICPlaneGraph& g, std::vector<KiteRecord>& kites);

/// Per-edge flags of augmentation-added planarization edges.
std::vector<char> augmented_flags(const ICPlaneGraph& g);

}  // namespace icdraw
