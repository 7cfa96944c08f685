#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "abcmax/graph.hpp"

namespace abcmax {

/// Orders up to kDefaultEnumerationLimit are always allowed; the next one up
/// needs allow_long.
inline constexpr int kDefaultEnumerationLimit = 9;
inline constexpr int kLongEnumerationLimit = 10;

struct EnumerationOptions {
  bool allow_long = false;
  int jobs = 1;
};

/// Throws std::invalid_argument when n is outside the enabled range.
void check_enumeration_order(int n, bool allow_long);

/// One canonically labeled representative per isomorphism class of
/// connected graphs on n vertices, in a fixed order that does not depend on
/// opts.jobs.
std::vector<Graph> connected_graphs(int n, const EnumerationOptions& opts = {});

/// One representative per isomorphism class of all graphs on n vertices,
/// built as disjoint unions of connected classes (components in
/// non-increasing order), canonically labeled.
std::vector<Graph> all_graphs(int n, const EnumerationOptions& opts = {});

/// Children of a connected parent by canonical augmentation: each child adds
/// one vertex (the last) joined to a nonempty subset of the parent, and is
/// kept only if that vertex is, up to automorphism, the child's canonical
/// deletion vertex. Over all parents of order n-1 (one per class) this
/// yields every connected class of order n exactly once. Children are
/// visited in increasing subset order, canonically labeled.
void for_each_child(const Graph& parent, const std::function<void(const Graph&)>& visit);

/// Splits parents into contiguous chunks and runs visit_chunk(worker,
/// first, last) on up to jobs threads. Chunk boundaries depend on jobs, so
/// callers must reduce associatively.
void parallel_chunks(std::size_t count, int jobs,
                     const std::function<void(int, std::size_t, std::size_t)>& visit_chunk);

}  // namespace abcmax
