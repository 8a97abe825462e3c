#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gasket/harmonic.hpp"
#include "gasket/rational.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gasket::sweep {

// Thread budget: min(OpenMP max, GASKET_THREADS when set and > 0).
int max_threads();

// Depth at which the parallel sweeps split the cell tree among threads.
inline constexpr int kSplitDepth = 4;
// Below this many cells the parallel path is not worth spawning.
inline constexpr int kParallelMinDepth = 7;

namespace detail {

template <class F>
void walk(const Harmonic& h, int depth, F&& f) {
  if (depth == 0) {
    f(static_cast<const Harmonic&>(h));
    return;
  }
  for (int i = 0; i < 3; ++i) walk(h.extended(i), depth - 1, f);
}

template <class F>
void walk_pair(const Harmonic& h, const Harmonic& g, int depth, F&& f) {
  if (depth == 0) {
    f(static_cast<const Harmonic&>(h), static_cast<const Harmonic&>(g));
    return;
  }
  for (int i = 0; i < 3; ++i)
    walk_pair(h.extended(i), g.extended(i), depth - 1, f);
}

}  // namespace detail

// Serial reference: sum of f(piece) over all level-`depth` descendants of the
// root triple. Kept as the baseline the parallel kernel is tested against.
template <class F>
Rat reduce_serial(const Harmonic& root, int depth, F&& f) {
  Rat acc(0);
  detail::walk(root, depth, [&](const Harmonic& h) { acc += f(h); });
  return acc;
}

template <class F>
Rat reduce_pair_serial(const Harmonic& ru, const Harmonic& rv, int depth,
                       F&& f) {
  Rat acc(0);
  detail::walk_pair(ru, rv, depth,
                    [&](const Harmonic& h, const Harmonic& g) { acc += f(h, g); });
  return acc;
}

// OpenMP kernel: the subtrees at kSplitDepth are distributed across threads,
// each reduced serially into a per-slot partial. Exact arithmetic makes the
// result identical to the serial reference for any schedule.
template <class F>
Rat reduce_parallel(const Harmonic& root, int depth, F&& f) {
#ifdef _OPENMP
  if (depth > kSplitDepth && max_threads() > 1) {
    const int split = kSplitDepth;
    std::vector<Harmonic> frontier;
    frontier.reserve(81);
    detail::walk(root, split, [&](const Harmonic& h) { frontier.push_back(h); });
    std::vector<Rat> partial(frontier.size(), Rat(0));
    const int n = static_cast<int>(frontier.size());
#pragma omp parallel for schedule(dynamic) num_threads(max_threads())
    for (int i = 0; i < n; ++i) {
      partial[static_cast<std::size_t>(i)] =
          reduce_serial(frontier[static_cast<std::size_t>(i)], depth - split, f);
    }
    Rat acc(0);
    for (const Rat& p : partial) acc += p;
    return acc;
  }
#endif
  return reduce_serial(root, depth, std::forward<F>(f));
}

template <class F>
Rat reduce_pair_parallel(const Harmonic& ru, const Harmonic& rv, int depth,
                         F&& f) {
#ifdef _OPENMP
  if (depth > kSplitDepth && max_threads() > 1) {
    const int split = kSplitDepth;
    std::vector<std::pair<Harmonic, Harmonic>> frontier;
    frontier.reserve(81);
    detail::walk_pair(ru, rv, split, [&](const Harmonic& h, const Harmonic& g) {
      frontier.emplace_back(h, g);
    });
    std::vector<Rat> partial(frontier.size(), Rat(0));
    const int n = static_cast<int>(frontier.size());
#pragma omp parallel for schedule(dynamic) num_threads(max_threads())
    for (int i = 0; i < n; ++i) {
      auto& [h, g] = frontier[static_cast<std::size_t>(i)];
      partial[static_cast<std::size_t>(i)] =
          reduce_pair_serial(h, g, depth - split, f);
    }
    Rat acc(0);
    for (const Rat& p : partial) acc += p;
    return acc;
  }
#endif
  return reduce_pair_serial(ru, rv, depth, std::forward<F>(f));
}

// Dispatch: parallel for deep sweeps, serial otherwise.
template <class F>
Rat reduce(const Harmonic& root, int depth, F&& f) {
  if (depth >= kParallelMinDepth)
    return reduce_parallel(root, depth, std::forward<F>(f));
  return reduce_serial(root, depth, std::forward<F>(f));
}

template <class F>
Rat reduce_pair(const Harmonic& ru, const Harmonic& rv, int depth, F&& f) {
  if (depth >= kParallelMinDepth)
    return reduce_pair_parallel(ru, rv, depth, std::forward<F>(f));
  return reduce_pair_serial(ru, rv, depth, std::forward<F>(f));
}

}  // namespace gasket::sweep
