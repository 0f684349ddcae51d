#pragma once

#include <optional>
#include <vector>

#include "qtcomb/perm_stats.hpp"

namespace qtcomb {

// Inclusive range of word positions; position 0 is the sentinel.
struct RunRange {
    int first = 0;
    int last = 0;

    friend bool operator==(const RunRange&, const RunRange&) = default;
};

// True if sigma_i..sigma_j (0 <= i <= j <= n, position 0 being the
// sentinel) becomes strictly decreasing after adding some constant to
// all entries mod n+1.
bool is_cyclic_run(const DecoratedPermutation& sigma, int i, int j);

// The unique maximal extensions of a single position to a cyclic run.
RunRange left_maximal_run(const DecoratedPermutation& sigma, int j);
RunRange right_maximal_run(const DecoratedPermutation& sigma, int i);

// Schedule numbers s_1..s_n via the decreasing runs r_0, r_1, ... of
// the word 0 tau_1 ... tau_n: for undecorated tau_i in r_j,
//   s_i = #{undecorated k in r_j : k > tau_i}
//       + #{undecorated k in r_{j-1} : k < tau_i};
// for decorated tau_i in r_j,
//   s_i = #{undecorated k in r_j : k < tau_i}
//       + #{undecorated k in r_{j+1} : k > tau_i}.
std::vector<int> schedule_by_runs(const DecoratedPermutation& tau);

// The same numbers via maximal cyclic runs: s_i counts the undecorated
// entries other than tau_i in the maximal cyclic run ending at tau_i
// (undecorated case) or starting at tau_i (decorated case). Kept as an
// independent implementation; the two must always agree.
std::vector<int> schedule_by_cyclic_runs(const DecoratedPermutation& tau);

// Canonical entry point.
inline std::vector<int> sched(const DecoratedPermutation& tau) {
    return schedule_by_runs(tau);
}

bool has_schedule_1n(const DecoratedPermutation& tau);

// The unique decoration of sigma with schedule 1^n.
DecoratedPermutation decorate_1n(const Permutation& sigma);

// All tau with schedule 1^n, ordered by underlying permutation;
// restricted to exactly k decorations when k is given.
std::vector<DecoratedPermutation> sched_1n_permutations(int n, std::optional<int> k = std::nullopt);

// Visits decorate_1n(sigma) for all sigma of [n] in lexicographic order.
template <class F>
void for_each_sched_1n(int n, F&& visit) {
    for_each_permutation(n, [&](const Permutation& sigma) { visit(decorate_1n(sigma)); });
}

}  // namespace qtcomb
