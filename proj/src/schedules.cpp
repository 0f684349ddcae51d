#include "qtcomb/schedules.hpp"

#include <algorithm>
#include <stdexcept>

namespace qtcomb {

namespace {

// (a - b) mod (n+1), in {1..n} for distinct word entries.
int drop(int a, int b, int n) {
    int d = (a - b) % (n + 1);
    if (d < 0) d += n + 1;
    return d;
}

void check_position(const DecoratedPermutation& sigma, int i) {
    if (i < 0 || i > sigma.size())
        throw std::out_of_range("cyclic run: position must be in {0..n}");
}

}  // namespace

bool is_cyclic_run(const DecoratedPermutation& sigma, int i, int j) {
    check_position(sigma, i);
    check_position(sigma, j);
    if (i > j) throw std::out_of_range("is_cyclic_run: need i <= j");
    const int n = sigma.size();
    int total = 0;
    for (int l = i; l < j; ++l) total += drop(sigma.at(l), sigma.at(l + 1), n);
    return total <= n;
}

RunRange left_maximal_run(const DecoratedPermutation& sigma, int j) {
    check_position(sigma, j);
    const int n = sigma.size();
    int total = 0;
    int i = j;
    while (i > 0) {
        const int step = drop(sigma.at(i - 1), sigma.at(i), n);
        if (total + step > n) break;
        total += step;
        --i;
    }
    return {i, j};
}

RunRange right_maximal_run(const DecoratedPermutation& sigma, int i) {
    check_position(sigma, i);
    const int n = sigma.size();
    int total = 0;
    int j = i;
    while (j < n) {
        const int step = drop(sigma.at(j), sigma.at(j + 1), n);
        if (total + step > n) break;
        total += step;
        ++j;
    }
    return {i, j};
}

std::vector<int> schedule_by_runs(const DecoratedPermutation& tau) {
    const int n = tau.size();
    std::vector<int> run_of(n + 1, 0);
    for (int i = 1; i <= n; ++i)
        run_of[i] = tau.at(i) < tau.at(i - 1) ? run_of[i - 1] : run_of[i - 1] + 1;
    std::vector<int> s(n);
    for (int i = 1; i <= n; ++i) {
        const int j = run_of[i];
        int count = 0;
        for (int k = 0; k <= n; ++k) {
            if (k == i || tau.decorated_at(k)) continue;
            if (tau.decorated_at(i)) {
                count += run_of[k] == j && tau.at(k) < tau.at(i);
                count += run_of[k] == j + 1 && tau.at(k) > tau.at(i);
            } else {
                count += run_of[k] == j && tau.at(k) > tau.at(i);
                count += run_of[k] == j - 1 && tau.at(k) < tau.at(i);
            }
        }
        s[i - 1] = count;
    }
    return s;
}

std::vector<int> schedule_by_cyclic_runs(const DecoratedPermutation& tau) {
    const int n = tau.size();
    std::vector<int> s(n);
    for (int i = 1; i <= n; ++i) {
        const RunRange range =
            tau.decorated_at(i) ? right_maximal_run(tau, i) : left_maximal_run(tau, i);
        int count = 0;
        for (int k = range.first; k <= range.last; ++k)
            count += k != i && !tau.decorated_at(k);
        s[i - 1] = count;
    }
    return s;
}

bool has_schedule_1n(const DecoratedPermutation& tau) {
    const auto s = schedule_by_runs(tau);
    return std::all_of(s.begin(), s.end(), [](int v) { return v == 1; });
}

DecoratedPermutation decorate_1n(const Permutation& sigma) {
    DecoratedPermutation tau{sigma};
    const int n = tau.size();
    std::vector<bool> flags(n, true);
    int i = n;
    while (i > 0) {
        flags[i - 1] = false;
        i = left_maximal_run(tau, i).first;
    }
    return {sigma, std::move(flags)};
}

std::vector<DecoratedPermutation> sched_1n_permutations(int n, std::optional<int> k) {
    std::vector<DecoratedPermutation> result;
    for_each_sched_1n(n, [&](const DecoratedPermutation& tau) {
        if (!k || tau.dec_count() == *k) result.push_back(tau);
    });
    return result;
}

}  // namespace qtcomb
