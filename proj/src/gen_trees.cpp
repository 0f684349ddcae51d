#include "qtcomb/gen_trees.hpp"

#include <algorithm>
#include <stdexcept>

namespace qtcomb {

namespace {

void check_branch(int k, int n) {
    if (k < 1 || k > n + 1) throw std::invalid_argument("descendant index must be in {1..n+1}");
}

void check_nonempty(std::size_t size, const char* what) {
    if (size == 0) throw std::invalid_argument(std::string(what) + ": permutation is empty");
}

bool ends_with_ascent(const Permutation& sigma) {
    const int n = static_cast<int>(sigma.size());
    const int prev = n >= 2 ? sigma[n - 2] : 0;
    return prev < sigma[n - 1];
}

}  // namespace

Permutation rotate(const DecoratedPermutation& tau, int k) {
    const int n = tau.size();
    check_branch(k, n);
    Permutation sigma(n + 1);
    sigma[0] = k;
    for (int i = 1; i <= n; ++i) sigma[i] = (k + tau.at(i) - 1) % (n + 1) + 1;
    return sigma;
}

int t1_attr(const DecoratedPermutation& tau) {
    for (int i = 1; i <= tau.size(); ++i)
        if (!tau.decorated_at(i)) return tau.at(i);
    throw std::invalid_argument("t1_attr: no undecorated letter");
}

DecoratedPermutation t1_descendant(const DecoratedPermutation& tau, int k) {
    const int n = tau.size();
    check_branch(k, n);
    if (!has_schedule_1n(tau))
        throw std::invalid_argument("t1_descendant: schedule of tau is not 1^n");
    Permutation sigma = rotate(tau, k);
    std::vector<bool> flags(n + 1);
    flags[0] = k > n + 1 - t1_attr(tau);
    for (int i = 2; i <= n + 1; ++i) flags[i - 1] = tau.decorated_at(i - 1);
    return {std::move(sigma), std::move(flags)};
}

std::pair<DecoratedPermutation, int> t1_parent(const DecoratedPermutation& child) {
    const int m = child.size();
    if (m < 2) throw std::invalid_argument("t1_parent: the root has no parent");
    const int k = child.at(1);
    Permutation values(m - 1);
    std::vector<bool> flags(m - 1);
    for (int i = 1; i < m; ++i) {
        values[i - 1] = ((child.at(i + 1) - k) % m + m) % m;
        flags[i - 1] = child.decorated_at(i + 1);
    }
    return {DecoratedPermutation{std::move(values), std::move(flags)}, k};
}

Permutation t2_insert(const Permutation& sigma, int l) {
    const int n = static_cast<int>(sigma.size());
    check_branch(l, n);
    Permutation result(n + 1);
    for (int i = 0; i < n; ++i) result[i] = sigma[i] + (sigma[i] >= l);
    result[n] = l;
    return result;
}

int t2_attr(const Permutation& sigma) {
    check_nonempty(sigma.size(), "t2_attr");
    const int n = static_cast<int>(sigma.size());
    return ends_with_ascent(sigma) ? n + 1 - sigma[n - 1] : sigma[n - 1];
}

int psi(const Permutation& sigma, int l) {
    check_nonempty(sigma.size(), "psi");
    const int n = static_cast<int>(sigma.size());
    check_branch(l, n);
    const int last = sigma[n - 1];
    if (ends_with_ascent(sigma)) return l > last ? l - last - 1 : n + 1 - l;
    return l <= last ? last - l : l - 1;
}

Permutation t2_descendant(const Permutation& sigma, int k) {
    check_nonempty(sigma.size(), "t2_descendant");
    const int n = static_cast<int>(sigma.size());
    check_branch(k, n);
    const int target = n + 1 - k;
    const int last = sigma[n - 1];
    const int attr = t2_attr(sigma);
    int l = 0;
    if (ends_with_ascent(sigma))
        l = target < attr ? last + 1 + target : n + 1 - target;
    else
        l = target < attr ? last - target : target + 1;
    return t2_insert(sigma, l);
}

std::pair<Permutation, int> t2_parent(const Permutation& child) {
    const int m = static_cast<int>(child.size());
    if (m < 2) throw std::invalid_argument("t2_parent: the root has no parent");
    const int l = child[m - 1];
    Permutation sigma(m - 1);
    for (int i = 0; i + 1 < m; ++i) sigma[i] = child[i] - (child[i] > l);
    const int k = m - psi(sigma, l);
    return {std::move(sigma), k};
}

Permutation phi(const DecoratedPermutation& tau) {
    if (tau.size() == 0) throw std::invalid_argument("phi: permutation is empty");
    if (!has_schedule_1n(tau)) throw std::invalid_argument("phi: schedule of tau is not 1^n");
    std::vector<int> branches;
    DecoratedPermutation cur = tau;
    while (cur.size() > 1) {
        auto [parent, k] = t1_parent(cur);
        branches.push_back(k);
        cur = std::move(parent);
    }
    Permutation sigma{1};
    for (auto it = branches.rbegin(); it != branches.rend(); ++it)
        sigma = t2_descendant(sigma, *it);
    return sigma;
}

DecoratedPermutation phi_inverse(const Permutation& sigma) {
    check_nonempty(sigma.size(), "phi_inverse");
    if (!is_permutation(sigma)) throw std::invalid_argument("phi_inverse: not a permutation");
    std::vector<int> branches;
    Permutation cur = sigma;
    while (cur.size() > 1) {
        auto [parent, k] = t2_parent(cur);
        branches.push_back(k);
        cur = std::move(parent);
    }
    DecoratedPermutation tau{Permutation{1}};
    for (auto it = branches.rbegin(); it != branches.rend(); ++it)
        tau = t1_descendant(tau, *it);
    return tau;
}

}  // namespace qtcomb
