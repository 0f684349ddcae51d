#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qtcomb/perm_stats.hpp"

namespace qtcomb {

// A Dyck path of size n stored as its area word a_1..a_n, where a_i is
// the number of full cells between the path and the diagonal in row i.
// Valid words satisfy a_1 = 0, a_i >= 0 and a_{i+1} <= a_i + 1.
struct DyckPath {
    std::vector<int> area_word;

    int size() const { return static_cast<int>(area_word.size()); }
    bool valid() const;
    int area() const;

    // N/E step sequence read from the bottom-left corner.
    std::string step_string() const;
    static DyckPath from_step_string(std::string_view steps);

    friend bool operator==(const DyckPath&, const DyckPath&) = default;
};

// A valley-decorated standardly labelled Dyck path: labels w_1..w_n are
// a permutation of [n] increasing up each column (w_i < w_{i+1} whenever
// a_{i+1} = a_i + 1), and dv is a sorted set of decorated vertical
// steps, each a contractible valley.
struct DecoratedLabelledPath {
    DyckPath path;
    std::vector<int> labels;
    std::vector<int> dv;

    int size() const { return path.size(); }
    bool decorated_at(int i) const;
    bool valid() const;
};

// Vertical steps i in {2..n} with a_{i-1} > a_i, or with a_{i-1} = a_i
// and w_{i-1} < w_i; returned sorted.
std::vector<int> contractible_valleys(const DyckPath& path, const std::vector<int>& labels);

int area(const DecoratedLabelledPath& p);

// Number of primary pairs (i < j, a_i = a_j, w_i < w_j, i not in dv)
// plus secondary pairs (i < j, a_i = a_j + 1, w_i > w_j, i not in dv),
// minus the number of decorations. Always nonnegative.
int dinv(const DecoratedLabelledPath& p);

// c_i = number of primary/secondary pairs whose first index is i, so
// for any decoration set dinv = sum of c_i over undecorated i, minus
// the number of decorations.
std::vector<int> dinv_contributions(const DyckPath& path, const std::vector<int>& labels);

// Labels listed diagonal by diagonal (0th, 1st, ...), each diagonal in
// decreasing order, keeping the decoration of each label's step.
DecoratedPermutation diagonal_word(const DecoratedLabelledPath& p);

namespace detail {

// Visits all k-subsets of items in lexicographic order.
template <class T, class F>
void for_each_combination(const std::vector<T>& items, int k, F&& visit) {
    std::vector<T> chosen(k);
    auto rec = [&](auto&& self, int next, int depth) -> void {
        if (depth == k) {
            visit(static_cast<const std::vector<T>&>(chosen));
            return;
        }
        for (int i = next; i <= static_cast<int>(items.size()) - (k - depth); ++i) {
            chosen[depth] = items[i];
            self(self, i + 1, depth + 1);
        }
    };
    if (k >= 0 && k <= static_cast<int>(items.size())) rec(rec, 0, 0);
}

}  // namespace detail

// Visits the area words of all Dyck paths of size n in lexicographic
// order.
template <class F>
void for_each_dyck(int n, F&& visit) {
    if (n < 0) throw std::invalid_argument("for_each_dyck: n must be nonnegative");
    DyckPath path;
    path.area_word.resize(n);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            visit(static_cast<const DyckPath&>(path));
            return;
        }
        const int hi = i == 0 ? 0 : path.area_word[i - 1] + 1;
        for (int a = 0; a <= hi; ++a) {
            path.area_word[i] = a;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
}

std::vector<DyckPath> dyck_paths(int n);

// Visits all standard labellings of the path in lexicographic order.
template <class F>
void for_each_labelling(const DyckPath& path, F&& visit) {
    const int n = path.size();
    std::vector<int> labels(n);
    std::vector<bool> used(n + 1, false);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos > n) {
            visit(static_cast<const std::vector<int>&>(labels));
            return;
        }
        int lo = 1;
        if (pos > 1 && path.area_word[pos - 1] == path.area_word[pos - 2] + 1)
            lo = labels[pos - 2] + 1;
        for (int v = lo; v <= n; ++v) {
            if (used[v]) continue;
            used[v] = true;
            labels[pos - 1] = v;
            self(self, pos + 1);
            used[v] = false;
        }
    };
    rec(rec, 1);
}

// Visits stLD(n)^{*k} in canonical order: paths by area word, then
// labellings, then decoration sets, each lexicographically.
template <class F>
void for_each_decorated(int n, int k, F&& visit) {
    if (n < 0 || k < 0 || k > n - 1)
        throw std::invalid_argument("for_each_decorated: need 0 <= k <= n-1");
    DecoratedLabelledPath scratch;
    for_each_dyck(n, [&](const DyckPath& path) {
        scratch.path = path;
        for_each_labelling(path, [&](const std::vector<int>& labels) {
            const auto cv = contractible_valleys(path, labels);
            if (static_cast<int>(cv.size()) < k) return;
            scratch.labels = labels;
            detail::for_each_combination(cv, k, [&](const std::vector<int>& subset) {
                scratch.dv = subset;
                visit(static_cast<const DecoratedLabelledPath&>(scratch));
            });
        });
    });
}

}  // namespace qtcomb
