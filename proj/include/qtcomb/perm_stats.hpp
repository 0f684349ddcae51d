#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "qtcomb/polynomial.hpp"

namespace qtcomb {

// A permutation of [n]: the values sigma_1..sigma_n, stored 0-based.
using Permutation = std::vector<int>;

bool is_permutation(const Permutation& sigma);
Permutation identity_perm(int n);
std::string perm_str(const Permutation& sigma);

// Visits all permutations of [n] in lexicographic order.
template <class F>
void for_each_permutation(int n, F&& visit) {
    Permutation sigma = identity_perm(n);
    do {
        visit(static_cast<const Permutation&>(sigma));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
}

// A permutation together with a set of decorated positions. Position 0
// acts as a virtual sentinel with value 0 which is never decorated.
struct DecoratedPermutation {
    Permutation values;
    std::vector<bool> decorated;

    DecoratedPermutation() = default;
    explicit DecoratedPermutation(Permutation v);
    DecoratedPermutation(Permutation v, std::vector<bool> flags);

    int size() const { return static_cast<int>(values.size()); }
    int at(int i) const { return i == 0 ? 0 : values[i - 1]; }
    bool decorated_at(int i) const { return i != 0 && decorated[i - 1]; }
    int dec_count() const;

    // "*8*63*274*15" for n <= 9; space-separated tokens beyond that.
    // parse accepts only the single-digit form.
    std::string str() const;
    static DecoratedPermutation parse(std::string_view text);

    friend bool operator==(const DecoratedPermutation& a, const DecoratedPermutation& b) {
        return a.values == b.values && a.decorated == b.decorated;
    }
    friend bool operator<(const DecoratedPermutation& a, const DecoratedPermutation& b) {
        return std::tie(a.values, a.decorated) < std::tie(b.values, b.decorated);
    }
};

enum class PositionKind { double_ascent, double_descent, peak, valley };

// Classifies position i (2 <= i <= n) of sigma by the shape of the
// triple (sigma_{i-2}, sigma_{i-1}, sigma_i), using the sentinel
// sigma_0 = 0.
PositionKind classify(const Permutation& sigma, int i);

// Number of double ascents and double descents.
int monot(const Permutation& sigma);

// Number of 3-inversions: pairs (i, j) with 1 <= i < j <= n such that
//   sigma_j is a double ascent and sigma_{j-1} < sigma_i < sigma_j, or
//   sigma_j is a double descent and sigma_{j-1} > sigma_i > sigma_j, or
//   sigma_j is a peak and sigma_i > sigma_j, or
//   sigma_j is a valley and sigma_i < sigma_j.
int inv3(const Permutation& sigma);

int maj(const Permutation& sigma);
int revmaj(const Permutation& sigma);
int revmaj(const DecoratedPermutation& tau);
int inv(const Permutation& sigma);

// Chebikin's inversion variant: pairs (i, j) with i < j such that
// sigma_i > sigma_j for odd i, or sigma_i < sigma_j for even i.
int chebikin_ihat(const Permutation& sigma);

// Occurrences of the 31-2 pattern: triples i, i+1 < j with
// sigma_i > sigma_j > sigma_{i+1}.
int count_31_2(const Permutation& sigma);

// sigma_1 > sigma_2 < sigma_3 > ..., equivalently monot(sigma) == 0.
bool is_alternating(const Permutation& sigma);

// Euler number E_n (1, 1, 1, 2, 5, 16, 61, ...), by the boustrophedon
// recurrence; throws std::overflow_error when E_n exceeds int64.
std::int64_t euler_number(int n);

// E_n(t): the 31-2 distribution over alternating permutations of [n].
Polynomial euler_poly(int n);

}  // namespace qtcomb
