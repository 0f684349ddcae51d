#pragma once

#include <utility>

#include "qtcomb/perm_stats.hpp"
#include "qtcomb/schedules.hpp"

namespace qtcomb {

// k + tau: sigma_1 = k and sigma_{i+1} = k + tau_i mod n+1, with
// representatives taken in {1..n+1}; requires 1 <= k <= n+1.
Permutation rotate(const DecoratedPermutation& tau, int k);

// Structural attribute a(tau): the value of the first undecorated
// letter.
int t1_attr(const DecoratedPermutation& tau);

// k-th descendant of tau in the first tree: the rotation k + tau, with
// sigma_1 decorated iff k > n+1 - a(tau) and sigma_i (i >= 2) decorated
// iff tau_{i-1} is. Requires schedule 1^n.
DecoratedPermutation t1_descendant(const DecoratedPermutation& tau, int k);

// Inverts t1_descendant; returns the parent and the branch index k.
std::pair<DecoratedPermutation, int> t1_parent(const DecoratedPermutation& child);

// eta_l: inserts the value l at the end, keeping sigma_1..sigma_n in
// the same relative order (sigma'_i = sigma_i + chi(sigma_i >= l)).
Permutation t2_insert(const Permutation& sigma, int l);

// Structural attribute: n+1 - sigma_n when sigma ends with an ascent,
// sigma_n when it ends with a descent (sigma_0 = 0 covers n = 1).
int t2_attr(const Permutation& sigma);

// inv3(eta_l(sigma)) - inv3(sigma); a bijection {1..n+1} -> {0..n}.
int psi(const Permutation& sigma, int l);

// k-th descendant of sigma in the second tree: the insertion eta_l
// with psi(l) = n+1-k.
Permutation t2_descendant(const Permutation& sigma, int k);

// Inverts t2_descendant; returns the parent and the branch index k.
std::pair<Permutation, int> t2_parent(const Permutation& child);

// The tree isomorphism: phi(root) = root and the k-th descendant of
// tau maps to the k-th descendant of phi(tau). Sends revmaj to inv3
// and the decoration count to monot. Requires schedule 1^n.
Permutation phi(const DecoratedPermutation& tau);

// Inverse of phi; the result is the unique schedule-1^n decoration of
// some permutation.
DecoratedPermutation phi_inverse(const Permutation& sigma);

}  // namespace qtcomb
