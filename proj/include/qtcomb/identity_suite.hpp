#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qtcomb/polynomial.hpp"

namespace qtcomb {

struct CheckParams {
    int n = 0;
    std::optional<int> k;
    std::optional<int> j;
};

struct CheckReport {
    std::string name;
    CheckParams params;
    bool passed = false;
    Polynomial lhs;
    Polynomial rhs;
    std::optional<std::string> witness;
    double elapsed_ms = 0.0;
    std::uint64_t objects = 0;
};

// Sum of (-1)^dinv t^area over stLD(n)^{*k}.
Polynomial lhs_q_minus1(int n, int k, unsigned threads = 1);

// The same sums for all k at once, graded by z^k.
Polynomial lhs_q_minus1_z(int n, unsigned threads = 1);

// Sum of t^inv3 z^monot over S_n.
Polynomial rhs_inv3_monot(int n, unsigned threads = 1);

// Sum over sigma with monot(sigma) <= j of t^inv3; 0 for j < 0 and the
// full [n]_t! once j >= n-1.
Polynomial dnj(int n, int j, unsigned threads = 1);

// lhs_q_minus1_z(n) == rhs_inv3_monot(n).
CheckReport check_main_theorem(int n, unsigned threads = 1);

// For every decorated permutation tau of [n], the dw fiber
// sum of q^dinv t^area equals t^revmaj(tau) prod [s_i]_q (an empty
// fiber matching a vanishing product); also cross-checks the q = 1
// totals.
CheckReport check_schedule_formula(int n, unsigned threads = 1);

// lhs_q_minus1(n,k) == sum of t^revmaj over schedule-1^n tau with k
// decorations; all k at once (z-graded) when k is absent.
CheckReport check_sched_q_minus1(int n, std::optional<int> k = std::nullopt,
                                 unsigned threads = 1);

// Sum over all k of lhs_q_minus1(n,k) == [n]_t!.
CheckReport check_sum_is_t_factorial(int n, unsigned threads = 1);

// Signed area count over undecorated labelled paths == E_n.
CheckReport check_sign_area_euler(int n, unsigned threads = 1);

// lhs_q_minus1(n,0) == t^floor(n^2/4) E_n(t) == sum of t^inv3 over
// alternating permutations.
CheckReport check_t_euler(int n, unsigned threads = 1);

// inv3, Chebikin's i-hat and revmaj all have distribution [n]_t!.
CheckReport check_mahonian(int n, unsigned threads = 1);

// phi is a bijection sending revmaj to inv3 and dec to monot, with
// phi_inverse a two-sided inverse.
CheckReport check_tree_isomorphism(int n, unsigned threads = 1);

// The closed-form psi matches direct inv3 differences and is a
// bijection onto {0..n} for every sigma.
CheckReport check_psi_bijection(int n, unsigned threads = 1);

// Conjectured two-term recursion: for 0 <= j <= n-1,
//   D_{n,j} = t^{n-j-1} [j+1]_t D_{n-1,j+1} + [n-j-1]_t D_{n-1,j-1}.
// A failure is reported with witness, not raised.
CheckReport check_dnj_recursion(int n, unsigned threads = 1);

struct CheckInfo {
    std::string name;
    int min_n = 1;
    int max_n = 9;
    bool takes_k = false;
    std::string summary;
};

// All named checks in canonical execution order.
const std::vector<CheckInfo>& check_registry();

// Runs a check by registry name; throws std::invalid_argument for an
// unknown name, std::out_of_range when n is outside the check's range.
CheckReport run_check(const std::string& name, int n, std::optional<int> k = std::nullopt,
                      unsigned threads = 1);

}  // namespace qtcomb
