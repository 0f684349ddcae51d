#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "qtcomb/gen_trees.hpp"
#include "qtcomb/identity_suite.hpp"
#include "qtcomb/lattice_paths.hpp"
#include "qtcomb/perm_stats.hpp"
#include "qtcomb/schedules.hpp"

using namespace qtcomb;

namespace {

unsigned worker_threads() {
    const unsigned hw = std::thread::hardware_concurrency();
    return std::clamp(hw == 0 ? 1u : hw, 1u, 8u);
}

struct Criterion {
    bool ok = true;
    std::string detail;

    void expect(bool condition, const std::string& message) {
        if (!condition && ok) {
            ok = false;
            detail = message;
        }
    }
};

void for_each_decoration_mask(int n, const Permutation& sigma,
                              const std::function<void(const DecoratedPermutation&)>& visit) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<bool> flags(n);
        for (int i = 0; i < n; ++i) flags[i] = mask >> i & 1;
        visit(DecoratedPermutation{sigma, std::move(flags)});
    }
}

Criterion golden_example() {
    Criterion c;
    const DecoratedLabelledPath golden{DyckPath{{0, 1, 2, 1, 0, 1, 0, 0}},
                                       {3, 4, 5, 1, 6, 7, 2, 8},
                                       {4, 5, 7, 8}};
    double best_ms = 1e9;
    for (int round = 0; round < 5; ++round) {
        const auto start = std::chrono::steady_clock::now();
        const bool valid = golden.valid();
        const int area_value = area(golden);
        const int dinv_value = dinv(golden);
        const DecoratedPermutation dw = diagonal_word(golden);
        const std::vector<int> schedule = sched(dw);
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        best_ms = std::min(best_ms, ms);
        c.expect(valid, "stored path rejected as invalid");
        c.expect(area_value == 5, "area != 5");
        c.expect(dinv_value == 2, "dinv != 2");
        c.expect(dw.str() == "*8*63*274*15", "diagonal word is " + dw.str());
        c.expect(schedule == std::vector<int>{1, 2, 1, 2, 1, 2, 1, 1}, "schedule mismatch");
    }
    c.expect(best_ms < 1.0, "took " + std::to_string(best_ms) + " ms");
    return c;
}

Criterion run_named_check(const std::string& name, int max_n, unsigned threads, int min_n = 1) {
    Criterion c;
    for (int n = min_n; n <= max_n && c.ok; ++n) {
        const CheckReport report = run_check(name, n, std::nullopt, threads);
        c.expect(report.passed,
                 "n=" + std::to_string(n) + ": " + report.witness.value_or("mismatch"));
    }
    return c;
}

Criterion definitions_agree() {
    Criterion c;
    for (int n = 1; n <= 6 && c.ok; ++n) {
        for_each_permutation(n, [&](const Permutation& sigma) {
            if (!c.ok) return;
            for_each_decoration_mask(n, sigma, [&](const DecoratedPermutation& tau) {
                if (!c.ok) return;
                c.expect(schedule_by_runs(tau) == schedule_by_cyclic_runs(tau),
                         "tau=" + tau.str());
            });
        });
    }
    return c;
}

Criterion interval_lemma() {
    Criterion c;
    for (int n = 1; n <= 6 && c.ok; ++n) {
        for_each_permutation(n, [&](const Permutation& sigma) {
            if (!c.ok) return;
            for_each_decoration_mask(n, sigma, [&](const DecoratedPermutation& tau) {
                if (!c.ok) return;
                const std::vector<int> s = sched(tau);
                if (std::find(s.begin(), s.end(), 0) != s.end()) return;
                const std::set<int> values(s.begin(), s.end());
                c.expect(*values.begin() == 1 &&
                             *values.rbegin() == static_cast<int>(values.size()),
                         "tau=" + tau.str());
            });
        });
    }
    return c;
}

Criterion unique_decoration() {
    Criterion c;
    for (int n = 1; n <= 6 && c.ok; ++n) {
        for_each_permutation(n, [&](const Permutation& sigma) {
            if (!c.ok) return;
            const DecoratedPermutation expected = decorate_1n(sigma);
            int hits = 0;
            for_each_decoration_mask(n, sigma, [&](const DecoratedPermutation& tau) {
                if (!has_schedule_1n(tau)) return;
                ++hits;
                c.expect(tau == expected, "extra schedule-1^n decoration of " + perm_str(sigma));
            });
            c.expect(hits == 1, "no schedule-1^n decoration of " + perm_str(sigma));
        });
    }
    return c;
}

Criterion euler_counts(unsigned threads) {
    Criterion c;
    const std::vector<std::int64_t> frozen{1, 1, 2, 5, 16, 61, 272};
    for (int n = 1; n <= 7 && c.ok; ++n) {
        const std::int64_t expected = frozen[n - 1];
        const std::string at = " at n=" + std::to_string(n);
        c.expect(euler_number(n) == expected, "boustrophedon oracle differs" + at);
        const CheckReport report = check_sign_area_euler(n, threads);
        c.expect(report.passed && report.rhs == Polynomial{expected}, "signed area sum" + at);
        c.expect(static_cast<std::int64_t>(sched_1n_permutations(n, 0).size()) == expected,
                 "undecorated schedule-1^n count" + at);
    }
    return c;
}

Criterion mahonian_suite(unsigned threads) {
    Criterion c;
    for (int n = 1; n <= 8 && c.ok; ++n) {
        const CheckReport report = check_mahonian(n, threads);
        c.expect(report.passed,
                 "n=" + std::to_string(n) + ": " + report.witness.value_or("mismatch"));
    }
    for (int n = 1; n <= 7 && c.ok; ++n) {
        const CheckReport report = check_sum_is_t_factorial(n, threads);
        c.expect(report.passed, "sum over k at n=" + std::to_string(n));
    }
    return c;
}

struct TreeTable {
    std::string parent;
    std::vector<std::string> children;
};

Criterion tree_levels(unsigned threads) {
    Criterion c;
    for (int n = 1; n <= 7 && c.ok; ++n) {
        const CheckReport report = check_tree_isomorphism(n, threads);
        c.expect(report.passed,
                 "n=" + std::to_string(n) + ": " + report.witness.value_or("mismatch"));
    }

    const std::vector<TreeTable> first_tree{
        {"1", {"12", "*21"}},
        {"12", {"123", "231", "*312"}},
        {"*21", {"1*32", "2*13", "*3*21"}},
        {"123", {"1234", "2341", "3412", "*4123"}},
        {"231", {"1342", "2413", "*3124", "*4231"}},
        {"*312", {"1*423", "2*134", "3*241", "*4*312"}},
        {"1*32", {"12*43", "23*14", "34*21", "*41*32"}},
        {"2*13", {"13*24", "24*31", "*31*42", "*42*13"}},
        {"*3*21", {"1*4*32", "2*1*43", "3*2*14", "*4*3*21"}},
    };
    for (const TreeTable& row : first_tree) {
        const DecoratedPermutation parent = DecoratedPermutation::parse(row.parent);
        for (int k = 1; k <= parent.size() + 1 && c.ok; ++k)
            c.expect(t1_descendant(parent, k).str() == row.children[k - 1],
                     "first tree: child " + std::to_string(k) + " of " + row.parent);
    }

    const std::vector<TreeTable> second_tree{
        {"1", {"21", "12"}},
        {"21", {"213", "312", "321"}},
        {"12", {"231", "132", "123"}},
        {"213", {"3241", "3142", "2143", "2134"}},
        {"312", {"4231", "4132", "3124", "4123"}},
        {"321", {"3214", "4213", "4312", "4321"}},
        {"231", {"2314", "2413", "3412", "3421"}},
        {"132", {"1324", "1423", "2431", "1432"}},
        {"123", {"2341", "1342", "1243", "1234"}},
    };
    for (const TreeTable& row : second_tree) {
        Permutation parent;
        for (char ch : row.parent) parent.push_back(ch - '0');
        for (int k = 1; k <= static_cast<int>(parent.size()) + 1 && c.ok; ++k)
            c.expect(perm_str(t2_descendant(parent, k)) == row.children[k - 1],
                     "second tree: child " + std::to_string(k) + " of " + row.parent);
    }
    return c;
}

std::optional<std::string> capture(const std::string& command, int& status) {
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) return std::nullopt;
    std::string out;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, got);
    const int rc = pclose(pipe);
    status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return out;
}

Criterion determinism(const std::string& cli) {
    Criterion c;
    if (!std::filesystem::exists(cli)) {
        c.expect(false, "CLI binary not found at " + cli);
        return c;
    }
    const std::string base = "\"" + cli + "\" verify --check all --n 5 --format json --threads ";
    std::vector<std::string> outputs;
    for (const char* threads : {"1", "1", "4", "8"}) {
        int status = -1;
        const std::optional<std::string> out = capture(base + threads, status);
        c.expect(out.has_value(), "failed to launch the CLI");
        if (!out) return c;
        c.expect(status == 0, "exit status " + std::to_string(status) + " with --threads " +
                                  std::string(threads));
        outputs.push_back(*out);
    }
    c.expect(!outputs.front().empty(), "the CLI produced no output");
    for (const std::string& out : outputs)
        c.expect(out == outputs.front(), "JSON output differs across runs or thread counts");
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli") cli = argv[i + 1];
    if (cli.empty() && argc > 0)
        cli = (std::filesystem::path(argv[0]).parent_path() / ".." / "qtcomb").string();

    const unsigned threads = worker_threads();
    int failed = 0;
    const auto report = [&](int number, const std::string& description, const Criterion& c) {
        if (!c.ok) ++failed;
        std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << number << ": " << description;
        if (!c.ok && !c.detail.empty()) std::cout << " [" << c.detail << "]";
        std::cout << std::endl;
    };

    report(1, "golden example statistics, under 1 ms", golden_example());
    report(2, "main identity for n <= 7", run_named_check("main", 7, threads));
    report(3, "schedule formula fibers for n <= 6", run_named_check("schedule_formula", 6, threads));
    report(4, "both schedule definitions agree for n <= 6", definitions_agree());
    report(5, "positive schedules form initial intervals for n <= 6", interval_lemma());
    report(6, "unique schedule-1^n decoration for n <= 6", unique_decoration());
    report(7, "signed area and undecorated counts match Euler numbers for n <= 7",
           euler_counts(threads));
    report(8, "k = 0 sums equal shifted t-Euler polynomials for n <= 7",
           run_named_check("t_euler", 7, threads));
    report(9, "Mahonian distributions (n <= 8) and t-factorial sums (n <= 7)",
           mahonian_suite(threads));
    report(10, "tree isomorphism for n <= 7 with frozen first four levels", tree_levels(threads));
    report(11, "psi closed forms and bijectivity for n <= 7",
           run_named_check("psi_bijection", 7, threads));
    report(12, "D_{n,j} recursion for 2 <= n <= 9",
           run_named_check("dnj_recursion", 9, threads, 2));
    report(13, "byte-identical verify JSON across runs and thread counts", determinism(cli));

    std::cout << (13 - failed) << "/13 criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
