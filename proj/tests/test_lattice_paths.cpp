#include <doctest.h>

#include <numeric>
#include <set>
#include <stdexcept>

#include "qtcomb/lattice_paths.hpp"

using namespace qtcomb;

namespace {

const DyckPath kGoldenPath{{0, 1, 2, 1, 0, 1, 0, 0}};
const std::vector<int> kGoldenLabels{3, 4, 5, 1, 6, 7, 2, 8};
const std::vector<int> kGoldenDv{4, 5, 7, 8};

DecoratedLabelledPath golden() {
    return {kGoldenPath, kGoldenLabels, kGoldenDv};
}

std::int64_t ipow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace

TEST_CASE("area word validity") {
    CHECK(DyckPath{{0, 1, 2, 1, 0, 1, 0, 0}}.valid());
    CHECK(DyckPath{{}}.valid());
    CHECK_FALSE(DyckPath{{1}}.valid());
    CHECK_FALSE(DyckPath{{0, 2}}.valid());
    CHECK_FALSE(DyckPath{{0, -1}}.valid());
}

TEST_CASE("area is the sum of the area word") {
    CHECK(kGoldenPath.area() == 5);
    CHECK(DyckPath{{0, 0, 0}}.area() == 0);
    CHECK(DyckPath{{0, 1, 2}}.area() == 3);
}

TEST_CASE("step strings round-trip") {
    CHECK(DyckPath{{0, 1}}.step_string() == "NNEE");
    CHECK(DyckPath{{0, 0}}.step_string() == "NENE");
    CHECK(DyckPath::from_step_string("NNEE") == DyckPath{{0, 1}});
    CHECK(DyckPath::from_step_string("NENE") == DyckPath{{0, 0}});
    for_each_dyck(6, [&](const DyckPath& p) {
        CHECK(DyckPath::from_step_string(p.step_string()) == p);
    });
    CHECK_THROWS_AS(DyckPath::from_step_string("NE E"), std::invalid_argument);
    CHECK_THROWS_AS(DyckPath::from_step_string("NEE"), std::invalid_argument);
    CHECK_THROWS_AS(DyckPath::from_step_string("EN"), std::invalid_argument);
}

TEST_CASE("Dyck path enumeration is Catalan") {
    const int catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
    for (int n = 0; n <= 8; ++n) CHECK(static_cast<int>(dyck_paths(n).size()) == catalan[n]);
    CHECK_THROWS_AS(for_each_dyck(-1, [](const DyckPath&) {}), std::invalid_argument);

    for (const auto& p : dyck_paths(5)) CHECK(p.valid());
}

TEST_CASE("labellings respect column increase and count parking functions") {
    for (int n = 1; n <= 6; ++n) {
        std::int64_t count = 0;
        for_each_dyck(n, [&](const DyckPath& p) {
            for_each_labelling(p, [&](const std::vector<int>& w) {
                DecoratedLabelledPath full{p, w, {}};
                CHECK(full.valid());
                ++count;
            });
        });
        CHECK(count == ipow(n + 1, n - 1));
    }
}

TEST_CASE("contractible valleys of the golden path") {
    CHECK(contractible_valleys(kGoldenPath, kGoldenLabels) == std::vector<int>{4, 5, 7, 8});
    CHECK(contractible_valleys(DyckPath{{0, 0}}, {1, 2}) == std::vector<int>{2});
    CHECK(contractible_valleys(DyckPath{{0, 0}}, {2, 1}) == std::vector<int>{});
    CHECK(contractible_valleys(DyckPath{{0, 1}}, {1, 2}) == std::vector<int>{});
}

TEST_CASE("golden path statistics") {
    const auto p = golden();
    CHECK(p.valid());
    CHECK(area(p) == 5);
    CHECK(dinv(p) == 2);
    CHECK(diagonal_word(p).str() == "*8*63*274*15");
}

TEST_CASE("golden path undecorated") {
    const DecoratedLabelledPath p{kGoldenPath, kGoldenLabels, {}};
    CHECK(p.valid());
    // 6 primary + 3 secondary pairs, no decorations to subtract.
    CHECK(dinv(p) == 9);
    CHECK(diagonal_word(p).str() == "86327415");
}

TEST_CASE("validity rejects broken inputs") {
    CHECK_FALSE(DecoratedLabelledPath{kGoldenPath, {3, 4, 5, 1, 6, 7, 2, 2}, {}}.valid());
    CHECK_FALSE(DecoratedLabelledPath{DyckPath{{0, 1}}, {2, 1}, {}}.valid());
    CHECK_FALSE(DecoratedLabelledPath{kGoldenPath, kGoldenLabels, {2}}.valid());
    CHECK_FALSE(DecoratedLabelledPath{kGoldenPath, kGoldenLabels, {5, 4}}.valid());
    CHECK_FALSE(DecoratedLabelledPath{kGoldenPath, kGoldenLabels, {4, 4}}.valid());
}

TEST_CASE("dinv contributions decompose dinv") {
    for (int n = 1; n <= 5; ++n) {
        for_each_dyck(n, [&](const DyckPath& path) {
            for_each_labelling(path, [&](const std::vector<int>& w) {
                const auto c = dinv_contributions(path, w);
                const auto cv = contractible_valleys(path, w);
                const int total = std::accumulate(c.begin(), c.end(), 0);
                detail::for_each_combination(cv, static_cast<int>(cv.size()) / 2,
                                             [&](const std::vector<int>& subset) {
                    DecoratedLabelledPath p{path, w, subset};
                    int expected = total;
                    for (int i : subset) expected -= c[i - 1] + 1;
                    CHECK(dinv(p) == expected);
                });
            });
        });
    }
}

TEST_CASE("decorated enumeration counts") {
    // Column sums of the k-graded counts: n=3 rows from brute force.
    std::int64_t by_k[3] = {0, 0, 0};
    for (int k = 0; k <= 2; ++k)
        for_each_decorated(3, k, [&](const DecoratedLabelledPath& p) {
            CHECK(p.valid());
            CHECK(static_cast<int>(p.dv.size()) == k);
            ++by_k[k];
        });
    CHECK(by_k[0] == 16);

    std::int64_t total = 0;
    for_each_dyck(3, [&](const DyckPath& path) {
        for_each_labelling(path, [&](const std::vector<int>& w) {
            total += std::int64_t{1} << contractible_valleys(path, w).size();
        });
    });
    CHECK(by_k[0] + by_k[1] + by_k[2] == total);

    CHECK_THROWS_AS(for_each_decorated(3, 3, [](const DecoratedLabelledPath&) {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(for_each_decorated(3, -1, [](const DecoratedLabelledPath&) {}),
                    std::invalid_argument);
}

TEST_CASE("dinv is nonnegative over all small decorated paths") {
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k < n; ++k)
            for_each_decorated(n, k, [&](const DecoratedLabelledPath& p) {
                CHECK(dinv(p) >= 0);
            });
}

TEST_CASE("diagonal word reaches every decorated permutation with positive schedule") {
    std::set<std::string> words;
    for (int k = 0; k <= 2; ++k)
        for_each_decorated(3, k, [&](const DecoratedLabelledPath& p) {
            words.insert(diagonal_word(p).str());
        });
    CHECK(words.count("*8*63*274*15") == 0);
    CHECK(words.count("321") == 1);
    CHECK(words.count("123") == 1);
    CHECK(words.count("12*3") == 0);
}
