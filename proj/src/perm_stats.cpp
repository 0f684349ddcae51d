#include "qtcomb/perm_stats.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qtcomb/checked.hpp"

namespace qtcomb {

bool is_permutation(const Permutation& sigma) {
    const int n = static_cast<int>(sigma.size());
    std::vector<bool> seen(n, false);
    for (int v : sigma) {
        if (v < 1 || v > n || seen[v - 1]) return false;
        seen[v - 1] = true;
    }
    return true;
}

Permutation identity_perm(int n) {
    if (n < 0) throw std::invalid_argument("identity_perm: n must be nonnegative");
    Permutation sigma(n);
    std::iota(sigma.begin(), sigma.end(), 1);
    return sigma;
}

std::string perm_str(const Permutation& sigma) {
    return DecoratedPermutation{sigma}.str();
}

DecoratedPermutation::DecoratedPermutation(Permutation v)
    : values(std::move(v)), decorated(values.size(), false) {
    if (!is_permutation(values))
        throw std::invalid_argument("DecoratedPermutation: values are not a permutation");
}

DecoratedPermutation::DecoratedPermutation(Permutation v, std::vector<bool> flags)
    : values(std::move(v)), decorated(std::move(flags)) {
    if (!is_permutation(values))
        throw std::invalid_argument("DecoratedPermutation: values are not a permutation");
    if (decorated.size() != values.size())
        throw std::invalid_argument("DecoratedPermutation: flag count does not match size");
}

int DecoratedPermutation::dec_count() const {
    return static_cast<int>(std::count(decorated.begin(), decorated.end(), true));
}

std::string DecoratedPermutation::str() const {
    std::ostringstream out;
    const bool wide = size() > 9;
    for (int i = 1; i <= size(); ++i) {
        if (wide && i > 1) out << ' ';
        if (decorated_at(i)) out << '*';
        out << at(i);
    }
    return out.str();
}

DecoratedPermutation DecoratedPermutation::parse(std::string_view text) {
    Permutation values;
    std::vector<bool> flags;
    bool pending_star = false;
    for (char c : text) {
        if (c == '*') {
            if (pending_star)
                throw std::invalid_argument("DecoratedPermutation::parse: doubled '*'");
            pending_star = true;
        } else if (c >= '1' && c <= '9') {
            values.push_back(c - '0');
            flags.push_back(pending_star);
            pending_star = false;
        } else {
            throw std::invalid_argument("DecoratedPermutation::parse: unexpected character");
        }
    }
    if (pending_star) throw std::invalid_argument("DecoratedPermutation::parse: trailing '*'");
    return {std::move(values), std::move(flags)};
}

PositionKind classify(const Permutation& sigma, int i) {
    const int n = static_cast<int>(sigma.size());
    if (i < 2 || i > n) throw std::out_of_range("classify: index must be in {2..n}");
    const int a = i == 2 ? 0 : sigma[i - 3];
    const int b = sigma[i - 2];
    const int c = sigma[i - 1];
    if (a < b) return b < c ? PositionKind::double_ascent : PositionKind::peak;
    return b < c ? PositionKind::valley : PositionKind::double_descent;
}

int monot(const Permutation& sigma) {
    int count = 0;
    for (int i = 2; i <= static_cast<int>(sigma.size()); ++i) {
        PositionKind kind = classify(sigma, i);
        count += kind == PositionKind::double_ascent || kind == PositionKind::double_descent;
    }
    return count;
}

int inv3(const Permutation& sigma) {
    const int n = static_cast<int>(sigma.size());
    int count = 0;
    for (int j = 2; j <= n; ++j) {
        const PositionKind kind = classify(sigma, j);
        const int prev = sigma[j - 2];
        const int cur = sigma[j - 1];
        for (int i = 1; i < j; ++i) {
            const int v = sigma[i - 1];
            switch (kind) {
                case PositionKind::double_ascent: count += prev < v && v < cur; break;
                case PositionKind::double_descent: count += prev > v && v > cur; break;
                case PositionKind::peak: count += v > cur; break;
                case PositionKind::valley: count += v < cur; break;
            }
        }
    }
    return count;
}

int maj(const Permutation& sigma) {
    int total = 0;
    for (int i = 1; i < static_cast<int>(sigma.size()); ++i)
        if (sigma[i - 1] > sigma[i]) total += i;
    return total;
}

int revmaj(const Permutation& sigma) {
    Permutation rev(sigma.rbegin(), sigma.rend());
    return maj(rev);
}

int revmaj(const DecoratedPermutation& tau) {
    return revmaj(tau.values);
}

int inv(const Permutation& sigma) {
    const int n = static_cast<int>(sigma.size());
    int count = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) count += sigma[i] > sigma[j];
    return count;
}

int chebikin_ihat(const Permutation& sigma) {
    const int n = static_cast<int>(sigma.size());
    int count = 0;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (i % 2 == 1)
                count += sigma[i - 1] > sigma[j - 1];
            else
                count += sigma[i - 1] < sigma[j - 1];
        }
    return count;
}

int count_31_2(const Permutation& sigma) {
    const int n = static_cast<int>(sigma.size());
    int count = 0;
    for (int i = 1; i + 1 < n; ++i)
        for (int j = i + 2; j <= n; ++j)
            count += sigma[i - 1] > sigma[j - 1] && sigma[j - 1] > sigma[i];
    return count;
}

bool is_alternating(const Permutation& sigma) {
    return monot(sigma) == 0;
}

std::int64_t euler_number(int n) {
    if (n < 0) throw std::invalid_argument("euler_number: n must be nonnegative");
    std::vector<std::int64_t> row{1};
    for (int m = 1; m <= n; ++m) {
        std::vector<std::int64_t> next(m + 1, 0);
        for (int k = 1; k <= m; ++k) next[k] = checked_add(next[k - 1], row[m - k]);
        row = std::move(next);
    }
    return row.back();
}

Polynomial euler_poly(int n) {
    if (n < 0) throw std::invalid_argument("euler_poly: n must be nonnegative");
    Polynomial total;
    for_each_permutation(n, [&](const Permutation& sigma) {
        if (monot(sigma) == 0) total.add_term(Monomial{0, count_31_2(sigma), 0}, 1);
    });
    return total;
}

}  // namespace qtcomb
