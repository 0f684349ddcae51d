#include "qtcomb/lattice_paths.hpp"

#include <algorithm>
#include <numeric>

namespace qtcomb {

bool DyckPath::valid() const {
    for (int i = 0; i < size(); ++i) {
        if (area_word[i] < 0) return false;
        if (i == 0 && area_word[i] != 0) return false;
        if (i > 0 && area_word[i] > area_word[i - 1] + 1) return false;
    }
    return true;
}

int DyckPath::area() const {
    return std::accumulate(area_word.begin(), area_word.end(), 0);
}

std::string DyckPath::step_string() const {
    const int n = size();
    std::string steps;
    steps.reserve(2 * static_cast<std::size_t>(n));
    int east = 0;
    for (int i = 1; i <= n; ++i) {
        steps += 'N';
        const int target = i == n ? n : i - area_word[i];
        for (; east < target; ++east) steps += 'E';
    }
    return steps;
}

DyckPath DyckPath::from_step_string(std::string_view steps) {
    DyckPath path;
    int north = 0;
    int east = 0;
    for (char c : steps) {
        if (c == 'N') {
            ++north;
            path.area_word.push_back(north - 1 - east);
        } else if (c == 'E') {
            ++east;
        } else {
            throw std::invalid_argument("from_step_string: steps must be 'N' or 'E'");
        }
    }
    if (north != east || !path.valid())
        throw std::invalid_argument("from_step_string: not a Dyck path");
    return path;
}

bool DecoratedLabelledPath::decorated_at(int i) const {
    return std::binary_search(dv.begin(), dv.end(), i);
}

bool DecoratedLabelledPath::valid() const {
    const int n = size();
    if (!path.valid() || static_cast<int>(labels.size()) != n || !is_permutation(labels))
        return false;
    for (int i = 1; i < n; ++i)
        if (path.area_word[i] == path.area_word[i - 1] + 1 && labels[i] <= labels[i - 1])
            return false;
    if (!std::is_sorted(dv.begin(), dv.end())) return false;
    const auto cv = contractible_valleys(path, labels);
    for (std::size_t i = 0; i < dv.size(); ++i) {
        if (i > 0 && dv[i] == dv[i - 1]) return false;
        if (!std::binary_search(cv.begin(), cv.end(), dv[i])) return false;
    }
    return true;
}

std::vector<int> contractible_valleys(const DyckPath& path, const std::vector<int>& labels) {
    std::vector<int> cv;
    for (int i = 2; i <= path.size(); ++i) {
        const int prev = path.area_word[i - 2];
        const int cur = path.area_word[i - 1];
        if (prev > cur || (prev == cur && labels[i - 2] < labels[i - 1])) cv.push_back(i);
    }
    return cv;
}

int area(const DecoratedLabelledPath& p) {
    return p.path.area();
}

int dinv(const DecoratedLabelledPath& p) {
    const int n = p.size();
    const auto& a = p.path.area_word;
    const auto& w = p.labels;
    int pairs = 0;
    for (int i = 1; i <= n; ++i) {
        if (p.decorated_at(i)) continue;
        for (int j = i + 1; j <= n; ++j) {
            pairs += a[i - 1] == a[j - 1] && w[i - 1] < w[j - 1];
            pairs += a[i - 1] == a[j - 1] + 1 && w[i - 1] > w[j - 1];
        }
    }
    const int result = pairs - static_cast<int>(p.dv.size());
    if (result < 0) throw std::logic_error("dinv: negative value, path is not valid");
    return result;
}

std::vector<int> dinv_contributions(const DyckPath& path, const std::vector<int>& labels) {
    const int n = path.size();
    const auto& a = path.area_word;
    std::vector<int> c(n, 0);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            c[i - 1] += a[i - 1] == a[j - 1] && labels[i - 1] < labels[j - 1];
            c[i - 1] += a[i - 1] == a[j - 1] + 1 && labels[i - 1] > labels[j - 1];
        }
    return c;
}

DecoratedPermutation diagonal_word(const DecoratedLabelledPath& p) {
    const int n = p.size();
    const int top = n == 0 ? -1 : *std::max_element(p.path.area_word.begin(), p.path.area_word.end());
    Permutation values;
    std::vector<bool> flags;
    values.reserve(n);
    flags.reserve(n);
    std::vector<std::pair<int, bool>> diagonal;
    for (int d = 0; d <= top; ++d) {
        diagonal.clear();
        for (int i = 1; i <= n; ++i)
            if (p.path.area_word[i - 1] == d) diagonal.emplace_back(p.labels[i - 1], p.decorated_at(i));
        std::sort(diagonal.rbegin(), diagonal.rend());
        for (const auto& [label, dec] : diagonal) {
            values.push_back(label);
            flags.push_back(dec);
        }
    }
    return {std::move(values), std::move(flags)};
}

std::vector<DyckPath> dyck_paths(int n) {
    std::vector<DyckPath> all;
    for_each_dyck(n, [&](const DyckPath& p) { all.push_back(p); });
    return all;
}

}  // namespace qtcomb
