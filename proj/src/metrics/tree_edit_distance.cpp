#include "fcgen/metrics/tree_edit_distance.hpp"

#include <algorithm>

namespace fcgen {

namespace {

struct Indexed {
    std::vector<std::string> labels;  // postorder, 1-based
    std::vector<int> leftmost;        // leftmost leaf descendant, 1-based
    std::vector<int> keyroots;

    explicit Indexed(const Tree& t) {
        labels.emplace_back();
        leftmost.push_back(0);
        walk(t);
        const int n = static_cast<int>(labels.size()) - 1;
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        for (int i = n; i >= 1; --i) {
            if (!seen[leftmost[i]]) {
                keyroots.push_back(i);
                seen[leftmost[i]] = true;
            }
        }
        std::sort(keyroots.begin(), keyroots.end());
    }

    int walk(const Tree& t) {
        int first_leaf = -1;
        for (const auto& c : t.children) {
            const int l = walk(c);
            if (first_leaf < 0) first_leaf = l;
        }
        labels.push_back(t.label);
        const int self = static_cast<int>(labels.size()) - 1;
        leftmost.push_back(first_leaf < 0 ? self : first_leaf);
        return leftmost.back();
    }
};

}  // namespace

int tree_edit_distance(const Tree& a, const Tree& b) {
    const Indexed A(a), B(b);
    const int n = static_cast<int>(A.labels.size()) - 1;
    const int m = static_cast<int>(B.labels.size()) - 1;
    std::vector<std::vector<int>> td(n + 1, std::vector<int>(m + 1, 0));
    std::vector<std::vector<int>> fd(n + 2, std::vector<int>(m + 2, 0));

    for (int i : A.keyroots) {
        for (int j : B.keyroots) {
            const int li = A.leftmost[i], lj = B.leftmost[j];
            // fd indices are offset: row x stands for forest li..x, row li-1 is empty.
            fd[li - 1][lj - 1] = 0;
            for (int x = li; x <= i; ++x) fd[x][lj - 1] = fd[x - 1][lj - 1] + 1;
            for (int y = lj; y <= j; ++y) fd[li - 1][y] = fd[li - 1][y - 1] + 1;
            for (int x = li; x <= i; ++x) {
                for (int y = lj; y <= j; ++y) {
                    if (A.leftmost[x] == li && B.leftmost[y] == lj) {
                        const int relabel = A.labels[x] == B.labels[y] ? 0 : 1;
                        fd[x][y] = std::min({fd[x - 1][y] + 1, fd[x][y - 1] + 1, fd[x - 1][y - 1] + relabel});
                        td[x][y] = fd[x][y];
                    } else {
                        fd[x][y] = std::min({fd[x - 1][y] + 1, fd[x][y - 1] + 1,
                                             fd[A.leftmost[x] - 1][B.leftmost[y] - 1] + td[x][y]});
                    }
                }
            }
        }
    }
    return td[n][m];
}

}  // namespace fcgen
