#pragma once
// Brute-force reference computations. Nothing here calls the library code
// it is used to check.

#include <functional>
#include <vector>

namespace oracle {

/// Number of semistandard tableaux of shape lambda with entries in 1..d.
inline long long ssyt_count(const std::vector<int>& lambda, int d) {
    std::vector<int> shape;
    for (int x : lambda)
        if (x > 0) shape.push_back(x);
    std::vector<std::vector<int>> t;
    for (int x : shape) t.emplace_back(static_cast<std::size_t>(x), 0);
    long long count = 0;
    std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) {
        if (r == shape.size()) {
            ++count;
            return;
        }
        if (c == t[r].size()) {
            fill(r + 1, 0);
            return;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, t[r][c - 1]);
        if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
        for (int v = lo; v <= d; ++v) {
            t[r][c] = v;
            fill(r, c + 1);
        }
    };
    fill(0, 0);
    return count;
}

/// All weakly decreasing m-tuples bounded by c, by filtering every tuple.
inline std::vector<std::vector<int>> box_tuples(int m, int c) {
    std::vector<std::vector<int>> out;
    std::vector<int> x(static_cast<std::size_t>(m), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == x.size()) {
            for (std::size_t j = 1; j < x.size(); ++j)
                if (x[j] > x[j - 1]) return;
            out.push_back(x);
            return;
        }
        for (int v = 0; v <= c; ++v) {
            x[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

/// Transpose of a diagram drawn as rows of 0/1 in an m x c box.
inline std::vector<int> transpose_rows(const std::vector<int>& rows, int c) {
    std::vector<int> out;
    for (int j = 0; j < c; ++j) {
        int len = 0;
        for (int r : rows)
            if (r > j) ++len;
        out.push_back(len);
    }
    return out;
}

inline long long choose(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace oracle
