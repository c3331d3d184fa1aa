#pragma once

#include <nullideal/matrix.hpp>

#include <vector>

// Fixed matrices shared by the property tests and the acceptance checks.
// Entries stay in [-4, 4] so brute-force windows remain affordable.

namespace corpus {

using nullideal::IntMatrix;

inline const std::vector<IntMatrix>& members_2x2() {
    static const std::vector<IntMatrix> ms = {
        IntMatrix::from_rows({{0, 0}, {0, 0}}),
        IntMatrix::from_rows({{1, 0}, {0, 1}}),
        IntMatrix::from_rows({{0, 1}, {0, 0}}),
        IntMatrix::from_rows({{2, 0}, {0, 2}}),
        IntMatrix::from_rows({{-4, 4}, {0, 4}}),
        IntMatrix::from_rows({{0, -1}, {1, 0}}),
        IntMatrix::from_rows({{1, 2}, {3, 4}}),
        IntMatrix::from_rows({{2, 1}, {1, 2}}),
        IntMatrix::from_rows({{-2, 0}, {0, 3}}),
        IntMatrix::from_rows({{4, 0}, {0, -4}}),
        IntMatrix::from_rows({{0, 2}, {2, 0}}),
        IntMatrix::from_rows({{3, -3}, {1, 1}}),
    };
    return ms;
}

inline const std::vector<IntMatrix>& members_3x3() {
    static const std::vector<IntMatrix> ms = {
        IntMatrix::from_rows({{0, 0, 0}, {0, 1, 0}, {0, 0, 2}}),
        IntMatrix::from_rows({{2, 0, 0}, {0, 2, 0}, {0, 0, 3}}),
        IntMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}),
        IntMatrix::from_rows({{0, 0, -4}, {1, 0, -3}, {0, 1, 0}}),
        IntMatrix::from_rows({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}),
        IntMatrix::from_rows({{-4, 0, 0}, {0, 0, 0}, {0, 0, 4}}),
        IntMatrix::from_rows({{2, 1, 0}, {1, 2, 1}, {0, 1, 2}}),
        IntMatrix::from_rows({{1, 2, 3}, {4, 0, -1}, {2, 2, 2}}),
    };
    return ms;
}

inline std::vector<IntMatrix> all_members() {
    std::vector<IntMatrix> ms = members_2x2();
    const auto& big = members_3x3();
    ms.insert(ms.end(), big.begin(), big.end());
    return ms;
}

inline std::vector<IntMatrix> diagonal_members() {
    std::vector<IntMatrix> ms;
    for (const auto& a : all_members())
        if (a.is_diagonal()) ms.push_back(a);
    return ms;
}

}  // namespace corpus
