#include "degenum/simplex.hpp"

#include <stdexcept>

namespace degenum {

// Minimizes the sum of artificial variables of Ax = b, x >= 0. The tableau
// keeps the artificial block so that the dual vector (and hence a Farkas
// certificate on infeasibility) can be read back out. Artificials never
// re-enter once they leave the basis; Bland's rule applies to the rest.
FeasibilityResult solve_equality_feasibility(std::vector<std::vector<Rational>> A,
                                             std::vector<Rational> b) {
    const std::size_t m = A.size();
    const std::size_t n = m == 0 ? 0 : A[0].size();
    for (const auto& row : A)
        if (row.size() != n) throw std::invalid_argument("simplex: ragged matrix");
    if (b.size() != m) throw std::invalid_argument("simplex: rhs length mismatch");

    std::vector<int> row_sign(m, 1);
    for (std::size_t i = 0; i < m; ++i)
        if (b[i] < 0) {
            row_sign[i] = -1;
            b[i] = -b[i];
            for (auto& v : A[i]) v = -v;
        }

    const std::size_t cols = n + m;  // original variables then artificials
    std::vector<std::vector<Rational>> tab(m, std::vector<Rational>(cols, 0));
    std::vector<Rational> rhs = b;
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) tab[i][j] = A[i][j];
        tab[i][n + i] = 1;
        basis[i] = n + i;
    }

    // reduced costs for cost vector (0..0, 1..1)
    std::vector<Rational> reduced(cols, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) reduced[j] -= tab[i][j];

    std::vector<char> left_basis(m, 0);  // artificials barred from re-entering
    while (true) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j) {
            if (j >= n && left_basis[j - n]) continue;
            if (reduced[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == cols) break;

        std::size_t leave = m;
        Rational best_ratio = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (tab[i][enter] <= 0) continue;
            Rational ratio = rhs[i] / tab[i][enter];
            if (leave == m || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == m) throw std::logic_error("simplex: phase-1 unbounded");

        if (basis[leave] >= n) left_basis[basis[leave] - n] = 1;
        basis[leave] = enter;
        Rational pivot = tab[leave][enter];
        for (auto& v : tab[leave]) v /= pivot;
        rhs[leave] /= pivot;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || tab[i][enter] == 0) continue;
            Rational factor = tab[i][enter];
            for (std::size_t j = 0; j < cols; ++j) tab[i][j] -= factor * tab[leave][j];
            rhs[i] -= factor * rhs[leave];
        }
        if (reduced[enter] != 0) {
            Rational factor = reduced[enter];
            for (std::size_t j = 0; j < cols; ++j) reduced[j] -= factor * tab[leave][j];
        }
    }

    Rational objective = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] >= n) objective += rhs[i];

    FeasibilityResult result;
    result.feasible = objective == 0;
    if (result.feasible) {
        result.solution.assign(n, 0);
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] < n) result.solution[basis[i]] = rhs[i];
    } else {
        // y_i = cost of basis applied to B^{-1} column i, undoing row signs
        result.farkas.assign(m, 0);
        for (std::size_t i = 0; i < m; ++i) {
            Rational y = 0;
            for (std::size_t r = 0; r < m; ++r)
                if (basis[r] >= n) y += tab[r][n + i];
            result.farkas[i] = row_sign[i] == 1 ? y : -y;
        }
    }
    return result;
}

}  // namespace degenum
