#include "mms/simplex.hpp"

#include "mms/errors.hpp"

namespace mms {

FeasibilityResult solve_equality_feasibility(const std::vector<std::vector<Rational>>& rows,
                                             const std::vector<Rational>& rhs) {
    const std::size_t m = rows.size();
    if (rhs.size() != m) throw PreconditionError("simplex: row/rhs count mismatch");
    const std::size_t cols = m == 0 ? 0 : rows.front().size();
    const std::size_t width = cols + m; // structural columns, then one artificial per row

    // Rows with negative rhs are negated so the all-artificial basis is feasible.
    std::vector<int> row_sign(m, 1);
    std::vector<std::vector<Rational>> tab(m, std::vector<Rational>(width, 0));
    std::vector<Rational> beta(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (rows[i].size() != cols) throw PreconditionError("simplex: ragged constraint matrix");
        if (sgn(rhs[i]) < 0) row_sign[i] = -1;
        for (std::size_t j = 0; j < cols; ++j) tab[i][j] = row_sign[i] < 0 ? Rational(-rows[i][j]) : rows[i][j];
        tab[i][cols + i] = 1;
        beta[i] = row_sign[i] < 0 ? Rational(-rhs[i]) : rhs[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = cols + i;

    // Reduced costs of the phase-one objective (sum of artificials) and its value.
    std::vector<Rational> reduced(width, 0);
    Rational objective = 0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < cols; ++j) reduced[j] -= tab[i][j];
        objective += beta[i];
    }

    FeasibilityResult result;
    for (;;) {
        std::size_t entering = width;
        for (std::size_t j = 0; j < width; ++j) {
            if (sgn(reduced[j]) < 0) {
                entering = j;
                break;
            }
        }
        if (entering == width) break;

        std::size_t leaving = m;
        Rational best_ratio;
        for (std::size_t i = 0; i < m; ++i) {
            if (sgn(tab[i][entering]) <= 0) continue;
            Rational ratio = beta[i] / tab[i][entering];
            if (leaving == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leaving])) {
                leaving = i;
                best_ratio = std::move(ratio);
            }
        }
        // Phase one is bounded below by zero, so some row always limits the step.
        if (leaving == m) throw InternalError("simplex: unbounded phase-one direction");

        const Rational pivot = tab[leaving][entering];
        for (std::size_t j = 0; j < width; ++j) {
            if (sgn(tab[leaving][j]) != 0) tab[leaving][j] /= pivot;
        }
        beta[leaving] /= pivot;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leaving || sgn(tab[i][entering]) == 0) continue;
            const Rational factor = tab[i][entering];
            for (std::size_t j = 0; j < width; ++j) {
                if (sgn(tab[leaving][j]) != 0) tab[i][j] -= factor * tab[leaving][j];
            }
            beta[i] -= factor * beta[leaving];
        }
        if (sgn(reduced[entering]) != 0) {
            const Rational factor = reduced[entering];
            for (std::size_t j = 0; j < width; ++j) {
                if (sgn(tab[leaving][j]) != 0) reduced[j] -= factor * tab[leaving][j];
            }
            objective += factor * beta[leaving]; // z moves by d_j * step
        }
        basis[leaving] = entering;
        ++result.pivots;
    }

    if (sgn(objective) == 0) {
        result.feasible = true;
        result.solution.assign(cols, 0);
        for (std::size_t i = 0; i < m; ++i) {
            if (basis[i] < cols) result.solution[basis[i]] = beta[i];
        }
        return result;
    }

    // Reduced cost of artificial i is 1 - y_i, where y are the phase-one duals.
    result.farkas.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        Rational y = 1 - reduced[cols + i];
        result.farkas[i] = row_sign[i] < 0 ? Rational(-y) : y;
    }
    return result;
}

} // namespace mms
