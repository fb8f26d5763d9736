#include "hexprob/nullspace.hpp"

#include <stdexcept>

namespace hexprob {

std::vector<std::vector<Rat>> nullspace_basis(std::vector<std::vector<Rat>> rows)
{
    if (rows.empty() || rows[0].empty())
        throw std::invalid_argument("nullspace_basis: empty matrix");
    const std::size_t ncols = rows[0].size();
    for (const auto& row : rows)
        if (row.size() != ncols)
            throw std::invalid_argument("nullspace_basis: ragged matrix");

    // Reduced row echelon form.
    std::vector<std::size_t> pivot_col_of_row;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < ncols && pivot_row < rows.size(); ++col) {
        std::size_t found = pivot_row;
        while (found < rows.size() && rows[found][col] == 0)
            ++found;
        if (found == rows.size())
            continue;
        std::swap(rows[pivot_row], rows[found]);

        const Rat inv = Rat(1) / rows[pivot_row][col];
        for (std::size_t j = col; j < ncols; ++j)
            rows[pivot_row][j] *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == pivot_row || rows[r][col] == 0)
                continue;
            const Rat factor = rows[r][col];
            for (std::size_t j = col; j < ncols; ++j)
                rows[r][j] -= factor * rows[pivot_row][j];
        }
        pivot_col_of_row.push_back(col);
        ++pivot_row;
    }

    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t col : pivot_col_of_row)
        is_pivot[col] = true;

    // One basis vector per free column: that column set to 1, pivot columns
    // set to cancel it.
    std::vector<std::vector<Rat>> basis;
    for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot[free_col])
            continue;
        std::vector<Rat> vec(ncols, Rat(0));
        vec[free_col] = 1;
        for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
            vec[pivot_col_of_row[r]] = -rows[r][free_col];
        basis.push_back(std::move(vec));
    }
    return basis;
}

} // namespace hexprob
