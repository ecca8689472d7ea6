#include "ptchain/involution.hpp"

#include <stdexcept>

namespace ptchain {

Permutation involute(const Permutation& p) {
    const int n = p.size();
    std::vector<int> img(n);
    img[0] = n + 1 - p(1);
    for (int i = 2; i <= n; ++i) img[i - 1] = n + 1 - p(n + 2 - i);
    return Permutation(std::move(img));
}

PermutationTableau conjugate(const PermutationTableau& t) {
    // Zero-length rows have no cells to transpose but are kept as zero-length
    // rows of the image; this preserves the half-perimeter and makes double
    // conjugation the identity.
    const auto heights = t.shape().column_heights();
    int zero_rows = 0;
    for (int len : t.shape().rows())
        if (len == 0) ++zero_rows;
    std::vector<std::vector<unsigned char>> rows(heights.size() + zero_rows);
    std::vector<int> shape_rows(heights.size() + zero_rows, 0);
    for (std::size_t c = 0; c < heights.size(); ++c) {
        shape_rows[c] = heights[c];
        rows[c].resize(heights[c]);
        for (int r = 1; r <= heights[c]; ++r) rows[c][r - 1] = t.cell(r, static_cast<int>(c) + 1);
    }
    return PermutationTableau(Shape(std::move(shape_rows)), std::move(rows));
}

PermutationTableau involute(const PermutationTableau& t) {
    if (!t.is_valid()) throw std::invalid_argument("involute: invalid tableau");
    const int k = t.shape().row_count();
    const auto heights = t.shape().column_heights();
    const int cols = static_cast<int>(heights.size());

    // Rightmost restricted zero of each row of t (0 = none).
    std::vector<int> rightmost_restricted(k + 1, 0);
    for (int r = 1; r <= k; ++r)
        for (int c = t.shape().rows()[r - 1]; c >= 1; --c)
            if (t.is_restricted_zero(r, c)) {
                rightmost_restricted[r] = c;
                break;
            }

    std::vector<int> shape_rows;
    shape_rows.push_back(k - 1);
    for (int c = 0; c < cols; ++c) shape_rows.push_back(heights[c] - 1);

    std::vector<std::vector<unsigned char>> rows(shape_rows.size());
    rows[0].resize(k - 1);
    for (int j = 1; j <= k - 1; ++j) rows[0][j - 1] = t.row_is_unrestricted(j + 1) ? 1 : 0;
    for (int i = 2; i <= cols + 1; ++i) {
        rows[i - 1].resize(heights[i - 2] - 1);
        for (int j = 1; j <= heights[i - 2] - 1; ++j) {
            const int r = j + 1, c = i - 1;  // source cell of t
            unsigned char v = static_cast<unsigned char>(t.cell(r, c));
            if (t.is_topmost_one(r, c) ||
                (v == 0 && t.is_restricted_zero(r, c) && rightmost_restricted[r] == c))
                v ^= 1;
            rows[i - 1][j - 1] = v;
        }
    }
    return PermutationTableau(Shape(std::move(shape_rows)), std::move(rows));
}

}  // namespace ptchain
