#include "ptchain/tableau.hpp"

#include <stdexcept>

namespace ptchain {

PermutationTableau::PermutationTableau(Shape shape, std::vector<std::vector<unsigned char>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != shape_.row_count())
        throw std::invalid_argument("PermutationTableau: row count does not match shape");
    for (int j = 0; j < shape_.row_count(); ++j) {
        if (static_cast<int>(rows_[j].size()) != shape_.rows()[j])
            throw std::invalid_argument("PermutationTableau: row length does not match shape");
        for (auto v : rows_[j])
            if (v > 1) throw std::invalid_argument("PermutationTableau: entries must be 0 or 1");
    }
}

PermutationTableau PermutationTableau::make_checked(Shape shape,
                                                    std::vector<std::vector<unsigned char>> rows) {
    PermutationTableau t(std::move(shape), std::move(rows));
    if (!t.is_valid()) throw std::invalid_argument("PermutationTableau: invalid filling");
    return t;
}

bool PermutationTableau::is_valid() const {
    const int cols = shape_.column_count();
    std::vector<unsigned char> one_above(cols, 0);
    for (const auto& row : rows_) {
        bool one_left = false;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c]) {
                one_left = true;
            } else if (one_above[c] && one_left) {
                return false;
            }
        }
        for (std::size_t c = 0; c < row.size(); ++c)
            if (row[c]) one_above[c] = 1;
    }
    for (int c = 0; c < cols; ++c)
        if (!one_above[c]) return false;
    return true;
}

TableauStats PermutationTableau::stats() const {
    TableauStats s;
    const int cols = shape_.column_count();
    std::vector<unsigned char> one_above(cols, 0);
    int ones = 0;
    int unrestricted = 0;
    for (std::size_t j = 0; j < rows_.size(); ++j) {
        bool restricted = false;
        for (std::size_t c = 0; c < rows_[j].size(); ++c) {
            if (rows_[j][c]) {
                ++ones;
                if (j == 0) ++s.first_row_ones;
            } else if (one_above[c]) {
                restricted = true;
            }
        }
        if (!restricted) ++unrestricted;
        for (std::size_t c = 0; c < rows_[j].size(); ++c)
            if (rows_[j][c]) one_above[c] = 1;
    }
    s.rank = ones - cols;
    s.free_rows = unrestricted - 1;
    return s;
}

LaurentMonomial PermutationTableau::weight() const {
    TableauStats s = stats();
    return {1, {s.rank, -s.first_row_ones, -s.free_rows}};
}

bool PermutationTableau::is_topmost_one(int row, int col) const {
    if (!cell(row, col)) return false;
    for (int r = 1; r < row; ++r)
        if (cell(r, col)) return false;
    return true;
}

bool PermutationTableau::is_necessary_one(int row, int col) const {
    if (!cell(row, col)) return false;
    const auto heights = shape_.column_heights();
    for (int r = 1; r <= heights[col - 1]; ++r)
        if (r != row && cell(r, col)) return false;
    return true;
}

bool PermutationTableau::is_restricted_zero(int row, int col) const {
    if (cell(row, col)) return false;
    for (int r = 1; r < row; ++r)
        if (cell(r, col)) return true;
    return false;
}

bool PermutationTableau::row_is_unrestricted(int row) const {
    for (int c = 1; c <= shape_.rows()[row - 1]; ++c)
        if (is_restricted_zero(row, c)) return false;
    return true;
}

std::string PermutationTableau::key() const {
    std::string out;
    for (std::size_t j = 0; j < rows_.size(); ++j) {
        if (j) out.push_back('|');
        for (auto v : rows_[j]) out.push_back(v ? '1' : '0');
    }
    return out;
}

PermutationTableau PermutationTableau::parse_key(const std::string& key) {
    std::vector<std::vector<unsigned char>> rows;
    std::vector<int> lengths;
    rows.emplace_back();
    for (char c : key) {
        if (c == '|') {
            rows.emplace_back();
        } else if (c == '0' || c == '1') {
            rows.back().push_back(c == '1');
        } else {
            throw std::invalid_argument(std::string("tableau key: bad character '") + c + "'");
        }
    }
    for (const auto& r : rows) lengths.push_back(static_cast<int>(r.size()));
    return PermutationTableau(Shape(lengths), std::move(rows));
}

std::vector<PermutationTableau> tableaux_of_shape(const Shape& shape) {
    std::vector<PermutationTableau> out;
    const int m = shape.cell_count();
    if (m > 30) throw std::invalid_argument("tableaux_of_shape: shape too large to enumerate");
    for (long v = 0; v < (1L << m); ++v) {
        std::vector<std::vector<unsigned char>> rows(shape.row_count());
        int k = 0;
        for (int j = 0; j < shape.row_count(); ++j) {
            rows[j].resize(shape.rows()[j]);
            for (int c = 0; c < shape.rows()[j]; ++c, ++k)
                rows[j][c] = (v >> (m - 1 - k)) & 1;
        }
        PermutationTableau t(shape, std::move(rows));
        if (t.is_valid()) out.push_back(std::move(t));
    }
    return out;
}

std::vector<PermutationTableau> enumerate_tableaux(int hp) {
    std::vector<PermutationTableau> out;
    for (const Shape& s : shapes_of_half_perimeter(hp)) {
        auto group = tableaux_of_shape(s);
        out.insert(out.end(), group.begin(), group.end());
    }
    return out;
}

LaurentPoly shape_weight_polynomial(const Shape& shape) {
    LaurentPoly f;
    for (const auto& t : tableaux_of_shape(shape)) f += LaurentPoly(t.weight());
    return f;
}

LaurentPoly partition_function(int n) {
    if (n < 1) throw std::invalid_argument("partition_function: n must be >= 1");
    LaurentPoly z;
    for (const Shape& s : shapes_of_half_perimeter(n + 1)) z += shape_weight_polynomial(s);
    return z;
}

}  // namespace ptchain
