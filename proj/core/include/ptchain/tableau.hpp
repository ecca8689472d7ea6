#pragma once

#include <string>
#include <vector>

#include "ptchain/laurent.hpp"
#include "ptchain/shape.hpp"

namespace ptchain {

// Statistics of a permutation tableau. rank counts the superfluous ones
// (total ones minus columns); first_row_ones is the number of ones in the top
// row; free_rows is the number of unrestricted rows minus one (the top row is
// always unrestricted). The weight is q^rank * a^-first_row_ones * b^-free_rows.
struct TableauStats {
    int rank = 0;
    int first_row_ones = 0;
    int free_rows = 0;

    friend bool operator==(const TableauStats&, const TableauStats&) = default;
};

// 0/1 filling of a Young diagram such that every column contains a one and no
// zero has simultaneously a one above it and a one to its left.
class PermutationTableau {
  public:
    PermutationTableau() = default;
    // Throws if the filling dimensions do not match the shape. Validity of
    // the filling itself is checked separately (is_valid / make_checked).
    PermutationTableau(Shape shape, std::vector<std::vector<unsigned char>> rows);

    static PermutationTableau make_checked(Shape shape,
                                           std::vector<std::vector<unsigned char>> rows);

    const Shape& shape() const { return shape_; }
    const std::vector<std::vector<unsigned char>>& rows() const { return rows_; }
    int half_perimeter() const { return shape_.half_perimeter(); }
    int cell(int row, int col) const { return rows_.at(row - 1).at(col - 1); }  // 1-based

    bool is_valid() const;
    TableauStats stats() const;
    LaurentMonomial weight() const;

    // True if the one at (row, col) is the highest one of its column.
    bool is_topmost_one(int row, int col) const;
    // True if the cell holds the unique one of its column.
    bool is_necessary_one(int row, int col) const;
    // True if the cell holds a zero with a one above it in the same column.
    bool is_restricted_zero(int row, int col) const;
    bool row_is_unrestricted(int row) const;

    // Compact canonical key: row bitstrings joined by '|' ("1100|0010|1111|001").
    std::string key() const;
    static PermutationTableau parse_key(const std::string& key);

    friend bool operator==(const PermutationTableau&, const PermutationTableau&) = default;
    friend bool operator<(const PermutationTableau& x, const PermutationTableau& y) {
        return x.rows_ < y.rows_;
    }

  private:
    Shape shape_;
    std::vector<std::vector<unsigned char>> rows_;
};

// All valid tableaux of the given shape, fillings in ascending binary order
// of the concatenated row bits. Enumerated directly; this doubles as the
// brute-force oracle the higher-level identities are tested against.
std::vector<PermutationTableau> tableaux_of_shape(const Shape& shape);

// All valid tableaux of the given half-perimeter: shapes in descending
// lexicographic order, fillings as above. Size is hp! (tested, not assumed).
std::vector<PermutationTableau> enumerate_tableaux(int hp);

// Weight generating function of a shape: sum of weights over all valid
// fillings.
LaurentPoly shape_weight_polynomial(const Shape& shape);

// Sum of tableau weights over all tableaux of half-perimeter n+1; the
// normalizing constant of the stationary laws on n sites.
LaurentPoly partition_function(int n);

}  // namespace ptchain
