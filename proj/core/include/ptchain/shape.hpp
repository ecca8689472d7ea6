#pragma once

#include <string>
#include <vector>

namespace ptchain {

// State of the exclusion process: one bit per site, 1 = occupied.
class PasepState {
  public:
    PasepState() = default;
    explicit PasepState(std::vector<unsigned char> sites);

    int size() const { return static_cast<int>(sites_.size()); }
    bool occupied(int site) const { return sites_.at(site - 1) != 0; }  // 1-based
    const std::vector<unsigned char>& sites() const { return sites_; }

    // "0101" form.
    std::string to_string() const;
    // Accepts "0101" or the dot/star form ".*.*" (. empty, * occupied).
    static PasepState parse(const std::string& text);

    friend bool operator==(const PasepState&, const PasepState&) = default;
    friend bool operator<(const PasepState& x, const PasepState& y) { return x.sites_ < y.sites_; }

  private:
    std::vector<unsigned char> sites_;
};

// Young-diagram shape: weakly decreasing row lengths, trailing zero-length
// rows kept explicitly (they matter: a zero row is an occupied site after the
// lattice-path encoding, and carries weight through the unrestricted-row
// count).
class Shape {
  public:
    Shape() = default;
    explicit Shape(std::vector<int> rows);

    const std::vector<int>& rows() const { return rows_; }
    int row_count() const { return static_cast<int>(rows_.size()); }
    int row_length(int j) const { return rows_.at(j - 1); }  // 1-based
    int column_count() const { return rows_.empty() ? 0 : rows_[0]; }
    int half_perimeter() const { return row_count() + column_count(); }
    int cell_count() const;

    // Column heights, i.e. the conjugate partition (length == column_count()).
    std::vector<int> column_heights() const;

    friend bool operator==(const Shape&, const Shape&) = default;
    friend bool operator<(const Shape& x, const Shape& y) { return x.rows_ < y.rows_; }

    std::string to_string() const;  // e.g. "(4,4,4,3)"

  private:
    std::vector<int> rows_;
};

// Lattice-path encoding between occupation words of length N and shapes of
// half-perimeter N+1. The path of a shape runs from the north-east corner to
// the south-west corner and always starts with a south step; site i is
// occupied exactly when step i+1 is south.
Shape shape_of_state(const PasepState& state);
PasepState state_of_shape(const Shape& shape);  // requires half_perimeter >= 2

// All shapes of the given half-perimeter, in descending lexicographic order.
std::vector<Shape> shapes_of_half_perimeter(int hp);

}  // namespace ptchain
