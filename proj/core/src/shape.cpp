#include "ptchain/shape.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ptchain {

PasepState::PasepState(std::vector<unsigned char> sites) : sites_(std::move(sites)) {
    for (auto s : sites_)
        if (s > 1) throw std::invalid_argument("PasepState: sites must be 0 or 1");
}

std::string PasepState::to_string() const {
    std::string out;
    out.reserve(sites_.size());
    for (auto s : sites_) out.push_back(s ? '1' : '0');
    return out;
}

PasepState PasepState::parse(const std::string& text) {
    std::vector<unsigned char> sites;
    sites.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '0':
            case '.': sites.push_back(0); break;
            case '1':
            case '*': sites.push_back(1); break;
            default:
                throw std::invalid_argument(std::string("PasepState: bad character '") + c + "'");
        }
    }
    return PasepState(std::move(sites));
}

Shape::Shape(std::vector<int> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] < 0) throw std::invalid_argument("Shape: negative row length");
        if (i > 0 && rows_[i] > rows_[i - 1])
            throw std::invalid_argument("Shape: row lengths must weakly decrease");
    }
}

int Shape::cell_count() const {
    int total = 0;
    for (int r : rows_) total += r;
    return total;
}

std::vector<int> Shape::column_heights() const {
    std::vector<int> heights(column_count(), 0);
    for (int j = 0; j < row_count(); ++j)
        for (int c = 0; c < rows_[j]; ++c) heights[c] = j + 1;
    return heights;
}

std::string Shape::to_string() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) out << ",";
        out << rows_[i];
    }
    out << ")";
    return out.str();
}

Shape shape_of_state(const PasepState& state) {
    // Path steps p_1 = S, p_{i+1} = S iff site i is occupied. The j-th south
    // step opens row j; every later west step lengthens all rows opened so
    // far, which keeps the lengths weakly decreasing by construction.
    std::vector<int> rows{0};
    for (int i = 1; i <= state.size(); ++i) {
        if (state.occupied(i)) {
            rows.push_back(0);
        } else {
            for (auto& r : rows) ++r;
        }
    }
    return Shape(std::move(rows));
}

PasepState state_of_shape(const Shape& shape) {
    if (shape.half_perimeter() < 2)
        throw std::invalid_argument("state_of_shape: half-perimeter must be at least 2");
    const auto& rows = shape.rows();
    const int t = shape.row_count();
    std::vector<unsigned char> sites;
    sites.reserve(shape.half_perimeter() - 1);
    // Emit the path after its leading south step: between the j-th and
    // (j+1)-th south steps come rows[j-1] - rows[j] west steps.
    for (int j = 1; j <= t; ++j) {
        if (j >= 2) sites.push_back(1);
        int next = (j < t) ? rows[j] : 0;
        for (int w = rows[j - 1]; w > next; --w) sites.push_back(0);
    }
    return PasepState(std::move(sites));
}

std::vector<Shape> shapes_of_half_perimeter(int hp) {
    if (hp < 1) throw std::invalid_argument("shapes_of_half_perimeter: hp must be >= 1");
    std::vector<Shape> shapes;
    const int steps = hp - 1;
    for (long mask = 0; mask < (1L << steps); ++mask) {
        std::vector<unsigned char> sites(steps);
        for (int i = 0; i < steps; ++i) sites[i] = (mask >> i) & 1;
        shapes.push_back(shape_of_state(PasepState(std::move(sites))));
    }
    std::sort(shapes.begin(), shapes.end(), [](const Shape& x, const Shape& y) { return y < x; });
    return shapes;
}

}  // namespace ptchain
