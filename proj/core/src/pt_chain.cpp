#include "ptchain/pt_chain.hpp"

#include <algorithm>
#include <stdexcept>

namespace ptchain {

namespace {

using Rows = std::vector<std::vector<unsigned char>>;

LaurentMonomial scaled(LaurentMonomial m, int n_sites) {
    m.coeff /= (n_sites + 1);
    return m;
}

Shape shape_of_rows(const Rows& rows) {
    std::vector<int> lengths;
    lengths.reserve(rows.size());
    for (const auto& r : rows) lengths.push_back(static_cast<int>(r.size()));
    return Shape(lengths);
}

PermutationTableau build(Rows rows) {
    Shape s = shape_of_rows(rows);
    return PermutationTableau(std::move(s), std::move(rows));
}

// New all-zero row of the given length, placed after every row of length >= L.
void insert_zero_row(Rows& rows, int length) {
    std::size_t pos = 0;
    while (pos < rows.size() && static_cast<int>(rows[pos].size()) >= length) ++pos;
    rows.insert(rows.begin() + pos, std::vector<unsigned char>(length, 0));
}

// New column of the given height, zeros over a bottom one, placed after every
// column of height >= h. Rows 1..h each gain one cell.
void insert_column(Rows& rows, int height) {
    int taller = 0;
    if (!rows.empty()) {
        // number of existing columns of height >= h = length of row h
        taller = height <= static_cast<int>(rows.size()) ? static_cast<int>(rows[height - 1].size())
                                                         : 0;
    }
    for (int i = 0; i < height; ++i)
        rows[i].insert(rows[i].begin() + taller, i + 1 == height ? 1 : 0);
}

// Removes the cell (r, col) for every row reaching that column.
void erase_column(Rows& rows, int col) {
    for (auto& row : rows)
        if (static_cast<int>(row.size()) >= col) row.erase(row.begin() + (col - 1));
}

int lambda(const PermutationTableau& s, int j) {
    return j <= s.shape().row_count() ? s.shape().rows()[j - 1] : 0;
}

}  // namespace

PasepState project(const PermutationTableau& t) { return state_of_shape(t.shape()); }

std::optional<PtMove> enter_left(const PermutationTableau& s) {
    const int cols = s.shape().column_count();
    if (cols == 0 || lambda(s, 2) >= cols) return std::nullopt;  // rightmost column longer than 1
    const int n = s.half_perimeter() - 1;
    Rows rows = s.rows();
    rows[0].pop_back();  // the rightmost column is the single cell (1, cols)
    insert_zero_row(rows, cols - 1);
    return PtMove{MoveKind::EnterLeft, 1, 1, build(std::move(rows)), scaled(mono_alpha(), n)};
}

PtMove hop_right(const PermutationTableau& s, int j) {
    const int t = s.shape().row_count();
    const int lj = lambda(s, j);
    if (j < 2 || j > t || lj <= lambda(s, j + 1))
        throw std::invalid_argument("hop_right: row is not an eligible corner");
    const int n = s.half_perimeter() - 1;
    const int site = j + s.shape().column_count() - lj - 1;
    Rows rows = s.rows();
    const unsigned char corner = rows[j - 1].back();
    if (corner == 0) {
        // all-zero row: delete and re-insert one shorter
        rows.erase(rows.begin() + (j - 1));
        insert_zero_row(rows, lj - 1);
        return PtMove{MoveKind::HopRightCase1, site, j, build(std::move(rows)),
                      scaled(mono_one(), n)};
    }
    if (!s.is_topmost_one(j, lj)) {
        rows[j - 1].pop_back();
        return PtMove{MoveKind::HopRightCase2, site, j, build(std::move(rows)),
                      scaled(mono_one(), n)};
    }
    // necessary one: its column has height j
    erase_column(rows, lj);
    insert_column(rows, j - 1);
    return PtMove{MoveKind::HopRightCase3, site, j, build(std::move(rows)), scaled(mono_one(), n)};
}

std::optional<PtMove> exit_right(const PermutationTableau& s) {
    const int t = s.shape().row_count();
    if (t < 2 || lambda(s, t) > 0) return std::nullopt;
    const int n = s.half_perimeter() - 1;
    Rows rows = s.rows();
    rows.pop_back();
    insert_column(rows, t - 1);
    return PtMove{MoveKind::ExitRight, n, t, build(std::move(rows)), scaled(mono_beta(), n)};
}

PtMove hop_left(const PermutationTableau& s, int j) {
    const int t = s.shape().row_count();
    if (j < 1 || j + 1 > t || lambda(s, j) <= lambda(s, j + 1))
        throw std::invalid_argument("hop_left: no inner corner below row j");
    const int n = s.half_perimeter() - 1;
    const int site = j + s.shape().column_count() - lambda(s, j + 1) - 1;
    Rows rows = s.rows();
    rows[j].push_back(1);
    return PtMove{MoveKind::HopLeft, site, j, build(std::move(rows)), scaled(mono_q(), n)};
}

std::vector<PtMove> pt_transitions(const PermutationTableau& s) {
    if (s.half_perimeter() < 2)
        throw std::invalid_argument("pt_transitions: half-perimeter must be at least 2");
    std::vector<PtMove> moves;
    if (auto m = enter_left(s)) moves.push_back(std::move(*m));
    const int t = s.shape().row_count();
    for (int j = 2; j <= t; ++j)
        if (lambda(s, j) > lambda(s, j + 1)) moves.push_back(hop_right(s, j));
    for (int j = 1; j < t; ++j)
        if (lambda(s, j) > lambda(s, j + 1)) moves.push_back(hop_left(s, j));
    if (auto m = exit_right(s)) moves.push_back(std::move(*m));
    std::stable_sort(moves.begin(), moves.end(),
              [](const PtMove& x, const PtMove& y) { return x.site < y.site; });
    return moves;
}

StateClass state_class(const PasepState& x) {
    if (x.size() == 0) throw std::invalid_argument("state_class: empty state");
    int b_blocks = 0, w_blocks = 0;
    for (int i = 1; i <= x.size(); ++i) {
        if (i == 1 || x.occupied(i) != x.occupied(i - 1)) {
            if (x.occupied(i))
                ++b_blocks;
            else
                ++w_blocks;
        }
    }
    const bool first_b = x.occupied(1);
    const bool last_b = x.occupied(x.size());
    if (first_b && !last_b) return {1, b_blocks};
    if (first_b && last_b) return {2, w_blocks};
    if (!first_b && !last_b) return {3, b_blocks};
    return {4, b_blocks};
}

LaurentPoly class_out_rate(const StateClass& c, int n_sites) {
    const Rational scale = make_rational(1, n_sites + 1);
    LaurentPoly p;
    const long n = c.n;
    switch (c.cls) {
        case 1:
            p = LaurentPoly(Rational(n)) + Rational(n - 1) * LaurentPoly(mono_q());
            break;
        case 2:
            p = LaurentPoly(Rational(n)) + Rational(n) * LaurentPoly(mono_q()) +
                LaurentPoly(mono_beta());
            break;
        case 3:
            p = LaurentPoly(Rational(n)) + Rational(n) * LaurentPoly(mono_q()) +
                LaurentPoly(mono_alpha());
            break;
        case 4:
            p = LaurentPoly(Rational(n - 1)) + Rational(n) * LaurentPoly(mono_q()) +
                LaurentPoly(mono_alpha()) + LaurentPoly(mono_beta());
            break;
        default: throw std::invalid_argument("class_out_rate: class must be 1..4");
    }
    return scale * p;
}

std::vector<int> outer_corner_rows(const Shape& shape) {
    std::vector<int> rows;
    const int t = shape.row_count();
    for (int j = 1; j <= t; ++j) {
        int next = j < t ? shape.rows()[j] : 0;
        if (shape.rows()[j - 1] > next) rows.push_back(j);
    }
    return rows;
}

std::vector<int> inner_corner_rows(const Shape& shape) {
    std::vector<int> rows;
    const int t = shape.row_count();
    for (int j = 1; j < t; ++j)
        if (shape.rows()[j - 1] > shape.rows()[j]) rows.push_back(j);
    return rows;
}

}  // namespace ptchain
