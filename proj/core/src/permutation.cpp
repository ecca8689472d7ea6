#include "ptchain/permutation.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace ptchain {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
        if (v < 1 || v > static_cast<int>(img_.size()) || seen[v - 1])
            throw std::invalid_argument("Permutation: images must be a rearrangement of 1..n");
        seen[v - 1] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i + 1;
    return Permutation(std::move(img));
}

int Permutation::preimage_of(int value) const {
    for (int i = 1; i <= size(); ++i)
        if ((*this)(i) == value) return i;
    throw std::invalid_argument("Permutation: value out of range");
}

std::string Permutation::to_string() const {
    std::ostringstream out;
    for (int i = 0; i < size(); ++i) {
        if (i) out << ",";
        out << img_[i];
    }
    return out.str();
}

Permutation Permutation::parse(const std::string& text) {
    std::vector<int> img;
    if (text.find(',') == std::string::npos) {
        // plain digit string, one digit per value (n <= 9)
        for (char c : text) {
            if (!isdigit(static_cast<unsigned char>(c)) || c == '0')
                throw std::invalid_argument("Permutation: bad digit string '" + text + "'");
            img.push_back(c - '0');
        }
    } else {
        std::istringstream in(text);
        std::string part;
        while (std::getline(in, part, ',')) {
            std::size_t used = 0;
            int v = std::stoi(part, &used);
            if (used != part.size())
                throw std::invalid_argument("Permutation: bad entry '" + part + "'");
            img.push_back(v);
        }
    }
    return Permutation(std::move(img));
}

PermStats perm_stats(const Permutation& p) {
    const int n = p.size();
    PermStats s;
    for (int i = 1; i <= n; ++i) {
        if (p(i) >= i) s.weak_excedances.push_back(i);
        if (p(i) == i) s.fixed_points.push_back(i);
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (j <= p(i) && p(i) < p(j)) ++s.crossings;
            if (p(i) < p(j) && p(j) < i) ++s.crossings;
        }
    for (int i = 2; i <= n; ++i) {
        bool rl_min = true, lr_max = true;
        for (int j = i + 1; j <= n; ++j)
            if (p(j) < p(i)) rl_min = false;
        for (int j = 1; j < i; ++j)
            if (p(j) > p(i)) lr_max = false;
        if (rl_min && p(i) < p(1)) ++s.special_rl_minima;
        if (lr_max && p(i) > p(1)) ++s.special_lr_maxima;
    }
    return s;
}

LaurentMonomial weight(const Permutation& p) {
    PermStats s = perm_stats(p);
    return {1, {s.crossings, -s.special_rl_minima, -s.special_lr_maxima}};
}

Permutation tableau_to_permutation(const PermutationTableau& t) {
    const Shape& shape = t.shape();
    const int nrows = shape.row_count();
    const int ncols = shape.column_count();
    const int n = shape.half_perimeter();
    const auto heights = shape.column_heights();

    auto row_label = [&](int j) { return j + ncols - shape.rows()[j - 1]; };
    auto col_label = [&](int c) { return heights[c - 1] + (ncols - c) + 1; };

    // First one below (r, c) in column c, or 0.
    auto next_south = [&](int r, int c) {
        for (int r2 = r + 1; r2 <= heights[c - 1]; ++r2)
            if (t.cell(r2, c)) return r2;
        return 0;
    };
    // First one right of (r, c) in row r, or 0.
    auto next_east = [&](int r, int c) {
        for (int c2 = c + 1; c2 <= shape.rows()[r - 1]; ++c2)
            if (t.cell(r, c2)) return c2;
        return 0;
    };
    // Alternate south/east from (r, c), turning at every one; returns the
    // border label where the walk leaves the diagram.
    auto zigzag = [&](int r, int c, bool south_first) {
        bool south = south_first;
        while (true) {
            if (south) {
                int r2 = next_south(r, c);
                if (!r2) return col_label(c);
                r = r2;
            } else {
                int c2 = next_east(r, c);
                if (!c2) return row_label(r);
                c = c2;
            }
            south = !south;
        }
    };

    std::vector<int> img(n + 1, 0);
    for (int j = 1; j <= nrows; ++j) {
        const int label = row_label(j);
        int first = 0;
        for (int c = 1; c <= shape.rows()[j - 1]; ++c)
            if (t.cell(j, c)) {
                first = c;
                break;
            }
        img[label] = first ? zigzag(j, first, /*south_first=*/true) : label;
    }
    for (int c = 1; c <= ncols; ++c) {
        int top = 0;
        for (int r = 1; r <= heights[c - 1]; ++r)
            if (t.cell(r, c)) {
                top = r;
                break;
            }
        img[col_label(c)] = zigzag(top, c, /*south_first=*/false);
    }
    return Permutation(std::vector<int>(img.begin() + 1, img.end()));
}

namespace {

using PhiTable = std::unordered_map<std::string, PermutationTableau>;

const PhiTable& phi_table(int n) {
    static std::map<int, PhiTable> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        PhiTable table;
        for (auto& t : enumerate_tableaux(n)) {
            auto p = tableau_to_permutation(t);
            if (!table.emplace(p.to_string(), std::move(t)).second)
                throw std::logic_error("phi table: bijection collision");
        }
        it = cache.emplace(n, std::move(table)).first;
    }
    return it->second;
}

}  // namespace

PermutationTableau permutation_to_tableau(const Permutation& p) {
    const PhiTable& table = phi_table(p.size());
    auto it = table.find(p.to_string());
    if (it == table.end()) throw std::logic_error("permutation_to_tableau: missing entry");
    return it->second;
}

PasepState project(const Permutation& p) {
    std::vector<unsigned char> sites(p.size() - 1);
    for (int i = 1; i < p.size(); ++i) sites[i - 1] = p(i + 1) >= i + 1;
    return PasepState(std::move(sites));
}

std::int64_t LabeledPermutation::apply(std::int64_t label) const {
    for (std::size_t k = 0; k < ground.size(); ++k)
        if (ground[k] == label) return image[k];
    throw std::invalid_argument("LabeledPermutation: label not in ground set");
}

LabeledPermutation make_labeled(std::vector<std::int64_t> ground,
                                std::vector<std::int64_t> image) {
    if (ground.size() != image.size())
        throw std::invalid_argument("LabeledPermutation: size mismatch");
    for (std::size_t k = 1; k < ground.size(); ++k)
        if (ground[k - 1] >= ground[k])
            throw std::invalid_argument("LabeledPermutation: ground must be strictly increasing");
    auto sorted = image;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != ground)
        throw std::invalid_argument("LabeledPermutation: image is not a bijection of the ground");
    return {std::move(ground), std::move(image)};
}

LabeledPermutation make_labeled(const Permutation& p) {
    std::vector<std::int64_t> ground(p.size()), image(p.size());
    for (int i = 1; i <= p.size(); ++i) {
        ground[i - 1] = i;
        image[i - 1] = p(i);
    }
    return {std::move(ground), std::move(image)};
}

namespace {

std::size_t ground_index(const LabeledPermutation& p, std::int64_t label) {
    auto it = std::lower_bound(p.ground.begin(), p.ground.end(), label);
    if (it == p.ground.end() || *it != label)
        throw std::invalid_argument("LabeledPermutation: label not in ground set");
    return static_cast<std::size_t>(it - p.ground.begin());
}

LabeledPermutation erase_label(const LabeledPermutation& p, std::size_t k) {
    LabeledPermutation r = p;
    r.ground.erase(r.ground.begin() + k);
    r.image.erase(r.image.begin() + k);
    return r;
}

}  // namespace

LabeledPermutation collapse(const LabeledPermutation& p, std::int64_t i) {
    std::size_t k = ground_index(p, i);
    if (p.image[k] == i) throw std::invalid_argument("collapse: label is a fixed point");
    LabeledPermutation r = erase_label(p, k);
    for (auto& v : r.image)
        if (v == i) v = p.image[k];  // preimage of i now maps to old image of i
    return r;
}

LabeledPermutation remove_fixed_point(const LabeledPermutation& p, std::int64_t i) {
    std::size_t k = ground_index(p, i);
    if (p.image[k] != i) throw std::invalid_argument("remove_fixed_point: label is not fixed");
    return erase_label(p, k);
}

LabeledPermutation insert_fixed_point(const LabeledPermutation& p, std::int64_t label) {
    LabeledPermutation r = p;
    auto it = std::lower_bound(r.ground.begin(), r.ground.end(), label);
    if (it != r.ground.end() && *it == label)
        throw std::invalid_argument("insert_fixed_point: label already present");
    std::size_t k = static_cast<std::size_t>(it - r.ground.begin());
    r.ground.insert(r.ground.begin() + k, label);
    r.image.insert(r.image.begin() + k, label);
    return r;
}

LabeledPermutation insert_before(const LabeledPermutation& p, std::int64_t v, std::int64_t w) {
    LabeledPermutation r = p;
    auto it = std::lower_bound(r.ground.begin(), r.ground.end(), w);
    if (it != r.ground.end() && *it == w)
        throw std::invalid_argument("insert_before: label already present");
    bool found = false;
    for (auto& x : r.image)
        if (x == v) {
            x = w;
            found = true;
            break;
        }
    if (!found) throw std::invalid_argument("insert_before: v not in the image");
    std::size_t k = static_cast<std::size_t>(it - r.ground.begin());
    r.ground.insert(r.ground.begin() + k, w);
    r.image.insert(r.image.begin() + k, v);
    return r;
}

Permutation normalize(const LabeledPermutation& p) {
    std::vector<int> img(p.ground.size());
    for (std::size_t k = 0; k < p.ground.size(); ++k) {
        auto it = std::lower_bound(p.ground.begin(), p.ground.end(), p.image[k]);
        img[k] = static_cast<int>(it - p.ground.begin()) + 1;
    }
    return Permutation(std::move(img));
}

namespace {

// π on {1..n} with every label doubled, so half-steps become odd labels.
LabeledPermutation doubled(const Permutation& p) {
    std::vector<std::int64_t> ground(p.size()), image(p.size());
    for (int i = 1; i <= p.size(); ++i) {
        ground[i - 1] = 2 * i;
        image[i - 1] = 2 * p(i);
    }
    return {std::move(ground), std::move(image)};
}

// Smallest non-excedance strictly after position `after`, or n+1 if none.
int next_non_excedance(const Permutation& p, int after) {
    for (int k = after + 1; k <= p.size(); ++k)
        if (p(k) < k) return k;
    return p.size() + 1;
}

Permutation swap_images(const Permutation& p, int i) {
    auto img = p.images();
    std::swap(img[i - 1], img[i]);
    return Permutation(std::move(img));
}

LaurentMonomial scaled(LaurentMonomial m, int n_sites) {
    m.coeff /= (n_sites + 1);
    return m;
}

}  // namespace

std::vector<PermMove> perm_transitions(const Permutation& p) {
    const int n = p.size();
    if (n < 2) throw std::invalid_argument("perm_transitions: need a permutation of size >= 2");
    const int n_sites = n - 1;
    std::vector<PermMove> moves;

    if (p(2) == 1) {
        // particle enters: collapse at 2, new fixed point before the next
        // non-excedance
        int m = next_non_excedance(p, 2);
        auto lp = collapse(doubled(p), 4);
        lp = insert_fixed_point(lp, 2 * m - 1);
        moves.push_back({MoveKind::EnterLeft, 1, normalize(lp), scaled(mono_alpha(), n_sites)});
    }
    for (int i = 2; i < n; ++i) {
        if (p(i) >= i && p(i + 1) < i + 1) {
            // particle hops right across sites (i-1, i)
            PermMove mv;
            mv.site = i - 1;
            mv.rate = scaled(mono_one(), n_sites);
            if (p(i) == i) {
                mv.kind = MoveKind::HopRightCase1;
                int m = next_non_excedance(p, i + 1);
                auto lp = remove_fixed_point(doubled(p), 2 * i);
                lp = insert_fixed_point(lp, 2 * m - 1);
                mv.target = normalize(lp);
            } else if (p(i + 1) < i) {
                mv.kind = MoveKind::HopRightCase2;
                mv.target = swap_images(p, i);
            } else {  // p(i+1) == i
                mv.kind = MoveKind::HopRightCase3;
                int j = 0;
                for (int k = i - 1; k >= 1; --k)
                    if (p(k) >= k) {
                        j = k;
                        break;
                    }
                auto lp = collapse(doubled(p), 2 * (i + 1));
                lp = insert_before(lp, 2 * j, 2 * j + 1);
                mv.target = normalize(lp);
            }
            moves.push_back(std::move(mv));
        }
        if (p(i) < i && p(i + 1) >= i + 1) {
            moves.push_back(
                {MoveKind::HopLeft, i - 1, swap_images(p, i), scaled(mono_q(), n_sites)});
        }
    }
    if (p(n) == n) {
        // particle exits: drop the fixed point at n, splice a half-step
        // before the last weak excedance
        int i = 0;
        for (int k = n - 1; k >= 1; --k)
            if (p(k) >= k) {
                i = k;
                break;
            }
        auto lp = remove_fixed_point(doubled(p), 2 * n);
        lp = insert_before(lp, 2 * i, 2 * i + 1);
        moves.push_back(
            {MoveKind::ExitRight, n_sites, normalize(lp), scaled(mono_beta(), n_sites)});
    }
    std::stable_sort(moves.begin(), moves.end(),
              [](const PermMove& x, const PermMove& y) { return x.site < y.site; });
    return moves;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i + 1;
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

}  // namespace ptchain
