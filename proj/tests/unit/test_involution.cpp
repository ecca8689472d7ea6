#include <doctest.h>

#include "ptchain/involution.hpp"
#include "ptchain/pt_chain.hpp"
#include "ptchain/transition_system.hpp"

using namespace ptchain;

namespace {

PermutationTableau tab(const std::string& key) { return PermutationTableau::parse_key(key); }
Permutation perm(const std::string& text) { return Permutation::parse(text); }

}  // namespace

TEST_CASE("involution on permutations") {
    CHECK(involute(perm("74836215")) == perm("24873615"));
    CHECK(involute(perm("12")) == perm("21"));
    CHECK(involute(perm("21")) == perm("12"));
    for (int n = 2; n <= 7; ++n)
        for (const auto& p : all_permutations(n)) CHECK(involute(involute(p)) == p);
}

TEST_CASE("conjugate tableau") {
    CHECK(conjugate(tab("11")) == tab("1|1"));
    CHECK(conjugate(tab("1|1")) == tab("11"));
    auto t = tab("11|10");
    CHECK(conjugate(t) == tab("11|10"));
    for (const auto& x : enumerate_tableaux(5)) CHECK(conjugate(conjugate(x)) == x);
}

TEST_CASE("involution on tableaux") {
    CHECK(involute(tab("1")) == tab("|"));
    CHECK(involute(tab("|")) == tab("1"));
    // the big worked example and its image correspond under the bijection
    auto t = tab("1100|0010|1111|001");
    CHECK(involute(t) == permutation_to_tableau(perm("24873615")));
}

TEST_CASE("projection compatibility with particle-hole") {
    for (int n = 2; n <= 7; ++n)
        for (const auto& p : all_permutations(n))
            CHECK(project(p) == particle_hole(project(involute(p))));
}

TEST_CASE("crossings are preserved, boundary statistics swap") {
    for (int n = 2; n <= 7; ++n)
        for (const auto& p : all_permutations(n)) {
            auto s = perm_stats(p);
            auto sb = perm_stats(involute(p));
            CHECK(s.crossings == sb.crossings);
            CHECK(s.special_rl_minima == sb.special_lr_maxima);
            CHECK(s.special_lr_maxima == sb.special_rl_minima);
            CHECK(LaurentPoly(weight(p)) == LaurentPoly(weight(involute(p))).swap_alpha_beta());
        }
}

TEST_CASE("graph automorphism with the boundary rates exchanged") {
    for (int n = 1; n <= 4; ++n) {
        auto sys = build_system(ChainKind::Pt, n);
        long checked = 0;
        for (int i = 0; i < sys.size(); ++i) {
            int ib = sys.find(involute(sys.tableau_states[i]).key());
            REQUIRE(ib >= 0);
            for (std::size_t k = 0; k < sys.out_to[i].size(); ++k) {
                int jb = sys.find(involute(sys.tableau_states[sys.out_to[i][k]]).key());
                const LaurentPoly* r = sys.edge(ib, jb);
                REQUIRE(r != nullptr);
                CHECK(*r == sys.out_rate[i][k].swap_alpha_beta());
                ++checked;
            }
        }
        CHECK(checked == sys.edge_count());
    }
}

TEST_CASE("generating function symmetry under particle-hole") {
    for (int n = 1; n <= 6; ++n)
        for (long v = 0; v < (1L << n); ++v) {
            std::vector<unsigned char> sites(n);
            for (int i = 0; i < n; ++i) sites[i] = (v >> i) & 1;
            PasepState s(std::move(sites));
            auto f = shape_weight_polynomial(shape_of_state(s));
            auto g = shape_weight_polynomial(shape_of_state(particle_hole(s)));
            CHECK(f == g.swap_alpha_beta());
        }
}

TEST_CASE("tableau involution commutes with the bijection") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& t : enumerate_tableaux(n)) {
            auto image = involute(t);
            CHECK(image.is_valid());
            CHECK(tableau_to_permutation(image) == involute(tableau_to_permutation(t)));
        }
}
