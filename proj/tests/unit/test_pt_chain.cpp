#include <doctest.h>

#include <map>

#include "ptchain/pt_chain.hpp"

using namespace ptchain;

namespace {

PermutationTableau tab(const std::string& key) { return PermutationTableau::parse_key(key); }

LaurentPoly ratio(const LaurentMonomial& target, const LaurentMonomial& source) {
    // target / source as a monomial
    return LaurentPoly(LaurentMonomial{
        target.coeff / source.coeff,
        {target.exps.q - source.exps.q, target.exps.a - source.exps.a,
         target.exps.b - source.exps.b}});
}

LaurentPoly mono(int q, int a, int b) { return LaurentPoly(LaurentMonomial{1, {q, a, b}}); }

}  // namespace

TEST_CASE("projection of a tableau") {
    CHECK(project(tab("1100|0010|1111|001")) == PasepState::parse("1101000"));
    CHECK(project(tab("|")) == PasepState::parse("1"));
    CHECK(project(tab("11|1|")).to_string() == "0101");  // shape (2,1,0)
}

TEST_CASE("enter from the left") {
    auto m = enter_left(tab("1"));
    REQUIRE(m.has_value());
    CHECK(m->target == tab("|"));
    CHECK(m->kind == MoveKind::EnterLeft);
    CHECK(LaurentPoly(m->rate) == make_rational(1, 2) * mono(0, 1, 0));

    auto m2 = enter_left(tab("1|"));
    REQUIRE(m2.has_value());
    CHECK(m2->target == tab("||"));
    CHECK(LaurentPoly(m2->rate) == make_rational(1, 3) * mono(0, 1, 0));

    CHECK_FALSE(enter_left(tab("1|1")).has_value());  // rightmost column has length 2
    CHECK_FALSE(enter_left(tab("|")).has_value());
}

TEST_CASE("hop right: the three corner cases") {
    // all-zero corner row: delete and re-insert one shorter
    auto case1 = hop_right(tab("11|00"), 2);
    CHECK(case1.kind == MoveKind::HopRightCase1);
    CHECK(case1.target == tab("11|0"));

    // superfluous corner one: erase the cell
    auto case2 = hop_right(tab("1|1"), 2);
    CHECK(case2.kind == MoveKind::HopRightCase2);
    CHECK(case2.target == tab("1|"));

    // necessary corner one: move its column east, one shorter
    auto case3 = hop_right(tab("0|1"), 2);
    CHECK(case3.kind == MoveKind::HopRightCase3);
    CHECK(case3.target == tab("1|"));

    CHECK_THROWS_AS(hop_right(tab("1|1"), 1), std::invalid_argument);
    CHECK_THROWS_AS(hop_right(tab("1|0|1"), 2), std::invalid_argument);  // no corner at row 2
}

TEST_CASE("exit to the right") {
    auto m = exit_right(tab("|"));
    REQUIRE(m.has_value());
    CHECK(m->target == tab("1"));
    CHECK(LaurentPoly(m->rate) == make_rational(1, 2) * mono(0, 0, 1));

    auto m2 = exit_right(tab("1|"));
    REQUIRE(m2.has_value());
    CHECK(m2->target == tab("11"));
    CHECK(LaurentPoly(m2->rate) == make_rational(1, 3) * mono(0, 0, 1));

    CHECK_FALSE(exit_right(tab("1|1")).has_value());  // last row nonempty
}

TEST_CASE("hop left") {
    auto m = hop_left(tab("1|"), 1);
    CHECK(m.kind == MoveKind::HopLeft);
    CHECK(m.target == tab("1|1"));
    CHECK(LaurentPoly(m.rate) == make_rational(1, 3) * mono(1, 0, 0));

    auto m2 = hop_left(tab("11|1|"), 2);
    CHECK(m2.target == tab("11|1|1"));

    CHECK_THROWS_AS(hop_left(tab("11|11"), 1), std::invalid_argument);
}

TEST_CASE("move lists for one site") {
    auto occupied = pt_transitions(tab("|"));
    REQUIRE(occupied.size() == 1);
    CHECK(occupied[0].kind == MoveKind::ExitRight);
    CHECK(occupied[0].target == tab("1"));

    auto empty_site = pt_transitions(tab("1"));
    REQUIRE(empty_site.size() == 1);
    CHECK(empty_site[0].kind == MoveKind::EnterLeft);
    CHECK(empty_site[0].target == tab("|"));
}

TEST_CASE("the half-perimeter-1 tableau has no chain") {
    PermutationTableau trivial(Shape({0}), {{}});
    CHECK_THROWS_AS(pt_transitions(trivial), std::invalid_argument);
    CHECK_THROWS_AS(project(trivial), std::invalid_argument);
}

TEST_CASE("every move projects to the matching process move") {
    for (int hp = 2; hp <= 7; ++hp)
        for (const auto& t : enumerate_tableaux(hp)) {
            auto moves = pt_transitions(t);
            auto base = pasep_transitions(project(t));
            REQUIRE(moves.size() == base.size());
            for (std::size_t k = 0; k < moves.size(); ++k) {
                CHECK(moves[k].target.is_valid());
                CHECK(project(moves[k].target) == base[k].target);
                CHECK(moves[k].site == base[k].site);
                CHECK(moves[k].rate == base[k].rate);
                // the projected state moves by exactly the claimed site move
                if (is_hop_right(moves[k].kind) || moves[k].kind == MoveKind::HopLeft) {
                    auto sites = project(t).sites();
                    std::swap(sites[moves[k].site - 1], sites[moves[k].site]);
                    CHECK(PasepState(sites) == base[k].target);
                }
            }
        }
}

TEST_CASE("weight ratios of the move families") {
    for (int hp = 2; hp <= 6; ++hp)
        for (const auto& t : enumerate_tableaux(hp)) {
            for (const auto& m : pt_transitions(t)) {
                LaurentPoly r = ratio(m.target.weight(), t.weight());
                switch (m.kind) {
                    case MoveKind::HopRightCase1:
                        // weight preserved unless the deleted row had length 1
                        if (t.shape().rows()[m.row - 1] == 1)
                            CHECK(r == mono(0, 0, -1));
                        else
                            CHECK(r == LaurentPoly(1));
                        break;
                    case MoveKind::HopRightCase2: CHECK(r == mono(-1, 0, 0)); break;
                    case MoveKind::HopRightCase3:
                        // weight preserved unless the deleted column had length 2
                        if (m.row == 2)
                            CHECK(r == mono(0, -1, 0));
                        else
                            CHECK(r == LaurentPoly(1));
                        break;
                    case MoveKind::HopLeft: CHECK(r == mono(1, 0, 0)); break;
                    case MoveKind::EnterLeft:
                        // generic case: one alpha; skip the length-1 top row special case
                        if (t.shape().column_count() > 1) CHECK(r == mono(0, 1, 0));
                        break;
                    case MoveKind::ExitRight:
                        if (t.shape().row_count() > 2) CHECK(r == mono(0, 0, 1));
                        break;
                    default: FAIL("unexpected move kind");
                }
            }
        }
}

TEST_CASE("state classes") {
    auto c = state_class(PasepState::parse("10"));
    CHECK(c == StateClass{1, 1});
    CHECK(class_out_rate(c, 2) == make_rational(1, 3) * LaurentPoly(1));

    c = state_class(PasepState::parse("101"));
    CHECK(c == StateClass{2, 1});
    CHECK(class_out_rate(c, 3) ==
          make_rational(1, 4) * (LaurentPoly(1) + mono(1, 0, 0) + mono(0, 0, 1)));

    c = state_class(PasepState::parse("01"));
    CHECK(c == StateClass{4, 1});
    CHECK(class_out_rate(c, 2) ==
          make_rational(1, 3) * (mono(1, 0, 0) + mono(0, 1, 0) + mono(0, 0, 1)));

    CHECK(state_class(PasepState::parse("000")) == StateClass{3, 0});
    CHECK(state_class(PasepState::parse("111")) == StateClass{2, 0});
    CHECK_THROWS_AS(state_class(PasepState(std::vector<unsigned char>{})),
                    std::invalid_argument);
}

TEST_CASE("in-flow accounting by created feature") {
    // Every in-move contributes wt(source)*rate = factor * wt(target)/(N+1)
    // with factor 1, q, a or b; the multiplicities are the corner counts of
    // the target and the two boundary features.
    for (int n = 1; n <= 4; ++n) {
        auto tableaux = enumerate_tableaux(n + 1);
        std::map<std::string, std::map<std::string, int>> factor_count;
        std::map<std::string, std::map<std::string, int>> kind_count;
        for (const auto& t : tableaux) {
            LaurentPoly wt = LaurentPoly(t.weight());
            for (const auto& m : pt_transitions(t)) {
                LaurentPoly contribution = wt * LaurentPoly(m.rate);
                LaurentPoly base =
                    make_rational(1, n + 1) * LaurentPoly(m.target.weight());
                std::string factor;
                if (contribution == base)
                    factor = "1";
                else if (contribution == base * mono(1, 0, 0))
                    factor = "q";
                else if (contribution == base * mono(0, 1, 0))
                    factor = "a";
                else if (contribution == base * mono(0, 0, 1))
                    factor = "b";
                else
                    FAIL("in-flow contribution is not 1, q, a or b times the target weight");
                ++factor_count[m.target.key()][factor];
                ++kind_count[m.target.key()][std::string(move_kind_name(m.kind)) + ":" + factor];
            }
        }
        for (const auto& t : tableaux) {
            auto counts = factor_count[t.key()];
            auto kinds = kind_count[t.key()];
            auto proj = project(t);
            auto outer = outer_corner_rows(t.shape());
            auto inner = inner_corner_rows(t.shape());
            const bool starts_empty = !proj.occupied(1);
            const bool ends_occupied = proj.occupied(n);
            // the corner cut by a length-1 rightmost column is the alpha
            // feature, not an ordinary corner
            int plain_corners = static_cast<int>(outer.size()) - (starts_empty ? 1 : 0);
            CHECK(counts["1"] == plain_corners);
            CHECK(counts["q"] == static_cast<int>(inner.size()));
            CHECK(counts["a"] == (starts_empty ? 1 : 0));
            CHECK(counts["b"] == (ends_occupied ? 1 : 0));

            // factor-1 moves split by the corner content they create
            int zeros = 0, necessary = 0, superfluous = 0;
            for (int j : outer) {
                if (j == 1 && starts_empty) continue;
                int c = t.shape().rows()[j - 1];
                if (!t.cell(j, c))
                    ++zeros;
                else if (t.is_necessary_one(j, c))
                    ++necessary;
                else
                    ++superfluous;
            }
            CHECK(kinds["hop_right_case1:1"] + kinds["enter_left:1"] == zeros);
            CHECK(kinds["hop_left:1"] == superfluous);
            CHECK(kinds["hop_right_case3:1"] + kinds["exit_right:1"] == necessary);
            CHECK(kinds["hop_right_case2:q"] == counts["q"]);
        }
    }
}
