#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hexdom/lattice.hpp"

using namespace hexdom;

TEST_CASE("neighbor order is the fixed counterclockwise cycle") {
    auto nb = lattice_neighbors({0, 0});
    std::array<LatticeCoord, 6> want = {{{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}}};
    for (int i = 0; i < 6; ++i) CHECK(nb[i] == want[i]);
    // translation invariance
    auto nb2 = lattice_neighbors({3, -2});
    for (int i = 0; i < 6; ++i) CHECK(nb2[i] == want[i] + LatticeCoord{3, -2});
}

TEST_CASE("radius-2 closure of the origin has 19 vertices") {
    CHECK(lattice_ball(2).size() == 19);
    CHECK(lattice_ball(1).size() == 7);
    CHECK(lattice_ball(10).size() == 1 + 3 * 10 * 11);
}

TEST_CASE("closed neighborhood hits all seven residues exactly once") {
    // the implementer's first obligation: brute-force the perfect-code fact
    std::set<int> residues;
    LatticeCoord c{0, 0};
    auto val = [](const LatticeCoord& p) { return ((p.x + 2 * p.y) % 7 + 7) % 7; };
    residues.insert(val(c));
    for (const auto& nb : lattice_neighbors(c)) residues.insert(val(nb));
    CHECK(residues.size() == 7);
}

TEST_CASE("in_pattern matches the congruence") {
    CHECK(in_pattern({0, 0}, PatternClass{0}));
    CHECK(in_pattern({1, 3}, PatternClass{0})); // 1 + 6 = 7
    CHECK_FALSE(in_pattern({1, 0}, PatternClass{0}));
    CHECK(in_pattern({1, 0}, PatternClass{1}));
    CHECK(in_pattern({-1, -3}, PatternClass{0}));
}

TEST_CASE("perfect code verified exhaustively at radius 3 and 10") {
    for (int r : {3, 10})
        for (int residue = 0; residue < 7; ++residue) {
            auto rep = verify_perfect_code(r, PatternClass{residue});
            CHECK(rep.ok);
            CHECK(rep.uncovered == 0);
            CHECK(rep.multiply_covered == 0);
        }
}

TEST_CASE("pattern density approaches one seventh") {
    auto rep = verify_perfect_code(10, PatternClass{2});
    int ball = static_cast<int>(lattice_ball(10).size());
    // within one perimeter of ball/7
    CHECK(std::abs(rep.pattern_in_ball - ball / 7) <= 6 * 10);
}

TEST_CASE("distinct residues give disjoint patterns") {
    for (const auto& c : lattice_ball(6)) {
        int members = 0;
        for (int r = 0; r < 7; ++r) members += in_pattern(c, PatternClass{r}) ? 1 : 0;
        CHECK(members == 1);
    }
}

TEST_CASE("all residue classes are translates of one another") {
    // shifting by (1,0) advances the residue by one
    for (const auto& c : lattice_ball(4))
        for (int r = 0; r < 7; ++r)
            CHECK(in_pattern(c, PatternClass{r}) ==
                  in_pattern(c + LatticeCoord{1, 0}, PatternClass{(r + 1) % 7}));
}

TEST_CASE("lattice distance is a metric consistent with the ball") {
    CHECK(lattice_distance({0, 0}, {3, 3}) == 3);
    CHECK(lattice_distance({0, 0}, {3, -2}) == 5);
    CHECK(lattice_distance({0, 0}, {-4, 0}) == 4);
    for (const auto& c : lattice_ball(3)) {
        int d = lattice_distance({0, 0}, c);
        CHECK(d <= 3);
        bool is_nb = false;
        for (const auto& nb : lattice_neighbors({0, 0})) is_nb |= nb == c;
        CHECK(is_nb == (d == 1));
    }
}
