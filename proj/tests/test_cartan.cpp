#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "clusterdyn/cartan.hpp"

using namespace clusterdyn;

using Rows = std::vector<std::vector<long>>;

TEST_CASE("finite type goldens") {
    auto a2 = catalog("A2");
    CHECK(a2.C == Rows{{2, -1}, {-1, 2}});
    CHECK(a2.dprime == std::vector<long>{1, 1});
    CHECK_FALSE(a2.affine);
    CHECK_FALSE(a2.is_twisted_source());

    auto b3 = catalog("B3");
    CHECK(b3.C == Rows{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}});
    CHECK(b3.dprime == std::vector<long>{2, 2, 1});

    auto c3 = catalog("C3");
    CHECK(c3.C == Rows{{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}});
    CHECK(c3.dprime == std::vector<long>{1, 1, 2});

    auto f4 = catalog("F4");
    CHECK(f4.C == Rows{{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}});
    CHECK(f4.dprime == std::vector<long>{1, 1, 2, 2});

    auto g2 = catalog("G2");
    CHECK(g2.C == Rows{{2, -3}, {-1, 2}});
    CHECK(g2.dprime == std::vector<long>{1, 3});

    auto d4 = catalog("D4");
    CHECK(d4.C == Rows{{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}});

    // E6 chain 1-3-4-5-6 with 2 attached to 4
    auto e6 = catalog("E6");
    CHECK(e6.C[0][2] == -1);
    CHECK(e6.C[1][3] == -1);
    CHECK(e6.C[0][1] == 0);
    CHECK(e6.C[2][3] == -1);
    CHECK(e6.C[3][4] == -1);
    CHECK(e6.C[4][5] == -1);
}

TEST_CASE("every catalog entry satisfies the symmetrizer identity") {
    for (const auto& tag : finite_tags(8)) {
        auto c = catalog(tag);
        CHECK_FALSE(c.affine);
        for (int i = 0; i < c.rank; ++i)
            for (int j = 0; j < c.rank; ++j)
                CHECK(c.dprime[i] * c.C[i][j] == c.dprime[j] * c.C[j][i]);
    }
    for (const auto& tag : affine_tags(5)) CHECK(catalog(tag).affine);
}

TEST_CASE("finite matrices are nonsingular, affine ones singular") {
    auto det = [](const CartanData& c) {
        QMatrix m(c.rank, c.rank, Rational(0));
        for (int i = 0; i < c.rank; ++i)
            for (int j = 0; j < c.rank; ++j) m.at(i, j) = Rational(c.C[i][j]);
        return m.det();
    };
    for (const auto& tag : finite_tags(8)) CHECK(det(catalog(tag)).is_positive());
    for (const auto& tag : affine_tags(5)) CHECK(det(catalog(tag)).is_zero());
}

TEST_CASE("untwisted affine goldens") {
    auto a1t = catalog("A1~");
    CHECK(a1t.C == Rows{{2, -2}, {-2, 2}});
    CHECK(a1t.rank == 2);

    auto a2t = catalog("A2~");  // triangle
    CHECK(a2t.C == Rows{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});

    // C2~ is the chain 0 => 1 <= 2 (middle node short, both ends long); the
    // affine node is stored last, so rows are ordered (1, 2, 0).
    auto c2t = catalog("C2~");
    CHECK(c2t.C == Rows{{2, -2, -2}, {-1, 2, 0}, {-1, 0, 2}});
    CHECK(c2t.dprime == std::vector<long>{1, 2, 2});

    auto g2t = catalog("G2~");
    CHECK(g2t.C == Rows{{2, -3, 0}, {-1, 2, -1}, {0, -1, 2}});
}

TEST_CASE("twisted affine tags fold") {
    auto c = catalog("A5(2)");
    CHECK(c.tag == "C3");
    CHECK(c.source_tag == "A5(2)");
    CHECK(c.is_twisted_source());
    CHECK(c.C == catalog("C3").C);

    CHECK(catalog("D5(2)").tag == "B4");
    CHECK(catalog("E6(2)").tag == "F4");
    CHECK(catalog("D4(3)").tag == "G2");
    CHECK(catalog("A3(2)").tag == "C2");
}

TEST_CASE("even twisted A is an explicit unsupported error") {
    CHECK_THROWS_WITH_AS(catalog("A2(2)"),
                         "catalog: A2(2) has no cluster realization: its Q-system relation "
                         "cannot be rearranged into an exchange relation",
                         Error);
    CHECK_THROWS_AS(catalog("A4(2)"), Error);
}

TEST_CASE("bad tags are rejected") {
    CHECK_THROWS_AS(catalog("H3"), Error);
    CHECK_THROWS_AS(catalog("E9"), Error);
    CHECK_THROWS_AS(catalog("D3"), Error);
    CHECK_THROWS_AS(catalog("B1"), Error);
    CHECK_THROWS_AS(catalog("Q7(2)"), Error);
    CHECK_THROWS_AS(catalog("B2~"), Error);
}

TEST_CASE("tag lists") {
    auto f = finite_tags(4);
    CHECK(f == std::vector<std::string>{"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3",
                                        "C4", "D4", "F4", "G2"});
    auto a = affine_tags(3);
    CHECK(a == std::vector<std::string>{"A1~", "A2~", "A3~", "B3~", "C2~", "C3~", "G2~"});
}
