#include <doctest.h>

#include <random>

#include "iprn/ipr.hpp"
#include "naive.hpp"

using namespace iprn;
using iprn_test::naive_edges;
using iprn_test::naive_verdict;

namespace {

const RationalMatrix kSchur{{1, 0}, {0, 1}, {1, 1}};
const RationalMatrix kAp3{{1, 0}, {1, 1}, {1, 2}};
const RationalMatrix kVdw{{1, 0}, {1, 1}, {1, 2}, {1, 3}};

}  // namespace

TEST_CASE("image hypergraph of the Schur matrix at N=3") {
    auto h = build_image_hypergraph(kSchur, 3);
    CHECK(h.edges == std::vector<std::vector<std::int64_t>>{{1, 2}, {1, 2, 3}});
    // lex-least witness per edge
    CHECK(h.witnesses[0] == std::vector<std::int64_t>{1, 1});
    CHECK(h.witnesses[1] == std::vector<std::int64_t>{1, 2});
}

TEST_CASE("image hypergraph of (1) is all singletons") {
    auto h = build_image_hypergraph(RationalMatrix{{1}}, 4);
    CHECK(h.edges == std::vector<std::vector<std::int64_t>>{{1}, {2}, {3}, {4}});
}

TEST_CASE("image hypergraph of the 4-term van der Waerden matrix at N=9") {
    auto h = build_image_hypergraph(kVdw, 9);
    // independent enumeration freezes the edge list
    CHECK(h.edges == naive_edges(kVdw, 9));
    // 4-term progressions with a >= 1, d >= 1, a+3d <= 9: six for d=1, three for d=2
    CHECK(h.edges.size() == 9);
    for (const auto& e : h.edges) {
        REQUIRE(e.size() == 4);
        CHECK(e[1] - e[0] == e[2] - e[1]);
        CHECK(e[2] - e[1] == e[3] - e[2]);
    }
}

TEST_CASE("hypergraph builder matches naive enumeration on random matrices") {
    std::mt19937 rng(31);
    int done = 0;
    while (done < 60) {
        RationalMatrix m(1 + rng() % 3, 1 + rng() % 3);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = Rational(rng() % 3);
        if (!validate(m).admissible) continue;
        bool zero_col = false;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            bool all0 = true;
            for (std::size_t i = 0; i < m.rows(); ++i)
                if (!m.at(i, j).is_zero()) all0 = false;
            zero_col = zero_col || all0;
        }
        if (zero_col) continue;
        std::int64_t n = 1 + rng() % 8;
        auto h = build_image_hypergraph(m, n);
        CHECK(h.edges == naive_edges(m, n));
        ++done;
    }
}

TEST_CASE("hypergraph rejects bad inputs") {
    CHECK_THROWS_AS(build_image_hypergraph(RationalMatrix{{1, -1}}, 5), Error);
    CHECK_THROWS_AS(build_image_hypergraph(RationalMatrix{{0, 0}, {1, 1}}, 5), Error);
    CHECK_THROWS_AS(build_image_hypergraph(RationalMatrix{{1, 0}, {1, 0}}, 5), Error);
}

TEST_CASE("solve_coloring basics") {
    auto h4 = build_image_hypergraph(kSchur, 4);
    auto cert = solve_coloring(h4, 2);
    REQUIRE(cert.verdict == Verdict::Escaped);
    CHECK(cert.escaped->assignment == std::vector<int>{1, 2, 2, 1});
    CHECK(coloring_escapes(h4, *cert.escaped));

    ImageHypergraph singleton{3, {{2}}, {{1}}};
    CHECK(solve_coloring(singleton, 5).verdict == Verdict::Forced);

    ImageHypergraph empty{3, {}, {}};
    auto e = solve_coloring(empty, 2);
    REQUIRE(e.verdict == Verdict::Escaped);
    CHECK(e.escaped->assignment == std::vector<int>{1, 1, 1});
}

TEST_CASE("verify_ipr_at thresholds") {
    CHECK(verify_ipr_at(kSchur, 2, 5).verdict == Verdict::Forced);
    CHECK(verify_ipr_at(kSchur, 2, 4).verdict == Verdict::Escaped);
    CHECK(verify_ipr_at(kAp3, 2, 9).verdict == Verdict::Forced);
    CHECK(verify_ipr_at(kAp3, 2, 8).verdict == Verdict::Escaped);
}

TEST_CASE("min_forcing_n") {
    CHECK(min_forcing_n(kSchur, 2, 20) == 5);
    CHECK(min_forcing_n(kAp3, 2, 20) == 9);
    CHECK(min_forcing_n(RationalMatrix{{1}}, 17, 5) == 1);
    CHECK_FALSE(min_forcing_n(kSchur, 2, 4).has_value());
}

TEST_CASE("monotonicity around the Schur threshold") {
    for (std::int64_t n = 5; n <= 10; ++n)
        CHECK(verify_ipr_at(kSchur, 2, n).verdict == Verdict::Forced);
    for (std::int64_t n = 1; n <= 4; ++n)
        CHECK(verify_ipr_at(kSchur, 2, n).verdict == Verdict::Escaped);
    // Escaped at (r, N) stays Escaped after removing a color
    CHECK(verify_ipr_at(kSchur, 3, 13).verdict == Verdict::Escaped);
    CHECK(verify_ipr_at(kSchur, 2, 13).verdict == Verdict::Forced);
}

TEST_CASE("verdicts are invariant under row duplication and permutation") {
    RationalMatrix dup{{1, 1}, {0, 1}, {1, 0}, {1, 1}};
    for (std::int64_t n : {4, 5}) {
        CHECK(verify_ipr_at(dup, 2, n).verdict == verify_ipr_at(kSchur, 2, n).verdict);
    }
}

TEST_CASE("scaling: Forced(M, r, N) implies Forced(kM, r, kN)") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        RationalMatrix m(1 + rng() % 2, 1 + rng() % 2);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = Rational(rng() % 3);
        if (!validate(m).admissible) continue;
        std::int64_t n = 1 + rng() % 6;
        if (verify_ipr_at(m, 2, n).verdict != Verdict::Forced) continue;
        std::int64_t k = 2 + rng() % 2;
        RationalMatrix scaled = m;
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                scaled.at(i, j) = m.at(i, j) * Rational(k);
        CHECK(verify_ipr_at(scaled, 2, k * n).verdict == Verdict::Forced);
    }
}

TEST_CASE("solver verdict equals naive enumeration on random instances") {
    std::mt19937 rng(41);
    int done = 0;
    while (done < 40) {
        RationalMatrix m(1 + rng() % 3, 1 + rng() % 3);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = Rational(rng() % 3);
        if (!validate(m).admissible) continue;
        std::int64_t n = 1 + rng() % 10;
        auto cert = verify_ipr_at(m, 2, n);
        auto h = build_image_hypergraph(drop_irrelevant_columns(m).matrix, n);
        CHECK(cert.verdict == naive_verdict(h, 2));
        if (cert.escaped) CHECK(coloring_escapes(h, *cert.escaped));
        ++done;
    }
}

TEST_CASE("deterministic parallel solve agrees with sequential") {
    SolveOptions par;
    par.threads = 4;
    for (std::int64_t n : {8, 9, 13, 14}) {
        auto seq = verify_ipr_at(kAp3, 2, n);
        auto pll = verify_ipr_at(kAp3, 2, n, par);
        CHECK(seq.verdict == pll.verdict);
        if (seq.escaped) CHECK(seq.escaped->assignment == pll.escaped->assignment);
    }
}

TEST_CASE("budget abort raises BudgetExceeded") {
    SolveOptions opts;
    opts.deadline = std::chrono::steady_clock::now() - std::chrono::milliseconds(1);
    CHECK_THROWS_AS(verify_ipr_at(kVdw, 3, 30, opts), BudgetExceeded);
}

TEST_CASE("witness_for_coloring") {
    Coloring all_one{3, 1, {1, 1, 1}};
    auto w = witness_for_coloring(kSchur, all_one);
    REQUIRE(w.has_value());
    CHECK(w->color_index == 1);
    CHECK(w->x == std::vector<std::int64_t>{1, 1});
    CHECK(w->image == std::vector<std::int64_t>{1, 1, 2});

    Coloring escape{4, 2, {1, 2, 2, 1}};
    CHECK_FALSE(witness_for_coloring(kSchur, escape).has_value());

    Coloring alternating{9, 2, {1, 2, 1, 2, 1, 2, 1, 2, 1}};
    auto ap = witness_for_coloring(kAp3, alternating);
    REQUIRE(ap.has_value());
    CHECK(ap->x == std::vector<std::int64_t>{1, 2});
    CHECK(ap->image == std::vector<std::int64_t>{1, 3, 5});
    CHECK(ap->color_index == 1);
}

TEST_CASE("witness respects the value filter") {
    Coloring all_one{9, 1, {1, 1, 1, 1, 1, 1, 1, 1, 1}};
    auto w = witness_for_coloring(kAp3, all_one, 3);
    REQUIRE(w.has_value());
    for (auto v : w->image) CHECK(v <= 3);
}

TEST_CASE("witness images re-check by exact arithmetic") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 30; ++trial) {
        Coloring chi{9, 3, {}};
        for (int i = 0; i < 9; ++i) chi.assignment.push_back(1 + rng() % 3);
        auto w = witness_for_coloring(kAp3, chi);
        if (!w) continue;
        std::vector<Rational> xs(w->x.begin(), w->x.end());
        auto image = kAp3.apply(xs);
        REQUIRE(image.size() == w->image.size());
        for (std::size_t i = 0; i < image.size(); ++i) {
            CHECK(image[i] == Rational(w->image[i]));
            CHECK(chi.color_of(w->image[i]) == w->color_index);
        }
    }
}
