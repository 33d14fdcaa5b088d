#include "../support/properties.hpp"
#include "thl/weyl.hpp"

#include <doctest.h>

#include <set>

using namespace thl;

TEST_CASE("word parsing")
{
    WeylWord w = WeylWord::parse("w_8w_5w_{-1}");
    CHECK(w.letters == std::vector<int>{8, 5, -1});
    CHECK(w.str() == "w_8w_5w_{-1}");
    CHECK(WeylWord::parse("1").length() == 0);
    CHECK(w.parity() == -1);
    CHECK_THROWS(WeylWord::parse("w_8x"));
}

TEST_CASE("randomized Weyl properties")
{
    auto o = props::weyl_properties(7, 1200);
    INFO(o.summary());
    CHECK(o.cases >= 1000);
    CHECK(o.ok());
}

TEST_CASE("E10 gl-dominant images")
{
    GlGrading g = grading_preset("e10");
    auto rows = enumerate_gl_dominant(g.spec, g.level_weight(1), 8, 7);
    CHECK(rows.size() == 27);
    CHECK(rows[0].word.length() == 0);
    CHECK(rows[2].word.str() == "w_8w_5");
    CHECK(rows[2].degree == 2);
    CHECK(rows[18].word.str() == "w_8w_5w_4w_3w_2w_1w_0");
    CHECK(rows[18].image == std::vector<long long>{2, 0, 0, 0, 0, 0, 0, 6, 0, -8});
    std::set<std::vector<long long>> images;
    for (auto& r : rows) {
        images.insert(r.image);
        CHECK(degree_of_word(g.spec, r.word, g.level_weight(1), 8) == r.degree);
        CHECK(shifted_action(g.spec, r.word, g.level_weight(1)) == r.image);
        for (int k = 1; k <= r.word.length(); ++k) {
            WeylWord prefix{std::vector<int>(r.word.letters.end() - k, r.word.letters.end())};
            WeylWord shorter{std::vector<int>(r.word.letters.end() - k + 1, r.word.letters.end())};
            CHECK(degree_of_word(g.spec, prefix, g.level_weight(1), 8) >=
                  degree_of_word(g.spec, shorter, g.level_weight(1), 8));
        }
    }
    CHECK(images.size() == rows.size());
    CHECK(degree(g.spec, g.level_weight(1), rows[5].image, 8) == rows[5].degree);
}

TEST_CASE("degree zero gives the identity only")
{
    for (auto name : {"e10", "e9", "a1++", "a2++"}) {
        GlGrading g = grading_preset(name);
        auto rows = enumerate_gl_dominant(g.spec, g.level_weight(2), g.grading_node, 0);
        REQUIRE(rows.size() == 1);
        CHECK(rows[0].word.length() == 0);
    }
}

TEST_CASE("A1++ images at level 1")
{
    GlGrading g = grading_preset("a1++");
    auto rows = enumerate_gl_dominant(g.spec, g.level_weight(1), 1, 7);
    std::vector<std::string> words;
    for (auto& r : rows)
        words.push_back(r.word.str() + ":" + std::to_string(r.degree));
    CHECK(words == std::vector<std::string>{"1:0", "w_1:1", "w_1w_0:3", "w_1w_0w_1:6", "w_1w_0w_{-1}:7"});
}

TEST_CASE("enumeration rejects bad input")
{
    GlGrading g = grading_preset("a1++");
    CHECK_THROWS_AS(enumerate_gl_dominant(g.spec, {-1, 0, 0}, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_gl_dominant(g.spec, {1, 0}, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(reflect(build_cartan(BaseSeries::A, 1, 1, true), -2, {0, 0, 0}), std::invalid_argument);
}
