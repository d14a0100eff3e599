#include <doctest.h>

#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "chab/figures.hpp"

using namespace chab;

namespace {

// text contents of all <text class="<cls>"> elements, in document order
std::vector<std::string> labels_of_class(const std::string& svg, const std::string& cls) {
    std::vector<std::string> out;
    const std::string needle = "class=\"" + cls + "\"";
    std::size_t pos = 0;
    while ((pos = svg.find(needle, pos)) != std::string::npos) {
        const std::size_t open = svg.find('>', pos);
        const std::size_t close = svg.find("</text>", open);
        out.push_back(svg.substr(open + 1, close - open - 1));
        pos = close;
    }
    return out;
}

std::string strip_comments(const std::string& svg) {
    std::istringstream in(svg);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line))
        if (line.rfind("<!--", 0) != 0) out << line << "\n";
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), "missing file: " << path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

DecayTable golden_decay_table() {
    return verify_convergence(RSeq{ExtendedReal::infinity()}, {10, 100, 1000}, 1e4, 1.0);
}

}  // namespace

TEST_CASE("layer marks enumerate reduced fractions in one period") {
    const auto m1 = layer_marks(1, 3);
    REQUIRE(m1.size() == 4);
    CHECK(m1[0].theta == Rational(0, 1));
    CHECK(m1[1].theta == Rational(1, 3));
    CHECK(m1[2].theta == Rational(1, 2));
    CHECK(m1[3].theta == Rational(2, 3));
    CHECK(m1[0].petal == 1);
    CHECK(m1[1].petal == 3);
    CHECK(m1[2].petal == 2);
    CHECK(m1[3].petal == 3);

    const auto m2 = layer_marks(2, 4);
    REQUIRE(m2.size() == 3);
    CHECK(m2[0].theta == Rational(0, 1));
    CHECK(m2[1].theta == Rational(1, 4));
    CHECK(m2[2].theta == Rational(1, 3));
    CHECK(m2[0].petal == 2);
    CHECK(m2[1].petal == 4);
    CHECK(m2[2].petal == 6);

    // every petal index of a higher layer is a multiple of m
    for (int m : {2, 3, 4}) {
        for (const auto& mark : layer_marks(m, 6)) CHECK(mark.petal % m == 0);
    }

    const auto single = layer_marks(1, 1);
    REQUIRE(single.size() == 1);
    CHECK(single[0].petal == 1);
}

TEST_CASE("layer labels regenerate from the lcm rule") {
    const std::string svg = emit_layer_svg(2, 4);
    const auto labels = labels_of_class(svg, "petal-label");
    const auto marks = layer_marks(2, 4);
    REQUIRE(labels.size() == marks.size());
    for (std::size_t i = 0; i < marks.size(); ++i) {
        CHECK(labels[i] == std::to_string(std::lcm<std::int64_t>(2, marks[i].theta.den())));
    }
}

TEST_CASE("bouquet petals carry their family labels") {
    const std::string svg = emit_d_bouquet_svg(4);
    const auto labels = labels_of_class(svg, "petal-label");
    REQUIRE(labels.size() == 4);
    CHECK(labels.front() == "D^4");  // drawn largest-index first, underneath
    CHECK(labels.back() == "D^1");
    CHECK(labels_of_class(svg, "wedge-label").size() == 1);
}

TEST_CASE("figure parameter validation") {
    CHECK_THROWS_AS(emit_d_bouquet_svg(0), std::invalid_argument);
    CHECK_THROWS_AS(emit_layer_svg(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(emit_layer_svg(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(emit_line_points_svg({}), std::invalid_argument);
    CHECK_THROWS_AS(emit_pinching_svg(0, Rational(1, 2)), std::invalid_argument);
}

TEST_CASE("denser generators draw more dots") {
    const std::string svg = emit_line_points_svg({1.0, 0.1});
    // count circle elements per panel indirectly: the r=0.1 panel has ~10x dots
    std::size_t dots = 0, pos = 0;
    while ((pos = svg.find("<circle", pos)) != std::string::npos) {
        ++dots;
        ++pos;
    }
    // 2 panel outlines + (2*50+1)+1 dots for r=1 + (2*500+1)+1 for r=0.1
    CHECK(dots == 2 + 102 + 1002);
}

TEST_CASE("emission is deterministic") {
    CHECK(emit_layer_svg(3, 5) == emit_layer_svg(3, 5));
    CHECK(emit_d_bouquet_svg(6) == emit_d_bouquet_svg(6));
    CHECK(emit_pinching_svg(2, Rational(1, 3)) == emit_pinching_svg(2, Rational(1, 3)));
}

TEST_CASE("golden figures") {
    const std::string dir = CHAB_GOLDEN_DIR;
    CHECK(strip_comments(emit_line_points_svg({1.0, 0.1})) ==
          strip_comments(read_file(dir + "/line_points.svg")));
    CHECK(strip_comments(emit_d_bouquet_svg(4)) ==
          strip_comments(read_file(dir + "/d_bouquet.svg")));
    CHECK(strip_comments(emit_pinching_svg(1, Rational(1, 2))) ==
          strip_comments(read_file(dir + "/pinching.svg")));
    CHECK(strip_comments(emit_layer_svg(2, 4)) ==
          strip_comments(read_file(dir + "/layer.svg")));
    CHECK(strip_comments(emit_decay_curve_svg(golden_decay_table())) ==
          strip_comments(read_file(dir + "/decay_curve.svg")));
}
