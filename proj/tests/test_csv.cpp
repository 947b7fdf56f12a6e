#include <doctest.h>

#include <cstdlib>
#include <random>
#include <sstream>

#include "cocite/csv.hpp"
#include "cocite/errors.hpp"

using namespace cocite;

TEST_CASE("split_line: plain fields") {
    CHECK(csv::split_line("a,b,c") == std::vector<std::string>{"a", "b", "c"});
    CHECK(csv::split_line("a") == std::vector<std::string>{"a"});
    CHECK(csv::split_line("") == std::vector<std::string>{""});
    CHECK(csv::split_line("a,,c") == std::vector<std::string>{"a", "", "c"});
    CHECK(csv::split_line("a,b,") == std::vector<std::string>{"a", "b", ""});
}

TEST_CASE("split_line: quoted fields") {
    CHECK(csv::split_line("\"a,b\",c") == std::vector<std::string>{"a,b", "c"});
    CHECK(csv::split_line("\"say \"\"hi\"\"\",x") == std::vector<std::string>{"say \"hi\"", "x"});
    CHECK(csv::split_line("\"\",x") == std::vector<std::string>{"", "x"});
    CHECK(csv::split_line("x,\"a;b;c\"") == std::vector<std::string>{"x", "a;b;c"});
}

TEST_CASE("split_line: malformed input") {
    CHECK_THROWS_AS(csv::split_line("\"unterminated", 7), ParseError);
    CHECK_THROWS_AS(csv::split_line("\"a\"b,c", 3), ParseError);
    try {
        csv::split_line("\"x", 12);
        FAIL("expected ParseError");
    } catch (const ParseError &e) {
        CHECK(e.line() == 12);
        CHECK(std::string(e.what()).find("line 12") != std::string::npos);
    }
}

TEST_CASE("quote round-trips through split_line") {
    for (const std::string &field :
         {std::string("plain"), std::string("has,comma"), std::string("has\"quote"),
          std::string("a;b"), std::string(""), std::string("both,\"of\" them")}) {
        std::string line = csv::quote(field) + "," + csv::quote(field);
        CHECK(csv::split_line(line) == std::vector<std::string>{field, field});
    }
}

TEST_CASE("read_lines strips CR and BOM") {
    std::istringstream in("\xEF\xBB\xBFh1,h2\r\na,b\r\nc,d\n");
    auto lines = csv::read_lines(in);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "h1,h2");
    CHECK(lines[1] == "a,b");
    CHECK(lines[2] == "c,d");

    std::istringstream empty("");
    CHECK(csv::read_lines(empty).empty());
}

TEST_CASE("format_full round-trips doubles exactly") {
    CHECK(csv::format_full(0.0) == "0");
    CHECK(csv::format_full(1.0) == "1");
    CHECK(csv::format_full(0.05) == "0.05");
    CHECK(csv::format_full(1.5) == "1.5");
    CHECK(csv::format_full(-0.25) == "-0.25");

    std::mt19937_64 rng(1234);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    std::uniform_int_distribution<int> scale(-300, 300);
    for (int i = 0; i < 2000; ++i) {
        double v = uni(rng) * std::pow(10.0, scale(rng));
        std::string s = csv::format_full(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
}

TEST_CASE("format_sig6 keeps 6 significant digits") {
    CHECK(csv::format_sig6(0.96825403) == "0.968254");
    CHECK(csv::format_sig6(1.0) == "1");
    CHECK(csv::format_sig6(2.0 / 3.0) == "0.666667");
    CHECK(csv::format_sig6(123456789.0) == "1.23457e+08");
}
