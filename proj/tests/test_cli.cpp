#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "cik/cli.hpp"
#include "cik/records.hpp"

using namespace cik;
using namespace cik::cli;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("range parsing") {
    auto r = parse_range("1..9");
    REQUIRE(r.has_value());
    CHECK(r->lo == 1);
    CHECK(r->hi == 9);
    auto single = parse_range("3");
    REQUIRE(single.has_value());
    CHECK(single->lo == 3);
    CHECK(single->hi == 3);
    CHECK(!parse_range("9..1").has_value());
    CHECK(!parse_range("a..b").has_value());
    CHECK(!parse_range("1..2..3").has_value());
    CHECK(!parse_range("").has_value());
}

TEST_CASE("csv round trip is byte identical") {
    std::vector<OutputRecord> records = {
            {"G", 1, 1, Rational(1, 2), "bernoulli_form"},
            {"gamma", 2, 3, Rational(13, 72), "stirling_sum"},
            {"C", 1, 4, Rational(11, 2), "series_oracle"},
            {"bernoulli", 12, 0, Rational(-691, 2730), "stirling_sum"},
    };
    std::ostringstream first;
    write_csv(first, records);
    auto parsed = parse_csv(first.str());
    std::ostringstream second;
    write_csv(second, parsed);
    CHECK(first.str() == second.str());
    CHECK(parsed.size() == 4);
    CHECK(parsed[1].value == Rational(13, 72));
    CHECK_THROWS_AS(parse_csv("quantity,j\n"), std::invalid_argument);
}

TEST_CASE("table --golden accepts all three reference tables") {
    std::ostringstream out, err;
    CHECK(cmd_table({"G", {1, 9}, {0, 9}, "csv", true, "bernoulli_form"}, out, err) == 0);
    CHECK(cmd_table({"gamma", {1, 9}, {0, 7}, "csv", true, "bernoulli_form"}, out, err) == 0);
    CHECK(cmd_table({"C", {1, 8}, {0, 9}, "csv", true, "bernoulli_form"}, out, err) == 0);
}

TEST_CASE("table usage errors exit 2") {
    std::ostringstream out, err;
    CHECK(cmd_table({"Q", {1, 2}, {0, 1}, "csv", false, "bernoulli_form"}, out, err) == 2);
    CHECK(cmd_table({"G", {0, 2}, {0, 1}, "csv", false, "bernoulli_form"}, out, err) == 2);
    CHECK(cmd_table({"G", {1, 2}, {0, 1}, "csv", false, "no_such_method"}, out, err) == 2);
    CHECK(cmd_table({"G", {1, 20}, {0, 9}, "csv", true, "bernoulli_form"}, out, err) == 2);
    CHECK(cmd_table({"gamma", {1, 2}, {0, 1}, "csv", false, "determinantal"}, out, err) == 2);
}

TEST_CASE("table emits a single cell") {
    std::ostringstream out, err;
    REQUIRE(cmd_table({"C", {1, 1}, {0, 0}, "csv", false, "bernoulli_form"}, out, err) == 0);
    CHECK(out.str() == std::string(kCsvHeader) + "\nC,1,0,0,0,bernoulli_form\n");
}

TEST_CASE("table pretty and json formats stay parseable") {
    std::ostringstream pretty, err;
    REQUIRE(cmd_table({"G", {1, 2}, {0, 2}, "pretty", false, "bernoulli_form"}, pretty, err) == 0);
    CHECK(pretty.str().find("1/2") != std::string::npos);

    std::ostringstream json;
    REQUIRE(cmd_table({"G", {1, 1}, {0, 1}, "json", false, "bernoulli_form"}, json, err) == 0);
    CHECK(json.str().find("\"value_exact\": \"1/2\"") != std::string::npos);
}

TEST_CASE("eval exit codes and output") {
    std::ostringstream out, err;
    CHECK(cmd_eval({"f", 2, 0, 0.0, 5}, out, err) == 2);  // v = 0
    CHECK(cmd_eval({"nope", 2, 0, 1.0, 5}, out, err) == 2);

    std::ostringstream good;
    REQUIRE(cmd_eval({"G", 1, 0, 1.0, 5}, good, err) == 0);
    CHECK(good.str().substr(0, 9) == "1.5819767");

    std::ostringstream bound;
    REQUIRE(cmd_eval({"bound", 2, 0, 0.5, 5}, bound, err) == 0);
    CHECK(bound.str().find("lower_bound") != std::string::npos);
    CHECK(bound.str().find("f_j(v)/j!") != std::string::npos);
}

TEST_CASE("scan determinism across --jobs and exit codes") {
    const std::string a = "/tmp/cik_scan_a.csv";
    const std::string b = "/tmp/cik_scan_b.csv";
    std::ostringstream out, err;
    REQUIRE(cmd_scan({"gamma", 9, 7, 1, a}, out, err) == 0);
    REQUIRE(cmd_scan({"gamma", 9, 7, 4, b}, out, err) == 0);
    const std::string sa = read_file(a);
    CHECK(sa == read_file(b));
    CHECK(sa.find("scanned 72 cells, 0 negative") != std::string::npos);
    std::remove(a.c_str());
    std::remove(b.c_str());

    CHECK(cmd_scan({"gamma", 2, 2, 1, "/nonexistent-dir/x.csv"}, out, err) == 2);
    CHECK(cmd_scan({"Q", 2, 2, 1, ""}, out, err) == 2);
    CHECK(cmd_scan({"gamma", 0, 2, 1, ""}, out, err) == 2);
}

TEST_CASE("verify suites run clean at small bounds") {
    std::ostringstream out, err;
    CHECK(cmd_verify({"routes", 4, 6}, out, err) == 0);
    CHECK(cmd_verify({"bell", 4, 6}, out, err) == 0);
    CHECK(cmd_verify({"series", 4, 6}, out, err) == 0);
    CHECK(cmd_verify({"hessenberg", 8, 6}, out, err) == 0);
    CHECK(cmd_verify({"bogus", -1, -1}, out, err) == 2);
    CHECK(out.str().find("0 failures") != std::string::npos);
}
