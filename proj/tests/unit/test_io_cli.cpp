#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "coulomb1d/cli/commands.hpp"
#include "coulomb1d/errors.hpp"
#include "coulomb1d/io/table.hpp"

using namespace c1d;

namespace {

io::Table sample() {
    io::Table t;
    t.meta = {{"command", "test"}, {"precision", "50"}};
    t.columns = {{"u", "1"}, {"T", "1"}, {"status", "1"}};
    t.add_row({0.1, std::string("0.55352973293613809411047"), std::string("ok")});
    t.add_row({1e-300, std::numeric_limits<double>::quiet_NaN(), std::string("1e-3")});
    t.add_row({-0.0, std::numeric_limits<double>::infinity(), std::string("a,b \"quoted\"")});
    t.add_row({0.1 + 0.2, -std::numeric_limits<double>::infinity(), std::string("")});
    return t;
}

io::Table round_trip(const io::Table& t, io::Format f) {
    std::stringstream ss;
    io::write(t, f, ss);
    return io::read(f, ss);
}

std::string render(const io::Table& t, io::Format f) {
    std::ostringstream os;
    io::write(t, f, os);
    return os.str();
}

} // namespace

TEST_CASE("tables survive CSV and JSON round trips") {
    io::Table t = sample();
    for (io::Format f : {io::Format::csv, io::Format::json}) {
        io::Table back = round_trip(t, f);
        CHECK(back == t);
        // A numeric-looking string stays a string.
        CHECK(std::holds_alternative<std::string>(back.rows[1][2]));
        CHECK(std::isnan(std::get<double>(back.rows[1][1])));
        CHECK(std::signbit(std::get<double>(back.rows[2][0])));
    }
    CHECK(render(t, io::Format::json).find("\"nonfinite\"") != std::string::npos);
}

TEST_CASE("doubles print in shortest round-trip form") {
    for (double x : {0.1, 1.0 / 3, 1e-300, 6.02214076e23, -2.5, 5e-324})
        CHECK(std::strtod(io::format_double(x).c_str(), nullptr) == x);
    CHECK(io::format_double(0.5) == "0.5");
}

TEST_CASE("row width is enforced") {
    io::Table t;
    t.columns = {{"a", "1"}, {"b", "1"}};
    CHECK_THROWS_AS(t.add_row({1.0}), config_error);
}

TEST_CASE("malformed input is rejected") {
    std::istringstream bad_json("{\"meta\": 3}");
    CHECK_THROWS(io::read(io::Format::json, bad_json));
    std::istringstream ragged("a [1],b [1]\n1,2\n3\n");
    CHECK_THROWS(io::read(io::Format::csv, ragged));
}

TEST_CASE("grid parsing") {
    PrecisionGuard g(30);
    auto lg = cli::parse_log_grid("1e-1:1e-10:10");
    REQUIRE(lg.size() == 10);
    CHECK(rel_diff(lg.front(), lift(Real("1e-1"))) < 1e-25);
    CHECK(rel_diff(lg[4], lift(Real("1e-5"))) < 1e-25);
    CHECK(rel_diff(lg.back(), lift(Real("1e-10"))) < 1e-25);
    CHECK(cli::parse_log_grid("1e-3:1e-3:1").size() == 1);
    auto lin = cli::parse_linear_range("-1:1:0.1");
    REQUIRE(lin.size() == 21);
    CHECK(lin[10] == 0.0);
    CHECK(lin.back() == doctest::Approx(1.0));
    CHECK_THROWS_AS(cli::parse_log_grid("1e-1:1e-10"), config_error);
    CHECK_THROWS_AS(cli::parse_log_grid("-1:1e-3:4"), config_error);
    CHECK_THROWS_AS(cli::parse_linear_range("0:1:0"), config_error);
    CHECK_THROWS_AS(cli::parse_linear_range("0:x:1"), config_error);
}

TEST_CASE("configuration validation") {
    cli::RunConfig c;
    c.precision = 10;
    CHECK_THROWS_AS(c.validate(), config_error);
    c.precision = max_digits() + 1;
    CHECK_THROWS_AS(c.validate(), resource_error);
    c = {};
    c.n_max = 0;
    CHECK_THROWS_AS(c.validate(), config_error);
    c = {};
    c.command = cli::Command::scatter;
    CHECK_THROWS_AS(cli::run(c), config_error);  // no eta or lambda
    c.lambda = "-1";
    c.energy = "-2";
    CHECK_THROWS_AS(cli::run(c), config_error);
    c = {};
    c.command = cli::Command::spectrum;
    c.lambda = "1";
    CHECK_THROWS_AS(cli::run(c), domain_error);
}

TEST_CASE("run is deterministic and self-describing") {
    cli::RunConfig c;
    c.command = cli::Command::scatter;
    c.eta = "0.2";
    c.eps_grid = "1e-1:1e-3:3";
    c.precision = 30;
    io::Table a = cli::run(c), b = cli::run(c);
    CHECK(a == b);
    CHECK(render(a, io::Format::csv) == render(b, io::Format::csv));
    REQUIRE(a.rows.size() == 3);
    bool has_cmd = false;
    for (auto& [k, v] : a.meta) has_cmd |= (k == "command" && v == "scatter");
    CHECK(has_cmd);
    for (const auto& row : a.rows) {
        double T = std::get<double>(row[2]);
        CHECK(T > 0);
        CHECK(T < 1);
    }
    // eta = 0.2 at u = 1e-3 (independent matching).
    CHECK(std::get<double>(a.rows[2][2]) == doctest::Approx(0.04766926153397973596).epsilon(1e-14));
}

TEST_CASE("spectrum and delta commands") {
    cli::RunConfig c;
    c.command = cli::Command::spectrum;
    c.n_max = 2;
    io::Table s = cli::run(c);
    CHECK(s.rows.size() == 5);  // three anomalous, two regular
    c.command = cli::Command::delta;
    c.n_max = 2;
    io::Table d = cli::run(c);
    CHECK(d.rows.size() == 3);
}
