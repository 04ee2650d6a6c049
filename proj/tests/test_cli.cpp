#include <doctest.h>

#include "cantor/cli.hpp"

#include <json.hpp>

#include <cstdlib>
#include <sstream>

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cantor::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("classify") {
    auto r = cli({"classify", "--n", "8", "--digits", "0,5,7"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["schema"] == "cantor-intersect/1");
    CHECK(j["sparse"] == true);
    CHECK(j["regular"] == false);
    CHECK(json::parse(cli({"classify", "--n", "3", "--digits", "0,2"}).out)["uniform"] == true);

    r = cli({"classify", "--n", "3", "--digits", "0,1,2"});
    CHECK(r.code == 2);
    CHECK(r.err.find("TooManyDigits") != std::string::npos);
    CHECK(cli({"classify", "--n", "3"}).code == 2);
    CHECK(cli({"classify", "--n", "3", "--digits", "0,x"}).code == 2);
    CHECK(cli({"classify", "--n", "3", "--digits", "0,2", "--format", "svg"}).code == 2);
}

TEST_CASE("trace") {
    auto r = cli({"trace", "--n", "3", "--digits", "0,2", "--t", "0.(20)", "--K", "10"});
    REQUIRE(r.code == 0);
    auto rows = json::parse(r.out)["rows"];
    std::vector<std::string> mu;
    for (const auto& row : rows) {
        CHECK(row["sigma"] == "1");
        mu.push_back(row["mu"]);
    }
    CHECK(mu == std::vector<std::string>{"1", "1", "2", "2", "4", "4", "8", "8", "16", "16", "32"});

    const auto a = cli({"trace", "--n", "3", "--digits", "0,2", "--t", "3/4", "--K", "10", "--format", "csv"});
    const auto b = cli({"trace", "--n", "3", "--digits", "0,2", "--t", "0.(20)", "--K", "10", "--format", "csv"});
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("k,digit,sigma,xi,factor,mu,nu,ell\n", 0) == 0);

    r = cli({"trace", "--n", "17", "--digits", "0,2,4,7,10,13", "--t", "0.([2])", "--K", "5"});
    CHECK(r.code == 3);
    CHECK(r.err.find("k=1") != std::string::npos);

    r = cli({"trace", "--n", "11", "--digits", "0,7,10", "--t", "0.([7,0])", "--K", "20", "--edit", "2,0,7"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["rows"][8]["digit"] == 7);
}

TEST_CASE("bounds") {
    auto r = cli({"bounds", "--n", "3", "--digits", "0,2", "--t", "3/4"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["s"]["symbolic"] == "log_9(2)");
    CHECK(j["upper_bound"]["symbolic"] == "(1/4)^(log_9(2))");
    CHECK(j["upper_bound"]["source"] == "L_tilde");
    CHECK(j["flags"]["upper_not_tight"] == true);
    CHECK(j["L"]["witness"]["k"] == 1);

    j = json::parse(cli({"bounds", "--n", "9", "--digits", "0,2,8", "--t", "0"}).out);
    CHECK(j["route"] == "whole_set");
    CHECK(j["lower_bound"]["symbolic"] == "1/3");
    CHECK(j["upper_bound"]["symbolic"] == "1");

    j = json::parse(cli({"bounds", "--n", "3", "--digits", "0,2", "--t", "2/3"}).out);
    CHECK(j["route"] == "finite_t");
    CHECK(j["lower_bound"]["symbolic"] == "1/4");
    CHECK(j["upper_bound"]["symbolic"] == "1/2");

    r = cli({"bounds", "--n", "17", "--digits", "0,2,4,7,10,13", "--t", "0.([2])", "--K", "4"});
    CHECK(r.code == 3);
    CHECK(json::parse(r.out)["upper_bound"].is_null());

    j = json::parse(cli({"bounds", "--n", "11", "--digits", "0,7,10", "--t", "0.([7,0])", "--edit", "2,0,7"}).out);
    CHECK(j["kind"] == "exact_zero");
    j = json::parse(cli({"bounds", "--n", "11", "--digits", "0,7,10", "--t", "0.([7,0])", "--edit", "2,1,0"}).out);
    CHECK(j["kind"] == "exact_infinite");
}

TEST_CASE("verify, cover, dense, member") {
    auto r = cli({"verify", "--n", "9", "--digits", "0,2,8", "--random", "4", "--seed", "5", "--K", "6"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["status"] == "PASS");
    r = cli({"verify", "--n", "17", "--digits", "0,2,4,7,10,13", "--t", "0.([2])", "--K", "3"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["formula_mode"] == false);
    r = cli({"verify", "--n", "3", "--digits", "0,2", "--t", "2/3", "--format", "csv"});
    CHECK(r.code == 0);

    auto j = json::parse(cli({"cover", "--n", "9", "--digits", "0,2,8", "--depth", "1", "--s", "1/2"}).out);
    CHECK(j["blocks"] == json::array({json::array({"0", "3"}), json::array({"8", "1"})}));
    CHECK(std::stod(j["cost"].get<std::string>()) == doctest::Approx(0.910683602522959098).epsilon(1e-12));
    j = json::parse(cli({"cover", "--n", "3", "--digits", "0,2", "--depth", "2", "--s", "log_3(2)"}).out);
    CHECK(std::stod(j["cost"].get<std::string>()) == doctest::Approx(1.0));

    r = cli({"dense", "--n", "3", "--digits", "0,2", "--t", "0.(1)", "--beta", "1/2", "--y", "1", "--eps", "1/27",
             "--K", "200"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["verdict"] == "certified");
    r = cli({"dense", "--n", "3", "--digits", "0,2", "--t", "0.(1)", "--beta", "1/2", "--y", "1/1000000000000",
             "--eps", "1/27", "--K", "60"});
    CHECK(r.code == 4);
    CHECK(cli({"dense", "--n", "3", "--digits", "0,2", "--t", "0.(1)", "--beta", "3/2", "--y", "1", "--eps", "1/27"})
              .code == 2);

    j = json::parse(cli({"member", "--n", "8", "--digits", "0,5,7", "--t", "0.(3)"}).out);
    CHECK(j["verdict"] == "NOT_IN_F");
    CHECK(j["empty_level"] == 1);
    r = cli({"member", "--n", "3", "--digits", "0,2", "--t", "0.(1)", "--edit", "2,0,1", "--K", "30"});
    CHECK(r.code == 4);
}

TEST_CASE("render") {
    auto r = cli({"render", "--n", "3", "--digits", "0,2", "--t", "3/4", "--K", "4"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("<?xml", 0) == 0);
    CHECK(r.out.find("id=\"level-4\"") != std::string::npos);
    r = cli({"render", "--n", "3", "--digits", "0,2", "--t", "3/4", "--K", "30", "--cap", "1000"});
    CHECK(r.code == 5);
    CHECK(r.out.empty());
}

TEST_CASE("level cap from the environment") {
    setenv("CANTOR_CAP", "100", 1);
    CHECK(cantor::cli::default_cap() == 100);
    CHECK(cli({"render", "--n", "3", "--digits", "0,2", "--t", "3/4", "--K", "7"}).code == 5);
    CHECK(cli({"render", "--n", "3", "--digits", "0,2", "--t", "3/4", "--K", "7", "--cap", "1000"}).code == 0);
    setenv("CANTOR_CAP", "junk", 1);
    CHECK(cantor::cli::default_cap() == cantor::kDefaultCap);
    unsetenv("CANTOR_CAP");
}

TEST_CASE("outputs are byte-identical across runs and thread counts") {
    const std::vector<std::vector<std::string>> commands{
        {"bounds", "--n", "3", "--digits", "0,2", "--t", "3/4"},
        {"bounds", "--n", "17", "--digits", "0,2,4,7,10,13", "--t", "0.([2])", "--K", "5"},
        {"trace", "--n", "11", "--digits", "0,7,10", "--t", "0.([7,0])", "--K", "40"},
        {"render", "--n", "9", "--digits", "0,2,8", "--t", "0.(27)", "--K", "5"},
    };
    for (const auto& cmd : commands) {
        const auto a = cli(cmd);
        const auto b = cli(cmd);
        auto threaded = cmd;
        threaded.insert(threaded.end(), {"--threads", "4"});
        const auto c = cli(threaded);
        CHECK(a.out == b.out);
        CHECK(a.out == c.out);
        CHECK(a.code == c.code);
    }
}
