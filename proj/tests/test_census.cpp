#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "filterlab/census.hpp"

using namespace filterlab;
namespace fs = std::filesystem;

namespace {

const std::string corpus = std::string(FILTERLAB_DATA_DIR) + "/corpus";

fs::path scratch(const std::string& name)
{
    fs::path p = fs::temp_directory_path() / ("filterlab_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

}  // namespace

TEST_CASE("census of order 16")
{
    auto c = run_census(corpus + "/order16");
    REQUIRE(c.entries.size() == 14);
    CHECK(c.skipped.empty());
    auto s = c.summary();
    REQUIRE(s.size() == 1);
    CHECK(s[0].order == 16);
    CHECK(s[0].total == 14);
    CHECK(s[0].flagged == 8);
    CHECK(s[0].by_source[0].first == "Der");
    CHECK(s[0].by_source[0].second == 8);
}

TEST_CASE("census output does not depend on the number of jobs")
{
    CensusOptions serial, parallel;
    parallel.jobs = 8;
    const auto a = census_json(run_census(corpus, serial));
    const auto b = census_json(run_census(corpus, parallel));
    CHECK(a == b);
    CHECK(a.find("runtime_ms") == std::string::npos);
    CHECK(census_json(run_census(corpus + "/order16"), true).find("runtime_ms") != std::string::npos);
}

TEST_CASE("census order filter")
{
    CensusOptions o;
    o.order = 81;
    auto c = run_census(corpus, o);
    CHECK(c.entries.size() == 15);
    for (const auto& e : c.entries) CHECK(e.id.rfind("order81/", 0) == 0);
}

TEST_CASE("empty and unreadable census inputs")
{
    auto empty = scratch("empty");
    auto c = run_census(empty.string());
    CHECK(c.entries.empty());
    CHECK(c.summary().empty());
    CHECK(census_table(c).find("n/a") != std::string::npos);
    CHECK(census_json(c).find("\"groups\": []") != std::string::npos);

    auto bad = scratch("bad");
    std::ofstream(bad / "broken.pcg") << "p 4\nn 2\n";
    std::ofstream(bad / "c3.pcg") << "p 3\nn 1\n";
    auto d = run_census(bad.string());
    CHECK(d.entries.size() == 1);
    REQUIRE(d.skipped.size() == 1);
    CHECK(d.skipped[0].find("broken.pcg") != std::string::npos);
    CHECK_THROWS_AS(run_census((bad / "nope").string()), Error);
    fs::remove_all(empty);
    fs::remove_all(bad);
}
