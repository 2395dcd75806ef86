#include <doctest.h>

#include <fstream>
#include <sstream>

#include "derres/emit.hpp"
#include "derres/golden.hpp"

using namespace derres;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("emitted objects match the reference matrices") {
    CHECK(emit_object("jacobian", 2, "text") == golden::jacobian_n2);
    CHECK(emit_object("partial2", 3, "text") == golden::partial2_n3);
    CHECK(emit_object("bar:2", 2, "text") == golden::bar2_n2);
}

TEST_CASE("golden files on disk agree with the embedded references") {
    const std::string dir = GOLDEN_DIR;
    CHECK(read_file(dir + "/jacobian_n2.txt") == golden::jacobian_n2);
    CHECK(read_file(dir + "/partial2_n3.txt") == golden::partial2_n3);
    CHECK(read_file(dir + "/bar2_n2.txt") == golden::bar2_n2);
}

TEST_CASE("json emission carries labels and entries") {
    nlohmann::json j = nlohmann::json::parse(emit_object("jacobian", 2, "json"));
    CHECK(j["rows"] == 3);
    CHECK(j["cols"] == 6);
    CHECK(j["row_labels"][0] == "F[1]");
    CHECK(j["col_labels"][5] == "x[2,3]");
    CHECK(j["entries"][0][1] == "x[2,3]");
    CHECK(j["entries"][0][0] == "0");
}

TEST_CASE("generic matrix emission") {
    std::string x = emit_object("X", 2, "text");
    CHECK(x.find("x[1,1] | x[1,2] | x[1,3]") != std::string::npos);
    CHECK(x.find("x[2,1] | x[2,2] | x[2,3]") != std::string::npos);
}

TEST_CASE("minors and generators emission") {
    std::string minors = emit_object("minors", 2, "text");
    CHECK(minors.find("F[1] = x[1,2]*x[2,3] - x[1,3]*x[2,2]") != std::string::npos);
    CHECK(minors.find("F[3] = x[1,1]*x[2,2] - x[1,2]*x[2,1]") != std::string::npos);

    std::string gens = emit_object("generators", 2, "text");
    CHECK(gens.find("V[2,1]: x[2,1]*d/dx[1,1] + x[2,2]*d/dx[1,2] + x[2,3]*d/dx[1,3]") !=
          std::string::npos);
    CHECK(gens.find("L[1,1]:") != std::string::npos);

    nlohmann::json gj = nlohmann::json::parse(emit_object("generators", 2, "json"));
    CHECK(gj.size() == 12);
    CHECK(gj[0]["name"] == "V[2,1]");
}

TEST_CASE("unknown objects and formats are rejected") {
    CHECK_THROWS_AS(emit_object("spectra", 2, "text"), std::invalid_argument);
    CHECK_THROWS_AS(emit_object("jacobian", 2, "yaml"), std::invalid_argument);
    CHECK_THROWS_AS(emit_object("bar:0", 2, "text"), std::invalid_argument);
    CHECK_THROWS_AS(emit_object("bar:x", 2, "text"), std::invalid_argument);
}
