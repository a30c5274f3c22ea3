#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "layoutforge/io.hpp"

using namespace layoutforge;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "layoutforge_io_tests";
    fs::create_directories(dir);
    return dir / name;
}

const char* kLayout = R"({"id": "r1", "vertices": [[-1, -1], [-1, 2], [2, 2], [2, -1]],
                          "camera_height": 1.5, "ceiling_height": 2.7, "pose": "secondary"})";

} // namespace

TEST_CASE("layout JSON round trip") {
    const LayoutAnnotation l = layout_from_json(nlohmann::json::parse(kLayout));
    CHECK(l.id == "r1");
    CHECK(l.vertices.size() == 4);
    CHECK(l.camera_height == 1.5);
    CHECK(l.pose == Pose::secondary);
    const LayoutAnnotation back = layout_from_json(to_json(l));
    CHECK(back.vertices == l.vertices);
    CHECK(back.ceiling_height == l.ceiling_height);
}

TEST_CASE("layout JSON strictness") {
    auto j = nlohmann::json::parse(kLayout);
    j["furniture"] = 3;
    std::vector<std::string> warnings;
    CHECK_NOTHROW(layout_from_json(j, {false, &warnings}));
    CHECK(warnings.size() == 1);
    CHECK_THROWS_AS(layout_from_json(j, {true, nullptr}), Error);

    auto missing = nlohmann::json::parse(kLayout);
    missing.erase("pose");
    CHECK_THROWS_AS(layout_from_json(missing), Error);

    auto cw = nlohmann::json::parse(kLayout);
    cw["vertices"] = {{2, -1}, {2, 2}, {-1, 2}, {-1, -1}};
    try {
        layout_from_json(cw);
        FAIL("clockwise vertices accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Parse);
    }
}

TEST_CASE("prediction JSON") {
    const auto j = nlohmann::json::parse(R"({"id": "p", "depths": [1, 2, 3], "heights": [2, 2, 2],
        "avg": {"depths": [1, 1, 1], "heights": [2, 2, 2]},
        "csmix": {"label_depths": [1, 1, 1], "label_heights": [2, 2, 2], "depths": [1, 1, 1], "heights": [2, 2, 2]}})");
    const Prediction p = prediction_from_json(j);
    CHECK(p.values.depths.size() == 3);
    REQUIRE(p.avg);
    REQUIRE(p.csmix);
    CHECK(to_json(p) == j);

    CHECK_THROWS_AS(prediction_from_json(nlohmann::json::parse(R"({"id": "p", "depths": [1, -2], "heights": [2, 2]})")),
                    Error);
    CHECK_THROWS_AS(prediction_from_json(nlohmann::json::parse(R"({"id": "p", "depths": [1], "heights": [2, 2]})")),
                    Error);
}

TEST_CASE("malformed files name the file") {
    const fs::path bad = scratch("broken.json");
    std::ofstream(bad) << "{ not json";
    try {
        read_layout(bad);
        FAIL("parse should fail");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Parse);
        CHECK(std::string(e.what()).find("broken.json") != std::string::npos);
    }
}

TEST_CASE("binary formats") {
    const FeatureSequence z(3, 2, {1.5, -2.0, 0.25, 4.0, 8.0, -0.125});
    const fs::path f = scratch("z.lfsq");
    write_feature_sequence(f, z);
    CHECK(fs::file_size(f) == 12 + 6 * 4);
    CHECK(read_feature_sequence(f) == z);

    std::ifstream raw(f, std::ios::binary);
    char header[12];
    raw.read(header, 12);
    CHECK(std::string(header, 4) == "LFSQ");
    CHECK(static_cast<unsigned char>(header[4]) == 3);
    CHECK(header[5] == 0);
    CHECK(static_cast<unsigned char>(header[8]) == 2);

    const DepthMap m(1, 2, {1.0, 2.5});
    const fs::path d = scratch("m.ldpm");
    write_depth_map(d, m);
    CHECK(read_depth_map(d) == m);

    const auto kind_of = [](const fs::path& p) {
        try {
            read_feature_sequence(p);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::InvalidArgument;
    };
    CHECK(kind_of(d) == ErrorKind::Format);
    const fs::path truncated = scratch("t.lfsq");
    std::ofstream(truncated, std::ios::binary) << "LFSQ\x03";
    CHECK(kind_of(truncated) == ErrorKind::Format);
    const fs::path trailing = scratch("x.lfsq");
    fs::copy_file(f, trailing, fs::copy_options::overwrite_existing);
    std::ofstream(trailing, std::ios::binary | std::ios::app) << "zz";
    CHECK(kind_of(trailing) == ErrorKind::Format);
}

TEST_CASE("hashing and number formatting") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(hex64(fnv1a64("a")) == "af63dc4c8601ec8c");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.1) == "0.1");
    CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}
