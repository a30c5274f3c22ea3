#include "layoutforge/io.hpp"

#include <array>
#include <bit>
#include <charconv>
#include <cstring>
#include <fstream>
#include <set>
#include <sstream>

namespace layoutforge {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& context,
                const ParseOptions& options) {
    for (const auto& [key, value] : j.items()) {
        if (allowed.count(key)) {
            continue;
        }
        const std::string msg = context + ": unknown key '" + key + "'";
        if (options.strict) {
            fail(ErrorKind::Parse, msg);
        }
        if (options.warnings) {
            options.warnings->push_back(msg);
        }
    }
}

const json& field(const json& j, const char* key, const std::string& context) {
    if (!j.is_object() || !j.contains(key)) {
        fail(ErrorKind::Parse, context + ": missing key '" + key + "'");
    }
    return j.at(key);
}

double number(const json& j, const std::string& context) {
    if (!j.is_number()) {
        fail(ErrorKind::Parse, context + ": expected a number");
    }
    return j.get<double>();
}

std::vector<double> number_array(const json& j, const std::string& context) {
    if (!j.is_array()) {
        fail(ErrorKind::Parse, context + ": expected an array of numbers");
    }
    std::vector<double> out;
    out.reserve(j.size());
    for (const json& v : j) {
        out.push_back(number(v, context));
    }
    return out;
}

SequencePair sequence_pair(const json& j, const char* depth_key, const char* height_key,
                           const std::string& context) {
    try {
        return {DepthSequence(number_array(field(j, depth_key, context), context + "." + depth_key)),
                HeightSequence(number_array(field(j, height_key, context), context + "." + height_key))};
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Parse) {
            throw;
        }
        fail(ErrorKind::Parse, context + ": " + e.what());
    }
}

json sequence_json(const SequencePair& s) {
    return {{"depths", s.depths.vector()}, {"heights", s.heights.vector()}};
}

void put_u32(std::ostream& out, std::uint32_t v) {
    const std::array<char, 4> bytes{static_cast<char>(v & 0xFF), static_cast<char>((v >> 8) & 0xFF),
                                    static_cast<char>((v >> 16) & 0xFF),
                                    static_cast<char>((v >> 24) & 0xFF)};
    out.write(bytes.data(), 4);
}

std::uint32_t get_u32(std::istream& in, const fs::path& path) {
    std::array<unsigned char, 4> b{};
    if (!in.read(reinterpret_cast<char*>(b.data()), 4)) {
        fail(ErrorKind::Format, path.string() + ": truncated header");
    }
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

void put_f32(std::ostream& out, double v) {
    put_u32(out, std::bit_cast<std::uint32_t>(static_cast<float>(v)));
}

std::ifstream open_binary(const fs::path& path, const char magic[4]) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail(ErrorKind::Format, path.string() + ": cannot open");
    }
    char got[4] = {};
    if (!in.read(got, 4) || std::memcmp(got, magic, 4) != 0) {
        fail(ErrorKind::Format, path.string() + ": bad magic, expected '" + std::string(magic, 4) + "'");
    }
    return in;
}

std::vector<double> read_floats(std::istream& in, std::size_t count, const fs::path& path) {
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = static_cast<double>(std::bit_cast<float>(get_u32(in, path)));
    }
    if (in.peek() != std::char_traits<char>::eof()) {
        fail(ErrorKind::Format, path.string() + ": trailing bytes after payload");
    }
    return out;
}

std::ofstream create_binary(const fs::path& path, const char magic[4]) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        fail(ErrorKind::Format, path.string() + ": cannot create");
    }
    out.write(magic, 4);
    return out;
}

} // namespace

LayoutAnnotation layout_from_json(const json& j, const ParseOptions& options) {
    if (!j.is_object()) {
        fail(ErrorKind::Parse, "layout: expected a JSON object");
    }
    check_keys(j, {"id", "vertices", "camera_height", "ceiling_height", "pose"}, "layout", options);
    LayoutAnnotation layout;
    const json& id = field(j, "id", "layout");
    if (!id.is_string()) {
        fail(ErrorKind::Parse, "layout.id: expected a string");
    }
    layout.id = id.get<std::string>();
    const std::string ctx = "layout '" + layout.id + "'";

    const json& vertices = field(j, "vertices", ctx);
    if (!vertices.is_array()) {
        fail(ErrorKind::Parse, ctx + ".vertices: expected an array of [x, z] pairs");
    }
    for (const json& v : vertices) {
        if (!v.is_array() || v.size() != 2) {
            fail(ErrorKind::Parse, ctx + ".vertices: expected [x, z] pairs");
        }
        layout.vertices.push_back({number(v[0], ctx + ".vertices"), number(v[1], ctx + ".vertices")});
    }
    layout.camera_height = number(field(j, "camera_height", ctx), ctx + ".camera_height");
    layout.ceiling_height = number(field(j, "ceiling_height", ctx), ctx + ".ceiling_height");

    const json& pose = field(j, "pose", ctx);
    if (pose == "primary") {
        layout.pose = Pose::primary;
    } else if (pose == "secondary") {
        layout.pose = Pose::secondary;
    } else {
        fail(ErrorKind::Parse, ctx + ".pose: expected \"primary\" or \"secondary\"");
    }
    try {
        validate(layout);
    } catch (const Error& e) {
        fail(ErrorKind::Parse, e.what());
    }
    return layout;
}

json to_json(const LayoutAnnotation& layout) {
    json vertices = json::array();
    for (const Vec2& v : layout.vertices) {
        vertices.push_back({v.x, v.z});
    }
    return {{"id", layout.id},
            {"vertices", std::move(vertices)},
            {"camera_height", layout.camera_height},
            {"ceiling_height", layout.ceiling_height},
            {"pose", to_string(layout.pose)}};
}

LayoutAnnotation read_layout(const fs::path& path, const ParseOptions& options) {
    try {
        return layout_from_json(read_json(path), options);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Parse && std::string(e.what()).find(path.string()) == std::string::npos) {
            fail(ErrorKind::Parse, path.string() + ": " + e.what());
        }
        throw;
    }
}

Prediction prediction_from_json(const json& j, const ParseOptions& options) {
    if (!j.is_object()) {
        fail(ErrorKind::Parse, "prediction: expected a JSON object");
    }
    check_keys(j, {"id", "depths", "heights", "avg", "csmix"}, "prediction", options);
    const json& id = field(j, "id", "prediction");
    if (!id.is_string()) {
        fail(ErrorKind::Parse, "prediction.id: expected a string");
    }
    Prediction p{id.get<std::string>(), sequence_pair(j, "depths", "heights", "prediction"), {}, {}};
    const std::string ctx = "prediction '" + p.id + "'";
    if (p.values.depths.size() != p.values.heights.size()) {
        fail(ErrorKind::Parse, ctx + ": depths and heights differ in length");
    }
    if (j.contains("avg")) {
        check_keys(j["avg"], {"depths", "heights"}, ctx + ".avg", options);
        p.avg = sequence_pair(j["avg"], "depths", "heights", ctx + ".avg");
    }
    if (j.contains("csmix")) {
        const json& c = j["csmix"];
        check_keys(c, {"label_depths", "label_heights", "depths", "heights"}, ctx + ".csmix", options);
        p.csmix = MixedPrediction{sequence_pair(c, "label_depths", "label_heights", ctx + ".csmix"),
                                  sequence_pair(c, "depths", "heights", ctx + ".csmix")};
    }
    return p;
}

json to_json(const Prediction& prediction) {
    json j = sequence_json(prediction.values);
    j["id"] = prediction.id;
    if (prediction.avg) {
        j["avg"] = sequence_json(*prediction.avg);
    }
    if (prediction.csmix) {
        json c = sequence_json(prediction.csmix->prediction);
        c["label_depths"] = prediction.csmix->labels.depths.vector();
        c["label_heights"] = prediction.csmix->labels.heights.vector();
        j["csmix"] = std::move(c);
    }
    return j;
}

Prediction read_prediction(const fs::path& path, const ParseOptions& options) {
    try {
        return prediction_from_json(read_json(path), options);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Parse) {
            fail(ErrorKind::Parse, path.string() + ": " + e.what());
        }
        throw;
    }
}

json read_json(const fs::path& path) {
    std::ifstream in(path);
    if (!in) {
        fail(ErrorKind::Parse, path.string() + ": cannot open");
    }
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        fail(ErrorKind::Parse, path.string() + ": " + e.what());
    }
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        fail(ErrorKind::Format, path.string() + ": cannot create");
    }
    out << text;
}

void write_json(const fs::path& path, const json& j) {
    write_text(path, j.dump(2) + "\n");
}

FeatureSequence read_feature_sequence(const fs::path& path) {
    std::ifstream in = open_binary(path, "LFSQ");
    const std::uint32_t n = get_u32(in, path);
    const std::uint32_t d = get_u32(in, path);
    std::vector<double> data = read_floats(in, static_cast<std::size_t>(n) * d, path);
    try {
        return FeatureSequence(n, d, std::move(data));
    } catch (const Error& e) {
        fail(ErrorKind::Format, path.string() + ": " + e.what());
    }
}

void write_feature_sequence(const fs::path& path, const FeatureSequence& features) {
    std::ofstream out = create_binary(path, "LFSQ");
    put_u32(out, static_cast<std::uint32_t>(features.columns()));
    put_u32(out, static_cast<std::uint32_t>(features.channels()));
    for (double v : features.data()) {
        put_f32(out, v);
    }
}

DepthMap read_depth_map(const fs::path& path) {
    std::ifstream in = open_binary(path, "LDPM");
    const std::uint32_t h = get_u32(in, path);
    const std::uint32_t w = get_u32(in, path);
    std::vector<double> values = read_floats(in, static_cast<std::size_t>(h) * w, path);
    try {
        return DepthMap(h, w, std::move(values));
    } catch (const Error& e) {
        fail(ErrorKind::Format, path.string() + ": " + e.what());
    }
}

void write_depth_map(const fs::path& path, const DepthMap& map) {
    std::ofstream out = create_binary(path, "LDPM");
    put_u32(out, static_cast<std::uint32_t>(map.height()));
    put_u32(out, static_cast<std::uint32_t>(map.width()));
    for (double v : map.values()) {
        put_f32(out, v);
    }
}

std::uint64_t fnv1a64(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t value) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
    return buf;
}

std::string format_double(double value) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

} // namespace layoutforge
