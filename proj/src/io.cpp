#include "polyteach/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace polyteach {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

Rational fieldRational(const json& node, const std::string& context) {
    if (!node.is_string()) throw ParseError(context + ": rationals must be strings");
    return parseRational(node.get<std::string>());
}

Vector fieldVector(const json& node, Eigen::Index dimension, const std::string& context) {
    if (!node.is_array() || static_cast<Eigen::Index>(node.size()) != dimension) {
        throw ParseError(context + ": expected an array of " + std::to_string(dimension) +
                         " rationals");
    }
    Vector v(dimension);
    for (Eigen::Index j = 0; j < dimension; ++j) {
        v(j) = fieldRational(node[static_cast<std::size_t>(j)],
                             context + "[" + std::to_string(j) + "]");
    }
    return v;
}

json vectorToJson(const Vector& v) {
    json arr = json::array();
    for (Eigen::Index j = 0; j < v.size(); ++j) arr.push_back(toString(v(j)));
    return arr;
}

Eigen::Index fieldDimension(const json& doc) {
    if (!doc.contains("dimension") || !doc["dimension"].is_number_integer()) {
        throw ParseError("missing integer field 'dimension'");
    }
    const auto d = doc["dimension"].get<long>();
    if (d < 1) throw ParseError("'dimension' must be >= 1");
    return static_cast<Eigen::Index>(d);
}

}  // namespace

std::string arrangementToJson(const Arrangement& a, int indent) {
    json doc;
    doc["dimension"] = static_cast<long>(a.dimension());
    json planes = json::array();
    for (const Hyperplane& h : a.hyperplanes()) {
        json entry;
        entry["normal"] = vectorToJson(h.normal);
        entry["bias"] = toString(h.bias);
        planes.push_back(std::move(entry));
    }
    doc["hyperplanes"] = std::move(planes);
    return doc.dump(indent);
}

Arrangement arrangementFromJson(const std::string& text) {
    const json doc = parse(text);
    const Eigen::Index d = fieldDimension(doc);
    if (!doc.contains("hyperplanes") || !doc["hyperplanes"].is_array() ||
        doc["hyperplanes"].empty()) {
        throw ParseError("missing nonempty array field 'hyperplanes'");
    }
    std::vector<Hyperplane> planes;
    planes.reserve(doc["hyperplanes"].size());
    std::size_t index = 0;
    for (const json& entry : doc["hyperplanes"]) {
        const std::string context = "hyperplanes[" + std::to_string(index++) + "]";
        if (!entry.contains("normal") || !entry.contains("bias")) {
            throw ParseError(context + ": needs 'normal' and 'bias'");
        }
        planes.push_back(Hyperplane{fieldVector(entry["normal"], d, context + ".normal"),
                                    fieldRational(entry["bias"], context + ".bias")});
    }
    try {
        return Arrangement(d, std::move(planes));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string regionToJson(const Region& r, int indent) {
    json doc;
    doc["signs"] = signsToString(r.signs);
    doc["witness"] = vectorToJson(r.witness);
    return doc.dump(indent);
}

Region regionFromJson(const std::string& text) {
    const json doc = parse(text);
    if (!doc.contains("signs") || !doc["signs"].is_string()) {
        throw ParseError("missing string field 'signs'");
    }
    if (!doc.contains("witness") || !doc["witness"].is_array()) {
        throw ParseError("missing array field 'witness'");
    }
    Region r;
    try {
        r.signs = signsFromString(doc["signs"].get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    r.witness = fieldVector(doc["witness"], static_cast<Eigen::Index>(doc["witness"].size()),
                            "witness");
    return r;
}

std::string pointsToJson(const std::vector<Vector>& points, Eigen::Index dimension, int indent) {
    json doc;
    doc["dimension"] = static_cast<long>(dimension);
    json arr = json::array();
    for (const Vector& p : points) arr.push_back(vectorToJson(p));
    doc["points"] = std::move(arr);
    return doc.dump(indent);
}

std::pair<std::vector<Vector>, Eigen::Index> pointsFromJson(const std::string& text) {
    const json doc = parse(text);
    const Eigen::Index d = fieldDimension(doc);
    if (!doc.contains("points") || !doc["points"].is_array() || doc["points"].empty()) {
        throw ParseError("missing nonempty array field 'points'");
    }
    std::vector<Vector> points;
    points.reserve(doc["points"].size());
    std::size_t index = 0;
    for (const json& entry : doc["points"]) {
        points.push_back(fieldVector(entry, d, "points[" + std::to_string(index++) + "]"));
    }
    return {std::move(points), d};
}

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void writeFile(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << contents;
}

}  // namespace polyteach
