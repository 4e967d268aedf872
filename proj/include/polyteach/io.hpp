#ifndef POLYTEACH_IO_HPP
#define POLYTEACH_IO_HPP

#include <string>
#include <vector>

#include "polyteach/arrangement.hpp"

namespace polyteach {

/// Arrangement JSON:
///   {"dimension": d, "hyperplanes": [{"normal": ["p/q", ...], "bias": "p/q"}, ...]}
/// Rationals are serialized canonically, so parse -> serialize -> parse is
/// the identity.
std::string arrangementToJson(const Arrangement& a, int indent = 2);
Arrangement arrangementFromJson(const std::string& text);

/// Region JSON: {"signs": "+-+...", "witness": ["p/q", ...]}.
std::string regionToJson(const Region& r, int indent = 2);
Region regionFromJson(const std::string& text);

/// Points JSON: {"dimension": d, "points": [["p/q", ...], ...]}.
std::string pointsToJson(const std::vector<Vector>& points, Eigen::Index dimension,
                         int indent = 2);
std::pair<std::vector<Vector>, Eigen::Index> pointsFromJson(const std::string& text);

std::string readFile(const std::string& path);
void writeFile(const std::string& path, const std::string& contents);

}  // namespace polyteach

#endif
