#include "polyteach/ranking.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "polyteach/counting.hpp"
#include "polyteach/util.hpp"

namespace polyteach {

RankingInstance::RankingInstance(std::vector<Vector> objects)
    : objects_(std::move(objects)) {
    if (objects_.size() < 2) throw std::invalid_argument("RankingInstance: need >= 2 objects");
    dimension_ = objects_.front().size();
    const int n = static_cast<int>(objects_.size());

    std::vector<Hyperplane> planes;
    planes.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
    for (int i = 0; i < n; ++i) {
        const Vector& a = objects_[static_cast<std::size_t>(i)];
        if (a.size() != dimension_) {
            throw std::invalid_argument("RankingInstance: object dimension mismatch");
        }
        for (int j = i + 1; j < n; ++j) {
            const Vector& b = objects_[static_cast<std::size_t>(j)];
            Vector normal = a - b;
            bool zero = true;
            for (Eigen::Index k = 0; k < dimension_; ++k) {
                if (normal(k) != 0) { zero = false; break; }
            }
            if (zero) {
                throw DuplicateObjects("RankingInstance: objects " + std::to_string(i) + " and " +
                                       std::to_string(j) + " coincide");
            }
            const Rational bias = (a.dot(a) - b.dot(b)) / 2;
            planes.push_back(Hyperplane{std::move(normal), bias});
            pairs_.emplace_back(i, j);
        }
    }
    arrangement_.emplace(dimension_, std::move(planes));
}

std::pair<int, int> RankingInstance::pairOf(int hyperplaneId) const {
    return pairs_.at(static_cast<std::size_t>(hyperplaneId));
}

int RankingInstance::hyperplaneOf(int i, int j) const {
    if (i == j) throw std::invalid_argument("hyperplaneOf: need two distinct objects");
    if (i > j) std::swap(i, j);
    for (std::size_t id = 0; id < pairs_.size(); ++id) {
        if (pairs_[id] == std::make_pair(i, j)) return static_cast<int>(id);
    }
    throw std::invalid_argument("hyperplaneOf: pair out of range");
}

std::vector<int> Ranking::positionsOf() const {
    std::vector<int> pos(order.size());
    for (std::size_t p = 0; p < order.size(); ++p) {
        pos[static_cast<std::size_t>(order[p])] = static_cast<int>(p);
    }
    return pos;
}

Ranking rankingOf(const RankingInstance& instance, const Vector& r) {
    const int n = instance.objectCount();
    std::vector<Rational> sqDist;
    sqDist.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const Vector diff = instance.object(i) - r;
        sqDist.push_back(diff.dot(diff));
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (sqDist[static_cast<std::size_t>(i)] == sqDist[static_cast<std::size_t>(j)]) {
                throw OnBisector("reference point is equidistant from objects " +
                                 std::to_string(i) + " and " + std::to_string(j));
            }
        }
    }
    Ranking ranking;
    ranking.order.resize(static_cast<std::size_t>(n));
    std::iota(ranking.order.begin(), ranking.order.end(), 0);
    std::sort(ranking.order.begin(), ranking.order.end(), [&](int i, int j) {
        return sqDist[static_cast<std::size_t>(i)] < sqDist[static_cast<std::size_t>(j)];
    });
    return ranking;
}

TeachingSet teachRanking(const RankingInstance& instance, const Region& cell) {
    return teachingSet(instance.bisectorArrangement(), cell);
}

CellRankingTable validateE1(const RankingInstance& instance) {
    CellRankingTable table;
    table.cells = enumerateRegions(instance.bisectorArrangement());
    table.rankings.reserve(table.cells.size());

    for (const Region& cell : table.cells) {
        Ranking ranking = rankingOf(instance, cell.witness);
        const std::vector<int> pos = ranking.positionsOf();
        for (std::size_t id = 0; id < cell.signs.size(); ++id) {
            const auto [i, j] = instance.pairOf(static_cast<int>(id));
            const int expected =
                pos[static_cast<std::size_t>(i)] < pos[static_cast<std::size_t>(j)] ? 1 : -1;
            if (cell.signs[id] != expected) {
                throw InconsistentCell("cell sign vector disagrees with its witness ranking");
            }
        }
        table.rankings.push_back(std::move(ranking));
    }

    for (std::size_t a = 0; a < table.rankings.size(); ++a) {
        for (std::size_t b = a + 1; b < table.rankings.size(); ++b) {
            if (table.rankings[a] == table.rankings[b]) {
                throw InconsistentCell("two cells produced the same ranking");
            }
        }
    }
    return table;
}

RankingInstance randomRankingInstance(int n, int d, std::uint64_t seed) {
    if (n < 2 || d < 1) throw std::invalid_argument("randomRankingInstance: need n >= 2, d >= 1");
    std::mt19937_64 rng(seed);
    constexpr int kMaxAttempts = 256;

    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        const long range = 6L << std::min(attempt / 8, 16);
        std::uniform_int_distribution<long> coord(-range, range);

        std::vector<Vector> objects;
        objects.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            Vector p(d);
            for (Eigen::Index j = 0; j < d; ++j) p(j) = coord(rng);
            objects.push_back(std::move(p));
        }

        // Affine genericity: every (k+1)-subset spans a k-flat, k <= d.
        bool generic = true;
        for (int k = 1; k <= d && generic; ++k) {
            if (k + 1 > n) break;
            forEachCombination(n, k + 1, [&](const std::vector<int>& ids) {
                if (!generic) return;
                Matrix diffs(k, d);
                for (int i = 1; i <= k; ++i) {
                    diffs.row(i - 1) =
                        (objects[static_cast<std::size_t>(ids[static_cast<std::size_t>(i)])] -
                         objects[static_cast<std::size_t>(ids[0])])
                            .transpose();
                }
                if (rank(diffs) < k) generic = false;
            });
        }
        if (!generic) continue;

        try {
            RankingInstance instance(std::move(objects));
            const CellRankingTable table = validateE1(instance);
            if (BigInt(static_cast<long>(table.cells.size())) != rankingCells(n, d)) continue;
            if (BigInt(enumerateFaces(instance.bisectorArrangement()).total) !=
                rankingFaces(n, d)) {
                continue;
            }
            return instance;
        } catch (const DuplicateObjects&) {
            continue;
        } catch (const InconsistentCell&) {
            continue;
        } catch (const std::invalid_argument&) {
            continue;  // coincident bisectors make face enumeration refuse
        }
    }
    throw GenerationFailed("randomRankingInstance: retry budget exhausted");
}

}  // namespace polyteach
