#ifndef POLYTEACH_RANKING_HPP
#define POLYTEACH_RANKING_HPP

#include "polyteach/teaching.hpp"

namespace polyteach {

struct DuplicateObjects : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OnBisector : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InconsistentCell : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// n embedded objects plus the C(n,2) bisecting hyperplanes of all pairs.
/// Pair (i,j), i < j, maps to the hyperplane (theta_i - theta_j) . z =
/// (|theta_i|^2 - |theta_j|^2)/2, whose +1 side holds the reference points
/// strictly closer to theta_i.
class RankingInstance {
public:
    explicit RankingInstance(std::vector<Vector> objects);

    const std::vector<Vector>& objects() const { return objects_; }
    const Vector& object(int i) const { return objects_[static_cast<std::size_t>(i)]; }
    int objectCount() const { return static_cast<int>(objects_.size()); }
    Eigen::Index dimension() const { return dimension_; }

    const Arrangement& bisectorArrangement() const { return *arrangement_; }
    std::pair<int, int> pairOf(int hyperplaneId) const;
    int hyperplaneOf(int i, int j) const;  // i != j, order-insensitive

private:
    std::vector<Vector> objects_;
    Eigen::Index dimension_;
    std::optional<Arrangement> arrangement_;
    std::vector<std::pair<int, int>> pairs_;
};

/// Builds the full bisector set; throws DuplicateObjects.
inline RankingInstance bisectors(std::vector<Vector> objects) {
    return RankingInstance(std::move(objects));
}

/// Objects ordered by exact squared distance to a reference point, nearest
/// first.
struct Ranking {
    std::vector<int> order;

    std::vector<int> positionsOf() const;  // inverse permutation
    friend bool operator==(const Ranking&, const Ranking&) = default;
};

/// Throws OnBisector when two objects are exactly equidistant from r.
Ranking rankingOf(const RankingInstance& instance, const Vector& r);

/// Minimal pairwise comparisons pinning the cell (hence the full ranking)
/// down; delegates to the halfspace teaching machinery.
TeachingSet teachRanking(const RankingInstance& instance, const Region& cell);

/// Per-cell ranking table; checks that every cell's witness ranking
/// reproduces the cell's sign vector exactly and that distinct cells give
/// distinct rankings.
struct CellRankingTable {
    std::vector<Region> cells;
    std::vector<Ranking> rankings;  // aligned
};

CellRankingTable validateE1(const RankingInstance& instance);

/// Random integer objects resampled until the bisector arrangement's cell
/// and face counts match the pairwise recursions and the cell <-> ranking
/// map validates; deterministic per seed.
RankingInstance randomRankingInstance(int n, int d, std::uint64_t seed);

}  // namespace polyteach

#endif
