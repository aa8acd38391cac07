#include "towers/enumerator.hpp"

#include <algorithm>
#include <thread>

#include "towers/errors.hpp"

namespace towers {
namespace {

/// Depth-first construction floor by floor. The visitor sees the floor
/// stack after every placement, so towers come out in lexicographic order:
/// a floor list precedes its extensions, and the towers built on top of a
/// floor precede those on any longer version of that floor.
class Search {
public:
    explicit Search(const EnumerationQuery& q) : q_(q) {}

    template <class Visit>
    void run(Visit&& visit) {
        floors_.assign(1, Floor{});
        bottom(0, visit);
        floors_.clear();
    }

    /// Runs only the subtrees whose bottom floor index satisfies
    /// index % stride == phase (bottoms are numbered in emission order).
    template <class Visit>
    void run_partition(unsigned phase, unsigned stride, Visit&& visit) {
        phase_ = phase;
        stride_ = stride;
        run(visit);
    }

    const std::vector<Floor>& floors() const { return floors_; }
    int area() const { return area_; }
    int pieces() const { return count_; }

private:
    int used() const { return q_.bound_kind == BoundKind::ByArea ? area_ : count_; }
    int cost(int size) const { return q_.bound_kind == BoundKind::ByArea ? size : 1; }

    void place(const Piece& p) {
        floors_.back().push_back(p);
        area_ += p.size;
        ++count_;
    }
    void unplace() {
        area_ -= floors_.back().back().size;
        --count_;
        floors_.back().pop_back();
    }

    template <class Visit>
    void bottom(std::int64_t x, Visit& visit) {
        for (int size : q_.pieces.sizes()) {
            if (used() + cost(size) > q_.bound) break;
            place({x, size});
            if (stride_ <= 1 || bottom_index_++ % stride_ == phase_) grow(visit);
            if (q_.shape == ShapeClass::Tower) bottom(x + size, visit);
            unplace();
        }
    }

    template <class Visit>
    void grow(Visit& visit) {
        visit(*this);
        if (used() + cost(q_.pieces.min_size()) > q_.bound) return;

        const Floor& prev = floors_.back();
        const std::int64_t lo = prev.front().left;
        const std::int64_t hi = prev.back().right();
        // prefix[j] = occupied cells in [lo, lo + j)
        std::vector<int> prefix(static_cast<std::size_t>(hi - lo) + 1, 0);
        for (const auto& p : prev)
            for (std::int64_t c = p.left; c < p.right(); ++c) prefix[c - lo + 1] = 1;
        for (std::size_t j = 1; j < prefix.size(); ++j) prefix[j] += prefix[j - 1];

        std::vector<Piece> candidates;
        const bool noalign = q_.pieces.rule() == InterfaceRule::NoExactAlignment;
        for (std::int64_t x = lo - q_.pieces.max_size() + 1; x < hi; ++x) {
            if (q_.shape == ShapeClass::HalfPyramid && x < 0) continue;
            for (int size : q_.pieces.sizes()) {
                const std::int64_t a = std::max(x, lo) - lo;
                const std::int64_t b = std::min(x + size, hi) - lo;
                if (b <= a || prefix[b] - prefix[a] == 0) continue;
                const Piece piece{x, size};
                if (noalign && std::binary_search(prev.begin(), prev.end(), piece)) continue;
                candidates.push_back(piece);
            }
        }

        floors_.emplace_back();
        choose(candidates, 0, visit);
        floors_.pop_back();
    }

    template <class Visit>
    void choose(const std::vector<Piece>& candidates, std::size_t start, Visit& visit) {
        for (std::size_t i = start; i < candidates.size(); ++i) {
            const Piece& c = candidates[i];
            if (!floors_.back().empty() && c.left < floors_.back().back().right()) continue;
            if (used() + cost(c.size) > q_.bound) continue;
            place(c);
            grow(visit);
            choose(candidates, i + 1, visit);
            unplace();
        }
    }

    const EnumerationQuery& q_;
    std::vector<Floor> floors_;
    int area_ = 0;
    int count_ = 0;
    unsigned phase_ = 0;
    unsigned stride_ = 1;
    unsigned bottom_index_ = 0;
};

void check_query(const EnumerationQuery& q) {
    if (q.bound < 1) throw InputError("enumeration bound must be at least 1");
}

int group_key(const EnumerationQuery& q, const Search& s) {
    return q.bound_kind == BoundKind::ByArea ? s.area() : s.pieces();
}

}  // namespace

void enumerate_towers(const EnumerationQuery& query, const TowerVisitor& visit) {
    check_query(query);
    Search search(query);
    search.run([&](const Search& s) { visit(Tower(s.floors())); });
}

std::vector<Tower> collect_towers(const EnumerationQuery& query) {
    std::vector<Tower> out;
    enumerate_towers(query, [&](const Tower& t) { out.push_back(t); });
    return out;
}

std::map<int, BigInt> count_towers(const EnumerationQuery& query, unsigned threads) {
    check_query(query);
    const unsigned workers = std::max(1u, threads);
    std::vector<std::vector<unsigned long long>> partial(
        workers, std::vector<unsigned long long>(static_cast<std::size_t>(query.bound) + 1, 0));

    auto work = [&](unsigned phase) {
        Search search(query);
        auto& counts = partial[phase];
        search.run_partition(phase, workers, [&](const Search& s) { ++counts[group_key(query, s)]; });
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }

    std::map<int, BigInt> result;
    for (int n = 1; n <= query.bound; ++n) {
        BigInt total = 0;
        for (const auto& counts : partial) total += static_cast<unsigned long>(counts[n]);
        result.emplace(n, total);
    }
    return result;
}

std::map<int, ZPolynomial> weight_polynomial(const EnumerationQuery& query) {
    check_query(query);
    if (query.bound_kind != BoundKind::ByArea)
        throw InputError("weight polynomials are grouped by area");
    const auto& sizes = query.pieces.sizes();
    std::map<int, std::map<ZPolynomial::Exponents, unsigned long long>> tally;
    ZPolynomial::Exponents e(sizes.size());
    Search search(query);
    search.run([&](const Search& s) {
        std::fill(e.begin(), e.end(), 0u);
        for (const auto& floor : s.floors())
            for (const auto& p : floor) ++e[query.pieces.index_of(p.size)];
        ++tally[s.area()][e];
    });

    std::map<int, ZPolynomial> result;
    for (int n = 1; n <= query.bound; ++n) {
        ZPolynomial poly;
        for (const auto& [exps, c] : tally[n]) poly.add_term(exps, BigInt(static_cast<unsigned long>(c)));
        result.emplace(n, std::move(poly));
    }
    return result;
}

}  // namespace towers
