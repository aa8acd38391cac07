#include "towers/core_model.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "towers/errors.hpp"

namespace towers {

std::string_view to_string(InterfaceRule rule) {
    return rule == InterfaceRule::AllInterfaces ? "all" : "noalign";
}

std::string_view to_string(ShapeClass shape) {
    switch (shape) {
        case ShapeClass::Tower: return "tower";
        case ShapeClass::Pyramid: return "pyramid";
        case ShapeClass::HalfPyramid: return "half";
    }
    return "tower";
}

InterfaceRule parse_interface_rule(std::string_view text) {
    if (text == "all") return InterfaceRule::AllInterfaces;
    if (text == "noalign") return InterfaceRule::NoExactAlignment;
    throw InputError("unknown interface rule '" + std::string(text) + "' (expected all|noalign)");
}

ShapeClass parse_shape(std::string_view text) {
    if (text == "tower") return ShapeClass::Tower;
    if (text == "pyramid") return ShapeClass::Pyramid;
    if (text == "half") return ShapeClass::HalfPyramid;
    throw InputError("unknown shape '" + std::string(text) + "' (expected tower|pyramid|half)");
}

PieceSet::PieceSet(std::vector<int> sizes, InterfaceRule rule) : sizes_(std::move(sizes)), rule_(rule) {
    if (sizes_.empty()) throw InputError("piece set must not be empty");
    std::sort(sizes_.begin(), sizes_.end());
    sizes_.erase(std::unique(sizes_.begin(), sizes_.end()), sizes_.end());
    if (sizes_.front() < 1) throw InputError("piece sizes must be positive");
}

PieceSet PieceSet::parse(std::string_view text, InterfaceRule rule) {
    std::vector<int> sizes;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
            throw InputError("bad piece size list '" + std::string(text) + "'");
        sizes.push_back(value);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return PieceSet(std::move(sizes), rule);
}

bool PieceSet::contains(int size) const noexcept { return index_of(size) >= 0; }

int PieceSet::index_of(int size) const noexcept {
    auto it = std::lower_bound(sizes_.begin(), sizes_.end(), size);
    if (it == sizes_.end() || *it != size) return -1;
    return static_cast<int>(it - sizes_.begin());
}

std::string PieceSet::describe() const {
    std::ostringstream out;
    out << "S={";
    for (std::size_t i = 0; i < sizes_.size(); ++i) out << (i ? "," : "") << sizes_[i];
    out << "} " << to_string(rule_);
    return out.str();
}

Tower::Tower(std::vector<Floor> floors) : floors_(std::move(floors)) {
    for (auto& floor : floors_) std::sort(floor.begin(), floor.end());
}

Tower Tower::from_intervals(const RawFloors& raw) {
    std::vector<Floor> floors;
    floors.reserve(raw.size());
    for (const auto& row : raw) {
        Floor floor;
        floor.reserve(row.size());
        for (const auto& iv : row) {
            if (iv.right <= iv.left) {
                throw InputError("malformed interval [" + std::to_string(iv.left) + "," +
                                 std::to_string(iv.right) + "]");
            }
            if (iv.right - iv.left > (1 << 30)) throw InputError("interval too long");
            floor.push_back({iv.left, static_cast<int>(iv.right - iv.left)});
        }
        floors.push_back(std::move(floor));
    }
    return Tower(std::move(floors));
}

std::size_t Tower::piece_count() const noexcept {
    std::size_t n = 0;
    for (const auto& floor : floors_) n += floor.size();
    return n;
}

std::int64_t Tower::area() const noexcept {
    std::int64_t a = 0;
    for (const auto& floor : floors_)
        for (const auto& p : floor) a += p.size;
    return a;
}

RawFloors Tower::to_intervals() const {
    RawFloors raw;
    for (const auto& floor : floors_) {
        auto& row = raw.emplace_back();
        for (const auto& p : floor) row.push_back(p.interval());
    }
    return raw;
}

std::string Tower::to_string() const {
    std::ostringstream out;
    for (std::size_t f = 0; f < floors_.size(); ++f) {
        out << (f ? "," : "") << '[';
        for (std::size_t i = 0; i < floors_[f].size(); ++i)
            out << (i ? "," : "") << '[' << floors_[f][i].left << ',' << floors_[f][i].right() << ']';
        out << ']';
    }
    return out.str();
}

std::string WeightMonomial::to_string() const {
    std::ostringstream out;
    out << "t^" << t_exponent;
    for (const auto& [size, mult] : z_exponents) out << " z" << size << '^' << mult;
    return out.str();
}

namespace {

std::int64_t overlap(const Piece& a, const Piece& b) {
    return std::min(a.right(), b.right()) - std::max(a.left, b.left);
}

}  // namespace

bool is_legal_tower(const Tower& tower, const PieceSet& pieces, ShapeClass shape) {
    const auto& floors = tower.floors();
    if (floors.empty()) return false;
    for (const auto& floor : floors) {
        if (floor.empty()) return false;
        for (std::size_t i = 0; i < floor.size(); ++i) {
            if (!pieces.contains(floor[i].size)) return false;
            // sorted by left, so disjoint interiors reduce to neighbours
            if (i > 0 && floor[i].left < floor[i - 1].right()) return false;
        }
    }

    const Floor& bottom = floors.front();
    for (std::size_t i = 1; i < bottom.size(); ++i)
        if (bottom[i].left != bottom[i - 1].right()) return false;

    for (std::size_t f = 1; f < floors.size(); ++f) {
        for (const auto& piece : floors[f]) {
            bool supported = false;
            for (const auto& below : floors[f - 1]) {
                if (pieces.rule() == InterfaceRule::NoExactAlignment && below == piece) return false;
                if (overlap(piece, below) > 0) supported = true;
            }
            if (!supported) return false;
        }
    }

    if (shape == ShapeClass::Tower) return true;
    if (bottom.size() != 1) return false;
    if (shape == ShapeClass::HalfPyramid) {
        const std::int64_t anchor = bottom.front().left;
        for (const auto& floor : floors)
            for (const auto& piece : floor)
                if (piece.left < anchor) return false;
    }
    return true;
}

bool is_legal_tower(const RawFloors& candidate, const PieceSet& pieces, ShapeClass shape) {
    return is_legal_tower(Tower::from_intervals(candidate), pieces, shape);
}

Tower canonicalize_tower(const Tower& tower) {
    if (tower.floors().empty() || tower.floors().front().empty()) return tower;
    const std::int64_t shift = tower.floors().front().front().left;
    if (shift == 0) return tower;
    std::vector<Floor> floors = tower.floors();
    for (auto& floor : floors)
        for (auto& piece : floor) piece.left -= shift;
    return Tower(std::move(floors));
}

WeightMonomial weight_of_tower(const Tower& tower) {
    WeightMonomial w;
    for (const auto& floor : tower.floors()) {
        for (const auto& piece : floor) {
            w.t_exponent += piece.size;
            ++w.z_exponents[piece.size];
        }
    }
    return w;
}

}  // namespace towers
