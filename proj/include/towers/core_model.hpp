#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace towers {

enum class InterfaceRule { AllInterfaces, NoExactAlignment };

enum class ShapeClass { Tower, Pyramid, HalfPyramid };

std::string_view to_string(InterfaceRule rule);
std::string_view to_string(ShapeClass shape);
InterfaceRule parse_interface_rule(std::string_view text);
ShapeClass parse_shape(std::string_view text);

/// The allowed piece lengths together with the interface rule.
///
/// Sizes are kept strictly increasing and duplicate-free. Construction
/// throws InputError on an empty set or a non-positive size.
class PieceSet {
public:
    PieceSet(std::vector<int> sizes, InterfaceRule rule = InterfaceRule::AllInterfaces);

    /// Parses a comma-separated list such as "1,2,3".
    static PieceSet parse(std::string_view sizes, InterfaceRule rule = InterfaceRule::AllInterfaces);

    const std::vector<int>& sizes() const noexcept { return sizes_; }
    InterfaceRule rule() const noexcept { return rule_; }
    int max_size() const noexcept { return sizes_.back(); }
    int min_size() const noexcept { return sizes_.front(); }
    bool is_single_size() const noexcept { return sizes_.size() == 1; }
    bool contains(int size) const noexcept;
    /// Position of `size` within sizes(), or -1.
    int index_of(int size) const noexcept;

    std::string describe() const;

    friend bool operator==(const PieceSet&, const PieceSet&) = default;

private:
    std::vector<int> sizes_;
    InterfaceRule rule_;
};

/// A closed integer interval [left, right] as written in tower listings.
struct Interval {
    std::int64_t left = 0;
    std::int64_t right = 0;

    friend auto operator<=>(const Interval&, const Interval&) = default;
};

using RawFloors = std::vector<std::vector<Interval>>;

/// An i-mer whose left end sits at `left`; occupies [left, left + size].
struct Piece {
    std::int64_t left = 0;
    int size = 1;

    std::int64_t right() const noexcept { return left + size; }
    Interval interval() const noexcept { return {left, right()}; }

    friend auto operator<=>(const Piece&, const Piece&) = default;
};

using Floor = std::vector<Piece>;

/// Floors listed bottom to top, each floor sorted by left coordinate.
///
/// A Tower is a well-formed configuration; legality with respect to a
/// PieceSet and shape is a separate question (is_legal_tower). The
/// three-way comparison is the lexicographic order on the floor lists,
/// which is the order the enumerator emits.
class Tower {
public:
    Tower() = default;
    explicit Tower(std::vector<Floor> floors);

    /// Throws InputError if any interval has right <= left.
    static Tower from_intervals(const RawFloors& raw);

    const std::vector<Floor>& floors() const noexcept { return floors_; }
    std::size_t floor_count() const noexcept { return floors_.size(); }
    std::size_t piece_count() const noexcept;
    std::int64_t area() const noexcept;
    RawFloors to_intervals() const;

    /// Compact listing, e.g. "[[0,2],[2,4]],[[1,3]]".
    std::string to_string() const;

    friend auto operator<=>(const Tower&, const Tower&) = default;

private:
    std::vector<Floor> floors_;
};

/// Exponent of t (area) and multiplicity of each piece size.
struct WeightMonomial {
    std::int64_t t_exponent = 0;
    std::map<int, std::int64_t> z_exponents;

    std::string to_string() const;

    friend bool operator==(const WeightMonomial&, const WeightMonomial&) = default;
};

/// Legality of a raw floor listing. Listing order inside a floor is
/// irrelevant, and legality is invariant under horizontal translation.
/// Throws InputError for a malformed interval (right <= left); an
/// ill-formed but well-typed configuration simply yields false.
bool is_legal_tower(const RawFloors& candidate, const PieceSet& pieces, ShapeClass shape);
bool is_legal_tower(const Tower& candidate, const PieceSet& pieces, ShapeClass shape);

/// Translates so the leftmost bottom-floor piece starts at 0.
Tower canonicalize_tower(const Tower& tower);

WeightMonomial weight_of_tower(const Tower& tower);

}  // namespace towers
