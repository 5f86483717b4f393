#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "pretzel/sign_seq.hpp"

namespace pretzel {

// Ccw builds the A family (minus cancels the plus counterclockwise of it),
// Cw builds the B family (minus cancels the plus clockwise of it).
enum class Direction { Ccw, Cw };

constexpr char family_letter(Direction d) noexcept { return d == Direction::Ccw ? 'A' : 'B'; }
constexpr Direction opposite(Direction d) noexcept {
    return d == Direction::Ccw ? Direction::Cw : Direction::Ccw;
}

struct BandPair {
    std::size_t minus = 0;
    std::size_t plus = 0;

    friend bool operator==(const BandPair&, const BandPair&) = default;
    friend auto operator<=>(const BandPair&, const BandPair&) = default;
};

struct BandMatching {
    Direction direction = Direction::Ccw;
    std::size_t size = 0;             // number of twist boxes on the cycle
    std::vector<BandPair> pairs;      // sorted by minus index
    std::vector<std::size_t> stages;  // 1-based cancellation stage per pair; empty if unknown
    std::vector<std::size_t> unmatched;

    /// Pairs and unmatched vertices agree; stages are ignored.
    bool same_pairing(const BandMatching& other) const;
    /// Partner of vertex v, or size if v is unmatched.
    std::size_t partner(std::size_t v) const;
};

/// Iterative cancellation: at each stage every surviving minus whose
/// direction-adjacent survivor is a plus cancels with it, all at once.
/// Throws std::invalid_argument if seq is not balanced for its length parity.
BandMatching pair_iterative(const SignSeq& seq, Direction direction);

/// Same procedure, but one cancellable pair at a time chosen uniformly at
/// random. Stage i is the i-th single cancellation.
BandMatching pair_iterative_randomized(const SignSeq& seq, Direction direction,
                                       std::mt19937_64& rng);

/// Each minus pairs with the first plus in `direction` such that the vertices
/// strictly between them hold equally many plus and minus signs.
/// Computed by a direct scan per minus; stages are left empty.
BandMatching pair_balanced(const SignSeq& seq, Direction direction);

// Closure arcs of the standard diagram. Top arcs bound the unbounded region
// and carry A feet; bottom arcs bound the central region and carry B feet.
enum class Layer { Top, Bottom };

constexpr Layer layer_of(Direction d) noexcept {
    return d == Direction::Ccw ? Layer::Top : Layer::Bottom;
}

/// A position on a closure arc. `gap` names the arc joining box gap to box
/// gap+1; `slot` orders feet along it, lower slots nearer box gap.
struct Site {
    Layer layer = Layer::Top;
    std::size_t gap = 0;
    int slot = 0;

    std::string str() const;
    friend bool operator==(const Site&, const Site&) = default;
    friend auto operator<=>(const Site&, const Site&) = default;
};

/// Slot used by a foot sitting next to the box at the start of its arc
/// (slot 0) or at the end of its arc (slot 1).
inline constexpr int kNearStart = 0;
inline constexpr int kNearEnd = 1;

struct BandFeet {
    Direction direction = Direction::Ccw;
    BandPair pair;
    Site minus_foot;  // adjacent to the minus box
    Site plus_foot;   // adjacent to the plus box
};

/// A feet sit clockwise of the minus box and counterclockwise of the plus
/// box; B feet sit counterclockwise of the minus box and clockwise of the
/// plus box.
std::vector<BandFeet> feet_placement(const BandMatching& matching);

/// True when no two pairs interleave around the cycle.
bool is_noncrossing(const BandMatching& matching);

/// Vertices strictly between the pair's endpoints, walking in `direction`
/// from the minus end.
std::vector<std::size_t> pair_gap(std::size_t size, const BandPair& pair, Direction direction);

/// Equal plus and minus counts in pair_gap.
bool gap_is_balanced(const SignSeq& seq, const BandPair& pair, Direction direction);

}  // namespace pretzel
