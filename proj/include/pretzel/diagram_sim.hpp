#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pretzel/pairing.hpp"
#include "pretzel/sign_seq.hpp"

namespace pretzel {

// Endpoints of a twist box. An odd twist region joins NW to SE and NE to SW.
enum class Corner { NW = 0, NE = 1, SW = 2, SE = 3 };

class StaleSiteError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The band changed the component count by something other than one, i.e.
/// the splice was not orientation-coherent.
class NonOrientableBandError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Flat bands join the far end of each foot to the near end of the other.
// A half twist joins far to far and near to near.
enum class Splice { Flat, HalfTwisted };

struct AppliedBand {
    Site first;
    Site second;
    std::string label;
    Splice splice = Splice::Flat;
};

/// Curve-connection model of the standard pretzel diagram.
///
/// Box i has endpoints NW_i, NE_i, SW_i, SE_i glued internally NW-SE and
/// NE-SW. Top arcs glue NE_i to NW_{i+1} and bottom arcs glue SE_i to
/// SW_{i+1}, indices mod the box count. A band cuts two arcs at sites and
/// rejoins the four loose ends along its sides. Bands are flat in the region
/// their layer bounds, so with each arc read from box i toward box i+1 (the
/// boundary order of that region), a band with feet p and q joins the far
/// end of p to the near end of q and the far end of q to the near end of p.
/// Every arc then carries the orientation box i -> box i+1 and flat bands
/// respect it, so they always fuse or split.
///
/// Crossing data is deliberately absent: component structure of an odd
/// pretzel depends only on the strand swap in each box.
class SpliceDiagram {
public:
    explicit SpliceDiagram(std::size_t boxes);

    std::size_t boxes() const noexcept { return boxes_; }
    std::span<const AppliedBand> bands() const noexcept { return bands_; }

    /// Returns the diagram with one more band. Throws StaleSiteError if a
    /// site is out of range or already cut, NonOrientableBandError if the
    /// component count does not move by exactly one.
    SpliceDiagram with_band(const Site& first, const Site& second, std::string label = {},
                            Splice splice = Splice::Flat) const;

    std::size_t count_components() const;

    /// Component index (0-based, numbered by first appearance in `sites`) of
    /// the arc segment each uncut site lies on.
    std::vector<std::size_t> components_at(std::span<const Site> sites) const;

    /// One gluing per line in a fixed order, then the component count.
    std::string dump() const;

private:
    std::size_t boxes_;
    std::vector<AppliedBand> bands_;
};

SpliceDiagram build_diagram(std::size_t boxes);
SpliceDiagram build_diagram(const SignSeq& seq);

SpliceDiagram apply_band(const SpliceDiagram& d, const BandFeet& feet);

inline std::size_t count_components(const SpliceDiagram& d) { return d.count_components(); }

/// Component counts after each band in turn; element 0 is the starting count.
std::vector<std::size_t> surgery_counts(SpliceDiagram d, std::span<const BandFeet> bands);

}  // namespace pretzel
