#include "pretzel/diagram_sim.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

#include "pretzel/disjoint_set.hpp"

namespace pretzel {

namespace {

// Node numbering: box endpoints first (4 per box), then per band and per
// foot a near end (toward the arc's start) and a far end.
struct Nodes {
    std::size_t boxes;
    std::size_t corner(std::size_t box, Corner c) const {
        return 4 * box + static_cast<std::size_t>(c);
    }
    std::size_t cut(std::size_t band, int foot, bool far) const {
        return 4 * boxes + 4 * band + 2 * static_cast<std::size_t>(foot) + (far ? 1 : 0);
    }
    std::size_t total(std::size_t bands) const { return 4 * boxes + 4 * bands; }
};

struct Cut {
    int slot;
    std::size_t band;
    int foot;
};

using CutIndex = std::map<std::pair<Layer, std::size_t>, std::vector<Cut>>;

CutIndex index_cuts(std::span<const AppliedBand> bands) {
    CutIndex idx;
    for (std::size_t b = 0; b < bands.size(); ++b) {
        idx[{bands[b].first.layer, bands[b].first.gap}].push_back({bands[b].first.slot, b, 0});
        idx[{bands[b].second.layer, bands[b].second.gap}].push_back({bands[b].second.slot, b, 1});
    }
    for (auto& [arc, cuts] : idx)
        std::sort(cuts.begin(), cuts.end(), [](const Cut& x, const Cut& y) { return x.slot < y.slot; });
    return idx;
}

std::pair<std::size_t, std::size_t> arc_ends(const Nodes& nodes, Layer layer, std::size_t gap) {
    const std::size_t next = (gap + 1) % nodes.boxes;
    if (layer == Layer::Top) return {nodes.corner(gap, Corner::NE), nodes.corner(next, Corner::NW)};
    return {nodes.corner(gap, Corner::SE), nodes.corner(next, Corner::SW)};
}

struct Gluing {
    std::string kind;
    std::size_t a;
    std::size_t b;
};

std::vector<Gluing> gluings(std::size_t boxes, std::span<const AppliedBand> bands) {
    const Nodes nodes{boxes};
    const CutIndex cuts = index_cuts(bands);
    std::vector<Gluing> out;
    for (std::size_t i = 0; i < boxes; ++i) {
        out.push_back({"box", nodes.corner(i, Corner::NW), nodes.corner(i, Corner::SE)});
        out.push_back({"box", nodes.corner(i, Corner::NE), nodes.corner(i, Corner::SW)});
    }
    for (Layer layer : {Layer::Top, Layer::Bottom}) {
        for (std::size_t g = 0; g < boxes; ++g) {
            auto [from, to] = arc_ends(nodes, layer, g);
            const std::string kind =
                std::string(layer == Layer::Top ? "top" : "bottom") + "[" + std::to_string(g) + "]";
            std::size_t cur = from;
            if (auto it = cuts.find({layer, g}); it != cuts.end()) {
                for (const Cut& c : it->second) {
                    out.push_back({kind, cur, nodes.cut(c.band, c.foot, false)});
                    cur = nodes.cut(c.band, c.foot, true);
                }
            }
            out.push_back({kind, cur, to});
        }
    }
    for (std::size_t b = 0; b < bands.size(); ++b) {
        const std::string kind = "band" + std::to_string(b);
        const bool flat = bands[b].splice == Splice::Flat;
        out.push_back({kind, nodes.cut(b, 0, true), nodes.cut(b, 1, !flat)});
        out.push_back({kind, nodes.cut(b, 1, flat), nodes.cut(b, 0, false)});
    }
    return out;
}

DisjointSet trace(std::size_t boxes, std::span<const AppliedBand> bands) {
    DisjointSet sets(Nodes{boxes}.total(bands.size()));
    for (const Gluing& g : gluings(boxes, bands)) sets.unite(g.a, g.b);
    return sets;
}

std::string node_name(const Nodes& nodes, std::size_t id) {
    static constexpr const char* kCorner[] = {"NW", "NE", "SW", "SE"};
    if (id < 4 * nodes.boxes) return std::string(kCorner[id % 4]) + std::to_string(id / 4);
    const std::size_t rel = id - 4 * nodes.boxes;
    return "b" + std::to_string(rel / 4) + "f" + std::to_string((rel / 2) % 2) +
           (rel % 2 ? "far" : "near");
}

}  // namespace

SpliceDiagram::SpliceDiagram(std::size_t boxes) : boxes_(boxes) {
    if (boxes == 0) throw std::invalid_argument("diagram needs at least one twist box");
}

SpliceDiagram SpliceDiagram::with_band(const Site& first, const Site& second,
                                       std::string label, Splice splice) const {
    for (const Site* s : {&first, &second}) {
        if (s->gap >= boxes_) throw StaleSiteError("site " + s->str() + " names no arc");
        for (const AppliedBand& b : bands_) {
            if (b.first == *s || b.second == *s)
                throw StaleSiteError("site " + s->str() + " was already cut by band " + b.label);
        }
    }
    if (first == second) throw StaleSiteError("both feet at site " + first.str());

    SpliceDiagram next = *this;
    next.bands_.push_back(
        {first, second, label.empty() ? "#" + std::to_string(bands_.size()) : label, splice});
    const long long before = static_cast<long long>(count_components());
    const long long after = static_cast<long long>(next.count_components());
    if (std::llabs(after - before) != 1)
        throw NonOrientableBandError("band " + next.bands_.back().label + " changed the count from " +
                                     std::to_string(before) + " to " + std::to_string(after));
    return next;
}

std::size_t SpliceDiagram::count_components() const {
    return trace(boxes_, bands_).set_count();
}

std::vector<std::size_t> SpliceDiagram::components_at(std::span<const Site> sites) const {
    const Nodes nodes{boxes_};
    DisjointSet sets = trace(boxes_, bands_);
    const CutIndex cuts = index_cuts(bands_);
    std::map<std::size_t, std::size_t> renumber;
    std::vector<std::size_t> out;
    for (const Site& s : sites) {
        if (s.gap >= boxes_) throw StaleSiteError("site " + s.str() + " names no arc");
        // The segment holding s starts at the last cut below it.
        std::size_t node = arc_ends(nodes, s.layer, s.gap).first;
        if (auto it = cuts.find({s.layer, s.gap}); it != cuts.end()) {
            for (const Cut& c : it->second) {
                if (c.slot == s.slot) throw StaleSiteError("site " + s.str() + " is already cut");
                if (c.slot < s.slot) node = nodes.cut(c.band, c.foot, true);
            }
        }
        const std::size_t root = sets.find(node);
        auto [pos, inserted] = renumber.emplace(root, renumber.size());
        out.push_back(pos->second);
    }
    return out;
}

std::string SpliceDiagram::dump() const {
    const Nodes nodes{boxes_};
    std::ostringstream os;
    os << "diagram boxes=" << boxes_ << " bands=" << bands_.size() << "\n";
    for (std::size_t b = 0; b < bands_.size(); ++b)
        os << "band" << b << " " << bands_[b].label << " " << bands_[b].first.str() << " "
           << bands_[b].second.str() << "\n";
    for (const Gluing& g : gluings(boxes_, bands_))
        os << g.kind << " " << node_name(nodes, g.a) << " " << node_name(nodes, g.b) << "\n";
    os << "components " << count_components() << "\n";
    return os.str();
}

SpliceDiagram build_diagram(std::size_t boxes) { return SpliceDiagram(boxes); }

SpliceDiagram build_diagram(const SignSeq& seq) { return SpliceDiagram(seq.size()); }

SpliceDiagram apply_band(const SpliceDiagram& d, const BandFeet& feet) {
    const std::string label = std::string(1, family_letter(feet.direction)) + "(" +
                              std::to_string(feet.pair.minus) + "," +
                              std::to_string(feet.pair.plus) + ")";
    return d.with_band(feet.minus_foot, feet.plus_foot, label);
}

std::vector<std::size_t> surgery_counts(SpliceDiagram d, std::span<const BandFeet> bands) {
    std::vector<std::size_t> counts{d.count_components()};
    for (const BandFeet& f : bands) {
        d = apply_band(d, f);
        counts.push_back(d.count_components());
    }
    return counts;
}

}  // namespace pretzel
