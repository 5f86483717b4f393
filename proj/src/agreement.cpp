#include "pretzel/agreement.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace pretzel {

namespace {

std::string join(const std::vector<std::size_t>& xs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
    return os.str();
}

std::vector<BandFeet> feet_for(const BandMatching& matching, const std::vector<BandPair>& pairs) {
    BandMatching subset = matching;
    subset.pairs = pairs;
    subset.stages.clear();
    return feet_placement(subset);
}

// Each foot of the opposite family sits next to a box; the box's block must
// name the diagram component under that foot, consistently and injectively.
bool blocks_match(const SpliceDiagram& base, const Partition& partition,
                  const std::vector<BandFeet>& opposite, std::string& detail) {
    std::vector<Site> sites;
    std::vector<std::size_t> vertices;
    for (const BandFeet& f : opposite) {
        sites.push_back(f.minus_foot);
        vertices.push_back(f.pair.minus);
        sites.push_back(f.plus_foot);
        vertices.push_back(f.pair.plus);
    }
    const std::vector<std::size_t> comps = base.components_at(sites);
    std::map<std::size_t, std::size_t> block_to_comp, comp_to_block;
    for (std::size_t i = 0; i < sites.size(); ++i) {
        const std::size_t block = partition.block_of[vertices[i]];
        auto [a, fresh_a] = block_to_comp.emplace(block, comps[i]);
        auto [b, fresh_b] = comp_to_block.emplace(comps[i], block);
        if (a->second != comps[i] || b->second != block) {
            detail = "foot at " + sites[i].str() + " (box " + std::to_string(vertices[i]) +
                     ") lies on a component that does not match block " + std::to_string(block);
            return false;
        }
    }
    return true;
}

DirectionAgreement compare(std::size_t boxes, const std::vector<BandFeet>& first,
                           const std::vector<BandFeet>& second, const Partition& partition,
                           const StageRun& predicted, std::size_t expected_base) {
    DirectionAgreement out;
    out.predicted = predicted.counts;
    SpliceDiagram d = build_diagram(boxes);
    out.first_pass.push_back(d.count_components());
    for (const BandFeet& f : first) {
        d = apply_band(d, f);
        out.first_pass.push_back(d.count_components());
    }
    bool first_ok = true;
    for (std::size_t k = 0; k < out.first_pass.size(); ++k)
        first_ok = first_ok && out.first_pass[k] == expected_base + k;
    out.blocks_agree = blocks_match(d, partition, second, out.detail);
    // Only the bands the bookkeeping covered; it stops at its first fission.
    const std::size_t len = out.predicted.size();
    const std::vector<BandFeet> covered(second.begin(),
                                        second.begin() + static_cast<std::ptrdiff_t>(len - 1));
    try {
        out.simulated = surgery_counts(d, covered);
    } catch (const std::exception& e) {
        out.detail = e.what();
        return out;
    }
    out.counts_agree = first_ok && out.first_pass.back() == partition.block_count &&
                       out.simulated.size() == len &&
                       std::equal(out.predicted.begin(), out.predicted.end(), out.simulated.begin());
    if (!out.counts_agree && out.detail.empty())
        out.detail = "base " + join(out.first_pass) + ", predicted " + join(out.predicted) +
                     ", simulated " + join(out.simulated);
    return out;
}

}  // namespace

AgreementReport check_knot_agreement(const SignSeq& seq) {
    const SliceCertificate cert = certify(seq);
    AgreementReport r;
    r.seq = seq;
    r.base_count = build_diagram(seq).count_components();
    const auto feet_a = feet_placement(cert.matching_a);
    const auto feet_b = feet_placement(cert.matching_b);
    r.b_onto_a = compare(seq.size(), feet_a, feet_b, cert.after_a, cert.b_onto_a, 1);
    r.a_onto_b = compare(seq.size(), feet_b, feet_a, cert.after_b, cert.a_onto_b, 1);
    r.agrees = r.base_count == 1 && r.b_onto_a.counts_agree && r.b_onto_a.blocks_agree &&
               r.a_onto_b.counts_agree && r.a_onto_b.blocks_agree;
    return r;
}

AgreementReport check_link_agreement(const LinkTrial& trial) {
    AgreementReport r;
    r.seq = trial.seq;
    const std::size_t m = trial.seq.size();
    r.base_count = build_diagram(m).count_components();
    const auto kept_a = feet_for(trial.matching_a, kept_pairs(trial.matching_a, trial.drop_a));
    const auto kept_b = feet_for(trial.matching_b, kept_pairs(trial.matching_b, trial.drop_b));
    r.b_onto_a = compare(m, kept_a, kept_b, trial.after_a, trial.b_onto_a, 2);
    r.a_onto_b = compare(m, kept_b, kept_a, trial.after_b, trial.a_onto_b, 2);
    r.b_onto_a.blocks_required = !trial.drop_a_enclosed;
    r.a_onto_b.blocks_required = !trial.drop_b_enclosed;
    const auto ok = [](const DirectionAgreement& d) {
        return d.counts_agree && (d.blocks_agree || !d.blocks_required);
    };
    r.agrees = r.base_count == 2 && ok(r.b_onto_a) && ok(r.a_onto_b);
    return r;
}

}  // namespace pretzel
