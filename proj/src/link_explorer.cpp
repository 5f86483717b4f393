#include "pretzel/link_explorer.hpp"

#include <map>
#include <stdexcept>

#include "pretzel/parallel.hpp"

namespace pretzel {

std::string_view to_string(ResidualRule rule) noexcept {
    return rule == ResidualRule::Corrected ? "corrected" : "naive";
}

std::vector<BandPair> kept_pairs(const BandMatching& full, std::size_t drop) {
    std::vector<BandPair> out;
    for (std::size_t i = 0; i < full.pairs.size(); ++i)
        if (i != drop) out.push_back(full.pairs[i]);
    return out;
}

bool drop_is_enclosed(const BandMatching& full, std::size_t drop) {
    const std::size_t m = full.size;
    const auto run = [&](const BandPair& p) {
        return full.direction == Direction::Ccw ? std::pair{p.minus, p.plus} : std::pair{p.plus, p.minus};
    };
    const auto inside = [m](std::pair<std::size_t, std::size_t> r, std::size_t x) {
        const std::size_t dx = (x + m - r.first) % m;
        return dx > 0 && dx < (r.second + m - r.first) % m;
    };
    const BandPair dropped = full.pairs.at(drop);
    for (std::size_t i = 0; i < full.pairs.size(); ++i) {
        if (i == drop) continue;
        const auto r = run(full.pairs[i]);
        if (inside(r, dropped.minus) && inside(r, dropped.plus)) return true;
    }
    return false;
}

Partition link_components_after(const BandMatching& full, std::size_t drop, ResidualRule rule) {
    if (drop >= full.pairs.size()) throw std::invalid_argument("dropped band index out of range");
    Partition p;
    p.block_of.assign(full.size, 0);
    for (const BandPair& pair : kept_pairs(full, drop))
        p.block_of[pair.minus] = p.block_of[pair.plus] = p.block_count++;
    const BandPair left = full.pairs[drop];
    if (rule == ResidualRule::Corrected) {
        p.block_of[left.minus] = p.block_of[left.plus] = p.block_count++;
        ++p.block_count;  // residual component no foot reaches
    } else {
        p.block_of[left.minus] = p.block_count++;
        p.block_of[left.plus] = p.block_count++;
    }
    return p;
}

namespace {

std::string check_run(const StageRun& run, const BandPair& leftover, Direction family,
                      bool& residual_self_band) {
    if (run.first_non_fusion) {
        const BandPair& b = run.order[*run.first_non_fusion];
        const auto on_leftover = [&](std::size_t v) { return v == leftover.minus || v == leftover.plus; };
        if (on_leftover(b.minus) && on_leftover(b.plus)) {
            residual_self_band = true;
            return std::string(1, family_letter(family)) + " band (" + std::to_string(b.minus) + "," +
                   std::to_string(b.plus) + ") has both feet on the shared residual component";
        }
        return std::string(1, family_letter(family)) + " band (" + std::to_string(b.minus) + "," +
               std::to_string(b.plus) + ") is not a fusion";
    }
    if (run.final_count() != 2)
        return "ends with " + std::to_string(run.final_count()) + " components, expected 2";
    return {};
}

}  // namespace

LinkTrial run_link_trial(const SignSeq& seq, std::size_t drop_a, std::size_t drop_b,
                         ResidualRule rule) {
    if (auto v = validate(seq, Mode::EvenLink)) throw std::invalid_argument(v->message);
    LinkTrial t;
    t.seq = seq;
    t.n = seq.size() / 2;
    if (drop_a >= t.n || drop_b >= t.n) throw std::invalid_argument("drop index must be below n");
    t.drop_a = drop_a;
    t.drop_b = drop_b;
    t.matching_a = pair_iterative(seq, Direction::Ccw);
    t.matching_b = pair_iterative(seq, Direction::Cw);
    t.drop_a_enclosed = drop_is_enclosed(t.matching_a, drop_a);
    t.drop_b_enclosed = drop_is_enclosed(t.matching_b, drop_b);
    t.after_a = link_components_after(t.matching_a, drop_a, rule);
    t.after_b = link_components_after(t.matching_b, drop_b, rule);
    t.b_onto_a = attach_bands_sequentially(t.after_a, kept_pairs(t.matching_b, drop_b));
    t.a_onto_b = attach_bands_sequentially(t.after_b, kept_pairs(t.matching_a, drop_a));

    std::string reason = check_run(t.b_onto_a, t.matching_a.pairs[drop_a], Direction::Cw,
                                   t.residual_self_band);
    if (!reason.empty()) {
        reason = "B onto L*A: " + reason;
    } else {
        reason = check_run(t.a_onto_b, t.matching_b.pairs[drop_b], Direction::Ccw,
                           t.residual_self_band);
        if (!reason.empty()) reason = "A onto L*B: " + reason;
    }
    t.passes = reason.empty();
    t.reason = t.passes ? "both directions reach the 2-component unlink by fusions" : reason;
    return t;
}

bool is_alternating(const SignSeq& seq) {
    for (std::size_t i = 0; i < seq.size(); ++i)
        if (seq[i] == seq[(i + 1) % seq.size()]) return false;
    return true;
}

LinkReport explore_link_case(std::size_t n, ResidualRule rule, std::size_t jobs) {
    if (n == 0) throw std::invalid_argument("link exploration needs n >= 1");
    const std::vector<SignSeq> all = enumerate_balanced(n, Mode::EvenLink);

    LinkReport report;
    report.n = n;
    report.rule = rule;
    report.sequences = parallel_map(all.size(), jobs, [&](std::size_t i) {
        LinkSequenceResult r;
        r.seq = all[i];
        r.class_rep = canonical_form(all[i]).representative;
        r.alternating = is_alternating(all[i]);
        for (std::size_t da = 0; da < n; ++da) {
            for (std::size_t db = 0; db < n; ++db) {
                const LinkTrial t = run_link_trial(all[i], da, db, rule);
                if (t.passes) r.passing.emplace_back(da, db);
                r.reasons.push_back(t.reason);
            }
        }
        return r;
    });

    std::map<SignSeq, LinkClassSummary> classes;
    for (const LinkSequenceResult& r : report.sequences) {
        LinkClassSummary& c = classes[r.class_rep];
        c.rep = r.class_rep;
        c.alternating = r.alternating;
        ++c.sequences;
        if (!r.passing.empty()) ++c.passing_sequences;
        c.passing_choices += r.passing.size();
    }
    report.matches_conjecture = true;
    for (auto& [rep, c] : classes) {
        const bool conforming = c.alternating ? c.passing_sequences == c.sequences
                                              : c.passing_sequences == 0;
        if (!conforming) {
            report.matches_conjecture = false;
            report.nonconforming.push_back(rep.str());
        }
        report.classes.push_back(c);
    }
    return report;
}

}  // namespace pretzel
