#include "pretzel/certifier.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "pretzel/disjoint_set.hpp"

namespace pretzel {

std::vector<std::vector<std::size_t>> Partition::blocks() const {
    std::vector<std::vector<std::size_t>> out(block_count);
    for (std::size_t v = 0; v < block_of.size(); ++v) out[block_of[v]].push_back(v);
    return out;
}

Partition components_after(const BandMatching& matching) {
    Partition p;
    p.block_of.assign(matching.size, 0);
    for (const BandPair& pair : matching.pairs) {
        p.block_of[pair.minus] = p.block_of[pair.plus] = p.block_count++;
    }
    for (std::size_t v : matching.unmatched) p.block_of[v] = p.block_count++;
    return p;
}

StageRun attach_bands_sequentially(const Partition& base, std::span<const BandPair> order) {
    StageRun run;
    run.order.assign(order.begin(), order.end());
    DisjointSet blocks(base.block_count);
    run.counts.push_back(blocks.set_count());
    for (std::size_t k = 0; k < order.size(); ++k) {
        const BandPair& band = order[k];
        const bool fused = blocks.unite(base.block_of[band.minus], base.block_of[band.plus]);
        run.fusion.push_back(fused);
        if (!fused) {
            run.counts.push_back(run.counts.back() + 1);
            run.first_non_fusion = k;
            break;
        }
        run.counts.push_back(blocks.set_count());
    }
    return run;
}

namespace {

std::string describe(const BandPair& p, Direction d) {
    return std::string(1, family_letter(d)) + "(" + std::to_string(p.minus) + "," +
           std::to_string(p.plus) + ")";
}

// Empty string when the run descends n+1, n, ..., 1 through fusions only.
std::string check_descent(const StageRun& run, std::size_t n, Direction band_family) {
    if (run.first_non_fusion) {
        return "band " + describe(run.order[*run.first_non_fusion], band_family) +
               " joins a component to itself";
    }
    for (std::size_t k = 0; k < run.counts.size(); ++k) {
        if (run.counts[k] != n + 1 - k)
            return "stage " + std::to_string(k) + " has " + std::to_string(run.counts[k]) +
                   " components, expected " + std::to_string(n + 1 - k);
    }
    if (run.counts.size() != n + 1) return "wrong number of bands";
    return {};
}

}  // namespace

SliceCertificate certify(const SignSeq& seq, const CertifyOptions& options) {
    if (auto v = validate(seq, Mode::OddKnot)) throw std::invalid_argument(v->message);

    SliceCertificate cert;
    cert.seq = seq;
    cert.n = seq.minus_count();
    cert.matching_a = pair_iterative(seq, Direction::Ccw);
    cert.matching_b = pair_iterative(seq, Direction::Cw);
    cert.path = is_path(build_graph(seq, cert.matching_a, cert.matching_b));
    cert.after_a = components_after(cert.matching_a);
    cert.after_b = components_after(cert.matching_b);
    cert.b_onto_a = attach_bands_sequentially(cert.after_a, cert.matching_b.pairs);
    cert.a_onto_b = attach_bands_sequentially(cert.after_b, cert.matching_a.pairs);

    std::mt19937_64 rng(options.seed);
    for (std::size_t t = 0; t < options.random_orders; ++t) {
        for (bool b_first : {true, false}) {
            const BandMatching& bands = b_first ? cert.matching_b : cert.matching_a;
            const StageRun& canonical = b_first ? cert.b_onto_a : cert.a_onto_b;
            std::vector<BandPair> order = bands.pairs;
            std::shuffle(order.begin(), order.end(), rng);
            const StageRun run =
                attach_bands_sequentially(b_first ? cert.after_a : cert.after_b, order);
            if (run.counts != canonical.counts || run.fusion != canonical.fusion)
                cert.order_invariant = false;
        }
        ++cert.random_orders_checked;
    }

    const std::size_t n = cert.n;
    std::string reason;
    if (!cert.path.is_path) {
        reason = "auxiliary graph is not a path: " + cert.path.reason;
    } else if (cert.after_a.block_count != n + 1 || cert.after_b.block_count != n + 1) {
        reason = "K*A or K*B does not have n+1 components";
    } else if (auto r = check_descent(cert.b_onto_a, n, Direction::Cw); !r.empty()) {
        reason = "B onto K*A: " + r;
    } else if (auto r2 = check_descent(cert.a_onto_b, n, Direction::Ccw); !r2.empty()) {
        reason = "A onto K*B: " + r2;
    } else if (!cert.order_invariant) {
        reason = "stage counts depend on band order";
    }
    cert.verdict = reason.empty() ? Verdict::Certified : Verdict::Failed;
    cert.reason = reason.empty() ? "all conditions hold" : reason;
    return cert;
}

}  // namespace pretzel
