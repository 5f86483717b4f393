#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pretzel/aux_graph.hpp"
#include "pretzel/pairing.hpp"
#include "pretzel/sign_seq.hpp"

namespace pretzel {

/// Components of a link obtained by band surgery, with each twist box mapped
/// to the component its adjacent band feet land on. Blocks may be empty: a
/// component that no vertex reaches still counts.
struct Partition {
    std::vector<std::size_t> block_of;  // per vertex
    std::size_t block_count = 0;

    std::vector<std::vector<std::size_t>> blocks() const;
};

/// K*A (or K*B): one unknotted block per cancelled pair, in pair order,
/// followed by one block per unmatched vertex.
Partition components_after(const BandMatching& matching);

/// Component counts while bands are attached one at a time on top of `base`.
/// counts[0] is the base count and counts[k] follows the k-th band. A band
/// whose endpoints already share a component is a fission: the count rises by
/// one and the run stops there, since the resulting split is not tracked.
struct StageRun {
    std::vector<BandPair> order;
    std::vector<std::size_t> counts;
    std::vector<bool> fusion;
    std::optional<std::size_t> first_non_fusion;

    bool all_fusions() const { return !first_non_fusion.has_value(); }
    std::size_t final_count() const { return counts.back(); }
};

StageRun attach_bands_sequentially(const Partition& base, std::span<const BandPair> order);

enum class Verdict { Certified, Failed };

struct CertifyOptions {
    std::size_t random_orders = 0;  // extra shuffled band orders per direction
    std::uint64_t seed = 0x5eed;
};

struct SliceCertificate {
    SignSeq seq;
    std::size_t n = 0;
    BandMatching matching_a;
    BandMatching matching_b;
    PathVerdict path;
    Partition after_a;
    Partition after_b;
    StageRun b_onto_a;  // K*A*B_1*...*B_k
    StageRun a_onto_b;  // K*B*A_1*...*A_k
    std::size_t random_orders_checked = 0;
    bool order_invariant = true;
    Verdict verdict = Verdict::Failed;
    std::string reason;

    bool certified() const noexcept { return verdict == Verdict::Certified; }
};

/// Checks both band systems of an odd pretzel sequence: K*A = K*B has n+1
/// components, every opposite band fuses, and the counts fall n+1, n, ..., 1
/// in both directions. Throws std::invalid_argument unless seq is a balanced
/// odd-knot sequence.
SliceCertificate certify(const SignSeq& seq, const CertifyOptions& options = {});

}  // namespace pretzel
