#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pretzel/certifier.hpp"
#include "pretzel/pairing.hpp"
#include "pretzel/sign_seq.hpp"

namespace pretzel {

// How the two boxes left over after n-1 cancellations map to the two
// components of the residual P(a,-a).
//   Corrected: both leftover boxes reach the same residual component; the
//              other residual component is reached by no band foot.
//   Naive:     each leftover box gets its own residual component.
enum class ResidualRule { Corrected, Naive };

std::string_view to_string(ResidualRule rule) noexcept;

/// K*(full matching minus pair `drop`) for an even-link sequence: n-1 pair
/// blocks (in pair order), then the residual blocks. Always n+1 blocks.
Partition link_components_after(const BandMatching& full, std::size_t drop, ResidualRule rule);

/// True when some other pair's run (minus to plus for A, plus to minus for B,
/// counterclockwise) strictly contains the dropped pair. The enclosing band
/// then does not cancel adjacent boxes, and the box-to-component map of the
/// residual rule is no longer exact foot by foot.
bool drop_is_enclosed(const BandMatching& full, std::size_t drop);

/// Matching with pair `drop` removed.
std::vector<BandPair> kept_pairs(const BandMatching& full, std::size_t drop);

struct LinkTrial {
    SignSeq seq;
    std::size_t n = 0;
    std::size_t drop_a = 0;  // index into the A pairs
    std::size_t drop_b = 0;  // index into the B pairs
    BandMatching matching_a;
    BandMatching matching_b;
    Partition after_a;
    Partition after_b;
    StageRun b_onto_a;
    StageRun a_onto_b;
    bool residual_self_band = false;  // some band has both ends on leftover boxes
    bool drop_a_enclosed = false;
    bool drop_b_enclosed = false;
    bool passes = false;
    std::string reason;
};

/// Both directions must fuse at every kept band and end on exactly two
/// components. Throws std::invalid_argument unless seq is a balanced even-link
/// sequence with n >= 1 and both drop indices < n.
LinkTrial run_link_trial(const SignSeq& seq, std::size_t drop_a, std::size_t drop_b,
                         ResidualRule rule = ResidualRule::Corrected);

/// No two cyclically adjacent boxes share a sign.
bool is_alternating(const SignSeq& seq);

struct LinkSequenceResult {
    SignSeq seq;
    SignSeq class_rep;
    bool alternating = false;
    std::vector<std::pair<std::size_t, std::size_t>> passing;  // (drop_a, drop_b)
    std::vector<std::string> reasons;                          // per choice, row-major
};

struct LinkClassSummary {
    SignSeq rep;
    bool alternating = false;
    std::size_t sequences = 0;
    std::size_t passing_sequences = 0;
    std::size_t passing_choices = 0;
};

struct LinkReport {
    std::size_t n = 0;
    ResidualRule rule = ResidualRule::Corrected;
    std::vector<LinkSequenceResult> sequences;  // lexicographic
    std::vector<LinkClassSummary> classes;      // by representative
    /// Passing set nonempty exactly for the alternating class.
    bool matches_conjecture = false;
    std::vector<std::string> nonconforming;  // class representatives breaking the pattern
};

/// Every balanced even-link sequence of length 2n, every pair of dropped
/// bands. `jobs` > 1 spreads sequences over threads; output order is fixed.
LinkReport explore_link_case(std::size_t n, ResidualRule rule = ResidualRule::Corrected,
                             std::size_t jobs = 1);

}  // namespace pretzel
