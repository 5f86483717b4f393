#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pretzel/certifier.hpp"
#include "pretzel/diagram_sim.hpp"
#include "pretzel/link_explorer.hpp"

namespace pretzel {

/// Literal surgery on the diagram compared against the bookkeeping for one
/// direction: first bands build the unlink, then the opposite bands attach.
struct DirectionAgreement {
    std::vector<std::size_t> predicted;   // bookkeeping counts, opposite bands
    std::vector<std::size_t> simulated;   // diagram counts for the same bands
    std::vector<std::size_t> first_pass;  // diagram counts while building the base
    bool counts_agree = false;
    bool blocks_agree = false;  // vertex blocks match diagram components foot by foot
    bool blocks_required = true;
    std::string detail;
};

struct AgreementReport {
    SignSeq seq;
    std::size_t base_count = 0;
    DirectionAgreement b_onto_a;
    DirectionAgreement a_onto_b;
    bool agrees = false;
};

/// Odd-knot cross-check: base count 1, A (or B) bands raise it to n+1 one at
/// a time, and the opposite bands then follow the certificate's counts.
AgreementReport check_knot_agreement(const SignSeq& seq);

/// Even-link cross-check for one (drop_a, drop_b) choice: base count 2, the
/// kept bands raise it to n+1, then the opposite kept bands follow the
/// trial's counts up to and including its first non-fusion. The foot-by-foot
/// block comparison is only required when the dropped band is not enclosed
/// by a kept one.
AgreementReport check_link_agreement(const LinkTrial& trial);

}  // namespace pretzel
