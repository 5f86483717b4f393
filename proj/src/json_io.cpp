#include "pretzel/json_io.hpp"

#include <stdexcept>

namespace pretzel {

Json to_json(const BandMatching& matching) {
    Json pairs = Json::array();
    for (const BandPair& p : matching.pairs) pairs.push_back({p.minus, p.plus});
    Json j;
    j["direction"] = std::string(1, family_letter(matching.direction));
    j["pairs"] = std::move(pairs);
    j["unmatched"] = matching.unmatched;
    j["stages"] = matching.stages;
    return j;
}

BandMatching matching_from_json(const Json& j, std::size_t size) {
    BandMatching m;
    const std::string dir = j.at("direction").get<std::string>();
    if (dir != "A" && dir != "B") throw std::invalid_argument("direction must be \"A\" or \"B\"");
    m.direction = dir == "A" ? Direction::Ccw : Direction::Cw;
    m.size = size;
    for (const auto& p : j.at("pairs")) m.pairs.push_back({p.at(0).get<std::size_t>(), p.at(1).get<std::size_t>()});
    m.unmatched = j.at("unmatched").get<std::vector<std::size_t>>();
    m.stages = j.at("stages").get<std::vector<std::size_t>>();
    return m;
}

Json to_json(const PathVerdict& verdict) {
    Json j;
    j["is_path"] = verdict.is_path;
    if (verdict.is_path) {
        j["path"] = verdict.path;
    } else {
        j["reason"] = verdict.reason;
        if (!verdict.cycle.empty()) j["cycle"] = verdict.cycle;
        if (!verdict.components.empty()) j["components"] = verdict.components;
    }
    return j;
}

Json to_json(const Partition& partition) {
    Json j;
    j["block_of"] = partition.block_of;
    j["blocks"] = partition.blocks();
    return j;
}

Json to_json(const StageRun& run) {
    Json order = Json::array();
    for (const BandPair& p : run.order) order.push_back({p.minus, p.plus});
    Json j;
    j["order"] = std::move(order);
    j["counts"] = run.counts;
    j["fusion"] = run.fusion;
    return j;
}

Json to_json(const SliceCertificate& cert) {
    Json j;
    j["sequence"] = cert.seq.str();
    j["n"] = cert.n;
    j["matching_A"] = to_json(cert.matching_a);
    j["matching_B"] = to_json(cert.matching_b);
    j["graph"] = to_json(cert.path);
    j["components_after_A"] = to_json(cert.after_a);
    j["components_after_B"] = to_json(cert.after_b);
    j["stages_B_onto_A"] = to_json(cert.b_onto_a);
    j["stages_A_onto_B"] = to_json(cert.a_onto_b);
    j["random_orders_checked"] = cert.random_orders_checked;
    j["order_invariant"] = cert.order_invariant;
    j["verdict"] = cert.certified() ? "certified" : "failed";
    j["reason"] = cert.reason;
    return j;
}

Json to_json(const LinkReport& report) {
    Json j;
    j["n"] = report.n;
    j["rule"] = std::string(to_string(report.rule));
    j["note"] = "conjecture evidence only; weak double slicing is out of scope";
    Json seqs = Json::array();
    for (const LinkSequenceResult& r : report.sequences) {
        Json passing = Json::array();
        for (auto [a, b] : r.passing) passing.push_back({a, b});
        Json s;
        s["sequence"] = r.seq.str();
        s["class"] = r.class_rep.str();
        s["alternating"] = r.alternating;
        s["passing_drops"] = std::move(passing);
        seqs.push_back(std::move(s));
    }
    Json classes = Json::array();
    for (const LinkClassSummary& c : report.classes) {
        Json s;
        s["class"] = c.rep.str();
        s["alternating"] = c.alternating;
        s["sequences"] = c.sequences;
        s["passing_sequences"] = c.passing_sequences;
        s["passing_choices"] = c.passing_choices;
        classes.push_back(std::move(s));
    }
    j["sequences"] = std::move(seqs);
    j["classes"] = std::move(classes);
    j["matches_conjecture"] = report.matches_conjecture;
    j["nonconforming_classes"] = report.nonconforming;
    return j;
}

}  // namespace pretzel
