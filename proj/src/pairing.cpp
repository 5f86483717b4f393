#include "pretzel/pairing.hpp"

#include <algorithm>
#include <stdexcept>

namespace pretzel {

namespace {

void require_balanced(const SignSeq& seq) {
    if (auto v = validate(seq, natural_mode(seq))) throw std::invalid_argument(v->message);
}

// Survivors of the cancellation, as a cyclic doubly linked list.
class Ring {
public:
    explicit Ring(std::size_t m) : next_(m), prev_(m), alive_(m, true) {
        for (std::size_t i = 0; i < m; ++i) {
            next_[i] = (i + 1) % m;
            prev_[i] = (i + m - 1) % m;
        }
    }
    std::size_t next(std::size_t v) const { return next_[v]; }
    bool alive(std::size_t v) const { return alive_[v]; }
    void erase_adjacent(std::size_t a, std::size_t b) {  // b == next(a)
        const std::size_t before = prev_[a];
        const std::size_t after = next_[b];
        next_[before] = after;
        prev_[after] = before;
        alive_[a] = alive_[b] = false;
    }

private:
    std::vector<std::size_t> next_, prev_;
    std::vector<bool> alive_;
};

std::vector<BandPair> cancellable(const SignSeq& seq, const Ring& ring) {
    std::vector<BandPair> out;
    for (std::size_t v = 0; v < seq.size(); ++v) {
        if (!ring.alive(v) || !seq.is_minus(v)) continue;
        const std::size_t w = ring.next(v);
        if (w != v && seq.is_plus(w)) out.push_back({v, w});
    }
    return out;
}

void finish(BandMatching& out, const SignSeq& seq, std::vector<std::size_t> stage_of_minus) {
    std::sort(out.pairs.begin(), out.pairs.end());
    std::vector<bool> used(seq.size(), false);
    out.stages.clear();
    for (const BandPair& p : out.pairs) {
        used[p.minus] = used[p.plus] = true;
        if (!stage_of_minus.empty()) out.stages.push_back(stage_of_minus[p.minus]);
    }
    out.unmatched.clear();
    for (std::size_t v = 0; v < seq.size(); ++v)
        if (!used[v]) out.unmatched.push_back(v);
}

template <typename Select>
BandMatching cancel_ccw(const SignSeq& seq, Select select) {
    const std::size_t m = seq.size();
    BandMatching out;
    out.direction = Direction::Ccw;
    out.size = m;
    Ring ring(m);
    std::vector<std::size_t> stage_of_minus(m, 0);
    std::size_t remaining_minus = seq.minus_count();
    std::size_t stage = 0;
    while (remaining_minus > 0) {
        std::vector<BandPair> batch = select(cancellable(seq, ring));
        if (batch.empty())
            throw std::logic_error("cancellation stalled on " + seq.str());
        ++stage;
        for (const BandPair& p : batch) {
            ring.erase_adjacent(p.minus, p.plus);
            stage_of_minus[p.minus] = stage;
            out.pairs.push_back(p);
            --remaining_minus;
        }
    }
    finish(out, seq, std::move(stage_of_minus));
    return out;
}

// Clockwise cancellation is counterclockwise cancellation of the reversed
// sequence, with indices mapped back.
BandMatching mirror_back(const BandMatching& rev, std::size_t m) {
    BandMatching out;
    out.direction = Direction::Cw;
    out.size = m;
    std::vector<std::pair<BandPair, std::size_t>> staged;
    for (std::size_t i = 0; i < rev.pairs.size(); ++i) {
        const BandPair p{m - 1 - rev.pairs[i].minus, m - 1 - rev.pairs[i].plus};
        staged.emplace_back(p, rev.stages.empty() ? 0 : rev.stages[i]);
    }
    std::sort(staged.begin(), staged.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [p, s] : staged) {
        out.pairs.push_back(p);
        if (!rev.stages.empty()) out.stages.push_back(s);
    }
    for (auto it = rev.unmatched.rbegin(); it != rev.unmatched.rend(); ++it)
        out.unmatched.push_back(m - 1 - *it);
    return out;
}

template <typename Select>
BandMatching cancel(const SignSeq& seq, Direction direction, Select select) {
    require_balanced(seq);
    if (direction == Direction::Ccw) return cancel_ccw(seq, select);
    return mirror_back(cancel_ccw(seq.reversed(), select), seq.size());
}

}  // namespace

bool BandMatching::same_pairing(const BandMatching& other) const {
    return direction == other.direction && size == other.size && pairs == other.pairs &&
           unmatched == other.unmatched;
}

std::size_t BandMatching::partner(std::size_t v) const {
    for (const BandPair& p : pairs) {
        if (p.minus == v) return p.plus;
        if (p.plus == v) return p.minus;
    }
    return size;
}

BandMatching pair_iterative(const SignSeq& seq, Direction direction) {
    return cancel(seq, direction, [](std::vector<BandPair> all) { return all; });
}

BandMatching pair_iterative_randomized(const SignSeq& seq, Direction direction,
                                       std::mt19937_64& rng) {
    return cancel(seq, direction, [&rng](std::vector<BandPair> all) {
        if (all.empty()) return all;
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        return std::vector<BandPair>{all[pick(rng)]};
    });
}

BandMatching pair_balanced(const SignSeq& seq, Direction direction) {
    require_balanced(seq);
    const std::size_t m = seq.size();
    const long long step = direction == Direction::Ccw ? 1 : -1;
    BandMatching out;
    out.direction = direction;
    out.size = m;
    for (std::size_t v = 0; v < m; ++v) {
        if (!seq.is_minus(v)) continue;
        long long balance = 0;  // plus minus minus over the open gap
        bool found = false;
        for (std::size_t d = 1; d < m && !found; ++d) {
            const std::size_t j = seq.wrap(static_cast<long long>(v) + step * static_cast<long long>(d));
            if (seq.is_plus(j) && balance == 0) {
                out.pairs.push_back({v, j});
                found = true;
            }
            balance += seq.is_plus(j) ? 1 : -1;
        }
        if (!found) throw std::logic_error("no balanced partner for vertex " + std::to_string(v));
    }
    finish(out, seq, {});
    return out;
}

std::string Site::str() const {
    return std::string(layer == Layer::Top ? "top" : "bottom") + "[" + std::to_string(gap) + "]." +
           std::to_string(slot);
}

std::vector<BandFeet> feet_placement(const BandMatching& matching) {
    const std::size_t m = matching.size;
    const Layer layer = layer_of(matching.direction);
    std::vector<BandFeet> out;
    out.reserve(matching.pairs.size());
    for (const BandPair& p : matching.pairs) {
        // Each band spans the boxes from `start` to `end` counterclockwise and
        // has one foot just outside each end of that run.
        const bool ccw = matching.direction == Direction::Ccw;
        const std::size_t start = ccw ? p.minus : p.plus;
        const std::size_t end = ccw ? p.plus : p.minus;
        const Site before_start{layer, (start + m - 1) % m, kNearEnd};
        const Site after_end{layer, end, kNearStart};
        BandFeet f{matching.direction, p, {}, {}};
        f.minus_foot = ccw ? before_start : after_end;
        f.plus_foot = ccw ? after_end : before_start;
        out.push_back(f);
    }
    return out;
}

namespace {
// Is x strictly inside the counterclockwise run from a to b?
bool strictly_between_ccw(std::size_t m, std::size_t a, std::size_t b, std::size_t x) {
    const std::size_t dx = (x + m - a) % m;
    const std::size_t db = (b + m - a) % m;
    return dx > 0 && dx < db;
}
}  // namespace

bool is_noncrossing(const BandMatching& matching) {
    const std::size_t m = matching.size;
    const auto& ps = matching.pairs;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        for (std::size_t j = i + 1; j < ps.size(); ++j) {
            const bool c_in = strictly_between_ccw(m, ps[i].minus, ps[i].plus, ps[j].minus);
            const bool d_in = strictly_between_ccw(m, ps[i].minus, ps[i].plus, ps[j].plus);
            if (c_in != d_in) return false;
        }
    }
    return true;
}

std::vector<std::size_t> pair_gap(std::size_t size, const BandPair& pair, Direction direction) {
    std::vector<std::size_t> out;
    const std::size_t step = direction == Direction::Ccw ? 1 : size - 1;
    for (std::size_t v = (pair.minus + step) % size; v != pair.plus; v = (v + step) % size)
        out.push_back(v);
    return out;
}

bool gap_is_balanced(const SignSeq& seq, const BandPair& pair, Direction direction) {
    long long balance = 0;
    for (std::size_t v : pair_gap(seq.size(), pair, direction)) balance += seq.is_plus(v) ? 1 : -1;
    return balance == 0;
}

}  // namespace pretzel
