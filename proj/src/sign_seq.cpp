#include "pretzel/sign_seq.hpp"

#include <algorithm>
#include <set>

namespace pretzel {

std::string_view to_string(Mode mode) noexcept {
    return mode == Mode::OddKnot ? "odd-knot" : "even-link";
}

SignSeq::SignSeq(std::vector<Sign> signs) : signs_(std::move(signs)) {}

SignSeq SignSeq::parse(std::string_view text) {
    if (text.empty()) throw ParseError("empty sign sequence");
    std::vector<Sign> signs;
    signs.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
            case '+': signs.push_back(Sign::Plus); break;
            case '-': signs.push_back(Sign::Minus); break;
            default:
                throw ParseError("invalid character '" + std::string(1, text[i]) +
                                 "' at position " + std::to_string(i) +
                                 " (expected '+' or '-')");
        }
    }
    return SignSeq(std::move(signs));
}

std::size_t SignSeq::wrap(long long i) const noexcept {
    const auto m = static_cast<long long>(signs_.size());
    return static_cast<std::size_t>(((i % m) + m) % m);
}

Sign SignSeq::at_cyclic(long long i) const noexcept { return signs_[wrap(i)]; }

std::size_t SignSeq::plus_count() const noexcept {
    return static_cast<std::size_t>(std::count(signs_.begin(), signs_.end(), Sign::Plus));
}

std::size_t SignSeq::minus_count() const noexcept { return size() - plus_count(); }

SignSeq SignSeq::rotated(std::size_t shift) const {
    std::vector<Sign> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = signs_[(i + shift) % size()];
    return SignSeq(std::move(out));
}

SignSeq SignSeq::reflected() const {
    std::vector<Sign> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = signs_[(size() - i) % size()];
    return SignSeq(std::move(out));
}

SignSeq SignSeq::reversed() const {
    return SignSeq(std::vector<Sign>(signs_.rbegin(), signs_.rend()));
}

std::string SignSeq::str() const {
    std::string out;
    out.reserve(size());
    for (Sign s : signs_) out.push_back(to_char(s));
    return out;
}

std::optional<Violation> validate(const SignSeq& seq, Mode mode) {
    Violation v{mode, seq.size(), seq.plus_count(), seq.minus_count(), {}};
    const bool odd = seq.size() % 2 == 1;
    if (seq.empty()) {
        v.message = "sequence is empty";
        return v;
    }
    const std::string counts = std::to_string(v.plus) + " plus, " + std::to_string(v.minus) +
                               " minus, length " + std::to_string(v.length) +
                               (odd ? " (odd)" : " (even)");
    if (mode == Mode::OddKnot) {
        if (!odd || v.plus != v.minus + 1) {
            v.message = "odd-knot mode needs length 2n+1 with n+1 plus and n minus; got " + counts;
            return v;
        }
    } else {
        if (odd || v.plus != v.minus) {
            v.message = "even-link mode needs length 2n with n plus and n minus; got " + counts;
            return v;
        }
    }
    return std::nullopt;
}

Mode natural_mode(const SignSeq& seq) noexcept {
    return seq.size() % 2 == 1 ? Mode::OddKnot : Mode::EvenLink;
}

std::uint64_t balanced_count(std::size_t n, Mode mode) {
    const std::uint64_t m = mode == Mode::OddKnot ? 2 * n + 1 : 2 * n;
    std::uint64_t c = 1;
    for (std::uint64_t i = 1; i <= n; ++i) c = c * (m - n + i) / i;
    return c;
}

void for_each_balanced(std::size_t n, Mode mode,
                       const std::function<bool(const SignSeq&)>& visit) {
    const std::size_t plus = mode == Mode::OddKnot ? n + 1 : n;
    if (plus + n == 0) return;
    std::vector<Sign> signs(plus, Sign::Plus);
    signs.insert(signs.end(), n, Sign::Minus);
    do {
        if (!visit(SignSeq(signs))) return;
    } while (std::next_permutation(signs.begin(), signs.end()));
}

std::vector<SignSeq> enumerate_balanced(std::size_t n, Mode mode) {
    std::vector<SignSeq> out;
    out.reserve(balanced_count(n, mode));
    for_each_balanced(n, mode, [&](const SignSeq& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

std::string Symmetry::str() const {
    return (reflected ? "reflect+rotate(" : "rotate(") + std::to_string(rotation) + ")";
}

CanonicalForm canonical_form(const SignSeq& seq) {
    const std::size_t m = seq.size();
    // Image i-th entry under (rotation r, reflect) without materialising it.
    const auto at = [&](Symmetry s, std::size_t i) {
        return s.reflected ? seq[(2 * m - i - s.rotation) % m] : seq[(i + s.rotation) % m];
    };
    Symmetry best{};
    for (bool reflect : {false, true}) {
        for (std::size_t r = 0; r < m; ++r) {
            const Symmetry cand{r, reflect};
            for (std::size_t i = 0; i < m; ++i) {
                const Sign x = at(cand, i), y = at(best, i);
                if (x == y) continue;
                if (x < y) best = cand;
                break;
            }
        }
    }
    std::vector<Sign> rep(m);
    for (std::size_t i = 0; i < m; ++i) rep[i] = at(best, i);
    return {SignSeq(std::move(rep)), best};
}

std::size_t orbit_size(const SignSeq& seq) {
    std::set<SignSeq> images;
    const SignSeq mirror = seq.reflected();
    for (std::size_t r = 0; r < seq.size(); ++r) {
        images.insert(seq.rotated(r));
        images.insert(mirror.rotated(r));
    }
    return images.size();
}

}  // namespace pretzel
