#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pretzel {

// Twist-box sign. Plus orders before Minus so that lexicographic order on
// sequences lists "+" first.
enum class Sign : std::uint8_t { Plus = 0, Minus = 1 };

constexpr char to_char(Sign s) noexcept { return s == Sign::Plus ? '+' : '-'; }

// Odd knot: 2n+1 boxes, n+1 plus and n minus. Even link: 2n boxes, n of each.
enum class Mode { OddKnot, EvenLink };

std::string_view to_string(Mode mode) noexcept;

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Cyclic sequence of twist-box signs. Index i+1 (mod size) is the
/// counterclockwise neighbour of index i.
class SignSeq {
public:
    SignSeq() = default;
    explicit SignSeq(std::vector<Sign> signs);

    /// Parses a string over {+,-}. Throws ParseError on any other character
    /// or on an empty string.
    static SignSeq parse(std::string_view text);

    std::size_t size() const noexcept { return signs_.size(); }
    bool empty() const noexcept { return signs_.empty(); }

    Sign operator[](std::size_t i) const noexcept { return signs_[i]; }
    // Cyclic access; any integer is reduced mod size().
    Sign at_cyclic(long long i) const noexcept;
    std::size_t wrap(long long i) const noexcept;

    bool is_plus(std::size_t i) const noexcept { return signs_[i] == Sign::Plus; }
    bool is_minus(std::size_t i) const noexcept { return signs_[i] == Sign::Minus; }

    std::size_t plus_count() const noexcept;
    std::size_t minus_count() const noexcept;

    std::span<const Sign> signs() const noexcept { return signs_; }

    SignSeq rotated(std::size_t shift) const;  // result[i] = this[i + shift]
    SignSeq reflected() const;                 // result[i] = this[-i]
    SignSeq reversed() const;                  // result[i] = this[m-1-i]

    std::string str() const;

    friend bool operator==(const SignSeq&, const SignSeq&) = default;
    friend auto operator<=>(const SignSeq&, const SignSeq&) = default;

private:
    std::vector<Sign> signs_;
};

struct Violation {
    Mode mode;
    std::size_t length = 0;
    std::size_t plus = 0;
    std::size_t minus = 0;
    std::string message;
};

/// Empty optional when the sign counts fit the mode.
std::optional<Violation> validate(const SignSeq& seq, Mode mode);

/// Mode implied by the length parity (odd length -> knot).
Mode natural_mode(const SignSeq& seq) noexcept;

/// Number of balanced sequences of the mode: C(2n+1, n) or C(2n, n).
std::uint64_t balanced_count(std::size_t n, Mode mode);

/// Calls `visit` on every balanced sequence for n in lexicographic order
/// ('+' < '-'). Returning false from `visit` stops the enumeration.
void for_each_balanced(std::size_t n, Mode mode,
                       const std::function<bool(const SignSeq&)>& visit);

std::vector<SignSeq> enumerate_balanced(std::size_t n, Mode mode);

/// Which dihedral symmetry maps the input to its canonical representative:
/// canonical = (reflect ? input.reflected() : input).rotated(rotation).
struct Symmetry {
    std::size_t rotation = 0;
    bool reflected = false;

    std::string str() const;
    friend bool operator==(const Symmetry&, const Symmetry&) = default;
};

struct CanonicalForm {
    SignSeq representative;
    Symmetry symmetry;
};

/// Lexicographically least rotation or reflection. Ties resolve to the
/// smallest rotation, unreflected first.
CanonicalForm canonical_form(const SignSeq& seq);

/// Size of the dihedral orbit of seq (number of distinct images).
std::size_t orbit_size(const SignSeq& seq);

}  // namespace pretzel
