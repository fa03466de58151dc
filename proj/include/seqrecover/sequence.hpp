#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "seqrecover/rational.hpp"

namespace seqrecover {

enum class Bit : std::uint8_t { Zero = 0, One = 1 };

inline Bit flip(Bit b) { return b == Bit::Zero ? Bit::One : Bit::Zero; }
inline char to_char(Bit b) { return b == Bit::Zero ? '0' : '1'; }

/// One character of a sequence. Inputs are binary; queries may also carry the
/// edit-distance wildcard or a fraction strictly inside (0, 1).
class Symbol {
public:
    enum class Kind : std::uint8_t { Zero, One, Wildcard, Frac };

    constexpr Symbol() = default;
    constexpr Symbol(Bit b) : kind_(b == Bit::Zero ? Kind::Zero : Kind::One), num_(b == Bit::Zero ? 0 : 1) {}  // NOLINT

    static constexpr Symbol zero() { return Symbol(Bit::Zero); }
    static constexpr Symbol one() { return Symbol(Bit::One); }
    static constexpr Symbol wildcard() {
        Symbol s;
        s.kind_ = Kind::Wildcard;
        return s;
    }
    /// Fraction num/den, reduced; throws DomainError unless 0 < num/den < 1.
    static Symbol frac(std::int64_t num, std::int64_t den);
    static Symbol frac(const Rational& value);

    constexpr Kind kind() const noexcept { return kind_; }
    constexpr bool is_binary() const noexcept { return kind_ == Kind::Zero || kind_ == Kind::One; }
    constexpr bool is_numeric() const noexcept { return kind_ != Kind::Wildcard; }

    /// Only valid on binary symbols.
    Bit bit() const;

    /// Numeric value as num()/den(): 0/1, 1/1 or the fraction. Undefined for the wildcard.
    constexpr std::int64_t num() const noexcept { return num_; }
    constexpr std::int64_t den() const noexcept { return den_; }
    Rational value() const;

    /// "0", "1", "W" or "p/q".
    std::string token() const;

    friend constexpr bool operator==(const Symbol&, const Symbol&) = default;
    friend std::strong_ordering operator<=>(const Symbol& a, const Symbol& b);

private:
    Kind kind_ = Kind::Zero;
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Ordered list of symbols; possibly empty.
class Sequence {
public:
    Sequence() = default;
    Sequence(std::initializer_list<Symbol> symbols) : symbols_(symbols) {}
    explicit Sequence(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}

    /// Contiguous '0'/'1' text. Throws ParseError on anything else.
    static Sequence binary(std::string_view bits);
    static Sequence repeat(Symbol s, std::size_t count);
    /// 0101... or 1010... of the given length.
    static Sequence alternating(Bit first, std::size_t length);

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    const Symbol& operator[](std::size_t i) const { return symbols_[i]; }
    const Symbol& front() const { return symbols_.front(); }
    const Symbol& back() const { return symbols_.back(); }
    auto begin() const noexcept { return symbols_.begin(); }
    auto end() const noexcept { return symbols_.end(); }
    const std::vector<Symbol>& symbols() const noexcept { return symbols_; }

    void push_back(Symbol s) { symbols_.push_back(s); }
    Sequence& append(const Sequence& other);
    Sequence& append(Symbol s, std::size_t count);

    /// Half-open slice [from, to).
    Sequence slice(std::size_t from, std::size_t to) const;

    bool is_binary() const;
    bool has_wildcard() const;
    bool has_frac() const;
    std::size_t count(Symbol s) const;

    /// Bits of a binary sequence; throws DomainError otherwise.
    std::vector<Bit> bits() const;

    friend Sequence operator+(Sequence a, const Sequence& b) { return a.append(b); }
    friend bool operator==(const Sequence&, const Sequence&) = default;
    friend std::strong_ordering operator<=>(const Sequence& a, const Sequence& b);

private:
    std::vector<Symbol> symbols_;
};

/// First character plus the lengths of maximal runs. For the empty sequence
/// run_lengths is empty and first_char is meaningless.
struct RunDecomposition {
    Bit first_char = Bit::Zero;
    std::vector<std::size_t> run_lengths;

    std::size_t run_count() const noexcept { return run_lengths.size(); }
    friend bool operator==(const RunDecomposition&, const RunDecomposition&) = default;
};

RunDecomposition decompose_runs(const Sequence& s);
Sequence reconstruct(const RunDecomposition& runs);
std::size_t run_count(const Sequence& s);
Sequence condensed(const Sequence& s);

/// True iff x can be obtained from y by deleting characters.
bool is_subsequence(const Sequence& x, const Sequence& y);

/// Binary text is contiguous ("0110"); extended text is comma separated
/// tokens from {0, 1, W, p/q}. The empty string is the empty sequence.
Sequence parse(std::string_view text);
std::string format(const Sequence& s);

/// All binary sequences with min_len <= length <= max_len, length-major then
/// lexicographic (0 before 1).
std::vector<Sequence> all_binary_sequences(std::size_t min_len, std::size_t max_len);

}  // namespace seqrecover
