#include "seqrecover/sequence.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "seqrecover/errors.hpp"

namespace seqrecover {

Symbol Symbol::frac(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DomainError("fraction with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num <= 0 || num >= den) {
        throw DomainError("fraction " + std::to_string(num) + "/" + std::to_string(den) +
                          " is not strictly between 0 and 1");
    }
    const std::int64_t g = std::gcd(num, den);
    Symbol s;
    s.kind_ = Kind::Frac;
    s.num_ = num / g;
    s.den_ = den / g;
    return s;
}

Symbol Symbol::frac(const Rational& value) {
    const mpz_class num = value.numerator();
    const mpz_class den = value.denominator();
    if (!num.fits_slong_p() || !den.fits_slong_p()) throw DomainError("fraction " + value.str() + " too large");
    return frac(num.get_si(), den.get_si());
}

Bit Symbol::bit() const {
    switch (kind_) {
        case Kind::Zero: return Bit::Zero;
        case Kind::One: return Bit::One;
        default: throw DomainError("symbol " + token() + " is not binary");
    }
}

Rational Symbol::value() const {
    if (kind_ == Kind::Wildcard) throw UnsupportedAlphabet("wildcard has no numeric value");
    return Rational(num_, den_);
}

std::string Symbol::token() const {
    switch (kind_) {
        case Kind::Zero: return "0";
        case Kind::One: return "1";
        case Kind::Wildcard: return "W";
        case Kind::Frac: return std::to_string(num_) + "/" + std::to_string(den_);
    }
    return "?";
}

std::strong_ordering operator<=>(const Symbol& a, const Symbol& b) {
    const bool aw = a.kind() == Symbol::Kind::Wildcard;
    const bool bw = b.kind() == Symbol::Kind::Wildcard;
    if (aw || bw) return aw == bw ? std::strong_ordering::equal : (aw ? std::strong_ordering::greater : std::strong_ordering::less);
    // Denominators are small positive integers; cross-multiplication fits in __int128.
    const __int128 lhs = static_cast<__int128>(a.num()) * b.den();
    const __int128 rhs = static_cast<__int128>(b.num()) * a.den();
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Sequence Sequence::binary(std::string_view bits) {
    Sequence s;
    s.symbols_.reserve(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '0') s.symbols_.push_back(Symbol::zero());
        else if (bits[i] == '1') s.symbols_.push_back(Symbol::one());
        else throw ParseError(std::string(1, bits[i]), i, "expected '0' or '1'");
    }
    return s;
}

Sequence Sequence::repeat(Symbol s, std::size_t count) {
    return Sequence(std::vector<Symbol>(count, s));
}

Sequence Sequence::alternating(Bit first, std::size_t length) {
    Sequence s;
    Bit b = first;
    for (std::size_t i = 0; i < length; ++i, b = flip(b)) s.push_back(b);
    return s;
}

Sequence& Sequence::append(const Sequence& other) {
    symbols_.insert(symbols_.end(), other.symbols_.begin(), other.symbols_.end());
    return *this;
}

Sequence& Sequence::append(Symbol s, std::size_t count) {
    symbols_.insert(symbols_.end(), count, s);
    return *this;
}

Sequence Sequence::slice(std::size_t from, std::size_t to) const {
    to = std::min(to, symbols_.size());
    if (from >= to) return {};
    return Sequence(std::vector<Symbol>(symbols_.begin() + static_cast<std::ptrdiff_t>(from),
                                        symbols_.begin() + static_cast<std::ptrdiff_t>(to)));
}

bool Sequence::is_binary() const {
    return std::all_of(symbols_.begin(), symbols_.end(), [](const Symbol& s) { return s.is_binary(); });
}

bool Sequence::has_wildcard() const {
    return std::any_of(symbols_.begin(), symbols_.end(),
                       [](const Symbol& s) { return s.kind() == Symbol::Kind::Wildcard; });
}

bool Sequence::has_frac() const {
    return std::any_of(symbols_.begin(), symbols_.end(),
                       [](const Symbol& s) { return s.kind() == Symbol::Kind::Frac; });
}

std::size_t Sequence::count(Symbol s) const {
    return static_cast<std::size_t>(std::count(symbols_.begin(), symbols_.end(), s));
}

std::vector<Bit> Sequence::bits() const {
    std::vector<Bit> out;
    out.reserve(symbols_.size());
    for (const auto& s : symbols_) out.push_back(s.bit());
    return out;
}

std::strong_ordering operator<=>(const Sequence& a, const Sequence& b) {
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

RunDecomposition decompose_runs(const Sequence& s) {
    RunDecomposition runs;
    if (s.empty()) return runs;
    runs.first_char = s.front().bit();
    Bit current = runs.first_char;
    std::size_t length = 0;
    for (const auto& sym : s) {
        const Bit b = sym.bit();
        if (b == current) {
            ++length;
        } else {
            runs.run_lengths.push_back(length);
            current = b;
            length = 1;
        }
    }
    runs.run_lengths.push_back(length);
    return runs;
}

Sequence reconstruct(const RunDecomposition& runs) {
    Sequence s;
    Bit b = runs.first_char;
    for (std::size_t len : runs.run_lengths) {
        s.append(Symbol(b), len);
        b = flip(b);
    }
    return s;
}

std::size_t run_count(const Sequence& s) {
    if (s.empty()) return 0;
    std::size_t runs = 1;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (!(s[i] == s[i - 1])) ++runs;
    }
    return runs;
}

Sequence condensed(const Sequence& s) {
    const auto runs = decompose_runs(s);
    return Sequence::alternating(runs.first_char, runs.run_count());
}

bool is_subsequence(const Sequence& x, const Sequence& y) {
    std::size_t i = 0;
    for (std::size_t j = 0; j < y.size() && i < x.size(); ++j) {
        if (x[i] == y[j]) ++i;
    }
    return i == x.size();
}

namespace {

Symbol parse_token(std::string_view token, std::size_t position) {
    const std::string tok(token);
    if (token == "0") return Symbol::zero();
    if (token == "1") return Symbol::one();
    if (token == "W") return Symbol::wildcard();
    const auto slash = token.find('/');
    if (slash == std::string_view::npos) throw ParseError(tok, position, "expected 0, 1, W or p/q");
    std::int64_t num = 0;
    std::int64_t den = 0;
    const auto num_part = token.substr(0, slash);
    const auto den_part = token.substr(slash + 1);
    auto r1 = std::from_chars(num_part.data(), num_part.data() + num_part.size(), num);
    auto r2 = std::from_chars(den_part.data(), den_part.data() + den_part.size(), den);
    if (num_part.empty() || den_part.empty() || r1.ec != std::errc{} || r2.ec != std::errc{} ||
        r1.ptr != num_part.data() + num_part.size() || r2.ptr != den_part.data() + den_part.size()) {
        throw ParseError(tok, position, "malformed fraction");
    }
    if (den <= 0 || num <= 0 || num >= den) throw ParseError(tok, position, "fraction must lie strictly between 0 and 1");
    if (std::gcd(num, den) != 1) throw ParseError(tok, position, "fraction must be in lowest terms");
    return Symbol::frac(num, den);
}

}  // namespace

Sequence parse(std::string_view text) {
    if (text.empty()) return {};
    if (text.find_first_not_of("01") == std::string_view::npos) return Sequence::binary(text);
    Sequence s;
    std::size_t position = 0;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        s.push_back(parse_token(token, position));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
        ++position;
    }
    return s;
}

std::string format(const Sequence& s) {
    std::string out;
    if (s.is_binary()) {
        out.reserve(s.size());
        for (const auto& sym : s) out.push_back(sym.kind() == Symbol::Kind::Zero ? '0' : '1');
        return out;
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out.push_back(',');
        out += s[i].token();
    }
    return out;
}

std::vector<Sequence> all_binary_sequences(std::size_t min_len, std::size_t max_len) {
    std::vector<Sequence> out;
    for (std::size_t len = min_len; len <= max_len; ++len) {
        const std::uint64_t total = std::uint64_t{1} << len;
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            Sequence s;
            for (std::size_t i = 0; i < len; ++i) {
                s.push_back(((mask >> (len - 1 - i)) & 1U) ? Symbol::one() : Symbol::zero());
            }
            out.push_back(std::move(s));
        }
    }
    return out;
}

}  // namespace seqrecover
