#include "jumpkit/dyadic.hpp"

#include <bit>
#include <charconv>
#include <cmath>

#include "jumpkit/errors.hpp"

namespace jumpkit {

DyadicTime::DyadicTime(std::int64_t num, int exp) : num_(num), exp_(exp) {
    require(exp >= 0 && exp <= max_exponent, "dyadic exponent out of range");
    require(num > INT64_MIN / 2 && num < INT64_MAX / 2, "dyadic numerator out of range");
    if (num_ == 0) {
        exp_ = 0;
        return;
    }
    while (exp_ > 0 && (num_ & 1) == 0) {
        num_ /= 2;
        --exp_;
    }
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw InvalidArgument("malformed dyadic time '" + std::string(whole) + "'");
    return v;
}

}  // namespace

DyadicTime DyadicTime::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return DyadicTime(parse_int(text, text), 0);
    auto den = text.substr(slash + 1);
    if (den.size() < 3 || den[0] != '2' || den[1] != '^')
        throw InvalidArgument("malformed dyadic time '" + std::string(text) + "'");
    auto q = parse_int(den.substr(2), text);
    require(q >= 0 && q <= max_exponent, "dyadic exponent out of range");
    return DyadicTime(parse_int(text.substr(0, slash), text), static_cast<int>(q));
}

double DyadicTime::to_double() const { return std::ldexp(static_cast<double>(num_), -exp_); }

std::string DyadicTime::to_string() const {
    return std::to_string(num_) + "/2^" + std::to_string(exp_);
}

bool DyadicTime::is_power_of_two() const {
    return num_ > 0 && std::has_single_bit(static_cast<std::uint64_t>(num_));
}

int DyadicTime::floor_log2() const {
    require(num_ > 0, "floor_log2 of a nonpositive time");
    return static_cast<int>(std::bit_width(static_cast<std::uint64_t>(num_))) - 1 - exp_;
}

std::strong_ordering operator<=>(const DyadicTime& a, const DyadicTime& b) {
    int e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
    __int128 x = static_cast<__int128>(a.num_) << (e - a.exp_);
    __int128 y = static_cast<__int128>(b.num_) << (e - b.exp_);
    return x <=> y;
}

}  // namespace jumpkit
