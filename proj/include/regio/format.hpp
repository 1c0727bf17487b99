#pragma once

#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>

namespace regio {

// Shortest decimal form that round-trips to the same double. Locale-free.
inline std::string format_shortest(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

// Fixed-point with `precision` digits after '.'. Locale-free.
inline std::string format_fixed(double value, int precision) {
    char buf[128];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value,
                                   std::chars_format::fixed, precision);
    return std::string(buf, ptr);
}

// Whole number with space-separated thousands groups ("19 521").
inline std::string format_grouped(long long value) {
    std::string digits = std::to_string(value < 0 ? -value : value);
    std::string out;
    const std::size_t n = digits.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 && (n - i) % 3 == 0) out.push_back(' ');
        out.push_back(digits[i]);
    }
    if (value < 0) out.insert(out.begin(), '-');
    return out;
}

// Full-string double parse; rejects trailing garbage and empty input.
inline std::optional<double> parse_double(std::string_view text) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || text.empty()) return std::nullopt;
    return value;
}

inline std::optional<long long> parse_int(std::string_view text) {
    long long value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || text.empty()) return std::nullopt;
    return value;
}

}  // namespace regio
