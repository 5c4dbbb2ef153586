#include "bvx/fixed.hpp"

#include <cctype>
#include <limits>

#include "bvx/error.hpp"

namespace bvx {

Fixed fixed_from_decimal(const std::string& text) {
    if (text.empty()) throw Error("empty cost literal");
    std::size_t i = 0;
    if (text[0] == '-') throw Error("negative cost: '" + text + "'");
    if (text[0] == '+') i = 1;

    Fixed whole = 0;
    bool any_digit = false;
    for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
        any_digit = true;
        if (whole > std::numeric_limits<Fixed>::max() / 10) {
            throw Error("cost literal out of range: '" + text + "'");
        }
        whole = whole * 10 + (text[i] - '0');
    }

    Fixed frac = 0;
    if (i < text.size() && text[i] == '.') {
        ++i;
        int digits = 0;
        for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
            any_digit = true;
            if (++digits > kFixedFractionDigits) {
                throw Error("cost literal '" + text + "' has more than " +
                            std::to_string(kFixedFractionDigits) + " fraction digits");
            }
            frac = frac * 10 + (text[i] - '0');
        }
        for (; digits < kFixedFractionDigits; ++digits) frac *= 10;
    }
    if (!any_digit || i != text.size()) {
        throw Error("malformed cost literal: '" + text + "'");
    }
    if (whole > (std::numeric_limits<Fixed>::max() - frac) / kFixedOne) {
        throw Error("cost literal out of range: '" + text + "'");
    }
    return whole * kFixedOne + frac;
}

std::string fixed_to_decimal(Fixed value) {
    std::string sign;
    if (value < 0) {
        sign = "-";
        value = -value;
    }
    Fixed whole = value / kFixedOne;
    Fixed frac = value % kFixedOne;
    std::string out = sign + std::to_string(whole);
    if (frac != 0) {
        std::string f = std::to_string(frac);
        f.insert(f.begin(), kFixedFractionDigits - f.size(), '0');
        while (!f.empty() && f.back() == '0') f.pop_back();
        out += "." + f;
    }
    return out;
}

}  // namespace bvx
