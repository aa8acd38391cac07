#include "towers/bigint.hpp"

#include <algorithm>

#include "towers/errors.hpp"

namespace towers {

BigInt parse_bigint(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    if (body.empty() || !std::all_of(body.begin(), body.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw InputError("not a decimal integer: '" + std::string(text) + "'");
    std::string s(text);
    if (s.front() == '+') s.erase(0, 1);
    return BigInt(s, 10);
}

}  // namespace towers
