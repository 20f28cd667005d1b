#include "specdom/digest.hpp"

#include <cstdio>
#include <stdexcept>

namespace specdom {

std::string digest_hex(std::uint64_t d) {
    char buf[19];
    std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(d));
    return buf;
}

std::uint64_t digest_parse(const std::string& s) {
    if (s.size() != 18 || s[0] != '0' || s[1] != 'x')
        throw std::invalid_argument("malformed digest: " + s);
    std::uint64_t v = 0;
    for (std::size_t i = 2; i < s.size(); ++i) {
        const char c = s[i];
        int nibble = 0;
        if (c >= '0' && c <= '9')
            nibble = c - '0';
        else if (c >= 'a' && c <= 'f')
            nibble = c - 'a' + 10;
        else
            throw std::invalid_argument("malformed digest: " + s);
        v = (v << 4) | static_cast<std::uint64_t>(nibble);
    }
    return v;
}

}  // namespace specdom
