#include "chordlie/rational.hpp"

namespace chordlie {

std::string rat_str(const Rat& r) { return r.get_str(); }

Rat rat_parse(const std::string& s) {
    if (s.empty()) throw parse_error("empty rational", 0);
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') ++i;
    bool digits = false, slash = false;
    for (std::size_t k = i; k < s.size(); ++k) {
        if (s[k] == '/') {
            if (slash || !digits) throw parse_error("malformed rational", k);
            slash = true;
            digits = false;
        } else if (s[k] >= '0' && s[k] <= '9') {
            digits = true;
        } else {
            throw parse_error("unexpected character in rational", k);
        }
    }
    if (!digits) throw parse_error("malformed rational", s.size());
    Rat r(s[0] == '+' ? s.substr(1) : s);  // GMP rejects a leading '+'
    if (slash && r.get_den() == 0) throw parse_error("zero denominator", s.find('/'));
    r.canonicalize();
    return r;
}

}  // namespace chordlie
