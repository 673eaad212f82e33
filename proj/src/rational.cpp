#include "sgchroma/rational.hpp"

#include <stdexcept>

namespace sgchroma {

std::string rat_str(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        using Int = boost::multiprecision::cpp_int;
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash)), den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational \"" + s + "\"");
    }
}

}  // namespace sgchroma
