#include "enbc/scalar.hpp"

#include <cctype>

namespace enbc {

Rational parse_rational(const std::string& s) {
    if (s.empty()) fail(Errc::BadEntry, "empty scalar");
    auto check_int = [&](const std::string& part) {
        if (part.empty()) fail(Errc::BadEntry, "malformed scalar '" + s + "'");
        size_t k = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (k == part.size()) fail(Errc::BadEntry, "malformed scalar '" + s + "'");
        for (; k < part.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(part[k])))
                fail(Errc::BadEntry, "malformed scalar '" + s + "'");
    };
    size_t slash = s.find('/');
    if (slash == std::string::npos) {
        check_int(s);
        return Rational(s);
    }
    check_int(s.substr(0, slash));
    check_int(s.substr(slash + 1));
    Rational r(s);
    if (r.get_den() == 0) fail(Errc::BadEntry, "scalar '" + s + "' has zero denominator");
    r.canonicalize();
    return r;
}

} // namespace enbc
