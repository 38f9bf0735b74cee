#include "pmhs/composition.hpp"

#include <sstream>

namespace pmhs {

std::string Composition::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) os << ",";
        os << s[i];
    }
    return os.str();
}

Composition Composition::parse(const std::string& text) {
    Composition c;
    if (text.empty()) return c;
    std::istringstream is(text);
    std::string part;
    while (std::getline(is, part, ',')) {
        if (part.empty()) throw input_error("Composition::parse: empty entry in '" + text + "'");
        try {
            std::size_t used = 0;
            long v = std::stol(part, &used);
            if (used != part.size()) throw std::invalid_argument(part);
            c.s.push_back(v);
        } catch (const std::exception&) {
            throw input_error("Composition::parse: bad entry '" + part + "'");
        }
    }
    if (!text.empty() && text.back() == ',')
        throw input_error("Composition::parse: trailing comma in '" + text + "'");
    return c;
}

}  // namespace pmhs
