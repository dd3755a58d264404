#include "lced/rational.hpp"

#include "lced/errors.hpp"

namespace lced {

Rat parse_rat(const std::string& text) {
    if (text.empty()) {
        throw ParseError("empty rational literal");
    }
    mpq_class q;
    if (q.set_str(text, 10) != 0) {
        throw ParseError("malformed rational literal: '" + text + "'");
    }
    if (q.get_den() == 0) {
        throw ParseError("zero denominator in rational literal: '" + text + "'");
    }
    q.canonicalize();
    return q;
}

std::string rat_str(const Rat& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rat rat_pow(const Rat& value, unsigned exp) {
    Rat out = 1;
    for (unsigned i = 0; i < exp; ++i) {
        out *= value;
    }
    return out;
}

}  // namespace lced
