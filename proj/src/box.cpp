#include "alexpoly/box.hpp"

#include <algorithm>
#include <sstream>

namespace alexpoly {

std::vector<value_vec> graded_lex_points(const value_vec& lo, const value_vec& hi) {
    std::vector<value_vec> pts;
    value_vec v = lo;
    pts.push_back(v);
    while (next_in_box(v, lo, hi)) pts.push_back(v);
    std::sort(pts.begin(), pts.end(), graded_lex_less{});
    return pts;
}

std::string vec_str(const value_vec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i];
    }
    os << ")";
    return os.str();
}

} // namespace alexpoly
