#include "thetaprod/quadform.hpp"

#include <sstream>
#include <stdexcept>

namespace thetaprod {

Quaternion operator*(const Quaternion& x, const Quaternion& y) {
    const auto& a = x.c;
    const auto& b = y.c;
    return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
            a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
            a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

Quaternion operator+(const Quaternion& x, const Quaternion& y) {
    return {x.c[0] + y.c[0], x.c[1] + y.c[1], x.c[2] + y.c[2], x.c[3] + y.c[3]};
}

long QuadForm::bnorm() const {
    long s = 0;
    for (int i = 0; i < m; ++i) s += b[i] * b[i];
    return s;
}

long QuadForm::disc() const { return bnorm() - 4 * a * c; }

Quaternion QuadForm::b_quaternion() const {
    return {b[0], m >= 2 ? b[1] : 0, m >= 3 ? b[2] : 0, 0};
}

void QuadForm::validate() const {
    if (m < 1 || m > 3) throw std::invalid_argument("form type m must be 1, 2 or 3");
    if (a <= 0 || c <= 0) throw std::invalid_argument("form must have a > 0 and c > 0");
    if (disc() >= 0) throw std::invalid_argument("form must be positive definite (D < 0)");
}

QuadForm QuadForm::parse(const std::string& text) {
    std::vector<long> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("malformed form spec: " + text);
        std::size_t pos = 0;
        long v = std::stol(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("malformed form spec: " + text);
        parts.push_back(v);
    }
    if (parts.size() < 3 || parts.size() > 5)
        throw std::invalid_argument("form spec needs 3 to 5 comma-separated integers: " + text);
    int m = (int)parts.size() - 2;
    std::array<long, 3> b{0, 0, 0};
    for (int i = 0; i < m; ++i) b[i] = parts[1 + i];
    return QuadForm(m, parts[0], b, parts.back());
}

std::string QuadForm::to_string() const {
    std::ostringstream os;
    os << a;
    for (int i = 0; i < m; ++i) os << ',' << b[i];
    os << ',' << c;
    return os.str();
}

}  // namespace thetaprod
