#include "thetaprod/multipoly.hpp"

#include <sstream>
#include <vector>

namespace thetaprod {

void MultiPoly::add(const Monomial& mono, const Int& coeff) {
    if (coeff == 0 || mono.grading() > bound_) return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_.emplace(mono, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Int MultiPoly::coeff(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Int(0) : it->second;
}

void MultiPoly::mul_monomial_poly(const Monomial& base, const std::vector<Int>& coeffs) {
    // coeffs[0] must be 1 (the factors here are 1 + O(base))
    std::map<Monomial, Int> out;
    int bg = base.grading();
    for (const auto& [mono, c] : terms_) {
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            if (mono.grading() + bg * (long)k > bound_) {
                if (bg > 0) break;
                continue;
            }
            if (k > 0 && coeffs[k] == 0) continue;
            Monomial t = mono;
            t.a += base.a * (int)k;
            t.g += base.g * (int)k;
            for (int i = 0; i < m_; ++i) t.b[i] += base.b[i] * (int)k;
            Int v = c * coeffs[k];
            auto it = out.find(t);
            if (it == out.end())
                out.emplace(t, v);
            else
                it->second += v;
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second == 0)
            it = out.erase(it);
        else
            ++it;
    }
    terms_ = std::move(out);
}

std::string MultiPoly::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str() << "*q^(" << mono.a << "/2)";
        for (int i = 0; i < m_; ++i)
            if (mono.b[i] != 0) os << "*r" << (i + 1) << "^" << mono.b[i];
        os << "*s^(" << mono.g << "/2)";
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace thetaprod
