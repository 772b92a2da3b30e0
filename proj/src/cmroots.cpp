#include "thetaprod/cmroots.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "thetaprod/gram.hpp"

namespace thetaprod {

CMClass::CMClass(long N_, long d_, long h_) : N(N_), d(d_), h(h_) {
    if (N <= 0) throw std::invalid_argument("level must be positive");
    if (d >= 0) throw std::invalid_argument("CM discriminant must be negative");
    long r = ((h * h - d) % (4 * N) + 4 * N) % (4 * N);
    if (r != 0) throw std::invalid_argument("need h^2 = d (mod 4N)");
}

RootSearchResult cm_root_classes(const QuadForm& A) {
    if (A.m != 1) throw std::invalid_argument("root search needs a binary form");
    A.validate();
    const long a = A.a, b = A.b[0], c = A.c;
    const long D = A.disc(), aD = -D;
    RootSearchResult out;
    std::set<std::pair<long, long>> seen;
    for (long alpha = 2; alpha <= 8 * c; alpha += 4)
        for (long gamma = 2; gamma <= 8 * a; gamma += 4) {
            long r = isqrt_floor(alpha * gamma);
            for (long beta = -r; beta <= r; beta += 1) {
                if (beta % 2 == 0) continue;
                long n = alpha * gamma - beta * beta;
                if (n <= 0) continue;
                long h = alpha * a + beta * b + gamma * c;
                if (h < 0 || h >= 2 * aD) continue;
                long d = D + D * n + h * h;
                bool ok = d < 0;  // d > D holds automatically
                out.candidates.push_back({alpha, beta, gamma, h, d, ok});
                if (ok && seen.emplace(d, h).second) out.classes.emplace_back(aD, d, h);
            }
        }
    std::sort(out.classes.begin(), out.classes.end(),
              [](const CMClass& x, const CMClass& y) { return std::pair(x.d, x.h) < std::pair(y.d, y.h); });
    return out;
}

std::complex<double> CMPoint::tau(long d) const {
    return {-(double)B / (2.0 * A), std::sqrt((double)(-d)) / (2.0 * A)};
}

std::vector<CMPoint> cm_representatives(const CMClass& cls, int count) {
    std::vector<CMPoint> out;
    auto floordiv = [](long x, long y) { return x >= 0 ? x / y : -((-x + y - 1) / y); };
    for (long A = cls.N; (int)out.size() < count; A += cls.N) {
        // B = h mod 2N inside (-A, A], nearest to zero first
        std::vector<long> bs;
        long step = 2 * cls.N;
        long base = ((cls.h % step) + step) % step;
        for (long B = base + (floordiv(-A - base, step) + 1) * step; B <= A; B += step)
            bs.push_back(B);
        std::sort(bs.begin(), bs.end(), [](long x, long y) {
            return std::pair(std::abs(x), x) < std::pair(std::abs(y), y);
        });
        for (long B : bs) {
            long num = B * B - cls.d;
            if (num % (4 * A) != 0) continue;
            out.push_back({A, B, num / (4 * A)});
            if ((int)out.size() >= count) break;
        }
    }
    return out;
}

RootReport verify_root(const QSeries& theta, const CMClass& cls, long T, double tol, int reps) {
    if (theta.trunc_key() < T * theta.denom())
        throw std::invalid_argument("series truncation below requested bound");
    RootReport report{cls, tol, T, {}, true};
    for (const CMPoint& p : cm_representatives(cls, reps)) {
        NumericEval ev = evaluate_numeric(theta, p.tau(cls.d));
        if (!(ev.tail_bound < tol / 2))
            throw std::invalid_argument("truncation tail bound is not below tol/2; raise T");
        double av = std::abs(ev.value);
        bool pass = av < tol;
        report.evaluations.push_back({p, av, ev.tail_bound, pass});
        report.all_pass = report.all_pass && pass;
    }
    return report;
}

RootReport verify_root(const QuadForm& A, const CMClass& cls, long T, double tol, int reps) {
    QSeries theta = theta_series(hermitian_to_gram(A), T);
    return verify_root(theta, cls, T, tol, reps);
}

}  // namespace thetaprod
