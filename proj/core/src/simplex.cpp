#include "taufan/simplex.hpp"

#include "taufan/errors.hpp"

#include <vector>

namespace taufan {

bool lp_feasible(const QMat& a, const QVec& b) {
    const int m = static_cast<int>(a.rows());
    const int n = static_cast<int>(a.cols());

    // tableau [A | I | b] with one artificial variable per row, b >= 0
    QMat t(m, n + m + 1);
    t.setZero();
    for (int i = 0; i < m; ++i) {
        const Rat sign = b(i) < 0 ? Rat(-1) : Rat(1);
        for (int j = 0; j < n; ++j) t(i, j) = sign * a(i, j);
        t(i, n + i) = 1;
        t(i, n + m) = sign * b(i);
    }
    std::vector<int> basis(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) basis[static_cast<size_t>(i)] = n + i;

    // reduced costs for minimizing the sum of artificials
    QVec red = QVec::Zero(n + m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) red(j) -= t(i, j);
    }
    auto objective = [&]() {
        Rat w = 0;
        for (int i = 0; i < m; ++i) {
            if (basis[static_cast<size_t>(i)] >= n) w += t(i, n + m);
        }
        return w;
    };

    for (;;) {
        int enter = -1;
        for (int j = 0; j < n + m; ++j) {
            if (red(j) < 0) {
                enter = j;
                break;
            }
        }
        if (enter < 0) break;

        int leave = -1;
        Rat best = 0;
        for (int i = 0; i < m; ++i) {
            if (t(i, enter) <= 0) continue;
            Rat ratio = t(i, n + m) / t(i, enter);
            if (leave < 0 || ratio < best ||
                (ratio == best && basis[static_cast<size_t>(i)] <
                                      basis[static_cast<size_t>(leave)])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0) {
            // unbounded in phase one cannot happen: the objective is bounded
            // below by zero
            throw Error("lp_feasible: phase-one ray detected");
        }

        const Rat piv = t(leave, enter);
        for (int j = 0; j <= n + m; ++j) t(leave, j) /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == leave) continue;
            const Rat f = t(i, enter);
            if (f == 0) continue;
            for (int j = 0; j <= n + m; ++j) t(i, j) -= f * t(leave, j);
        }
        const Rat rf = red(enter);
        for (int j = 0; j < n + m; ++j) red(j) -= rf * t(leave, j);
        basis[static_cast<size_t>(leave)] = enter;
    }
    return objective() == 0;
}

}  // namespace taufan
