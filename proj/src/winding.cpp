#include <cmath>

#include "polytoep/errors.hpp"
#include "polytoep/symbol.hpp"

namespace polytoep {

int sampled_winding(const SymbolC& s) {
    for (int m = 512; m <= (1 << 20); m *= 2) {
        std::vector<std::complex<double>> v(static_cast<std::size_t>(m));
        double floor_abs = std::numeric_limits<double>::infinity();
        for (int k = 0; k < m; ++k) {
            double th = 2.0 * M_PI * k / m;
            v[static_cast<std::size_t>(k)] = eval_symbol(s, {std::cos(th), std::sin(th)});
            floor_abs = std::min(floor_abs, std::abs(v[static_cast<std::size_t>(k)]));
        }
        if (floor_abs == 0.0)
            throw IllConditioned("symbol vanishes at a boundary sample point");
        double total = 0, max_step = 0;
        for (int k = 0; k < m; ++k) {
            std::complex<double> ratio = v[static_cast<std::size_t>((k + 1) % m)] /
                                         v[static_cast<std::size_t>(k)];
            double step = std::arg(ratio);
            max_step = std::max(max_step, std::abs(step));
            total += step;
        }
        if (max_step < M_PI / 4.0) return static_cast<int>(std::lround(total / (2.0 * M_PI)));
    }
    throw IllConditioned("winding sampling did not stabilize; symbol too close to 0 on the circle");
}

}  // namespace polytoep
