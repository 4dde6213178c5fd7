// Copyright 2026 The dbrvc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>

#include "dbrvc/errors.hpp"
#include "dbrvc/qubo.hpp"
#include "detail/couplers.hpp"
#include "detail/rng.hpp"

namespace dbrvc {

QuboSolution solve_anneal(const Qubo& q, const AnnealParams& params) {
    if (params.reads == 0 || params.sweeps == 0) throw InvalidArgument("solve_anneal: reads and sweeps must be >= 1");
    if (!(params.t_final > 0.0)) throw InvalidArgument("solve_anneal: final temperature must be positive");

    const auto csr = detail::couplers(q);
    double t0 = 0.0;
    for (double w : q.linear) t0 = std::max(t0, std::abs(w));
    for (const auto& [key, w] : q.quadratic) t0 = std::max(t0, std::abs(w));
    if (params.t_initial) t0 = *params.t_initial;
    if (!(t0 > params.t_final)) t0 = std::max(params.t_final, 1.0);

    std::vector<double> temperatures(params.sweeps);
    for (std::size_t s = 0; s < params.sweeps; ++s) {
        const double frac = params.sweeps == 1 ? 1.0 : static_cast<double>(s) / static_cast<double>(params.sweeps - 1);
        temperatures[s] = t0 * std::pow(params.t_final / t0, frac);
    }

    Assignment x(q.n);
    std::vector<double> field(q.n);
    auto flip = [&](std::size_t i) {
        const double sign = x[i] ? -1.0 : 1.0;
        x[i] ^= 1U;
        for (std::size_t p = csr.offsets[i]; p < csr.offsets[i + 1]; ++p) field[csr.targets[p]] += sign * csr.weights[p];
    };
    auto delta = [&](std::size_t i) { return x[i] ? -field[i] : field[i]; };

    QuboSolution best;
    bool have_best = false;
    for (std::size_t read = 0; read < params.reads; ++read) {
        detail::Rng rng(detail::mix_seed(params.seed, {read}));
        std::fill(x.begin(), x.end(), 0);
        field = q.linear;
        for (std::size_t i = 0; i < q.n; ++i) {
            if (rng() & 1U) flip(i);
        }
        for (double t : temperatures) {
            for (std::size_t i = 0; i < q.n; ++i) {
                const double d = delta(i);
                if (d <= 0.0 || detail::uniform01(rng) < std::exp(-d / t)) flip(i);
            }
        }
        // Zero-temperature polish to the nearest local minimum.
        for (bool improved = true; improved;) {
            improved = false;
            for (std::size_t i = 0; i < q.n; ++i) {
                if (delta(i) < 0.0) {
                    flip(i);
                    improved = true;
                }
            }
        }
        const double e = evaluate(q, x);
        if (!have_best || e < best.energy || (e == best.energy && binary_value_less(x, best.bits))) {
            best.bits = x;
            best.energy = e;
            have_best = true;
        }
    }
    return best;
}

}  // namespace dbrvc
