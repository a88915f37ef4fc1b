// SPDX-License-Identifier: Apache-2.0
//
// nfocus: near-field focusing toolkit for collinear dipole arrays
// Copyright (C) 2026 The nfocus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "nfocus/fieldmap.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

namespace nfocus::fieldmap
{
    namespace
    {
        const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

        // Largest strict interior local maximum, or the global argmax with interior = false
        std::pair<std::size_t, bool> select_peak(const std::vector<double> &m)
        {
            std::size_t best = 0;
            bool interior = false;
            for (std::size_t i = 1; i + 1 < m.size(); ++i)
            {
                if (m[i] > m[i - 1] && m[i] >= m[i + 1] && (!interior || m[i] > m[best]))
                {
                    best = i;
                    interior = true;
                }
            }
            if (!interior)
                for (std::size_t i = 1; i < m.size(); ++i)
                    if (m[i] > m[best])
                        best = i;
            return {best, interior};
        }

        double interpolate(double c0, double m0, double c1, double m1, double level)
        {
            if (m1 == m0)
                return c0;
            return c0 + (level - m0) * (c1 - c0) / (m1 - m0);
        }
    }

    CutCrossings analyze_cut(const Cut &cut, std::size_t peak_index)
    {
        const auto &c = cut.coordinate;
        const auto &m = cut.magnitude;
        detail::require(c.size() == m.size() && c.size() >= 3, "analyze_cut: cut needs at least 3 samples");
        detail::require(peak_index < m.size(), "analyze_cut: peak index out of range");

        CutCrossings out;
        out.peak_coordinate = c[peak_index];
        out.peak_magnitude = m[peak_index];
        if (peak_index > 0 && peak_index + 1 < m.size())
        {
            const double ym = m[peak_index - 1], y0 = m[peak_index], yp = m[peak_index + 1];
            const double denom = ym - 2.0 * y0 + yp;
            if (denom < 0.0)
            {
                const double offset = 0.5 * (ym - yp) / denom;
                const double h = c[peak_index + 1] - c[peak_index];
                out.peak_coordinate = c[peak_index] + offset * h;
                out.peak_magnitude = y0 - 0.25 * (ym - yp) * offset;
            }
        }

        const double level = out.peak_magnitude * inv_sqrt2;
        std::size_t hi = peak_index;
        while (hi + 1 < m.size() && m[hi + 1] >= level)
            ++hi;
        if (hi + 1 < m.size())
            out.upper = interpolate(c[hi], m[hi], c[hi + 1], m[hi + 1], level);
        else
        {
            out.upper = c[hi];
            out.bounded = false;
        }
        std::size_t lo = peak_index;
        while (lo > 0 && m[lo - 1] >= level)
            --lo;
        if (lo > 0)
            out.lower = interpolate(c[lo], m[lo], c[lo - 1], m[lo - 1], level);
        else
        {
            out.lower = c[lo];
            out.bounded = false;
        }

        for (std::size_t i = 1; i + 1 < m.size(); ++i)
        {
            if (i >= lo && i <= hi)
                continue;
            if (m[i] > m[i - 1] && m[i] >= m[i + 1])
            {
                const double db = 20.0 * std::log10(m[i] / out.peak_magnitude);
                if (!out.sidelobe_db || db > *out.sidelobe_db)
                    out.sidelobe_db = db;
            }
        }
        return out;
    }

    namespace
    {
        BeamMetrics assemble(const CutCrossings &width, const CutCrossings &depth, Point target_focus, bool interior)
        {
            BeamMetrics b;
            b.peak_pos = {width.peak_coordinate, depth.peak_coordinate};
            b.peak_mag = std::max(width.peak_magnitude, depth.peak_magnitude);
            b.halfpower_width_full = width.upper - width.lower;
            b.halfpower_width_one_sided = 0.5 * b.halfpower_width_full;
            b.halfpower_depth_full = depth.upper - depth.lower;
            b.halfpower_depth_one_sided = 0.5 * b.halfpower_depth_full;
            b.strongest_sidelobe_db = width.sidelobe_db;
            b.focal_shift = target_focus.z - depth.peak_coordinate;
            b.peak_interior = interior;
            b.width_bounded = width.bounded;
            b.depth_bounded = depth.bounded;
            return b;
        }
    }

    BeamMetrics metrics_from_cuts(const Cut &width_cut, const Cut &depth_cut, Point target_focus)
    {
        const auto [wi, w_interior] = select_peak(width_cut.magnitude);
        const auto [di, d_interior] = select_peak(depth_cut.magnitude);
        return assemble(analyze_cut(width_cut, wi), analyze_cut(depth_cut, di), target_focus, w_interior && d_interior);
    }

    BeamMetrics extract_metrics(const FieldMap &map, Component component, Point target_focus)
    {
        const GridSpec &g = map.grid;
        detail::require(g.nx >= 3 && g.nz >= 3, "extract_metrics: map needs at least 3 samples on each axis");

        std::vector<double> mag(g.size());
        for (std::size_t c = 0; c < g.size(); ++c)
            mag[c] = map.magnitude(c, component);

        std::size_t best_i = 0, best_j = 0;
        bool interior = false;
        for (std::size_t i = 1; i + 1 < g.nx; ++i)
        {
            for (std::size_t j = 1; j + 1 < g.nz; ++j)
            {
                const double v = mag[map.index(i, j)];
                bool is_max = true;
                bool strictly = false;
                for (int di = -1; di <= 1 && is_max; ++di)
                {
                    for (int dj = -1; dj <= 1; ++dj)
                    {
                        if (di == 0 && dj == 0)
                            continue;
                        const double n = mag[map.index(i + di, j + dj)];
                        if (n > v)
                        {
                            is_max = false;
                            break;
                        }
                        if (n < v)
                            strictly = true;
                    }
                }
                if (is_max && strictly && (!interior || v > mag[map.index(best_i, best_j)]))
                {
                    best_i = i;
                    best_j = j;
                    interior = true;
                }
            }
        }
        if (!interior)
        {
            std::size_t best = 0;
            for (std::size_t c = 1; c < g.size(); ++c)
                if (mag[c] > mag[best])
                    best = c;
            best_i = best / g.nz;
            best_j = best % g.nz;
        }

        Cut width, depth;
        for (std::size_t i = 0; i < g.nx; ++i)
        {
            width.coordinate.push_back(g.x(i));
            width.magnitude.push_back(mag[map.index(i, best_j)]);
        }
        for (std::size_t j = 0; j < g.nz; ++j)
        {
            depth.coordinate.push_back(g.z(j));
            depth.magnitude.push_back(mag[map.index(best_i, j)]);
        }
        return assemble(analyze_cut(width, best_i), analyze_cut(depth, best_j), target_focus, interior);
    }
}
