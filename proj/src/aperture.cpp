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

#include "nfocus/aperture.hpp"

#include <cmath>

namespace nfocus::aperture
{
    namespace
    {
        const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    }

    void ApertureSpec::validate() const
    {
        detail::require(length > 0.0 && std::isfinite(length), "ApertureSpec: length must be positive");
        detail::require(focus_z > 0.0 && std::isfinite(focus_z), "ApertureSpec: focus_z must be positive");
        detail::require(wavenumber > 0.0 && std::isfinite(wavenumber), "ApertureSpec: wavenumber must be positive");
    }

    double ex_aperture_peak(const ApertureSpec &spec)
    {
        spec.validate();
        const double q = spec.focus_z / spec.length;
        return 2.0 / std::sqrt(4.0 * q * q + 1.0);
    }

    double ez_aperture_peak(const ApertureSpec &spec)
    {
        spec.validate();
        const double r = spec.ratio();
        return 2.0 * (1.0 - 2.0 / std::sqrt(4.0 + r * r));
    }

    double required_length(Component component, double focus_z, double threshold_fraction)
    {
        detail::require(focus_z > 0.0, "required_length: focus_z must be positive");
        detail::require(threshold_fraction > 0.0 && threshold_fraction < 1.0,
                        "required_length: threshold_fraction must lie in (0, 1)");
        const double f = threshold_fraction;
        switch (component)
        {
        case Component::Ex:
            // 2 / sqrt(4 (z0/L)^2 + 1) = 2 f
            return 2.0 * focus_z / std::sqrt(1.0 / (f * f) - 1.0);
        case Component::Ez:
        {
            // 2 (1 - 2 / sqrt(4 + (L/z0)^2)) = 2 f
            const double g = 1.0 / (1.0 - f);
            return 2.0 * focus_z * std::sqrt(g * g - 1.0);
        }
        default:
            throw DomainError("required_length: component must be Ex or Ez");
        }
    }

    std::size_t required_elements(Component component, double focus_z, double threshold_fraction, double spacing)
    {
        detail::require(spacing > 0.0, "required_elements: spacing must be positive");
        return static_cast<std::size_t>(std::ceil(required_length(component, focus_z, threshold_fraction) / spacing));
    }

    double ex_profile_width(double delta_w, const ApertureSpec &spec)
    {
        spec.validate();
        return 2.0 * std::abs(specfun::sinc(spec.wavenumber * delta_w));
    }

    double ex_profile_width_exact(double delta_w, const ApertureSpec &spec)
    {
        spec.validate();
        const double q = spec.focus_z / spec.length;
        const double a = 1.0 / std::sqrt(1.0 + 4.0 * q * q);
        return 2.0 * a * std::abs(specfun::sinc(a * spec.wavenumber * delta_w));
    }

    double ex_profile_depth(double delta_d, const ApertureSpec &spec)
    {
        spec.validate();
        const double u = spec.wavenumber * delta_d;
        // j J1 and H-1 are in quadrature
        return pi * std::hypot(specfun::bessel_j1(u), specfun::struve_h_minus1(u));
    }

    double ez_profile_width(double delta_w, const ApertureSpec &spec)
    {
        spec.validate();
        return pi * std::abs(specfun::struve_h_minus1(spec.wavenumber * delta_w));
    }

    double ez_profile_depth(double delta_d, const ApertureSpec &spec)
    {
        spec.validate();
        // |i (1 - e^{i u}) / u| = |2 sin(u/2) / u|
        const double u = spec.wavenumber * delta_d;
        const double scale = 2.0 * (spec.focus_z + std::abs(delta_d)) / spec.focus_z;
        return scale * std::abs(specfun::sinc(0.5 * u));
    }

    std::string_view to_string(ProfileKind kind)
    {
        switch (kind)
        {
        case ProfileKind::ExWidth:
            return "ex_width";
        case ProfileKind::ExDepth:
            return "ex_depth";
        case ProfileKind::EzWidth:
            return "ez_width";
        case ProfileKind::EzDepth:
            return "ez_depth";
        }
        return "unknown";
    }

    double closed_form_profile(ProfileKind kind, double delta, const ApertureSpec &spec)
    {
        switch (kind)
        {
        case ProfileKind::ExWidth:
            return ex_profile_width(delta, spec);
        case ProfileKind::ExDepth:
            return ex_profile_depth(delta, spec);
        case ProfileKind::EzWidth:
            return ez_profile_width(delta, spec);
        case ProfileKind::EzDepth:
            return ez_profile_depth(delta, spec);
        }
        throw DomainError("closed_form_profile: unknown profile kind");
    }

    double prelimit_profile(ProfileKind kind, double delta, const ApertureSpec &spec, const specfun::QuadratureSpec &quad)
    {
        spec.validate();
        const double z0 = spec.focus_z;
        const double k = spec.wavenumber;
        const double half = 0.5 * spec.length;
        const bool width = kind == ProfileKind::ExWidth || kind == ProfileKind::EzWidth;
        const bool ex = kind == ProfileKind::ExWidth || kind == ProfileKind::ExDepth;

        const auto integrand = [=](double s) {
            const double r = std::hypot(z0, s);
            const double phase = k * delta * (width ? s : z0) / r;
            const double amplitude = (ex ? z0 * z0 : std::abs(s)) / (r * r * r);
            return std::polar(amplitude, phase);
        };

        // Split at s = 0 so the |s| kink sits on an interval boundary
        const complex value = specfun::integrate(integrand, -half, 0.0, quad) + specfun::integrate(integrand, 0.0, half, quad);
        const double magnitude = std::abs(value);
        switch (kind)
        {
        case ProfileKind::ExWidth:
        case ProfileKind::ExDepth:
            return magnitude;
        case ProfileKind::EzWidth:
            return z0 * magnitude;
        case ProfileKind::EzDepth:
            return (z0 + std::abs(delta)) * magnitude;
        }
        return magnitude;
    }

    HalfPower closed_form_halfpower(ProfileKind kind, const ApertureSpec &spec)
    {
        spec.validate();
        const double peak = closed_form_profile(kind, 0.0, spec);
        const double target = peak * inv_sqrt2;
        const double wavelength = 2.0 * pi / spec.wavenumber;
        const double step = wavelength / 1000.0;

        const auto crossing = [&](double direction) {
            double inside = 0.0;
            double outside = step;
            while (closed_form_profile(kind, direction * outside, spec) >= target)
            {
                inside = outside;
                outside += step;
                if (outside > 100.0 * wavelength)
                    throw ToleranceError("closed_form_halfpower: no half-power crossing within 100 wavelengths", 0.0, 0.0);
            }
            for (int i = 0; i < 200 && outside - inside > 1e-15 * wavelength; ++i)
            {
                const double mid = 0.5 * (inside + outside);
                if (closed_form_profile(kind, direction * mid, spec) >= target)
                    inside = mid;
                else
                    outside = mid;
            }
            return direction * 0.5 * (inside + outside);
        };
        return {crossing(-1.0), crossing(1.0)};
    }

    std::optional<double> closed_form_sidelobe_db(ProfileKind kind, const ApertureSpec &spec, double span)
    {
        spec.validate();
        detail::require(span > 0.0, "closed_form_sidelobe_db: span must be positive");
        const HalfPower main = closed_form_halfpower(kind, spec);
        const double peak = closed_form_profile(kind, 0.0, spec);
        const double wavelength = 2.0 * pi / spec.wavenumber;
        const double step = wavelength / 2000.0;
        const auto count = static_cast<long>(std::ceil(span / step));

        std::optional<double> best;
        for (const double direction : {-1.0, 1.0})
        {
            const double edge = direction < 0 ? -main.lower : main.upper;
            double prev2 = closed_form_profile(kind, direction * edge, spec);
            double prev1 = closed_form_profile(kind, direction * (edge + step), spec);
            for (long i = 2; edge + i * step <= span && i <= count; ++i)
            {
                const double cur = closed_form_profile(kind, direction * (edge + i * step), spec);
                if (prev1 > prev2 && prev1 >= cur)
                {
                    const double db = 20.0 * std::log10(prev1 / peak);
                    if (!best || db > *best)
                        best = db;
                }
                prev2 = prev1;
                prev1 = cur;
            }
        }
        return best;
    }

    void DipolePairSpec::validate(double wavenumber) const
    {
        detail::require(wavenumber > 0.0, "DipolePairSpec: wavenumber must be positive");
        detail::require(separation > 0.0 && std::isfinite(separation), "DipolePairSpec: separation must be positive");
        const double half_wave = pi / wavenumber;
        detail::require(std::abs(dipole_length - half_wave) <= 1e-6 * half_wave,
                        "DipolePairSpec: only half-wave dipoles are supported");
        if (arrangement == Arrangement::Collinear)
            detail::require(separation > dipole_length, "DipolePairSpec: collinear dipoles overlap (separation <= length)");
    }

    complex mutual_impedance(const DipolePairSpec &pair, double wavenumber)
    {
        using specfun::cosine_integral;
        using specfun::sine_integral;
        pair.validate(wavenumber);
        const double k = wavenumber;
        const double l = pair.dipole_length;

        if (pair.arrangement == Arrangement::SideBySide)
        {
            const double d = pair.separation;
            const double u0 = k * d;
            const double u1 = k * (std::hypot(d, l) + l);
            const double u2 = k * (std::hypot(d, l) - l);
            const double re = 2.0 * cosine_integral(u0) - cosine_integral(u1) - cosine_integral(u2);
            const double im = 2.0 * sine_integral(u0) - sine_integral(u1) - sine_integral(u2);
            return eta0 / (4.0 * pi) * complex(re, -im);
        }

        const double h = pair.separation;
        const double v0 = k * h;
        const double v1 = 2.0 * k * (h + l);
        const double v2 = 2.0 * k * (h - l);
        const double log_v3 = std::log((h * h - l * l) / (h * h));
        const double s = 2.0 * sine_integral(2.0 * v0) - sine_integral(v2) - sine_integral(v1);
        const double c_plus = 2.0 * cosine_integral(2.0 * v0) - cosine_integral(v2) - cosine_integral(v1) - log_v3;
        const double c_minus = cosine_integral(v2) - 2.0 * cosine_integral(2.0 * v0) + cosine_integral(v1) - log_v3;
        const double sin0 = std::sin(v0);
        const double cos0 = std::cos(v0);
        const complex first = s * complex(sin0, -cos0);
        const complex second = complex(0.0, sin0 * c_plus) - cos0 * c_minus;
        return eta0 / (8.0 * pi) * (first + second);
    }
}
