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

#ifndef NFOCUS_APERTURE_HPP
#define NFOCUS_APERTURE_HPP

#include "nfocus/common.hpp"
#include "nfocus/specfun.hpp"

#include <optional>
#include <string_view>

// Continuous-aperture limits of the collinear array: focal peak versus aperture
// length, closed-form width/depth profiles, and half-wave dipole mutual impedance.
namespace nfocus::aperture
{
    struct ApertureSpec
    {
        double length = 0.0;     // L [m]
        double focus_z = 0.0;    // z0 [m]
        double wavenumber = 0.0; // k [rad/m]

        void validate() const;
        double ratio() const { return length / focus_z; }
    };

    // Focal peak of a co-phased continuous aperture (normalised units; limit 2)
    double ex_aperture_peak(const ApertureSpec &spec);
    double ez_aperture_peak(const ApertureSpec &spec);

    // Smallest aperture length whose focal peak reaches threshold_fraction * 2
    double required_length(Component component, double focus_z, double threshold_fraction);

    // required_length expressed as an element count at the given spacing (rounded up)
    std::size_t required_elements(Component component, double focus_z, double threshold_fraction, double spacing);

    // Closed-form profiles around the focus, offset delta in metres. Large-aperture limits.
    double ex_profile_width(double delta_w, const ApertureSpec &spec);
    double ex_profile_width_exact(double delta_w, const ApertureSpec &spec); // keeps sqrt(1 + 4 (z0/L)^2)
    double ex_profile_depth(double delta_d, const ApertureSpec &spec);
    double ez_profile_width(double delta_w, const ApertureSpec &spec);
    double ez_profile_depth(double delta_d, const ApertureSpec &spec);

    enum class ProfileKind
    {
        ExWidth,
        ExDepth,
        EzWidth,
        EzDepth
    };

    std::string_view to_string(ProfileKind kind);

    double closed_form_profile(ProfileKind kind, double delta, const ApertureSpec &spec);

    // The finite-aperture integral each closed form is the limit of, integrated over
    // s in [-L/2, L/2] after the first-order phase expansion (width: k delta s / r,
    // depth: k delta z0 / r), r = sqrt(z0^2 + s^2).
    double prelimit_profile(ProfileKind kind, double delta, const ApertureSpec &spec,
                            const specfun::QuadratureSpec &quad = {});

    struct HalfPower
    {
        double lower = 0.0; // offset of the crossing on the negative side (<= 0) [m]
        double upper = 0.0; // offset of the crossing on the positive side (>= 0) [m]

        double full() const { return upper - lower; }
        double one_sided() const { return 0.5 * full(); }
    };

    // Half-power (peak / sqrt 2) crossings of a closed-form profile around delta = 0
    HalfPower closed_form_halfpower(ProfileKind kind, const ApertureSpec &spec);

    // Strongest local maximum outside the main lobe within |delta| <= span, in dB
    // relative to the delta = 0 value. Empty when the profile has no sidelobe there.
    std::optional<double> closed_form_sidelobe_db(ProfileKind kind, const ApertureSpec &spec, double span);

    enum class Arrangement
    {
        SideBySide,
        Collinear
    };

    struct DipolePairSpec
    {
        Arrangement arrangement = Arrangement::SideBySide;
        double separation = 0.0;    // axis-to-axis (side-by-side) or centre-to-centre (collinear) [m]
        double dipole_length = 0.0; // full length [m]; only lambda/2 is supported

        void validate(double wavenumber) const;
    };

    // Mutual impedance of two half-wave dipoles by the induced-EMF closed forms [Ohm]
    complex mutual_impedance(const DipolePairSpec &pair, double wavenumber);
}

#endif
