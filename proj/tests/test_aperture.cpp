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
#include "nfocus/fieldmap.hpp"
#include "nfocus/radiator.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace nfocus;
using namespace nfocus::aperture;
using testing::lambda;

namespace
{
    const double k0 = 2.0 * pi / lambda;

    ApertureSpec spec_for(double ratio, double z0 = 1.5)
    {
        return {ratio * z0, z0, k0};
    }

    // Induced-EMF mutual impedance of two half-wave dipoles by direct quadrature
    complex induced_emf(Arrangement arrangement, double separation)
    {
        const double half = 0.25 * lambda;
        const auto near_field = [](double rho, double z) {
            const double r1 = std::hypot(rho, z - 0.25 * lambda);
            const double r2 = std::hypot(rho, z + 0.25 * lambda);
            return complex(0.0, -eta0 / (4.0 * pi)) *
                   (std::exp(complex(0.0, -k0 * r1)) / r1 + std::exp(complex(0.0, -k0 * r2)) / r2);
        };
        const specfun::QuadratureSpec q{1e-12, 1e-11, 2000};
        if (arrangement == Arrangement::SideBySide)
            return -specfun::integrate(
                [&](double z) { return near_field(separation, z) * std::sin(k0 * (half - std::abs(z))); }, -half, half, q);
        return -specfun::integrate(
            [&](double z) { return near_field(0.0, z) * std::sin(k0 * (half - std::abs(z - separation))); },
            separation - half, separation + half, q);
    }
}

TEST_SUITE("aperture")
{
    TEST_CASE("focal peak tends to 2")
    {
        const auto s = spec_for(1e4);
        CHECK(std::abs(ex_aperture_peak(s) - 2.0) < 1e-6);
        // E_z converges only like 4 z0 / L
        CHECK(2.0 - ez_aperture_peak(s) == doctest::Approx(2.0 / std::sqrt(1.0 + 0.25e8)).epsilon(1e-6));
        CHECK(std::abs(ez_aperture_peak(spec_for(1e7)) - 2.0) < 1e-6);
    }

    TEST_CASE("focal peak is the co-phased aperture integral")
    {
        for (const double ratio : {0.5, 2.0, 6.67, 40.0})
        {
            const auto s = spec_for(ratio);
            CHECK(ex_aperture_peak(s) == doctest::Approx(prelimit_profile(ProfileKind::ExWidth, 0.0, s)).epsilon(1e-9));
            CHECK(ez_aperture_peak(s) == doctest::Approx(prelimit_profile(ProfileKind::EzWidth, 0.0, s)).epsilon(1e-9));
        }
    }

    TEST_CASE("peak grows with aperture")
    {
        double px = 0.0, pz = 0.0;
        for (double ratio = 0.1; ratio < 200.0; ratio *= 1.3)
        {
            const auto s = spec_for(ratio);
            CHECK(ex_aperture_peak(s) > px);
            CHECK(ez_aperture_peak(s) > pz);
            px = ex_aperture_peak(s);
            pz = ez_aperture_peak(s);
        }
    }

    TEST_CASE("reaching 95 percent")
    {
        CHECK(ex_aperture_peak({10.0, 1.5, k0}) >= 1.9);
        const double lz = required_length(Component::Ez, 1.5, 0.95) / 1.5;
        CHECK(std::abs(lz - 40.0) < 0.2);
        CHECK(ez_aperture_peak(spec_for(lz)) == doctest::Approx(1.9).epsilon(1e-12));
        CHECK(ex_aperture_peak(spec_for(required_length(Component::Ex, 1.5, 0.95) / 1.5)) ==
              doctest::Approx(1.9).epsilon(1e-12));
    }

    TEST_CASE("element counts from the continuous model")
    {
        CHECK(required_elements(Component::Ex, 1.5, 0.9, 0.025) == 248);
        CHECK(required_elements(Component::Ez, 1.5, 0.9, 0.025) == 1194);
        CHECK_THROWS_AS(required_length(Component::Total, 1.5, 0.9), DomainError);
        CHECK_THROWS_AS(required_length(Component::Ex, 1.5, 1.0), DomainError);
    }

    TEST_CASE("discrete sum approaches the aperture integral")
    {
        const double z0 = 0.5;
        for (const std::size_t n : {100u, 400u})
        {
            const radiator::ArrayGeometry g(n, 0.0025, lambda);
            const auto ex = radiator::field_at(g, radiator::conjugate_phases(g, z0, radiator::FocusStrategy::FocusEx), {0.0, z0});
            const ApertureSpec s{g.aperture_length(), z0, k0};
            CHECK(std::abs(ex.ex) * g.spacing() == doctest::Approx(ex_aperture_peak(s)).epsilon(1e-4));
        }
    }

    TEST_CASE("closed forms are the large-aperture limit of the finite integrals")
    {
        const ProfileKind kinds[] = {ProfileKind::ExWidth, ProfileKind::ExDepth, ProfileKind::EzWidth, ProfileKind::EzDepth};
        for (const auto kind : kinds)
        {
            CAPTURE(to_string(kind));
            double worst_short = 0.0, worst_long = 0.0;
            for (double delta = -2.0 * lambda; delta <= 2.0 * lambda; delta += 0.1 * lambda)
            {
                const double cf = closed_form_profile(kind, delta, spec_for(1.0, 0.5));
                const ApertureSpec short_aperture{50.0, 0.5, k0};
                const ApertureSpec long_aperture{500.0, 0.5, k0};
                worst_short = std::max(worst_short, std::abs(prelimit_profile(kind, delta, short_aperture) - cf));
                worst_long = std::max(worst_long, std::abs(prelimit_profile(kind, delta, long_aperture) - cf));
            }
            CHECK(worst_long < 0.02);
            CHECK(worst_long <= worst_short);
        }
    }

    TEST_CASE("profile values at the focus")
    {
        const auto s = spec_for(100.0);
        for (const auto kind : {ProfileKind::ExWidth, ProfileKind::ExDepth, ProfileKind::EzWidth, ProfileKind::EzDepth})
            CHECK(closed_form_profile(kind, 0.0, s) == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(ex_profile_width(0.5 * lambda, s) < 1e-15);
        CHECK(ex_profile_width_exact(0.0, s) < 2.0);
        CHECK(ex_profile_width_exact(0.1 * lambda, spec_for(1e6)) == doctest::Approx(ex_profile_width(0.1 * lambda, s)));
    }

    TEST_CASE("profiles are even in the offset")
    {
        auto g = testing::rng(4);
        const auto s = spec_for(30.0);
        for (int i = 0; i < 50; ++i)
        {
            const double d = testing::uniform(g, 0.0, 3.0 * lambda);
            for (const auto kind : {ProfileKind::ExWidth, ProfileKind::ExDepth, ProfileKind::EzWidth, ProfileKind::EzDepth})
                CHECK(closed_form_profile(kind, d, s) == closed_form_profile(kind, -d, s));
        }
    }

    TEST_CASE("closed-form half-power extents")
    {
        const auto s = spec_for(1000.0);
        CHECK(closed_form_halfpower(ProfileKind::ExWidth, s).one_sided() / lambda == doctest::Approx(0.22147).epsilon(1e-4));
        CHECK(closed_form_halfpower(ProfileKind::ExDepth, s).one_sided() / lambda == doctest::Approx(0.61068).epsilon(1e-4));
        CHECK(closed_form_halfpower(ProfileKind::EzWidth, s).full() / lambda == doctest::Approx(0.30787).epsilon(1e-4));
        const double ezd = closed_form_halfpower(ProfileKind::EzDepth, s).full() / lambda;
        CHECK(ezd > 0.86);
        CHECK(ezd < 0.91);
        const auto h = closed_form_halfpower(ProfileKind::ExDepth, s);
        CHECK(h.lower == doctest::Approx(-h.upper));
        CHECK(closed_form_profile(ProfileKind::ExDepth, h.upper, s) ==
              doctest::Approx(2.0 / std::sqrt(2.0)).epsilon(1e-10));
    }

    TEST_CASE("E_z width sidelobe")
    {
        const auto lobe = closed_form_sidelobe_db(ProfileKind::EzWidth, spec_for(1000.0), 2.0 * lambda);
        REQUIRE(lobe);
        CHECK(*lobe < 0.0);
        CHECK(*lobe > -6.0);
        CHECK_THROWS_AS(closed_form_sidelobe_db(ProfileKind::EzWidth, spec_for(10.0), 0.0), DomainError);
    }

    TEST_CASE("side-by-side pair at half a wavelength")
    {
        const complex z = mutual_impedance({Arrangement::SideBySide, 0.5 * lambda, 0.5 * lambda}, k0);
        CHECK(std::abs(z.real() - (-12.5)) < 0.5);
        CHECK(std::abs(z.imag() - (-29.9)) < 0.5);
    }

    TEST_CASE("closed forms agree with induced-EMF quadrature")
    {
        for (const double d : {0.3, 0.5, 0.75, 1.0, 1.6, 2.25, 3.0})
        {
            CAPTURE(d);
            const complex side = mutual_impedance({Arrangement::SideBySide, d * lambda, 0.5 * lambda}, k0);
            CHECK(std::abs(side - induced_emf(Arrangement::SideBySide, d * lambda)) < 1e-5);
            if (d > 0.5)
            {
                const complex col = mutual_impedance({Arrangement::Collinear, d * lambda, 0.5 * lambda}, k0);
                CHECK(std::abs(col - induced_emf(Arrangement::Collinear, d * lambda)) < 1e-5);
            }
        }
    }

    TEST_CASE("collinear coupling is weaker")
    {
        for (double d = 0.75; d <= 3.0 + 1e-12; d += 0.01)
        {
            CAPTURE(d);
            const complex side = mutual_impedance({Arrangement::SideBySide, d * lambda, 0.5 * lambda}, k0);
            const complex col = mutual_impedance({Arrangement::Collinear, d * lambda, 0.5 * lambda}, k0);
            CHECK(std::abs(col) < std::abs(side));
        }
    }

    TEST_CASE("dipole pair preconditions")
    {
        CHECK_THROWS_AS(mutual_impedance({Arrangement::Collinear, 0.4 * lambda, 0.5 * lambda}, k0), DomainError);
        CHECK_THROWS_AS(mutual_impedance({Arrangement::SideBySide, 0.5 * lambda, 0.3 * lambda}, k0), DomainError);
        CHECK_THROWS_AS(mutual_impedance({Arrangement::SideBySide, 0.0, 0.5 * lambda}, k0), DomainError);
        CHECK_THROWS_AS(ex_aperture_peak({0.0, 1.0, k0}), DomainError);
    }
}
