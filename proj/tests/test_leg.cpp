#include "tensileg/leg.hpp"

#include "tensileg/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace tensileg;

TEST_CASE("characterization rig kinematics") {
    const double l1 = 0.31;
    CHECK(phi_from_h(2.0 * l1, l1) == doctest::Approx(std::numbers::pi));
    CHECK(phi_from_h(l1, l1) == doctest::Approx(std::numbers::pi / 3.0));
    CHECK(phi_from_h(0.537, l1) == doctest::Approx(deg_to_rad(120.0)).epsilon(1e-3));

    CHECK(h_from_phi(std::numbers::pi, l1) == doctest::Approx(0.62));
    CHECK(h_from_phi(0.0, l1) == 0.0);
    CHECK(h_from_phi(deg_to_rad(120.0), l1) == doctest::Approx(0.53694).epsilon(1e-4));

    SUBCASE("round trip to 1e-12") {
        for (int i = 0; i <= 64; ++i) {
            const double phi = std::numbers::pi * i / 64.0;
            CHECK(phi_from_h(h_from_phi(phi, l1), l1) == doctest::Approx(phi).epsilon(1e-12));
        }
    }
    SUBCASE("domain errors") {
        CHECK_THROWS_AS(phi_from_h(-0.01, l1), DomainError);
        CHECK_THROWS_AS(phi_from_h(2.0 * l1 + 1e-6, l1), DomainError);
        CHECK_THROWS_AS(h_from_phi(-0.1, l1), DomainError);
        CHECK_THROWS_AS(h_from_phi(std::numbers::pi + 0.1, l1), DomainError);
    }
}

TEST_CASE("rig torque") {
    CHECK(rig_torque(10.0, 0.31, deg_to_rad(120.0)) == doctest::Approx(1.55).epsilon(1e-12));
    CHECK(rig_torque(123.0, 0.31, std::numbers::pi) == 0.0); // exactly zero when straight
    CHECK(rig_torque(0.0, 0.31, 1.0) == 0.0);
    SUBCASE("decreases to zero as the joint straightens") {
        double previous = rig_torque(10.0, 0.31, 0.0);
        for (double phi = 0.2; phi <= std::numbers::pi; phi += 0.2) {
            const double now = rig_torque(10.0, 0.31, phi);
            CHECK(now <= previous);
            CHECK(now >= 0.0);
            previous = now;
        }
    }
}

TEST_CASE("leg model validation") {
    CHECK_NOTHROW(LegModel::prototype());

    LegModel::Params bad = LegModel::Params{};
    bad.femur_length = -0.1;
    CHECK_THROWS_AS(LegModel(bad), DomainError);

    bad = LegModel::Params{};
    bad.total_extended_length = 0.9; // segments no longer add up
    CHECK_THROWS_AS(LegModel(bad), DomainError);

    bad = LegModel::Params{};
    bad.drum_radius = 0.07; // larger than the tristar radius
    CHECK_THROWS_AS(LegModel(bad), DomainError);

    CHECK(LegModel::prototype().rest_knee_interior_angle() ==
          doctest::Approx(deg_to_rad(130.0)));
}

TEST_CASE("joint restoring torque") {
    const auto model = LegModel::prototype();
    CHECK(joint_restoring_torque(model, StiffnessSetting{0.0}, JointId::Hip, 0.0) == 0.0);
    CHECK(joint_restoring_torque(model, StiffnessSetting{0.04}, JointId::Knee, 0.0) == 0.0);

    SUBCASE("single engaged branch at the minimum setting") {
        // Oracle: slack side carries nothing, taut side one branch.
        const double expected = 0.06 * network_force(model.joint_springs(), 0.006);
        CHECK(joint_restoring_torque(model, StiffnessSetting{0.0}, JointId::Hip, 0.1) ==
              doctest::Approx(expected).epsilon(1e-12));
        CHECK(expected == doctest::Approx(0.06 * 2.3304).epsilon(1e-6));
    }
    SUBCASE("odd in the deflection") {
        for (double dtheta : {0.02, 0.1, 0.5}) {
            const double forward =
                joint_restoring_torque(model, StiffnessSetting{0.02}, JointId::Hip, dtheta);
            const double backward =
                joint_restoring_torque(model, StiffnessSetting{0.02}, JointId::Hip, -dtheta);
            CHECK(backward == -forward);
        }
    }
    SUBCASE("non-decreasing in the slider over a 50x50 grid") {
        for (int i = 0; i < 50; ++i) {
            const double dtheta = 0.4 * (i + 1) / 50.0;
            double previous = -1.0;
            for (int j = 0; j < 50; ++j) {
                const double slider = 0.05 * j / 49.0;
                const double tau =
                    joint_restoring_torque(model, StiffnessSetting{slider}, JointId::Knee,
                                           dtheta);
                CHECK(tau >= previous);
                previous = tau;
            }
        }
    }
    SUBCASE("maximum setting dominates the minimum setting") {
        const double low =
            joint_restoring_torque(model, StiffnessSetting{0.0}, JointId::Hip, 0.05);
        const double high =
            joint_restoring_torque(model, StiffnessSetting{0.04}, JointId::Hip, 0.05);
        CHECK(high > low);
    }
    SUBCASE("tangent stiffness at zero deflection steps up with engaged branches") {
        const auto tangent = [&](double slider) {
            return oracles::derivative(
                [&](double t) {
                    return joint_restoring_torque(model, StiffnessSetting{slider},
                                                  JointId::Hip, t);
                },
                0.0, 1e-6);
        };
        CHECK(tangent(0.015) > tangent(0.005)); // two branches vs one
        CHECK(tangent(0.040) > tangent(0.015)); // three branches vs two
    }
}

TEST_CASE("required actuation torque") {
    const auto model = LegModel::prototype();
    // Oracle: direct evaluation of the winch reduction moment balance.
    const double base = 0.5 * 1.0 * kGravity * 0.83 * (0.005 / 0.060);
    CHECK(required_actuation_torque(model, 1.0, 1.0) == doctest::Approx(base).epsilon(1e-12));
    CHECK(base == doctest::Approx(0.339).epsilon(1e-3));
    CHECK(required_actuation_torque(model, 0.0, 1.0) == 0.0);

    // The printed 0.664 N*m corresponds to a safety factor near two.
    const double factor = 0.664 / base;
    CHECK(required_actuation_torque(model, 1.0, factor) == doctest::Approx(0.664));
    CHECK(factor == doctest::Approx(1.96).epsilon(1e-2));

    CHECK_THROWS_AS(required_actuation_torque(model, -1.0, 1.0), DomainError);
    CHECK_THROWS_AS(required_actuation_torque(model, 1.0, 0.0), DomainError);
}
