#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "reachmap/arm_model.hpp"
#include "reachmap/collision.hpp"
#include "support/oracles.hpp"

using namespace reachmap;

namespace {

const ArmGeometry kGeom{0.30, 0.25, 0.18};

Eigen::Vector3d random_point(std::mt19937_64& gen) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    return {d(gen), d(gen), d(gen)};
}

}  // namespace

TEST_CASE("segment distance matches the nested ternary-search oracle") {
    std::mt19937_64 gen(12);
    for (int trial = 0; trial < 300; ++trial) {
        Eigen::Vector3d a0 = random_point(gen), a1 = random_point(gen);
        Eigen::Vector3d b0 = random_point(gen), b1 = random_point(gen);
        if (trial % 7 == 0) a1 = a0;  // degenerate: point vs segment
        if (trial % 11 == 0) b1 = b0;
        const double got = segment_segment_distance(a0, a1, b0, b1);
        const double expect = oracles::segment_distance_oracle(a0, a1, b0, b1);
        CHECK(std::abs(got - expect) < 1e-9);
    }
}

TEST_CASE("segment distance closed-form spot checks") {
    const Eigen::Vector3d o(0, 0, 0);
    // Parallel segments one unit apart.
    CHECK(segment_segment_distance({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}) ==
          doctest::Approx(1.0).epsilon(1e-12));
    // Perpendicular crossing segments intersect.
    CHECK(segment_segment_distance({-1, 0, 0}, {1, 0, 0}, {0, -1, 0}, {0, 1, 0}) < 1e-12);
    // Collinear with a gap.
    CHECK(segment_segment_distance({0, 0, 0}, {1, 0, 0}, {3, 0, 0}, {5, 0, 0}) ==
          doctest::Approx(2.0).epsilon(1e-12));
    // Skew: closest between interior points.
    CHECK(segment_segment_distance({-1, 0, 0}, {1, 0, 0}, {0, -1, 1}, {0, 1, 1}) ==
          doctest::Approx(1.0).epsilon(1e-12));
    // Both degenerate: point-point distance.
    CHECK(segment_segment_distance({0, 0, 0}, {0, 0, 0}, {1, 1, 1}, {1, 1, 1}) ==
          doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
    // A segment at distance zero from itself.
    CHECK(segment_segment_distance(o, {1, 2, 3}, o, {1, 2, 3}) == 0.0);
}

TEST_CASE("point-segment distance spot checks") {
    CHECK(point_segment_distance({0, 1, 0}, {-1, 0, 0}, {1, 0, 0}) ==
          doctest::Approx(1.0).epsilon(1e-12));
    // Beyond the end: distance to the endpoint.
    CHECK(point_segment_distance({2, 1, 0}, {-1, 0, 0}, {1, 0, 0}) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    // On the segment.
    CHECK(point_segment_distance({0.25, 0, 0}, {-1, 0, 0}, {1, 0, 0}) < 1e-15);
    // Degenerate segment.
    CHECK(point_segment_distance({3, 4, 0}, {0, 0, 0}, {0, 0, 0}) ==
          doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("capsule and sphere overlap is strict at the touching distance") {
    Capsule x{{0, 0, 0}, {1, 0, 0}, 0.5};
    Capsule y{{0, 1.0, 0}, {1, 1.0, 0}, 0.5};
    CHECK_FALSE(capsules_collide(x, y));  // exactly touching: no interpenetration
    y.radius = 0.5 + 1e-9;
    CHECK(capsules_collide(x, y));

    const Capsule c{{0, 0, 0}, {1, 0, 0}, 0.3};
    Sphere s{{0.5, 0.5, 0}, 0.2};
    CHECK_FALSE(capsule_sphere_collide(c, s));
    s.radius = 0.2 + 1e-9;
    CHECK(capsule_sphere_collide(c, s));
}

TEST_CASE("self-collision flags the poses anatomy forbids") {
    const CollisionModel cm = CollisionModel::default_model();

    JointAngles q;  // arm hanging at the side: clear
    CHECK_FALSE(self_collides(q, kGeom, cm));

    // Internal rotation plus deep elbow flexion swings the forearm through
    // the torso volume.
    q = JointAngles{};
    q[2] = kPi / 2.0;
    q[3] = 2.27;
    CHECK(self_collides(q, kGeom, cm));

    // Straight arm raised forward: everything stays lateral of the torso.
    q = JointAngles{};
    q[1] = kPi / 2.0;
    CHECK_FALSE(self_collides(q, kGeom, cm));

    // Straight arm raised laterally: clear by a wide margin.
    q = JointAngles{};
    q[0] = kPi / 2.0;
    CHECK_FALSE(self_collides(q, kGeom, cm));
}

TEST_CASE("both self_collides overloads agree") {
    const CollisionModel cm = CollisionModel::default_model();
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> d(-kPi / 2, kPi / 2);
    int hit = 0;
    for (int trial = 0; trial < 200; ++trial) {
        JointAngles q;
        for (int i = 0; i < kNumJoints; ++i) q[i] = d(gen);
        const bool via_q = self_collides(q, kGeom, cm);
        const bool via_points = self_collides(joint_positions(q, kGeom), cm);
        CHECK(via_q == via_points);
        hit += via_q ? 1 : 0;
    }
    // The sample must exercise both outcomes for the check to mean anything.
    CHECK(hit > 0);
    CHECK(hit < 200);
}

TEST_CASE("collision model validation") {
    CHECK_NOTHROW(CollisionModel::default_model().validate());
    CHECK(CollisionModel::default_model().checked_pairs.size() == 3);

    CollisionModel cm = CollisionModel::default_model();
    cm.torso.radius = 0.0;
    CHECK_THROWS_AS(cm.validate(), InvalidArgumentError);

    cm = CollisionModel::default_model();
    cm.shoulder_trim_fraction = 1.0;
    CHECK_THROWS_AS(cm.validate(), InvalidArgumentError);

    cm = CollisionModel::default_model();
    cm.forearm_hand_radius = -0.1;
    CHECK_THROWS_AS(cm.validate(), InvalidArgumentError);
}

TEST_CASE("trimming spares the shoulder end of the upper arm") {
    // A model whose torso hugs the shoulder: only the trim keeps the zero
    // pose legal. With trimming off the same pose must collide.
    CollisionModel cm = CollisionModel::default_model();
    cm.checked_pairs = {CollisionPair::kUpperArmVsTorso};
    cm.torso.a = Eigen::Vector3d(0.0, 0.0, -0.03);
    cm.torso.b = Eigen::Vector3d(0.0, 0.0, 0.10);
    cm.torso.radius = 0.05;
    cm.shoulder_trim_fraction = 0.5;

    const JointAngles q;  // upper arm from the shoulder straight down
    CHECK_FALSE(self_collides(q, kGeom, cm));
    cm.shoulder_trim_fraction = 0.0;
    CHECK(self_collides(q, kGeom, cm));
}
