#include "doctest.h"
#include "trinion/alcove.hpp"

using namespace trinion;
using namespace trinion::alcove;

TEST_CASE("alcove validation accepts and rejects correctly") {
    CHECK_NOTHROW(validate_alcove({0.3, 0.1, -0.4}));
    CHECK_NOTHROW(validate_alcove({0.0, 0.0, 0.0}));
    CHECK_NOTHROW(validate_alcove({0.5, -0.5}));  // boundary of the affine wall
    CHECK_THROWS_AS(validate_alcove({0.1, 0.3, -0.4}), NotOrdered);
    CHECK_THROWS_AS(validate_alcove({0.6, 0.1, -0.7}), AffineBoundViolated);
    CHECK_THROWS_AS(validate_alcove({0.3, 0.2, -0.4}), NotTraceless);
}

TEST_CASE("face index lists the strict inequalities") {
    CHECK(face_of(AlcovePoint({0.3, 0.1, -0.4})) == FaceIndex{1, 2});
    CHECK(face_of(AlcovePoint({0.2, 0.2, -0.4})) == FaceIndex{2});
    CHECK(face_of(AlcovePoint({0.0, 0.0, 0.0})) == FaceIndex{});
}

TEST_CASE("torus exp/log round-trips in the interior") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const AlcovePoint a = random_interior(4, rng);
        const AlcovePoint back = torus_log(torus_exp(a));
        for (int i = 0; i < 4; ++i) {
            CHECK(back[i] == doctest::Approx(a[i]).epsilon(1e-9));
        }
    }
}

TEST_CASE("torus log picks the alcove branch on walls") {
    // diag(-1,-1) has both arguments 1/2; the traceless branch is (1/2,-1/2).
    Matrix v = -Matrix::Identity(2, 2);
    const AlcovePoint a = torus_log(TorusElement(v));
    CHECK(a[0] == doctest::Approx(0.5));
    CHECK(a[1] == doctest::Approx(-0.5));
}

TEST_CASE("torus log of the identity is the origin") {
    const AlcovePoint a = torus_log(TorusElement(Matrix::Identity(3, 3)));
    for (int i = 0; i < 3; ++i) CHECK(a[i] == doctest::Approx(0.0));
}

TEST_CASE("glue partner is an involution reversing the weights") {
    const AlcovePoint a({0.3, 0.1, -0.4});
    const AlcovePoint b = glue_partner(a);
    CHECK(b[0] == doctest::Approx(0.4));
    CHECK(b[1] == doctest::Approx(-0.1));
    CHECK(b[2] == doctest::Approx(-0.3));
    const AlcovePoint c = glue_partner(b);
    for (int i = 0; i < 3; ++i) CHECK(c[i] == doctest::Approx(a[i]));
}

TEST_CASE("glue partner pairs with torus inversion") {
    // exp of the partner equals the reversed inverse of exp.
    const AlcovePoint a({0.3, 0.1, -0.4});
    const TorusElement va = torus_exp(a);
    const TorusElement vb = torus_exp(glue_partner(a));
    const int n = 3;
    for (int i = 0; i < n; ++i) {
        CHECK(std::abs(vb.entry(i) - 1.0 / va.entry(n - 1 - i)) < 1e-12);
    }
}

TEST_CASE("torus element validation") {
    Matrix bad = Matrix::Identity(2, 2);
    bad(0, 1) = 0.5;
    CHECK_THROWS_AS(TorusElement{bad}, Error);
    Matrix det_off = Matrix::Identity(2, 2);
    det_off(0, 0) = 2.0;
    CHECK_THROWS_AS(TorusElement{det_off}, Error);
}
