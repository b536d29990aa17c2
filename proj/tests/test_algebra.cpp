#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homwb/algebra.hpp"

using namespace homwb;

namespace {

PathAlgebraPresentation a2(Field f) {
    PathAlgebraPresentation p;
    p.quiver.vertices = {"1", "2"};
    p.quiver.arrows = {{"a", 0, 1}};
    p.field = f;
    return p;
}

// 1 <-> 2 -> 3 with alpha: 1->2, beta: 2->1, gamma: 2->3 and relation
// alpha*beta*alpha (rightmost arrow applied first)
PathAlgebraPresentation two_cycle_with_tail(Field f) {
    PathAlgebraPresentation p;
    p.quiver.vertices = {"1", "2", "3"};
    p.quiver.arrows = {{"alpha", 0, 1}, {"beta", 1, 0}, {"gamma", 1, 2}};
    p.relations = {{{{f.one(), {0, 1, 0}}}}};
    p.field = f;
    return p;
}

PathAlgebraPresentation dual_numbers(Field f) {
    PathAlgebraPresentation p;
    p.quiver.vertices = {"v"};
    p.quiver.arrows = {{"x", 0, 0}};
    p.relations = {{{{f.one(), {0, 0}}}}};
    p.field = f;
    return p;
}

Matrix unit_vec(const Field& f, std::size_t dim, std::size_t i) {
    Matrix e = Matrix::zero(f, dim, 1);
    e.at(i, 0) = f.one();
    return e;
}

}  // namespace

TEST_CASE("A2 path algebra") {
    Field f = Field::prime(2);
    auto a = build_path_algebra(a2(f));
    REQUIRE(a->dim() == 3);
    CHECK(a->basis_labels() == std::vector<std::string>{"e_1", "e_2", "a"});
    Matrix e1 = unit_vec(f, 3, 0), e2 = unit_vec(f, 3, 1), arr = unit_vec(f, 3, 2);
    CHECK(a->unit() == e1 + e2);
    CHECK(a->multiply(arr, e1) == arr);   // a after e_1
    CHECK(a->multiply(e2, arr) == arr);   // e_2 after a
    CHECK(a->multiply(e1, arr).is_zero());
    CHECK(a->multiply(arr, arr).is_zero());
    CHECK(a->radical_basis().cols() == 1);
    CHECK(span_contains(a->radical_basis(), arr));
    REQUIRE(a->path_info().has_value());
    CHECK(a->path_info()->path_length == std::vector<std::size_t>{0, 0, 1});
    CHECK(a->path_info()->path_source[2] == 0);
    CHECK(a->path_info()->path_target[2] == 1);
}

TEST_CASE("two-cycle-with-tail algebra is 11-dimensional") {
    for (Field f : {Field::prime(2), Field::rationals()}) {
        auto a = build_path_algebra(two_cycle_with_tail(f));
        CHECK(a->dim() == 11);
        // semisimple quotient has one line per vertex
        CHECK(a->radical_basis().cols() == 8);
        // the killed path: beta*alpha composed with alpha again
        const auto& labels = a->basis_labels();
        CHECK(std::find(labels.begin(), labels.end(), "beta*alpha") != labels.end());
        CHECK(std::find(labels.begin(), labels.end(), "alpha*beta*alpha") == labels.end());
        CHECK(std::find(labels.begin(), labels.end(), "gamma*alpha*beta") != labels.end());
    }
}

TEST_CASE("dual numbers") {
    Field q = Field::rationals();
    auto a = build_path_algebra(dual_numbers(q));
    REQUIRE(a->dim() == 2);
    Matrix x = unit_vec(q, 2, 1);
    CHECK(a->multiply(x, x).is_zero());
    CHECK(a->radical_basis().cols() == 1);
    CHECK(span_contains(a->radical_basis(), x));
}

TEST_CASE("inadmissible and malformed inputs") {
    Field f = Field::prime(2);
    PathAlgebraPresentation loop;
    loop.quiver.vertices = {"v"};
    loop.quiver.arrows = {{"x", 0, 0}};
    loop.field = f;
    CHECK_THROWS_WITH_AS(build_path_algebra(loop), "ideal not admissible within cap",
                         std::runtime_error);

    PathAlgebraPresentation bad = a2(f);
    bad.relations = {{{{f.one(), {0, 0}}}}};  // a then a, but a ends at vertex 2
    CHECK_THROWS_AS(build_path_algebra(bad), std::invalid_argument);

    PathAlgebraPresentation shallow = a2(f);
    shallow.relations = {{{{f.one(), {0}}}}};  // single arrow is not admissible
    CHECK_THROWS_AS(build_path_algebra(shallow), std::invalid_argument);
}

TEST_CASE("opposite algebra matches the reversed quiver") {
    Field f = Field::prime(2);
    auto a = build_path_algebra(a2(f));
    auto op = a->opposite();
    CHECK(op->dim() == 3);
    CHECK(op->opposite().get() == a.get());

    PathAlgebraPresentation rev;
    rev.quiver.vertices = {"1", "2"};
    rev.quiver.arrows = {{"a", 1, 0}};
    rev.field = f;
    auto b = build_path_algebra(rev);
    // same basis order (e_1, e_2, a), so the tables must agree entry by entry
    for (std::size_t i = 0; i < 3; ++i) CHECK(op->left_mult(i) == b->left_mult(i));
    REQUIRE(op->path_info().has_value());
    CHECK(op->path_info()->path_source[2] == 1);
    CHECK(op->path_info()->path_target[2] == 0);
}

TEST_CASE("generic radical on abstract algebras") {
    // K x K: semisimple, radical zero, over both fields
    for (Field f : {Field::prime(3), Field::rationals()}) {
        std::vector<Matrix> lm = {Matrix::from_ints(f, 2, 2, {1, 0, 0, 0}),
                                  Matrix::from_ints(f, 2, 2, {0, 0, 0, 1})};
        CHECK(generic_radical(f, lm).cols() == 0);
        auto a = FDAlgebra::create(f, {"u", "v"}, lm, Matrix::from_ints(f, 2, 1, {1, 1}));
        CHECK(a->radical_basis().cols() == 0);
    }
    // K[x]/(x^2) given abstractly
    Field f2 = Field::prime(2);
    std::vector<Matrix> dn = {Matrix::identity(f2, 2), Matrix::from_ints(f2, 2, 2, {0, 0, 1, 0})};
    Matrix rad = generic_radical(f2, dn);
    CHECK(rad.cols() == 1);
    CHECK(span_contains(rad, unit_vec(f2, 2, 1)));
}

TEST_CASE("create validates unit and associativity") {
    Field q = Field::rationals();
    // broken unit: second basis element kills the would-be identity
    std::vector<Matrix> bad_unit = {Matrix::identity(q, 2), Matrix::from_ints(q, 2, 2, {0, 0, 0, 1})};
    CHECK_THROWS_AS(FDAlgebra::create(q, {"u", "x"}, bad_unit, Matrix::from_ints(q, 2, 1, {1, 0})),
                    std::logic_error);
    // x*x = y, x*y = 0, y*x = x is not associative: (xx)x = x but x(xx) = 0
    std::vector<Matrix> na = {Matrix::identity(q, 3),
                              Matrix::from_ints(q, 3, 3, {0, 0, 0, 1, 0, 0, 0, 1, 0}),
                              Matrix::from_ints(q, 3, 3, {0, 0, 0, 0, 1, 0, 1, 0, 0})};
    CHECK_THROWS_AS(FDAlgebra::create(q, {"u", "x", "y"}, na, Matrix::from_ints(q, 3, 1, {1, 0, 0})),
                    std::logic_error);
}

TEST_CASE("generators generate") {
    Field f = Field::prime(2);
    auto a = build_path_algebra(two_cycle_with_tail(f));
    CHECK(!a->generators().empty());
    CHECK(a->generators().size() < a->dim());
    // closure of unit + generators under products spans the algebra
    Matrix span = a->unit();
    for (auto g : a->generators()) span = span.hstack(unit_vec(f, a->dim(), g));
    for (;;) {
        Matrix next = span;
        for (std::size_t i = 0; i < span.cols(); ++i)
            for (std::size_t j = 0; j < span.cols(); ++j)
                next = next.hstack(a->multiply(span.col(i), span.col(j)));
        next = column_space_basis(next);
        if (next.cols() == span.cols()) break;
        span = next;
    }
    CHECK(span.rank() == a->dim());
}

TEST_CASE("quotient by the radical is semisimple") {
    Field f = Field::prime(2);
    auto a = build_path_algebra(two_cycle_with_tail(f));
    auto q = quotient_by_ideal(a, a->radical_basis());
    CHECK(q.algebra->dim() == 3);
    CHECK(q.algebra->radical_basis().cols() == 0);
    CHECK((q.projection * q.section).is_identity());
    // projection is an algebra map on the section's lifts
    Matrix u0 = q.section.col(0), u1 = q.section.col(1);
    CHECK(q.projection * a->multiply(u0, u1) ==
          q.algebra->multiply(q.projection * u0, q.projection * u1));
}
