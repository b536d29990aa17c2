#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homwb/module.hpp"

using namespace homwb;

namespace {

FDAlgebra::Ptr a2(Field f) {
    PathAlgebraPresentation p;
    p.quiver.vertices = {"1", "2"};
    p.quiver.arrows = {{"a", 0, 1}};
    p.field = f;
    return build_path_algebra(p);
}

FDAlgebra::Ptr dual_numbers(Field f) {
    PathAlgebraPresentation p;
    p.quiver.vertices = {"v"};
    p.quiver.arrows = {{"x", 0, 0}};
    p.relations = {{{{f.one(), {0, 0}}}}};
    p.field = f;
    return build_path_algebra(p);
}

// 1 <-> 2 -> 3 with both composites out of vertex 1 killed
FDAlgebra::Ptr gb_algebra(Field f) {
    PathAlgebraPresentation p;
    p.quiver.vertices = {"1", "2", "3"};
    p.quiver.arrows = {{"alpha", 0, 1}, {"beta", 1, 0}, {"gamma", 1, 2}};
    p.relations = {{{{f.one(), {0, 2}}}}, {{{f.one(), {0, 1}}}}};
    p.field = f;
    return build_path_algebra(p);
}

// dimension of the vertex-v component
std::size_t vertex_dim(const FDModule& m, std::size_t v) {
    return m.act_of(m.algebra()->path_info()->vertex_idempotents[v]).rank();
}

const FDModule& find_by_dim(const std::vector<FDModule>& mods, std::size_t d) {
    for (const auto& m : mods)
        if (m.dim() == d) return m;
    throw std::runtime_error("no module of that dimension");
}

}  // namespace

TEST_CASE("standard modules of A2") {
    auto a = a2(Field::prime(2));
    const auto& sm = standard_modules(a);
    REQUIRE(sm.simples.size() == 2);
    REQUIRE(sm.projectives.size() == 2);
    REQUIRE(sm.injectives.size() == 2);
    for (const auto& s : sm.simples) CHECK(s.dim() == 1);

    const FDModule& p1 = find_by_dim(sm.projectives, 2);
    CHECK(vertex_dim(p1, 0) == 1);
    CHECK(vertex_dim(p1, 1) == 1);
    const FDModule& p2 = find_by_dim(sm.projectives, 1);
    CHECK(vertex_dim(p2, 1) == 1);

    const FDModule& i1 = find_by_dim(sm.injectives, 1);
    CHECK(vertex_dim(i1, 0) == 1);  // I1 = S1
    const FDModule& i2 = find_by_dim(sm.injectives, 2);
    CHECK(vertex_dim(i2, 0) == 1);
    CHECK(vertex_dim(i2, 1) == 1);

    // alignment: simples[i] is the top of projectives[i] and socle of injectives[i]
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(is_isomorphic(top(sm.projectives[i]).module, sm.simples[i]));
        Matrix soc = radical_subspace(k_dual(sm.injectives[i]));
        auto socle = submodule(k_dual(sm.injectives[i]), soc);
        (void)socle;  // socle of I = D(rad-free top of D(I)); checked via tops below
        CHECK(is_isomorphic(top(k_dual(sm.injectives[i])).module, k_dual(sm.simples[i])));
    }
}

TEST_CASE("hom space dimensions") {
    auto a = a2(Field::prime(2));
    const auto& sm = standard_modules(a);
    const FDModule& p1 = find_by_dim(sm.projectives, 2);
    CHECK(hom_space(p1, p1).size() == 1);  // local endomorphism ring

    auto dn = dual_numbers(Field::rationals());
    FDModule reg = regular_module(dn);
    CHECK(hom_space(reg, reg).size() == 2);

    const FDModule& s1 = find_by_dim(sm.simples, 1);
    CHECK(hom_space(p1, find_by_dim(sm.injectives, 2)).size() == 1);
    (void)s1;
}

TEST_CASE("direct sum and decomposition") {
    auto a = a2(Field::prime(2));
    const auto& sm = standard_modules(a);
    auto ds = direct_sum({sm.simples[0], sm.simples[1]});
    CHECK(ds.module.dim() == 2);
    CHECK(radical_subspace(ds.module).cols() == 0);  // semisimple
    CHECK((ds.projections[0].mat * ds.inclusions[0].mat).is_identity());

    auto parts = decompose(regular_module(a));
    REQUIRE(parts.size() == 2);
    std::vector<std::size_t> dims{parts[0].module.dim(), parts[1].module.dim()};
    std::sort(dims.begin(), dims.end());
    CHECK(dims == std::vector<std::size_t>{1, 2});
    for (const auto& part : parts) {
        // inclusion/projection really split off the summand
        CHECK((part.projection.mat * part.inclusion.mat).is_identity());
        // indecomposable: semisimple part of End is one-dimensional
        auto [e, basis] = endomorphism_algebra(part.module);
        CHECK(e->dim() - e->radical_basis().cols() == 1);
    }
}

TEST_CASE("duality") {
    auto a = a2(Field::prime(2));
    const auto& sm = standard_modules(a);
    const FDModule& p1 = find_by_dim(sm.projectives, 2);
    FDModule d = k_dual(p1);
    CHECK(d.algebra().get() == a->opposite().get());
    CHECK(vertex_dim(d, 0) == 1);
    CHECK(vertex_dim(d, 1) == 1);
    // D(P1) is injective over the opposite algebra
    auto op_inj = direct_sum(standard_modules(a->opposite()).injectives);
    CHECK(in_add(d, op_inj.module));
    // applying D twice returns the identical representation
    FDModule dd = k_dual(d);
    CHECK(dd.algebra().get() == a.get());
    for (std::size_t i = 0; i < a->dim(); ++i) CHECK(dd.act(i) == p1.act(i));
}

TEST_CASE("three simples for the two-relation paper algebra") {
    auto g = gb_algebra(Field::prime(2));
    CHECK(g->dim() == 7);
    CHECK(standard_modules(g).simples.size() == 3);
}

TEST_CASE("add membership and cogeneration") {
    auto a = a2(Field::prime(2));
    const auto& sm = standard_modules(a);
    FDModule reg = regular_module(a);
    const FDModule& s1 = *std::find_if(sm.simples.begin(), sm.simples.end(),
                                       [](const FDModule& s) { return vertex_dim(s, 0) == 1; });
    const FDModule& s2 = *std::find_if(sm.simples.begin(), sm.simples.end(),
                                       [](const FDModule& s) { return vertex_dim(s, 1) == 1; });
    CHECK(in_add(s2, reg));   // S2 = P2 is projective
    CHECK(!in_add(s1, reg));  // S1 is not
    CHECK(in_add(find_by_dim(sm.projectives, 2), reg));

    CHECK(is_cogenerated_by(s2, reg));
    CHECK(!is_cogenerated_by(s1, reg));  // socle of the regular module is S2-isotypic
    FDModule cogen = direct_sum(sm.injectives).module;
    CHECK(is_cogenerated_by(find_by_dim(sm.projectives, 2), cogen));
    CHECK(is_cogenerated_by(reg, cogen));
}

TEST_CASE("submodule enumeration over F_2") {
    auto a = a2(Field::prime(2));
    const auto& sm = standard_modules(a);
    // P1: only 0, the socle, and P1 itself
    CHECK(enumerate_submodules(find_by_dim(sm.projectives, 2)).size() == 3);
    // S1 + S1: the action sees only the vertex split, all 5 subspaces survive
    auto s1 = *std::find_if(sm.simples.begin(), sm.simples.end(),
                            [](const FDModule& s) { return vertex_dim(s, 0) == 1; });
    CHECK(enumerate_submodules(direct_sum({s1, s1}).module).size() == 5);

    auto dn = dual_numbers(Field::prime(2));
    CHECK(enumerate_submodules(regular_module(dn)).size() == 3);
    CHECK_THROWS_AS(enumerate_submodules(regular_module(dual_numbers(Field::rationals()))),
                    std::invalid_argument);
}

TEST_CASE("isomorphism testing") {
    auto a = a2(Field::prime(2));
    const auto& sm = standard_modules(a);
    const FDModule& p1 = find_by_dim(sm.projectives, 2);
    CHECK(is_isomorphic(p1, p1));
    CHECK(!is_isomorphic(p1, direct_sum({sm.simples[0], sm.simples[1]}).module));
    CHECK(!is_isomorphic(sm.simples[0], sm.simples[1]));
}

TEST_CASE("factorization through maps") {
    auto a = a2(Field::prime(2));
    const auto& sm = standard_modules(a);
    const FDModule& p1 = find_by_dim(sm.projectives, 2);
    auto t = top(p1);
    const FDModule& s1 = t.module;
    // the identity of S1 does not factor through the cover P1 -> S1
    CHECK(!factor_through_epi(Morphism::identity(s1), t.map).has_value());
    // but the cover itself does, via the identity of P1
    auto lift = factor_through_epi(t.map, t.map);
    REQUIRE(lift.has_value());
    CHECK(t.map.mat * lift->mat == t.map.mat);

    // the socle does not split off the indecomposable P1
    Matrix soc = radical_subspace(p1);
    auto inc = submodule(p1, soc);
    CHECK(!factor_through_mono(Morphism::identity(inc.module), inc.map).has_value());
    // but a map from the socle into an injective extends along the inclusion
    const FDModule& i2 = find_by_dim(sm.injectives, 2);
    auto into_inj = hom_space(inc.module, i2);
    REQUIRE(into_inj.size() == 1);
    Morphism f = Morphism::unchecked(inc.module, i2, into_inj[0]);
    auto ext = factor_through_mono(f, inc.map);
    REQUIRE(ext.has_value());
    CHECK(ext->mat * inc.map.mat == f.mat);
}

TEST_CASE("kernels, images, exact sequences") {
    auto a = a2(Field::prime(2));
    const auto& sm = standard_modules(a);
    const FDModule& p1 = find_by_dim(sm.projectives, 2);
    auto t = top(p1);
    Morphism inc = submodule(p1, radical_subspace(p1)).map;
    ShortExactSequence ses{inc, t.map};
    CHECK(ses.is_exact());
    CHECK(is_isomorphic(inc.from, *std::find_if(sm.simples.begin(), sm.simples.end(),
                                                [](const FDModule& s) { return vertex_dim(s, 1) == 1; })));
    // kernel of the cover is the socle again
    Morphism k = kernel_inclusion(t.map);
    CHECK(k.from.dim() == 1);
    CHECK(image_submodule(inc).module.dim() == 1);
    CHECK(cokernel_projection(inc).module.dim() == 1);
}

TEST_CASE("spin generates cyclic submodules") {
    auto a = a2(Field::prime(2));
    const auto& sm = standard_modules(a);
    const FDModule& p1 = find_by_dim(sm.projectives, 2);
    // generator sitting at vertex 1 spins up all of P1
    Matrix gen = Matrix::zero(a->field(), 2, 0);
    for (std::size_t i = 0; i < 2; ++i) {
        Matrix v = Matrix::zero(a->field(), 2, 1);
        v.at(i, 0) = a->field().one();
        if (vertex_dim(p1, 0) && p1.act_of(a->path_info()->vertex_idempotents[0]) * v == v) {
            CHECK(spin(p1, v).cols() == 2);
        }
    }
    CHECK(spin(p1, radical_subspace(p1)).cols() == 1);
}

TEST_CASE("validation catches bad inputs") {
    auto a = a2(Field::prime(2));
    Field f = a->field();
    // unit must act as the identity
    std::vector<Matrix> bad(3, Matrix::zero(f, 1, 1));
    CHECK_THROWS_AS(FDModule::create(a, bad), std::invalid_argument);
    const auto& sm = standard_modules(a);
    const FDModule& p1 = find_by_dim(sm.projectives, 2);
    // a non-intertwining matrix is rejected
    Matrix m(f, 2, 2);
    m.at(0, 1) = f.one();
    CHECK_THROWS_AS(Morphism::create(p1, p1, m), std::invalid_argument);
}
