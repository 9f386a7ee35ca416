#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "stoneprob/band_projection.hpp"
#include "stoneprob/clopen_set.hpp"
#include "stoneprob/extended_real.hpp"
#include "stoneprob/harness/generator.hpp"
#include "stoneprob/lattice_element.hpp"

using namespace stoneprob;

namespace {

LatticeElement make(const StoneSpace& space, std::vector<double> v) {
    return LatticeElement(space, std::move(v));
}

} // namespace

TEST_CASE("stone space construction") {
    CHECK_THROWS_AS(StoneSpace(0), InvalidArgument);
    StoneSpace k(3);
    CHECK(k.atom_count() == 3);
    CHECK(k == StoneSpace(3));
    CHECK_FALSE(k == StoneSpace(4));
}

TEST_CASE("element construction and validation") {
    StoneSpace k(2);
    CHECK_THROWS_AS(make(k, {1.0}), InvalidArgument);
    CHECK_THROWS_AS(make(k, {1.0, std::nan("")}), InvalidArgument);

    LatticeElement x = make(k, {1.0, -2.0});
    CHECK(x.size() == 2);
    CHECK(x[0] == 1.0);
    CHECK(x[1] == -2.0);
    CHECK(x.is_finite());
    CHECK(x.in_sup_completion());

    LatticeElement u = make(k, {1.0, extreal::infinity});
    CHECK_FALSE(u.is_finite());
    CHECK(u.in_sup_completion());
    CHECK_FALSE(make(k, {-extreal::infinity, 0.0}).in_sup_completion());
}

TEST_CASE("extended scalar arithmetic") {
    const double inf = extreal::infinity;
    CHECK(extreal::add(1.0, inf) == inf);
    CHECK(extreal::add(-inf, -3.0) == -inf);
    CHECK_THROWS_AS(extreal::add(inf, -inf), UndefinedArithmetic);
    CHECK_THROWS_AS(extreal::subtract(inf, inf), UndefinedArithmetic);
    CHECK(extreal::multiply(0.0, inf) == 0.0);
    CHECK(extreal::multiply(inf, 0.0) == 0.0);
    CHECK(extreal::multiply(-2.0, inf) == -inf);
}

TEST_CASE("lattice operations on fixed vectors") {
    StoneSpace k(2);
    LatticeElement x = make(k, {1.0, -2.0});
    LatticeElement y = make(k, {0.0, 5.0});

    CHECK(x.sup(y) == make(k, {1.0, 5.0}));
    CHECK(x.inf(y) == make(k, {0.0, -2.0}));
    CHECK(x.abs() == make(k, {1.0, 2.0}));
    CHECK(x.positive_part() == make(k, {1.0, 0.0}));
    CHECK(x.negative_part() == make(k, {0.0, 2.0}));
    CHECK(x.add(y) == make(k, {1.0, 3.0}));
    CHECK(x.subtract(y) == make(k, {1.0, -7.0}));
    CHECK(x.scale(-2.0) == make(k, {-2.0, 4.0}));
    CHECK(x.multiply(y) == make(k, {0.0, -10.0}));
    CHECK(x.inf(y).leq(x));
    CHECK_FALSE(x.leq(y));
    CHECK((x + y) == x.add(y));
    CHECK((2.0 * x) == x.scale(2.0));
}

TEST_CASE("mismatched spaces are rejected") {
    LatticeElement a = make(StoneSpace(2), {1.0, 2.0});
    LatticeElement b = make(StoneSpace(3), {1.0, 2.0, 3.0});
    CHECK_THROWS_AS(a.add(b), SpaceMismatch);
    CHECK_THROWS_AS(a.sup(b), SpaceMismatch);
    CHECK_THROWS_AS((void)a.leq(b), SpaceMismatch);
}

TEST_CASE("sup completion arithmetic") {
    StoneSpace k(2);
    const double inf = extreal::infinity;
    LatticeElement u = make(k, {2.0, inf});
    LatticeElement v = make(k, {3.0, 1.0});

    CHECK(u.add(v) == make(k, {5.0, inf}));
    CHECK_THROWS_AS(u.subtract(u), UndefinedArithmetic);
    CHECK(u.scale(0.0) == LatticeElement::zero(k));
    CHECK(u.multiply(LatticeElement::zero(k)) == LatticeElement::zero(k));
    CHECK(make(k, {2.0, 1.0}).leq(u));
}

TEST_CASE("clopen sets and boolean structure") {
    StoneSpace k(4);
    ClopenSet a = ClopenSet::of(k, {0, 2});
    ClopenSet b = ClopenSet::of(k, {2, 3});

    CHECK(a.count() == 2);
    CHECK(a.unite(b) == ClopenSet::of(k, {0, 2, 3}));
    CHECK(a.intersect(b) == ClopenSet::of(k, {2}));
    CHECK(a.complement() == ClopenSet::of(k, {1, 3}));
    CHECK(a.difference(b) == ClopenSet::of(k, {0}));
    CHECK(a.intersect(b).subset_of(a));
    CHECK(a.difference(b).disjoint_with(b));
    CHECK(ClopenSet::empty(k).is_empty());
    CHECK(ClopenSet::full(k).is_full());
    CHECK(a.indicator() == make(k, {1.0, 0.0, 1.0, 0.0}));
    CHECK_THROWS_AS(ClopenSet::of(k, {4}), InvalidArgument);
}

TEST_CASE("band projections act by indicator multiplication") {
    StoneSpace k(3);
    const double inf = extreal::infinity;
    BandProjection p(ClopenSet::of(k, {0, 2}));
    LatticeElement u = make(k, {2.0, inf, -1.0});

    // Off the band everything is annihilated, infinities included.
    CHECK(p.apply(u) == make(k, {2.0, 0.0, -1.0}));
    CHECK(p.complement().apply(u) == make(k, {0.0, inf, 0.0}));
    CHECK(p.apply(p.apply(u)) == p.apply(u));
    CHECK(p.compose(p.complement()) == BandProjection::zero(k));
    CHECK(p.compose(BandProjection::identity(k)) == p);
    CHECK(p.leq(BandProjection::identity(k)));

    BandProjection q = band_projection_of(make(k, {0.0, 3.0, -0.5}));
    CHECK(q.band_support() == ClopenSet::of(k, {1, 2}));
}

TEST_CASE("finite infinite decomposition") {
    StoneSpace k(3);
    const double inf = extreal::infinity;
    LatticeElement u = make(k, {2.0, inf, 5.0});

    auto [fin, infinite] = finite_infinite_decomposition(u);
    CHECK(fin == make(k, {2.0, 0.0, 5.0}));
    CHECK(infinite == make(k, {0.0, inf, 0.0}));
    CHECK(fin.add(infinite) == u);
    CHECK(fin.is_finite());

    CHECK_THROWS_AS(finite_infinite_decomposition(make(k, {-inf, 0.0, 0.0})), NotSupCompletion);
}

TEST_CASE("family supremum over positive elements") {
    StoneSpace k(2);
    const double inf = extreal::infinity;
    std::vector<LatticeElement> family = {make(k, {1.0, 0.0}), make(k, {0.0, inf}),
                                          make(k, {0.5, 2.0})};
    CHECK(sup_family(family) == make(k, {1.0, inf}));
    CHECK_THROWS_AS(sup_family({}), EmptyFamily);

    std::vector<LatticeElement> negative = {make(k, {-3.0, 0.0})};
    CHECK_THROWS_AS(sup_family(negative), InvalidArgument);
}

TEST_CASE("vector lattice identities on random elements") {
    harness::SplitMix rng(2026);
    for (int trial = 0; trial < 200; ++trial) {
        StoneSpace k(1 + rng.below(8));
        std::vector<double> xv(k.atom_count()), yv(k.atom_count());
        for (auto& v : xv) v = rng.grid_value();
        for (auto& v : yv) v = rng.grid_value();
        LatticeElement x(k, xv), y(k, yv);

        // Riesz decomposition and the modulus identities, exactly.
        CHECK(x.positive_part().subtract(x.negative_part()) == x);
        CHECK(x.positive_part().add(x.negative_part()) == x.abs());
        CHECK(x.sup(y).add(x.inf(y)) == x.add(y));
        CHECK(x.sup(y).negate() == x.negate().inf(y.negate()));
        CHECK(x.inf(y).leq(x));
        CHECK(x.leq(x.sup(y)));
        CHECK(x.positive_part().multiply(x.negative_part()) == LatticeElement::zero(k));
    }
}
