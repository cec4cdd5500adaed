#include <doctest.h>

#include <set>

#include "dw/motion.hpp"

using namespace dw;

namespace {

std::vector<std::pair<Elt, Elt>> commuting_pairs(const FiniteGroup& G) {
    std::vector<std::pair<Elt, Elt>> out;
    for (Elt g = 0; g < G.order(); ++g)
        for (Elt h = 0; h < G.order(); ++h)
            if (G.commutes(g, h)) out.push_back({g, h});
    return out;
}

}  // namespace

TEST_CASE("link spec parsing") {
    auto L = LinkFamily::parse("torus:3,2,2");
    CHECK(L.kind == LinkFamily::Kind::Torus);
    CHECK(L.p == 3);
    CHECK(L.q == 2);
    CHECK(L.n == 2);
    CHECK(LinkFamily::parse("necklace:3").components() == 4);
    CHECK(LinkFamily::parse("hopf:2").components() == 2);
    CHECK_THROWS_AS(LinkFamily::parse("torus:2,2,1"), Error);  // not coprime
    CHECK_THROWS_AS(LinkFamily::parse("torus:3,2"), Error);
    CHECK_THROWS_AS(LinkFamily::parse("pretzel:1"), Error);
}

TEST_CASE("pi1 of the torus link families") {
    auto L = pi1(LinkFamily::parse("torus:3,2,2"));
    CHECK(L.pres.generator_names == std::vector<std::string>{"y", "u1", "x"});
    REQUIRE(L.pres.relators.size() == 2);
    CHECK(L.pres.relators[0] == Word::from_powers({{2, 3}, {0, -2}}));
    CHECK(L.pres.relators[1] == Word::from_powers({{0, 2}, {1, 1}, {0, -2}, {1, -1}}));
    REQUIRE(L.boundary.size() == 2);
    CHECK(L.boundary[0].meridian == Word::from_powers({{0, 1}, {1, -1}}));
    CHECK(L.boundary[1].meridian == Word::from_powers({{1, 1}, {2, -1}}));
    CHECK(L.boundary[0].longitude == Word::gen(2, 3));

    // re-parse: serialized pi1 comes back identical
    Presentation reparsed = parse_presentation(serialize_presentation(L.pres));
    CHECK(reparsed.generator_names == L.pres.generator_names);
    CHECK(reparsed.relators == L.pres.relators);
    auto L3 = pi1(LinkFamily::parse("torus:3,2,3"));
    CHECK(L3.pres.num_generators() == 4);
    CHECK(L3.pres.relators.size() == 3);
}

TEST_CASE("pi1 of necklace and hopf links") {
    auto N = pi1(LinkFamily::parse("necklace:2"));
    CHECK(N.pres.generator_names == std::vector<std::string>{"x", "x1", "x2"});
    CHECK(N.pres.relators.size() == 2);  // [x, xi]
    REQUIRE(N.boundary.size() == 3);     // two components plus the axis
    CHECK(N.boundary[2].meridian == Word::gen(0));
    CHECK(N.boundary[2].longitude == Word::gen(1) * Word::gen(2));

    auto H = pi1(LinkFamily::parse("hopf:1"));
    CHECK(H.pres.generator_names == std::vector<std::string>{"y", "x1"});
    REQUIRE(H.pres.relators.size() == 1);
    CHECK(H.pres.relators[0] == Word::from_powers({{0, 1}, {1, 1}, {0, -1}, {1, -1}}));
}

TEST_CASE("motion generator formulas") {
    // torus sigma_1 at n=3: u1 -> y u1^-1 u2, everything else fixed
    auto gens = motion_generators(LinkFamily::parse("torus:3,2,3"));
    REQUIRE(gens.size() == 2 + 3);  // s1 s2 r1 r2 r3
    const auto& s1 = gens[0];
    CHECK(s1.name == "s1");
    CHECK(s1.endo.images[1] == Word::from_powers({{0, 1}, {1, -1}, {2, 1}}));
    CHECK(s1.endo.images[2] == Word::gen(2));
    CHECK(s1.endo.images[3] == Word::gen(3));
    CHECK(s1.endo.images[0] == Word::gen(0));

    // torus rho_1 at n=2: conjugates u1 and x by y u1^-1, fixes y
    auto gens2 = motion_generators(LinkFamily::parse("torus:3,2,2"));
    const auto& r1 = gens2[1];
    CHECK(r1.name == "r1");
    Word m = Word::gen(0) * Word::gen(1, -1);
    CHECK(r1.endo.images[1] == m * Word::gen(1) * m.inverse());
    CHECK(r1.endo.images[2] == m * Word::gen(2) * m.inverse());
    CHECK(r1.endo.images[0] == Word::gen(0));

    // necklace rotation: x1 -> xn, xi -> x_{i-1}
    auto ngens = motion_generators(LinkFamily::parse("necklace:3"));
    const auto& p = ngens.back();
    CHECK(p.name == "p");
    CHECK(p.endo.images[1] == Word::gen(3));
    CHECK(p.endo.images[2] == Word::gen(1));
    CHECK(p.endo.images[3] == Word::gen(2));
    CHECK(p.endo.images[0] == Word::gen(0));
}

TEST_CASE("motion_rep dimensions against brute force") {
    FiniteGroup S3 = make_group("S:3");
    // trivial label on TL(3,2)^2: only the trivial class survives
    auto R = motion_rep(LinkFamily::parse("torus:3,2,2"), S3, {0, 0});
    CHECK(R.space.dim() == 1);
    // golden values from the exhaustive oracle
    Elt t = S3.element_by_label("(12)").value();
    auto R2 = motion_rep(LinkFamily::parse("torus:3,2,2"), S3, {t, 0});
    CHECK(R2.space.dim() == 2);
    auto R3 = motion_rep(LinkFamily::parse("torus:3,2,3"), S3, {t, 0});
    CHECK(R3.space.dim() == 14);

    FiniteGroup Z1 = make_group("Z:1");
    auto RT = motion_rep(LinkFamily::parse("torus:3,2,2"), Z1, {0, 0});
    CHECK(RT.space.dim() == 1);
    for (const auto& p : RT.rep.perms) CHECK(p == std::vector<int>{0});
}

TEST_CASE("motion family selection") {
    CHECK(motion_family(3, 2) == MotionFamily::Odd);
    CHECK(motion_family(3, 1) == MotionFamily::Even);
    CHECK(motion_family(1, 1) == MotionFamily::Hopf);
}

TEST_CASE("odd family relations over S3") {
    FiniteGroup S3 = make_group("S:3");
    for (int n : {2, 3}) {
        auto mp = motion_presentation(MotionFamily::Odd, n);
        for (auto [g, h] : commuting_pairs(S3)) {
            auto R = motion_rep(LinkFamily{LinkFamily::Kind::Torus, 3, 2, n}, S3, {g, h});
            if (R.space.dim() == 0) continue;
            auto rel = verify_motion_relations(R.rep, mp);
            CHECK(rel.all_ok);
        }
    }
}

TEST_CASE("braid relation holds for TL(3,2)^3") {
    FiniteGroup S3 = make_group("S:3");
    Elt t = S3.element_by_label("(12)").value();
    auto R = motion_rep(LinkFamily::parse("torus:3,2,3"), S3, {t, 0});
    const auto& s1 = R.rep.perm("s1");
    const auto& s2 = R.rep.perm("s2");
    auto mul = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> c(a.size());
        for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
        return c;
    };
    CHECK(mul(mul(s1, s2), s1) == mul(mul(s2, s1), s2));
}

TEST_CASE("even family relations at (3,1)") {
    FiniteGroup S3 = make_group("S:3");
    for (int n : {2, 3}) {
        auto mp = motion_presentation(MotionFamily::Even, n);
        bool has_r2pi = false;
        for (const auto& [label, w] : mp.relators) has_r2pi |= label == "r_2pi^2 = 1";
        CHECK(has_r2pi);
        for (auto [g, h] : commuting_pairs(S3)) {
            auto R = motion_rep(LinkFamily{LinkFamily::Kind::Torus, 3, 1, n}, S3, {g, h});
            if (R.space.dim() == 0) continue;
            CHECK(verify_motion_relations(R.rep, mp).all_ok);
        }
    }
}

TEST_CASE("hopf family relations at (1,1)") {
    FiniteGroup S3 = make_group("S:3");
    for (int n : {2, 3}) {
        auto mp = motion_presentation(MotionFamily::Hopf, n);
        for (auto [g, h] : commuting_pairs(S3)) {
            auto R = motion_rep(LinkFamily{LinkFamily::Kind::Torus, 1, 1, n}, S3, {g, h});
            if (R.space.dim() == 0) continue;
            CHECK(verify_motion_relations(R.rep, mp).all_ok);
        }
    }
}

TEST_CASE("psi bijection on every nonempty block") {
    FiniteGroup S3 = make_group("S:3");
    for (auto [g, h] : commuting_pairs(S3)) {
        for (auto block : nonempty_blocks(S3, 3, 2, 2, {g, h})) {
            auto rep = psi_bijection(S3, 3, 2, 2, {g, h}, block);
            CHECK(rep.well_defined);
            CHECK(rep.injective);
            CHECK(rep.surjective);
            CHECK(rep.natural);
            CHECK(rep.s_dim == rep.f_dim);
        }
    }
}

TEST_CASE("psi on the trivial-label block over the trivial group") {
    FiniteGroup Z1 = make_group("Z:1");
    auto blocks = nonempty_blocks(Z1, 3, 2, 2, {0, 0});
    REQUIRE(blocks.size() == 1);
    auto rep = psi_bijection(Z1, 3, 2, 2, {0, 0}, blocks[0]);
    CHECK(rep.s_dim == 1);
    CHECK(rep.f_dim == 1);
    CHECK(rep.ok());
}

TEST_CASE("psi rejects an empty block") {
    FiniteGroup S3 = make_group("S:3");
    Elt t = S3.element_by_label("(12)").value();
    // trivial label leaves only the ([e],[e]) block; ([x]=[(12)],[y]=[e]) is empty
    CHECK_THROWS_AS(psi_bijection(S3, 3, 2, 2, {0, 0}, {t, 0}), Error);
}

TEST_CASE("thm2 decomposition") {
    FiniteGroup S3 = make_group("S:3");
    for (auto [g, h] : commuting_pairs(S3)) {
        auto rep = thm2_decomposition(S3, 3, 2, 2, {g, h});
        CHECK(rep.ok);
        CHECK(rep.lhs_dim == rep.rhs_total);
        CHECK(rep.u == 1);
        CHECK(rep.v == 1);
    }
    FiniteGroup Z6 = make_group("Z:6");
    auto r = thm2_decomposition(Z6, 3, 2, 2, {3, 3});
    CHECK(r.ok);
    CHECK(r.lhs_dim == 0);  // empty labeled space, trivially equal
    auto r2 = thm2_decomposition(Z6, 3, 2, 2, {0, 0});
    CHECK(r2.ok);
    CHECK(r2.lhs_dim == 1);
    FiniteGroup Z1 = make_group("Z:1");
    CHECK(thm2_decomposition(Z1, 3, 2, 2, {0, 0}).ok);
}

TEST_CASE("thm2 base point independence") {
    FiniteGroup S3 = make_group("S:3");
    Elt t = S3.element_by_label("(12)").value();
    auto a = thm2_decomposition(S3, 3, 2, 2, {t, 0}, 0);
    auto b = thm2_decomposition(S3, 3, 2, 2, {t, 0}, 1);
    CHECK(a.ok);
    CHECK(b.ok);
    REQUIRE(a.blocks.size() == b.blocks.size());
    for (size_t i = 0; i < a.blocks.size(); ++i) {
        CHECK(a.blocks[i].s_dim == b.blocks[i].s_dim);
        CHECK(a.blocks[i].f_dim == b.blocks[i].f_dim);
    }
}

TEST_CASE("necklace diagram for valid labels") {
    FiniteGroup S3 = make_group("S:3");
    Elt c3 = S3.element_by_label("(123)").value();
    for (int n : {2, 3}) {
        auto rep = necklace_T_check(S3, n, 0, c3, 0);
        CHECK(rep.bijection);
        CHECK(rep.squares_commute);
        CHECK(rep.images_equal);
        CHECK(rep.dim_link == rep.dim_disk);
    }
    // a transposition does not commute with (123): invalid labels are rejected
    Elt t = S3.element_by_label("(12)").value();
    CHECK_THROWS_AS(necklace_T_check(S3, 2, t, c3, 0), Error);
}

TEST_CASE("necklace image equality across all valid labels") {
    FiniteGroup S3 = make_group("S:3");
    for (int n : {2, 3}) {
        auto cc = conjugacy_classes(S3);
        for (Elt gc = 0; gc < S3.order(); ++gc) {
            auto cen = centralizer(S3, {gc});
            for (Elt g : cen)
                for (Elt hc : cen) {
                    auto rep = necklace_T_check(S3, n, g, gc, hc);
                    CHECK(rep.bijection);
                    CHECK(rep.squares_commute);
                    CHECK(rep.images_equal);
                }
        }
    }
}

TEST_CASE("motion_rep rejects bad axis usage") {
    FiniteGroup S3 = make_group("S:3");
    CHECK_THROWS_AS(motion_rep(LinkFamily::parse("necklace:2"), S3, {0, 0}), Error);
    CHECK_THROWS_AS(
        motion_rep(LinkFamily::parse("torus:3,2,2"), S3, {0, 0}, FluxLabel{0, 0}), Error);
}

TEST_CASE("hopf model: braid relations hold and the rotation is consistent") {
    FiniteGroup S3 = make_group("S:3");
    auto R = motion_rep(LinkFamily::parse("hopf:3"), S3, {S3.element_by_label("(12)").value(), 0});
    const auto& s1 = R.rep.perm("s1");
    const auto& s2 = R.rep.perm("s2");
    const auto& p = R.rep.perm("p");
    auto mul = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> c(a.size());
        for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
        return c;
    };
    CHECK(mul(mul(s1, s2), s1) == mul(mul(s2, s1), s2));
    // p s_i p^-1 = s_{i-1} style conjugation for the rotation: check p^n = id
    std::vector<int> acc(p.size());
    for (size_t i = 0; i < p.size(); ++i) acc[i] = (int)i;
    for (int i = 0; i < 3; ++i) acc = mul(acc, p);
    bool is_id = true;
    for (size_t i = 0; i < acc.size(); ++i) is_id &= acc[i] == (int)i;
    CHECK(is_id);
}
