#include <catch2/catch_amalgamated.hpp>

#include "arimat/semimatroid.hpp"
#include "helpers.hpp"

#include <random>

using namespace arimat;
using namespace testutil;

namespace {
Mask mask_of(const LocallyRankedTriple& t, std::initializer_list<const char*> labels) {
    Mask m = 0;
    for (const char* l : labels) m |= bit(t.index_of(l));
    return m;
}
}  // namespace

TEST_CASE("free matroid on two elements is a valid semimatroid") {
    LocallyRankedTriple t = free_matroid(2);
    REQUIRE(check_locally_ranked(t).ok());
    REQUIRE(check_semimatroid(t).ok());
}

TEST_CASE("rank 2 on a singleton violates R1") {
    LocallyRankedTriple t;
    t.ground = {"x"};
    t.central[0] = 0;
    t.central[1] = 2;
    TripleReport rep = check_locally_ranked(t);
    REQUIRE_FALSE(rep.ok());
    bool has_r1 = false;
    for (const auto& i : rep.issues)
        if (i.axiom == "R1") has_r1 = true;
    REQUIRE(has_r1);
}

TEST_CASE("pseudoline window is a valid semimatroid") {
    LocallyRankedTriple t = pseudoline_window(-1, 1);
    REQUIRE(t.n() == 15);
    REQUIRE(check_locally_ranked(t).ok());
    REQUIRE(check_semimatroid(t).ok());
}

TEST_CASE("matroids pass the semimatroid check") {
    REQUIRE(check_semimatroid(uniform_matroid(2, 3)).ok());
    std::mt19937 rng(11);
    for (int it = 0; it < 10; ++it) {
        IntMatrix a(2, 4);
        std::uniform_int_distribution<int> d(-2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 4; ++j) a(i, j) = d(rng);
        LocallyRankedTriple t = linear_matroid(a);
        REQUIRE(check_locally_ranked(t).ok());
        REQUIRE(check_semimatroid(t).ok());
    }
}

TEST_CASE("the quotient triple of the recurring example fails CR1") {
    // orbit data: 2^{a,b,c,d} plus 2^{a,b,e} plus 2^{d,e}
    LocallyRankedTriple t;
    t.ground = {"a", "b", "c", "d", "e"};
    auto add_cube = [&](std::initializer_list<const char*> labels) {
        Mask m = 0;
        for (const char* l : labels) m |= bit(t.index_of(l));
        for (Mask s = m;; s = (s - 1) & m) {
            t.central[s] = std::min(popcount(s), 2);
            if (s == 0) break;
        }
    };
    add_cube({"a", "b", "c", "d"});
    add_cube({"a", "b", "e"});
    add_cube({"d", "e"});
    REQUIRE(check_locally_ranked(t).ok());
    TripleReport rep = check_semimatroid(t);
    REQUIRE_FALSE(rep.ok());
    bool witnessed = false;
    for (const auto& i : rep.issues)
        if (i.axiom == "CR1" && i.detail.find("{a,b,c}") != std::string::npos &&
            i.detail.find("{a,b,e}") != std::string::npos)
            witnessed = true;
    REQUIRE(witnessed);
}

TEST_CASE("two-line affine arrangement is a valid semimatroid") {
    std::vector<AffineHyperplane> lines = {{{Int(1), Int(0)}, Int(0)}, {{Int(0), Int(1)}, Int(1)}};
    LocallyRankedTriple t = affine_arrangement_semimatroid(lines, 2);
    REQUIRE(check_locally_ranked(t).ok());
    REQUIRE(check_semimatroid(t).ok());
    REQUIRE(t.rk(3) == 2);
}

TEST_CASE("closure basics") {
    LocallyRankedTriple t = free_matroid(3);
    REQUIRE(closure(t, 0) == 0);
    for (Mask x = 0; x < 8; ++x) REQUIRE(closure(t, x) == x);
    LocallyRankedTriple w = pseudoline_window(0, 0);
    Mask ce = bit(w.index_of("c0")) | bit(w.index_of("e0"));  // parallel classes
    REQUIRE_FALSE(w.is_central(ce));
    REQUIRE_THROWS_AS(closure(w, ce), std::invalid_argument);
}

TEST_CASE("closure in the pseudoline window") {
    LocallyRankedTriple t = pseudoline_window(-1, 1);
    Mask ab = mask_of(t, {"a0", "b0"});
    REQUIRE(closure(t, ab) == mask_of(t, {"a0", "b0", "c0", "d0"}));
}

TEST_CASE("flats of the uniform matroid U_{2,3}") {
    LocallyRankedTriple t = uniform_matroid(2, 3);
    std::vector<Mask> fl = flats(t);
    REQUIRE(fl.size() == 5);  // bottom, three singletons, top
    FinitePoset p = flats_poset(t);
    REQUIRE(p.size() == 5);
    REQUIRE(p.bottom().has_value());
    REQUIRE(p.atoms().size() == 3);
}

TEST_CASE("flats of an arrangement window match the intersection semilattice") {
    // two translates each of x+y, x-y, x: 8 double points, 2 of them triple
    std::vector<AffineHyperplane> lines;
    for (int j : {0, 1}) lines.push_back({{Int(1), Int(1)}, Int(j)});
    for (int j : {0, 1}) lines.push_back({{Int(1), Int(-1)}, Int(j)});
    for (int j : {0, 1}) lines.push_back({{Int(1), Int(0)}, Int(j)});
    LocallyRankedTriple t = affine_arrangement_semimatroid(lines, 2);
    REQUIRE(check_semimatroid(t).ok());
    FinitePoset p = flats_poset(t);
    REQUIRE(p.size() == 15);  // 1 + 6 lines + 8 points
    REQUIRE(p.atoms().size() == 6);
    int points = 0;
    for (int i = 0; i < p.size(); ++i)
        if (p.node(i).rank == 2) ++points;
    REQUIRE(points == 8);
}

TEST_CASE("deletion and contraction of the empty set") {
    LocallyRankedTriple t = pseudoline_window(0, 1);
    REQUIRE(triples_equal(deletion(t, 0), t));
    REQUIRE(triples_equal(contraction(t, 0), t));
}

TEST_CASE("contraction of the window at e0") {
    LocallyRankedTriple t = pseudoline_window(-1, 1);
    LocallyRankedTriple c = contraction(t, bit(t.index_of("e0")));
    // ground: all a_i, b_i, d_i (c and e classes are parallel to e0)
    REQUIRE(c.n() == 9);
    for (const auto& l : c.ground) REQUIRE((l[0] == 'a' || l[0] == 'b' || l[0] == 'd'));
    // central family: empty set, singletons, and the pairs {a_i, b_{i-1}}
    for (const auto& [m, r] : c.central) {
        int size = popcount(m);
        REQUIRE(size <= 2);
        if (size == 0) REQUIRE(r == 0);
        if (size == 1) REQUIRE(r == 1);
        if (size == 2) {
            REQUIRE(r == 1);
            std::vector<std::string> labels;
            for (int i = 0; i < c.n(); ++i)
                if (m & bit(i)) labels.push_back(c.ground[i]);
            std::string a = labels[0][0] == 'a' ? labels[0] : labels[1];
            std::string b = labels[0][0] == 'b' ? labels[0] : labels[1];
            REQUIRE(a[0] == 'a');
            REQUIRE(b[0] == 'b');
            REQUIRE(std::stoi(a.substr(1)) == std::stoi(b.substr(1)) + 1);
        }
    }
    Mask a0b = Mask(0) | bit(c.index_of("a0")) | bit(c.index_of("b-1"));
    REQUIRE(c.is_central(a0b));
    REQUIRE(c.rk(a0b) == 1);
    REQUIRE(check_semimatroid(c).ok());
}

TEST_CASE("tutte polynomial basics") {
    LocallyRankedTriple single;
    single.ground = {"x"};
    single.central[0] = 0;
    single.central[1] = 1;
    BivariatePoly x_poly;
    x_poly.add_term(1, 0, 1);
    REQUIRE(tutte(single) == x_poly);

    LocallyRankedTriple loop;
    loop.ground = {"l"};
    loop.central[0] = 0;
    loop.central[1] = 0;
    BivariatePoly y_poly;
    y_poly.add_term(0, 1, 1);
    REQUIRE(tutte(loop) == y_poly);

    BivariatePoly u23;
    u23.add_term(2, 0, 1);
    u23.add_term(1, 0, 1);
    u23.add_term(0, 1, 1);
    REQUIRE(tutte(uniform_matroid(2, 3)) == u23);
}

TEST_CASE("activities on the free matroid") {
    LocallyRankedTriple t = free_matroid(3);
    GroundOrder pos = default_order(t);
    auto bs = bases(t);
    REQUIRE(bs.size() == 1);
    Activities a = activities(t, bs[0], pos);
    REQUIRE(a.external == 0);
    REQUIRE(popcount(a.internal) == 3);
}

TEST_CASE("activities and the Crapo sum on U_{2,3}") {
    LocallyRankedTriple t = uniform_matroid(2, 3);
    GroundOrder pos = default_order(t);
    auto bs = bases(t);
    REQUIRE(bs.size() == 3);
    Activities ab = activities(t, mask_of(t, {"a", "b"}), pos);
    REQUIRE(ab.external == 0);
    REQUIRE(basis_activity_tutte(t, pos) == tutte(t));
    REQUIRE(crapo_partition_check(t, pos));
    REQUIRE_THROWS_AS(activities(t, mask_of(t, {"a"}), pos), std::invalid_argument);
}

TEST_CASE("loops are externally active for every basis") {
    LocallyRankedTriple t = uniform_matroid(2, 3);
    int l = t.n();
    t.ground.push_back("l");
    std::unordered_map<Mask, int> ext;
    for (const auto& [m, r] : t.central) {
        ext[m] = r;
        ext[m | bit(l)] = r;
    }
    t.central = std::move(ext);
    GroundOrder pos = default_order(t);
    for (Mask b : bases(t)) {
        Activities a = activities(t, b, pos);
        REQUIRE((a.external & bit(l)) != 0);
    }
    REQUIRE(basis_activity_tutte(t, pos) == tutte(t));
}

TEST_CASE("molecules include (empty, B, empty) for every basis") {
    LocallyRankedTriple t = uniform_matroid(2, 3);
    for (Mask b : bases(t)) REQUIRE(is_molecule(t, 0, b, 0));
    LocallyRankedTriple w = pseudoline_window(0, 1);
    auto mols = molecules(w);
    bool found = false;
    for (const auto& m : mols)
        if (m.r == 0 && m.f == (bit(w.index_of("a0")) | bit(w.index_of("b0"))) && m.t == 0) found = true;
    REQUIRE(found);
}

TEST_CASE("activity tutte equals subset expansion on random structures") {
    std::mt19937 rng(2718);
    std::uniform_int_distribution<int> d(-2, 2);
    for (int it = 0; it < 30; ++it) {
        LocallyRankedTriple t;
        if (it % 2 == 0) {
            IntMatrix a(2 + int(rng() % 2), 4 + int(rng() % 3));
            for (int i = 0; i < a.rows(); ++i)
                for (int j = 0; j < a.cols(); ++j) a(i, j) = d(rng);
            t = linear_matroid(a);
        } else {
            t = affine_arrangement_semimatroid(random_arrangement(rng, 2, 4 + int(rng() % 3)), 2);
        }
        GroundOrder pos = default_order(t);
        REQUIRE(check_semimatroid(t).ok());
        REQUIRE(crapo_partition_check(t, pos));
        REQUIRE(basis_activity_tutte(t, pos) == tutte(t));
    }
}

TEST_CASE("deletion and contraction preserve the axioms") {
    std::mt19937 rng(555);
    for (int it = 0; it < 10; ++it) {
        LocallyRankedTriple t = affine_arrangement_semimatroid(random_arrangement(rng, 2, 5), 2);
        LocallyRankedTriple del = deletion(t, bit(1));
        REQUIRE(check_locally_ranked(del).ok());
        REQUIRE(check_semimatroid(del).ok());
        for (Mask x : t.central_sets()) {
            LocallyRankedTriple con = contraction(t, x);
            REQUIRE(check_locally_ranked(con).ok());
            REQUIRE(check_semimatroid(con).ok());
        }
    }
}

TEST_CASE("flats posets of matroids are geometric lattices") {
    std::mt19937 rng(808);
    std::uniform_int_distribution<int> d(-2, 2);
    for (int it = 0; it < 10; ++it) {
        IntMatrix a(3, 5);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 5; ++j) a(i, j) = d(rng);
        LocallyRankedTriple t = linear_matroid(a);
        FinitePoset p = flats_poset(t);
        REQUIRE(check_geometric_lattice(p).ok());
        REQUIRE(p.max_rank() == t.triple_rank());
    }
}
