#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "agt/errors.hpp"
#include "agt/perm.hpp"
#include "agt/permgroup.hpp"
#include "testutil.hpp"

using namespace agt;

namespace {

// closure of a generator set by plain breadth-first multiplication
std::set<Perm> brute_closure(int n, const std::vector<Perm>& gens, size_t cap = 100000) {
    std::set<Perm> seen{Perm::identity(n)};
    std::vector<Perm> queue{Perm::identity(n)};
    while (!queue.empty()) {
        Perm p = queue.back();
        queue.pop_back();
        for (const auto& g : gens) {
            Perm q = p * g;
            if (seen.insert(q).second) {
                REQUIRE(seen.size() <= cap);
                queue.push_back(q);
            }
        }
    }
    return seen;
}

std::vector<Perm> random_perms(int n, int count, std::mt19937& rng) {
    std::vector<Perm> out;
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    for (int i = 0; i < count; ++i) {
        std::shuffle(img.begin(), img.end(), rng);
        out.emplace_back(img);
    }
    return out;
}

} // namespace

TEST_CASE("permutation composition applies left factor first") {
    Perm a = Perm::parse_cycles("(0 1)", 3);
    Perm b = Perm::parse_cycles("(1 2)", 3);
    CHECK((a * b)(0) == 2);
    CHECK((b * a)(0) == 1);
    CHECK((a * a).is_identity());
    Perm c = Perm::parse_cycles("(0 1 2)(3 4)", 6);
    CHECK(c(0) == 1);
    CHECK(c(2) == 0);
    CHECK(c(3) == 4);
    CHECK(c(5) == 5);
    CHECK((c * c.inverse()).is_identity());
}

TEST_CASE("cycle notation round trip") {
    Perm c = Perm::parse_cycles("(0 1 2)(3 4)", 6);
    CHECK(c.cycle_string() == "(0 1 2)(3 4)");
    CHECK(Perm::identity(4).cycle_string() == "()");
    CHECK(Perm::parse_cycles("()", 4) == Perm::identity(4));
    CHECK(Perm::parse_cycles(c.cycle_string(), 6) == c);
    CHECK_THROWS_AS(Perm::parse_cycles("(0 1", 3), parse_error);
    CHECK_THROWS_AS(Perm::parse_cycles("(0 5)", 3), parse_error);
    CHECK_THROWS_AS(Perm::parse_cycles("(0 1)(1 2)", 3), parse_error);
}

TEST_CASE("group orders") {
    PermGroup s4(4, {Perm::parse_cycles("(0 1)", 4), Perm::parse_cycles("(0 1 2 3)", 4)});
    CHECK(s4.order() == 24);
    PermGroup a4(4, {Perm::parse_cycles("(0 1 2)", 4), Perm::parse_cycles("(1 2 3)", 4)});
    CHECK(a4.order() == 12);
    PermGroup d5(5, {Perm::parse_cycles("(0 1 2 3 4)", 5), Perm::parse_cycles("(1 4)(2 3)", 5)});
    CHECK(d5.order() == 10);
    PermGroup c7(7, {Perm::parse_cycles("(0 1 2 3 4 5 6)", 7)});
    CHECK(c7.order() == 7);
    CHECK(PermGroup::trivial(5).order() == 1);
    CHECK(PermGroup::trivial(5).is_trivial());
    // big degrees stay exact
    std::vector<int> img(30);
    std::iota(img.begin(), img.end(), 0);
    std::rotate(img.begin(), img.begin() + 1, img.end());
    PermGroup s30(30, {Perm::parse_cycles("(0 1)", 30), Perm(img)});
    CHECK(s30.order() == BigInt("265252859812191058636308480000000"));
}

TEST_CASE("membership") {
    PermGroup s4(4, {Perm::parse_cycles("(0 1)", 4), Perm::parse_cycles("(0 1 2 3)", 4)});
    CHECK(s4.contains(Perm::parse_cycles("(0 2)(1 3)", 4)));
    PermGroup a4(4, {Perm::parse_cycles("(0 1 2)", 4), Perm::parse_cycles("(1 2 3)", 4)});
    CHECK(a4.contains(Perm::parse_cycles("(0 1)(2 3)", 4)));
    CHECK_FALSE(a4.contains(Perm::parse_cycles("(0 1)", 4)));
    CHECK(a4.contains(Perm::identity(4)));
}

TEST_CASE("orbits and stabilizers") {
    PermGroup g(4, {Perm::parse_cycles("(0 1)", 4)});
    CHECK(g.orbits() == std::vector<std::vector<int>>{{0, 1}, {2}, {3}});
    CHECK_FALSE(g.is_transitive());

    PermGroup d5(5, {Perm::parse_cycles("(0 1 2 3 4)", 5), Perm::parse_cycles("(1 4)(2 3)", 5)});
    CHECK(d5.is_transitive());
    CHECK(d5.orbit(2) == std::vector<int>{0, 1, 2, 3, 4});
    PermGroup stab = d5.stabilizer(0);
    CHECK(stab.order() == 2);

    std::mt19937 rng(101);
    for (int trial = 0; trial < 15; ++trial) {
        int n = 4 + trial % 5;
        PermGroup grp(n, random_perms(n, 2, rng));
        for (int x = 0; x < n; ++x) // orbit-stabilizer identity
            CHECK(grp.order() == grp.stabilizer(x).order() * grp.orbit(x).size());
    }
}

TEST_CASE("blocks and primitivity") {
    PermGroup c4(4, {Perm::parse_cycles("(0 1 2 3)", 4)});
    auto blocks = c4.blocks();
    REQUIRE(blocks.has_value());
    CHECK(*blocks == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
    CHECK_FALSE(c4.is_primitive());

    PermGroup d4(4, {Perm::parse_cycles("(0 1 2 3)", 4), Perm::parse_cycles("(1 3)", 4)});
    CHECK(d4.order() == 8);
    CHECK_FALSE(d4.is_primitive());

    PermGroup s5(5, {Perm::parse_cycles("(0 1)", 5), Perm::parse_cycles("(0 1 2 3 4)", 5)});
    CHECK_FALSE(s5.blocks().has_value());
    CHECK(s5.is_primitive());

    PermGroup c5(5, {Perm::parse_cycles("(0 1 2 3 4)", 5)});
    CHECK(c5.is_primitive()); // prime degree cyclic

    PermGroup klein(4, {Perm::parse_cycles("(0 1)(2 3)", 4), Perm::parse_cycles("(0 2)(1 3)", 4)});
    CHECK_FALSE(klein.is_primitive());
    CHECK_THROWS_AS(PermGroup(4, {Perm::parse_cycles("(0 1)", 4)}).blocks(),
                    std::invalid_argument);
}

TEST_CASE("regular and semiregular actions") {
    PermGroup c6(6, {Perm::parse_cycles("(0 1 2 3 4 5)", 6)});
    CHECK(c6.is_semiregular());
    CHECK(c6.is_regular_action());
    PermGroup klein(4, {Perm::parse_cycles("(0 1)(2 3)", 4), Perm::parse_cycles("(0 2)(1 3)", 4)});
    CHECK(klein.is_regular_action());
    PermGroup s4(4, {Perm::parse_cycles("(0 1)", 4), Perm::parse_cycles("(0 1 2 3)", 4)});
    CHECK_FALSE(s4.is_semiregular());
    CHECK_FALSE(s4.is_regular_action());
    PermGroup swap2(4, {Perm::parse_cycles("(0 1)(2 3)", 4)});
    CHECK(swap2.is_semiregular()); // fixed-point-free but two orbits
    CHECK_FALSE(swap2.is_regular_action());
    PermGroup partial(4, {Perm::parse_cycles("(0 1)", 4)});
    CHECK_FALSE(partial.is_semiregular()); // (0 1) fixes 2 and 3
}

TEST_CASE("orbitals and rank") {
    PermGroup s4(4, {Perm::parse_cycles("(0 1)", 4), Perm::parse_cycles("(0 1 2 3)", 4)});
    CHECK(s4.rank() == 2);
    CHECK(s4.is_generously_transitive());

    PermGroup c5(5, {Perm::parse_cycles("(0 1 2 3 4)", 5)});
    CHECK(c5.rank() == 5);
    CHECK_FALSE(c5.is_generously_transitive());

    PermGroup d5(5, {Perm::parse_cycles("(0 1 2 3 4)", 5), Perm::parse_cycles("(1 4)(2 3)", 5)});
    CHECK(d5.rank() == 3);
    CHECK(d5.is_generously_transitive());

    auto orbs = d5.orbitals();
    size_t total = 0;
    for (const auto& o : orbs) total += o.size();
    CHECK(total == 25); // partition of all ordered pairs
}

TEST_CASE("element enumeration") {
    PermGroup s4(4, {Perm::parse_cycles("(0 1)", 4), Perm::parse_cycles("(0 1 2 3)", 4)});
    auto elems = s4.elements();
    CHECK(elems.size() == 24);
    std::set<Perm> uniq(elems.begin(), elems.end());
    CHECK(uniq.size() == 24);
    for (const auto& p : elems) CHECK(s4.contains(p));
    CHECK_THROWS_AS(s4.elements(10), bound_error);
}

TEST_CASE("bsgs order matches brute closure") {
    std::mt19937 rng(555);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 3 + trial % 5;
        auto gens = random_perms(n, 1 + trial % 3, rng);
        PermGroup grp(n, gens);
        CHECK(grp.order() == brute_closure(n, gens).size());
    }
}

TEST_CASE("burnside necklace count") {
    // rotations of 4 beads, 2 colors: 6 distinct necklaces
    PermGroup c4(4, {Perm::parse_cycles("(0 1 2 3)", 4)});
    auto two_to_cycles = [](const Perm& p) {
        std::vector<char> seen(p.degree(), 0);
        long long cycles = 0;
        for (int i = 0; i < p.degree(); ++i) {
            if (seen[i]) continue;
            ++cycles;
            for (int j = i; !seen[j]; j = p(j)) seen[j] = 1;
        }
        return 1LL << cycles;
    };
    CHECK(c4.burnside_orbit_count(two_to_cycles) == 6);
    // cross-check against the lifted action on all 16 colorings
    std::vector<Perm> lifted;
    for (const auto& g : c4.elements()) {
        std::vector<int> img(16);
        for (int mask = 0; mask < 16; ++mask) {
            int to = 0;
            for (int i = 0; i < 4; ++i)
                if (mask & (1 << i)) to |= 1 << g(i);
            img[mask] = to;
        }
        lifted.emplace_back(img);
    }
    CHECK(testutil::union_find_orbit_count(16, lifted) == 6);
}
