#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "agt/perm.hpp"

namespace agt {

using BigInt = boost::multiprecision::cpp_int;

// Finitely generated permutation group with an exact base/strong-generator
// chain (Schreier-Sims: randomized sifting warm-up, then a deterministic
// verification sweep). The chain is built at construction; all queries are
// read-only afterwards.
class PermGroup {
public:
    PermGroup(int degree, std::vector<Perm> generators);
    // Forces the leading base points (used for point stabilizers).
    PermGroup(int degree, std::vector<Perm> generators, std::vector<int> base_hint);
    static PermGroup trivial(int degree) { return PermGroup(degree, {}); }

    int degree() const { return degree_; }
    const std::vector<Perm>& generators() const { return gens_; }
    const std::vector<int>& base() const { return base_; }

    BigInt order() const;
    bool contains(const Perm& p) const;
    bool is_trivial() const { return order() == 1; }

    std::vector<int> orbit(int x) const; // sorted
    std::vector<std::vector<int>> orbits() const; // sorted, by least element
    PermGroup stabilizer(int x) const;

    bool is_transitive() const;
    bool is_semiregular() const; // no non-identity element fixes a point
    bool is_regular_action() const;

    // Nontrivial block system of a transitive group (minimal-block closure
    // seeded with {0,x}), or nullopt if primitive.
    std::optional<std::vector<std::vector<int>>> blocks() const;
    bool is_primitive() const;

    // Orbits on ordered pairs; requires transitivity.
    std::vector<std::vector<std::pair<int, int>>> orbitals() const;
    int rank() const;
    bool is_generously_transitive() const; // every orbital symmetric

    // Full element enumeration by transversal products; refuses above bound.
    std::vector<Perm> elements(long long bound = 1000000) const;
    // (1/|G|) * sum over g of fixed_count(g), exactly.
    long long burnside_orbit_count(const std::function<long long(const Perm&)>& fixed_count,
                                   long long bound = 1000000) const;

private:
    struct Level {
        int base_point = 0;
        std::vector<int> orbit;           // discovery order, orbit[0] = base_point
        std::vector<int> where;           // point -> index in orbit, -1 outside
        std::vector<Perm> transversal;    // transversal[i] maps base_point to orbit[i]
    };

    void build();
    void insert_strong(const Perm& g, int tag);
    void extend_base_for(const Perm& g);
    void recompute_level(int i);
    std::vector<Perm> level_gens(int i) const;
    std::pair<Perm, int> sift_from(Perm p, int start) const;

    int degree_ = 0;
    std::vector<Perm> gens_;          // cleaned input generators
    std::vector<int> base_;
    std::vector<Perm> strong_;        // strong generators
    std::vector<int> strong_tag_;     // strong_[k] fixes base_[0..tag-1], moves base_[tag]
    std::vector<Level> levels_;
    std::vector<int> hint_;
};

} // namespace agt
