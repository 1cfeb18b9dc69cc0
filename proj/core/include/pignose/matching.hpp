#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pignose/signed_perm.hpp"

namespace pignose {

// An ordered matching on a finite set of integers: ordered pairs (i,j)
// covering the ground set exactly once. The pair (i,j) is drawn as an upper
// arc when i < j and as a lower arc when i > j.
class OrderedMatching {
public:
    OrderedMatching() = default;
    explicit OrderedMatching(std::vector<std::pair<int, int>> pairs);  // validates coverage

    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
    std::vector<int> ground() const;  // sorted
    int size() const { return static_cast<int>(pairs_.size()); }

    // Text form "(a,b);(c,d);..." with pairs sorted by smaller endpoint.
    std::string str() const;
    static OrderedMatching parse(const std::string& text);

    friend bool operator==(const OrderedMatching& a, const OrderedMatching& b);

private:
    std::vector<std::pair<int, int>> pairs_;  // kept sorted by min endpoint
};

// Order-isomorphic relabeling onto [2m].
OrderedMatching standardize(const OrderedMatching& m);

// Rotation: replace 1 by 2n+1 and standardize (the ground set must be [2n]).
OrderedMatching rho(const OrderedMatching& m);
OrderedMatching rho_iter(const OrderedMatching& m, int k);

// 180-degree rotation i -> 2n+1-i (ground set must be [2n]).
OrderedMatching reverse(const OrderedMatching& m);

// Crossings: unordered pairs of same-side arcs whose spans strictly interleave.
int matching_crossings(const OrderedMatching& m);

// A matching on [2n] coming from the pignose diagram of an unsigned
// permutation: every ordered pair has an odd first and an even second entry.
bool is_pignose(const OrderedMatching& m);

// Pignose matching of an unsigned permutation of [n] on [2n].
OrderedMatching pignose_matching(const std::vector<int>& sigma);

// Pignose matching of pi on [2 neg(pi) + 2n]: each spiral arc is divided into
// an upper and a lower arc through a fresh pignose placed to the left of the
// diagram (spirals ordered by their source index, innermost first).
// Requires pi_1 > 0.
OrderedMatching split_spirals(const SignedPerm& pi);

// The symmetry bijection B_n^+ -> B_n^-: transport the split matching by
// rho^(2m+1) then reverse, contract the first 2m vertices back into spirals,
// and flip the sign of the first entry. Preserves cro, increases neg by one,
// and sends fwex to 2n+1-fwex.
SignedPerm phi(const SignedPerm& pi);

}  // namespace pignose
