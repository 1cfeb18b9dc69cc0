#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "pignose/errors.hpp"
#include "pignose/ints.hpp"

namespace pignose {

// A signed permutation pi on [n]: a permutation of [n] in which each value may
// be negated. Viewed as a bijection on [+-n] via pi(-i) = -pi(i).
class SignedPerm {
public:
    SignedPerm() = default;
    explicit SignedPerm(std::vector<int> images);  // validates

    int n() const { return static_cast<int>(img_.size()); }
    // pi_i for i in [1..n].
    int image(int i) const { return img_[static_cast<std::size_t>(i - 1)]; }
    // pi(i) for i in [+-n].
    int map(int i) const { return i > 0 ? image(i) : -image(-i); }
    const std::vector<int>& images() const { return img_; }

    // Comma-separated one-line form, e.g. "4,-6,1,-5,-3,7,2".
    std::string str() const;
    static SignedPerm parse(const std::string& text);

    friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
    friend bool operator<(const SignedPerm& a, const SignedPerm& b) { return a.img_ < b.img_; }

private:
    std::vector<int> img_;
};

// The eight classical/flag statistics. des_b uses the convention pi_0 = 0.
struct StatRecord {
    int wex = 0;
    int exc = 0;
    int des = 0;
    int des_b = 0;
    int neg = 0;
    int fwex = 0;  // 2*wex + neg
    int fexc = 0;  // 2*exc + neg
    int fdes = 0;  // des + des_b
};

StatRecord stats(const SignedPerm& pi);

// Crossing count: pairs (i,j), i,j > 0, with i<j<=pi_i<pi_j, or
// -i<j<=-pi_i<pi_j, or i>j>pi_i>pi_j.
int crossings(const SignedPerm& pi);

// ----- full pignose diagram -------------------------------------------------
//
// 2n pignoses labeled -n..-1,1..n on 4n vertex positions (1..4n, left to
// right; the pignose labeled -n occupies positions (1,2), the one labeled n
// positions (4n-1,4n)). The first/second vertex of a pignose are its
// left/right vertex for positive labels and right/left for negative ones.
// The arc for i runs from the first vertex of pignose i to the second vertex
// of pignose pi(i), above the line iff pi(i) > i, or pi(i) = i with i > 0.
// The drawing is symmetric under 180-degree rotation.

struct PignoseArc {
    int lo = 0;       // smaller vertex position
    int hi = 0;       // larger vertex position
    bool upper = false;
    int source = 0;   // label i the arc belongs to
};

struct FullPignoseDiagram {
    int n = 0;
    std::vector<PignoseArc> arcs;  // 2n arcs, indexed by source -n..-1,1..n

    static FullPignoseDiagram of(const SignedPerm& pi);
    // Vertex positions of the pignose with the given label.
    static std::pair<int, int> pignose_positions(int n, int label);
};

// Alignments: unordered arc pairs in the full diagram that are nested on the
// same side or disjoint on opposite sides.
int alignments(const SignedPerm& pi);

// Same-side strictly interleaved arc pairs in the full diagram; equals
// 2*crossings(pi) and serves as a geometric cross-check.
int full_diagram_crossings(const SignedPerm& pi);

// Alignments of an unsigned permutation on its single-sided pignose diagram
// (2n vertices, arc i from vertex 2i-1 to vertex 2 sigma_i). With k weak
// excedances, cro + al = (k-1)(n-k).
int alignments_type_a(const std::vector<int>& sigma);

// Crossing count read off the signed arrow diagram of |pi| (n dots, arrow
// i -> |pi_i| above the axis iff i <= |pi_i|, labeled with the sign of pi_i)
// by matching the six local configurations. Agrees with crossings() for
// every pi; kept as an independent route.
int crossings_via_configurations(const SignedPerm& pi);

// Arcs straddling the vertical line through the middle of the pignose
// labeled +k (positive_side) or -k in the full diagram.
struct LineCounts {
    int upper = 0;
    int lower = 0;
};
LineCounts line_counts(const SignedPerm& pi, int k, bool positive_side);

// ----- involutive transforms ------------------------------------------------

SignedPerm negate(const SignedPerm& pi);        // -pi
SignedPerm transpose(const SignedPerm& pi);     // signed inverse pi^tr
SignedPerm negate_first(const SignedPerm& pi);  // pi^- : flip sign of pi_1

// ----- pattern-like statistics ----------------------------------------------

// mot(sigma,i) = #{ j : 1 <= j <= i-2, sigma_j > sigma_i > sigma_{j+1} } and
// mott(sigma,i) = #{ j : i < j < m, sigma_j > sigma_i > sigma_{j+1} } for an
// unsigned permutation sigma of [m] (31-2-style pattern counts).
int mot_at(const std::vector<int>& sigma, int i);
int mott_at(const std::vector<int>& sigma, int i);
int unsigned_mot(const std::vector<int>& sigma);

struct PatternStats {
    int hasc = 0;      // 2*#{i in [0,n-1] : |pi_i| < pi_{i+1}} + neg (pi_0 = 0)
    int pat = 0;       // the two bracket counts, conventions pi_{n+1} = n+1
    int fneg = 0;      // sign descents + -> - in the doubled word
    int mot_plus = 0;  // sum of mot over positions of the doubled word with value > n
};

PatternStats pattern_stats(const SignedPerm& pi);

// ----- enumeration ------------------------------------------------------------

inline constexpr int kDefaultEnumLimit = 8;

// Visits all 2^n n! signed permutations in lexicographic order of the image
// sequence under the integer order -n < ... < -1 < 1 < ... < n.
template <class F>
void for_each_bn(int n, F&& f, int limit = kDefaultEnumLimit) {
    if (n < 0 || n > limit)
        throw LimitExceededError("B_n enumeration limited to n <= " + std::to_string(limit));
    std::vector<int> img(static_cast<std::size_t>(n));
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == n) {
            f(SignedPerm(img));
            return;
        }
        for (int v = -n; v <= n; ++v) {
            if (v == 0 || used[static_cast<std::size_t>(v < 0 ? -v : v)]) continue;
            used[static_cast<std::size_t>(v < 0 ? -v : v)] = true;
            img[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1);
            used[static_cast<std::size_t>(v < 0 ? -v : v)] = false;
        }
    };
    rec(rec, 0);
}

std::vector<SignedPerm> enumerate_bn(int n, int limit = kDefaultEnumLimit);

// Unsigned permutations of [n] in lexicographic order.
template <class F>
void for_each_sn(int n, F&& f, int limit = kDefaultEnumLimit) {
    if (n < 0 || n > limit)
        throw LimitExceededError("S_n enumeration limited to n <= " + std::to_string(limit));
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
    do {
        f(img);
    } while (std::next_permutation(img.begin(), img.end()));
}

}  // namespace pignose
