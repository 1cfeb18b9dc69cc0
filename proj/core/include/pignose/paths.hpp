#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pignose/poly.hpp"
#include "pignose/signed_perm.hpp"

namespace pignose {

// ----- eight-step-type Motzkin paths -------------------------------------------
//
// Weighted Motzkin paths of length n where every step carries a type 1..8 and
// an index i. With h the lower height of an up/down step (or the height of a
// level step), the step weights are
//   1: up     q^i          0 <= i <= h        5: level  q^i        0 <= i <= h-1
//   2: up     y t q^{h+1+i} 0 <= i <= h       6: level  y t q^{h+i} 0 <= i <= h-1
//   3: level  y^2 q^i      0 <= i <= h        7: down   y^2 q^i    0 <= i <= h
//   4: level  y t q^{h+i}  0 <= i <= h        8: down   y t q^{h+i} 0 <= i <= h
// The total weight over all such paths of length n is B_n(y,t,q).

enum class StepDir { Up, Level, Down };

struct PathStep {
    StepDir dir = StepDir::Level;
    int type = 3;
    int index = 0;

    friend bool operator==(const PathStep&, const PathStep&) = default;
};

struct LabeledMotzkinPath {
    std::vector<PathStep> steps;

    int length() const { return static_cast<int>(steps.size()); }
    // Heights before each step; throws InvalidPathError if the profile dips
    // below zero, fails to return to zero, or an index bound is violated.
    std::vector<int> validate() const;
    std::vector<MultiPoly> step_weights() const;
    MultiPoly weight() const;

    // One step per token, e.g. "U2:1 L3:0 D7:0".
    std::string str() const;
    static LabeledMotzkinPath parse(const std::string& text);

    friend bool operator==(const LabeledMotzkinPath&, const LabeledMotzkinPath&) = default;
};

// ----- Motzkin suffixes ----------------------------------------------------------
//
// Paths from (0,k) to (n,0) staying nonnegative. Level steps carry y^2 q^i
// (0 <= i <= h) or q^i (0 <= i <= h-1); up steps y^2 q^i (0 <= i <= h); down
// steps q^i (0 <= i <= h, h the lower height). The generating function with
// prefactor (yt)^{starting height} is again B_n(y,t,q).

struct SuffixStep {
    StepDir dir = StepDir::Level;
    bool y2 = false;  // carries the y^2 factor (always true for Up, false for Down)
    int index = 0;

    friend bool operator==(const SuffixStep&, const SuffixStep&) = default;
};

struct MotzkinSuffix {
    int start_height = 0;
    std::vector<SuffixStep> steps;

    int length() const { return static_cast<int>(steps.size()); }
    std::vector<int> validate() const;        // heights before each step
    std::vector<MultiPoly> step_weights() const;  // without the (yt)^sh prefactor
    MultiPoly weight() const;                 // includes the (yt)^sh prefactor

    // "@h" then one token per step: "u:i" up, "ly:i"/"lq:i" level, "d:i" down.
    std::string str() const;
    static MotzkinSuffix parse(const std::string& text);

    friend bool operator==(const MotzkinSuffix&, const MotzkinSuffix&) = default;
};

// ----- enumeration ---------------------------------------------------------------

void for_each_mn(int n, const std::function<void(const LabeledMotzkinPath&)>& f,
                 int limit = kDefaultEnumLimit);
void for_each_nn(int n, const std::function<void(const MotzkinSuffix&)>& f,
                 int limit = kDefaultEnumLimit);

MultiPoly mn_weight_sum(int n, int limit = kDefaultEnumLimit);
MultiPoly nn_weight_sum(int n, int limit = kDefaultEnumLimit);

// ----- bijective encodings --------------------------------------------------------

// Ascent/pattern encoding: scans the values of pi from smallest to largest;
// step j records whether |pi|^{-1}(j) sits in a valley, double ascent, double
// descent, or peak of |pi| (conventions pi_0 = 0, pi_{n+1} = n+1), negated
// entries shifting the type by one. weight(fv1(pi)) = y^hasc t^neg q^pat.
LabeledMotzkinPath fv1(const SignedPerm& pi);

// Excedance/crossing encoding: scans the nodes 1..n of the arrow diagram of
// pi on [+-n]; weight(fz1(pi)) * (yt)^{start height} = y^fwex t^neg q^cro,
// with start height neg(pi).
MotzkinSuffix fz1(const SignedPerm& pi);

}  // namespace pignose
