#include "pignose/signed_perm.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "pignose/errors.hpp"

namespace pignose {

SignedPerm::SignedPerm(std::vector<int> images) : img_(std::move(images)) {
    int n = static_cast<int>(img_.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : img_) {
        int a = std::abs(v);
        if (a < 1 || a > n || seen[static_cast<std::size_t>(a)])
            throw Error("not a signed permutation: " + str());
        seen[static_cast<std::size_t>(a)] = true;
    }
}

std::string SignedPerm::str() const {
    std::string s;
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(img_[i]);
    }
    return s;
}

SignedPerm SignedPerm::parse(const std::string& text) {
    std::vector<int> img;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos >= text.size()) break;
        std::size_t start = pos;
        if (text[pos] == '-' || text[pos] == '+') ++pos;
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError("expected integer", pos);
        long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 1'000'000) throw ParseError("value too large", start);
            ++pos;
        }
        img.push_back(text[start] == '-' ? -static_cast<int>(v) : static_cast<int>(v));
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos < text.size()) {
            if (text[pos] != ',') throw ParseError("expected ','", pos);
            ++pos;
        }
    }
    if (img.empty() && !text.empty()) throw ParseError("empty permutation", 0);
    try {
        return SignedPerm(std::move(img));
    } catch (const Error& e) {
        throw ParseError(e.what(), 0);
    }
}

StatRecord stats(const SignedPerm& pi) {
    StatRecord r;
    int n = pi.n();
    for (int i = 1; i <= n; ++i) {
        int v = pi.image(i);
        if (v >= i) ++r.wex;
        if (v > i) ++r.exc;
        if (v < 0) ++r.neg;
        if (i < n && v > pi.image(i + 1)) ++r.des;
    }
    int prev = 0;  // pi_0 = 0
    for (int i = 1; i <= n; ++i) {
        if (prev > pi.image(i)) ++r.des_b;
        prev = pi.image(i);
    }
    r.fwex = 2 * r.wex + r.neg;
    r.fexc = 2 * r.exc + r.neg;
    r.fdes = r.des + r.des_b;
    return r;
}

int crossings(const SignedPerm& pi) {
    int n = pi.n();
    int count = 0;
    for (int i = 1; i <= n; ++i) {
        int vi = pi.image(i);
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            int vj = pi.image(j);
            if (i < j && j <= vi && vi < vj) ++count;
            else if (-i < j && j <= -vi && -vi < vj) ++count;
            else if (i > j && j > vi && vi > vj) ++count;
        }
    }
    return count;
}

std::pair<int, int> FullPignoseDiagram::pignose_positions(int n, int label) {
    int p = label < 0 ? n + label : n + label - 1;  // 0-based pignose index
    return {2 * p + 1, 2 * p + 2};
}

FullPignoseDiagram FullPignoseDiagram::of(const SignedPerm& pi) {
    FullPignoseDiagram d;
    d.n = pi.n();
    for (int i = -d.n; i <= d.n; ++i) {
        if (i == 0) continue;
        int target = pi.map(i);
        auto [sl, sr] = pignose_positions(d.n, i);
        auto [tl, tr] = pignose_positions(d.n, target);
        int from = i > 0 ? sl : sr;       // first vertex of pignose i
        int to = target > 0 ? tr : tl;    // second vertex of pignose pi(i)
        bool upper = target > i || (target == i && i > 0);
        d.arcs.push_back({std::min(from, to), std::max(from, to), upper, i});
    }
    return d;
}

namespace {

bool nested(const PignoseArc& outer, const PignoseArc& inner) {
    return outer.lo < inner.lo && inner.hi < outer.hi;
}

bool disjoint(const PignoseArc& a, const PignoseArc& b) {
    return a.hi < b.lo || b.hi < a.lo;
}

bool interleaved(const PignoseArc& a, const PignoseArc& b) {
    return (a.lo < b.lo && b.lo < a.hi && a.hi < b.hi) ||
           (b.lo < a.lo && a.lo < b.hi && b.hi < a.hi);
}

}  // namespace

int alignments(const SignedPerm& pi) {
    auto d = FullPignoseDiagram::of(pi);
    int count = 0;
    for (std::size_t a = 0; a < d.arcs.size(); ++a) {
        for (std::size_t b = a + 1; b < d.arcs.size(); ++b) {
            const auto& A = d.arcs[a];
            const auto& B = d.arcs[b];
            if (A.upper == B.upper) {
                if (nested(A, B) || nested(B, A)) ++count;
            } else {
                if (disjoint(A, B)) ++count;
            }
        }
    }
    return count;
}

int full_diagram_crossings(const SignedPerm& pi) {
    auto d = FullPignoseDiagram::of(pi);
    int count = 0;
    for (std::size_t a = 0; a < d.arcs.size(); ++a)
        for (std::size_t b = a + 1; b < d.arcs.size(); ++b)
            if (d.arcs[a].upper == d.arcs[b].upper && interleaved(d.arcs[a], d.arcs[b])) ++count;
    return count;
}

int alignments_type_a(const std::vector<int>& sigma) {
    std::vector<PignoseArc> arcs;
    for (int i = 1; i <= static_cast<int>(sigma.size()); ++i) {
        int from = 2 * i - 1;
        int to = 2 * sigma[static_cast<std::size_t>(i - 1)];
        arcs.push_back({std::min(from, to), std::max(from, to), from < to, i});
    }
    int count = 0;
    for (std::size_t a = 0; a < arcs.size(); ++a) {
        for (std::size_t b = a + 1; b < arcs.size(); ++b) {
            if (arcs[a].upper == arcs[b].upper) {
                if (nested(arcs[a], arcs[b]) || nested(arcs[b], arcs[a])) ++count;
            } else {
                if (disjoint(arcs[a], arcs[b])) ++count;
            }
        }
    }
    return count;
}

namespace {

struct Arrow {
    int tail = 0;
    int head = 0;
    bool upper = false;
    int sign = 1;
};

// The six local configurations that mark a crossing in the labeled arrow
// diagram of |pi|. Shared-dot limit cases: an upper arc's tail may coincide
// with the other arc's head (counted); the interleaving bounds are strict
// everywhere else.
bool configuration_crossing(const Arrow& a, const Arrow& b) {
    if (a.upper && b.upper) {
        const Arrow& x = a.tail < b.tail ? a : b;
        const Arrow& y = a.tail < b.tail ? b : a;
        if (y.head < x.head) return y.sign < 0;                    // nested, inner negative
        if (y.tail <= x.head && x.head < y.head) return y.sign > 0;  // interleaved, right positive
        return false;
    }
    if (!a.upper && !b.upper) {
        const Arrow& x = a.head < b.head ? a : b;
        const Arrow& y = a.head < b.head ? b : a;
        if (y.tail < x.tail) return y.sign < 0;                      // nested, inner negative
        if (y.head < x.tail && x.tail < y.tail) return y.sign > 0;   // interleaved, right positive
        return false;
    }
    const Arrow& u = a.upper ? a : b;
    const Arrow& l = a.upper ? b : a;
    if (l.sign < 0 && u.tail <= l.head && l.head < u.head) return true;
    if (u.sign < 0 && l.head < u.tail && u.tail < l.tail) return true;
    return false;
}

}  // namespace

int crossings_via_configurations(const SignedPerm& pi) {
    int n = pi.n();
    std::vector<Arrow> arrows;
    arrows.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        int v = pi.image(i);
        int h = std::abs(v);
        arrows.push_back({i, h, i <= h, v < 0 ? -1 : 1});
    }
    int count = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (configuration_crossing(arrows[static_cast<std::size_t>(i)],
                                       arrows[static_cast<std::size_t>(j)]))
                ++count;
    return count;
}

LineCounts line_counts(const SignedPerm& pi, int k, bool positive_side) {
    auto d = FullPignoseDiagram::of(pi);
    auto [left, right] = FullPignoseDiagram::pignose_positions(pi.n(), positive_side ? k : -k);
    LineCounts c;
    for (const auto& arc : d.arcs) {
        if (arc.lo <= left && arc.hi >= right) (arc.upper ? c.upper : c.lower)++;
    }
    return c;
}

SignedPerm negate(const SignedPerm& pi) {
    std::vector<int> img = pi.images();
    for (int& v : img) v = -v;
    return SignedPerm(std::move(img));
}

SignedPerm transpose(const SignedPerm& pi) {
    std::vector<int> img(static_cast<std::size_t>(pi.n()));
    for (int j = 1; j <= pi.n(); ++j) {
        int v = pi.image(j);
        img[static_cast<std::size_t>(std::abs(v) - 1)] = v < 0 ? -j : j;
    }
    return SignedPerm(std::move(img));
}

SignedPerm negate_first(const SignedPerm& pi) {
    std::vector<int> img = pi.images();
    if (!img.empty()) img[0] = -img[0];
    return SignedPerm(std::move(img));
}

int mot_at(const std::vector<int>& sigma, int i) {
    int count = 0;
    int vi = sigma[static_cast<std::size_t>(i - 1)];
    for (int j = 1; j <= i - 2; ++j)
        if (sigma[static_cast<std::size_t>(j - 1)] > vi && vi > sigma[static_cast<std::size_t>(j)])
            ++count;
    return count;
}

int mott_at(const std::vector<int>& sigma, int i) {
    int m = static_cast<int>(sigma.size());
    int count = 0;
    int vi = sigma[static_cast<std::size_t>(i - 1)];
    for (int j = i + 1; j < m; ++j)
        if (sigma[static_cast<std::size_t>(j - 1)] > vi && vi > sigma[static_cast<std::size_t>(j)])
            ++count;
    return count;
}

int unsigned_mot(const std::vector<int>& sigma) {
    int total = 0;
    for (int i = 1; i <= static_cast<int>(sigma.size()); ++i) total += mot_at(sigma, i);
    return total;
}

PatternStats pattern_stats(const SignedPerm& pi) {
    PatternStats r;
    int n = pi.n();
    int neg = stats(pi).neg;

    int asc = 0;
    for (int i = 0; i <= n - 1; ++i) {
        int ai = i == 0 ? 0 : std::abs(pi.image(i));
        if (ai < pi.image(i + 1)) ++asc;
    }
    r.hasc = 2 * asc + neg;

    auto abs_at = [&](int i) { return i == n + 1 ? n + 1 : std::abs(pi.image(i)); };
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (abs_at(i) > abs_at(j) && abs_at(j) > abs_at(i + 1)) ++r.pat;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (pi.image(j) < 0 && abs_at(i) > -pi.image(j) && -pi.image(j) >= abs_at(i + 1))
                ++r.pat;

    // Doubled word pi(-n),...,pi(-1),pi(1),...,pi(n). fneg counts the
    // negative-to-positive sign changes; this is the reading under which the
    // flag-descent sum reproduces B_n (checked exhaustively through n = 6).
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(2 * n));
    for (int i = -n; i <= n; ++i)
        if (i != 0) word.push_back(pi.map(i));
    for (std::size_t k = 0; k + 1 < word.size(); ++k)
        if (word[k] < 0 && word[k + 1] > 0) ++r.fneg;

    // Order-preserving relabeling [+-n] -> [2n] of the same doubled word.
    std::vector<int> tilde(word.size());
    for (std::size_t k = 0; k < word.size(); ++k) {
        int v = word[k];
        tilde[k] = v < 0 ? v + n + 1 : v + n;
    }
    for (int p = 1; p <= 2 * n; ++p)
        if (tilde[static_cast<std::size_t>(p - 1)] > n) r.mot_plus += mot_at(tilde, p);

    return r;
}

std::vector<SignedPerm> enumerate_bn(int n, int limit) {
    std::vector<SignedPerm> out;
    for_each_bn(n, [&](const SignedPerm& pi) { out.push_back(pi); }, limit);
    return out;
}

}  // namespace pignose
