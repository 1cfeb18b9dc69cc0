#include "pignose/matching.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "pignose/errors.hpp"

namespace pignose {

OrderedMatching::OrderedMatching(std::vector<std::pair<int, int>> pairs)
    : pairs_(std::move(pairs)) {
    std::sort(pairs_.begin(), pairs_.end(), [](const auto& a, const auto& b) {
        return std::min(a.first, a.second) < std::min(b.first, b.second);
    });
    std::vector<int> g = ground();
    for (std::size_t i = 1; i < g.size(); ++i)
        if (g[i] == g[i - 1]) throw Error("matching covers " + std::to_string(g[i]) + " twice");
}

std::vector<int> OrderedMatching::ground() const {
    std::vector<int> g;
    for (const auto& [a, b] : pairs_) {
        g.push_back(a);
        g.push_back(b);
    }
    std::sort(g.begin(), g.end());
    return g;
}

std::string OrderedMatching::str() const {
    std::string s;
    for (const auto& [a, b] : pairs_) {
        if (!s.empty()) s += ';';
        s += '(' + std::to_string(a) + ',' + std::to_string(b) + ')';
    }
    return s;
}

OrderedMatching OrderedMatching::parse(const std::string& text) {
    std::vector<std::pair<int, int>> pairs;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_int = [&]() -> int {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError("expected integer", pos);
        long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 1'000'000) throw ParseError("value too large", start);
            ++pos;
        }
        return text[start] == '-' ? -static_cast<int>(v) : static_cast<int>(v);
    };
    skip_ws();
    while (pos < text.size()) {
        if (text[pos] != '(') throw ParseError("expected '('", pos);
        ++pos;
        int a = read_int();
        skip_ws();
        if (pos >= text.size() || text[pos] != ',') throw ParseError("expected ','", pos);
        ++pos;
        int b = read_int();
        skip_ws();
        if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ')'", pos);
        ++pos;
        pairs.emplace_back(a, b);
        skip_ws();
        if (pos < text.size()) {
            if (text[pos] != ';') throw ParseError("expected ';'", pos);
            ++pos;
            skip_ws();
        }
    }
    try {
        return OrderedMatching(std::move(pairs));
    } catch (const Error& e) {
        throw ParseError(e.what(), 0);
    }
}

bool operator==(const OrderedMatching& a, const OrderedMatching& b) {
    return a.pairs_ == b.pairs_;
}

OrderedMatching standardize(const OrderedMatching& m) {
    std::vector<int> g = m.ground();
    std::map<int, int> rank;
    for (std::size_t i = 0; i < g.size(); ++i) rank[g[i]] = static_cast<int>(i) + 1;
    std::vector<std::pair<int, int>> pairs;
    for (const auto& [a, b] : m.pairs()) pairs.emplace_back(rank[a], rank[b]);
    return OrderedMatching(std::move(pairs));
}

namespace {

void require_ground_2n(const OrderedMatching& m, const char* op) {
    std::vector<int> g = m.ground();
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i] != static_cast<int>(i) + 1)
            throw BadGroundError(std::string(op) + " requires the ground set [2n]");
}

}  // namespace

OrderedMatching rho(const OrderedMatching& m) {
    require_ground_2n(m, "rho");
    int top = 2 * m.size() + 1;
    std::vector<std::pair<int, int>> pairs;
    for (auto [a, b] : m.pairs()) {
        if (a == 1) a = top;
        if (b == 1) b = top;
        pairs.emplace_back(a, b);
    }
    return standardize(OrderedMatching(std::move(pairs)));
}

OrderedMatching rho_iter(const OrderedMatching& m, int k) {
    OrderedMatching r = m;
    for (int i = 0; i < k; ++i) r = rho(r);
    return r;
}

OrderedMatching reverse(const OrderedMatching& m) {
    require_ground_2n(m, "reverse");
    int top = 2 * m.size() + 1;
    std::vector<std::pair<int, int>> pairs;
    for (auto [a, b] : m.pairs()) pairs.emplace_back(top - a, top - b);
    return OrderedMatching(std::move(pairs));
}

int matching_crossings(const OrderedMatching& m) {
    const auto& ps = m.pairs();
    int count = 0;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        for (std::size_t j = i + 1; j < ps.size(); ++j) {
            bool up_i = ps[i].first < ps[i].second;
            bool up_j = ps[j].first < ps[j].second;
            if (up_i != up_j) continue;
            int lo1 = std::min(ps[i].first, ps[i].second), hi1 = std::max(ps[i].first, ps[i].second);
            int lo2 = std::min(ps[j].first, ps[j].second), hi2 = std::max(ps[j].first, ps[j].second);
            if ((lo1 < lo2 && lo2 < hi1 && hi1 < hi2) || (lo2 < lo1 && lo1 < hi2 && hi2 < hi1))
                ++count;
        }
    }
    return count;
}

bool is_pignose(const OrderedMatching& m) {
    std::vector<int> g = m.ground();
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i] != static_cast<int>(i) + 1) return false;
    for (const auto& [a, b] : m.pairs())
        if (a % 2 == 0 || b % 2 == 1) return false;
    return true;
}

OrderedMatching pignose_matching(const std::vector<int>& sigma) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= static_cast<int>(sigma.size()); ++i)
        pairs.emplace_back(2 * i - 1, 2 * sigma[static_cast<std::size_t>(i - 1)]);
    return OrderedMatching(std::move(pairs));
}

OrderedMatching split_spirals(const SignedPerm& pi) {
    if (pi.n() == 0 || pi.image(1) < 0)
        throw PrecondFirstNegativeError("split_spirals requires pi_1 > 0");
    int n = pi.n();
    int m = stats(pi).neg;
    // Spiral with the j-th smallest source index gets the j-th pignose
    // counting inward from the diagram, i.e. positions (2m-2j+1, 2m-2j+2).
    std::vector<std::pair<int, int>> pairs;
    int j = 0;
    for (int i = 1; i <= n; ++i) {
        int v = pi.image(i);
        if (v > 0) {
            pairs.emplace_back(2 * m + 2 * i - 1, 2 * m + 2 * v);
        } else {
            ++j;
            int left = 2 * m - 2 * j + 1;
            pairs.emplace_back(2 * m + 2 * i - 1, left + 1);  // lower arc into the new pignose
            pairs.emplace_back(left, 2 * m + 2 * (-v));       // upper arc out of it
        }
    }
    return OrderedMatching(std::move(pairs));
}

SignedPerm phi(const SignedPerm& pi) {
    int n = pi.n();
    int m = stats(pi).neg;
    OrderedMatching matched = split_spirals(pi);
    OrderedMatching transformed = reverse(rho_iter(matched, 2 * m + 1));

    // Reconstruct sigma from the transformed pignose matching: the first 2m
    // vertices contract back into spiral arcs.
    std::vector<int> upper_from(static_cast<std::size_t>(m) + 1, 0);  // pair l: upper arc target
    std::vector<int> lower_from(static_cast<std::size_t>(m) + 1, 0);  // pair l: lower arc source
    std::vector<int> img(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<int, int>> lower_stubs;  // lower arcs into [2m], for the crossing check

    for (const auto& [a, b] : transformed.pairs()) {
        bool a_small = a <= 2 * m, b_small = b <= 2 * m;
        if (a_small && b_small)
            throw StructureViolationError("arc with both endpoints among the contracted vertices");
        if (!a_small && !b_small) {
            int i = (a - 2 * m + 1) / 2;
            int v = b / 2 - m;
            if (a % 2 == 0 || b % 2 == 1) throw StructureViolationError("parity broken in core arcs");
            img[static_cast<std::size_t>(i - 1)] = v;
        } else if (a_small) {
            // Tail in [2m]: must be the upper arc of a contracted pignose.
            if (a % 2 == 0 || b <= 2 * m || b % 2 == 1)
                throw StructureViolationError("contracted pignose upper arc malformed");
            upper_from[static_cast<std::size_t>((a + 1) / 2)] = b / 2 - m;
        } else {
            // Head in [2m]: the lower arc of a contracted pignose.
            if (b % 2 == 1 || a % 2 == 0)
                throw StructureViolationError("contracted pignose lower arc malformed");
            lower_from[static_cast<std::size_t>(b / 2)] = (a - 2 * m + 1) / 2;
            lower_stubs.emplace_back(b, a);
        }
    }
    for (int l = 1; l <= m; ++l) {
        if (upper_from[static_cast<std::size_t>(l)] == 0 || lower_from[static_cast<std::size_t>(l)] == 0)
            throw StructureViolationError("contracted vertex not connected to the core");
        img[static_cast<std::size_t>(lower_from[static_cast<std::size_t>(l)] - 1)] =
            -upper_from[static_cast<std::size_t>(l)];
    }
    // The m lower arcs into the contracted block must be pairwise noncrossing,
    // i.e. nested (their spans all straddle the block boundary).
    for (std::size_t i = 0; i < lower_stubs.size(); ++i)
        for (std::size_t j = i + 1; j < lower_stubs.size(); ++j) {
            auto [h1, t1] = lower_stubs[i];
            auto [h2, t2] = lower_stubs[j];
            if ((h1 < h2) == (t1 < t2))
                throw StructureViolationError("contracted lower arcs cross");
        }
    SignedPerm sigma{img};
    if (sigma.image(1) < 0) throw StructureViolationError("contracted permutation not in B_n^+");
    if (stats(sigma).fwex != 2 * n + 2 - stats(pi).fwex)
        throw StructureViolationError("upper half-arc count of the transform is off");
    return negate_first(sigma);
}

}  // namespace pignose
