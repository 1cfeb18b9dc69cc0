#include "pignose/render.hpp"

#include <algorithm>

namespace pignose {

namespace {

struct ArcSpec {
    int a = 0, b = 0;  // vertex ids, a < b
    bool upper = true;
};

// Draws upper arcs above and lower arcs below a baseline, given an x column
// for every vertex id. Overlapping arcs stack outward; disjoint arcs share a
// row.
std::string draw_arc_rows(const std::vector<ArcSpec>& arcs, const std::vector<int>& xcol,
                          int width, bool upper_side) {
    std::vector<ArcSpec> side;
    for (const ArcSpec& s : arcs)
        if (s.upper == upper_side) side.push_back(s);
    std::sort(side.begin(), side.end(), [&](const ArcSpec& l, const ArcSpec& r) {
        int wl = xcol[static_cast<std::size_t>(l.b)] - xcol[static_cast<std::size_t>(l.a)];
        int wr = xcol[static_cast<std::size_t>(r.b)] - xcol[static_cast<std::size_t>(r.a)];
        if (wl != wr) return wl < wr;
        return xcol[static_cast<std::size_t>(l.a)] < xcol[static_cast<std::size_t>(r.a)];
    });
    std::vector<int> level(side.size(), 1);
    for (std::size_t i = 0; i < side.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            bool disjoint = xcol[static_cast<std::size_t>(side[i].b)] < xcol[static_cast<std::size_t>(side[j].a)] ||
                            xcol[static_cast<std::size_t>(side[j].b)] < xcol[static_cast<std::size_t>(side[i].a)];
            if (!disjoint) level[i] = std::max(level[i], level[j] + 1);
        }
    }
    int height = 0;
    for (int l : level) height = std::max(height, l);
    std::vector<std::string> rows(static_cast<std::size_t>(height), std::string(static_cast<std::size_t>(width), ' '));
    for (std::size_t i = 0; i < side.size(); ++i) {
        int xa = xcol[static_cast<std::size_t>(side[i].a)];
        int xb = xcol[static_cast<std::size_t>(side[i].b)];
        std::string& row = rows[static_cast<std::size_t>(level[i] - 1)];
        row[static_cast<std::size_t>(xa)] = '.';
        row[static_cast<std::size_t>(xb)] = '.';
        for (int x = xa + 1; x < xb; ++x) row[static_cast<std::size_t>(x)] = '-';
        for (int l = 0; l < level[i] - 1; ++l) {
            std::string& below = rows[static_cast<std::size_t>(l)];
            if (below[static_cast<std::size_t>(xa)] == ' ') below[static_cast<std::size_t>(xa)] = '|';
            if (below[static_cast<std::size_t>(xb)] == ' ') below[static_cast<std::size_t>(xb)] = '|';
        }
    }
    std::string out;
    if (upper_side) {
        for (std::size_t r = rows.size(); r-- > 0;) out += rows[r] + '\n';
    } else {
        for (const std::string& r : rows) out += r + '\n';
    }
    return out;
}

std::string rstrip_lines(std::string s) {
    std::string out;
    std::string line;
    for (char ch : s) {
        if (ch == '\n') {
            while (!line.empty() && line.back() == ' ') line.pop_back();
            out += line + '\n';
            line.clear();
        } else {
            line += ch;
        }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    return out;
}

// Common pignose-style drawing: vertices grouped in 2-vertex pignoses with
// labels; arcs by vertex id.
std::string draw_pignoses(const std::vector<std::string>& labels, const std::vector<ArcSpec>& arcs,
                          const std::vector<bool>& virtual_pignose) {
    int count = static_cast<int>(labels.size());
    // Pignose p occupies "(o o)" plus a separating space.
    int cell = 6;
    int width = count * cell;
    std::vector<int> xcol(static_cast<std::size_t>(2 * count) + 1, 0);
    std::string base(static_cast<std::size_t>(width), ' ');
    std::string label_row(static_cast<std::size_t>(width), ' ');
    for (int p = 0; p < count; ++p) {
        int x0 = p * cell;
        base[static_cast<std::size_t>(x0)] = '(';
        base[static_cast<std::size_t>(x0 + 1)] = virtual_pignose[static_cast<std::size_t>(p)] ? '~' : 'o';
        base[static_cast<std::size_t>(x0 + 3)] = virtual_pignose[static_cast<std::size_t>(p)] ? '~' : 'o';
        base[static_cast<std::size_t>(x0 + 4)] = ')';
        xcol[static_cast<std::size_t>(2 * p + 1)] = x0 + 1;
        xcol[static_cast<std::size_t>(2 * p + 2)] = x0 + 3;
        const std::string& lab = labels[static_cast<std::size_t>(p)];
        int lx = x0 + 2 - static_cast<int>(lab.size()) / 2;
        for (std::size_t i = 0; i < lab.size(); ++i)
            label_row[static_cast<std::size_t>(lx) + i] = lab[i];
    }
    std::string out = draw_arc_rows(arcs, xcol, width, true);
    out += base + '\n';
    out += draw_arc_rows(arcs, xcol, width, false);
    out += label_row;
    return rstrip_lines(out);
}

}  // namespace

namespace {

std::string render_grid(const BorderShape& shape,
                        const std::vector<std::vector<std::uint8_t>>& added,
                        const std::vector<std::vector<std::uint8_t>>& base) {
    int k = static_cast<int>(added.size());
    std::string out;
    for (int j = 1; j <= k; ++j) {
        std::string line;
        for (int c = 1; c <= j; ++c) {
            line += added[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(c - 1)] ? '1' : '0';
            line += c == j ? '*' : ' ';
            line += ' ';
        }
        out += ' ' + line + '\n';
    }
    for (int r = 1; r <= shape.rows(); ++r) {
        std::string line;
        int len = shape.row_lengths()[static_cast<std::size_t>(r - 1)];
        for (int c = 1; c <= len; ++c) {
            line += base[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] ? '1' : '0';
            line += "  ";
        }
        while (static_cast<int>(line.size()) < 3 * std::max(1, shape.cols())) line += ' ';
        out += ' ' + line + "| step " + std::to_string(shape.step_of_row(r)) + '\n';
    }
    out += " ";
    for (int c = 1; c <= shape.cols(); ++c) out += std::to_string(shape.step_of_col(c)) + "  ";
    if (shape.cols() > 0) out += "  (column steps)";
    return rstrip_lines(out);
}

}  // namespace

std::string render_tableau(const PermTableau& t) {
    std::string head = "permutation tableau: length " + std::to_string(t.shape.length()) + ", " +
                       std::to_string(t.shape.rows()) + " rows, " + std::to_string(t.shape.cols()) +
                       " columns\n";
    return head + render_grid(t.shape, {}, t.rows);
}

std::string render_tableau(const PermTableauB& t) {
    std::string head = "type B permutation tableau: length " + std::to_string(t.shape.length()) +
                       ", " + std::to_string(t.shape.rows()) + " rows + " +
                       std::to_string(t.shape.cols()) + " added, " + std::to_string(t.shape.cols()) +
                       " columns\n";
    return head + render_grid(t.shape, t.added, t.rows);
}

std::string render_pignose(const SignedPerm& pi) {
    int n = pi.n();
    int spirals = stats(pi).neg;
    // Same layout as the split form: virtual pignoses on the left, innermost
    // spiral first.
    std::vector<std::string> labels;
    std::vector<bool> virt;
    for (int j = spirals; j >= 1; --j) {
        labels.push_back("~" + std::to_string(j));
        virt.push_back(true);
    }
    for (int i = 1; i <= n; ++i) {
        labels.push_back(std::to_string(i));
        virt.push_back(false);
    }
    // Same arc layout as split_spirals, but without its pi_1 > 0 precondition
    // (that matters only for the bijection, not for drawing).
    std::vector<ArcSpec> arcs;
    int upper = 0, lower = 0, j = 0;
    for (int i = 1; i <= n; ++i) {
        int v = pi.image(i);
        if (v > 0) {
            int a = 2 * spirals + 2 * i - 1, b = 2 * spirals + 2 * v;
            arcs.push_back({std::min(a, b), std::max(a, b), a < b});
            (a < b ? upper : lower)++;
        } else {
            ++j;
            int left = 2 * spirals - 2 * j + 1;
            arcs.push_back({left + 1, 2 * spirals + 2 * i - 1, false});
            arcs.push_back({left, 2 * spirals + 2 * (-v), true});
        }
    }
    std::string head = "pignose diagram: " + std::to_string(n) + " pignoses, " +
                       std::to_string(upper) + " upper arcs, " + std::to_string(lower) +
                       " lower arcs, " + std::to_string(spirals) + " spiral arcs\n";
    return head + draw_pignoses(labels, arcs, virt);
}

std::string render_full_pignose(const SignedPerm& pi) {
    int n = pi.n();
    auto diagram = FullPignoseDiagram::of(pi);
    std::vector<std::string> labels;
    std::vector<bool> virt(static_cast<std::size_t>(2 * n), false);
    for (int l = -n; l <= n; ++l)
        if (l != 0) labels.push_back(std::to_string(l));
    std::vector<ArcSpec> arcs;
    int upper = 0;
    for (const auto& arc : diagram.arcs) {
        arcs.push_back({arc.lo, arc.hi, arc.upper});
        if (arc.upper) ++upper;
    }
    std::string head = "full pignose diagram: " + std::to_string(2 * n) + " pignoses, " +
                       std::to_string(upper) + " upper arcs, " +
                       std::to_string(2 * n - upper) + " lower arcs\n";
    return head + draw_pignoses(labels, arcs, virt);
}

std::string render_matching(const OrderedMatching& m) {
    std::vector<int> g = m.ground();
    int count = static_cast<int>(g.size());
    int cell = 0;
    for (int v : g) cell = std::max(cell, static_cast<int>(std::to_string(v).size()));
    cell += 2;
    std::vector<int> xcol;  // per index into g
    int width = count * cell;
    std::string base(static_cast<std::size_t>(width), ' ');
    std::string label_row(static_cast<std::size_t>(width), ' ');
    xcol.assign(static_cast<std::size_t>(count) + 1, 0);
    for (int idx = 0; idx < count; ++idx) {
        int x = idx * cell + cell / 2;
        base[static_cast<std::size_t>(x)] = 'o';
        xcol[static_cast<std::size_t>(idx + 1)] = x;
        std::string lab = std::to_string(g[static_cast<std::size_t>(idx)]);
        int lx = x - static_cast<int>(lab.size()) / 2;
        for (std::size_t i = 0; i < lab.size(); ++i)
            label_row[static_cast<std::size_t>(lx) + i] = lab[i];
    }
    std::vector<ArcSpec> arcs;
    for (const auto& [a, b] : m.pairs()) {
        int ia = static_cast<int>(std::lower_bound(g.begin(), g.end(), a) - g.begin()) + 1;
        int ib = static_cast<int>(std::lower_bound(g.begin(), g.end(), b) - g.begin()) + 1;
        arcs.push_back({std::min(ia, ib), std::max(ia, ib), a < b});
    }
    std::string head = "ordered matching: " + std::to_string(count / 2) + " pairs, " +
                       std::to_string(matching_crossings(m)) + " crossings\n";
    std::string out = draw_arc_rows(arcs, xcol, width, true);
    out += base + '\n';
    out += draw_arc_rows(arcs, xcol, width, false);
    out += label_row;
    return head + rstrip_lines(out);
}

namespace {

std::string profile_line(const std::vector<int>& heights, int final_height) {
    std::string s = "height profile ";
    for (int h : heights) s += std::to_string(h) + "-";
    s += std::to_string(final_height);
    return s;
}

std::string draw_profile(const std::vector<int>& heights,
                         const std::vector<StepDir>& dirs) {
    // An up step out of height h and a down step into height h occupy row h;
    // a level step at height h sits on row h as well.
    std::vector<int> row_of(dirs.size(), 0);
    int rows = 1;
    for (std::size_t j = 0; j < dirs.size(); ++j) {
        row_of[j] = dirs[j] == StepDir::Down ? heights[j] - 1 : heights[j];
        rows = std::max(rows, row_of[j] + 1);
    }
    std::vector<std::string> canvas(static_cast<std::size_t>(rows),
                                    std::string(dirs.size(), ' '));
    for (std::size_t j = 0; j < dirs.size(); ++j) {
        char ch = dirs[j] == StepDir::Up ? '/' : dirs[j] == StepDir::Down ? '\\' : '_';
        canvas[static_cast<std::size_t>(row_of[j])][j] = ch;
    }
    std::string out;
    for (std::size_t r = canvas.size(); r-- > 0;) out += canvas[r] + '\n';
    return out;
}

}  // namespace

std::string render_path(const LabeledMotzkinPath& p) {
    std::vector<int> heights = p.validate();
    std::vector<StepDir> dirs;
    for (const PathStep& s : p.steps) dirs.push_back(s.dir);
    std::string head = "labeled Motzkin path: length " + std::to_string(p.length()) +
                       ", weight " + p.weight().str() + '\n';
    return head + profile_line(heights, 0) + '\n' + rstrip_lines(draw_profile(heights, dirs));
}

std::string render_path(const MotzkinSuffix& p) {
    std::vector<int> heights = p.validate();
    std::vector<StepDir> dirs;
    for (const SuffixStep& s : p.steps) dirs.push_back(s.dir);
    std::string head = "Motzkin suffix: length " + std::to_string(p.length()) +
                       ", starting height " + std::to_string(p.start_height) + ", weight " +
                       p.weight().str() + '\n';
    return head + profile_line(heights, 0) + '\n' + rstrip_lines(draw_profile(heights, dirs));
}

}  // namespace pignose
