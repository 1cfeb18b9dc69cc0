#include "pignose/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <type_traits>

#include "pignose/errors.hpp"

namespace pignose {

BorderShape::BorderShape(std::vector<BorderStep> steps) : steps_(std::move(steps)) {
    int n = length();
    for (int i = 1; i <= n; ++i)
        (steps_[static_cast<std::size_t>(i - 1)] == BorderStep::V ? rows_ : cols_)++;
    row_len_.assign(static_cast<std::size_t>(rows_), 0);
    col_height_.assign(static_cast<std::size_t>(cols_), 0);
    row_step_.assign(static_cast<std::size_t>(rows_), 0);
    col_step_.assign(static_cast<std::size_t>(cols_), 0);
    int v_seen = 0, h_seen = 0;
    for (int i = 1; i <= n; ++i) {
        if (steps_[static_cast<std::size_t>(i - 1)] == BorderStep::V) {
            ++v_seen;
            row_step_[static_cast<std::size_t>(v_seen - 1)] = i;
            int h_after = 0;
            for (int j = i + 1; j <= n; ++j)
                if (steps_[static_cast<std::size_t>(j - 1)] == BorderStep::H) ++h_after;
            row_len_[static_cast<std::size_t>(v_seen - 1)] = h_after;
        } else {
            ++h_seen;
            int c = cols_ - h_seen + 1;  // columns are met right to left
            col_step_[static_cast<std::size_t>(c - 1)] = i;
            col_height_[static_cast<std::size_t>(c - 1)] = v_seen;
        }
    }
}

std::string BorderShape::word() const {
    std::string w;
    for (BorderStep s : steps_) w += s == BorderStep::H ? 'h' : 'v';
    return w;
}

BorderShape BorderShape::parse(const std::string& word) {
    std::vector<BorderStep> steps;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] == 'h')
            steps.push_back(BorderStep::H);
        else if (word[i] == 'v')
            steps.push_back(BorderStep::V);
        else
            throw ParseError("border word must be over {h,v}", i);
    }
    return BorderShape(std::move(steps));
}

namespace {

// Unified cell-grid view: added staircase rows (type B) stacked above the
// base rows, all left-justified. Grid rows are 1-based, added rows first.
struct Grid {
    const BorderShape* shape = nullptr;
    int added = 0;
    const std::vector<std::vector<std::uint8_t>>* added_rows = nullptr;
    const std::vector<std::vector<std::uint8_t>>* base_rows = nullptr;

    int total_rows() const { return added + shape->rows(); }
    int row_len(int r) const {
        if (r <= added) return r;
        return shape->row_lengths()[static_cast<std::size_t>(r - added - 1)];
    }
    bool exists(int r, int c) const {
        return r >= 1 && r <= total_rows() && c >= 1 && c <= row_len(r);
    }
    int value(int r, int c) const {
        if (r <= added) return (*added_rows)[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)];
        return (*base_rows)[static_cast<std::size_t>(r - added - 1)][static_cast<std::size_t>(c - 1)];
    }
    bool is_diag(int r, int c) const { return r <= added && c == r; }
    int col_top(int c) const { return added ? c : 1; }
    int col_bottom(int c) const {
        return added + shape->col_heights()[static_cast<std::size_t>(c - 1)];
    }
};

Grid grid_of(const PermTableau& t) { return {&t.shape, 0, nullptr, &t.rows}; }
Grid grid_of(const PermTableauB& t) { return {&t.shape, t.shape.cols(), &t.added, &t.rows}; }

Violation validate_grid(const Grid& g) {
    for (int c = 1; c <= g.shape->cols(); ++c) {
        bool has_one = false;
        for (int r = g.col_top(c); r <= g.col_bottom(c); ++r)
            if (g.value(r, c)) { has_one = true; break; }
        if (!has_one)
            return {false, 1, g.col_bottom(c), c,
                    "column " + std::to_string(c) + " has no 1"};
    }
    for (int r = 1; r <= g.total_rows(); ++r) {
        bool one_left = false;
        for (int c = 1; c <= g.row_len(r); ++c) {
            if (g.value(r, c)) {
                one_left = true;
                continue;
            }
            if (one_left) {
                bool one_above = false;
                for (int rr = g.col_top(c); rr < r; ++rr)
                    if (g.value(rr, c)) { one_above = true; break; }
                if (one_above)
                    return {false, 2, r, c, "0 with a 1 above and a 1 to its left"};
                if (g.is_diag(r, c))
                    return {false, 3, r, c, "diagonal 0 with a 1 to its left"};
            }
        }
    }
    return {};
}

// Walk east/south from (r,c), switching direction at every 1 met; returns the
// label of the border step through which the walk leaves the diagram.
int traverse(const Grid& g, int r, int c, bool east) {
    while (true) {
        int nr = east ? r : r + 1;
        int nc = east ? c + 1 : c;
        if (g.exists(nr, nc)) {
            r = nr;
            c = nc;
            if (g.value(r, c)) east = !east;
        } else if (east) {
            if (r <= g.added)
                throw InvalidTableauError("zigzag walk left through the staircase boundary");
            return g.shape->step_of_row(r - g.added);
        } else {
            return g.shape->step_of_col(c);
        }
    }
}

int topmost_one(const Grid& g, int c) {
    for (int r = g.col_top(c); r <= g.col_bottom(c); ++r)
        if (g.value(r, c)) return r;
    return 0;
}

int leftmost_one(const Grid& g, int r) {
    for (int c = 1; c <= g.row_len(r); ++c)
        if (g.value(r, c)) return c;
    return 0;
}

std::vector<int> zigzag_grid(const Grid& g) {
    int n = g.shape->length();
    std::vector<int> img(static_cast<std::size_t>(n));
    int v_seen = 0, h_seen = 0;
    for (int i = 1; i <= n; ++i) {
        if (g.shape->steps()[static_cast<std::size_t>(i - 1)] == BorderStep::V) {
            ++v_seen;
            int r = g.added + v_seen;
            int c0 = leftmost_one(g, r);
            img[static_cast<std::size_t>(i - 1)] = c0 == 0 ? i : traverse(g, r, c0, false);
        } else {
            ++h_seen;
            int c = g.shape->cols() - h_seen + 1;
            if (g.added && g.value(c, c)) {
                // Diagonal 1: route through the leftmost 1 of the added row
                // and negate the exit label.
                int c0 = leftmost_one(g, c);
                img[static_cast<std::size_t>(i - 1)] = -traverse(g, c, c0, false);
            } else {
                int r0 = topmost_one(g, c);
                if (r0 == 0) throw InvalidTableauError("column without a 1");
                img[static_cast<std::size_t>(i - 1)] = traverse(g, r0, c, true);
            }
        }
    }
    return img;
}

TableauStats stats_grid(const Grid& g) {
    TableauStats s;
    s.row = g.shape->rows();
    for (int c = 1; c <= g.shape->cols(); ++c) {
        bool seen = false;
        for (int r = g.col_top(c); r <= g.col_bottom(c); ++r) {
            if (!g.value(r, c)) continue;
            if (seen) ++s.so;
            seen = true;
        }
    }
    for (int j = 1; j <= g.added; ++j)
        if (g.value(j, j)) ++s.diag;
    return s;
}

void require_valid(const Grid& g) {
    Violation v = validate_grid(g);
    if (!v.ok) throw InvalidTableauError(v.message);
}

}  // namespace

Violation validate(const PermTableau& t) { return validate_grid(grid_of(t)); }
Violation validate(const PermTableauB& t) { return validate_grid(grid_of(t)); }

TableauStats tableau_stats(const PermTableau& t) {
    Grid g = grid_of(t);
    require_valid(g);
    return stats_grid(g);
}

TableauStats tableau_stats(const PermTableauB& t) {
    Grid g = grid_of(t);
    require_valid(g);
    return stats_grid(g);
}

std::vector<int> zigzag_a(const PermTableau& t) {
    Grid g = grid_of(t);
    require_valid(g);
    return zigzag_grid(g);
}

SignedPerm zigzag_b(const PermTableauB& t) {
    Grid g = grid_of(t);
    require_valid(g);
    return SignedPerm(zigzag_grid(g));
}

namespace {

// Backtracking filler over the grid cells in row-major order. Prunes with the
// column-has-a-1, 0-pattern, and diagonal rules as the cells are assigned.
template <class Emit>
void fill_shapes(int n, bool type_b, int limit, Emit&& emit) {
    if (n < 0 || n > limit)
        throw LimitExceededError("tableau enumeration limited to n <= " + std::to_string(limit));
    for_each_shape(n, [&](const BorderShape& shape) {
        int k = type_b ? shape.cols() : 0;
        if (!type_b) {
            for (int h : shape.col_heights())
                if (h == 0) return;  // empty column can never hold a 1
        }
        std::vector<std::vector<std::uint8_t>> added(static_cast<std::size_t>(k));
        for (int j = 1; j <= k; ++j) added[static_cast<std::size_t>(j - 1)].assign(static_cast<std::size_t>(j), 0);
        std::vector<std::vector<std::uint8_t>> base(static_cast<std::size_t>(shape.rows()));
        for (int r = 1; r <= shape.rows(); ++r)
            base[static_cast<std::size_t>(r - 1)].assign(
                static_cast<std::size_t>(shape.row_lengths()[static_cast<std::size_t>(r - 1)]), 0);

        struct Cell {
            int r, c;
            bool diag, col_bottom;
        };
        std::vector<Cell> cells;
        int total_rows = k + shape.rows();
        auto row_len = [&](int r) {
            return r <= k ? r : shape.row_lengths()[static_cast<std::size_t>(r - k - 1)];
        };
        for (int r = 1; r <= total_rows; ++r)
            for (int c = 1; c <= row_len(r); ++c)
                cells.push_back({r, c, r <= k && c == r,
                                 r == k + shape.col_heights()[static_cast<std::size_t>(c - 1)]});

        std::vector<std::uint8_t> col_has(static_cast<std::size_t>(shape.cols()) + 1, 0);
        std::vector<std::uint8_t> row_left(static_cast<std::size_t>(total_rows) + 1, 0);
        auto cell_ref = [&](int r, int c) -> std::uint8_t& {
            return r <= k ? added[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)]
                          : base[static_cast<std::size_t>(r - k - 1)][static_cast<std::size_t>(c - 1)];
        };

        auto dfs = [&](auto&& self, std::size_t idx) -> void {
            if (idx == cells.size()) {
                emit(shape, added, base);
                return;
            }
            const Cell& cell = cells[idx];
            std::uint8_t rl = row_left[static_cast<std::size_t>(cell.r)];
            std::uint8_t ch = col_has[static_cast<std::size_t>(cell.c)];
            bool zero_ok = !(ch && rl) && !(cell.diag && rl) && !(cell.col_bottom && !ch);
            if (zero_ok) {
                cell_ref(cell.r, cell.c) = 0;
                self(self, idx + 1);
            }
            cell_ref(cell.r, cell.c) = 1;
            col_has[static_cast<std::size_t>(cell.c)] = 1;
            row_left[static_cast<std::size_t>(cell.r)] = 1;
            self(self, idx + 1);
            col_has[static_cast<std::size_t>(cell.c)] = ch;
            row_left[static_cast<std::size_t>(cell.r)] = rl;
        };
        dfs(dfs, 0);
    });
}

}  // namespace

void for_each_pt(int n, const std::function<void(const PermTableau&)>& f, int limit) {
    fill_shapes(n, false, limit, [&](const BorderShape& s, const auto&, const auto& base) {
        f(PermTableau{s, base});
    });
}

void for_each_ptb(int n, const std::function<void(const PermTableauB&)>& f, int limit) {
    fill_shapes(n, true, limit, [&](const BorderShape& s, const auto& added, const auto& base) {
        f(PermTableauB{s, added, base});
    });
}

std::vector<PermTableau> enumerate_pt(int n, int limit) {
    std::vector<PermTableau> out;
    for_each_pt(n, [&](const PermTableau& t) { out.push_back(t); }, limit);
    return out;
}

std::vector<PermTableauB> enumerate_ptb(int n, int limit) {
    std::vector<PermTableauB> out;
    for_each_ptb(n, [&](const PermTableauB& t) { out.push_back(t); }, limit);
    return out;
}

MultiPoly b_poly_tableaux(int n, int limit) {
    MultiPoly acc;
    for_each_ptb(n, [&](const PermTableauB& t) {
        TableauStats s = stats_grid(grid_of(t));
        acc.add_term({2 * s.row + s.diag, s.diag, s.so}, 1);
    }, limit);
    return acc;
}

MultiPoly e_poly_type_a(int n, int k, int limit) {
    if (k < 1 || k > n) return MultiPoly::zero();
    MultiPoly acc;
    for_each_pt(n, [&](const PermTableau& t) {
        TableauStats s = stats_grid(grid_of(t));
        if (s.row == k) acc.add_term({0, 0, s.so}, 1);
    }, limit);
    return acc;
}

namespace {

std::string row_string(const std::vector<std::uint8_t>& row, bool star) {
    std::string s;
    for (std::uint8_t v : row) s += v ? '1' : '0';
    if (star) s += '*';
    return s;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    lines.push_back(cur);
    return lines;
}

std::vector<std::uint8_t> parse_bits(const std::string& line, std::size_t expect, bool star,
                                     std::size_t offset) {
    std::string body = line;
    if (star) {
        if (body.empty() || body.back() != '*')
            throw ParseError("added row must end with '*'", offset + body.size());
        body.pop_back();
    }
    if (body.size() != expect)
        throw ParseError("row has " + std::to_string(body.size()) + " cells, expected " +
                             std::to_string(expect),
                         offset);
    std::vector<std::uint8_t> row;
    for (std::size_t i = 0; i < body.size(); ++i) {
        if (body[i] != '0' && body[i] != '1') throw ParseError("cell must be 0 or 1", offset + i);
        row.push_back(body[i] == '1');
    }
    return row;
}

}  // namespace

std::string tableau_text(const PermTableau& t) {
    std::string s = t.shape.word();
    for (const auto& row : t.rows) s += '\n' + row_string(row, false);
    return s;
}

std::string tableau_text(const PermTableauB& t) {
    std::string s = t.shape.word();
    for (const auto& row : t.added) s += '\n' + row_string(row, true);
    for (const auto& row : t.rows) s += '\n' + row_string(row, false);
    return s;
}

namespace {

template <class T>
T parse_tableau_impl(const std::string& text, bool type_b) {
    auto lines = split_lines(text);
    if (lines.empty()) throw ParseError("empty input", 0);
    BorderShape shape = BorderShape::parse(lines[0]);
    std::size_t expected = 1 + static_cast<std::size_t>(shape.rows()) +
                           (type_b ? static_cast<std::size_t>(shape.cols()) : 0);
    while (lines.size() > expected && lines.back().empty()) lines.pop_back();
    if (lines.size() != expected)
        throw ParseError("expected " + std::to_string(expected - 1) + " row lines", text.size());

    std::size_t offset = lines[0].size() + 1;
    std::vector<std::vector<std::uint8_t>> added;
    std::size_t li = 1;
    if (type_b) {
        for (int j = 1; j <= shape.cols(); ++j, ++li) {
            added.push_back(parse_bits(lines[li], static_cast<std::size_t>(j), true, offset));
            offset += lines[li].size() + 1;
        }
    }
    std::vector<std::vector<std::uint8_t>> base;
    for (int r = 1; r <= shape.rows(); ++r, ++li) {
        base.push_back(parse_bits(
            lines[li],
            static_cast<std::size_t>(shape.row_lengths()[static_cast<std::size_t>(r - 1)]), false,
            offset));
        offset += lines[li].size() + 1;
    }
    if constexpr (std::is_same_v<T, PermTableauB>)
        return PermTableauB{shape, added, base};
    else
        return PermTableau{shape, base};
}

}  // namespace

PermTableau parse_tableau(const std::string& text) {
    return parse_tableau_impl<PermTableau>(text, false);
}

PermTableauB parse_tableau_b(const std::string& text) {
    return parse_tableau_impl<PermTableauB>(text, true);
}

}  // namespace pignose
