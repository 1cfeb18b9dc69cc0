#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pignose/poly.hpp"
#include "pignose/signed_perm.hpp"

namespace pignose {

// ----- border shapes ----------------------------------------------------------
//
// A Ferrers diagram of length n is encoded by its south-east border word: n
// steps, horizontal or vertical, labeled 1..n from north-east to south-west.
// A vertical step is the right edge of a row (rows top to bottom), a
// horizontal step the bottom edge of a column (columns right to left). Rows
// and columns may be empty.

enum class BorderStep : std::uint8_t { H, V };

class BorderShape {
public:
    BorderShape() = default;
    explicit BorderShape(std::vector<BorderStep> steps);

    int length() const { return static_cast<int>(steps_.size()); }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<BorderStep>& steps() const { return steps_; }

    // Row lengths top to bottom (size rows(), weakly decreasing) and column
    // heights left to right (size cols(), weakly increasing... decreasing from
    // the left; see implementation).
    const std::vector<int>& row_lengths() const { return row_len_; }
    const std::vector<int>& col_heights() const { return col_height_; }

    int step_of_row(int r) const { return row_step_[static_cast<std::size_t>(r - 1)]; }
    int step_of_col(int c) const { return col_step_[static_cast<std::size_t>(c - 1)]; }

    // Border word over {h,v}, e.g. "hvhvhhv".
    std::string word() const;
    static BorderShape parse(const std::string& word);

    friend bool operator==(const BorderShape&, const BorderShape&) = default;

private:
    std::vector<BorderStep> steps_;
    int rows_ = 0, cols_ = 0;
    std::vector<int> row_len_, col_height_;
    std::vector<int> row_step_, col_step_;
};

// ----- tableaux ---------------------------------------------------------------

// 0/1 filling of a Ferrers diagram: every column contains a 1, and no 0 has
// both a 1 above it in its column and a 1 to its left in its row.
struct PermTableau {
    BorderShape shape;
    std::vector<std::vector<std::uint8_t>> rows;  // rows()[r-1] has row_lengths()[r-1] cells

    friend bool operator==(const PermTableau&, const PermTableau&) = default;
};

// 0/1 filling of the shifted diagram: k = cols() staircase rows of sizes
// 1..k stacked above the base diagram, the rightmost cell of each added row
// being a diagonal cell. Adds the rule that a diagonal 0 has no 1 to its left.
struct PermTableauB {
    BorderShape shape;
    std::vector<std::vector<std::uint8_t>> added;  // added[j-1] has j cells
    std::vector<std::vector<std::uint8_t>> rows;

    friend bool operator==(const PermTableauB&, const PermTableauB&) = default;
};

struct Violation {
    bool ok = true;
    int condition = 0;  // 1, 2, or 3
    int row = 0;        // 1-based grid row (added rows first for type B)
    int col = 0;
    std::string message;
};

Violation validate(const PermTableau& t);
Violation validate(const PermTableauB& t);

struct TableauStats {
    int so = 0;    // superfluous ones: a 1 with a 1 above it in its column
    int row = 0;   // rows of the base shape (added rows excluded)
    int diag = 0;  // ones in diagonal cells
};

TableauStats tableau_stats(const PermTableau& t);
TableauStats tableau_stats(const PermTableauB& t);

// Zigzag maps. For each border step, travel into the diagram (east from the
// topmost 1 of a column step, south from the leftmost 1 of a row step),
// switching direction at every 1; the exit step gives the image. A column
// whose diagonal carries a 1 instead routes through the leftmost 1 of that
// added row and produces a negated image.
std::vector<int> zigzag_a(const PermTableau& t);
SignedPerm zigzag_b(const PermTableauB& t);

// ----- enumeration and generating polynomials ---------------------------------

template <class F>
void for_each_shape(int n, F&& f) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<BorderStep> steps(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            steps[static_cast<std::size_t>(i)] =
                (mask >> (n - 1 - i)) & 1u ? BorderStep::V : BorderStep::H;
        f(BorderShape(std::move(steps)));
    }
}

void for_each_pt(int n, const std::function<void(const PermTableau&)>& f,
                 int limit = kDefaultEnumLimit);
void for_each_ptb(int n, const std::function<void(const PermTableauB&)>& f,
                  int limit = kDefaultEnumLimit);

std::vector<PermTableau> enumerate_pt(int n, int limit = kDefaultEnumLimit);
std::vector<PermTableauB> enumerate_ptb(int n, int limit = kDefaultEnumLimit);

// Sum over type B tableaux of y^{2 row + diag} t^{diag} q^{so}.
MultiPoly b_poly_tableaux(int n, int limit = kDefaultEnumLimit);

// Type A q-Eulerian number E_{n,k}(q): sum of q^{so} over tableaux with k rows.
MultiPoly e_poly_type_a(int n, int k, int limit = kDefaultEnumLimit);

// ----- text format --------------------------------------------------------------
//
// First line: border word over {h,v}. Then one line per row, top to bottom:
// added rows (type B only) as 0/1 strings with a trailing '*' marking the
// diagonal cell, base rows as plain 0/1 strings; empty rows are empty lines.

std::string tableau_text(const PermTableau& t);
std::string tableau_text(const PermTableauB& t);
PermTableau parse_tableau(const std::string& text);
PermTableauB parse_tableau_b(const std::string& text);

}  // namespace pignose
