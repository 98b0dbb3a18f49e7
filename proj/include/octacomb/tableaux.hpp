#pragma once

#include "octacomb/partition.hpp"
#include "octacomb/signed_perm.hpp"

#include <string>
#include <vector>

namespace octacomb {

struct SkewShape {
    Partition outer;
    Partition inner;   // empty for straight shapes

    int size() const { return outer.size() - inner.size(); }
    friend bool operator==(const SkewShape&, const SkewShape&) = default;
};

// Standard Young tableau of (skew) shape; rows_[r] holds the entries of
// row r+1 at columns inner_{r+1}+1 .. outer_{r+1}.
class StandardTableau {
public:
    StandardTableau(SkewShape shape, std::vector<std::vector<int>> rows);

    const SkewShape& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int size() const { return shape_.size(); }
    int row_of(int entry) const;   // 1-based row

    std::string str() const;
    friend bool operator==(const StandardTableau&, const StandardTableau&) = default;

private:
    SkewShape shape_;
    std::vector<std::vector<int>> rows_;
};

std::vector<StandardTableau> enumerate_syt(const SkewShape& shape);
std::vector<StandardTableau> enumerate_syt(const Partition& shape);

GenSet tableau_des(const StandardTableau& t);      // {i : i+1 strictly lower than i}
int tableau_ldes(const StandardTableau& t);        // max descent, 0 when empty

// Standard Young bi-tableau: the upper component of shape lambda^+ sits
// north-east of the lower component of shape lambda^-; the entries
// partition 1..n.
struct BiTableau {
    StandardTableau lower;
    StandardTableau upper;

    int size() const { return lower.size() + upper.size(); }
    std::string str() const;
    friend bool operator==(const BiTableau&, const BiTableau&) = default;
};

std::vector<BiTableau> enumerate_bsyt(const Partition& minus, const Partition& plus);

GenSet bi_des(const BiTableau& t);
GenSet bi_des_B(const BiTableau& t);     // adds 0 when 1 lies in the lower component
int bi_ldes(const BiTableau& t);
GenSet bi_neg(const BiTableau& t);       // entries of the lower component, bits 1..n

// Domino tiled tableau. Dominoes are stored by their top-left cell and
// orientation; labels are 1..n for standard tableaux and arbitrary
// nonnegative integers for semistandard ones.
struct Domino {
    int row = 1, col = 1;   // top-left cell, 1-based
    bool vertical = false;
    int label = 0;

    friend bool operator==(const Domino&, const Domino&) = default;
    friend auto operator<=>(const Domino&, const Domino&) = default;
};

class DominoTableau {
public:
    DominoTableau(Partition shape, std::vector<Domino> dominoes);   // checks exact tiling

    const Partition& shape() const { return shape_; }
    const std::vector<Domino>& dominoes() const { return dominoes_; }
    int cell(int r, int c) const;          // label; throws outside the shape
    bool in_shape(int r, int c) const;
    int domino_count() const { return static_cast<int>(dominoes_.size()); }

    std::string str() const;               // row lists, "[1,1,2][2]"
    friend bool operator==(const DominoTableau&, const DominoTableau&) = default;

private:
    Partition shape_;
    std::vector<Domino> dominoes_;         // sorted by (label, row, col)
};

std::vector<DominoTableau> enumerate_sdt(const Partition& lam);
std::vector<DominoTableau> enumerate_ssdt(const Partition& lam, int max_label);

GenSet domino_des(const DominoTableau& t);      // northeast-cell descents, standard only
GenSet domino_des_B(const DominoTableau& t);    // adds 0 when the first domino is vertical
int domino_ldes(const DominoTableau& t);        // max of Des_B, 0 when empty
std::vector<int> domino_content(const DominoTableau& t);   // counts per label, index 0..

// Carre-Leclerc bijection, standard case; the component shapes are the
// 2-quotient of the domino shape.
BiTableau carre_leclerc(const DominoTableau& t);

// Checkerboard sign classification: true when the domino's upper-rightmost
// cell has sign -, with - on the upper-leftmost box of the diagram.
bool domino_is_minus(const Domino& d);

// Semistandard case of the bijection; returns the two semistandard
// components as row matrices of labels.
struct SemistandardBiTableau {
    Partition lower_shape, upper_shape;
    std::vector<std::vector<int>> lower_rows, upper_rows;
};
SemistandardBiTableau carre_leclerc_ss(const DominoTableau& t);
bool is_semistandard(const Partition& shape, const std::vector<std::vector<int>>& rows);

std::string json_rows(const DominoTableau& t);      // {"shape":[...],"rows":[[...],...]}

}  // namespace octacomb
