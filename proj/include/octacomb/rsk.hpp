#pragma once

#include "octacomb/partition.hpp"
#include "octacomb/signed_perm.hpp"
#include "octacomb/tableaux.hpp"

#include <functional>
#include <string>
#include <vector>

namespace octacomb {

// Entries of the palindromic representation [-w_n,...,-w_1,w_1,...,w_n].
std::vector<int> palindromic(const SignedPerm& w);

// Row insertion RSK over any alphabet of distinct integers. The recording
// tableau carries the input alphabet in sorted order, so that both outputs
// live over the same letters.
using TableauRows = std::vector<std::vector<int>>;
std::pair<TableauRows, TableauRows> rsk_classical(const std::vector<int>& word);

Partition rows_shape(const TableauRows& t);

// Collapse a standard tableau over {-n..-1, 1..n} into a domino tableau by
// vacating -n, ..., -1 with jeu de taquin slides; -i merges with i into a
// domino labelled i the moment the two become adjacent. Appends a rendering
// of every intermediate state to *trace when given.
DominoTableau jdt_vacate(const TableauRows& t, int n, std::vector<std::string>* trace = nullptr);

std::pair<DominoTableau, DominoTableau> bv_rsk(const SignedPerm& w);
Partition bv_shape(const SignedPerm& w);    // shape of the insertion tableau, a partition of 2n

// Members of the combinatorial cell of the given shape, in canonical order.
// Materializing is limited to n <= 6; the streaming form has no rank limit.
std::vector<SignedPerm> cell_members(const Partition& lam, int n);
void for_each_cell_member(const Partition& lam, int n,
                          const std::function<void(const SignedPerm&)>& fn);

bool has_decreasing_subsequence(const std::vector<int>& word, int len);
bool has_two_disjoint_decreasing_triples(const std::vector<int>& word);

}  // namespace octacomb
