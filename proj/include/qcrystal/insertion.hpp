#pragma once

// Schensted and hypoplactic insertion, and the congruences they define.

#include "qcrystal/tableaux.hpp"
#include "qcrystal/words.hpp"

namespace qcrystal {

/// Row insertion; an incoming letter bumps the leftmost entry strictly
/// greater than it.
YoungTableau schensted_insert(const Word& w);

/// The quasi-ribbon tableau with the evaluation of w in which consecutive
/// distinct letters a < b share a row unless w contains a subsequence b a.
QuasiRibbonTableau hypoplactic_insert(const Word& w);

bool plactic_equivalent(const Word& u, const Word& v);
bool hypoplactic_equivalent(const Word& u, const Word& v);

}  // namespace qcrystal
