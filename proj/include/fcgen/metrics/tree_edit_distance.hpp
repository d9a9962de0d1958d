#pragma once

#include "fcgen/metrics/syntax.hpp"

namespace fcgen {

/// Zhang-Shasha ordered tree edit distance with unit insert, delete and relabel costs.
int tree_edit_distance(const Tree& a, const Tree& b);

}  // namespace fcgen
