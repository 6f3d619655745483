#ifndef SEMIDELTA_SRC_TABLE_FILL_HPP_
#define SEMIDELTA_SRC_TABLE_FILL_HPP_

#include <vector>

namespace semidelta::internal {

/// Incremental associativity check for partial tables (-1 = unassigned):
/// after writing cell (r, c), examines exactly the triples whose four
/// products became fully determined by that write.
bool assignment_consistent(const std::vector<int>& tab, int n, int r, int c);

}  // namespace semidelta::internal

#endif  // SEMIDELTA_SRC_TABLE_FILL_HPP_
