#pragma once

#include "strat/strat_set.hpp"

namespace strat {

/// The P-stratified join X *_P Y for X supported on flags from I0 and Y on
/// flags from I1, with I = I0 u I1 regular. Cells are those of X, those of Y,
/// and one joined cell per pair of non-degenerate cells, glued along the
/// block faces of the merged flags. Comes with the inclusion of X u Y.
struct StratJoin {
    StratSet strat;
    StratMap incl_x;
    StratMap incl_y;
};
StratJoin strat_join(const StratSet& x, const StratSet& y, const std::vector<int>& range_x,
                     const std::vector<int>& range_y);

}  // namespace strat
