#ifndef PLANEGEN_LP_HPP
#define PLANEGEN_LP_HPP

#include <gmpxx.h>

#include <vector>

namespace pg {

using Q = mpq_class;

// Decide whether { x : a.x >= 1 for a in strict_rows, a.x >= 0 for a in
// weak_rows } is nonempty over free x in R^k. Since both row families are
// homogeneous in x, this is exactly strict feasibility of
// { a.x > 0 (strict), a.x >= 0 (weak) } after rescaling.
// Exact rational two-phase simplex with Bland's rule.
bool strict_homogeneous_feasible(const std::vector<std::vector<Q>>& strict_rows,
                                 const std::vector<std::vector<Q>>& weak_rows);

}  // namespace pg

#endif
