#pragma once

#include "qcat/scalar.hpp"

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace qcat {

/// A sparse row: (column, value) pairs sorted by column, no zero values.
using SparseRow = std::vector<std::pair<std::uint32_t, Scalar>>;

/// Exact rank of a large sparse system.  Columns are first split into the
/// connected blocks induced by row supports; each block is then eliminated
/// independently with head reduction.
std::size_t sparse_rank(std::vector<SparseRow> rows, std::size_t cols);

}  // namespace qcat
