#pragma once

namespace fdnet {

/// Selects between the serial reference loop and the OpenMP kernel. Both
/// paths produce bit-identical results: work items are independent and
/// partial results are combined in a fixed index order.
enum class Execution
{
    Serial,
    Parallel,
};

/// Number of OpenMP threads available to parallel kernels (1 without
/// OpenMP).
int max_threads();

}  // namespace fdnet
