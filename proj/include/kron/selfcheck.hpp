#pragma once

#include <string>

namespace kron {

struct SelfcheckReport {
    std::string text;
    int triples = 0;
    int mismatches = 0;
};

/// Compares the column-row formula, the face formula for every l in [p] and
/// the character oracle on all ordered triples of partitions of n for
/// 1 <= n <= max_n. The report text does not depend on `threads`.
SelfcheckReport run_selfcheck(int max_n, int threads);

} // namespace kron
