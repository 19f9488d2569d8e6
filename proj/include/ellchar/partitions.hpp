#pragma once

#include <string>
#include <vector>

namespace ellchar {

using Partition = std::vector<int>;

/// All partitions of n, in reverse lexicographic order: (n) first, (1^n) last.
std::vector<Partition> partitions(int n);

/// Cycle type (descending) of a permutation given as an image list.
Partition cycle_type(const std::vector<int>& perm);

std::string partition_string(const Partition& p);

/// Murnaghan-Nakayama: the S_n character chi_sigma at cycle type lambda,
/// computed by rim-hook removal on beta-sets.
long mn_character_Sn(const Partition& sigma, const Partition& lambda);

}  // namespace ellchar
