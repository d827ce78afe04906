#pragma once

#include "latwalk/ring.hpp"

#include <vector>

namespace latwalk {

// Weakly decreasing positive parts; the empty partition has size 0.
using Partition = std::vector<int>;

bool is_partition(const Partition& p);
int partition_size(const Partition& p);

// All partitions of n in reverse lexicographic order, (n) first.
std::vector<Partition> partitions_of(int n);

// Cycle type of a permutation given in one-line form over 0..n-1.
Partition cycle_type(const std::vector<int>& perm);

// Number of permutations in S_n with the given cycle type: n! / z_mu.
BigInt conjugacy_class_size(const Partition& mu);

// Irreducible character of the symmetric group: chi_lambda at class mu,
// by border-strip peeling with memoization.  |lambda| must equal |mu|.
long long sn_character(const Partition& lambda, const Partition& mu);

} // namespace latwalk
