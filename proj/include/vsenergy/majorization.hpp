#pragma once

#include <vector>

#include "vsenergy/cycle_metrics.hpp"
#include "vsenergy/rational.hpp"

namespace vsenergy {

// Preorders on multisets of equal cardinality. All three throw on a size
// mismatch. Empty vs empty holds for each.
//
// is_majorized(x, y): descending prefix sums of x never exceed those of y
// and the totals agree.
// is_weakly_submajorized(x, y): descending prefix sums of x never exceed
// those of y (totals free).
// is_weakly_supermajorized(x, y): ascending prefix sums of x are at least
// those of y (totals free), so e.g. (5,5) is weakly supermajorized by (4,4).
bool is_majorized(const Multiset& x, const Multiset& y);
bool is_weakly_submajorized(const Multiset& x, const Multiset& y);
bool is_weakly_supermajorized(const Multiset& x, const Multiset& y);

bool is_majorized(const std::vector<Rational>& x, const std::vector<Rational>& y);
bool is_weakly_submajorized(const std::vector<Rational>& x, const std::vector<Rational>& y);
bool is_weakly_supermajorized(const std::vector<Rational>& x, const std::vector<Rational>& y);

// Adds 1 to one least element. Identity on the empty multiset.
Multiset up_transfer(const Multiset& x);
// Adds 1 to one least element and subtracts 1 from one greatest element.
// Identity when |x| <= 1.
Multiset robin_hood_transfer(const Multiset& x);

struct ReduceResult {
  Multiset result;
  long long ups = 0;
  long long robin_hoods = 0;
};

// Raises the sum to target with up transfers, then applies robin hood
// transfers until the spread is at most 1. Requires sum(x) <= target.
// The result is always consecutive_multiset(|x|, target).
ReduceResult reduce_to_consecutive(const Multiset& x, long long target);

}  // namespace vsenergy
