#pragma once

#include "hypcont/errors.hpp"
#include "hypcont/factors.hpp"

#include <span>

namespace hypcont {

/// Gamma(X + c*i) -> Gamma(X) (X)_{c*i} and (X + c*i)_S -> (X)_{c*i+S} / (X)_{c*i} for each index i,
/// taking the first listed index present in each factor. With `repeat` the rules run to a fixed point.
/// Negative index coefficients are rewritten too; positive_poch turns the resulting (X)_{-L} around.
FactorProduct gamma_to_poch(const FactorProduct& x, std::span<const Index> indices, bool repeat);

/// (a)_{F - L} -> (a)_F (-1)^L / (1 - a - F)_L for index parts -L with only negative coefficients.
/// Shifts with mixed signs are left alone.
FactorProduct positive_poch(const FactorProduct& x, std::span<const Index> indices);

/// Multiplication formula (a)_{kL} -> k^{kL} prod_{i<k} ((a+i)/k)_L, where k is the gcd of the index
/// coefficients of a purely index shift with non-negative coefficients and k >= 2.
FactorProduct poch_dim(const FactorProduct& x);

/// (a)_{L + c*idx} -> (a)_L (a+L)_{c*idx} for c > 0 and L != 0.
FactorProduct unsim(const FactorProduct& x, const Index& idx);

/// Like unsim but for any non-zero coefficient of idx.
FactorProduct isolate_index(const FactorProduct& x, const Index& idx);

/// (a)_L (a+L)_M -> (a)_{L+M} on the same side of the fraction.
FactorProduct merge_pochs(const FactorProduct& x);

/// Thrown by sim when an index survives in a Gamma argument or a Pochhammer base.
class SimIncomplete : public Error {
 public:
  SimIncomplete(const std::string& what, FactorProduct partial)
      : Error(ErrorKind::SimIncomplete, what), partial_(std::move(partial)) {}
  const FactorProduct& partial() const { return partial_; }

 private:
  FactorProduct partial_;
};

/// Full simplification: Gamma -> Pochhammer to a fixed point, positive_poch, Gamma -> Pochhammer
/// again, merge. Throws SimIncomplete if any index (listed or not) survives in a Gamma argument or
/// Pochhammer base.
FactorProduct sim(const FactorProduct& x, std::span<const Index> indices);

}  // namespace hypcont
