#pragma once

#include "hypcont/roc.hpp"
#include "hypcont/series.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hypcont {

/// outer(indices without the summed one) * pFq(upper; lower; arg), with pFq summed over indices[summed].
/// `outer` may still hold Gamma functions and powers whose arguments or exponents carry outer indices.
struct InnerHypForm {
  std::vector<Index> indices;
  std::size_t summed = 0;
  FactorProduct outer;
  std::vector<LinearForm> upper, lower;
  VarExpr arg;

  const Index& summed_index() const { return indices[summed]; }
  std::vector<Index> outer_indices() const;
  /// "HypergeometricPFQ[{b1, a + p}, {c1}, x]"
  std::string pfq_str() const;
  /// "(y^p HypergeometricPFQ[{b1, a + p}, {c1}, x] Pochhammer[a, p] Pochhammer[b2, p])/(p! Pochhammer[c2, p])"
  std::string str() const;
  std::string latex() const;
  bool operator==(const InnerHypForm&) const = default;
};

/// Sum of terms that still contain an unexpanded inner series.
using PendingSum = std::vector<InnerHypForm>;

std::string str(const PendingSum& ps);
std::string latex(const PendingSum& ps);

enum class Transformation { One, Inf, Pet1, Pet2, Pet3, PfqInf };

const char* to_string(Transformation t);

/// Takes the sum over indices[q - 1] (q is 1-based) inside the summand of `s`. Throws UnsupportedSubseries
/// when that index enters a Pochhammer with a coefficient other than +1 after normalization, when its
/// variable power is not linear, or when the inner series is not of pFp-1 shape.
InnerHypForm inner_sum(int q, const std::vector<Index>& indices, const HypSeries& s);

/// One term per summand of the chosen 2F1 identity. Inf on a pFp-1 with p >= 3 uses pfq_inf.
/// Throws UnsupportedSubseries when the inner series is not a 2F1 (for One, Pet1-3) or when 1 - z is not a
/// monomial in the base variables.
PendingSum apply_2f1(const InnerHypForm& form, Transformation t);

/// Continuation of a pFp-1 around infinity: p terms, term k led by (-z)^(-a_k).
PendingSum pfq_inf(const InnerHypForm& form);

/// The inner series written back as a sum over the index it replaced, without simplification.
HypSeries expanded_series(const InnerHypForm& form);

/// Re-expands each inner series over the index it replaced and simplifies. Throws SimIncomplete.
TermSum expand_and_sim(const PendingSum& ps);

enum class OlssonOption { Sum, One, Inf, Pet1, Pet2, Pet3, Sim, Roc };

struct OlssonResult {
  PendingSum pending;
  std::optional<TermSum> terms;
  std::optional<CommonRegion> region;

  /// The region (when computed) followed by the simplified terms, or the pending terms.
  std::string str() const;
};

/// Inner sum, then at most one transformation, then optional simplification and common convergence
/// region. Throws InvalidOptions when more than one of Sum, One, Inf, Pet1-3 is set.
OlssonResult olsson(int q, const std::vector<Index>& indices, const HypSeries& s, const std::set<OlssonOption>& opts);

/// Mathematica-style rendering of a term sum: "prefactor series + prefactor series".
std::string str(const TermSum& ts);
std::string latex(const TermSum& ts);

}  // namespace hypcont
