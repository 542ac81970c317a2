#include "hypcont/rewrite.hpp"

#include <optional>

namespace hypcont {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::InvalidOptions: return "InvalidOptions";
    case ErrorKind::SimIncomplete: return "SimIncomplete";
    case ErrorKind::UnsupportedSubseries: return "UnsupportedSubseries";
    case ErrorKind::NotSimplified: return "NotSimplified";
    case ErrorKind::UnknownSeries: return "UnknownSeries";
    case ErrorKind::DuplicatePattern: return "DuplicatePattern";
    case ErrorKind::UnknownPattern: return "UnknownPattern";
    case ErrorKind::DegenerateCurve: return "DegenerateCurve";
    case ErrorKind::UnsolvableDegree: return "UnsolvableDegree";
    case ErrorKind::NotTwoVariable: return "NotTwoVariable";
    case ErrorKind::PoleHit: return "PoleHit";
    case ErrorKind::NotConverging: return "NotConverging";
    case ErrorKind::EmptyOverlap: return "EmptyOverlap";
    case ErrorKind::BranchRequired: return "BranchRequired";
  }
  return "Error";
}

namespace {

std::optional<Index> first_present(const LinearForm& f, std::span<const Index> indices) {
  for (const auto& i : indices)
    if (f.contains(i)) return i;
  return std::nullopt;
}

// Everything of x except its gammas and pochs.
FactorProduct skeleton(const FactorProduct& x) {
  FactorProduct out(x.constant());
  out.add_sign(x.sign_exponent());
  for (const auto& [b, e] : x.powers()) out.add_power(b, e);
  return out;
}

FactorProduct gamma_to_poch_once(const FactorProduct& x, std::span<const Index> indices) {
  FactorProduct out = skeleton(x);
  for (const auto& [arg, mult] : x.gammas()) {
    auto i = first_present(arg, indices);
    if (!i) {
      out.add_gamma(arg, mult);
      continue;
    }
    LinearForm step = LinearForm::index(i->name, arg.coeff(*i));
    LinearForm rest = arg - step;
    out.add_gamma(rest, mult);
    out.add_poch(rest, step, mult);
  }
  for (const auto& [key, mult] : x.pochs()) {
    auto i = first_present(key.base, indices);
    if (!i) {
      out.add_poch(key.base, key.shift, mult);
      continue;
    }
    LinearForm step = LinearForm::index(i->name, key.base.coeff(*i));
    LinearForm rest = key.base - step;
    out.add_poch(rest, step + key.shift, mult);
    out.add_poch(rest, step, -mult);
  }
  return out;
}

}  // namespace

FactorProduct gamma_to_poch(const FactorProduct& x, std::span<const Index> indices, bool repeat) {
  FactorProduct cur = gamma_to_poch_once(x, indices);
  if (!repeat) return cur;
  for (int guard = 0; guard < 64; ++guard) {
    FactorProduct next = gamma_to_poch_once(cur, indices);
    if (next == cur) break;
    cur = std::move(next);
  }
  return cur;
}

FactorProduct positive_poch(const FactorProduct& x, std::span<const Index> indices) {
  FactorProduct out = skeleton(x);
  for (const auto& [g, mult] : x.gammas()) out.add_gamma(g, mult);
  for (const auto& [key, mult] : x.pochs()) {
    LinearForm idx_part = key.shift.index_part();
    if (!idx_part.all_index_coeffs_negative() || !idx_part.contains_any(indices)) {
      out.add_poch(key.base, key.shift, mult);
      continue;
    }
    LinearForm free = key.shift.free_part();
    LinearForm pos = -idx_part;
    FactorProduct piece = FactorProduct::poch(key.base, free) * FactorProduct::sign(pos) /
                          FactorProduct::poch(LinearForm(1) - key.base - free, pos);
    for (int k = 0; k < std::abs(mult); ++k) out *= mult > 0 ? piece : piece.inverse();
  }
  return out;
}

FactorProduct poch_dim(const FactorProduct& x) {
  FactorProduct out = skeleton(x);
  for (const auto& [g, mult] : x.gammas()) out.add_gamma(g, mult);
  for (const auto& [key, mult] : x.pochs()) {
    std::int64_t k = key.shift.index_content();
    bool applies = key.shift.is_index_only() && key.shift.all_index_coeffs_positive() && k >= 2 &&
                   !key.base.has_indices();
    if (!applies) {
      out.add_poch(key.base, key.shift, mult);
      continue;
    }
    LinearForm reduced = key.shift.scaled(Rational(1, k));
    FactorProduct piece = FactorProduct::power(VarExpr(Rational(k)), key.shift);
    for (std::int64_t i = 0; i < k; ++i)
      piece *= FactorProduct::poch((key.base + LinearForm(static_cast<int>(i))).scaled(Rational(1, k)), reduced);
    for (int j = 0; j < std::abs(mult); ++j) out *= mult > 0 ? piece : piece.inverse();
  }
  return out;
}

namespace {

FactorProduct split_on(const FactorProduct& x, const Index& idx, bool positive_only) {
  FactorProduct out = skeleton(x);
  for (const auto& [g, mult] : x.gammas()) out.add_gamma(g, mult);
  for (const auto& [key, mult] : x.pochs()) {
    std::int64_t c = key.shift.coeff(idx);
    LinearForm rest = key.shift - LinearForm::index(idx.name, c);
    if (c == 0 || rest.is_zero() || (positive_only && c < 0)) {
      out.add_poch(key.base, key.shift, mult);
      continue;
    }
    out.add_poch(key.base, rest, mult);
    out.add_poch(key.base + rest, LinearForm::index(idx.name, c), mult);
  }
  return out;
}

}  // namespace

FactorProduct unsim(const FactorProduct& x, const Index& idx) { return split_on(x, idx, true); }

FactorProduct isolate_index(const FactorProduct& x, const Index& idx) { return split_on(x, idx, false); }

FactorProduct merge_pochs(const FactorProduct& x) {
  FactorProduct cur = x;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& [a, ma] : cur.pochs()) {
      for (const auto& [b, mb] : cur.pochs()) {
        if (b.base != a.base + a.shift || (ma > 0) != (mb > 0)) continue;
        int m = ma > 0 ? std::min(ma, mb) : -std::min(-ma, -mb);
        FactorProduct next = cur;
        next.add_poch(a.base, a.shift, -m);
        next.add_poch(b.base, b.shift, -m);
        next.add_poch(a.base, a.shift + b.shift, m);
        cur = std::move(next);
        changed = true;
        break;
      }
      if (changed) break;
    }
  }
  return cur;
}

FactorProduct sim(const FactorProduct& x, std::span<const Index> indices) {
  FactorProduct y = gamma_to_poch(x, indices, true);
  y = positive_poch(y, indices);
  y = gamma_to_poch(y, indices, true);
  y = merge_pochs(y);
  for (const auto& [g, mult] : y.gammas())
    if (g.has_indices()) throw SimIncomplete("index left in Gamma[" + g.str() + "]", y);
  for (const auto& [key, mult] : y.pochs())
    if (key.base.has_indices())
      throw SimIncomplete("index left in Pochhammer base " + key.base.str(), y);
  return y;
}

}  // namespace hypcont
