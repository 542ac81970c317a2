#include "hypcont/roc.hpp"

#include "json.hpp"
#include "roc_detail.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

namespace hypcont {

namespace {

constexpr long double kInf = std::numeric_limits<long double>::infinity();

UPoly ratio_derivative_numerator(const UPoly& N, const UPoly& D) { return N.derivative() * D - N * D.derivative(); }

std::vector<RealRoot> roots_in(const UPoly& p, const SignCase& c) {
  if (p.degree() < 1) return {};
  return real_roots(p, c.lo, c.hi);
}

Algebraic from_root(const RealRoot& r) {
  if (r.exact) return Algebraic(*r.exact);
  RealRoot tight = r;
  tight.refine(Rational(1, Integer(1) << 90));
  if (tight.exact) return Algebraic(*tight.exact);
  return Algebraic::root_near(r.poly, (tight.lo + tight.hi) / 2);
}

Rational abs_q(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// |N/D| at a point inside the case, where it is constant.
Rational constant_value(const UPoly& N, const UPoly& D, const SignCase& c) {
  Rational probe = c.hi ? Rational((c.lo + *c.hi) / 2) : Rational(c.lo + 1);
  return abs_q(N(probe) / D(probe));
}

struct ConstCandidate {
  Algebraic value;
  Algebraic threshold;  // active for r > threshold
};

struct Builder {
  Rectangle rect;
  std::vector<SignCase> cases;
  std::vector<BPoly> curves;
  std::vector<std::size_t> curve_case;
  std::vector<Branch> branches;
  std::vector<ConstCandidate> consts;
  std::vector<ImplicitCurve> implicits;
  std::vector<std::size_t> implicit_case;
  std::vector<Algebraic> breaks;

  bool below_R(long double v) const { return rect.R.infinite || v < rect.R.approx(); }

  void add_break(const Algebraic& a) {
    if (a.approx() > 0 && below_R(a.approx())) breaks.push_back(a);
  }

  void add_const(const Algebraic& value, const Algebraic& threshold) {
    if (!below_R(threshold.approx())) return;
    if (!rect.S.infinite && value.approx() >= rect.S.approx()) return;
    consts.push_back({value, threshold});
    add_break(threshold);
  }

  void add_poly_roots(const UPoly& p) {
    if (p.degree() < 1) return;
    std::optional<Rational> hi;
    if (!rect.R.infinite) hi = rect.R.value;
    for (const auto& r : real_roots(p, 0, hi)) add_break(from_root(r));
  }

  void build_case(std::size_t ci) {
    const SignCase& c = cases[ci];
    std::vector<std::optional<Rational>> ends{c.lo, c.hi};
    if (!c.r_constant && !c.s_constant) {
      try {
        BPoly P = eliminate_boundary(c);
        try {
          auto bs = solve_boundary(P);
          curves.push_back(P);
          curve_case.push_back(ci);
          for (auto& b : bs) {
            b.curve = curves.size() - 1;
            for (const auto& [g, k] : b.factors) add_poly_roots(g);
            add_poly_roots(b.den);
            branches.push_back(b);
          }
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::UnsolvableDegree) throw;
          implicits.push_back({P, c});
          implicit_case.push_back(ci);
        }
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::DegenerateCurve) throw;
      }
      for (const auto& t : roots_in(ratio_derivative_numerator(c.rn, c.rd), c)) add_break(Algebraic::image(t, c.rn, c.rd));
      for (const auto& t : roots_in(ratio_derivative_numerator(c.sn, c.sd), c))
        add_const(Algebraic::image(t, c.sn, c.sd), Algebraic::image(t, c.rn, c.rd));
      for (const auto& e : ends) {
        Extended lr = detail::limit_abs(c.rn, c.rd, e), ls = detail::limit_abs(c.sn, c.sd, e);
        if (!lr.infinite) add_break(lr.value);
        if (!lr.infinite && !ls.infinite) add_const(ls.value, lr.value);
      }
    } else if (!c.r_constant) {
      Rational d = constant_value(c.sn, c.sd, c);
      for (const auto& t : roots_in(ratio_derivative_numerator(c.rn, c.rd), c)) add_const(d, Algebraic::image(t, c.rn, c.rd));
      for (const auto& e : ends) {
        Extended lr = detail::limit_abs(c.rn, c.rd, e);
        if (!lr.infinite) add_const(d, lr.value);
      }
    } else if (!c.s_constant) {
      Rational k = constant_value(c.rn, c.rd, c);
      for (const auto& t : roots_in(ratio_derivative_numerator(c.sn, c.sd), c)) add_const(Algebraic::image(t, c.sn, c.sd), k);
      for (const auto& e : ends) {
        Extended ls = detail::limit_abs(c.sn, c.sd, e);
        if (!ls.infinite) add_const(ls.value, k);
      }
    } else {
      add_const(constant_value(c.sn, c.sd, c), constant_value(c.rn, c.rd, c));
    }
  }

  // Which branches and implicit curves carry actual boundary points at r.
  void valid_at(const Rational& r, std::vector<bool>& branch_ok, std::vector<bool>& implicit_ok) const {
    branch_ok.assign(branches.size(), false);
    implicit_ok.assign(implicits.size(), false);
    for (std::size_t ci = 0; ci < cases.size(); ++ci) {
      bool wanted = false;
      for (const auto& b : branches) wanted = wanted || curve_case[b.curve] == ci;
      for (std::size_t k = 0; k < implicits.size(); ++k) wanted = wanted || implicit_case[k] == ci;
      if (!wanted) continue;
      const SignCase& c = cases[ci];
      UPoly q = c.rn - UPoly(r) * c.rd;
      auto roots = roots_in(q, c);
      for (std::size_t k = 0; k < implicits.size(); ++k)
        if (implicit_case[k] == ci && !roots.empty()) implicit_ok[k] = true;
      const long double rl = to_long_double(r);
      for (auto& root : roots) {
        root.refine(Rational(1, Integer(1) << 80));
        Rational t = root.exact ? *root.exact : (root.lo + root.hi) / 2;
        long double s = to_long_double(abs_q(c.sn(t) / c.sd(t)));
        std::optional<std::size_t> best;
        long double gap = kInf;
        for (std::size_t bi = 0; bi < branches.size(); ++bi) {
          if (curve_case[branches[bi].curve] != ci) continue;
          auto v = branches[bi].eval(rl);
          if (!v) continue;
          long double g = std::fabs(*v - s);
          if (g < gap) {
            gap = g;
            best = bi;
          }
        }
        if (best && gap <= 1e-7L * (1 + std::fabs(s))) branch_ok[*best] = true;
      }
    }
  }

  long double item_value(const BoundItem& it, long double r) const {
    switch (it.kind) {
      case BoundItem::Kind::Branch: return branches[it.index].eval(r).value_or(kInf);
      case BoundItem::Kind::Constant: return consts[it.index].value.approx();
      case BoundItem::Kind::Implicit: return implicits[it.index].eval(r).value_or(kInf);
    }
    return kInf;
  }

  Region build(const VarExpr& X, const VarExpr& Y) {
    for (std::size_t ci = 0; ci < cases.size(); ++ci) build_case(ci);
    std::sort(breaks.begin(), breaks.end(), [](const Algebraic& a, const Algebraic& b) { return a.approx() < b.approx(); });
    std::vector<Algebraic> bps;
    for (const auto& b : breaks) {
      if (!bps.empty() && std::fabs(bps.back().approx() - b.approx()) <= 1e-15L * std::max(1.0L, std::fabs(b.approx()))) {
        if (!bps.back().is_rational() && b.is_rational()) bps.back() = b;
        continue;
      }
      bps.push_back(b);
    }

    struct RawPiece {
      std::optional<Algebraic> upper;
      long double lo, hi;
      std::vector<BoundItem> items;
    };
    std::vector<RawPiece> raw;
    const Rational fine(1, Integer(1) << 80);
    Rational prev = 0;
    long double prev_l = 0;
    for (std::size_t k = 0; k <= bps.size(); ++k) {
      RawPiece p;
      Rational sample;
      if (k < bps.size()) {
        p.upper = bps[k];
        Rational up = bps[k].rational_approx(fine);
        sample = (prev + up) / 2;
        p.lo = prev_l;
        p.hi = bps[k].approx();
        prev = up;
        prev_l = p.hi;
      } else {
        sample = rect.R.infinite ? Rational(prev * 2 + 1) : Rational((prev + rect.R.value) / 2);
        p.lo = prev_l;
        p.hi = rect.R.approx();
      }
      std::vector<bool> bok, iok;
      valid_at(sample, bok, iok);
      for (std::size_t i = 0; i < branches.size(); ++i)
        if (bok[i]) p.items.push_back({BoundItem::Kind::Branch, i});
      for (std::size_t i = 0; i < implicits.size(); ++i)
        if (iok[i]) p.items.push_back({BoundItem::Kind::Implicit, i});
      // Among active constants only the smallest can matter.
      std::optional<std::size_t> best;
      for (std::size_t i = 0; i < consts.size(); ++i) {
        if (!(sample > consts[i].threshold.rational_approx(fine))) continue;
        if (!best || consts[i].value.approx() < consts[*best].value.approx()) best = i;
      }
      if (best && !dominated(*best, p.items, p.lo, p.hi)) p.items.push_back({BoundItem::Kind::Constant, *best});
      raw.push_back(std::move(p));
    }

    // Merge neighbours with identical items.
    std::vector<RawPiece> merged;
    for (auto& p : raw) {
      if (!merged.empty() && merged.back().items == p.items) {
        merged.back().upper = p.upper;
        merged.back().hi = p.hi;
        continue;
      }
      merged.push_back(std::move(p));
    }

    Region region;
    region.X = X;
    region.Y = Y;
    region.R = rect.R;
    region.S = rect.S;
    bool any = false;
    for (const auto& p : merged) any = any || !p.items.empty();
    if (!any) return region;

    std::map<std::size_t, std::size_t> bmap, cmap, imap, curve_map;
    for (auto& p : merged) {
      Piece out{p.upper, {}};
      for (const auto& it : p.items) {
        switch (it.kind) {
          case BoundItem::Kind::Branch: {
            if (!bmap.count(it.index)) {
              Branch b = branches[it.index];
              if (!curve_map.count(b.curve)) {
                curve_map[b.curve] = region.curves.size();
                region.curves.push_back(curves[b.curve]);
              }
              b.curve = curve_map[b.curve];
              bmap[it.index] = region.branches.size();
              region.branches.push_back(b);
            }
            out.items.push_back({it.kind, bmap[it.index]});
            break;
          }
          case BoundItem::Kind::Constant:
            if (!cmap.count(it.index)) {
              cmap[it.index] = region.constants.size();
              region.constants.push_back(consts[it.index].value);
            }
            out.items.push_back({it.kind, cmap[it.index]});
            break;
          case BoundItem::Kind::Implicit:
            if (!imap.count(it.index)) {
              imap[it.index] = region.implicits.size();
              region.implicits.push_back(implicits[it.index]);
              region.curves.push_back(implicits[it.index].poly);
            }
            out.items.push_back({it.kind, imap[it.index]});
            break;
        }
      }
      region.pieces.push_back(std::move(out));
    }
    // The last piece reaches R: drop its stored upper end.
    region.pieces.back().upper.reset();
    return region;
  }

  // A constant is redundant on a piece when some other item is at most its value across the piece.
  bool dominated(std::size_t ci, const std::vector<BoundItem>& others, long double lo, long double hi) const {
    if (others.empty()) return false;
    const long double c = consts[ci].value.approx();
    if (!std::isfinite(hi)) hi = std::max(2 * lo, lo + 64);
    const int n = 33;
    for (int j = 0; j < n; ++j) {
      long double r = lo + (hi - lo) * (j + 0.5L) / n;
      long double m = kInf;
      for (const auto& it : others) m = std::min(m, item_value(it, r));
      if (m > c * (1 + 1e-12L)) return false;
    }
    return true;
  }
};

long double abs_value(const VarExpr& v, const std::map<std::string, double>& values) {
  return std::fabs(static_cast<long double>(v.eval(values)));
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
  return out;
}

}  // namespace

Region roc2_region(const RatioFunctions& rf, const VarExpr& X, const VarExpr& Y) {
  Builder b;
  b.rect = rectangle(rf);
  Region empty;
  empty.X = X;
  empty.Y = Y;
  empty.R = b.rect.R;
  empty.S = b.rect.S;
  if ((!b.rect.R.infinite && b.rect.R.value == 0) || (!b.rect.S.infinite && b.rect.S.value == 0)) {
    empty.empty = true;
    return empty;
  }
  // An infinite rho or sigma satisfies the ray condition everywhere.
  if (rf.rho.kind != RatioFn::Kind::Finite || rf.sigma.kind != RatioFn::Kind::Finite) return empty;
  b.cases = sign_cases(rf);
  return b.build(X, Y);
}

Roc2Result roc2(const std::vector<IndexForm>& num, const std::vector<IndexForm>& den, const VarExpr& X,
                const VarExpr& Y) {
  Roc2Result out;
  out.rf = ratio_functions(num, den);
  out.rect = rectangle(out.rf);
  out.cases = sign_cases(out.rf);
  out.region = roc2_region(out.rf, X, Y);
  return out;
}

Region roc1(const std::vector<std::int64_t>& num, const std::vector<std::int64_t>& den, const VarExpr& X) {
  int degree = -1;
  Rational c = 1;
  for (auto a : num) {
    degree += static_cast<int>(a);
    for (std::int64_t k = 0; k < (a < 0 ? -a : a); ++k) c = a > 0 ? Rational(c * a) : Rational(c / a);
  }
  for (auto a : den) {
    degree -= static_cast<int>(a);
    for (std::int64_t k = 0; k < (a < 0 ? -a : a); ++k) c = a > 0 ? Rational(c / a) : Rational(c * a);
  }
  Region r;
  r.X = X;
  r.has_y = false;
  r.S = Extended::inf();
  if (degree < 0)
    r.R = Extended::inf();
  else if (degree > 0) {
    r.R = {false, 0};
    r.empty = true;
  } else {
    r.R = {false, abs_q(1 / c)};
  }
  return r;
}

long double Region::bound(long double r) const {
  if (pieces.empty()) return kInf;
  const Piece* piece = &pieces.back();
  for (const auto& p : pieces)
    if (!p.upper || r < p.upper->approx()) {
      piece = &p;
      break;
    }
  long double m = kInf;
  for (const auto& it : piece->items) {
    switch (it.kind) {
      case BoundItem::Kind::Branch: m = std::min(m, branches[it.index].eval(r).value_or(kInf)); break;
      case BoundItem::Kind::Constant: m = std::min(m, constants[it.index].approx()); break;
      case BoundItem::Kind::Implicit: m = std::min(m, implicits[it.index].eval(r).value_or(kInf)); break;
    }
  }
  return m;
}

bool Region::contains_rs(long double r, long double s) const {
  if (empty) return false;
  if (!(r < R.approx())) return false;
  if (!has_y) return true;
  if (!(s < S.approx())) return false;
  return s < bound(r);
}

bool Region::contains(const std::map<std::string, double>& values, double margin) const {
  return contains_rs(abs_value(X, values) / margin, has_y ? abs_value(Y, values) / margin : 0);
}

bool Region::has_curve_bound() const { return !pieces.empty(); }

std::string Region::bound_str(bool use_min) const {
  if (pieces.empty()) return "";
  auto item_text = [&](const BoundItem& it) -> std::string {
    switch (it.kind) {
      case BoundItem::Kind::Branch: return branches[it.index].str(rx());
      case BoundItem::Kind::Constant: return constants[it.index].str();
      case BoundItem::Kind::Implicit: {
        const auto& ic = implicits[it.index];
        return "CurveBound[" + ic.poly.str(rx(), "#1") + ", " + ic.sign_case.interval_str() + "]";
      }
    }
    return "";
  };
  auto list_text = [&](const std::vector<BoundItem>& items) -> std::string {
    if (items.empty()) return "Infinity";
    if (items.size() == 1) return item_text(items[0]);
    std::vector<std::string> parts;
    for (const auto& it : items) parts.push_back(item_text(it));
    return "Min[" + join(parts, ", ") + "]";
  };
  if (use_min || pieces.size() == 1) {
    std::vector<BoundItem> all;
    for (const auto& p : pieces)
      for (const auto& it : p.items)
        if (std::find(all.begin(), all.end(), it) == all.end()) all.push_back(it);
    return list_text(all);
  }
  std::vector<std::string> cases;
  for (std::size_t k = 0; k + 1 < pieces.size(); ++k)
    cases.push_back("{" + list_text(pieces[k].items) + ", " + rx() + " < " + pieces[k].upper->str() + "}");
  return "Piecewise[{" + join(cases, ", ") + "}, " + list_text(pieces.back().items) + "]";
}

std::optional<std::string> Region::linear_str() const {
  if (pieces.size() != 1 || pieces[0].items.size() != 1 || pieces[0].items[0].kind != BoundItem::Kind::Branch) return std::nullopt;
  const Branch& b = branches[pieces[0].items[0].index];
  if (b.coeff != 0 || b.den.degree() != 0 || b.num.degree() != 1) return std::nullopt;
  Rational d = b.den.coeff(0), n0 = b.num.coeff(0), n1 = b.num.coeff(1);
  if (d < 0) d = -d, n0 = -n0, n1 = -n1;
  if (!(n1 < 0) || !(n0 > 0)) return std::nullopt;
  auto scaled = [](const Rational& c, const std::string& v) { return c == 1 ? v : to_string(c) + " " + v; };
  return scaled(-n1, rx()) + " + " + scaled(d, sy()) + " < " + to_string(n0);
}

std::string Region::curves_str() const {
  std::vector<std::string> parts;
  if (auto lin = linear_str()) {
    std::string s = *lin;
    s.replace(s.rfind(" < "), 3, " == ");
    parts.push_back(s);
  } else {
    for (const auto& b : branches) parts.push_back(sy() + " == " + b.str(rx()));
    for (const auto& ic : implicits) parts.push_back(ic.poly.str(rx(), sy()) + " == 0");
  }
  return "{" + join(parts, ", ") + "}";
}

std::vector<Region::Conjunct> Region::conjuncts(bool linear_curves) const {
  std::vector<Conjunct> out;
  if (empty) {
    out.push_back({Conjunct::Kind::Empty, "False", [](const auto&) { return false; }});
    return out;
  }
  if (!R.infinite) {
    long double rv = R.approx();
    VarExpr x = X;
    out.push_back({Conjunct::Kind::XRadius, rx() + " < " + R.str(), [x, rv](const auto& v) { return abs_value(x, v) < rv; }});
  }
  if (has_y && !S.infinite) {
    long double sv = S.approx();
    VarExpr y = Y;
    out.push_back({Conjunct::Kind::YRadius, sy() + " < " + S.str(), [y, sv](const auto& v) { return abs_value(y, v) < sv; }});
  }
  if (has_y && !pieces.empty()) {
    std::string text;
    if (linear_curves)
      if (auto lin = linear_str()) text = *lin;
    if (text.empty()) text = sy() + " < " + bound_str(false);
    Region self = *this;
    out.push_back({Conjunct::Kind::Curve, text, [self](const auto& v) {
                     return abs_value(self.Y, v) < self.bound(abs_value(self.X, v));
                   }});
  }
  return out;
}

std::string Region::str() const {
  auto cs = conjuncts(false);
  if (cs.empty()) return "True";
  std::vector<std::string> parts;
  for (const auto& c : cs) parts.push_back(c.text);
  return join(parts, " && ");
}

std::string Region::min_str() const {
  std::string out = str();
  if (pieces.size() > 1) {
    std::string pw = bound_str(false);
    out.replace(out.find(pw), pw.size(), bound_str(true));
  }
  return out;
}

namespace {

using nlohmann::ordered_json;

ordered_json poly_json(const UPoly& p) {
  ordered_json a = ordered_json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_string(c));
  return a;
}

ordered_json bpoly_json(const BPoly& p) {
  ordered_json a = ordered_json::array();
  for (const auto& [k, c] : p.terms()) a.push_back({k.first, k.second, to_string(c)});
  return a;
}

ordered_json alg_json(const Algebraic& a) {
  if (a.is_rational()) return {{"op", "const"}, {"value", to_string(a.rational())}};
  std::ostringstream approx;
  approx.precision(18);
  approx << a.approx();
  return {{"op", "alg"}, {"poly", poly_json(a.poly())}, {"index", a.root_index()}, {"approx", approx.str()}};
}

ordered_json abs_json(const VarExpr& v) { return {{"op", "abs"}, {"expr", v.str()}}; }

ordered_json lt_json(ordered_json lhs, ordered_json rhs) { return {{"op", "lt"}, {"args", {std::move(lhs), std::move(rhs)}}}; }

}  // namespace

std::string Region::json() const {
  auto item_json = [&](const BoundItem& it) -> ordered_json {
    switch (it.kind) {
      case BoundItem::Kind::Branch: {
        const Branch& b = branches[it.index];
        ordered_json j{{"op", "branch"}, {"text", b.str(rx())}, {"numerator", poly_json(b.num)}, {"denominator", poly_json(b.den)}};
        if (b.coeff != 0) {
          ordered_json fs = ordered_json::array();
          for (const auto& [g, k] : b.factors) fs.push_back({{"poly", poly_json(g)}, {"mult", k}});
          j["radical"] = {{"coeff", to_string(Rational(b.coeff))}, {"sign", b.sign}, {"const", to_string(Rational(b.radicand_const))}, {"factors", fs}};
        }
        j["curve"] = bpoly_json(curves[b.curve]);
        return j;
      }
      case BoundItem::Kind::Constant: return alg_json(constants[it.index]);
      case BoundItem::Kind::Implicit: {
        const auto& ic = implicits[it.index];
        ordered_json t{to_string(ic.sign_case.lo)};
        t.push_back(ic.sign_case.hi ? ordered_json(to_string(*ic.sign_case.hi)) : ordered_json(nullptr));
        return {{"op", "implicit"}, {"curve", bpoly_json(ic.poly)}, {"t_interval", t}};
      }
    }
    return nullptr;
  };
  auto list_json = [&](const std::vector<BoundItem>& items) -> ordered_json {
    if (items.empty()) return {{"op", "inf"}};
    if (items.size() == 1) return item_json(items[0]);
    ordered_json args = ordered_json::array();
    for (const auto& it : items) args.push_back(item_json(it));
    return {{"op", "min"}, {"args", args}};
  };
  ordered_json args = ordered_json::array();
  if (empty) return ordered_json{{"op", "false"}}.dump();
  if (!R.infinite) args.push_back(lt_json(abs_json(X), {{"op", "const"}, {"value", to_string(R.value)}}));
  if (has_y && !S.infinite) args.push_back(lt_json(abs_json(Y), {{"op", "const"}, {"value", to_string(S.value)}}));
  if (has_y && !pieces.empty()) {
    ordered_json rhs;
    if (pieces.size() == 1) {
      rhs = list_json(pieces[0].items);
    } else {
      ordered_json ps = ordered_json::array();
      for (std::size_t k = 0; k + 1 < pieces.size(); ++k) ps.push_back({{"value", list_json(pieces[k].items)}, {"upper", alg_json(*pieces[k].upper)}});
      rhs = {{"op", "piecewise"}, {"var", abs_json(X)}, {"pieces", ps}, {"default", list_json(pieces.back().items)}};
    }
    args.push_back(lt_json(abs_json(Y), rhs));
  }
  return ordered_json{{"op", "and"}, {"text", str()}, {"args", args}}.dump();
}

std::string Roc2Result::str() const {
  std::string rect_s = "{" + rect.R.str() + ", " + rect.S.str() + "}";
  return "{\"{R,S}, Cartesian Curve, ROC -> \", " + rect_s + ", " + region.curves_str() + ", {" + region.str() + "}}";
}

bool horn_raw_predicate(const RatioFunctions& rf, long double r, long double s) {
  Rectangle rect = rectangle(rf);
  if (!(r < rect.R.approx() && s < rect.S.approx())) return false;
  if (rf.rho.kind != RatioFn::Kind::Finite || rf.sigma.kind != RatioFn::Kind::Finite) return true;
  auto coeffs = [](const UPoly& p) {
    std::vector<long double> c;
    for (const auto& q : p.coeffs()) c.push_back(to_long_double(q));
    return c;
  };
  auto eval = [](const std::vector<long double>& c, long double t) {
    long double v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * t + *it;
    return v;
  };
  const auto rn = coeffs(rf.rho.num_t()), rd = coeffs(rf.rho.den_t()), sn = coeffs(rf.sigma.num_t()), sd = coeffs(rf.sigma.den_t());
  // The ray condition fails somewhere iff min over t of max(rho - r, sigma - s) is not positive.
  auto margin = [&](long double t) {
    long double rho = std::fabs(eval(rn, t) / eval(rd, t)), sigma = std::fabs(eval(sn, t) / eval(sd, t));
    return std::max((rho - r) / r, (sigma - s) / s);
  };
  const int n = 6000;
  const long double lo = -12, hi = 12;
  long double best = kInf;
  int best_k = 0;
  for (int k = 0; k <= n; ++k) {
    long double m = margin(std::pow(10.0L, lo + (hi - lo) * k / n));
    if (m < best) best = m, best_k = k;
  }
  // Golden-section search between the grid neighbours of the best point.
  long double a = lo + (hi - lo) * std::max(0, best_k - 1) / n, b = lo + (hi - lo) * std::min(n, best_k + 1) / n;
  const long double g = (std::sqrt(5.0L) - 1) / 2;
  for (int it = 0; it < 100; ++it) {
    long double c = b - g * (b - a), d = a + g * (b - a);
    if (margin(std::pow(10.0L, c)) < margin(std::pow(10.0L, d)))
      b = d;
    else
      a = c;
  }
  best = std::min(best, margin(std::pow(10.0L, (a + b) / 2)));
  return best > 0;
}

Region series_region(const HypSeries& s) {
  if (s.indices.size() != 1 && s.indices.size() != 2)
    throw Error(ErrorKind::NotTwoVariable, "region needs a series in one or two indices, got " + std::to_string(s.indices.size()));
  CharacteristicList chars = characteristic_list(s);
  // The ratio functions imply one factorial per index; an index without one gets it back as a numerator form.
  for (const auto& idx : s.indices) {
    auto it = s.factors.pochs().find(PochKey{LinearForm(1), LinearForm(idx)});
    if (it == s.factors.pochs().end() || it->second >= 0) chars.numerator.push_back(LinearForm(idx));
  }
  if (s.indices.size() == 1) {
    std::vector<std::int64_t> num, den;
    for (const auto& f : chars.numerator) num.push_back(f.coeff(s.indices[0]));
    for (const auto& f : chars.denominator) den.push_back(f.coeff(s.indices[0]));
    return roc1(num, den, s.vars[0].expr);
  }
  auto to_forms = [&](const std::vector<LinearForm>& fs) {
    std::vector<IndexForm> out;
    for (const auto& f : fs) out.emplace_back(f.coeff(s.indices[0]), f.coeff(s.indices[1]));
    return out;
  };
  return roc2_region(ratio_functions(to_forms(chars.numerator), to_forms(chars.denominator)), s.vars[0].expr, s.vars[1].expr);
}

std::vector<Region> callroc(const TermSum& sum) {
  std::vector<Region> out;
  for (const auto& t : sum.terms) out.push_back(series_region(t.series));
  return out;
}

CommonRegion common_roc(std::vector<Region> regions) { return CommonRegion{std::move(regions)}; }

bool CommonRegion::contains(const std::map<std::string, double>& values, double margin) const {
  return std::all_of(parts.begin(), parts.end(), [&](const Region& r) { return r.contains(values, margin); });
}

namespace {

std::vector<Region::Conjunct> ordered_conjuncts(const std::vector<Region>& parts) {
  std::vector<Region::Conjunct> all, out;
  for (const auto& r : parts)
    for (auto& c : r.conjuncts(true)) all.push_back(std::move(c));
  std::set<std::string> seen;
  for (auto kind : {Region::Conjunct::Kind::Empty, Region::Conjunct::Kind::XRadius, Region::Conjunct::Kind::YRadius,
                    Region::Conjunct::Kind::Curve})
    for (const auto& c : all)
      if (c.kind == kind && seen.insert(c.text).second) out.push_back(c);
  return out;
}

std::vector<std::map<std::string, double>> sample_grid(const std::vector<Region>& parts) {
  std::set<std::string> names;
  for (const auto& r : parts) {
    for (const auto& v : r.X.variables()) names.insert(v);
    if (r.has_y)
      for (const auto& v : r.Y.variables()) names.insert(v);
  }
  std::vector<double> axis;
  for (int k = -24; k <= 24; ++k) {
    double v = std::pow(10.0, k / 8.0);
    axis.push_back(v);
    axis.push_back(-v);
  }
  std::vector<std::map<std::string, double>> grid{{}};
  for (const auto& n : names) {
    std::vector<std::map<std::string, double>> next;
    for (const auto& g : grid)
      for (double v : axis) {
        auto h = g;
        h[n] = v;
        next.push_back(std::move(h));
      }
    grid = std::move(next);
    if (grid.size() > 200000) break;
  }
  return grid;
}

}  // namespace

std::string CommonRegion::str() const {
  auto cs = ordered_conjuncts(parts);
  if (cs.empty()) return "True";
  std::vector<std::string> texts;
  for (const auto& c : cs) texts.push_back(c.text);
  return join(texts, " && ");
}

std::string CommonRegion::simplified_str() const {
  auto cs = ordered_conjuncts(parts);
  if (cs.empty()) return "True";
  auto grid = sample_grid(parts);
  std::vector<std::vector<char>> truth(cs.size());
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (const auto& p : grid) truth[i].push_back(cs[i].holds(p) ? 1 : 0);
  std::vector<bool> keep(cs.size(), true);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    bool implied = true;
    for (std::size_t p = 0; p < grid.size() && implied; ++p) {
      if (truth[i][p]) continue;
      bool others = true;
      for (std::size_t j = 0; j < cs.size() && others; ++j)
        if (j != i && keep[j] && !truth[j][p]) others = false;
      if (others) implied = false;
    }
    if (implied) keep[i] = false;
  }
  std::vector<std::string> texts;
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (keep[i]) texts.push_back(cs[i].text);
  return texts.empty() ? "True" : join(texts, " && ");
}

std::string CommonRegion::json() const {
  ordered_json args = ordered_json::array();
  for (const auto& r : parts) args.push_back(ordered_json::parse(r.json()));
  return ordered_json{{"op", "and"}, {"text", str()}, {"args", args}}.dump();
}

std::string plot_csv(const Region& region, int samples, long double r_max) {
  std::ostringstream out;
  out.precision(12);
  out << "r,s\n";
  long double top = region.R.infinite ? r_max : std::min(r_max, region.R.approx());
  for (int i = 0; i < samples; ++i) {
    long double r = top * (i + 0.5L) / samples;
    long double s = std::min(region.S.approx(), region.bound(r));
    out << static_cast<double>(r) << ",";
    if (std::isfinite(s))
      out << static_cast<double>(s);
    else
      out << "inf";
    out << "\n";
  }
  return out.str();
}

}  // namespace hypcont
