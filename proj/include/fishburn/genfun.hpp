#pragma once

// Generating functions of interval orders, self-dual interval orders and
// row-Fishburn matrices, evaluated as truncated MultiSeries.
//
// Variable conventions (statistics of a Fishburn matrix):
//   PP, GP   t = mag, x = iso, y = min, v = max, w = int
//   SP       t = mag, v = max, w = se, z = dg          (corner cell fixed to 1)
//   SPP, SGP t = mag, v = min+max, w = se+nw, x = iso, z = dg
//   R        v = max, w = int, x = iso, y = min        (row-Fishburn)
//   S'       v = max, w = se, x = iso, z = dg          (graded by reduced size)
//   r, s     size and number of maximal/minimal elements
//
// Every infinite sum below is a sum of a running product times a bounded
// factor.  The running product gains valuation at each step, so the loop stops
// as soon as it vanishes inside the window; a guard index derived from the
// window bound turns a non-terminating sum into an error instead of a hang.

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include <json.hpp>

#include "series.hpp"

namespace fishburn {

struct SequenceTable {
  std::string family;
  unsigned offset = 1;
  std::vector<mpz_class> values;
  std::string formula;

  /// Value at index n (n >= offset).
  const mpz_class& at(unsigned n) const {
    if (n < offset || n - offset >= values.size()) throw error("sequence index out of range");
    return values[n - offset];
  }
  unsigned last_index() const { return offset + static_cast<unsigned>(values.size()) - 1; }

  friend bool operator==(const SequenceTable&, const SequenceTable&) = default;
};

inline nlohmann::json to_json(const SequenceTable& table) {
  nlohmann::json values = nlohmann::json::array();
  for (const auto& v : table.values) values.push_back(v.get_str());
  return {{"family", table.family}, {"offset", table.offset}, {"values", values}, {"formula", table.formula}};
}

inline std::string to_csv(const SequenceTable& table) {
  std::ostringstream os;
  os << "n,value\n";
  for (std::size_t i = 0; i < table.values.size(); ++i)
    os << table.offset + i << ',' << table.values[i].get_str() << '\n';
  return os.str();
}

enum class FamilyKind {
  zagier,
  kitaev_remmel,
  conjecture_form,
  gen_min2,
  primitive_by_size,
  primitive_by_magnitude,
  general_full,
  selfdual_primitive_by_size,
  selfdual_primitive_by_magnitude,
  selfdual_by_size,
  row_fishburn_primitive,
  row_fishburn_general,
  selfdual_reduced_primitive,
  selfdual_reduced_general,
};

inline const std::vector<std::pair<FamilyKind, const char*>>& family_names() {
  static const std::vector<std::pair<FamilyKind, const char*>> names{
      {FamilyKind::zagier, "zagier"},
      {FamilyKind::kitaev_remmel, "kitaev_remmel"},
      {FamilyKind::conjecture_form, "conjecture_form"},
      {FamilyKind::gen_min2, "gen_min2"},
      {FamilyKind::primitive_by_size, "primitive_by_size"},
      {FamilyKind::primitive_by_magnitude, "primitive_by_magnitude"},
      {FamilyKind::general_full, "general_full"},
      {FamilyKind::selfdual_primitive_by_size, "selfdual_primitive_by_size"},
      {FamilyKind::selfdual_primitive_by_magnitude, "selfdual_primitive_by_magnitude"},
      {FamilyKind::selfdual_by_size, "selfdual_by_size"},
      {FamilyKind::row_fishburn_primitive, "row_fishburn_primitive"},
      {FamilyKind::row_fishburn_general, "row_fishburn_general"},
      {FamilyKind::selfdual_reduced_primitive, "selfdual_reduced_primitive"},
      {FamilyKind::selfdual_reduced_general, "selfdual_reduced_general"},
  };
  return names;
}

inline std::string to_string(FamilyKind kind) {
  for (auto [k, name] : family_names())
    if (k == kind) return name;
  throw error("unknown family");
}

inline FamilyKind parse_family(const std::string& name) {
  for (auto [k, n] : family_names())
    if (name == n) return k;
  throw error("unknown family '" + name + "'");
}

inline bool is_bivariate(FamilyKind kind) {
  return kind == FamilyKind::kitaev_remmel || kind == FamilyKind::conjecture_form || kind == FamilyKind::gen_min2 ||
         kind == FamilyKind::general_full;
}

namespace detail {

// Small factory bound to one profile.
class Ring {
 public:
  explicit Ring(TruncationProfile profile) : p_(std::move(profile)) {}

  const TruncationProfile& profile() const { return p_; }
  MultiSeries zero() const { return MultiSeries(p_); }
  MultiSeries one() const { return num(1); }
  MultiSeries num(const mpz_class& c) const { return MultiSeries::constant(c, p_); }
  MultiSeries var(Var v) const { return MultiSeries::variable(v, p_); }
  MultiSeries mono(const Monomial& m, const mpz_class& c = 1) const { return MultiSeries::monomial(m, c, p_); }
  /// (1 + c*m)^e
  MultiSeries binom(const mpz_class& c, const Monomial& m, long e) const { return binomial_power(c, m, e, p_); }
  /// (1 + c*var)^e
  MultiSeries binom(const mpz_class& c, Var v, long e) const { return binom(c, Monomial::of(v), e); }

 private:
  TruncationProfile p_;
};

inline unsigned required_bound(const TruncationProfile& p, Var var, const char* who) {
  auto b = p.bound(var);
  if (!b) throw error(std::string(who) + ": variable " + symbol(var) + " must be capped");
  return *b;
}

// Guard on the summation index of a product-sum.
inline void check_guard(unsigned n, unsigned guard, const char* who) {
  if (n > guard) throw error(std::string(who) + ": sum did not vanish within the window (stop rule violated)");
}

// Largest total degree reachable in the window over the constrained variables.
inline unsigned window_span(const TruncationProfile& p) {
  unsigned s = 0;
  for (const auto& c : p.constraints()) s += c.cap;
  return s;
}

inline mpz_class pow2(unsigned e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Primitive interval orders: PP(t, v, w, x, y)

/// Images of (t, v, w, x, y) for evaluating PP or GP at other arguments.
struct FiveImages {
  MultiSeries t, v, w, x, y;

  static FiveImages identity(const TruncationProfile& p) {
    return {MultiSeries::variable(Var::t, p), MultiSeries::variable(Var::v, p), MultiSeries::variable(Var::w, p),
            MultiSeries::variable(Var::x, p), MultiSeries::variable(Var::y, p)};
  }
};

/// PP(t, v, w, x, y) at the given images: the closed form summed until
/// t * (running product) vanishes in the window.  `guard` bounds the index.
inline MultiSeries pp_closed_at(const FiveImages& a, unsigned guard) {
  const char* who = "pp_closed";
  const TruncationProfile& profile = a.t.profile();
  const MultiSeries one = MultiSeries::constant(1, profile);
  MultiSeries sum(profile);
  MultiSeries running = one;  // t^n prod_{i<n} V_i/(1+tV_i)
  for (unsigned n = 0;; ++n) {
    MultiSeries t_running = a.t * running;
    if (t_running.is_zero()) break;
    detail::check_guard(n, guard, who);
    MultiSeries vn = v_poly(n, a.v, a.w);
    MultiSeries tvn = a.t * vn;
    MultiSeries damp = inverse(one + tvn);
    sum += t_running * damp * v_poly(n, a.x, a.y);
    running = running * tvn * damp;
  }
  return sum;
}

/// Closed form: sum_n t^{n+1} V_n(x,y)/(1+tV_n(v,w)) prod_{i<n} V_i(v,w)/(1+tV_i(v,w)).
/// The n-th summand is a multiple of t^{n+1}: the sum stops at n = cap(t) - 1.
inline MultiSeries pp_closed(const TruncationProfile& profile) {
  unsigned tcap = detail::required_bound(profile, Var::t, "pp_closed");
  return pp_closed_at(FiveImages::identity(profile), tcap);
}

/// PP_1 .. PP_{k_max} from PP_1 = x, PP_{k+1} = v sigma[PP_k] - v PP_k.
inline std::vector<MultiSeries> pp_recurrence(unsigned k_max, const TruncationProfile& profile) {
  detail::Ring R(profile);
  const MultiSeries v = R.var(Var::v);
  std::vector<MultiSeries> out;
  if (k_max == 0) return out;
  out.push_back(R.var(Var::x));
  while (out.size() < k_max) {
    const MultiSeries& prev = out.back();
    out.push_back(v * subst_sigma(prev) - v * prev);
  }
  return out;
}

/// The series PP_k as coefficients of t, by brute reading of the closed form.
inline MultiSeries pp_coefficient(const MultiSeries& pp, unsigned k) { return coefficient_of(pp, Var::t, k); }

// ---------------------------------------------------------------------------
// General interval orders: GP(t, v, w, x, y)

/// GP(t, v, w, x, y) at the given images, from the closed form with
/// A_n = V_n(-v,-w), B_n = V_n(-x,-y):
///   sum_n t^{n+1} (1+A_n)/(1+B_n) * B_n/((t-1)A_n - 1) * prod_{i<n} A_i/((t-1)A_i - 1).
inline MultiSeries gp_closed_at(const FiveImages& a, unsigned guard) {
  const char* who = "gp_closed";
  const TruncationProfile& profile = a.t.profile();
  const MultiSeries one = MultiSeries::constant(1, profile);
  const MultiSeries mv = -a.v, mw = -a.w, mx = -a.x, my = -a.y;
  const MultiSeries t_minus_1 = a.t - one;
  MultiSeries sum(profile);
  MultiSeries running = one;  // t^n prod_{i<n} A_i/((t-1)A_i - 1)
  for (unsigned n = 0;; ++n) {
    MultiSeries t_running = a.t * running;
    if (t_running.is_zero()) break;
    detail::check_guard(n, guard, who);
    MultiSeries an = v_poly(n, mv, mw);
    MultiSeries bn = v_poly(n, mx, my);
    MultiSeries den = inverse(t_minus_1 * an - one);
    sum += t_running * (one + an) * inverse(one + bn) * bn * den;
    running = running * a.t * an * den;
  }
  return sum;
}

/// GP in its own variables; stops at n = cap(t) - 1.
inline MultiSeries gp_closed(const TruncationProfile& profile) {
  unsigned tcap = detail::required_bound(profile, Var::t, "gp_closed");
  return gp_closed_at(FiveImages::identity(profile), tcap);
}

/// GP obtained from PP by alpha -> alpha/(1-alpha) on v, w, x, y.
inline MultiSeries gp_from_pp(const MultiSeries& pp) {
  MultiSeries g = pp;
  for (Var var : {Var::v, Var::w, Var::x, Var::y}) g = subst_geometric(g, var);
  return g;
}

// ---------------------------------------------------------------------------
// Univariate displays

/// Fishburn numbers: sum_{n>=0} prod_{i=1}^n (1 - (1-x)^i).  Includes g_0 = 1.
inline MultiSeries zagier_series(unsigned n_max) {
  const char* who = "zagier";
  detail::Ring R(TruncationProfile{}.with(Var::x, n_max));
  const MultiSeries one = R.one();
  MultiSeries sum = R.zero(), running = one;
  for (unsigned n = 0; !running.is_zero(); ++n) {
    detail::check_guard(n, n_max + 1, who);
    sum += running;
    running = running * (one - R.binom(-1, Var::x, n + 1));
  }
  return sum;
}

/// Primitive interval orders by size: sum_{n>=0} prod_{i=0}^n (1 - (1+x)^{-(i+1)}).
inline MultiSeries primitive_by_size_series(unsigned n_max) {
  const char* who = "primitive_by_size";
  detail::Ring R(TruncationProfile{}.with(Var::x, n_max));
  const MultiSeries one = R.one();
  MultiSeries sum = R.zero();
  MultiSeries running = one - R.binom(1, Var::x, -1);
  for (unsigned n = 0; !running.is_zero(); ++n) {
    detail::check_guard(n, n_max + 1, who);
    sum += running;
    running = running * (one - R.binom(1, Var::x, -long(n + 2)));
  }
  return sum;
}

/// Primitive k x k Fishburn matrices: sum_n t^{n+1} prod_{i=0}^n c_i/(1+t c_i), c_i = 2^{i+1}-1.
inline MultiSeries primitive_by_magnitude_series(unsigned n_max) {
  const char* who = "primitive_by_magnitude";
  detail::Ring R(TruncationProfile{}.with(Var::t, n_max));
  const MultiSeries one = R.one(), t = R.var(Var::t);
  MultiSeries sum = R.zero();
  MultiSeries running = one;  // t^n prod_{i<n} c_i/(1+t c_i)
  for (unsigned n = 0;; ++n) {
    mpz_class c = detail::pow2(n + 1) - 1;
    MultiSeries step = t * R.num(c) * inverse(one + t * R.num(c));
    MultiSeries term = running * step;
    if (term.is_zero()) break;
    detail::check_guard(n, n_max, who);
    sum += term;
    running = term;
  }
  return sum;
}

/// Primitive self-dual interval orders by size, with s_0 = 1:
/// sum_{n>=0} (1+x)^{n+1} prod_{i<n} ((1+x^2)^{i+1} - 1).
inline MultiSeries selfdual_primitive_by_size_series(unsigned n_max) {
  const char* who = "selfdual_primitive_by_size";
  detail::Ring R(TruncationProfile{}.with(Var::x, n_max));
  const MultiSeries one = R.one();
  const Monomial x2 = Monomial::of(Var::x, 2);
  MultiSeries sum = R.zero(), running = one;
  for (unsigned n = 0; !running.is_zero(); ++n) {
    detail::check_guard(n, n_max / 2 + 1, who);
    sum += running * R.binom(1, Var::x, long(n + 1));
    running = running * (R.binom(1, x2, long(n + 1)) - one);
  }
  return sum;
}

/// Primitive self-dual m x m Fishburn matrices:
///   -t + sum_n 2^{C(n+2,2)} t^{2n+1} (1+c_n t)/(1+c_n t^2) prod_{i<n} c_i/(1+c_i t^2),
/// c_i = 2^{i+1}-1.  The power of two is 2 * 2^n * 2^n * 2^{C(n,2)} = 2^{C(n+2,2)}.
inline MultiSeries selfdual_primitive_by_magnitude_series(unsigned n_max) {
  const char* who = "selfdual_primitive_by_magnitude";
  detail::Ring R(TruncationProfile{}.with(Var::t, n_max));
  const MultiSeries one = R.one(), t = R.var(Var::t);
  const MultiSeries t2 = t * t;
  MultiSeries sum = -t;
  MultiSeries running = t;  // t^{2n+1} prod_{i<n} c_i/(1+c_i t^2)
  for (unsigned n = 0; !running.is_zero(); ++n) {
    detail::check_guard(n, n_max / 2 + 1, who);
    mpz_class c = detail::pow2(n + 1) - 1;
    MultiSeries damp = inverse(one + R.num(c) * t2);
    sum += R.num(detail::pow2((n + 2) * (n + 1) / 2)) * running * (one + R.num(c) * t) * damp;
    running = running * t2 * R.num(c) * damp;
  }
  return sum;
}

/// Self-dual interval orders by size (g_0 = 1), first display:
///   sum_n prod_{i<n} (1 - (1-x^2)^{i+1}) / ((1-x^2)^{C(n+1,2)} (1-x)^{n+1}).
inline MultiSeries selfdual_by_size_series(unsigned n_max) {
  const char* who = "selfdual_by_size";
  detail::Ring R(TruncationProfile{}.with(Var::x, n_max));
  const MultiSeries one = R.one();
  const Monomial x2 = Monomial::of(Var::x, 2);
  MultiSeries sum = R.zero(), running = one;  // prod_{i<n} (1 - (1-x^2)^{i+1})
  for (unsigned n = 0; !running.is_zero(); ++n) {
    detail::check_guard(n, n_max / 2 + 1, who);
    long tri = long(n) * (n + 1) / 2;
    sum += running * R.binom(-1, x2, -tri) * R.binom(-1, Var::x, -long(n + 1));
    running = running * (one - R.binom(-1, x2, long(n + 1)));
  }
  return sum;
}

/// Second display of the same series:
///   sum_n (1-x)^{-(n+1)} prod_{i<n} ((1-x^2)^{-(i+1)} - 1).
inline MultiSeries selfdual_by_size_series_alt(unsigned n_max) {
  const char* who = "selfdual_by_size_alt";
  detail::Ring R(TruncationProfile{}.with(Var::x, n_max));
  const MultiSeries one = R.one();
  const Monomial x2 = Monomial::of(Var::x, 2);
  MultiSeries sum = R.zero(), running = one;
  for (unsigned n = 0; !running.is_zero(); ++n) {
    detail::check_guard(n, n_max / 2 + 1, who);
    sum += running * R.binom(-1, Var::x, -long(n + 1));
    running = running * (R.binom(-1, x2, -long(n + 1)) - one);
  }
  return sum;
}

/// Primitive row-Fishburn matrices by size: sum_n prod_{i=0}^n ((1+x)^{i+1} - 1).
inline MultiSeries row_fishburn_primitive_series(unsigned n_max) {
  const char* who = "row_fishburn_primitive";
  detail::Ring R(TruncationProfile{}.with(Var::x, n_max));
  const MultiSeries one = R.one();
  MultiSeries sum = R.zero();
  MultiSeries running = R.binom(1, Var::x, 1) - one;
  for (unsigned n = 0; !running.is_zero(); ++n) {
    detail::check_guard(n, n_max + 1, who);
    sum += running;
    running = running * (R.binom(1, Var::x, long(n + 2)) - one);
  }
  return sum;
}

/// Row-Fishburn matrices by size: sum_n prod_{i=0}^n ((1-x)^{-(i+1)} - 1).
inline MultiSeries row_fishburn_general_series(unsigned n_max) {
  const char* who = "row_fishburn_general";
  detail::Ring R(TruncationProfile{}.with(Var::x, n_max));
  const MultiSeries one = R.one();
  MultiSeries sum = R.zero();
  MultiSeries running = R.binom(-1, Var::x, -1) - one;
  for (unsigned n = 0; !running.is_zero(); ++n) {
    detail::check_guard(n, n_max + 1, who);
    sum += running;
    running = running * (R.binom(-1, Var::x, -long(n + 2)) - one);
  }
  return sum;
}

/// Primitive self-dual interval orders by reduced size, S'(x,x,x,x):
///   -1 + sum_n (1+x)^{n+1} prod_{i<n} ((1+x)^{i+1} - 1).
inline MultiSeries selfdual_reduced_primitive_series(unsigned n_max) {
  const char* who = "selfdual_reduced_primitive";
  detail::Ring R(TruncationProfile{}.with(Var::x, n_max));
  const MultiSeries one = R.one();
  MultiSeries sum = -one, running = one;
  for (unsigned n = 0; !running.is_zero(); ++n) {
    detail::check_guard(n, n_max + 1, who);
    sum += running * R.binom(1, Var::x, long(n + 1));
    running = running * (R.binom(1, Var::x, long(n + 1)) - one);
  }
  return sum;
}

/// Self-dual interval orders by reduced size (every variable alpha -> alpha/(1-alpha)):
///   -1 + sum_n (1-x)^{-(n+1)} prod_{i<n} ((1-x)^{-(i+1)} - 1).
inline MultiSeries selfdual_reduced_general_series(unsigned n_max) {
  const char* who = "selfdual_reduced_general";
  detail::Ring R(TruncationProfile{}.with(Var::x, n_max));
  const MultiSeries one = R.one();
  MultiSeries sum = -one, running = one;
  for (unsigned n = 0; !running.is_zero(); ++n) {
    detail::check_guard(n, n_max + 1, who);
    sum += running * R.binom(-1, Var::x, -long(n + 1));
    running = running * (R.binom(-1, Var::x, -long(n + 1)) - one);
  }
  return sum;
}

/// sum_{n>=0} prod_{i=1}^n (1 - (1-x)^{2i-1}), the defining series of OEIS A158691.
inline MultiSeries odd_power_product_series(unsigned n_max) {
  const char* who = "odd_power_product";
  detail::Ring R(TruncationProfile{}.with(Var::x, n_max));
  const MultiSeries one = R.one();
  MultiSeries sum = R.zero(), running = one;
  for (unsigned n = 0; !running.is_zero(); ++n) {
    detail::check_guard(n, n_max + 1, who);
    sum += running;
    running = running * (one - R.binom(-1, Var::x, long(2 * n + 1)));
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Bivariate displays in (r, s): r counts elements, s minimal or maximal ones.

/// 1 + sum_n rs/(1-rs)^{n+1} prod_{i=1}^n (1 - (1-r)^i).
inline MultiSeries kitaev_remmel_series(const TruncationProfile& profile) {
  const char* who = "kitaev_remmel";
  detail::Ring R(profile);
  const MultiSeries one = R.one();
  const Monomial rs = Monomial::of(Var::r) * Monomial::of(Var::s);
  unsigned guard = detail::window_span(profile) + 1;
  MultiSeries sum = one, running = R.mono(rs);  // rs prod_{i<=n} (...)
  for (unsigned n = 0; !running.is_zero(); ++n) {
    detail::check_guard(n, guard, who);
    sum += running * R.binom(-1, rs, -long(n + 1));
    running = running * (one - R.binom(-1, Var::r, long(n + 1)));
  }
  return sum;
}

/// sum_n prod_{i=1}^n (1 - (1-r)^{i-1}(1-rs)).
inline MultiSeries conjecture_form_series(const TruncationProfile& profile) {
  const char* who = "conjecture_form";
  detail::Ring R(profile);
  const MultiSeries one = R.one();
  const Monomial rs = Monomial::of(Var::r) * Monomial::of(Var::s);
  const MultiSeries one_minus_rs = one - R.mono(rs);
  unsigned guard = detail::window_span(profile) + 1;
  MultiSeries sum = R.zero(), running = one;
  for (unsigned n = 0; !running.is_zero(); ++n) {
    detail::check_guard(n, guard, who);
    sum += running;
    running = running * (one - R.binom(-1, Var::r, long(n)) * one_minus_rs);
  }
  return sum;
}

/// sum_n rs/(1-rs)^{n+1} prod_{i=0}^{n-1} (1 - (1-r)^{i+1}).
inline MultiSeries gen_min2_series(const TruncationProfile& profile) {
  const char* who = "gen_min2";
  detail::Ring R(profile);
  const MultiSeries one = R.one();
  const Monomial rs = Monomial::of(Var::r) * Monomial::of(Var::s);
  unsigned guard = detail::window_span(profile) + 1;
  MultiSeries sum = R.zero(), running = R.mono(rs);
  for (unsigned n = 0; !running.is_zero(); ++n) {
    detail::check_guard(n, guard, who);
    sum += running * R.binom(-1, rs, -long(n + 1));
    running = running * (one - R.binom(-1, Var::r, long(n + 1)));
  }
  return sum;
}

/// Interval orders by size (r) and maximal elements (s):
/// sum_n prod_{i=0}^n (1 - (1-rs)(1-r)^i).
inline MultiSeries gen_min_series(const TruncationProfile& profile) {
  const char* who = "gen_min";
  detail::Ring R(profile);
  const MultiSeries one = R.one();
  const Monomial rs = Monomial::of(Var::r) * Monomial::of(Var::s);
  const MultiSeries one_minus_rs = one - R.mono(rs);
  unsigned guard = detail::window_span(profile) + 1;
  MultiSeries sum = R.zero();
  MultiSeries running = one - one_minus_rs;
  for (unsigned n = 0; !running.is_zero(); ++n) {
    detail::check_guard(n, guard, who);
    sum += running;
    running = running * (one - one_minus_rs * R.binom(-1, Var::r, long(n + 1)));
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Self-dual interval orders

/// SP(t, v, w, z) over primitive self-dual matrices with corner cell 1:
///   sum_n t^{2n+1} (1+tV_n)/(1+t^2 V_n) (1+z)^n (1+v)^n (1+w)^{C(n,2)} prod_{i<n} V_i/(1+t^2 V_i)
/// with V_i = V_i(v, w).  Stops at n = ceil(cap(t)/2).
inline MultiSeries sp_closed(const TruncationProfile& profile) {
  const char* who = "sp_closed";
  unsigned tcap = detail::required_bound(profile, Var::t, who);
  detail::Ring R(profile);
  const MultiSeries one = R.one(), t = R.var(Var::t), v = R.var(Var::v), w = R.var(Var::w), z = R.var(Var::z);
  const MultiSeries t2 = t * t;
  const MultiSeries lift = (one + z) * (one + v);
  const Monomial tm = Monomial::of(Var::t);

  MultiSeries sum = R.zero();
  // t^{2n} (1+z)^n (1+v)^n (1+w)^{C(n,2)} prod_{i<n} V_i/(1+t^2 V_i)
  MultiSeries running = one;
  MultiSeries w_pow = one;  // (1+w)^n
  for (unsigned n = 0;; ++n) {
    MultiSeries t_running = shift(running, tm);
    if (t_running.is_zero()) break;
    detail::check_guard(n, (tcap + 1) / 2, who);
    MultiSeries vn = (one + v) * w_pow - one;
    MultiSeries damp = inverse(one + t2 * vn);
    sum += t_running * (one + t * vn) * damp;
    running = running * t2 * lift * w_pow * vn * damp;
    w_pow = w_pow * (one + w);
  }
  return sum;
}

/// SP_1 .. SP_{k_max} from SP_1 = 1, SP_2 = v, SP_{k+2} = v(1+v)(1+z) sigma[SP_k] - v SP_k.
inline std::vector<MultiSeries> sp_recurrence(unsigned k_max, const TruncationProfile& profile) {
  detail::Ring R(profile);
  const MultiSeries one = R.one(), v = R.var(Var::v), z = R.var(Var::z);
  const MultiSeries lift = v * (one + v) * (one + z);
  std::vector<MultiSeries> out;
  if (k_max >= 1) out.push_back(one);
  if (k_max >= 2) out.push_back(v);
  while (out.size() < k_max) {
    const MultiSeries& prev = out[out.size() - 2];
    out.push_back(lift * subst_sigma(prev) - v * prev);
  }
  return out;
}

/// SP evaluated at t = 1: sum_n (1+z)^n (1+v)^n (1+w)^{C(n,2)} prod_{i<n} V_i/(1+V_i).
/// The n-th summand has valuation n in (v, w).
inline MultiSeries sp_at_one(const TruncationProfile& profile) {
  const char* who = "sp_at_one";
  detail::Ring R(profile);
  const MultiSeries one = R.one(), v = R.var(Var::v), w = R.var(Var::w), z = R.var(Var::z);
  const MultiSeries lift = (one + z) * (one + v);
  unsigned guard = detail::window_span(profile) + 1;
  MultiSeries sum = R.zero(), running = one, w_pow = one;
  for (unsigned n = 0; !running.is_zero(); ++n) {
    detail::check_guard(n, guard, who);
    sum += running;
    MultiSeries vn = (one + v) * w_pow - one;
    running = running * lift * w_pow * vn * inverse(one + vn);
    w_pow = w_pow * (one + w);
  }
  return sum;
}

/// SPP(t, v, w, x, z) = (1+x) SP(t, v^2, w^2, z) - t.
inline MultiSeries spp_closed(const TruncationProfile& profile) {
  detail::Ring R(profile);
  MultiSeries sp = double_exponents(sp_closed(profile), {Var::v, Var::w});
  return (R.one() + R.var(Var::x)) * sp - R.var(Var::t);
}

/// SGP = SP(t, v^2/(1-v^2), w^2/(1-w^2), z/(1-z))/(1-x) - t, by substitution.
inline MultiSeries sgp_closed(const TruncationProfile& profile) {
  detail::Ring R(profile);
  MultiSeries g = sp_closed(profile);
  for (Var var : {Var::v, Var::w, Var::z}) g = subst_geometric(g, var);
  g = double_exponents(g, {Var::v, Var::w});
  return g * R.binom(-1, Var::x, -1) - R.var(Var::t);
}

/// The explicit SGP display with A_i = V_i(-v^2, -w^2):
///   -t + sum_n t^{2n+1} (1+(1-t)A_n) prod_{i<n} -A_i/(1+(1-t^2)A_i)
///        / ((1-x)(1-z)^n (1-v^2)^n (1-w^2)^{C(n,2)} (1+(1-t^2)A_n)).
inline MultiSeries sgp_explicit(const TruncationProfile& profile) {
  const char* who = "sgp_explicit";
  unsigned tcap = detail::required_bound(profile, Var::t, who);
  detail::Ring R(profile);
  const MultiSeries one = R.one(), t = R.var(Var::t);
  const MultiSeries one_minus_t = one - t, one_minus_t2 = one - t * t;
  const Monomial v2 = Monomial::of(Var::v, 2), w2 = Monomial::of(Var::w, 2);
  const MultiSeries mv2 = -R.mono(v2), mw2 = -R.mono(w2);
  const MultiSeries inv_1mx = R.binom(-1, Var::x, -1);
  const MultiSeries inv_1mz = R.binom(-1, Var::z, -1), inv_1mv2 = R.binom(-1, v2, -1);
  const Monomial tm = Monomial::of(Var::t);

  MultiSeries sum = -t;
  // t^{2n} prod_{i<n} -A_i/(1+(1-t^2)A_i) / ((1-z)^n (1-v^2)^n (1-w^2)^{C(n,2)})
  MultiSeries running = one;
  for (unsigned n = 0;; ++n) {
    MultiSeries t_running = shift(running, tm);
    if (t_running.is_zero()) break;
    detail::check_guard(n, (tcap + 1) / 2, who);
    MultiSeries a = v_poly(n, mv2, mw2);
    MultiSeries damp = inverse(one + one_minus_t2 * a);
    sum += t_running * (one + one_minus_t * a) * damp * inv_1mx;
    running = running * t * t * (-a) * damp * inv_1mz * inv_1mv2 * R.binom(-1, w2, -long(n));
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Row-Fishburn matrices and self-dual matrices by reduced size

/// R(v,w,x,y) = sum_n V_n(x,y) prod_{i<n} V_i(v,w): the n-th summand counts the
/// primitive row-Fishburn matrices with n+1 rows.
inline MultiSeries row_fishburn_series(const TruncationProfile& profile) {
  const char* who = "row_fishburn_series";
  detail::Ring R(profile);
  const MultiSeries v = R.var(Var::v), w = R.var(Var::w), x = R.var(Var::x), y = R.var(Var::y);
  unsigned guard = detail::window_span(profile) + 1;
  MultiSeries sum = R.zero(), running = R.one();
  for (unsigned n = 0; !running.is_zero(); ++n) {
    detail::check_guard(n, guard, who);
    sum += running * v_poly(n, x, y);
    running = running * v_poly(n, v, w);
  }
  return sum;
}

enum class DiagonalKind { all, diag_zero, diag_nonzero };

/// S'(v,w,x,z) and its parts over self-dual primitive matrices whose
/// anti-diagonal is zero (S'_0) or not (S'_1):
///   S'   = -1 + sum_n (1+x)(1+z)^n prod_{i<n} V_i(v,w)
///   S'_0 = -1 + sum_n prod_{i<n} V_i(v,w)
///   S'_1 = sum_n ((1+x)(1+z)^n - 1) prod_{i<n} V_i(v,w)
inline MultiSeries selfdual_rs_series(DiagonalKind kind, const TruncationProfile& profile) {
  const char* who = "selfdual_rs_series";
  detail::Ring R(profile);
  const MultiSeries one = R.one(), v = R.var(Var::v), w = R.var(Var::w), x = R.var(Var::x), z = R.var(Var::z);
  unsigned guard = detail::window_span(profile) + 1;
  MultiSeries sum = kind == DiagonalKind::diag_nonzero ? R.zero() : -one;
  MultiSeries running = one;
  for (unsigned n = 0; !running.is_zero(); ++n) {
    detail::check_guard(n, guard, who);
    switch (kind) {
      case DiagonalKind::all: sum += running * (one + x) * pow(one + z, n); break;
      case DiagonalKind::diag_zero: sum += running; break;
      case DiagonalKind::diag_nonzero: sum += running * v_poly(n, x, z); break;
    }
    running = running * v_poly(n, v, w);
  }
  return sum;
}

/// Non-primitive version of a primitive series: alpha -> alpha/(1-alpha) for
/// every listed variable.
inline MultiSeries with_multiplicities(const MultiSeries& f, VarSet vars) {
  MultiSeries g = f;
  for (Var var : vars.members()) g = subst_geometric(g, var);
  return g;
}

// ---------------------------------------------------------------------------
// Named sequences

namespace detail {

inline SequenceTable table_from(const MultiSeries& f, Var var, unsigned first, unsigned n_max, std::string family,
                                std::string formula) {
  auto coeffs = coefficients(f, var, n_max);
  SequenceTable out;
  out.family = std::move(family);
  out.offset = first;
  out.formula = std::move(formula);
  for (unsigned n = first; n <= n_max; ++n) out.values.push_back(coeffs[n]);
  return out;
}

}  // namespace detail

/// Exact sequence of a univariate family, indices 1..n_max (0..n_max for the
/// families whose convention includes the empty object).
inline SequenceTable classic_sequence(FamilyKind kind, unsigned n_max) {
  if (n_max < 1) throw error("n_max must be at least 1");
  std::string name = to_string(kind);
  switch (kind) {
    case FamilyKind::zagier:
      return detail::table_from(zagier_series(n_max), Var::x, 1, n_max, name,
                                "sum_n prod_{i=1}^n (1-(1-x)^i)");
    case FamilyKind::primitive_by_size:
      return detail::table_from(primitive_by_size_series(n_max), Var::x, 1, n_max, name,
                                "PP(1,x,x,x,x) = sum_n prod_{i=0}^n (1-(1+x)^{-(i+1)})");
    case FamilyKind::primitive_by_magnitude:
      return detail::table_from(primitive_by_magnitude_series(n_max), Var::t, 1, n_max, name,
                                "PP(t,1,1,1,1) = sum_n t^{n+1} prod_{i=0}^n (2^{i+1}-1)/(1+t(2^{i+1}-1))");
    case FamilyKind::selfdual_primitive_by_size:
      return detail::table_from(selfdual_primitive_by_size_series(n_max), Var::x, 0, n_max, name,
                                "1+SPP(1,x,x,x,x) = sum_n (1+x)^{n+1} prod_{i<n} ((1+x^2)^{i+1}-1); s_0=1 by convention");
    case FamilyKind::selfdual_primitive_by_magnitude:
      return detail::table_from(selfdual_primitive_by_magnitude_series(n_max), Var::t, 1, n_max, name,
                                "SPP(t,1,1,1,1) = (2 SP(t,1,1,1) - t), power of two 2^{C(n+2,2)}");
    case FamilyKind::selfdual_by_size:
      return detail::table_from(selfdual_by_size_series(n_max), Var::x, 0, n_max, name,
                                "1+SGP(1,x,x,x,x); g_0=1 by convention");
    case FamilyKind::row_fishburn_primitive:
      return detail::table_from(row_fishburn_primitive_series(n_max), Var::x, 1, n_max, name,
                                "sum_n prod_{i=0}^n ((1+x)^{i+1}-1)");
    case FamilyKind::row_fishburn_general:
      return detail::table_from(row_fishburn_general_series(n_max), Var::x, 1, n_max, name,
                                "sum_n prod_{i=0}^n ((1-x)^{-(i+1)}-1)");
    case FamilyKind::selfdual_reduced_primitive:
      return detail::table_from(selfdual_reduced_primitive_series(n_max), Var::x, 1, n_max, name,
                                "S'(x,x,x,x) = -1 + sum_n (1+x)^{n+1} prod_{i<n} ((1+x)^{i+1}-1)");
    case FamilyKind::selfdual_reduced_general:
      return detail::table_from(selfdual_reduced_general_series(n_max), Var::x, 1, n_max, name,
                                "-1 + sum_n (1-x)^{-(n+1)} prod_{i<n} ((1-x)^{-(i+1)}-1)");
    default:
      throw error("family " + name + " is bivariate; use classic_bivariate");
  }
}

/// Bivariate families as series in (r, s).
inline MultiSeries classic_bivariate(FamilyKind kind, const TruncationProfile& profile) {
  switch (kind) {
    case FamilyKind::kitaev_remmel: return kitaev_remmel_series(profile);
    case FamilyKind::conjecture_form: return conjecture_form_series(profile);
    case FamilyKind::gen_min2: return gen_min2_series(profile);
    case FamilyKind::general_full: return gen_min_series(profile);
    default: throw error("family " + to_string(kind) + " is univariate; use classic_sequence");
  }
}

/// Univariate families yield a SequenceTable; bivariate ones a series in
/// (r, s) truncated to joint degree n_max.
inline std::variant<SequenceTable, MultiSeries> classic_series(FamilyKind kind, unsigned n_max) {
  if (n_max < 1) throw error("n_max must be at least 1");
  if (is_bivariate(kind)) return classic_bivariate(kind, TruncationProfile{}.with({Var::r, Var::s}, n_max));
  return classic_sequence(kind, n_max);
}

// ---------------------------------------------------------------------------
// Moments of statistics

struct MomentRow {
  unsigned n = 0;
  mpz_class count;   // number of objects of grade n
  mpz_class total;   // sum of the statistic over them
  mpq_class mean;    // total / count
};

namespace detail {

// Rows from a series in (grade, marker).
inline std::vector<MomentRow> moments_from(const MultiSeries& f, Var grade, Var marker, unsigned first,
                                           unsigned n_max) {
  std::vector<MomentRow> rows(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) rows[n].n = n;
  for (const auto& [m, c] : f.terms()) {
    unsigned n = m[grade];
    if (n > n_max) continue;
    rows[n].count += c;
    rows[n].total += c * m[marker];
  }
  std::vector<MomentRow> out;
  for (unsigned n = first; n <= n_max; ++n) {
    if (rows[n].count == 0) throw error("moment_table: empty grade");
    rows[n].mean = mpq_class(rows[n].total, rows[n].count);
    rows[n].mean.canonicalize();
    out.push_back(rows[n]);
  }
  return out;
}

}  // namespace detail

/// Average of a statistic per grade, exact.
///   family "interval-orders" (graded by size): statistic minimal | maximal | magnitude
///   family "primitive-fishburn" (graded by dimension): statistic entry-sum | minimal
inline std::vector<MomentRow> moment_table(const std::string& family, const std::string& statistic, unsigned n_max) {
  if (n_max < 1) throw error("n_max must be at least 1");
  TruncationProfile rs = TruncationProfile{}.with(Var::r, n_max).with(Var::s, n_max);
  if (family == "interval-orders") {
    if (statistic == "minimal") return detail::moments_from(conjecture_form_series(rs), Var::r, Var::s, 1, n_max);
    if (statistic == "maximal") return detail::moments_from(gen_min_series(rs), Var::r, Var::s, 1, n_max);
    if (statistic == "magnitude") {
      MultiSeries r = MultiSeries::variable(Var::r, rs), s = MultiSeries::variable(Var::s, rs);
      MultiSeries g = gp_closed_at({s, r, r, r, r}, detail::window_span(rs) + 1);
      return detail::moments_from(g, Var::r, Var::s, 1, n_max);
    }
  } else if (family == "primitive-fishburn") {
    // PP_k is a polynomial, so a window capping only t is exact.
    TruncationProfile ts = TruncationProfile{}.with(Var::t, n_max);
    MultiSeries t = MultiSeries::variable(Var::t, ts);
    MultiSeries one = MultiSeries::constant(1, ts), s = MultiSeries::variable(Var::s, ts);
    MultiSeries pp(ts);
    if (statistic == "entry-sum") {
      pp = pp_closed_at({t, s, s, s, s}, n_max);
    } else if (statistic == "minimal") {
      pp = pp_closed_at({t, one, one, s, s}, n_max);
    } else {
      throw error("statistic '" + statistic + "' is not markable in family " + family);
    }
    return detail::moments_from(pp, Var::t, Var::s, 1, n_max);
  } else {
    throw error("unknown moment family '" + family + "'");
  }
  throw error("statistic '" + statistic + "' is not markable in family " + family);
}

}  // namespace fishburn
