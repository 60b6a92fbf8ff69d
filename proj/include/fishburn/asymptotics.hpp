#pragma once

// Long exact sequences and numerical limit estimates for interval-order
// counts.  Sequences and ratios are exact; floating point (MPFR, 100 decimal
// digits) enters only in the normalizations and in the extrapolation.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>
#include <gmpxx.h>

#include <json.hpp>

#include "genfun.hpp"

namespace fishburn {

using Float = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<100>>;

inline constexpr unsigned kLongSequenceMax = 500;
inline constexpr unsigned kDefaultAsymptoticN = 300;
inline constexpr unsigned kMaxRichardsonOrder = 3;

inline Float to_float(const mpz_class& z) { return Float(z.get_str()); }
inline Float to_float(const mpq_class& q) { return to_float(q.get_num()) / to_float(q.get_den()); }

inline std::string decimal(const Float& f, int digits = 20) {
  return f.str(digits, std::ios_base::fmtflags(0));
}

struct Constants {
  Float pi, e;
  Float exp_minus_pi2_over_6;   // e^{-pi^2/6}
  Float exp_minus_pi2_over_12;  // e^{-pi^2/12}
  Float alpha_a;                // 12 sqrt(3) pi^{-5/2} e^{pi^2/12}
  Float alpha_b;                // 12 sqrt(3) / pi^{-5/2} e^{pi^2/12}, as printed
  Float beta;                   // 12 sqrt(2) / pi^2 e^{pi^2/24}
  Float gamma;                  // 1.361951039 (only ten digits are known)
  Float delta;                  // 6 / pi^2
};

inline const Constants& constants() {
  static const Constants c = [] {
    using boost::multiprecision::exp;
    using boost::multiprecision::pow;
    using boost::multiprecision::sqrt;
    Constants k;
    k.pi = boost::math::constants::pi<Float>();
    k.e = exp(Float(1));
    Float pi2 = k.pi * k.pi;
    k.exp_minus_pi2_over_6 = exp(-pi2 / 6);
    k.exp_minus_pi2_over_12 = exp(-pi2 / 12);
    Float pi52 = pow(k.pi, Float(5) / 2);
    k.alpha_a = 12 * sqrt(Float(3)) / pi52 * exp(pi2 / 12);
    k.alpha_b = 12 * sqrt(Float(3)) * pi52 * exp(pi2 / 12);
    k.beta = 12 * sqrt(Float(2)) / pi2 * exp(pi2 / 24);
    k.gamma = Float("1.361951039");
    k.delta = 6 / pi2;
    return k;
  }();
  return c;
}

// ---------------------------------------------------------------------------

/// Exact sequence of a univariate family up to n_max (at most 500).
inline SequenceTable long_sequence(FamilyKind kind, unsigned n_max) {
  if (is_bivariate(kind)) throw error("family " + to_string(kind) + " needs two variables");
  if (n_max > kLongSequenceMax) throw error("n_max above " + std::to_string(kLongSequenceMax));
  return classic_sequence(kind, n_max);
}

/// p_n = sum_{m=1}^n g_m (-1)^{n-m} C(n-1, m-1), from g_1..g_N.
inline std::vector<mpz_class> binomial_transform(const SequenceTable& g) {
  std::vector<mpz_class> p;
  for (unsigned n = 1; n <= g.last_index(); ++n) {
    mpz_class sum = 0, binom;
    for (unsigned m = 1; m <= n; ++m) {
      mpz_bin_uiui(binom.get_mpz_t(), n - 1, m - 1);
      if ((n - m) % 2 == 0)
        sum += g.at(m) * binom;
      else
        sum -= g.at(m) * binom;
    }
    p.push_back(sum);
  }
  return p;
}

/// Polynomial extrapolation to h = 0 through (h_j, a_j), j = 0..k (Neville).
/// With h_j = 1/n_j this is the classical Richardson estimate of order k.
inline Float extrapolate_to_zero(std::vector<Float> h, std::vector<Float> a) {
  std::size_t k = a.size();
  for (std::size_t level = 1; level < k; ++level)
    for (std::size_t j = 0; j + level < k; ++j)
      a[j] = (h[j] * a[j + 1] - h[j + level] * a[j]) / (h[j] - h[j + level]);
  return a[0];
}

enum class Target { fact_gn, fact_ratio_primitive, conjecture_reduced, conjecture_symsize };

inline std::string to_string(Target t) {
  switch (t) {
    case Target::fact_gn: return "fact_gn";
    case Target::fact_ratio_primitive: return "fact_ratio_primitive";
    case Target::conjecture_reduced: return "conjecture_reduced";
    case Target::conjecture_symsize: return "conjecture_symsize";
  }
  return "";
}

inline Target parse_target(const std::string& s) {
  for (Target t : {Target::fact_gn, Target::fact_ratio_primitive, Target::conjecture_reduced, Target::conjecture_symsize})
    if (to_string(t) == s) return t;
  throw error("unknown target '" + s + "'");
}

struct DiagnosticRow {
  unsigned n = 0;
  mpz_class value;                // the sequence being normalized, or the numerator of the ratio
  std::optional<mpq_class> ratio; // exact ratio, for ratio diagnostics
  Float approx;                   // ratio or normalized value as a float
  std::array<std::optional<Float>, kMaxRichardsonOrder> extrapolated;  // orders 1..3
};

struct Diagnostics {
  Target target;
  std::string quantity;  // what `approx` holds
  Float limit;           // predicted limit
  std::vector<DiagnosticRow> rows;
  std::array<std::optional<Float>, kMaxRichardsonOrder> estimate;  // last available value per order
  std::optional<unsigned> monotone_from;  // first n after which approx is monotone to n_max

  Float best() const {
    for (std::size_t k = kMaxRichardsonOrder; k-- > 0;)
      if (estimate[k]) return *estimate[k];
    return rows.back().approx;
  }
  Float abs_error() const { return boost::multiprecision::abs(best() - limit); }
  Float rel_error() const { return abs_error() / boost::multiprecision::abs(limit); }
};

namespace detail {

// Variable of the extrapolation: 1/n, or 1/sqrt(n) when the corrections are
// O(n^{-1/2}).
inline Float step(Target target, unsigned n) {
  if (target == Target::conjecture_symsize) return 1 / boost::multiprecision::sqrt(Float(n));
  return Float(1) / n;
}

// Richardson estimate of order k at row n uses n, n/2, ..., n/2^k.  Consecutive
// points make the system nearly singular when h = n^{-1/2}.
inline constexpr unsigned kMinExtrapolationN = 4;

inline void finish(Diagnostics& d) {
  auto& rows = d.rows;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    unsigned n = rows[i].n;
    for (unsigned k = 1; k <= kMaxRichardsonOrder; ++k) {
      if ((n >> k) < kMinExtrapolationN) break;
      std::vector<Float> h, a;
      for (unsigned j = 0; j <= k; ++j) {
        unsigned m = n >> j;
        h.push_back(step(d.target, m));
        a.push_back(rows[m - rows.front().n].approx);
      }
      rows[i].extrapolated[k - 1] = extrapolate_to_zero(h, a);
    }
  }
  for (std::size_t i = rows.size(); i-- > 0;)
    for (unsigned k = 0; k < kMaxRichardsonOrder; ++k)
      if (!d.estimate[k] && rows[i].extrapolated[k]) d.estimate[k] = rows[i].extrapolated[k];

  // longest monotone tail
  if (rows.size() >= 2) {
    std::size_t start = rows.size() - 1;
    int dir = 0;
    while (start > 0) {
      int s = rows[start].approx > rows[start - 1].approx ? 1 : rows[start].approx < rows[start - 1].approx ? -1 : 0;
      if (dir == 0) dir = s;
      if (s != dir) break;
      --start;
    }
    d.monotone_from = rows[start].n;
  }
}

// Sequences that enter each target.
inline FamilyKind numerator_family(Target t) {
  switch (t) {
    case Target::fact_gn: return FamilyKind::zagier;
    case Target::fact_ratio_primitive: return FamilyKind::primitive_by_size;
    case Target::conjecture_reduced: return FamilyKind::selfdual_reduced_primitive;
    case Target::conjecture_symsize: return FamilyKind::selfdual_primitive_by_size;
  }
  throw error("unknown target");
}

inline FamilyKind denominator_family(Target t) {
  switch (t) {
    case Target::fact_gn:
    case Target::fact_ratio_primitive: return FamilyKind::zagier;
    case Target::conjecture_reduced: return FamilyKind::selfdual_reduced_general;
    case Target::conjecture_symsize: return FamilyKind::selfdual_by_size;
  }
  throw error("unknown target");
}

inline void check_range(unsigned n_max) {
  if (n_max < 5) throw error("n_max must be at least 5");
  if (n_max > kLongSequenceMax) throw error("n_max above " + std::to_string(kLongSequenceMax));
}

}  // namespace detail

/// Exact ratios p_n/g_n, s_n/t_n or q_n/r_n with Richardson estimates of the limit.
inline Diagnostics ratio_diagnostics(Target target, unsigned n_max) {
  detail::check_range(n_max);
  if (target == Target::fact_gn) throw error("fact_gn has no ratio statement; use normalized_growth");
  const Constants& c = constants();
  Diagnostics d{target, "", 0, {}, {}, {}};
  switch (target) {
    case Target::fact_ratio_primitive:
      d.quantity = "p_n/g_n";
      d.limit = c.exp_minus_pi2_over_6;
      break;
    case Target::conjecture_reduced:
      d.quantity = "s_n/t_n";
      d.limit = c.exp_minus_pi2_over_12;
      break;
    default:
      d.quantity = "q_n/r_n";
      d.limit = c.exp_minus_pi2_over_12 / 2;
      break;
  }
  SequenceTable num = long_sequence(detail::numerator_family(target), n_max);
  SequenceTable den = long_sequence(detail::denominator_family(target), n_max);
  for (unsigned n = 1; n <= n_max; ++n) {
    DiagnosticRow row;
    row.n = n;
    row.value = num.at(n);
    mpq_class q(num.at(n), den.at(n));
    q.canonicalize();
    row.ratio = q;
    row.approx = to_float(q);
    d.rows.push_back(std::move(row));
  }
  detail::finish(d);
  return d;
}

/// The sequence divided by its predicted leading form:
///   fact_gn               g_n / (n! (6/pi^2)^n sqrt(n))              -> alpha
///   fact_ratio_primitive  p_n / (n! (6/pi^2)^n sqrt(n))              -> alpha e^{-pi^2/6}
///   conjecture_reduced    t_n / (n! (12/pi^2)^n)                     -> beta
///   conjecture_symsize    r_n / (sqrt(n) (delta n/e)^{n/2} 2^{sqrt(delta n)}) -> gamma
inline Diagnostics normalized_growth(Target target, unsigned n_max) {
  using boost::multiprecision::pow;
  using boost::multiprecision::sqrt;
  detail::check_range(n_max);
  const Constants& c = constants();
  Diagnostics d{target, "", 0, {}, {}, {}};
  FamilyKind family = target == Target::fact_ratio_primitive ? FamilyKind::primitive_by_size
                                                             : detail::denominator_family(target);
  SequenceTable seq = long_sequence(family, n_max);
  Float pi2 = c.pi * c.pi;
  switch (target) {
    case Target::fact_gn:
      d.quantity = "g_n/(n!(6/pi^2)^n sqrt(n))";
      d.limit = c.alpha_a;
      break;
    case Target::fact_ratio_primitive:
      d.quantity = "p_n/(n!(6/pi^2)^n sqrt(n))";
      d.limit = c.alpha_a * c.exp_minus_pi2_over_6;
      break;
    case Target::conjecture_reduced:
      d.quantity = "t_n/(n!(12/pi^2)^n)";
      d.limit = c.beta;
      break;
    case Target::conjecture_symsize:
      d.quantity = "r_n/(sqrt(n)(delta n/e)^(n/2) 2^sqrt(delta n))";
      d.limit = c.gamma;
      break;
  }
  mpz_class fact = 1;
  for (unsigned n = 1; n <= n_max; ++n) {
    fact *= n;
    Float fn(n);
    Float form;
    switch (target) {
      case Target::fact_gn:
      case Target::fact_ratio_primitive: form = to_float(fact) * pow(6 / pi2, fn) * sqrt(fn); break;
      case Target::conjecture_reduced: form = to_float(fact) * pow(12 / pi2, fn); break;
      case Target::conjecture_symsize:
        form = sqrt(fn) * pow(c.delta * fn / c.e, fn / 2) * pow(Float(2), sqrt(c.delta * fn));
        break;
    }
    DiagnosticRow row;
    row.n = n;
    row.value = seq.at(n);
    row.approx = to_float(seq.at(n)) / form;
    d.rows.push_back(std::move(row));
  }
  detail::finish(d);
  return d;
}

/// Which printed form of alpha the data supports: the reading closer to the
/// empirical constant.
struct AlphaReading {
  Float empirical, reading_a, reading_b;
  Float distance_a, distance_b;
  std::string supported;  // "A" or "B"
};

inline AlphaReading alpha_reading(const Diagnostics& gn) {
  const Constants& c = constants();
  AlphaReading out{gn.best(), c.alpha_a, c.alpha_b, 0, 0, ""};
  out.distance_a = boost::multiprecision::abs(out.empirical - c.alpha_a) / c.alpha_a;
  out.distance_b = boost::multiprecision::abs(out.empirical - c.alpha_b) / c.alpha_b;
  out.supported = out.distance_a <= out.distance_b ? "A" : "B";
  return out;
}

// ---------------------------------------------------------------------------
// Output

inline std::string diagnostics_csv(const Diagnostics& d) {
  std::string out = "n,value,ratio,approx,richardson1,richardson2,richardson3\n";
  for (const auto& r : d.rows) {
    out += std::to_string(r.n) + "," + r.value.get_str() + ",";
    if (r.ratio) out += r.ratio->get_str();
    out += "," + decimal(r.approx);
    for (const auto& e : r.extrapolated) out += "," + (e ? decimal(*e) : std::string());
    out += "\n";
  }
  return out;
}

inline nlohmann::json diagnostics_summary(const Diagnostics& d) {
  nlohmann::json est = nlohmann::json::object();
  for (unsigned k = 0; k < kMaxRichardsonOrder; ++k)
    if (d.estimate[k]) est["order" + std::to_string(k + 1)] = decimal(*d.estimate[k], 30);
  nlohmann::json j{{"target", to_string(d.target)},
                   {"quantity", d.quantity},
                   {"n_max", d.rows.empty() ? 0 : d.rows.back().n},
                   {"limit", decimal(d.limit, 30)},
                   {"last_value", decimal(d.rows.back().approx, 30)},
                   {"estimates", est},
                   {"best_estimate", decimal(d.best(), 30)},
                   {"abs_error", decimal(d.abs_error(), 6)},
                   {"rel_error", decimal(d.rel_error(), 6)}};
  if (d.monotone_from) j["monotone_from"] = *d.monotone_from;
  return j;
}

inline nlohmann::json constants_json() {
  const Constants& c = constants();
  return {{"pi", decimal(c.pi, 50)},
          {"exp(-pi^2/6)", decimal(c.exp_minus_pi2_over_6, 50)},
          {"exp(-pi^2/12)", decimal(c.exp_minus_pi2_over_12, 50)},
          {"alpha_reading_a", decimal(c.alpha_a, 50)},
          {"alpha_reading_b", decimal(c.alpha_b, 50)},
          {"beta", decimal(c.beta, 50)},
          {"gamma", decimal(c.gamma, 10)},
          {"delta", decimal(c.delta, 50)}};
}

}  // namespace fishburn
