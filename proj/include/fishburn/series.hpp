#pragma once

// Exact sparse multivariate truncated power series over GMP integers.
//
// A series lives inside a truncation window described by a TruncationProfile:
// a list of constraints "sum of the exponents of the variables in S <= cap".
// Single-variable caps are constraints with |S| = 1.  Every window is an order
// ideal (closed under division of monomials), so truncated products, sums and
// degree-increasing substitutions are exact inside the window.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include <json.hpp>

namespace fishburn {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Var : std::uint8_t { t = 0, v, w, x, y, z, r, s };

inline constexpr std::size_t kNumVars = 8;
inline constexpr std::array<Var, kNumVars> kAllVars{Var::t, Var::v, Var::w, Var::x,
                                                    Var::y, Var::z, Var::r, Var::s};

constexpr std::size_t index_of(Var var) { return static_cast<std::size_t>(var); }
constexpr char symbol(Var var) { return "tvwxyzrs"[index_of(var)]; }

inline Var parse_var(std::string_view text) {
  if (text.size() == 1) {
    for (Var var : kAllVars) {
      if (symbol(var) == text[0]) return var;
    }
  }
  throw error("unknown variable '" + std::string(text) + "'");
}

class VarSet {
 public:
  constexpr VarSet() = default;
  constexpr VarSet(std::initializer_list<Var> vars) {
    for (Var var : vars) bits_ |= bit(var);
  }
  static constexpr VarSet all() { return VarSet(0xff); }

  constexpr bool contains(Var var) const { return (bits_ & bit(var)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr VarSet with(Var var) const { return VarSet(bits_ | bit(var)); }
  constexpr bool intersects(VarSet other) const { return (bits_ & other.bits_) != 0; }
  constexpr bool subset_of(VarSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr std::uint8_t bits() const { return bits_; }

  std::vector<Var> members() const {
    std::vector<Var> out;
    for (Var var : kAllVars)
      if (contains(var)) out.push_back(var);
    return out;
  }

  friend constexpr bool operator==(VarSet, VarSet) = default;
  friend constexpr auto operator<=>(VarSet a, VarSet b) { return a.bits_ <=> b.bits_; }

 private:
  constexpr explicit VarSet(std::uint8_t bits) : bits_(bits) {}
  static constexpr std::uint8_t bit(Var var) { return std::uint8_t(1u << index_of(var)); }
  std::uint8_t bits_ = 0;
};

class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;

  static Monomial of(Var var, unsigned exponent = 1) {
    Monomial m;
    m.exps_[index_of(var)] = checked(exponent);
    return m;
  }
  static Monomial from_map(const std::map<Var, unsigned>& exps) {
    Monomial m;
    for (auto [var, e] : exps) m.exps_[index_of(var)] = checked(e);
    return m;
  }

  unsigned operator[](Var var) const { return exps_[index_of(var)]; }

  unsigned degree() const {
    unsigned d = 0;
    for (auto e : exps_) d += e;
    return d;
  }
  unsigned degree(VarSet vars) const {
    unsigned d = 0;
    for (Var var : kAllVars)
      if (vars.contains(var)) d += exps_[index_of(var)];
    return d;
  }
  bool is_one() const { return degree() == 0; }

  VarSet support() const {
    VarSet s;
    for (Var var : kAllVars)
      if (exps_[index_of(var)] != 0) s = s.with(var);
    return s;
  }

  Monomial with(Var var, unsigned exponent) const {
    Monomial m = *this;
    m.exps_[index_of(var)] = checked(exponent);
    return m;
  }
  Monomial without(Var var) const { return with(var, 0); }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kNumVars; ++i) m.exps_[i] = checked(unsigned(a.exps_[i]) + b.exps_[i]);
    return m;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  // Canonical graded order: lower total degree first; among equal degrees the
  // monomial with the larger exponent on the earliest differing variable
  // (alphabet t < v < w < x < y < z < r < s) comes first.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (a.exps_[i] != b.exps_[i]) return a.exps_[i] > b.exps_[i];
    }
    return false;
  }

  std::size_t hash() const {
    std::uint64_t lo = 0, hi = 0;
    for (std::size_t i = 0; i < 4; ++i) lo |= std::uint64_t(exps_[i]) << (16 * i);
    for (std::size_t i = 4; i < 8; ++i) hi |= std::uint64_t(exps_[i]) << (16 * (i - 4));
    std::uint64_t h = lo * 0x9E3779B97F4A7C15ull;
    h ^= hi + 0x7F4A7C159E3779B9ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }

  // "1", "x", "t^2*v*w^3"
  std::string str() const {
    std::string out;
    for (Var var : kAllVars) {
      unsigned e = (*this)[var];
      if (e == 0) continue;
      if (!out.empty()) out += '*';
      out += symbol(var);
      if (e > 1) out += '^' + std::to_string(e);
    }
    return out.empty() ? "1" : out;
  }

 private:
  static Exponent checked(unsigned e) {
    if (e > 0xffffu) throw error("monomial exponent overflow");
    return static_cast<Exponent>(e);
  }
  std::array<Exponent, kNumVars> exps_{};
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// A joint cap: the exponents of `vars` must sum to at most `cap`.
struct Constraint {
  VarSet vars;
  unsigned cap = 0;
  friend bool operator==(const Constraint&, const Constraint&) = default;
};

class TruncationProfile {
 public:
  TruncationProfile() = default;

  /// Returns a copy with an added constraint; a repeated variable set keeps the
  /// smaller cap.
  TruncationProfile with(VarSet vars, unsigned cap) const {
    if (vars.empty()) throw error("empty constraint");
    TruncationProfile out = *this;
    auto it = std::find_if(out.constraints_.begin(), out.constraints_.end(),
                           [&](const Constraint& c) { return c.vars == vars; });
    if (it != out.constraints_.end()) {
      it->cap = std::min(it->cap, cap);
    } else {
      out.constraints_.push_back({vars, cap});
      std::sort(out.constraints_.begin(), out.constraints_.end(),
                [](const Constraint& a, const Constraint& b) { return a.vars < b.vars; });
    }
    return out;
  }
  TruncationProfile with(Var var, unsigned cap) const { return with(VarSet{var}, cap); }

  /// Parses "t=8,x=12,v+w=6".
  static TruncationProfile parse(std::string_view text) {
    TruncationProfile out;
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t end = text.find(',', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view item = text.substr(pos, end - pos);
      std::size_t eq = item.find('=');
      if (eq == std::string_view::npos || eq == 0 || eq + 1 == item.size())
        throw error("malformed profile entry '" + std::string(item) + "'");
      VarSet vars;
      std::string_view lhs = item.substr(0, eq);
      std::size_t p = 0;
      while (p < lhs.size()) {
        std::size_t plus = lhs.find('+', p);
        if (plus == std::string_view::npos) plus = lhs.size();
        vars = vars.with(parse_var(lhs.substr(p, plus - p)));
        p = plus + 1;
      }
      unsigned cap = 0;
      for (char c : item.substr(eq + 1)) {
        if (c < '0' || c > '9') throw error("malformed cap in '" + std::string(item) + "'");
        cap = cap * 10 + unsigned(c - '0');
        if (cap > 0xffffu) throw error("cap too large");
      }
      out = out.with(vars, cap);
      pos = end + 1;
    }
    return out;
  }

  std::string str() const {
    std::string out;
    for (const auto& c : constraints_) {
      if (!out.empty()) out += ',';
      std::string lhs;
      for (Var var : c.vars.members()) {
        if (!lhs.empty()) lhs += '+';
        lhs += symbol(var);
      }
      out += lhs + '=' + std::to_string(c.cap);
    }
    return out;
  }

  bool contains(const Monomial& m) const {
    for (const auto& c : constraints_)
      if (m.degree(c.vars) > c.cap) return false;
    return true;
  }

  /// Largest exponent `var` can carry inside the window.
  std::optional<unsigned> bound(Var var) const {
    std::optional<unsigned> b;
    for (const auto& c : constraints_)
      if (c.vars.contains(var)) b = b ? std::min(*b, c.cap) : c.cap;
    return b;
  }

  /// Upper bound on the joint degree of `vars` inside the window (nullopt when
  /// some member is unconstrained).
  std::optional<unsigned> degree_bound(VarSet vars) const {
    std::optional<unsigned> best;
    for (const auto& c : constraints_)
      if (vars.subset_of(c.vars)) best = best ? std::min(*best, c.cap) : c.cap;
    unsigned sum = 0;
    for (Var var : vars.members()) {
      auto b = bound(var);
      if (!b) return best;
      sum += *b;
    }
    return best ? std::min(*best, sum) : sum;
  }

  VarSet constrained() const {
    VarSet s;
    for (const auto& c : constraints_)
      for (Var var : c.vars.members()) s = s.with(var);
    return s;
  }

  /// True when every monomial of this window also lies in `outer`.
  bool within(const TruncationProfile& outer) const {
    for (const auto& c : outer.constraints_) {
      auto b = degree_bound(c.vars);
      if (!b || *b > c.cap) return false;
    }
    return true;
  }

  const std::vector<Constraint>& constraints() const { return constraints_; }
  bool unbounded() const { return constraints_.empty(); }

  friend bool operator==(const TruncationProfile&, const TruncationProfile&) = default;

 private:
  std::vector<Constraint> constraints_;
};

class MultiSeries;
MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);

class MultiSeries {
 public:
  using Term = std::pair<Monomial, mpz_class>;

  MultiSeries() = default;
  explicit MultiSeries(TruncationProfile profile) : profile_(std::move(profile)) {}

  static MultiSeries constant(const mpz_class& c, TruncationProfile profile) {
    return monomial(Monomial{}, c, std::move(profile));
  }
  static MultiSeries variable(Var var, TruncationProfile profile) {
    return monomial(Monomial::of(var), 1, std::move(profile));
  }
  /// c * m, or zero when m lies outside the window.
  static MultiSeries monomial(const Monomial& m, const mpz_class& c, TruncationProfile profile) {
    MultiSeries out(std::move(profile));
    if (c != 0 && out.profile_.contains(m)) out.terms_.emplace_back(m, c);
    return out;
  }
  /// Builds a series from explicit terms; duplicates are merged and an
  /// out-of-window monomial is an error.
  static MultiSeries from_terms(TruncationProfile profile, std::vector<Term> terms) {
    MultiSeries out(std::move(profile));
    std::unordered_map<Monomial, mpz_class, MonomialHash> acc;
    for (auto& [m, c] : terms) {
      if (!out.profile_.contains(m)) throw error("monomial " + m.str() + " beyond truncation");
      acc[m] += c;
    }
    out.adopt(std::move(acc));
    return out;
  }

  const TruncationProfile& profile() const { return profile_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  mpz_class constant_term() const {
    if (!terms_.empty() && terms_.front().first.is_one()) return terms_.front().second;
    return 0;
  }

  /// Variables occurring in some stored monomial.
  VarSet support() const {
    VarSet s;
    for (const auto& [m, c] : terms_)
      for (Var var : kAllVars)
        if (m[var] != 0) s = s.with(var);
    return s;
  }

  /// Lowest joint degree in `vars` over stored terms (nullopt for zero).
  std::optional<unsigned> valuation(VarSet vars) const {
    std::optional<unsigned> best;
    for (const auto& [m, c] : terms_) {
      unsigned d = m.degree(vars);
      best = best ? std::min(*best, d) : d;
    }
    return best;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      bool neg = sgn(c) < 0;
      mpz_class mag = abs(c);
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      if (m.is_one()) {
        out += mag.get_str();
      } else {
        if (mag != 1) out += mag.get_str() + "*";
        out += m.str();
      }
    }
    return out;
  }

  friend bool operator==(const MultiSeries&, const MultiSeries&) = default;

  // Internal accumulation buffer used by the arithmetic routines.
  class Accumulator {
   public:
    explicit Accumulator(const TruncationProfile& profile) : profile_(profile) {}
    void add(const Monomial& m, const mpz_class& c) {
      if (profile_.contains(m)) map_[m] += c;
    }
    void addmul(const Monomial& m, const mpz_class& a, const mpz_class& b) {
      if (!profile_.contains(m)) return;
      mpz_class& slot = map_[m];
      mpz_addmul(slot.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    }
    void reserve(std::size_t n) { map_.reserve(n); }
    MultiSeries finish() && {
      MultiSeries out(profile_);
      out.adopt(std::move(map_));
      return out;
    }

   private:
    const TruncationProfile& profile_;
    std::unordered_map<Monomial, mpz_class, MonomialHash> map_;
  };

  /// Structural audit: sorted, unique, nonzero, in window.
  bool well_formed() const {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (terms_[i].second == 0 || !profile_.contains(terms_[i].first)) return false;
      if (i > 0 && !(terms_[i - 1].first < terms_[i].first)) return false;
    }
    return true;
  }

 private:
  friend MultiSeries detail_from_sorted(TruncationProfile, std::vector<Term>);

  void adopt(std::unordered_map<Monomial, mpz_class, MonomialHash>&& map) {
    terms_.clear();
    terms_.reserve(map.size());
    for (auto& [m, c] : map)
      if (c != 0) terms_.emplace_back(m, std::move(c));
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
  }

  TruncationProfile profile_;
  std::vector<Term> terms_;
};

// Terms must already be sorted, nonzero and in window.
inline MultiSeries detail_from_sorted(TruncationProfile profile, std::vector<MultiSeries::Term> terms) {
  MultiSeries out(std::move(profile));
  out.terms_ = std::move(terms);
  return out;
}

namespace detail {

inline void require_same_profile(const MultiSeries& a, const MultiSeries& b) {
  if (!(a.profile() == b.profile())) throw error("incompatible truncation");
}

// Single variable carrying every monomial of both operands, when there is one.
inline std::optional<Var> common_univariate(const MultiSeries& a, const MultiSeries& b) {
  VarSet s = a.support();
  for (Var var : b.support().members()) s = s.with(var);
  auto members = s.members();
  if (members.size() != 1) return std::nullopt;
  if (!a.profile().bound(members[0])) return std::nullopt;
  return members[0];
}

inline std::vector<mpz_class> dense(const MultiSeries& f, Var var, unsigned n) {
  std::vector<mpz_class> out(n + 1);
  for (const auto& [m, c] : f.terms()) out[m[var]] = c;
  return out;
}

inline MultiSeries from_dense(const std::vector<mpz_class>& coeffs, Var var, const TruncationProfile& profile) {
  std::vector<MultiSeries::Term> terms;
  for (unsigned i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) terms.emplace_back(Monomial::of(var, i), coeffs[i]);
  return detail_from_sorted(profile, std::move(terms));
}

}  // namespace detail

inline MultiSeries operator+(const MultiSeries& a, const MultiSeries& b) {
  detail::require_same_profile(a, b);
  std::vector<MultiSeries::Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.terms().begin(), ea = a.terms().end();
  auto ib = b.terms().begin(), eb = b.terms().end();
  while (ia != ea || ib != eb) {
    if (ib == eb || (ia != ea && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == ea || ib->first < ia->first) {
      out.push_back(*ib++);
    } else {
      mpz_class c = ia->second + ib->second;
      if (c != 0) out.emplace_back(ia->first, std::move(c));
      ++ia;
      ++ib;
    }
  }
  return detail_from_sorted(a.profile(), std::move(out));
}

inline MultiSeries scale(const MultiSeries& f, const mpz_class& c) {
  if (c == 0) return MultiSeries(f.profile());
  std::vector<MultiSeries::Term> out;
  out.reserve(f.size());
  for (const auto& [m, k] : f.terms()) out.emplace_back(m, k * c);
  return detail_from_sorted(f.profile(), std::move(out));
}

inline MultiSeries operator-(const MultiSeries& f) { return scale(f, -1); }
inline MultiSeries operator-(const MultiSeries& a, const MultiSeries& b) { return a + (-b); }

/// c * m * f, truncated.
inline MultiSeries shift(const MultiSeries& f, const Monomial& m, const mpz_class& c = 1) {
  if (m.is_one()) return scale(f, c);
  std::vector<MultiSeries::Term> out;
  out.reserve(f.size());
  for (const auto& [mono, k] : f.terms()) {
    Monomial p = mono * m;
    if (f.profile().contains(p)) out.emplace_back(p, k * c);
  }
  // multiplication by a fixed monomial preserves the canonical order
  if (c == 0) out.clear();
  return detail_from_sorted(f.profile(), std::move(out));
}

inline MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
  detail::require_same_profile(a, b);
  const auto& profile = a.profile();
  if (a.is_zero() || b.is_zero()) return MultiSeries(profile);
  if (a.size() == 1) return shift(b, a.terms()[0].first, a.terms()[0].second);
  if (b.size() == 1) return shift(a, b.terms()[0].first, b.terms()[0].second);

  if (auto var = detail::common_univariate(a, b)) {
    unsigned n = *profile.bound(*var);
    auto da = detail::dense(a, *var, n);
    auto db = detail::dense(b, *var, n);
    std::vector<mpz_class> dc(n + 1);
    for (unsigned i = 0; i <= n; ++i) {
      if (da[i] == 0) continue;
      for (unsigned j = 0; i + j <= n; ++j) {
        if (db[j] == 0) continue;
        mpz_addmul(dc[i + j].get_mpz_t(), da[i].get_mpz_t(), db[j].get_mpz_t());
      }
    }
    return detail::from_dense(dc, *var, profile);
  }

  MultiSeries::Accumulator acc(profile);
  acc.reserve(std::min<std::size_t>(a.size() * b.size(), 1u << 20));
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) acc.addmul(ma * mb, ca, cb);
  }
  return std::move(acc).finish();
}

inline MultiSeries& operator+=(MultiSeries& a, const MultiSeries& b) { return a = a + b; }
inline MultiSeries& operator-=(MultiSeries& a, const MultiSeries& b) { return a = a - b; }
inline MultiSeries& operator*=(MultiSeries& a, const MultiSeries& b) { return a = a * b; }

inline MultiSeries pow(const MultiSeries& f, unsigned n) {
  MultiSeries result = MultiSeries::constant(1, f.profile());
  MultiSeries base = f;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n > 0) {
      if (result.is_zero()) break;
      base = base * base;
    }
  }
  return result;
}

/// Multiplicative inverse of a series whose constant term is +1 or -1,
/// realized as the truncated geometric expansion.
inline MultiSeries inverse(const MultiSeries& f) {
  const auto& profile = f.profile();
  mpz_class c0 = f.constant_term();
  if (c0 != 1 && c0 != -1) throw error("series not invertible: constant term " + c0.get_str());
  MultiSeries g = f - MultiSeries::constant(c0, profile);
  if (g.is_zero()) return MultiSeries::constant(c0, profile);

  VarSet constrained = profile.constrained();
  for (const auto& [m, c] : g.terms()) {
    if (!m.support().intersects(constrained))
      throw error("cannot invert: term " + m.str() + " is not truncated");
  }

  if (auto var = detail::common_univariate(f, f)) {
    unsigned n = *profile.bound(*var);
    auto df = detail::dense(f, *var, n);
    std::vector<mpz_class> out(n + 1);
    out[0] = c0;
    for (unsigned k = 1; k <= n; ++k) {
      mpz_class acc = 0;
      for (unsigned j = 1; j <= k; ++j)
        if (df[j] != 0 && out[k - j] != 0) mpz_addmul(acc.get_mpz_t(), df[j].get_mpz_t(), out[k - j].get_mpz_t());
      out[k] = -c0 * acc;
    }
    return detail::from_dense(out, *var, profile);
  }

  // 1/f = c0 * sum_j (-c0 g)^j; every factor raises the joint degree of the
  // constrained variables, so the powers vanish after finitely many steps.
  unsigned limit = 1;
  for (const auto& c : profile.constraints()) limit += c.cap;
  MultiSeries h = scale(g, -c0);
  MultiSeries term = MultiSeries::constant(1, profile);
  MultiSeries sum = term;
  for (unsigned j = 0; j < limit; ++j) {
    term = term * h;
    if (term.is_zero()) return scale(sum, c0);
    sum += term;
  }
  throw error("geometric expansion did not terminate");
}

inline MultiSeries operator/(const MultiSeries& a, const MultiSeries& b) { return a * inverse(b); }

/// (a + 1)(b + 1)^n - 1
inline MultiSeries v_poly(unsigned n, const MultiSeries& a, const MultiSeries& b) {
  detail::require_same_profile(a, b);
  MultiSeries one = MultiSeries::constant(1, a.profile());
  return (a + one) * pow(b + one, n) - one;
}

/// (1 + c*m)^e for any integer e, via the generalized binomial theorem.
inline MultiSeries binomial_power(const mpz_class& c, const Monomial& m, long e, const TruncationProfile& profile) {
  if (m.is_one()) throw error("binomial_power needs a non-constant monomial");
  if (e < 0 && !m.support().intersects(profile.constrained()))
    throw error("binomial_power: window not bounded along " + m.str());
  std::vector<MultiSeries::Term> out;
  mpz_class binom = 1;  // C(e, k)
  mpz_class cpow = 1;
  Monomial mk;
  for (long k = 0;; ++k) {
    if (!profile.contains(mk)) break;
    if (binom == 0) break;
    out.emplace_back(mk, binom * cpow);
    // C(e, k+1) = C(e, k) * (e - k) / (k + 1)
    binom *= (e - k);
    mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(k + 1));
    cpow *= c;
    mk = mk * m;
  }
  std::erase_if(out, [](const MultiSeries::Term& t) { return t.second == 0; });
  return detail_from_sorted(profile, std::move(out));
}


/// Replaces `var` by `image` inside the window of `f`.
///
/// Exact only when the substitution cannot lower the joint degree of any
/// constraint: for every constraint containing `var`, each monomial of `image`
/// must involve a variable of that constraint.  Violations are rejected.
inline MultiSeries substitute_var(const MultiSeries& f, Var var, const MultiSeries& image) {
  detail::require_same_profile(f, image);
  const auto& profile = f.profile();
  unsigned max_e = 0;
  for (const auto& [m, k] : f.terms()) max_e = std::max(max_e, m[var]);
  if (max_e == 0) return f;
  for (const auto& c : profile.constraints()) {
    if (!c.vars.contains(var)) continue;
    for (const auto& [m, k] : image.terms()) {
      if (m.degree(c.vars) == 0)
        throw error(std::string("substitution for ") + symbol(var) + " does not preserve the truncation window");
    }
  }
  std::vector<MultiSeries> powers{MultiSeries::constant(1, profile)};
  for (unsigned e = 1; e <= max_e; ++e) powers.push_back(powers.back() * image);

  MultiSeries::Accumulator acc(profile);
  for (const auto& [m, c] : f.terms()) {
    Monomial rest = m.without(var);
    for (const auto& [pm, pc] : powers[m[var]].terms()) acc.addmul(pm * rest, pc, c);
  }
  return std::move(acc).finish();
}

/// sigma: v -> v + w + vw and x -> x + y + xy simultaneously.
inline MultiSeries subst_sigma(const MultiSeries& f) {
  const auto& p = f.profile();
  auto lift = [&](Var a, Var b) {
    MultiSeries va = MultiSeries::variable(a, p), vb = MultiSeries::variable(b, p);
    return va + vb + va * vb;
  };
  // The images do not mention the other substituted variable, so the two
  // substitutions commute.
  MultiSeries g = substitute_var(f, Var::v, lift(Var::v, Var::w));
  return substitute_var(g, Var::x, lift(Var::x, Var::y));
}

/// var -> var / (1 - var), expanded up to the window bound.
inline MultiSeries subst_geometric(const MultiSeries& f, Var var) {
  const auto& p = f.profile();
  if (!p.bound(var)) throw error(std::string("geometric substitution needs a cap on ") + symbol(var));
  MultiSeries image = shift(binomial_power(-1, Monomial::of(var), -1, p), Monomial::of(var));
  return substitute_var(f, var, image);
}

/// Every exponent of a variable in `vars` is doubled (v -> v^2).
inline MultiSeries double_exponents(const MultiSeries& f, VarSet vars) {
  MultiSeries::Accumulator acc(f.profile());
  for (const auto& [m, c] : f.terms()) {
    Monomial d = m;
    for (Var var : vars.members()) d = d.with(var, 2 * m[var]);
    acc.add(d, c);
  }
  return std::move(acc).finish();
}

/// Simultaneous substitution of each mapped variable by a series living in
/// `target`; unmapped variables are carried over unchanged.  The caller must
/// make sure that `f`'s window holds every term whose image can reach the
/// target window (e.g. when a variable is specialized to 1).
inline MultiSeries specialize(const MultiSeries& f, const std::map<Var, MultiSeries>& images,
                              const TruncationProfile& target) {
  for (const auto& [var, img] : images)
    if (!(img.profile() == target)) throw error("incompatible truncation");
  // powers[var][e], computed lazily
  std::map<Var, std::vector<MultiSeries>> powers;
  auto power = [&](Var var, unsigned e) -> const MultiSeries& {
    auto& vec = powers[var];
    if (vec.empty()) vec.push_back(MultiSeries::constant(1, target));
    while (vec.size() <= e) vec.push_back(vec.back() * images.at(var));
    return vec[e];
  };
  MultiSeries::Accumulator acc(target);
  for (const auto& [m, c] : f.terms()) {
    Monomial kept;
    MultiSeries factor = MultiSeries::constant(c, target);
    for (Var var : kAllVars) {
      unsigned e = m[var];
      if (e == 0) continue;
      if (images.count(var)) {
        factor = factor * power(var, e);
      } else {
        kept = kept * Monomial::of(var, e);
      }
      if (factor.is_zero()) break;
    }
    for (const auto& [fm, fc] : factor.terms()) acc.add(fm * kept, fc);
  }
  return std::move(acc).finish();
}

/// Re-truncates `f` to a window contained in its own.
inline MultiSeries restrict(const MultiSeries& f, const TruncationProfile& narrower) {
  if (!narrower.within(f.profile())) throw error("restrict: target window is not contained in the source window");
  std::vector<MultiSeries::Term> out;
  for (const auto& t : f.terms())
    if (narrower.contains(t.first)) out.push_back(t);
  return detail_from_sorted(narrower, std::move(out));
}

/// Exact coefficient of `m`; a monomial beyond the window is unknowable.
inline mpz_class coeff(const MultiSeries& f, const Monomial& m) {
  if (!f.profile().contains(m)) throw error("coefficient beyond truncation");
  auto terms = f.terms();
  auto it = std::lower_bound(terms.begin(), terms.end(), m,
                             [](const MultiSeries::Term& t, const Monomial& key) { return t.first < key; });
  if (it != terms.end() && it->first == m) return it->second;
  return 0;
}

/// [var^k] f as a series in the remaining variables (same profile).
inline MultiSeries coefficient_of(const MultiSeries& f, Var var, unsigned k) {
  if (!f.profile().contains(Monomial::of(var, k))) throw error("coefficient beyond truncation");
  std::vector<MultiSeries::Term> out;
  for (const auto& [m, c] : f.terms())
    if (m[var] == k) out.emplace_back(m.without(var), c);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return detail_from_sorted(f.profile(), std::move(out));
}

/// Univariate coefficient list [var^0 .. var^n] of a series supported on `var`.
inline std::vector<mpz_class> coefficients(const MultiSeries& f, Var var, unsigned n) {
  std::vector<mpz_class> out(n + 1);
  for (const auto& [m, c] : f.terms()) {
    if (m.degree() != m[var]) throw error(std::string("series is not univariate in ") + symbol(var));
    if (m[var] <= n) out[m[var]] = c;
  }
  return out;
}

// JSON: [{"monomial": {"t": 2, "x": 1}, "coeff": "decimal"}] in canonical order.
inline nlohmann::json to_json(const MultiSeries& f) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : f.terms()) {
    nlohmann::json mono = nlohmann::json::object();
    for (Var var : kAllVars)
      if (m[var] != 0) mono[std::string(1, symbol(var))] = m[var];
    out.push_back({{"monomial", mono}, {"coeff", c.get_str()}});
  }
  return out;
}

inline MultiSeries series_from_json(const nlohmann::json& j, const TruncationProfile& profile) {
  if (!j.is_array()) throw error("series JSON must be an array");
  std::vector<MultiSeries::Term> terms;
  for (const auto& item : j) {
    Monomial m;
    for (const auto& [name, e] : item.at("monomial").items()) {
      m = m * Monomial::of(parse_var(name), e.get<unsigned>());
    }
    mpz_class c;
    if (c.set_str(item.at("coeff").get<std::string>(), 10) != 0) throw error("malformed coefficient");
    terms.emplace_back(m, c);
  }
  return MultiSeries::from_terms(profile, std::move(terms));
}

}  // namespace fishburn
