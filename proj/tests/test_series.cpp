#include <array>
#include <map>
#include <random>

#include <gtest/gtest.h>

#include <fishburn/series.hpp>

using namespace fishburn;

namespace {

struct Ring {
  TruncationProfile p;
  explicit Ring(TruncationProfile profile) : p(std::move(profile)) {}
  MultiSeries zero() const { return MultiSeries(p); }
  MultiSeries one() const { return num(1); }
  MultiSeries num(long c) const { return MultiSeries::constant(c, p); }
  MultiSeries var(Var v) const { return MultiSeries::variable(v, p); }
  MultiSeries mono(const Monomial& m, long c) const { return MultiSeries::monomial(m, c, p); }
};

// Naive model: exponent vector -> coefficient, with the window given as a
// list of (variables, cap) pairs checked by hand.
using Exps = std::array<unsigned, kNumVars>;
using Naive = std::map<Exps, mpz_class>;
using Caps = std::vector<std::pair<std::vector<Var>, unsigned>>;

bool inside(const Caps& caps, const Exps& e) {
  for (const auto& [vars, cap] : caps) {
    unsigned d = 0;
    for (Var v : vars) d += e[index_of(v)];
    if (d > cap) return false;
  }
  return true;
}

TruncationProfile profile_of(const Caps& caps) {
  TruncationProfile p;
  for (const auto& [vars, cap] : caps) {
    VarSet s;
    for (Var v : vars) s = s.with(v);
    p = p.with(s, cap);
  }
  return p;
}

Naive naive_mul(const Caps& caps, const Naive& a, const Naive& b) {
  Naive out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exps e;
      for (std::size_t i = 0; i < kNumVars; ++i) e[i] = ea[i] + eb[i];
      if (inside(caps, e)) out[e] += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

MultiSeries to_series(const Caps& caps, const Naive& f) {
  std::vector<MultiSeries::Term> terms;
  for (const auto& [e, c] : f) {
    Monomial m;
    for (Var v : kAllVars) m = m * Monomial::of(v, e[index_of(v)]);
    terms.emplace_back(m, c);
  }
  return MultiSeries::from_terms(profile_of(caps), terms);
}

Naive random_naive(std::mt19937& rng, const Caps& caps, const std::vector<Var>& vars, unsigned terms,
                   bool unit_constant) {
  std::uniform_int_distribution<int> coef(-5, 5), expo(0, 3);
  Naive out;
  for (unsigned t = 0; t < terms; ++t) {
    Exps e{};
    for (Var v : vars) e[index_of(v)] = expo(rng);
    if (!inside(caps, e)) continue;
    out[e] += coef(rng);
  }
  if (unit_constant) out[Exps{}] = 1;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

const Caps kCaps{{{Var::t}, 3}, {{Var::x}, 4}, {{Var::v, Var::w}, 4}};
const std::vector<Var> kVars{Var::t, Var::v, Var::w, Var::x};

MultiSeries poly(std::initializer_list<std::pair<std::initializer_list<std::pair<Var, unsigned>>, long>> terms,
                 const TruncationProfile& p) {
  std::vector<MultiSeries::Term> out;
  for (const auto& [mono, c] : terms) {
    Monomial m;
    for (auto [v, e] : mono) m = m * Monomial::of(v, e);
    out.emplace_back(m, c);
  }
  return MultiSeries::from_terms(p, out);
}

}  // namespace

TEST(SeriesArithmetic, AdditionExamples) {
  auto p = TruncationProfile{}.with(Var::x, 5);
  Ring R(p);
  auto x = R.var(Var::x);
  EXPECT_EQ((R.one() + x) + x, poly({{{}, 1}, {{{Var::x, 1}}, 2}}, p));
  EXPECT_EQ(x + R.zero(), x);
  auto x2 = x * x;
  auto sum = x2 + (-x2);
  EXPECT_TRUE(sum.is_zero());
  EXPECT_EQ(sum.size(), 0u);
}

TEST(SeriesArithmetic, MultiplicationExamples) {
  auto p = TruncationProfile{}.with(Var::x, 5);
  Ring R(p);
  auto x = R.var(Var::x);
  EXPECT_EQ((R.one() + x) * (R.one() + x), poly({{{}, 1}, {{{Var::x, 1}}, 2}, {{{Var::x, 2}}, 1}}, p));
  EXPECT_EQ(x * R.one(), x);
  Ring R3(TruncationProfile{}.with(Var::x, 3));
  auto y = R3.var(Var::x);
  EXPECT_TRUE((y * y * y * y).is_zero());
}

TEST(SeriesArithmetic, VPolyExamples) {
  auto p = TruncationProfile{}.with(Var::x, 4).with(Var::y, 4);
  Ring R(p);
  auto a = R.var(Var::x), b = R.var(Var::y);
  EXPECT_EQ(v_poly(0, a, b), a);
  EXPECT_EQ(v_poly(1, R.one(), R.one()), R.num(3));
  auto expected = poly({{{{Var::x, 1}}, 1},
                        {{{Var::y, 1}}, 2},
                        {{{Var::y, 2}}, 1},
                        {{{Var::x, 1}, {Var::y, 1}}, 2},
                        {{{Var::x, 1}, {Var::y, 2}}, 1}},
                       p);
  EXPECT_EQ(v_poly(2, a, b), expected);
}

TEST(SeriesSubstitution, SigmaExamples) {
  auto p = TruncationProfile{}.with({Var::v, Var::w}, 8).with({Var::x, Var::y}, 8);
  Ring R(p);
  auto v = R.var(Var::v), w = R.var(Var::w), x = R.var(Var::x), y = R.var(Var::y);
  EXPECT_EQ(subst_sigma(v), v + w + v * w);
  EXPECT_EQ(subst_sigma(x * v), (x + y + x * y) * (v + w + v * w));

  // sigma^i [v] = (1+v)(1+w)^i - 1, expanded here by the binomial theorem.
  MultiSeries f = v;
  for (unsigned i = 1; i <= 4; ++i) {
    f = subst_sigma(f);
    std::vector<MultiSeries::Term> terms;
    mpz_class binom;
    for (unsigned k = 0; k <= i; ++k) {
      mpz_bin_uiui(binom.get_mpz_t(), i, k);
      if (k > 0) terms.emplace_back(Monomial::of(Var::w, k), binom);
      terms.emplace_back(Monomial::of(Var::v) * Monomial::of(Var::w, k), binom);
    }
    EXPECT_EQ(f, MultiSeries::from_terms(p, terms)) << "i=" << i;
  }
}

TEST(SeriesSubstitution, GeometricExamples) {
  auto p = TruncationProfile{}.with(Var::x, 4);
  Ring R(p);
  auto x = R.var(Var::x);
  EXPECT_EQ(subst_geometric(x, Var::x),
            poly({{{{Var::x, 1}}, 1}, {{{Var::x, 2}}, 1}, {{{Var::x, 3}}, 1}, {{{Var::x, 4}}, 1}}, p));
  EXPECT_EQ(subst_geometric(R.one(), Var::x), R.one());
  EXPECT_EQ(subst_geometric(x * x, Var::x), poly({{{{Var::x, 2}}, 1}, {{{Var::x, 3}}, 2}, {{{Var::x, 4}}, 3}}, p));
  EXPECT_THROW(subst_geometric(R.var(Var::x), Var::y), error);
}

TEST(SeriesCoefficients, Extraction) {
  auto p = TruncationProfile{}.with(Var::x, 3);
  Ring R(p);
  EXPECT_EQ(coeff(R.zero(), Monomial::of(Var::x, 2)), 0);
  EXPECT_THROW(coeff(R.var(Var::x), Monomial::of(Var::x, 4)), error);
  auto f = R.one() + R.var(Var::x) * R.num(7);
  EXPECT_EQ(coeff(f, Monomial::of(Var::x)), 7);
  EXPECT_EQ(coefficients(f, Var::x, 3), (std::vector<mpz_class>{1, 7, 0, 0}));
}

TEST(SeriesWindow, FromTermsRejectsOutside) {
  auto p = TruncationProfile{}.with(Var::x, 2);
  EXPECT_THROW(MultiSeries::from_terms(p, {{Monomial::of(Var::x, 3), 1}}), error);
  // merged duplicates
  auto f = MultiSeries::from_terms(p, {{Monomial::of(Var::x), 2}, {Monomial::of(Var::x), -2}});
  EXPECT_TRUE(f.is_zero());
}

TEST(SeriesWindow, ProfileParse) {
  auto p = TruncationProfile::parse("t=8,x=12,v+w=6");
  EXPECT_EQ(p.bound(Var::t), 8u);
  EXPECT_EQ(p.bound(Var::x), 12u);
  EXPECT_EQ(p.degree_bound(VarSet{Var::v, Var::w}), 6u);
  EXPECT_EQ(TruncationProfile::parse(p.str()), p);
  EXPECT_THROW(TruncationProfile::parse("t8"), error);
  EXPECT_THROW(TruncationProfile::parse("q=3"), error);
  EXPECT_THROW(TruncationProfile::parse("t=x"), error);
}

TEST(SeriesInverse, Basics) {
  auto p = TruncationProfile{}.with(Var::x, 6);
  Ring R(p);
  auto x = R.var(Var::x);
  // 1/(1-x) = 1 + x + ... + x^6
  auto g = inverse(R.one() - x);
  for (unsigned k = 0; k <= 6; ++k) EXPECT_EQ(coeff(g, Monomial::of(Var::x, k)), 1);
  EXPECT_EQ(inverse(R.num(-1)), R.num(-1));
  EXPECT_THROW(inverse(R.num(2) + x), error);
  EXPECT_THROW(inverse(x), error);
  // y is not truncated: 1/(1+y) is not a finite object
  EXPECT_THROW(inverse(R.one() + R.var(Var::y)), error);
}

TEST(SeriesBinomial, AgainstNaivePowers) {
  auto p = TruncationProfile{}.with(Var::x, 9).with(Var::y, 9);
  Ring R(p);
  Monomial m = Monomial::of(Var::x) * Monomial::of(Var::y);
  for (long c : {-3L, -1L, 2L})
    for (long e = -3; e <= 4; ++e) {
      auto base = R.one() + R.mono(m, c);
      MultiSeries want = e >= 0 ? pow(base, unsigned(e)) : pow(inverse(base), unsigned(-e));
      EXPECT_EQ(binomial_power(c, m, e, p), want) << "c=" << c << " e=" << e;
    }
}

TEST(SeriesProperties, RingLawsAgainstNaiveModel) {
  std::mt19937 rng(20240611);
  for (int round = 0; round < 60; ++round) {
    Naive a = random_naive(rng, kCaps, kVars, 8, false);
    Naive b = random_naive(rng, kCaps, kVars, 8, false);
    Naive c = random_naive(rng, kCaps, kVars, 8, false);
    auto A = to_series(kCaps, a), B = to_series(kCaps, b), C = to_series(kCaps, c);
    ASSERT_EQ(A * B, to_series(kCaps, naive_mul(kCaps, a, b)));
    EXPECT_EQ(A * B, B * A);
    EXPECT_EQ((A * B) * C, A * (B * C));
    EXPECT_EQ(A * (B + C), A * B + A * C);
    EXPECT_EQ(A + B, B + A);
    EXPECT_EQ(A - A, MultiSeries(A.profile()));
    EXPECT_TRUE((A * B).well_formed());
  }
}

TEST(SeriesProperties, UnivariateFastPathMatchesNaive) {
  std::mt19937 rng(7);
  Caps caps{{{Var::x}, 12}};
  for (int round = 0; round < 40; ++round) {
    Naive a = random_naive(rng, caps, {Var::x}, 6, round % 2 == 0);
    Naive b = random_naive(rng, caps, {Var::x}, 6, true);
    auto A = to_series(caps, a), B = to_series(caps, b);
    EXPECT_EQ(A * B, to_series(caps, naive_mul(caps, a, b)));
    EXPECT_EQ(B * inverse(B), MultiSeries::constant(1, B.profile()));
  }
}

TEST(SeriesProperties, InverseOfUnits) {
  std::mt19937 rng(99);
  for (int round = 0; round < 30; ++round) {
    Naive a = random_naive(rng, kCaps, kVars, 6, true);
    auto A = to_series(kCaps, a);
    auto one = MultiSeries::constant(1, A.profile());
    bool truncated = true;
    for (const auto& [m, c] : A.terms())
      if (!m.is_one() && !m.support().intersects(A.profile().constrained())) truncated = false;
    if (!truncated) continue;
    EXPECT_EQ(A * inverse(A), one);
  }
}

TEST(SeriesProperties, SubstitutionsAreMorphisms) {
  std::mt19937 rng(3);
  Caps caps{{{Var::t}, 3}, {{Var::v, Var::w}, 5}, {{Var::x, Var::y}, 5}};
  std::vector<Var> vars{Var::t, Var::v, Var::w, Var::x, Var::y};
  for (int round = 0; round < 25; ++round) {
    auto A = to_series(caps, random_naive(rng, caps, vars, 6, false));
    auto B = to_series(caps, random_naive(rng, caps, vars, 6, false));
    EXPECT_EQ(subst_sigma(A * B), subst_sigma(A) * subst_sigma(B));
    EXPECT_EQ(subst_sigma(A + B), subst_sigma(A) + subst_sigma(B));
    EXPECT_EQ(double_exponents(A * B, {Var::t}), double_exponents(A, {Var::t}) * double_exponents(B, {Var::t}));
  }
  Caps tc{{{Var::t}, 7}, {{Var::x}, 4}};
  for (int round = 0; round < 25; ++round) {
    auto A = to_series(tc, random_naive(rng, tc, {Var::t, Var::x}, 6, false));
    auto B = to_series(tc, random_naive(rng, tc, {Var::t, Var::x}, 6, false));
    EXPECT_EQ(subst_geometric(A * B, Var::t), subst_geometric(A, Var::t) * subst_geometric(B, Var::t));
  }
}

TEST(SeriesSubstitution, UnsafeImageRejected) {
  auto p = TruncationProfile{}.with(Var::x, 3);
  Ring R(p);
  // x -> 1 + x would lower degrees below the cap: rejected
  EXPECT_THROW(substitute_var(R.var(Var::x), Var::x, R.one() + R.var(Var::x)), error);
  // a series free of x is returned unchanged
  EXPECT_EQ(substitute_var(R.var(Var::t), Var::x, R.one()), R.var(Var::t));
}

TEST(SeriesSubstitution, SpecializeToSizeVariable) {
  auto big = TruncationProfile{}.with({Var::v, Var::x}, 6);
  Ring R(big);
  auto f = R.var(Var::v) * R.var(Var::x) + R.var(Var::v) * R.var(Var::v);
  auto target = TruncationProfile{}.with(Var::s, 6);
  auto s = MultiSeries::variable(Var::s, target);
  auto g = specialize(f, {{Var::v, s}, {Var::x, s}}, target);
  EXPECT_EQ(g, MultiSeries::monomial(Monomial::of(Var::s, 2), 2, target));
}

TEST(SeriesRestrict, NarrowerWindow) {
  auto p = TruncationProfile{}.with(Var::x, 5);
  auto q = TruncationProfile{}.with(Var::x, 2);
  Ring R(p);
  auto f = inverse(R.one() - R.var(Var::x));
  EXPECT_EQ(restrict(f, q), inverse(Ring(q).one() - Ring(q).var(Var::x)));
  EXPECT_THROW(restrict(Ring(q).one(), p), error);
}

TEST(SeriesJson, RoundTrip) {
  std::mt19937 rng(11);
  for (int round = 0; round < 10; ++round) {
    auto A = to_series(kCaps, random_naive(rng, kCaps, kVars, 10, false));
    EXPECT_EQ(series_from_json(to_json(A), A.profile()), A);
  }
  auto p = TruncationProfile{}.with(Var::x, 3);
  EXPECT_THROW(series_from_json(nlohmann::json::object(), p), error);
}

TEST(SeriesMonomial, CanonicalOrder) {
  Monomial one, x = Monomial::of(Var::x), t = Monomial::of(Var::t), t2 = Monomial::of(Var::t, 2);
  EXPECT_TRUE(one < x);
  EXPECT_TRUE(x < t2);
  EXPECT_TRUE(t < x);  // same degree, earlier variable first
  EXPECT_EQ((t2 * x).str(), "t^2*x");
  EXPECT_EQ(one.str(), "1");
}
