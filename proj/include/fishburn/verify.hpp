#pragma once

// Cross-check batteries: generating functions against the brute-force
// enumerators, closed forms against recurrences, and series identities.
// Each comparison becomes one case of a Report.

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <gmpxx.h>

#include <json.hpp>

#include "genfun.hpp"
#include "oracle.hpp"

#ifndef FISHBURN_DATA_DIR
#define FISHBURN_DATA_DIR "data"
#endif

namespace fishburn {

struct CaseResult {
  std::string id;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct Report {
  std::string suite;
  std::vector<CaseResult> cases;

  std::size_t pass_count() const {
    std::size_t n = 0;
    for (const auto& c : cases) n += c.pass;
    return n;
  }
  std::size_t fail_count() const { return cases.size() - pass_count(); }
  bool ok() const { return fail_count() == 0; }

  void add(std::string id, std::string expected, std::string actual) {
    bool pass = expected == actual;
    cases.push_back({std::move(id), std::move(expected), std::move(actual), pass});
  }
  void add(std::string id, const mpz_class& expected, const mpz_class& actual) {
    add(std::move(id), expected.get_str(), actual.get_str());
  }
  /// Series comparison; on mismatch the first differing coefficient is shown.
  void add(std::string id, const MultiSeries& expected, const MultiSeries& actual) {
    if (expected == actual) {
      std::string s = "equal series (" + std::to_string(expected.size()) + " terms)";
      cases.push_back({std::move(id), s, s, true});
      return;
    }
    if (!(expected.profile() == actual.profile())) {
      cases.push_back({std::move(id), expected.profile().str(), actual.profile().str(), false});
      return;
    }
    MultiSeries diff = expected - actual;
    const Monomial& m = diff.terms()[0].first;
    std::string where = "[" + m.str() + "] ";
    cases.push_back({std::move(id), where + coeff(expected, m).get_str(), where + coeff(actual, m).get_str(), false});
  }
  void merge(const Report& other) {
    for (const auto& c : other.cases) {
      CaseResult copy = c;
      copy.id = other.suite + "/" + c.id;
      cases.push_back(std::move(copy));
    }
  }
};

inline nlohmann::json to_json(const Report& r) {
  nlohmann::json cases = nlohmann::json::array();
  for (const auto& c : r.cases)
    cases.push_back({{"id", c.id}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  return {{"suite", r.suite}, {"cases", cases}, {"pass_count", r.pass_count()}, {"fail_count", r.fail_count()}};
}

struct VerifyOptions {
  std::filesystem::path fixture_dir = std::filesystem::path(FISHBURN_DATA_DIR) / "oeis";
};

namespace detail {

// Generating polynomial of a family of matrices: one monomial per matrix.
inline MultiSeries oracle_polynomial(const TruncationProfile& profile,
                                     const std::function<void(const MatrixVisitor&)>& family,
                                     const std::function<Monomial(const TriMatrix&)>& weight) {
  std::map<Monomial, mpz_class> acc;
  family([&](const TriMatrix& m) { acc[weight(m)] += 1; });
  std::vector<MultiSeries::Term> terms(acc.begin(), acc.end());
  return MultiSeries::from_terms(profile, std::move(terms));
}

inline Monomial mono(std::initializer_list<std::pair<Var, std::uint64_t>> exps) {
  Monomial m;
  for (auto [var, e] : exps)
    if (e) m = m * Monomial::of(var, static_cast<unsigned>(e));
  return m;
}

inline std::uint64_t last_column(const TriMatrix& m) { return stats(m).max + stats(m).iso; }

inline std::size_t count(const std::function<void(const MatrixVisitor&)>& family) {
  std::size_t n = 0;
  family([&](const TriMatrix&) { ++n; });
  return n;
}

}  // namespace detail

// ---------------------------------------------------------------------------

/// [t^k] of the closed forms against the two recurrences, k <= 7, with
/// caps v + w <= 8, x + y <= 8 and z <= 8.
inline Report verify_closed_vs_recurrence() {
  Report rep{"closed_vs_recurrence", {}};
  const unsigned K = 7, cap = 8;
  TruncationProfile pp_profile = TruncationProfile{}.with(Var::t, K).with({Var::v, Var::w}, cap).with({Var::x, Var::y}, cap);
  MultiSeries pp = pp_closed(pp_profile);
  auto pp_rec = pp_recurrence(K, pp_profile);
  for (unsigned k = 1; k <= K; ++k) rep.add("PP_" + std::to_string(k), pp_rec[k - 1], coefficient_of(pp, Var::t, k));

  TruncationProfile sp_profile = TruncationProfile{}.with(Var::t, K).with({Var::v, Var::w}, cap).with(Var::z, cap);
  MultiSeries sp = sp_closed(sp_profile);
  auto sp_rec = sp_recurrence(K, sp_profile);
  for (unsigned k = 1; k <= K; ++k) rep.add("SP_" + std::to_string(k), sp_rec[k - 1], coefficient_of(sp, Var::t, k));
  return rep;
}

/// Every counting formula against an enumerator, plus full statistic
/// polynomials for the multivariate series.
inline Report verify_oracle_vs_formula() {
  using detail::mono;
  Report rep{"oracle_vs_formula", {}};
  const unsigned N = 7;

  auto seq = [&](FamilyKind kind, unsigned n_max, const std::function<std::size_t(unsigned)>& oracle,
                 unsigned first = 1) {
    SequenceTable table = classic_sequence(kind, n_max);
    for (unsigned n = first; n <= n_max; ++n)
      rep.add(to_string(kind) + "/n=" + std::to_string(n), mpz_class(oracle(n)), table.at(n));
  };
  seq(FamilyKind::zagier, N, [](unsigned n) {
    return detail::count([&](const MatrixVisitor& v) { for_each_fishburn_by_size(n, false, v); });
  });
  seq(FamilyKind::zagier, kOracleMaxPosetSize, [](unsigned n) { return enum_interval_orders(n).size(); });
  seq(FamilyKind::primitive_by_size, N, [](unsigned n) {
    return detail::count([&](const MatrixVisitor& v) { for_each_fishburn_by_size(n, true, v); });
  });
  seq(FamilyKind::selfdual_by_size, N, [](unsigned n) {
    return detail::count([&](const MatrixVisitor& v) { for_each_self_dual(SelfDualGrading::by_size, n, false, v); });
  });
  seq(FamilyKind::selfdual_primitive_by_size, N, [](unsigned n) {
    return detail::count([&](const MatrixVisitor& v) { for_each_self_dual(SelfDualGrading::by_size, n, true, v); });
  });
  seq(FamilyKind::row_fishburn_primitive, N, [](unsigned n) {
    return detail::count([&](const MatrixVisitor& v) { for_each_row_fishburn_by_size(n, true, v); });
  });
  seq(FamilyKind::row_fishburn_general, N, [](unsigned n) {
    return detail::count([&](const MatrixVisitor& v) { for_each_row_fishburn_by_size(n, false, v); });
  });
  seq(FamilyKind::selfdual_reduced_primitive, N, [](unsigned n) {
    return detail::count(
        [&](const MatrixVisitor& v) { for_each_self_dual(SelfDualGrading::by_reduced_size, n, true, v); });
  });
  seq(FamilyKind::selfdual_reduced_general, N, [](unsigned n) {
    return detail::count(
        [&](const MatrixVisitor& v) { for_each_self_dual(SelfDualGrading::by_reduced_size, n, false, v); });
  });
  seq(FamilyKind::primitive_by_magnitude, kOracleMaxDim, [](unsigned k) {
    return detail::count([&](const MatrixVisitor& v) { for_each_fishburn_dim(k, true, std::nullopt, v); });
  });
  seq(FamilyKind::selfdual_primitive_by_magnitude, kOracleMaxDim, [](unsigned k) {
    return detail::count([&](const MatrixVisitor& v) { for_each_self_dual(SelfDualGrading::by_dim, k, true, v); });
  });

  // PP against primitive k x k matrices; t alone is capped, so PP_k is exact.
  {
    const unsigned K = 5;
    TruncationProfile p = TruncationProfile{}.with(Var::t, K);
    MultiSeries expected = detail::oracle_polynomial(
        p,
        [&](const MatrixVisitor& v) {
          for (unsigned k = 1; k <= K; ++k) for_each_fishburn_dim(k, true, std::nullopt, v);
        },
        [](const TriMatrix& m) {
          StatVector s = stats(m);
          return mono({{Var::t, s.mag}, {Var::v, s.max}, {Var::w, s.inner}, {Var::x, s.iso}, {Var::y, s.min}});
        });
    rep.add("PP/polynomial/k<=5", expected, pp_closed(p));
  }
  // GP against all Fishburn matrices of size <= 7.
  {
    TruncationProfile p = TruncationProfile{}.with(Var::t, N).with({Var::v, Var::w, Var::x, Var::y}, N);
    MultiSeries expected = detail::oracle_polynomial(
        p,
        [&](const MatrixVisitor& v) {
          for (unsigned n = 1; n <= N; ++n) for_each_fishburn_by_size(n, false, v);
        },
        [](const TriMatrix& m) {
          StatVector s = stats(m);
          return mono({{Var::t, s.mag}, {Var::v, s.max}, {Var::w, s.inner}, {Var::x, s.iso}, {Var::y, s.min}});
        });
    rep.add("GP/polynomial/size<=7", expected, gp_closed(p));
  }
  // SP against primitive self-dual matrices with corner cell 1.
  {
    const unsigned K = 6;
    TruncationProfile p = TruncationProfile{}.with(Var::t, K);
    MultiSeries expected = detail::oracle_polynomial(
        p,
        [&](const MatrixVisitor& v) {
          for (unsigned k = 1; k <= K; ++k)
            for_each_self_dual(SelfDualGrading::by_dim, k, true, [&](const TriMatrix& m) {
              if (m(1, k) == 1) v(m);
            });
        },
        [](const TriMatrix& m) {
          StatVector s = stats(m);
          return mono({{Var::t, s.mag}, {Var::v, s.max}, {Var::w, s.se}, {Var::z, s.dg}});
        });
    rep.add("SP/polynomial/k<=6", expected, sp_closed(p));
  }
  // SPP against all primitive self-dual matrices.
  {
    const unsigned K = 6;
    TruncationProfile p = TruncationProfile{}.with(Var::t, K);
    MultiSeries expected = detail::oracle_polynomial(
        p,
        [&](const MatrixVisitor& v) {
          for (unsigned k = 1; k <= K; ++k) for_each_self_dual(SelfDualGrading::by_dim, k, true, v);
        },
        [](const TriMatrix& m) {
          StatVector s = stats(m);
          return mono({{Var::t, s.mag}, {Var::v, s.min + s.max}, {Var::w, s.se + s.nw}, {Var::x, s.iso}, {Var::z, s.dg}});
        });
    rep.add("SPP/polynomial/k<=6", expected, spp_closed(p));
  }
  // SGP against self-dual matrices of size <= 7.
  {
    TruncationProfile p = TruncationProfile{}.with(Var::t, N).with({Var::v, Var::w, Var::x, Var::z}, N);
    MultiSeries expected = detail::oracle_polynomial(
        p,
        [&](const MatrixVisitor& v) {
          for (unsigned n = 1; n <= N; ++n) for_each_self_dual(SelfDualGrading::by_size, n, false, v);
        },
        [](const TriMatrix& m) {
          StatVector s = stats(m);
          return mono({{Var::t, s.mag}, {Var::v, s.min + s.max}, {Var::w, s.se + s.nw}, {Var::x, s.iso}, {Var::z, s.dg}});
        });
    rep.add("SGP/polynomial/size<=7", expected, sgp_closed(p));
  }
  // R against primitive row-Fishburn matrices of size <= 7.
  {
    TruncationProfile p = TruncationProfile{}.with({Var::v, Var::w, Var::x, Var::y}, N);
    MultiSeries expected = detail::oracle_polynomial(
        p,
        [&](const MatrixVisitor& v) {
          for (unsigned n = 1; n <= N; ++n) for_each_row_fishburn_by_size(n, true, v);
        },
        [](const TriMatrix& m) {
          StatVector s = stats(m);
          return mono({{Var::v, s.max}, {Var::w, s.inner}, {Var::x, s.iso}, {Var::y, s.min}});
        });
    rep.add("R/polynomial/size<=7", expected, row_fishburn_series(p));
  }
  // S' against primitive self-dual matrices of reduced size <= 7.
  {
    TruncationProfile p = TruncationProfile{}.with({Var::v, Var::w, Var::x, Var::z}, N);
    MultiSeries expected = detail::oracle_polynomial(
        p,
        [&](const MatrixVisitor& v) {
          for (unsigned n = 1; n <= N; ++n) for_each_self_dual(SelfDualGrading::by_reduced_size, n, true, v);
        },
        [](const TriMatrix& m) {
          StatVector s = stats(m);
          return mono({{Var::v, s.max}, {Var::w, s.se}, {Var::x, s.iso}, {Var::z, s.dg}});
        });
    rep.add("S'/polynomial/rs<=7", expected, selfdual_rs_series(DiagonalKind::all, p));
  }
  return rep;
}

/// Poset/matrix correspondence, duality and oracle self-consistency.
inline Report verify_bijection_roundtrip() {
  Report rep{"bijection_roundtrip", {}};
  for (unsigned n = 1; n <= kOracleMaxSize; ++n) {
    std::size_t total = 0, bad_roundtrip = 0, bad_dual = 0, bad_stats = 0, fixed = 0;
    std::size_t self_dual = 0;
    for_each_fishburn_by_size(n, false, [&](const TriMatrix& m) {
      ++total;
      if (!(poset_to_matrix(matrix_to_poset(m)) == m)) ++bad_roundtrip;
      TriMatrix d = dual(m);
      if (!(dual(d) == m) || !is_fishburn(d)) ++bad_dual;
      StatVector s = stats(m), sd = stats(d);
      if (s.mag != sd.mag || s.iso != sd.iso || s.min != sd.max || s.max != sd.min || s.se != sd.nw ||
          s.nw != sd.se || s.dg != sd.dg || s.size() != m.total() ||
          s.se + s.nw + s.dg + s.iso + s.min + s.max != m.total())
        ++bad_stats;
      if (d == m) ++fixed;
    });
    for_each_self_dual(SelfDualGrading::by_size, n, false, [&](const TriMatrix&) { ++self_dual; });
    std::string tag = "/size=" + std::to_string(n);
    rep.add("matrix_poset_matrix" + tag, "0 mismatches of " + std::to_string(total),
            std::to_string(bad_roundtrip) + " mismatches of " + std::to_string(total));
    rep.add("dual_involution" + tag, "0", std::to_string(bad_dual));
    rep.add("dual_statistics" + tag, "0", std::to_string(bad_stats));
    rep.add("dual_fixed_points" + tag, std::to_string(self_dual), std::to_string(fixed));
  }

  for (unsigned n = 1; n <= kOracleMaxPosetSize; ++n) {
    auto posets = enum_interval_order_posets(n);
    std::size_t bad_roundtrip = 0, bad_square = 0, bad_interval = 0, bad_levels = 0;
    for (const Poset& p : posets) {
      TriMatrix m = poset_to_matrix(p);
      if (canonical_form(matrix_to_poset(m)) != canonical_form(p)) ++bad_roundtrip;
      if (!(poset_to_matrix(dual_poset(p)) == dual(m))) ++bad_square;
      LevelAssignment la = level_assignment(p);
      for (unsigned a = 0; a < n; ++a) {
        if (la.uplevel[a] < la.level[a]) ++bad_levels;
        if ((la.level[a] == 1) != p.down_set(a).empty()) ++bad_levels;
        for (unsigned b = 0; b < n; ++b)
          if (p.less(a, b) != (la.uplevel[a] < la.level[b])) ++bad_interval;
      }
    }
    std::string tag = "/n=" + std::to_string(n);
    std::size_t fishburn = detail::count([&](const MatrixVisitor& v) { for_each_fishburn_by_size(n, false, v); });
    rep.add("interval_orders_vs_matrices" + tag, std::to_string(fishburn), std::to_string(posets.size()));
    rep.add("poset_matrix_poset" + tag, "0", std::to_string(bad_roundtrip));
    rep.add("duality_square" + tag, "0", std::to_string(bad_square));
    rep.add("interval_representation" + tag, "0", std::to_string(bad_interval));
    rep.add("levels" + tag, "0", std::to_string(bad_levels));
  }

  // The dimension grading and the size grading enumerate the same matrices.
  for (unsigned n = 1; n <= kOracleMaxDim; ++n) {
    std::size_t by_dim = 0;
    for (unsigned k = 1; k <= n; ++k)
      for_each_fishburn_dim(k, false, n, [&](const TriMatrix& m) { by_dim += m.total() == n; });
    std::size_t by_size = detail::count([&](const MatrixVisitor& v) { for_each_fishburn_by_size(n, false, v); });
    rep.add("dim_vs_size/n=" + std::to_string(n), std::to_string(by_size), std::to_string(by_dim));
  }
  return rep;
}

/// The three-way equality for self-dual matrices by reduced size and
/// row-Fishburn matrices, with its four-statistic refinement; general and
/// primitive matrices, 1 <= n, m <= 8.
inline Report verify_theorem_reduced() {
  Report rep{"theorem_reduced", {}};
  const unsigned N = kOracleMaxSize;
  using Key = std::tuple<std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t>;
  for (bool primitive : {false, true}) {
    std::string kind = primitive ? "primitive" : "general";
    for (unsigned n = 1; n <= N; ++n) {
      std::map<std::uint64_t, std::size_t> zero, nonzero, rows;
      std::map<Key, std::size_t> refined_sd, refined_rf;
      for_each_self_dual(SelfDualGrading::by_reduced_size, n, primitive, [&](const TriMatrix& m) {
        StatVector s = stats(m);
        if (s.dg + s.iso == 0) {
          ++zero[s.max + s.iso];
        } else {
          ++nonzero[s.max + s.iso];
          ++refined_sd[{s.rs, s.max, s.dg, s.iso}];
        }
      });
      for_each_row_fishburn_by_size(n, primitive, [&](const TriMatrix& m) {
        StatVector s = stats(m);
        ++rows[s.max + s.iso];
        ++refined_rf[{m.total(), s.max, s.min, s.iso}];
      });
      for (unsigned m = 1; m <= N; ++m) {
        std::string id = kind + "/n=" + std::to_string(n) + "/m=" + std::to_string(m);
        std::string r = std::to_string(rows[m]);
        std::string z = std::to_string(zero[m]), nz = std::to_string(nonzero[m]);
        rep.add(id, "diag_zero=" + r + " diag_nonzero=" + r + " row_fishburn=" + r,
                "diag_zero=" + z + " diag_nonzero=" + nz + " row_fishburn=" + r);
      }
      std::size_t diff = 0;
      for (const auto& [k, c] : refined_rf) diff += refined_sd.count(k) ? refined_sd[k] != c : 1;
      for (const auto& [k, c] : refined_sd) diff += refined_rf.count(k) ? 0 : 1;
      rep.add(kind + "/refined/n=" + std::to_string(n), "0 differing statistic classes of " + std::to_string(refined_rf.size()),
              std::to_string(diff) + " differing statistic classes of " + std::to_string(refined_rf.size()));
    }
  }
  return rep;
}

/// Series identities, all at total degree 12 unless noted.
inline Report verify_identity_pairs() {
  Report rep{"identity_pairs", {}};
  const unsigned D = 12;

  // Interval orders by size and minimal / maximal elements.
  TruncationProfile rs = TruncationProfile{}.with({Var::r, Var::s}, D);
  MultiSeries one_rs = MultiSeries::constant(1, rs);
  MultiSeries r = MultiSeries::variable(Var::r, rs), s = MultiSeries::variable(Var::s, rs), rsm = r * s;
  TruncationProfile gp_profile = TruncationProfile{}.with(Var::t, D).with({Var::v, Var::w, Var::x, Var::y}, D);
  MultiSeries gp = gp_closed(gp_profile);
  auto gp_at = [&](const MultiSeries& v, const MultiSeries& w, const MultiSeries& x, const MultiSeries& y) {
    return specialize(gp, {{Var::t, one_rs}, {Var::v, v}, {Var::w, w}, {Var::x, x}, {Var::y, y}}, rs);
  };
  MultiSeries eq2 = kitaev_remmel_series(rs), eq3 = conjecture_form_series(rs);
  rep.add("kitaev_remmel=conjecture_form", eq2, eq3);
  rep.add("conjecture_form=1+GP(1,rs,r,rs,r)", eq3, one_rs + gp_at(rsm, r, rsm, r));
  rep.add("general_full=GP(1,rs,r,rs,r)", gen_min_series(rs), gp_at(rsm, r, rsm, r));
  rep.add("gen_min2=GP(1,r,r,rs,rs)", gen_min2_series(rs), gp_at(r, r, rsm, rsm));

  // GP closed form against PP with every size variable made geometric.
  rep.add("GP=PP(geometric)", gp, gp_from_pp(pp_closed(gp_profile)));

  // Specializations to a single grading.
  TruncationProfile xs = TruncationProfile{}.with(Var::x, D);
  MultiSeries one_x = MultiSeries::constant(1, xs), x = MultiSeries::variable(Var::x, xs);
  rep.add("GP(1,x,x,x,x)=zagier-1", zagier_series(D) - one_x,
          specialize(gp, {{Var::t, one_x}, {Var::v, x}, {Var::w, x}, {Var::x, x}, {Var::y, x}}, xs));
  MultiSeries pp = pp_closed(gp_profile);
  rep.add("PP(1,x,x,x,x)=primitive_by_size", primitive_by_size_series(D),
          specialize(pp, {{Var::t, one_x}, {Var::v, x}, {Var::w, x}, {Var::x, x}, {Var::y, x}}, xs));
  {
    TruncationProfile ts = TruncationProfile{}.with(Var::t, D);
    MultiSeries one_t = MultiSeries::constant(1, ts);
    rep.add("PP(t,1,1,1,1)=primitive_by_magnitude", primitive_by_magnitude_series(D),
            specialize(pp_closed(ts), {{Var::v, one_t}, {Var::w, one_t}, {Var::x, one_t}, {Var::y, one_t}}, ts));
  }

  // Self-dual interval orders.
  {
    TruncationProfile p = TruncationProfile{}.with(Var::t, D).with({Var::v, Var::w, Var::x, Var::z}, D);
    MultiSeries sgp = sgp_closed(p);
    MultiSeries by_size = one_x + specialize(sgp, {{Var::t, one_x}, {Var::v, x}, {Var::w, x}, {Var::x, x}, {Var::z, x}}, xs);
    rep.add("1+SGP(1,x,x,x,x)=selfdual_by_size", by_size, selfdual_by_size_series(D));
    rep.add("selfdual_by_size=second_display", selfdual_by_size_series(D), selfdual_by_size_series_alt(D));
    MultiSeries spp = spp_closed(p);
    rep.add("1+SPP(1,x,x,x,x)=selfdual_primitive_by_size", selfdual_primitive_by_size_series(D),
            one_x + specialize(spp, {{Var::t, one_x}, {Var::v, x}, {Var::w, x}, {Var::x, x}, {Var::z, x}}, xs));
  }
  {
    const unsigned T = 8;
    TruncationProfile p = TruncationProfile{}.with(Var::t, T).with({Var::v, Var::w, Var::x, Var::z}, T);
    rep.add("SGP=explicit_display", sgp_closed(p), sgp_explicit(p));
  }
  {
    TruncationProfile ts = TruncationProfile{}.with(Var::t, D);
    MultiSeries one_t = MultiSeries::constant(1, ts);
    MultiSeries spp = spp_closed(ts);
    rep.add("SPP(t,1,1,1,1)=selfdual_primitive_by_magnitude", selfdual_primitive_by_magnitude_series(D),
            specialize(spp, {{Var::v, one_t}, {Var::w, one_t}, {Var::x, one_t}, {Var::z, one_t}}, ts));
    // Exactly half of the primitive self-dual k x k matrices have corner 1.
    TruncationProfile tx = TruncationProfile{}.with(Var::t, D);
    MultiSeries one_tx = MultiSeries::constant(1, tx), xm = MultiSeries::variable(Var::x, tx);
    MultiSeries marked = specialize(spp, {{Var::v, one_tx}, {Var::w, one_tx}, {Var::z, one_tx}}, tx);
    for (unsigned k = 2; k <= D; ++k) {
      Monomial tk = Monomial::of(Var::t, k);
      rep.add("half_corner/k=" + std::to_string(k), coeff(marked, tk), coeff(marked, tk * Monomial::of(Var::x)));
      mpz_class total = coeff(marked, tk) + coeff(marked, tk * Monomial::of(Var::x));
      rep.add("even_count/k=" + std::to_string(k), "0", mpz_class(total % 2).get_str());
    }
  }

  // Reduced size: S', S'_0, S'_1 and R.
  {
    const unsigned R = 10;
    TruncationProfile p = TruncationProfile{}.with({Var::v, Var::w, Var::x, Var::y, Var::z}, R);
    MultiSeries v = MultiSeries::variable(Var::v, p), w = MultiSeries::variable(Var::w, p);
    MultiSeries z = MultiSeries::variable(Var::z, p), xp = MultiSeries::variable(Var::x, p);
    MultiSeries one = MultiSeries::constant(1, p);
    MultiSeries rf = row_fishburn_series(p);
    MultiSeries s_all = selfdual_rs_series(DiagonalKind::all, p);
    MultiSeries s0 = selfdual_rs_series(DiagonalKind::diag_zero, p);
    MultiSeries s1 = selfdual_rs_series(DiagonalKind::diag_nonzero, p);
    rep.add("S'_1=R(v,w,x,z)", specialize(rf, {{Var::y, z}}, p), s1);
    rep.add("S'_0=R(v,w,v,w)", specialize(rf, {{Var::x, v}, {Var::y, w}}, p), s0);
    rep.add("S'_0=S'_1(v,w,v,w)", specialize(s1, {{Var::x, v}, {Var::z, w}}, p), s0);
    rep.add("S'=S'_0+S'_1", s_all, s0 + s1);
    rep.add("S'=(1+x)SP(1,v,w,z)-1", s_all, (one + xp) * sp_at_one(p) - one);
  }

  // s_m = 2 r_m and t_m = 2 q_m.
  {
    const unsigned M = 10;
    auto s_m = classic_sequence(FamilyKind::selfdual_reduced_primitive, M);
    auto r_m = classic_sequence(FamilyKind::row_fishburn_primitive, M);
    auto t_m = classic_sequence(FamilyKind::selfdual_reduced_general, M);
    auto q_m = classic_sequence(FamilyKind::row_fishburn_general, M);
    for (unsigned m = 1; m <= M; ++m) {
      rep.add("s=2r/m=" + std::to_string(m), mpz_class(2 * r_m.at(m)), s_m.at(m));
      rep.add("t=2q/m=" + std::to_string(m), mpz_class(2 * q_m.at(m)), t_m.at(m));
    }
  }
  return rep;
}

namespace detail {

// "n value" lines; '#' starts a comment.
inline std::map<unsigned, mpz_class> read_fixture(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open fixture " + path.string());
  std::map<unsigned, mpz_class> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    unsigned n;
    std::string value;
    if (!(ls >> n >> value)) throw error("malformed fixture line '" + line + "'");
    mpz_class v;
    if (v.set_str(value, 10) != 0) throw error("malformed fixture value '" + value + "'");
    out[n] = v;
  }
  if (out.empty()) throw error("empty fixture " + path.string());
  return out;
}

}  // namespace detail

/// Row-Fishburn counts against the bundled sequence files.
inline Report verify_oeis_fixture(const VerifyOptions& options = {}) {
  Report rep{"oeis_fixture", {}};
  auto check = [&](const std::string& name, FamilyKind kind) {
    std::map<unsigned, mpz_class> fixture;
    try {
      fixture = detail::read_fixture(options.fixture_dir / (name + ".txt"));
    } catch (const error& e) {
      rep.add(name + "/load", "readable fixture", e.what());
      return;
    }
    unsigned last = fixture.rbegin()->first;
    SequenceTable table = classic_sequence(kind, last);
    for (const auto& [n, v] : fixture) {
      if (n < 1) continue;
      rep.add(name + "/n=" + std::to_string(n), v, table.at(n));
    }
  };
  check("A179525", FamilyKind::row_fishburn_primitive);
  check("A158691", FamilyKind::row_fishburn_general);

  // The odd-power product series against q_m, independent of any file.
  const unsigned D = 30;
  auto q = classic_sequence(FamilyKind::row_fishburn_general, D);
  auto odd = coefficients(odd_power_product_series(D), Var::x, D);
  for (unsigned m = 1; m <= D; ++m) rep.add("odd_power_product/m=" + std::to_string(m), odd[m], q.at(m));
  return rep;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"closed_vs_recurrence", "oracle_vs_formula", "bijection_roundtrip",
                                              "theorem_reduced",      "identity_pairs",    "oeis_fixture"};
  return names;
}

inline Report verify_suite(const std::string& name, const VerifyOptions& options = {}) {
  if (name == "closed_vs_recurrence") return verify_closed_vs_recurrence();
  if (name == "oracle_vs_formula") return verify_oracle_vs_formula();
  if (name == "bijection_roundtrip") return verify_bijection_roundtrip();
  if (name == "theorem_reduced") return verify_theorem_reduced();
  if (name == "identity_pairs") return verify_identity_pairs();
  if (name == "oeis_fixture") return verify_oeis_fixture(options);
  if (name == "all") {
    Report all{"all", {}};
    for (const auto& n : suite_names()) all.merge(verify_suite(n, options));
    return all;
  }
  throw error("unknown suite '" + name + "'");
}

}  // namespace fishburn
