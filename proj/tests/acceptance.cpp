// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "luinv/census.hpp"
#include "luinv/combinatorics.hpp"
#include "luinv/dimensions.hpp"
#include "luinv/errors.hpp"
#include "luinv/higher.hpp"
#include "luinv/invariants.hpp"
#include "luinv/series.hpp"
#include "luinv/states.hpp"

using namespace luinv;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

template <class T>
std::string str(const T& x) {
  std::ostringstream s;
  s << x;
  return s.str();
}

PureState ghz(int k) {
  std::vector<Complex> c(std::size_t{1} << k, 0.0);
  c.front() = c.back() = 1 / std::sqrt(2.0);
  return PureState(std::vector<int>(static_cast<std::size_t>(k), 2), c);
}

PureState bell() { return ghz(2); }

Outcome degree_four_count() {
  Outcome o;
  for (int k = 1; k <= 8; ++k)
    o.require(stable_dimension(k, 2) == (Integer(1) << (k - 1)), "d_{" + str(k) + ",2} = " + str(stable_dimension(k, 2)));
  return o;
}

Outcome formula_equivalence() {
  Outcome o;
  for (int k = 1; k <= 5; ++k)
    for (int m = 0; m <= 6; ++m)
      o.require(stable_dimension(k, m) == stable_dimension_via_characters(k, m),
                "k=" + str(k) + " m=" + str(m));
  return o;
}

Outcome orbit_oracle() {
  Outcome o;
  for (int k = 1; k <= 4; ++k)
    for (int m = 0; m <= (k == 4 ? 4 : 5); ++m) {
      const auto orbits = conjugation_orbit_count(k - 1, m);
      o.require(Integer(orbits) == stable_dimension(k, m),
                "k=" + str(k) + " m=" + str(m) + ": " + str(orbits) + " orbits vs d=" + str(stable_dimension(k, m)));
    }
  o.require(conjugation_orbit_count(2, 3) == 11, "d_{3,3} anchor");
  return o;
}

Outcome bipartite() {
  Outcome o;
  const std::vector<int> p{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int m = 0; m <= 10; ++m)
    o.require(stable_dimension(2, m) == p[static_cast<std::size_t>(m)] &&
                  stable_dimension(2, m) == partitions_of(m).size(),
              "m=" + str(m));
  return o;
}

Outcome subgroup_census() {
  Outcome o;
  for (auto [rank, max_d] : {std::pair{2, 4}, std::pair{3, 3}})
    for (int d = 1; d <= max_d; ++d) {
      const Integer u = free_generator_count(rank + 1, d);
      const auto c = count_subgroup_classes(rank, d);
      o.require(u == c, "rank " + str(rank) + " d=" + str(d) + ": series " + str(u) + " vs census " + str(c));
    }
  for (int k = 2; k <= 6; ++k) {
    try {
      const GeneratorCounts g = euler_exponents(hilbert_series(k, 8));
      for (const auto& u : g.u) o.require(u >= 0, "negative u_d for k=" + str(k));
    } catch (const InvariantViolation& e) {
      o.require(false, e.what());
    }
  }
  const GeneratorCounts f1 = euler_exponents(hilbert_series(2, 10));
  for (int d = 1; d <= 10; ++d) o.require(f1.at(d) == 1, "u_" + str(d) + "(F_1) = " + str(f1.at(d)));
  return o;
}

Outcome restricted_oracle() {
  Outcome o;
  for (const std::vector<int>& dims : {std::vector<int>{2, 2}, std::vector<int>{2, 3}, std::vector<int>{2, 2, 2}})
    for (int m = 1; m <= 3; ++m) {
      const auto rank = invariant_space_rank(dims, m, default_rank_samples(dims.size(), m), 20240601);
      const Integer expect = restricted_dimension(dims, m);
      o.require(Integer(rank) == expect, "dims size " + str(dims.size()) + " first " + str(dims[0]) + "/" +
                                             str(dims[1]) + " m=" + str(m) + ": rank " + str(rank) +
                                             " vs " + str(expect));
    }
  return o;
}

double transform_residual(const PureState& psi) {
  const InvariantVector iv = invariant_I_vector(psi), jv = invariant_J_vector(psi);
  const InvariantVector jp = j_from_i(iv), ip = i_from_j(jv);
  double r = 0;
  for (std::uint32_t s = 0; s < iv.size(); ++s) r = std::max({r, std::abs(jp[s] - jv[s]), std::abs(ip[s] - iv[s])});
  return r;
}

Outcome ij_transform() {
  Outcome o;
  double worst = 0;
  for (const std::vector<int>& dims : {std::vector<int>{2, 2}, std::vector<int>{3, 3}, std::vector<int>{2, 2, 2}})
    for (std::uint64_t seed = 0; seed < 100; ++seed) worst = std::max(worst, transform_residual(random_pure_state(dims, seed)));
  o.require(worst < 1e-9, "max residual " + str(worst));
  const InvariantVector i = invariant_I_vector(bell()), j = invariant_J_vector(bell());
  const std::vector<double> ei{0.75, 0, 0, 0.25}, ej{1, 0.5, 0.5, 1};
  for (std::uint32_t s = 0; s < 4; ++s) {
    o.require(std::abs(i[s] - ei[s]) < 1e-9, "Bell I_" + SubsetMask(2, s).to_string() + " = " + str(i[s]));
    o.require(std::abs(j[s] - ej[s]) < 1e-9, "Bell J_" + SubsetMask(2, s).to_string() + " = " + str(j[s]));
  }
  if (o.ok) o.detail = "max residual " + str(worst);
  return o;
}

Outcome structural_nulls() {
  Outcome o;
  for (const std::vector<int>& dims :
       {std::vector<int>{2, 2}, std::vector<int>{2, 3}, std::vector<int>{2, 2, 2}, std::vector<int>{3, 2, 2, 2}})
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      const PureState psi = random_pure_state(dims, 1000 + seed);
      const InvariantVector iv = invariant_I_vector(psi);
      double total = 0;
      for (std::uint32_t s = 0; s < iv.size(); ++s) {
        total += iv[s];
        if (__builtin_popcount(s) % 2) o.require(std::abs(iv[s]) < 1e-12, "odd I = " + str(iv[s]));
      }
      o.require(std::abs(total - 1) < 1e-9, "sum I = " + str(total));
    }
  return o;
}

void enumerate_pairs(const std::vector<int>& dims, const SubsetMask& a, std::vector<IndexPair>& cur,
                     const std::function<void(const std::vector<IndexPair>&)>& f) {
  const std::size_t j = cur.size();
  if (j == dims.size()) return f(cur);
  for (int lo = 0; lo < dims[j]; ++lo)
    for (int hi = lo; hi < dims[j]; ++hi) {
      if (lo == hi && a.contains(static_cast<int>(j) + 1)) continue;
      cur.push_back({lo, hi});
      enumerate_pairs(dims, a, cur, f);
      cur.pop_back();
    }
}

Outcome norm_law() {
  Outcome o;
  std::size_t checked = 0;
  for (const std::vector<int>& dims : {std::vector<int>{2, 2}, std::vector<int>{2, 3, 2}}) {
    const int k = static_cast<int>(dims.size());
    for (std::uint32_t s = 0; s < (1u << k); ++s) {
      const SubsetMask a(k, s);
      if (a.size() % 2) continue;
      std::vector<IndexPair> cur;
      enumerate_pairs(dims, a, cur, [&](const std::vector<IndexPair>& pairs) {
        int c = 0;
        for (const auto& p : pairs) c += p.lo == p.hi;
        const double n = basis_vector_m2(dims, a, pairs).norm2();
        o.require(std::abs(n - std::ldexp(1.0, k + c)) < 1e-10, "norm^2 " + str(n) + " vs 2^" + str(k + c));
        ++checked;
      });
    }
  }
  if (o.ok) o.detail = str(checked) + " vectors";
  return o;
}

Outcome purification() {
  Outcome o;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::vector<int> dims = seed % 2 ? std::vector<int>{2, 3} : std::vector<int>{2, 2, 2};
    const int k = static_cast<int>(dims.size());
    const DensityMatrix rho = random_density_matrix(dims, 1 + static_cast<int>(seed % 5), 500 + seed);
    const PureState psi = purify(rho);
    const SubsetMask env = SubsetMask::from_members(k + 1, {k + 1});
    const DensityMatrix back = partial_trace(projector(psi), env);
    double diff = 0;
    for (std::size_t i = 0; i < back.entries().size(); ++i) diff = std::max(diff, std::abs(back.entries()[i] - rho.entries()[i]));
    o.require(diff < 1e-10, "seed " + str(seed) + " roundtrip error " + str(diff));

    // J_A(rho) = J_{A+env}(psi), directly and through the I-vector of psi.
    const InvariantVector jr = invariant_J_vector(rho);
    const InvariantVector jp = invariant_J_vector(psi);
    const InvariantVector jpi = j_from_i(invariant_I_vector(psi));
    for (std::uint32_t s = 0; s < jr.size(); ++s) {
      const std::uint32_t lifted = s | env.bits();
      o.require(std::abs(jr[s] - jp[lifted]) < 1e-9, "J mismatch (direct)");
      o.require(std::abs(jr[s] - jpi[lifted]) < 1e-9, "J mismatch (via I)");
    }
  }
  return o;
}

Outcome entanglement_measures() {
  Outcome o;
  const double r = 1 / std::sqrt(5.0);
  const PureState prod({2, 2, 2}, {0, 0, 0, 0, r, 2 * r, 0, 0});
  o.require(std::abs(meyer_wallach(prod)) < 1e-9, "Q(product) = " + str(meyer_wallach(prod)));
  for (int k = 2; k <= 5; ++k) o.require(std::abs(meyer_wallach(ghz(k)) - 1) < 1e-9, "Q(GHZ_" + str(k) + ")");
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto f = meyer_wallach_forms(random_pure_state({2, 3, 2}, seed));
    o.require(std::abs(f.from_j - f.from_i) < 1e-9, "J-form " + str(f.from_j) + " vs I-form " + str(f.from_i));
  }
  const double e = eta(projector(bell()), SubsetMask::from_members(2, {1}));
  o.require(std::abs(e - 1) < 1e-9, "eta(Bell) = " + str(e));
  return o;
}

Outcome higher_order() {
  Outcome o;
  std::uint64_t seed = 0;
  for (const std::vector<int>& dims : {std::vector<int>{2}, std::vector<int>{3}, std::vector<int>{2, 2},
                                       std::vector<int>{2, 3}, std::vector<int>{3, 3}, std::vector<int>{2, 2, 2},
                                       std::vector<int>{2, 3, 3}, std::vector<int>{3, 3, 3}}) {
    const PureState psi = random_pure_state(dims, 900 + seed++);
    const int k = psi.subsystems();
    for (std::uint32_t s = 0; s < (1u << k); ++s) {
      const SubsetMask a(k, s);
      if (a.size() % 2) continue;
      const double h = higher_invariant(psi, a, 2), i = invariant_I(psi, a);
      o.require(std::abs(h - i) < 1e-9, "m=2 " + a.to_string() + ": " + str(h) + " vs " + str(i));
    }
  }

  const std::vector<int> d33{3, 3};
  std::vector<SymmetricTensor> vs;
  for (std::uint32_t s : {0u, 3u})
    for (const auto& rows : admissible_tables(d33, SubsetMask(2, s), 3)) vs.push_back(higher_basis_vector(d33, SubsetMask(2, s), 3, rows));
  double worst = 0;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) worst = std::max(worst, std::abs(vs[i].inner(vs[j])));
  o.require(worst < 1e-12, "max off-diagonal inner product " + str(worst));

  for (std::uint64_t sd = 0; sd < 10; ++sd) {
    const PureState psi = random_pure_state(d33, 950 + sd);
    const double total = higher_invariant(psi, SubsetMask(2, 0), 3) + higher_invariant(psi, SubsetMask(2, 3), 3);
    const double n6 = std::pow(psi.norm2(), 3);
    o.require(total <= n6 + 1e-9, "sum " + str(total) + " exceeds |psi|^6 " + str(n6));
  }
  if (o.ok) o.detail = str(vs.size()) + " degree-3 basis vectors";
  return o;
}

Outcome mixed_identity() {
  Outcome o;
  for (int k = 1; k <= 3; ++k)
    for (int m = 0; m <= 4; ++m) {
      const Integer orbits(conjugation_orbit_count(k, m));
      o.require(orbits == mixed_dimension(k, m) && mixed_dimension(k, m) == stable_dimension(k + 1, m),
                "k=" + str(k) + " m=" + str(m));
    }
  return o;
}

struct Criterion {
  const char* name;
  double limit_seconds;  // 0 means no runtime limit
  Outcome (*run)();
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"degree-4 count d_{k,2} = 2^{k-1}, k <= 8", 1, degree_four_count},
      {"group sum equals character formula, k <= 5, m <= 6", 30, formula_equivalence},
      {"conjugation orbits equal stable dimension", 120, orbit_oracle},
      {"bipartite dimension equals p(m), m <= 10", 0, bipartite},
      {"series exponents equal subgroup census", 180, subgroup_census},
      {"rank oracle equals restricted dimension", 300, restricted_oracle},
      {"I/J transform residual and Bell anchor", 0, ij_transform},
      {"odd-subset nulls and unit sum", 0, structural_nulls},
      {"basis vector norm law", 0, norm_law},
      {"purification roundtrip and J agreement", 0, purification},
      {"Meyer-Wallach and eta anchors", 0, entanglement_measures},
      {"higher-order invariants", 180, higher_order},
      {"mixed-state dimension identity", 0, mixed_identity},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) o.require(false, "runtime " + str(secs) + " s over limit");
    failures += !o.ok;
    std::printf("%s  %2zu  %-52s %8.3f s%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, c.name, secs,
                o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures ? 1 : 0;
}
