// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All comparisons are exact; each criterion has a pinned
// wall-clock limit.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "torbiv/degeneracy.hpp"

using namespace torbiv;
using namespace torbiv::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> body;
};

using Index = std::vector<std::size_t>;

bool subset(const Index &a, const Index &b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string counts(std::size_t checked, std::size_t failures, const std::string &what) {
  std::ostringstream os;
  os << checked << " " << what << ", " << failures << " failure(s)";
  return os.str();
}

// Sweep instances shared by the certification and semicontinuity criteria.
struct Instance {
  std::size_t fan;
  std::uint64_t seed;
};

const std::vector<Fan> &gallery() {
  static const std::vector<Fan> fans = sweep_gallery();
  return fans;
}

std::vector<Instance> sweep_instances() {
  std::vector<Instance> out;
  for (std::size_t f = 0; f < gallery().size(); ++f)
    for (std::uint64_t r = 0; r < 100; ++r)
      out.push_back({f, 1000 * f + r});
  return out;
}

Outcome cn_emptiness() {
  std::size_t fields = 0, failures = 0;
  for (std::size_t n = 2; n <= 6; ++n) {
    const Fan f = builtin_fan("affine_space", {long(n)});
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        Covector alpha(n, Integer(0));
        alpha[i] = alpha[j] = -1;
        RatMatrix a(n, n);
        a(i, j) = 1;
        a(j, i) = -1;
        const Stratification s = stratify(EquivariantBivector(alpha, a), f);
        bool ok = s.by_bound.at(0).empty() && s.ranks.size() == (std::size_t{1} << n);
        for (const auto &r : s.ranks)
          ok = ok && r.rank == 2;
        ++fields;
        failures += !ok;
      }
  }
  return {failures == 0, counts(fields, failures, "fields")};
}

Outcome p2_invariant() {
  const Fan p2 = builtin_fan("projective_space", {2});
  const Stratification s =
      stratify(EquivariantBivector(Covector(2, Integer(0)), antisymmetric(2, {{{0, 1}, 1}})), p2);
  std::set<Index> zero, minimal;
  for (const auto &t : s.by_bound.at(0))
    zero.insert(t.cone);
  for (const auto &t : s.minimal.at(0))
    minimal.insert(t.cone);
  const auto comps = components(s, 0);
  const bool ok = zero == std::set<Index>{{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}} &&
                  minimal == std::set<Index>{{0}, {1}, {2}} && comps.size() == 3 &&
                  std::all_of(comps.begin(), comps.end(), [](const Component &c) { return c.dim == 1; }) &&
                  s.by_bound.at(2).size() == 7;
  return {ok, "bound 0: " + std::to_string(zero.size()) + " orbits, " +
                  std::to_string(comps.size()) + " components of dim 1; bound 2: " +
                  std::to_string(s.by_bound.at(2).size()) + " orbits"};
}

Outcome certification_sweep() {
  std::size_t done = 0, failures = 0;
  for (const Instance &in : sweep_instances()) {
    const Fan &f = gallery()[in.fan];
    try {
      failures += !certify_main_theorem(sample_regular_bivector(f, in.seed), f).passed();
    } catch (const Error &e) {
      std::fprintf(stderr, "  %s seed %llu: %s\n", f.name().c_str(),
                   static_cast<unsigned long long>(in.seed), e.what());
      ++failures;
    }
    ++done;
  }
  return {failures == 0, counts(done, failures, "certificates over " +
                                                    std::to_string(gallery().size()) + " fans")};
}

Outcome chart_independence() {
  Rng rng(2024);
  std::vector<std::size_t> eligible;
  for (std::size_t i = 0; i < gallery().size(); ++i)
    if (gallery()[i].num_max_cones() >= 2)
      eligible.push_back(i);
  std::size_t triples = 0, failures = 0;
  while (triples < 1000) {
    const Fan &f = gallery()[eligible[uniform(rng, 0, long(eligible.size()) - 1)]];
    const auto seed = static_cast<std::uint64_t>(uniform(rng, 0, 1'000'000));
    const EquivariantBivector bv = sample_regular_bivector(f, seed);
    std::vector<OrbitRef> shared;
    for (const auto &t : enumerate_cones(f))
      if (containing_charts(t, f).size() >= 2)
        shared.push_back(t);
    const OrbitRef &t = shared[uniform(rng, 0, long(shared.size()) - 1)];
    try {
      const std::size_t r = rank_on_orbit(bv, f, t);
      bool ok = true;
      for (std::size_t k : containing_charts(t, f))
        ok = ok && rank_on_orbit(bv, f, t, k) == r;
      ok = ok && numeric_rank_oracle(bv, f, t, {seed, seed + 1, seed + 2}) == r;
      failures += !ok;
    } catch (const Error &e) {
      std::fprintf(stderr, "  %s %s: %s\n", f.name().c_str(), to_string(t).c_str(), e.what());
      ++failures;
    }
    ++triples;
  }
  return {failures == 0, counts(triples, failures, "triples")};
}

Outcome transition_algebra() {
  Rng rng(500);
  std::size_t failures = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, 6));
    const EquivariantBivector bv = random_bivector(rng, n);
    const IntMatrix r1 = random_unimodular(rng, n, 16), r2 = random_unimodular(rng, n, 16);
    const ChartPresentation p1 = transition(bv, r1);
    const ChartPresentation back = transition(as_bivector(p1), unimodular_inverse(r1));
    const ChartPresentation direct = transition(bv, r2);
    const ChartPresentation chained = transition(as_bivector(p1), unimodular_inverse(r1) * r2);
    const bool ok = back.b == bv.a() && back.beta == bv.alpha() && chained.b == direct.b &&
                    chained.beta == direct.beta && rational_rank(p1.b) == rational_rank(bv.a());
    failures += !ok;
  }
  return {failures == 0, counts(500, failures, "unimodular matrices")};
}

Outcome poisson_criterion() {
  Rng rng(6);
  std::size_t failures = 0;
  // (a) invariant fields and (b) dimension three
  for (int t = 0; t < 100; ++t) {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, 8));
    failures += !poisson_check(EquivariantBivector(Covector(n, Integer(0)), random_antisymmetric(rng, n))).poisson;
    failures += !poisson_check(EquivariantBivector(random_covector(rng, 3, -4, 4), random_antisymmetric(rng, 3))).poisson;
  }
  // (c) the four-dimensional counterexample
  const PoissonResult c = poisson_check(EquivariantBivector(
      lattice_vector({1, 0, 0, 0}), antisymmetric(4, {{{0, 1}, 1}, {{2, 3}, 1}})));
  const bool counter_ok = !c.poisson && c.triple == std::array<std::size_t, 3>{1, 2, 3} && c.value == 1;
  failures += !counter_ok;
  // (d) agreement with the symbolic bracket
  std::size_t agree = 0, positive = 0;
  for (int t = 0; t < 200; ++t) {
    const auto n = static_cast<std::size_t>(uniform(rng, 2, 5));
    const EquivariantBivector bv = random_bivector(rng, n);
    const bool closed = poisson_check(bv).poisson;
    positive += closed;
    agree += closed == schouten_vanishes(bv);
  }
  failures += 200 - agree;
  std::ostringstream os;
  os << "(a,b) 200 vacuous cases, (c) triple (2,3,4) value " << c.value.get_str() << ", (d) "
     << agree << "/200 agree (" << positive << " Poisson)";
  return {failures == 0, os.str()};
}

Outcome completeness() {
  Rng rng(7);
  std::size_t failures = 0;
  for (const Fan &f : gallery()) {
    std::vector<HRep> hs;
    for (std::size_t k = 0; k < f.num_max_cones(); ++k)
      hs.push_back(h_representation(f.max_cone(k)));
    bool covered = true;
    for (int s = 0; s < 1000; ++s) {
      LatticeVector x(f.dim());
      for (auto &c : x)
        c = uniform(rng, -50, 50);
      covered = covered && std::any_of(hs.begin(), hs.end(), [&](const HRep &h) { return h.contains(x); });
    }
    failures += covered != is_complete(f);
  }
  return {failures == 0, counts(gallery().size(), failures, "fans x 1000 directions")};
}

Outcome semicontinuity() {
  std::size_t instances = 0, violations = 0;
  for (const Instance &in : sweep_instances()) {
    const Fan &f = gallery()[in.fan];
    const Stratification s = stratify(sample_regular_bivector(f, in.seed), f);
    for (const auto &[bound, set] : s.by_bound) {
      std::set<Index> cones;
      for (const auto &t : set)
        cones.insert(t.cone);
      for (const auto &t : set)
        for (const auto &u : s.ranks)
          if (subset(t.cone, u.orbit.cone) && !cones.count(u.orbit.cone))
            ++violations;
    }
    ++instances;
  }
  return {violations == 0, std::to_string(instances) + " stratifications, " +
                               std::to_string(violations) + " violation(s)"};
}

} // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"C1", "affine space constant fields have empty X_{<=0}", 1.0, cn_emptiness},
      {"C2", "P2 invariant field stratification", 1.0, p2_invariant},
      {"C3", "degeneracy theorem certification sweep", 60.0, certification_sweep},
      {"C4", "rank is chart independent and matches sampled points", 60.0, chart_independence},
      {"C5", "transition round trip, cocycle and rank", 30.0, transition_algebra},
      {"C6", "Poisson criterion", 30.0, poisson_criterion},
      {"C7", "completeness matches Monte Carlo membership", 30.0, completeness},
      {"C8", "bound sets are upward closed", 60.0, semicontinuity},
  };
  int failed = 0;
  for (const Criterion &c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.body();
    } catch (const std::exception &e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.limit_seconds;
    const bool pass = out.ok && in_time;
    failed += !pass;
    std::printf("%s %s %s: %s [%.2f s, limit %.0f s%s]\n", pass ? "PASS" : "FAIL", c.id.c_str(),
                c.name.c_str(), out.detail.c_str(), secs, c.limit_seconds,
                in_time ? "" : ", exceeded");
    std::fflush(stdout);
  }
  std::printf("%s: %zu/%zu criteria passed\n", failed ? "FAIL" : "PASS",
              criteria.size() - failed, criteria.size());
  return failed ? 1 : 0;
}
