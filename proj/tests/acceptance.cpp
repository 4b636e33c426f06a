// Acceptance gate. Prints one PASS/FAIL line per criterion; exits nonzero
// if any criterion fails. An optional argument selects a single criterion.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "activetime/error.hpp"
#include "activetime/feasibility.hpp"
#include "activetime/generators.hpp"
#include "activetime/hardness.hpp"
#include "activetime/lp.hpp"
#include "activetime/oracle.hpp"
#include "activetime/pipeline.hpp"
#include "support/brute_force.hpp"

namespace at = activetime;
using at::Rational;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void fail(std::string why) {
    pass = false;
    if (failures.size() < 5) failures.push_back(std::move(why));
  }
};

const Rational kNineFifths(9, 5);

bool descendant_property(const at::FractionalSolution& s, const at::LaminarTree& tree) {
  for (int a = 0; a < tree.size(); ++a) {
    for (int d = a + 1; d < a + tree.node(a).subtree_size; ++d) {
      if (s.x[d] < tree.private_capacity(d) && s.x[a] != 0) return false;
    }
  }
  return true;
}

constexpr std::uint32_t kSeeds = 500;

Outcome approximation_bound() {
  Outcome out;
  Rational worst = 0;
  int fractional = 0;
  for (std::uint32_t seed = 1; seed <= kSeeds; ++seed) {
    const at::Instance inst = at::random_laminar(seed);
    const std::string tag = "seed " + std::to_string(seed);
    try {
      const at::PipelineResult r = at::run_pipeline(inst);
      const int opt = at::optimal_active_time(inst).opt;
      const Rational total(static_cast<long>(r.opening.total_open));
      if (!r.feasible()) out.fail(tag + ": rounded opening rejected by the flow check");
      if (total > kNineFifths * r.opening.lp_total) out.fail(tag + ": opened more than 9/5 LP");
      if (total > kNineFifths * opt) out.fail(tag + ": opened more than 9/5 OPT");
      if (r.feasible() && at::schedule_error(std::get<at::Schedule>(r.verdict), inst)) {
        out.fail(tag + ": extracted schedule is invalid");
      }
      fractional += at::is_integer(r.opening.lp_total) && r.opening.lp_total == opt ? 0 : 1;
      const Rational vs_opt = total / opt;
      if (vs_opt > worst) worst = vs_opt;
    } catch (const at::Error& e) {
      out.fail(tag + ": " + e.what());
    }
  }
  out.detail = std::to_string(kSeeds) + " instances (" + std::to_string(fractional) +
               " with LP below OPT), worst ALG/OPT " + at::to_string(worst);
  return out;
}

Outcome integrality_gap() {
  Outcome out;
  std::ostringstream detail;
  for (int g : {6, 8, 10}) {
    const at::Instance inst = at::gap_instance(g);
    const at::LaminarTree tree = at::LaminarTree::build(inst);
    const at::LpSolution lp = at::solve(at::build_node_lp(tree, inst).problem);
    const int opt = at::optimal_active_time(inst).opt;
    if (lp.status != at::LpStatus::Optimal || lp.value > g + 2) out.fail("g=" + std::to_string(g) + ": LP above g+2");
    if (2 * opt != 3 * g) out.fail("g=" + std::to_string(g) + ": OPT " + std::to_string(opt));
    const Rational gap = Rational(opt) / lp.value;
    if (gap < at::make_rational(3 * g, 2 * (g + 2))) out.fail("g=" + std::to_string(g) + ": gap too small");
    detail << "g=" << g << " LP " << at::to_string(lp.value) << " OPT " << opt << " gap "
           << at::to_string(gap) << "; ";
  }
  const at::CwLp cw = at::build_cw_lp(at::gap_instance(6));
  if (auto bad = cw.problem.first_violation(at::flatten(cw, at::gap_fractional_witness(6)))) {
    out.fail("g=6 witness violates " + *bad);
  }
  detail << "g=6 witness passes every CW constraint";
  out.detail = detail.str();
  return out;
}

Outcome feasibility_characterization() {
  Outcome out;
  std::vector<at::Instance> corpus{at::gap_instance(2),
                                   at::parse_instance("g 2\njob a 0 4 2\njob b 0 2 1\njob c 2 4 1"),
                                   at::parse_instance("g 1\njob a 0 8 3\njob b 1 3 2\njob c 5 6 1")};
  at::RandomLaminarParams params;
  params.max_jobs = 6;
  params.max_horizon = 8;
  for (std::uint32_t seed = 1; seed <= 300; ++seed) corpus.push_back(at::random_laminar(seed, params));

  long long openings = 0;
  long long infeasible = 0;
  for (std::size_t c = 0; c < corpus.size(); ++c) {
    const at::Instance& inst = corpus[c];
    const at::LaminarTree tree = at::LaminarTree::build(inst);
    at::testing::for_each_opening(tree, [&](const std::vector<int>& x) {
      ++openings;
      const bool flow = std::holds_alternative<at::Schedule>(at::check_opening(x, tree, inst));
      const bool subsets = !at::find_violating_subset(x, tree, inst, 10).has_value();
      if (!flow) ++infeasible;
      if (flow != subsets) out.fail("instance " + std::to_string(c) + ": verdicts disagree");
    });
  }
  out.detail = std::to_string(corpus.size()) + " instances, " + std::to_string(openings) +
               " openings (" + std::to_string(infeasible) + " infeasible)";
  return out;
}

Outcome push_down_lemma() {
  Outcome out;
  long long steps = 0;
  for (std::uint32_t seed = 1; seed <= kSeeds; ++seed) {
    const at::Instance inst = at::random_laminar(seed);
    const std::string tag = "seed " + std::to_string(seed);
    const at::LaminarTree tree = at::LaminarTree::build(inst);
    const at::NodeLp lp = at::build_node_lp(tree, inst);
    const at::FractionalSolution before = lp.extract(at::solve(lp.problem));
    try {
      const at::TransformedSolution ts = at::push_down(lp, tree, before);
      steps += ts.steps;
      if (ts.solution.total() != before.total()) out.fail(tag + ": objective changed");
      if (auto bad = at::node_lp_violation(lp, tree, ts.solution)) out.fail(tag + ": violates " + *bad);
      if (!descendant_property(ts.solution, tree)) out.fail(tag + ": descendant property fails");
      const at::TransformedSolution again = at::push_down(lp, tree, ts.solution);
      if (!(again.solution == ts.solution) || again.steps != 0) out.fail(tag + ": not idempotent");
    } catch (const at::Error& e) {
      out.fail(tag + ": " + e.what());
    }
  }
  out.detail = std::to_string(kSeeds) + " instances, " + std::to_string(steps) + " transfer steps";
  return out;
}

Outcome reduction_chain() {
  Outcome out;
  long long cases = 0;
  long long yes = 0;
  long long published_rejected = 0;
  long long published_wrong = 0;
  at::OracleLimits limits;
  limits.max_horizon = 64;
  for (int d = 1; d <= 4; ++d) {
    std::vector<std::vector<int>> catalog;
    for (int mask = 1; mask < (1 << d); ++mask) {
      std::vector<int> set(d);
      for (int e = 0; e < d; ++e) set[e] = mask >> e & 1;
      catalog.push_back(set);
    }
    const int size = static_cast<int>(catalog.size());
    for (int pick = 1; pick < (1 << size); ++pick) {
      const int n = __builtin_popcount(pick);
      if (n > 4) continue;
      std::vector<std::vector<int>> sets;
      for (int s = 0; s < size; ++s) {
        if (pick >> s & 1) sets.push_back(catalog[s]);
      }
      for (int k = 1; k <= std::min(3, n); ++k) {
        ++cases;
        const at::SetCoverInstance sc{d, k, sets};
        const bool cover = at::testing::set_cover_exhaustive(sc);
        const at::PscInstance psc = at::setcover_to_psc(sc);
        const bool psc_yes = at::psc_exhaustive(psc).has_value();
        const at::ReducedInstance red = at::psc_to_active_time(psc);
        bool active_yes = false;
        try {
          active_yes = at::optimal_active_time(red.instance, limits).opt <= red.baseline_open + k;
        } catch (const at::Error& e) {
          if (e.code() != at::ErrorCode::Infeasible) throw;
        }
        yes += cover ? 1 : 0;
        // The slope-1 transform, for the record only.
        try {
          const at::PscInstance published = at::setcover_to_psc(sc, at::TransformSlope::Published);
          published_wrong += at::psc_exhaustive(published).has_value() != cover ? 1 : 0;
        } catch (const at::Error&) {
          ++published_rejected;
        }
        if (cover != psc_yes || psc_yes != active_yes) {
          std::ostringstream why;
          why << "d=" << d << " k=" << k << " sets=" << pick << ": cover " << cover << " psc "
              << psc_yes << " active " << active_yes;
          out.fail(why.str());
        }
      }
    }
  }
  out.detail = std::to_string(cases) + " set-cover instances (" + std::to_string(yes) +
               " yes); slope-1 transform: " + std::to_string(published_rejected) +
               " fail its range check, " + std::to_string(published_wrong) + " give a wrong PSC answer";
  return out;
}

Outcome packing_lemma() {
  Outcome out;
  long long cases = 0;
  for (int dim = 1; dim <= 3; ++dim) {
    for (const std::vector<int>& e : at::testing::non_increasing_sequences(dim, 0, 3)) {
      for (int jobs = 0; jobs <= dim; ++jobs) {
        for (const std::vector<int>& l : at::testing::non_increasing_sequences(jobs, 0, 3)) {
          ++cases;
          const at::Configuration config{e, l};
          const bool fits = at::config_fits(config);
          const bool greedy = at::pack_greedy(config, at::staircase_layout(e)).has_value();
          const bool brute = at::testing::brute_force_packing(at::testing::staircase_idle(e), l);
          if (fits != greedy || greedy != brute) {
            std::ostringstream why;
            why << "e=(";
            for (int x : e) why << x << ' ';
            why << ") l=(";
            for (int x : l) why << x << ' ';
            why << "): fits " << fits << " greedy " << greedy << " brute " << brute;
            out.fail(why.str());
          }
        }
      }
    }
  }
  out.detail = std::to_string(cases) + " configurations";
  return out;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "approximation bound 9/5", approximation_bound},
      {2, "integrality gap", integrality_gap},
      {3, "flow verdict equals subset enumeration", feasibility_characterization},
      {4, "push-down lemma", push_down_lemma},
      {5, "reduction chain", reduction_chain},
      {6, "packing lemma", packing_lemma},
  };
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  bool all_pass = true;
  for (const Criterion& c : criteria) {
    if (only != 0 && only != c.id) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("uncaught: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %d (%s): %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs);
    for (const std::string& f : o.failures) std::printf("    %s\n", f.c_str());
    all_pass = all_pass && o.pass;
  }
  if (only == 0 || only == 7) {
    std::printf("INFO criterion 7: NP-hardness is covered only through reduction correctness "
                "(criterion 5)\n");
  }
  return all_pass ? 0 : 1;
}
