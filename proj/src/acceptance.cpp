#include <algorithm>
#include <chrono>
#include <cstdio>
#include <set>
#include <thread>

#include "dicot/acceptance.hpp"
#include "dicot/enumerate.hpp"
#include "dicot/notation.hpp"

namespace dicot::acceptance {
namespace {

constexpr std::size_t kMaxReportedFailures = 5;

class Recorder {
 public:
  Recorder(std::string id, std::string name) : start_(std::chrono::steady_clock::now()) {
    result_.id = std::move(id);
    result_.name = std::move(name);
  }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++result_.cases;
    if (ok) return;
    ++result_.violations;
    if (result_.failures.size() < kMaxReportedFailures) result_.failures.push_back(describe());
  }

  void merge(const Recorder& other) {
    result_.cases += other.result_.cases;
    result_.violations += other.result_.violations;
    for (const auto& f : other.result_.failures) {
      if (result_.failures.size() < kMaxReportedFailures) result_.failures.push_back(f);
    }
  }

  CriterionResult finish() {
    result_.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return result_;
  }

 private:
  CriterionResult result_;
  std::chrono::steady_clock::time_point start_;
};

std::vector<FormId> day_two(Store& store) { return enumerate_dicots(store, 2); }

std::vector<FormId> day_three_sample(Store& store, std::size_t count) {
  return enumerate_dicots(store, EnumerateOptions{.max_birthday = 3, .limit = count,
                                                  .exact_birthday = true});
}

std::vector<FormId> population(Store& store, std::size_t samples) {
  std::vector<FormId> all = day_two(store);
  const std::vector<FormId> sample = day_three_sample(store, samples);
  all.insert(all.end(), sample.begin(), sample.end());
  return all;
}

std::string show(const Store& store, FormId g) { return print(store, g); }

}  // namespace

Config Config::for_level(Level level) {
  Config config;
  if (level == Level::Quick) {
    config.theorem_samples = 1000;
    config.property_samples = 600;
    config.lemma_samples = 20;
  } else {
    config.property_samples = 5000;
    config.threads = std::max(1u, std::thread::hardware_concurrency());
    // Larger than the 1,046,520 forms of birthday 3: sampling lists them all.
    if (level == Level::Exhaustive) config.theorem_samples = std::size_t{1} << 21;
  }
  return config;
}

CriterionResult paper_regression(Engine& e) {
  Recorder rec("1", "named example games");
  Store& s = e.store;
  const FormId zero = s.zero();
  const auto minus = [&](FormId g) { return s.sum(g, s.conjugate(g)); };

  const FormId star_star = parse(s, "*+*");
  const FormId star = s.star();
  rec.check(star_star == s.intern({star}, {star}), [] { return "*+* is not the form {*|*}"; });
  rec.check(e.order.compare(star_star, zero) == OrderResult::EQ, [] { return "*+* != 0"; });

  const FormId nim2_twice = parse(s, "*2+*2");
  rec.check(e.outcomes.outcome(nim2_twice) == Outcome::P, [] { return "o(*2+*2) != P"; });
  rec.check(!e.order.eq_zero(nim2_twice), [] { return "*2+*2 = 0"; });

  const FormId g = parse(s, "{0|*2}");
  rec.check(e.canon.is_canonical(g), [] { return "{0|*2} is not canonical"; });
  rec.check(e.outcomes.outcome(minus(g)) == Outcome::N, [] { return "o(G-G) != N for G={0|*2}"; });
  rec.check(!e.order.eq_zero(minus(g)), [] { return "G-G = 0 for G={0|*2}"; });
  rec.check(!e.invert.is_invertible(g).verdict, [] { return "{0|*2} reported invertible"; });

  const FormId h = parse(s, "{0,*|{*|0,*},{0|0,*}}");
  const FormId gh = s.intern({zero}, {h});
  const auto followers = s.followers(gh);
  rec.check(e.canon.is_canonical(h), [] { return "H is not canonical"; });
  rec.check(!std::ranges::binary_search(followers, s.nimber(2)),
            [] { return "*2 is a follower of {0|H}"; });
  rec.check(e.outcomes.outcome(minus(gh)) == Outcome::N, [] { return "o(G-G) != N for G={0|H}"; });
  rec.check(!e.order.eq_zero(minus(gh)), [] { return "G-G = 0 for G={0|H}"; });

  const FormId observed = parse(s, "{0,*,*2|0}");
  rec.check(e.canon.canonical(observed) == parse(s, "{0,*|0}"), [&] {
    return "canonical({0,*,*2|0}) = " + show(s, e.canon.canonical(observed));
  });
  rec.check(e.invert.is_invertible(observed).verdict,
            [] { return "{0,*,*2|0} reported non-invertible"; });
  return rec.finish();
}

CriterionResult invertibility_equivalence(Engine& e, const Config& config) {
  Recorder rec("2", "invertibility criterion agrees with g + (-g) = 0");
  const std::vector<FormId> forms = population(e.store, config.theorem_samples);

  const unsigned threads = std::max(1u, config.threads);
  std::vector<Recorder> partial(threads, Recorder("2", ""));
  const auto work = [&](unsigned t) {
    for (std::size_t i = t; i < forms.size(); i += threads) {
      const FormId g = forms[i];
      const InvertReport report = e.invert.is_invertible(g);
      const bool oracle = e.invert.oracle_invertible(report.canonical);
      partial[t].check(report.verdict == oracle, [&] {
        return show(e.store, g) + ": criterion says " + (report.verdict ? "true" : "false") +
               ", oracle says " + (oracle ? "true" : "false");
      });
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  for (const Recorder& r : partial) rec.merge(r);
  return rec.finish();
}

CriterionResult invertibility_corollaries(Engine& e, const Config& config) {
  Recorder rec("3", "corollaries on canonical forms");
  Store& s = e.store;
  std::set<FormId> canonical_forms;
  for (FormId g : population(s, config.theorem_samples)) canonical_forms.insert(e.canon.canonical(g));

  const FormId nim2 = s.nimber(2);
  for (FormId c : canonical_forms) {
    const auto followers = s.followers(c);
    const bool verdict = e.invert.is_invertible(c).verdict;
    if (std::ranges::binary_search(followers, nim2)) {
      rec.check(!verdict, [&] { return show(s, c) + " has *2 as a follower but is invertible"; });
    }
    if (verdict) {
      for (FormId f : followers) {
        rec.check(e.invert.is_invertible(f).verdict, [&] {
          return show(s, c) + " is invertible but its follower " + show(s, f) + " is not";
        });
      }
    }
  }
  return rec.finish();
}

CriterionResult lemma_sweep(Engine& e, const Config& config) {
  Recorder rec("4", "lemma sweep and witnesses");
  Store& s = e.store;
  const FormId zero = s.zero();
  const std::vector<FormId> small = day_two(s);

  for (FormId g : small) {
    if (e.order.compare(g, zero) != OrderResult::GT) continue;
    for (FormId h : small) {
      rec.check(e.invert.lemma_check(g, h),
                [&] { return show(s, g) + " + " + show(s, h) + " - " + show(s, h) + " < 0"; });
    }
  }

  std::vector<FormId> hs = small;
  const auto sample = day_three_sample(s, config.lemma_samples);
  hs.insert(hs.end(), sample.begin(), sample.end());
  for (FormId h : hs) {
    const FormId difference = s.sum(h, s.conjugate(h));
    const auto witness = e.invert.lemma_witness(h);
    const bool is_zero = e.order.eq_zero(difference);
    rec.check(witness.has_value() != is_zero, [&] {
      return show(s, h) + ": witness presence disagrees with h-h = 0";
    });
    if (!witness) continue;
    const FormId in_context = s.sum(difference, *witness);
    rec.check(e.outcomes.outcome(in_context) != e.outcomes.outcome(*witness), [&] {
      return show(s, h) + ": witness " + show(s, *witness) + " does not separate h-h from 0";
    });
    rec.check(e.outcomes.left_wins_moving_first(in_context) &&
                  !e.outcomes.left_wins_moving_first(*witness),
              [&] { return show(s, h) + ": Left-first asymmetry fails for the witness"; });
  }
  return rec.finish();
}

std::vector<CriterionResult> property_suites(Engine& e, const Config& config) {
  Store& s = e.store;
  const FormId zero = s.zero();
  const std::vector<FormId> small = day_two(s);
  const std::vector<FormId> forms = population(s, config.property_samples);
  std::vector<CriterionResult> results;

  {
    Recorder rec("5a", "adjoint law o(g + g°) = P");
    for (FormId g : forms) {
      rec.check(e.outcomes.outcome(s.sum(g, s.adjoint(g))) == Outcome::P,
                [&] { return show(s, g); });
    }
    results.push_back(rec.finish());
  }
  {
    Recorder rec("5b", "conjugate commutes with outcome; o(g - g) in {N, P}");
    for (FormId g : forms) {
      rec.check(e.outcomes.outcome(s.conjugate(g)) == conjugate_outcome(e.outcomes.outcome(g)),
                [&] { return show(s, g); });
      const Outcome self = e.outcomes.outcome(s.sum(g, s.conjugate(g)));
      rec.check(self == Outcome::N || self == Outcome::P,
                [&] { return show(s, g) + " - itself is " + to_char(self); });
    }
    results.push_back(rec.finish());
  }
  {
    Recorder rec("5c", "canonical form is idempotent, equivalent and no older");
    for (FormId g : forms) {
      const FormId c = e.canon.canonical(g);
      rec.check(e.canon.canonical(c) == c, [&] { return show(s, g) + ": not idempotent"; });
      rec.check(e.order.eq(g, c), [&] { return show(s, g) + " != " + show(s, c); });
      rec.check(s.birthday(c) <= s.birthday(g), [&] { return show(s, g) + ": older"; });
    }
    results.push_back(rec.finish());
  }
  {
    Recorder rec("5d", "order axioms on birthday <= 2");
    for (FormId g : small) rec.check(e.order.geq(g, g), [&] { return show(s, g); });
    for (FormId g : small) {
      for (FormId h : small) {
        const bool both = e.order.geq(g, h) && e.order.geq(h, g);
        rec.check(both == (e.order.compare(g, h) == OrderResult::EQ) &&
                      both == (e.canon.canonical(g) == e.canon.canonical(h)),
                  [&] { return show(s, g) + " vs " + show(s, h) + ": EQ/canonical mismatch"; });
        for (FormId k : small) {
          rec.check(!(e.order.geq(g, h) && e.order.geq(h, k)) || e.order.geq(g, k), [&] {
            return show(s, g) + " >= " + show(s, h) + " >= " + show(s, k) + " not transitive";
          });
        }
      }
    }
    results.push_back(rec.finish());
  }
  {
    Recorder rec("5e", "g >= h implies g + j >= h + j");
    for (FormId g : small) {
      for (FormId h : small) {
        for (FormId j : small) {
          rec.check(!e.order.geq(g, h) || e.order.geq(s.sum(g, j), s.sum(h, j)), [&] {
            return show(s, g) + ", " + show(s, h) + ", " + show(s, j);
          });
        }
      }
    }
    // g = canonical(g) gives applicable birthday-3 cases.
    for (std::size_t i = small.size(); i < forms.size() && i < small.size() + 100; ++i) {
      const FormId g = forms[i];
      const FormId c = e.canon.canonical(g);
      for (FormId j : small) {
        rec.check(e.order.geq(s.sum(g, j), s.sum(c, j)) && e.order.geq(s.sum(c, j), s.sum(g, j)),
                  [&] { return show(s, g) + " + " + show(s, j); });
      }
    }
    // Strictly positive plus non-negative stays strictly positive.
    for (FormId g : small) {
      if (e.order.compare(g, zero) != OrderResult::GT) continue;
      for (FormId h : small) {
        if (!e.order.geq_zero(h)) continue;
        rec.check(e.order.compare(s.sum(g, h), zero) == OrderResult::GT,
                  [&] { return show(s, g) + " + " + show(s, h) + " not > 0"; });
      }
    }
    results.push_back(rec.finish());
  }
  {
    Recorder rec("5f", "adding a Left option never hurts Left");
    for (FormId g : forms) {
      if (s.left(g).empty()) continue;
      for (FormId a : small) {
        std::vector<FormId> left(s.left(g).begin(), s.left(g).end());
        left.push_back(a);
        const FormId tied = s.intern(std::move(left), s.form(g).right);
        rec.check(e.order.geq(tied, g), [&] { return show(s, g) + " with " + show(s, a); });
      }
    }
    results.push_back(rec.finish());
  }
  {
    Recorder rec("5g", "invertible summands cancel");
    std::vector<FormId> invertible;
    for (FormId j : small) {
      if (e.invert.is_invertible(j).verdict) invertible.push_back(j);
    }
    const std::size_t from_small = invertible.size();
    for (std::size_t i = small.size(); i < forms.size() && invertible.size() < from_small + 20;
         ++i) {
      if (e.invert.is_invertible(forms[i]).verdict) invertible.push_back(forms[i]);
    }
    for (FormId j : invertible) {
      for (FormId g : small) {
        for (FormId h : small) {
          rec.check(e.order.geq(s.sum(g, j), s.sum(h, j)) == e.order.geq(g, h), [&] {
            return show(s, g) + ", " + show(s, h) + " with " + show(s, j);
          });
        }
      }
    }
    results.push_back(rec.finish());
  }
  {
    Recorder rec("5h", "zero tests agree with the general order");
    for (FormId g : forms) {
      for (FormId x : {g, s.sum(g, s.conjugate(g))}) {
        rec.check(e.order.geq_zero(x) == e.order.geq(x, zero), [&] { return show(s, x) + " >= 0"; });
        rec.check(e.order.leq_zero(x) == e.order.geq(zero, x), [&] { return show(s, x) + " <= 0"; });
        rec.check(e.order.eq_zero(x) == e.order.eq(x, zero), [&] { return show(s, x) + " = 0"; });
      }
    }
    results.push_back(rec.finish());
  }
  {
    Recorder rec("5i", "EQ and GT hold in every sampled context");
    std::vector<FormId> contexts = small;
    for (std::size_t i = small.size(); i < forms.size() && i < small.size() + 40; ++i) {
      contexts.push_back(forms[i]);
    }
    const auto in_all_contexts = [&](FormId g, FormId h, OrderResult relation) {
      for (FormId x : contexts) {
        const Outcome og = e.outcomes.outcome(s.sum(g, x));
        const Outcome oh = e.outcomes.outcome(s.sum(h, x));
        const bool ok = relation == OrderResult::EQ ? og == oh : outcome_geq(og, oh);
        rec.check(ok, [&] {
          return show(s, g) + " " + std::string(to_string(relation)) + " " + show(s, h) +
                 " fails in context " + show(s, x);
        });
      }
    };
    for (FormId g : small) {
      for (FormId h : small) {
        const OrderResult r = e.order.compare(g, h);
        if (r == OrderResult::EQ || r == OrderResult::GT) in_all_contexts(g, h, r);
      }
    }
    for (std::size_t i = small.size(); i < forms.size(); ++i) {
      in_all_contexts(forms[i], e.canon.canonical(forms[i]), OrderResult::EQ);
    }
    results.push_back(rec.finish());
  }
  return results;
}

std::vector<CriterionResult> run_all(Engine& engine, const Config& config,
                                     const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> results;
  const auto add = [&](CriterionResult r) {
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  };
  add(paper_regression(engine));
  add(invertibility_equivalence(engine, config));
  add(invertibility_corollaries(engine, config));
  add(lemma_sweep(engine, config));
  for (auto& r : property_suites(engine, config)) add(std::move(r));
  return results;
}

std::string format(const CriterionResult& result) {
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2f s", result.seconds);
  std::string line = std::string(result.passed() ? "[PASS] " : "[FAIL] ") + result.id + "  " +
                     result.name + "  (" + std::to_string(result.cases) + " cases, " +
                     std::to_string(result.violations) + " violations, " + timing + ")";
  for (const auto& f : result.failures) line += "\n    " + f;
  return line;
}

}  // namespace dicot::acceptance
