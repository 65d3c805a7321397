#include "dicot/errors.hpp"
#include "dicot/invert.hpp"
#include "dicot/notation.hpp"

namespace dicot {

InvertReport Inverter::is_invertible(FormId g) {
  InvertReport report;
  report.input = g;
  report.canonical = canon_.canonical(g);
  report.verdict = true;
  OutcomeSolver& outcomes = order_.outcomes();
  for (FormId f : store_.followers(report.canonical)) {
    const Outcome o = outcomes.outcome(store_.sum(f, store_.conjugate(f)));
    report.follower_outcomes.emplace_back(f, o);
    if (o == Outcome::P && report.verdict) {
      report.verdict = false;
      report.witness = f;
    }
  }
  return report;
}

std::optional<FormId> Inverter::inverse(FormId g) {
  const InvertReport report = is_invertible(g);
  if (!report.verdict) return std::nullopt;
  return store_.conjugate(report.canonical);
}

bool Inverter::oracle_invertible(FormId g) {
  return order_.eq_zero(store_.sum(g, store_.conjugate(g)));
}

std::optional<FormId> Inverter::lemma_witness(FormId h) {
  const FormId difference = store_.sum(h, store_.conjugate(h));
  if (order_.eq_zero(difference)) return std::nullopt;
  if (order_.outcomes().outcome(difference) == Outcome::P) return store_.star();

  std::vector<FormId> adjoints;
  for (FormId f : store_.followers(difference)) adjoints.push_back(store_.adjoint(f));
  const FormId zero = store_.zero();
  const FormId inner = store_.intern(std::move(adjoints), {zero});
  return store_.intern({zero}, {inner});
}

bool Inverter::lemma_check(FormId g, FormId h) {
  if (order_.compare(g, store_.zero()) != OrderResult::GT) {
    throw PreconditionViolated(print(store_, g) + " is not strictly positive");
  }
  const FormId total = store_.sum(g, store_.sum(h, store_.conjugate(h)));
  return order_.compare(total, store_.zero()) != OrderResult::LT;
}

}  // namespace dicot
