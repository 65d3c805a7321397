#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dicot/acceptance.hpp"
#include "dicot/cli.hpp"
#include "dicot/engine.hpp"
#include "dicot/enumerate.hpp"
#include "dicot/errors.hpp"
#include "dicot/notation.hpp"

namespace dicot::cli {
namespace {

using Json = nlohmann::ordered_json;

/// Result of one evaluated input, in both output formats.
struct Rendered {
  std::string text;
  Json json;
};

struct Settings {
  std::string format = "text";
  std::string file;
  std::vector<std::string> exprs;
  bool trace = false;
  bool report = false;
  unsigned birthday = 0;
  bool canonical_only = false;
  std::optional<std::size_t> limit;
  std::string level = "quick";
};

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

class Driver {
 public:
  Driver(const Settings& settings, std::ostream& out, std::ostream& err)
      : settings_(settings), out_(out), err_(err) {}

  std::string show(FormId g) const { return print(engine_.store, g); }
  FormId read(const std::string& text) { return parse(engine_.store, text); }
  Engine& engine() { return engine_; }
  bool json() const { return settings_.format == "json"; }

  /// Evaluates `inputs` (each a list of expressions) with `eval` and writes
  /// the results. Returns the exit status.
  int evaluate(const std::string& verb, std::size_t arity,
               const std::function<Rendered(const std::vector<FormId>&)>& eval) {
    std::vector<std::vector<std::string>> inputs;
    bool batch = !settings_.file.empty();
    if (batch) {
      if (!settings_.exprs.empty()) {
        err_ << "error: give expressions either as arguments or with --file, not both\n";
        return kUsageError;
      }
      std::ifstream in(settings_.file);
      if (!in) {
        err_ << "error: cannot read " << settings_.file << "\n";
        return kUsageError;
      }
      std::string line;
      while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        std::vector<std::string> parts;
        std::stringstream ss(line);
        std::string part;
        while (std::getline(ss, part, ';')) parts.push_back(trim(part));
        inputs.push_back(std::move(parts));
      }
    } else {
      inputs.push_back(settings_.exprs);
    }

    Json results = Json::array();
    int status = kOk;
    std::size_t line_no = 0;
    for (const auto& exprs : inputs) {
      ++line_no;
      Json input = exprs.size() == 1 ? Json(exprs[0]) : Json(exprs);
      if (exprs.size() != arity) {
        err_ << "error: " << verb << " expects " << arity << " expression"
             << (arity == 1 ? "" : "s");
        if (batch) err_ << " per line (line " << line_no << ")";
        err_ << "\n";
        if (!batch) return kUsageError;
        status = kUsageError;
        results.push_back(Json{{"input", input}, {"error", "wrong number of expressions"}});
        continue;
      }
      std::vector<FormId> forms;
      try {
        for (const auto& e : exprs) forms.push_back(read_reporting(e, batch ? line_no : 0));
        Rendered r = eval(forms);
        if (json()) {
          results.push_back(Json{{"input", input}, {"result", std::move(r.json)}});
        } else {
          out_ << r.text << "\n";
        }
      } catch (const Error& e) {
        if (status == kOk) status = kDomainError;
        results.push_back(Json{{"input", input}, {"error", e.what()}});
      }
    }

    if (json()) {
      Json doc{{"verb", verb}};
      if (batch) {
        doc["input"] = settings_.file;
        doc["result"] = std::move(results);
      } else {
        doc["input"] = results[0]["input"];
        if (results[0].contains("error")) {
          doc["error"] = results[0]["error"];
        } else {
          doc["result"] = results[0]["result"];
        }
      }
      out_ << doc.dump() << "\n";
    }
    return status;
  }

  void emit(const std::string& verb, const Json& input, const Rendered& r) {
    if (json()) {
      out_ << Json{{"verb", verb}, {"input", input}, {"result", r.json}}.dump() << "\n";
    } else {
      out_ << r.text;
      if (!r.text.empty() && r.text.back() != '\n') out_ << "\n";
    }
  }

 private:
  // Parses one expression, echoing it with a caret under the offending
  // character when it is malformed.
  FormId read_reporting(const std::string& text, std::size_t line_no) {
    try {
      return read(text);
    } catch (const SyntaxError& e) {
      err_ << "error: " << (line_no ? "line " + std::to_string(line_no) + ": " : "") << e.what()
           << "\n  " << text << "\n  " << std::string(e.position(), ' ') << "^\n";
      throw;
    } catch (const Error& e) {
      err_ << "error: " << (line_no ? "line " + std::to_string(line_no) + ": " : "") << e.what()
           << "\n  " << text << "\n";
      throw;
    }
  }

  const Settings& settings_;
  std::ostream& out_;
  std::ostream& err_;
  Engine engine_;
};

Rendered report_rendering(Driver& d, const InvertReport& r) {
  Rendered out;
  std::ostringstream text;
  text << "input: " << d.show(r.input) << "\n"
       << "canonical: " << d.show(r.canonical) << "\n"
       << "verdict: " << (r.verdict ? "true" : "false") << "\n";
  if (r.witness) text << "witness: " << d.show(*r.witness) << "\n";
  text << "follower_outcomes:";
  Json outcomes = Json::object();
  for (const auto& [f, o] : r.follower_outcomes) {
    text << "\n  " << d.show(f) << ": " << to_char(o);
    outcomes[d.show(f)] = std::string(1, to_char(o));
  }
  out.text = text.str();
  out.json = Json{{"input", d.show(r.input)},
                  {"canonical", d.show(r.canonical)},
                  {"verdict", r.verdict}};
  if (r.witness) out.json["witness"] = d.show(*r.witness);
  out.json["follower_outcomes"] = std::move(outcomes);
  return out;
}

Rendered optional_form(Driver& d, std::optional<FormId> g) {
  if (!g) return {"none", nullptr};
  return {d.show(*g), d.show(*g)};
}

int dispatch(const std::string& verb, const Settings& s, std::ostream& out, std::ostream& err) {
  Driver d(s, out, err);
  Engine& e = d.engine();

  if (verb == "outcome") {
    return d.evaluate(verb, 1, [&](const auto& g) {
      const std::string o(1, to_char(e.outcomes.outcome(g[0])));
      return Rendered{o, o};
    });
  }
  if (verb == "canonical") {
    return d.evaluate(verb, 1, [&](const auto& g) {
      const std::string c = d.show(e.canon.canonical(g[0]));
      if (!s.trace) return Rendered{c, c};
      std::string text;
      Json steps = Json::array();
      for (const ReductionStep& step : e.canon.explain(g[0])) {
        text += std::string(to_string(step.kind)) + ": " + d.show(step.at) + " -> " +
                d.show(step.after) + "\n";
        steps.push_back(Json{{"kind", to_string(step.kind)},
                             {"before", d.show(step.at)},
                             {"after", d.show(step.after)}});
      }
      text += c;
      return Rendered{text, Json{{"canonical", c}, {"trace", std::move(steps)}}};
    });
  }
  if (verb == "compare") {
    return d.evaluate(verb, 2, [&](const auto& g) {
      const std::string r(to_string(e.order.compare(g[0], g[1])));
      return Rendered{r, r};
    });
  }
  if (verb == "invertible") {
    return d.evaluate(verb, 1, [&](const auto& g) {
      const InvertReport r = e.invert.is_invertible(g[0]);
      if (s.report) return report_rendering(d, r);
      std::string text = std::string(r.verdict ? "true" : "false") +
                         " (canonical: " + d.show(r.canonical);
      if (r.witness) text += ", witness: " + d.show(*r.witness);
      text += ")";
      return Rendered{text, r.verdict};
    });
  }
  if (verb == "inverse") {
    return d.evaluate(verb, 1, [&](const auto& g) { return optional_form(d, e.invert.inverse(g[0])); });
  }
  if (verb == "adjoint") {
    return d.evaluate(verb, 1, [&](const auto& g) {
      const std::string a = d.show(e.store.adjoint(g[0]));
      return Rendered{a, a};
    });
  }
  if (verb == "followers") {
    return d.evaluate(verb, 1, [&](const auto& g) {
      Rendered r{"", Json::array()};
      for (FormId f : e.store.followers(g[0])) {
        if (!r.text.empty()) r.text += "\n";
        r.text += d.show(f);
        r.json.push_back(d.show(f));
      }
      return r;
    });
  }
  if (verb == "witness") {
    return d.evaluate(verb, 1, [&](const auto& g) { return optional_form(d, e.invert.lemma_witness(g[0])); });
  }
  if (verb == "enumerate") {
    Json input{{"birthday", s.birthday}, {"canonical_only", s.canonical_only}};
    input["limit"] = s.limit ? Json(*s.limit) : Json(nullptr);
    Rendered r{"", Json::array()};
    try {
      for_each_dicot(e.store, EnumerateOptions{.max_birthday = s.birthday, .limit = s.limit},
                     [&](FormId g) {
                       if (s.canonical_only && !e.canon.is_canonical(g)) return;
                       if (!r.text.empty()) r.text += "\n";
                       r.text += d.show(g);
                       r.json.push_back(d.show(g));
                     });
    } catch (const Error& ex) {
      err << "error: " << ex.what() << "\n";
      if (d.json()) {
        out << Json{{"verb", verb}, {"input", input}, {"error", ex.what()}}.dump() << "\n";
      }
      return kDomainError;
    }
    d.emit(verb, input, r);
    return kOk;
  }
  if (verb == "selftest") {
    const auto level = s.level == "full" ? acceptance::Level::Full : acceptance::Level::Quick;
    bool ok = true;
    Rendered r{"", Json::array()};
    acceptance::run_all(e, acceptance::Config::for_level(level),
                        [&](const acceptance::CriterionResult& c) {
                          ok = ok && c.passed();
                          if (!d.json()) out << acceptance::format(c) << std::endl;
                          r.json.push_back(Json{{"id", c.id},
                                                {"name", c.name},
                                                {"passed", c.passed()},
                                                {"cases", c.cases},
                                                {"violations", c.violations},
                                                {"seconds", c.seconds},
                                                {"failures", c.failures}});
                        });
    r.text = ok ? "all criteria passed" : "some criteria failed";
    d.emit(verb, Json{{"level", s.level}}, r);
    return ok ? kOk : kDomainError;
  }
  err << "error: unknown verb " << verb << "\n";
  return kUsageError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Misère dicot game engine"};
  app.name(args.empty() ? "dicot" : args[0]);
  app.require_subcommand(1);
  app.add_option("--format", s.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  const auto expression_verb = [&](const std::string& name, const std::string& help,
                                   std::size_t count) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("expr", s.exprs, count == 1 ? "Game expression" : "Game expressions")
        ->expected(0, static_cast<int>(count));
    sub->add_option("--file", s.file,
                    count == 1 ? "Read one expression per line"
                               : "Read one pair per line, separated by ';'");
    return sub;
  };

  expression_verb("outcome", "Misère outcome class (L, N, P, R)", 1);
  expression_verb("canonical", "Canonical form", 1)
      ->add_flag("--trace", s.trace, "List every reduction step");
  expression_verb("compare", "Order modulo dicots: >, <, = or ||", 2);
  expression_verb("invertible", "Invertibility verdict", 1)
      ->add_flag("--report", s.report, "Full follower report");
  expression_verb("inverse", "Additive inverse, if any", 1);
  expression_verb("adjoint", "Adjoint form", 1);
  expression_verb("followers", "All followers, by id", 1);
  expression_verb("witness", "A position separating g - g from 0", 1);

  CLI::App* enumerate = app.add_subcommand("enumerate", "List dicots up to a birthday");
  enumerate->fallthrough();
  enumerate->add_option("--birthday", s.birthday, "Largest birthday")->required();
  enumerate->add_flag("--canonical-only", s.canonical_only, "Only canonical forms");
  enumerate->add_option("--limit", s.limit, "Draw a fixed-seed sample of this size");

  CLI::App* selftest = app.add_subcommand("selftest", "Run the acceptance suites");
  selftest->fallthrough();
  selftest->add_option("--level", s.level, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}))
      ->capture_default_str();

  // CLI11 consumes arguments from the back and without the program name.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  // A conjugated expression such as "-{0|*}" would read as an option.
  // Whitespace is insignificant in game notation, so a leading space keeps
  // it positional without changing its meaning.
  for (std::string& arg : reversed) {
    if (arg.size() > 1 && arg[0] == '-' && std::string_view("{*0 ").find(arg[1]) != std::string_view::npos) {
      arg.insert(arg.begin(), ' ');
    }
  }
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }
  return dispatch(app.get_subcommands().front()->get_name(), s, out, err);
}

}  // namespace dicot::cli
