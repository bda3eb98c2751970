/* Copyright 2026 The Pavelka Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "cli.h"

#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "pavelka/encoding.h"
#include "pavelka/errors.h"
#include "pavelka/kernel.h"
#include "pavelka/necengine.h"
#include "pavelka/probengine.h"
#include "pavelka/semantics.h"
#include "pavelka/syntax.h"

namespace pavelka::cli {

namespace {

struct Flags {
  std::string theory;
  std::string proof;
  std::string target;
  std::string given;
  std::string then;
  std::string alpha;
  std::string tol = "1/1024";
  std::string mode;
  bool upper = false;
  bool decimal = false;
  int limit_vars = kDefaultWorldVariableLimit;
  int limit_binaries = kDefaultBinaryLimit;
  std::size_t max_steps = SaturateOptions{}.max_steps;
  std::vector<std::string> assign;
  std::vector<std::string> clause;
};

// Thrown for bad command-line values and unreadable files.
class InputError : public Error {
 public:
  using Error::Error;
};

// A command that ran to completion but whose answer is negative.
struct Refuted {};

class Command {
 public:
  explicit Command(const Flags& flags) : flags_(flags) {}

  std::ostringstream out;
  std::ostringstream err;

  std::string ReadFile(const std::string& path) const {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  const std::string& Require(const std::string& value,
                             const std::string& flag) const {
    if (value.empty()) throw InputError(flag + " is required");
    return value;
  }

  GradedTheory Theory() const {
    std::string path = Require(flags_.theory, "--theory");
    GradedTheory theory = [&] {
      try {
        return ParseTheory(ReadFile(path));
      } catch (const ParseError& e) {
        throw InputError("parse error: " + path + ":" + e.what());
      }
    }();
    if (!flags_.mode.empty()) {
      auto mode = ParseModeName(flags_.mode);
      if (!mode) throw InputError("unknown mode '" + flags_.mode + "'");
      theory.set_mode(*mode);
    }
    return theory;
  }

  Fuzzy Target(LogicMode mode) const {
    ParseOptions options;
    options.allow_product = AllowsProduct(mode);
    return ParseFormula(Require(flags_.target, "--target"), options);
  }

  // Accepts "f(phi)" or a crisp formula.
  static Crisp CrispArg(const std::string& text) {
    Fuzzy f = ParseFormula(text);
    if (f.kind() == Fuzzy::Kind::kAtom) return f.body();
    return ParseCrisp(text);
  }

  static Rational RationalArg(const std::string& text,
                              const std::string& flag) {
    auto r = Rational::TryParse(text);
    if (!r) throw InputError(flag + ": not a rational: '" + text + "'");
    return *r;
  }

  ProbOptions Limits() const {
    ProbOptions o;
    o.max_variables = flags_.limit_vars;
    o.max_binaries = flags_.limit_binaries;
    return o;
  }

  void Value(const std::string& key, const Rational& r) {
    out << key << "=" << r.str() << "\n";
    if (flags_.decimal) {
      out << key << ".decimal=" << r.truncated_decimal(6) << "\n";
      out << key << ".approximate=true\n";
    }
  }

  std::string Human(const Rational& r) const {
    std::string s = r.str();
    if (flags_.decimal) s += " (~" + r.truncated_decimal(6) + ")";
    return s;
  }

  void Witness(const ProbabilityModel& model) {
    for (std::size_t w = 0; w < model.num_worlds(); ++w) {
      out << "witness." << model.WorldLabel(w) << "="
          << model.weights()[w].str() << "\n";
    }
  }

  void BoundReportOut(const BoundReport& report, const char* kind) {
    out << "kind=" << kind << "\n";
    Value("bound", report.value);
    out << "exact=" << (report.exact ? "true" : "false") << "\n";
    if (report.witness) Witness(*report.witness);
    err << kind << " = " << Human(report.value) << "\n";
  }

  Evaluation Assignment() const {
    Evaluation e;
    for (const std::string& item : flags_.assign) {
      auto eq = item.rfind('=');
      if (eq == std::string::npos) {
        throw InputError("--assign expects NAME=VALUE, got '" + item + "'");
      }
      Fuzzy lhs = ParseFormula(item.substr(0, eq));
      Rational v = RationalArg(item.substr(eq + 1), "--assign");
      if (!v.is_degree()) throw InputError("--assign value outside [0,1]");
      if (lhs.kind() == Fuzzy::Kind::kAtom) {
        e.SetAtom(lhs.body(), v);
      } else if (lhs.kind() == Fuzzy::Kind::kVar) {
        e.SetVar(lhs.name(), v);
      } else {
        throw InputError("--assign target must be a variable or f(...)");
      }
    }
    return e;
  }

  void CheckProofCmd() {
    GradedTheory theory = Theory();
    std::string path = Require(flags_.proof, "--proof");
    Proof proof = [&] {
      try {
        return ParseProof(ReadFile(path));
      } catch (const ParseError& e) {
        throw InputError("parse error: " + path + ":" + e.what());
      }
    }();
    CheckReport report = CheckProof(theory, proof);
    out << "accepted=" << (report.accepted ? "true" : "false") << "\n";
    if (!report.accepted) {
      out << "failing_step=" << report.failing_step << "\n";
      out << "reason=" << report.reason << "\n";
      err << "rejected at step " << report.failing_step << ": "
          << report.reason << "\n";
      throw Refuted{};
    }
    out << "steps=" << proof.steps.size() << "\n";
    out << "conclusion=" << Print(report.conclusion->formula) << "\n";
    Value("degree", report.conclusion->degree);
    err << "conclusion: " << Print(report.conclusion->formula) << " @ "
        << Human(report.conclusion->degree) << "\n";
  }

  void BoundsCmd() {
    GradedTheory theory = Theory();
    Fuzzy target = Target(theory.mode());
    BoundKind kind = flags_.upper ? BoundKind::kUpper : BoundKind::kLower;
    BoundReport report = FpTruthDegree(theory, target, kind, Limits());
    out << "target=" << Print(target) << "\n";
    BoundReportOut(report, flags_.upper ? "upper" : "lower");
  }

  void CondCmd() {
    GradedTheory theory = Theory();
    Crisp given = CrispArg(Require(flags_.given, "--given"));
    Crisp then = CrispArg(Require(flags_.then, "--then"));
    out << "given=" << Print(given) << "\nthen=" << Print(then) << "\n";
    if (!flags_.alpha.empty()) {
      Rational alpha = RationalArg(flags_.alpha, "--alpha");
      bool holds = CondCheck(theory, given, then, alpha, Limits());
      Value("alpha", alpha);
      out << "holds=" << (holds ? "true" : "false") << "\n";
      err << "P(" << Print(then) << " | " << Print(given) << ") >= "
          << Human(alpha) << (holds ? " holds" : " fails") << "\n";
      if (!holds) throw Refuted{};
      return;
    }
    Rational tol = RationalArg(flags_.tol, "--tol");
    BoundReport report = CondLowerBound(theory, given, then, tol, Limits());
    Value("tol", tol);
    BoundReportOut(report, "lower");
  }

  void NecCmd() {
    if (!flags_.clause.empty()) {
      if (flags_.clause.size() != 2) {
        throw InputError("--clause must be given exactly twice");
      }
      std::vector<GradedFormula> clauses;
      for (const std::string& c : flags_.clause) {
        auto at = c.rfind('@');
        if (at == std::string::npos) {
          throw InputError("--clause expects 'f(...) @ degree'");
        }
        Rational d = RationalArg(Trim(c.substr(at + 1)), "--clause");
        if (!d.is_degree()) throw InputError("--clause degree outside [0,1]");
        clauses.push_back({ParseFormula(c.substr(0, at)), d});
      }
      GradedFormula r = ResolutionStep(clauses[0], clauses[1]);
      out << "resolvent=" << Print(r.formula) << "\n";
      Value("degree", r.degree);
      err << "resolvent: " << Print(r.formula) << " @ " << Human(r.degree)
          << "\n";
      return;
    }
    GradedTheory theory = Theory();
    Crisp target = CrispArg(Require(flags_.target, "--target"));
    Rational value = FpsTruthDegree(theory, target, flags_.limit_vars);
    out << "target=" << Print(target) << "\nkind=lower\n";
    Value("bound", value);
    out << "exact=true\n";
    err << "lower = " << Human(value) << "\n";
  }

  void TruthDegreeCmd() {
    GradedTheory theory = Theory();
    Fuzzy target = Target(theory.mode());
    out << "target=" << Print(target) << "\n";
    switch (theory.mode()) {
      case LogicMode::kRPL:
      case LogicMode::kRPLPlus: {
        TruthDegree d =
            RplTruthDegree(theory, target, {flags_.limit_binaries});
        out << "kind=lower\n";
        Value("bound", d.value);
        out << "exact=true\n";
        for (const auto& [name, v] : d.witness.fuzzy_vars) {
          out << "witness." << name << "=" << v.str() << "\n";
        }
        err << "lower = " << Human(d.value) << "\n";
        break;
      }
      case LogicMode::kFP:
      case LogicMode::kFPPlus:
        BoundReportOut(
            FpTruthDegree(theory, target, BoundKind::kLower, Limits()),
            "lower");
        break;
      case LogicMode::kFPS: {
        if (target.kind() != Fuzzy::Kind::kAtom) {
          throw UnsupportedError(
              "FPS truth degrees are computed for targets f(...) only");
        }
        Rational v = FpsTruthDegree(theory, target.body(), flags_.limit_vars);
        out << "kind=lower\n";
        Value("bound", v);
        out << "exact=true\n";
        err << "lower = " << Human(v) << "\n";
        break;
      }
    }
  }

  void EvalCmd() {
    Fuzzy target = ParseFormula(Require(flags_.target, "--target"));
    Rational v = Eval(Assignment(), target);
    out << "target=" << Print(target) << "\n";
    Value("value", v);
    err << Print(target) << " = " << Human(v) << "\n";
  }

  void SaturateCmd() {
    GradedTheory theory = Theory();
    std::vector<Fuzzy> seeds;
    if (!flags_.target.empty()) seeds.push_back(Target(theory.mode()));
    SaturateOptions options;
    options.max_steps = flags_.max_steps;
    options.entailment_limit = flags_.limit_vars;
    SaturationResult result = Saturate(theory, options, seeds);
    out << "truncated=" << (result.truncated() ? "true" : "false") << "\n";
    out << "steps=" << result.steps() << "\n";
    if (!seeds.empty()) {
      auto d = result.DegreeOf(seeds[0]);
      Value("target_degree", d.value_or(Rational(0)));
      err << "derived " << Print(seeds[0]) << " @ "
          << Human(d.value_or(Rational(0))) << "\n";
      if (d) {
        Proof proof = result.ReplayProof(seeds[0]);
        for (std::size_t i = 0; i < proof.steps.size(); ++i) {
          const ProofStep& s = proof.steps[i];
          out << "step=" << (i + 1) << ": " << Print(s.formula) << " @ "
              << s.degree.str() << " by " << JustificationText(s.just)
              << "\n";
        }
      }
      return;
    }
    for (const auto& [f, d] : result.Derived()) {
      out << "derived=" << Print(f) << " @ " << d.str() << "\n";
    }
    err << result.Derived().size() << " graded formulas derived"
        << (result.truncated() ? " (budget exhausted)" : "") << "\n";
  }

  void ValidateModelCmd() {
    GradedTheory theory = Theory();
    Evaluation e = Assignment();
    std::set<Crisp> bodies;
    for (const auto& [axiom, degree] : theory.axioms()) {
      for (const Crisp& b : CollectAtoms(axiom).bodies) bodies.insert(b);
    }
    bool ok = true;
    std::optional<ValidationReport> report;
    if (theory.mode() == LogicMode::kFP || theory.mode() == LogicMode::kFPPlus) {
      report = ValidateFpEvaluation(e, bodies, flags_.limit_vars);
    } else if (theory.mode() == LogicMode::kFPS) {
      report = ValidateFpsEvaluation(e, bodies);
    }
    if (report) {
      out << "schemas_valid=" << (report->ok ? "true" : "false") << "\n";
      if (!report->ok) {
        ok = false;
        out << "violated=" << report->schema << "\n";
        out << "instance=" << report->instance << "\n";
        Value("instance_value", report->value);
        err << "violated " << report->schema << " instance "
            << report->instance << " (value " << Human(report->value)
            << ")\n";
      }
    }
    for (const auto& [axiom, degree] : theory.axioms()) {
      Rational v = Eval(e, axiom);
      if (v < degree) {
        ok = false;
        out << "axiom_violated=" << Print(axiom) << "\n";
        err << "axiom " << Print(axiom) << " has value " << Human(v)
            << " < " << Human(degree) << "\n";
      }
    }
    out << "model=" << (ok ? "true" : "false") << "\n";
    if (!ok) throw Refuted{};
    err << "evaluation is a model\n";
  }

 private:
  static std::string Trim(std::string s) {
    auto first = s.find_first_not_of(" \t");
    auto last = s.find_last_not_of(" \t");
    if (first == std::string::npos) return "";
    return s.substr(first, last - first + 1);
  }

  const Flags& flags_;
};

}  // namespace

CommandResult Run(const std::vector<std::string>& argv) {
  Flags flags;
  CLI::App app{"Exact graded proof checking and probability, necessity "
               "and truth-degree bounds",
               "pavelka"};
  app.fallthrough();
  app.require_subcommand(1, 1);
  app.add_option("--theory", flags.theory, "Theory file (.glt)");
  app.add_option("--proof", flags.proof, "Proof file (.glp)");
  app.add_option("--target", flags.target, "Target formula");
  app.add_option("--given", flags.given, "Conditioning crisp formula");
  app.add_option("--then", flags.then, "Conditioned crisp formula");
  app.add_option("--alpha", flags.alpha, "Conditional threshold");
  app.add_option("--tol", flags.tol, "Bisection tolerance")
      ->capture_default_str();
  app.add_flag("--upper", flags.upper, "Compute the upper bound");
  app.add_option("--mode", flags.mode, "Override the theory mode");
  app.add_option("--limit-vars", flags.limit_vars,
                 "Crisp variable limit for worlds and entailment")
      ->capture_default_str();
  app.add_option("--limit-binaries", flags.limit_binaries,
                 "Branch-and-bound binary limit")
      ->capture_default_str();
  app.add_option("--max-steps", flags.max_steps, "Saturation step budget")
      ->capture_default_str();
  app.add_option("--assign", flags.assign,
                 "NAME=VALUE or f(phi)=VALUE (repeatable)");
  app.add_option("--clause", flags.clause,
                 "Graded clause 'f(...) @ degree' for resolution (twice)");
  app.add_flag("--decimal", flags.decimal,
               "Also print 6-digit truncated decimals (approximate)");

  Command cmd(flags);
  struct Sub {
    const char* name;
    const char* help;
    void (Command::*run)();
  };
  const Sub subs[] = {
      {"check-proof", "Check a graded proof against a theory",
       &Command::CheckProofCmd},
      {"bounds", "Probability bound of a target over FP models",
       &Command::BoundsCmd},
      {"cond", "Conditional probability check or lower bound",
       &Command::CondCmd},
      {"nec", "Necessity bound or graded resolution", &Command::NecCmd},
      {"truth-degree", "Semantic truth degree of a target",
       &Command::TruthDegreeCmd},
      {"eval", "Evaluate a formula under --assign values",
       &Command::EvalCmd},
      {"saturate", "Forward-chain graded consequences",
       &Command::SaturateCmd},
      {"validate-model", "Check an evaluation against a theory and schemas",
       &Command::ValidateModelCmd},
  };
  for (const Sub& s : subs) app.add_subcommand(s.name, s.help);

  CommandResult result;
  std::vector<const char*> cargv;
  for (const std::string& a : argv) cargv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream o;
    std::ostringstream er;
    int code = app.exit(e, o, er);
    result.out = o.str();
    result.err = er.str();
    result.status = code == 0 ? Status::kOk : Status::kInputError;
    return result;
  }

  auto fail = [&](Status status, const std::string& message) {
    result.status = status;
    cmd.err << "error: " << message << "\n";
  };
  try {
    for (const Sub& s : subs) {
      if (app.got_subcommand(s.name)) (cmd.*s.run)();
    }
  } catch (const Refuted&) {
    result.status = Status::kRefuted;
  } catch (const ParseError& e) {
    fail(Status::kInputError, std::string("parse error: ") + e.what());
  } catch (const UnboundAtomError& e) {
    fail(Status::kInputError, e.what());
  } catch (const InputError& e) {
    fail(Status::kInputError, e.what());
  } catch (const UnsupportedError& e) {
    fail(Status::kUnsupported, e.what());
  } catch (const ProvisoError& e) {
    fail(Status::kUnsupported, std::string("proviso unmet: ") + e.what());
  } catch (const LimitError& e) {
    fail(Status::kLimit, e.what());
  } catch (const InfeasibleError& e) {
    fail(Status::kInfeasible, e.what());
  } catch (const std::invalid_argument& e) {
    fail(Status::kInputError, e.what());
  }
  result.out = cmd.out.str();
  result.err = cmd.err.str();
  return result;
}

}  // namespace pavelka::cli
