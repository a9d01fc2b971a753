#include "rmc/codes.hpp"
#include "rmc/dsl.hpp"
#include "rmc/inversion.hpp"
#include "rmc/lab.hpp"
#include "rmc/padding.hpp"
#include "rmc/suites.hpp"
#include "rmc/vm.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <iostream>

using namespace rmc;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string show(const std::optional<Word>& w) { return w ? w->to_text() : "undefined"; }

Program load(const std::string& path) {
  try {
    return load_program_file(path);
  } catch (const std::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

Word word_arg(const std::string& text, const DslContext& ctx) {
  try {
    return parse_word_expr(text, ctx);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

int cmd_run(const std::string& file, const std::string& input, bool verbose) {
  Program p = load(file);
  RunOutcome r = run(p, word_arg(input, {p}));
  if (verbose) std::cout << "steps " << to_string(r.steps) << "\n";
  if (!r.ok()) {
    std::cout << "undefined (" << reason_name(r.reason) << ")\n";
    return 1;
  }
  std::cout << r.output.to_text() << "\n";
  return 0;
}

int cmd_eval(const std::string& expr, const std::string& file, const std::string& input) {
  DslContext ctx;
  if (!file.empty()) ctx.program = load(file);
  Morphism f = [&] {
    try {
      return parse_morphism(expr, ctx);
    } catch (const DslError& e) {
      throw UsageError(e.what());
    }
  }();
  auto y = f(word_arg(input, ctx));
  std::cout << show(y) << "\n";
  return y ? 0 : 1;
}

int cmd_pipeline(const std::string& file, const std::string& input, bool diff) {
  Program p = load(file);
  Word x = word_arg(input, {p});
  auto chain = lemma_chain(p)(x);
  RunOutcome r = run(p, x);
  std::optional<Word> direct = r.ok() ? std::optional<Word>(r.output) : std::nullopt;
  std::cout << "chain  " << show(chain) << "\n";
  std::cout << "direct " << show(direct) << "\n";
  if (!diff) return 0;
  bool same = chain == direct;
  std::cout << (same ? "MATCH" : "DIFFER") << "\n";
  return same ? 0 : 1;
}

int cmd_invert(const std::string& file, const std::string& input, const std::string& oracle, const std::string& check,
               unsigned max_len) {
  if (oracle != "brute") throw UsageError("unknown oracle '" + oracle + "'");
  if (!check.empty() && check != "plain" && check != "strengthened") throw UsageError("unknown check '" + check + "'");
  Program p = load(file);
  Word y = word_arg(input, {p});
  auto e_prime = reference_e_prime(q2_config(), {p}, max_len);
  Morphism inv = build_inverse(p, e_prime);
  Morphism f = machine_morphism(p);
  auto x = inv(y);
  std::cout << "phi'(y) " << show(x) << "\n";
  std::cout << "oracle calls " << e_prime->call_count() << ", domain tests " << e_prime->domain_test_count() << "\n";
  if (check.empty()) return x ? 0 : 1;
  bool ok = true;
  auto fx = x ? f(*x) : std::nullopt;
  if (!fx || !(*fx == y)) {
    std::cout << "phi phi' phi = phi fails at y\n";
    ok = false;
  }
  if (check == "strengthened" && x) {
    auto back = fx ? inv(*fx) : std::nullopt;
    if (!back || !(*back == *x)) {
      std::cout << "phi' phi phi' = phi' fails at y\n";
      ok = false;
    }
  }
  std::cout << (ok ? "OK" : "FAIL") << "\n";
  return ok ? 0 : 1;
}

int cmd_lab_witness(const std::string& a, const std::string& tail, unsigned nmax, bool as_json) {
  WitnessSpec spec{a, tail, false, {2, 2}};
  WitnessSpec other{a == "0" ? "1" : "0", "0010", false, {2, 2}};
  WitnessCheckOptions opt;
  opt.n_max = nmax;
  auto rep = check_witness_properties(spec, {witness_program(other)}, opt);
  auto dom = check_witness_domain(spec);
  auto row = [&](const char* name, const PropertyResult& r) {
    if (as_json)
      std::cout << json{{"property", name}, {"pass", r.pass}, {"checked", r.checked}, {"failure", r.first_failure}}.dump()
                << "\n";
    else
      std::cout << std::left << std::setw(14) << name << std::setw(6) << (r.pass ? "pass" : "FAIL") << std::setw(8)
                << r.checked << r.first_failure << "\n";
  };
  if (!as_json) std::cout << "witness a=" << a << " tail=" << tail << " n_max=" << nmax << "\n";
  row("(1) no-11", rep.no_11);
  row("(2) distinct", rep.distinct);
  row("(3) extend", rep.extendable);
  PropertyResult d;
  d.pass = dom.pass();
  d.checked = dom.exhaustive + dom.enumerated + dom.random;
  if (!dom.mismatches.empty()) d.first_failure = dom.mismatches.front();
  row("domain", d);
  return rep.pass() && dom.pass() ? 0 : 1;
}

int cmd_lab_trace(const std::string& word, const std::string& file, const std::string& input, bool as_json) {
  Program p = load(file);
  DslContext ctx{p};
  GeneratorWord X;
  try {
    if (word == "chain") {
      X = chain_letters(p);
    } else {
      Morphism m = parse_morphism(word, ctx);
      X.letters = m.kind() == Morphism::Kind::composite ? m.parts() : std::vector<Morphism>{m};
    }
  } catch (const DslError& e) {
    throw UsageError(e.what());
  }
  Word u = word_arg(input, ctx);
  SuffixTrace t = suffix_trace(X, p, program_header(p) + u);
  for (const auto& s : t.stages) {
    if (as_json) {
      json j{{"stage", s.index}, {"letter", s.letter}, {"length", to_string(s.value.length())},
             {"shaped", s.shape.has_value()}, {"common_suffix", to_string(s.common_suffix)}};
      if (s.gamma_growth) j["gamma_growth"] = to_string(*s.gamma_growth);
      std::cout << j.dump() << "\n";
    } else {
      std::cout << std::setw(5) << s.index << " " << std::left << std::setw(14) << (s.letter.empty() ? "-" : s.letter)
                << std::right << " len=" << to_string(s.value.length()) << (s.shape ? " S" : "  ")
                << " suffix=" << to_string(s.common_suffix);
      if (s.gamma_growth) std::cout << " |y|=" << to_string(*s.gamma_growth);
      std::cout << "\n";
    }
  }
  if (t.undefined_early) {
    if (as_json)
      std::cout << json{{"undefined_at", t.undefined_at}, {"letter", t.undefined_letter}}.dump() << "\n";
    else
      std::cout << "undefined at letter " << t.undefined_at << " (" << t.undefined_letter << ")\n";
  }
  return 0;
}

int cmd_lab_sgrowth(unsigned m, unsigned n, bool as_json) {
  bool ok = true;
  for (unsigned i = 1; i <= m; ++i)
    for (unsigned j = 1; j <= n; ++j) {
      Nat t = s_iterate(i, j);
      Nat lower = (Nat(1) << i) * boost::multiprecision::pow(Nat(j), 1u << i);
      ok = ok && t >= lower;
      if (as_json)
        std::cout << json{{"m", i}, {"n", j}, {"t", to_string(t)}, {"lower", to_string(lower)}}.dump() << "\n";
      else
        std::cout << "m=" << i << " n=" << j << " t=" << to_string(t) << " 2^m n^(2^m)=" << to_string(lower) << "\n";
    }
  return ok ? 0 : 1;
}

int cmd_check(const std::vector<std::string>& suites, const SuiteOptions& opts, bool timing) {
  std::vector<std::string> names = suites;
  if (names.empty() || (names.size() == 1 && names[0] == "all")) names = suite_names();
  bool all = true;
  for (const auto& n : names) {
    SuiteResult r;
    try {
      r = run_suite(n, opts);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    for (const auto& l : r.lines) std::cout << "  " << l << "\n";
    std::cout << (r.pass ? "PASS " : "FAIL ") << n;
    if (timing) std::cout << " (" << std::fixed << std::setprecision(3) << r.seconds << " s)";
    std::cout << "\n";
    all = all && r.pass;
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Right-ideal morphism calculator"};
  app.require_subcommand(1);

  std::string program, input, expr, oracle = "brute", check, word, a = "1", tail = "0010";
  bool verbose = false, diff = false, as_json = false, timing = false;
  unsigned nmax = 10, m = 5, n = 4, max_len = 48;
  std::vector<std::string> suites;
  SuiteOptions sopts;

  auto* run_cmd = app.add_subcommand("run", "Run a program file on an input word");
  run_cmd->add_option("--program", program, "Program text file")->required();
  run_cmd->add_option("--input", input, "Input word")->required();
  run_cmd->add_flag("--steps", verbose, "Print the step count");

  auto* eval_cmd = app.add_subcommand("eval", "Apply a morphism expression");
  eval_cmd->add_option("--expr", expr, "Morphism expression")->required();
  eval_cmd->add_option("--program", program, "Program bound to W");
  eval_cmd->add_option("--input", input, "Input word expression")->required();

  auto* pipe_cmd = app.add_subcommand("pipeline", "Compare the padded chain with a direct run");
  pipe_cmd->add_option("--program", program)->required();
  pipe_cmd->add_option("--input", input)->required();
  pipe_cmd->add_flag("--diff", diff, "Print MATCH or DIFFER");

  auto* inv_cmd = app.add_subcommand("invert", "Invert a program through an oracle for the evaluator");
  inv_cmd->add_option("--program", program)->required();
  inv_cmd->add_option("--input", input, "Word y to invert")->required();
  inv_cmd->add_option("--oracle", oracle, "Oracle kind (brute)");
  inv_cmd->add_option("--check", check, "plain or strengthened");
  inv_cmd->add_option("--search-length", max_len, "Preimage search length of the brute oracle");

  auto* lab_cmd = app.add_subcommand("lab", "Experiments on the witness family and s");
  lab_cmd->require_subcommand(1);
  auto* lw = lab_cmd->add_subcommand("witness", "Witness program properties");
  lw->add_option("--a", a, "Word a of code(a)^+ tail");
  lw->add_option("--tail", tail, "Tail of the domain code");
  lw->add_option("--nmax", nmax);
  lw->add_flag("--json", as_json, "Line-delimited JSON records");
  auto* lt = lab_cmd->add_subcommand("trace", "Suffix trace of a generator word");
  lt->add_option("--word", word, "Morphism expression, or 'chain'")->required();
  lt->add_option("--program", program)->required();
  lt->add_option("--input", input, "Tail u (the header code(W)11 is prepended)")->required();
  lt->add_flag("--json", as_json);
  auto* ls = lab_cmd->add_subcommand("sgrowth", "Iterates of s");
  ls->add_option("--m", m);
  ls->add_option("--n", n);
  ls->add_flag("--json", as_json);

  auto* check_cmd = app.add_subcommand("check", "Run identity suites");
  check_cmd->add_option("--suite", suites, "Suite names, or all");
  check_cmd->add_option("--samples", sopts.samples);
  check_cmd->add_option("--parallel", sopts.parallel);
  check_cmd->add_option("--seed", sopts.seed);
  check_cmd->add_flag("--timing", timing, "Append elapsed times");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*run_cmd) return cmd_run(program, input, verbose);
    if (*eval_cmd) return cmd_eval(expr, program, input);
    if (*pipe_cmd) return cmd_pipeline(program, input, diff);
    if (*inv_cmd) return cmd_invert(program, input, oracle, check, max_len);
    if (*lw) return cmd_lab_witness(a, tail, nmax, as_json);
    if (*lt) return cmd_lab_trace(word, program, input, as_json);
    if (*ls) return cmd_lab_sgrowth(m, n, as_json);
    if (*check_cmd) return cmd_check(suites, sopts, timing);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
