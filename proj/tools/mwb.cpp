#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mwb/coding.hpp"
#include "mwb/error.hpp"
#include "mwb/eval.hpp"
#include "mwb/gadgets.hpp"
#include "mwb/interpret.hpp"
#include "mwb/monoid.hpp"
#include "mwb/parse.hpp"
#include "mwb/prenex.hpp"
#include "mwb/verify.hpp"

namespace {

using namespace mwb;

struct Ctx {
  std::string monoid_spec = "free:x1,x2";
  size_t bound = 0;
  std::string mode = "exhaustive";
  bool machine = false;
};

std::string join(std::vector<std::string> const& parts, char sep) {
  std::string out;
  for (auto const& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

GadgetParams params_over(MonoidModel const& M) {
  return GadgetParams{M.alphabet(), 0, 1};
}

Interpretation make_interp(std::string const& name, MonoidModel const& M) {
  auto free_params = [&] {
    if (M.kind() == MonoidModel::Kind::free && M.alphabet()->size() >= 2)
      return params_over(M);
    return standard_params();
  };
  if (name == "nat-in-free") return nat_in_free(free_params());
  if (name == "nat-in-free-noparam")
    return nat_in_free_noparam(free_params().alphabet);
  if (name == "nat-in-trace") return nat_in_trace(M);
  if (name == "monoid-in-nat") return monoid_in_nat(M.alphabet());
  if (name == "snn-in-nat") return snn_in_nat();
  if (name == "snn-in-free") return snn_in_free(free_params());
  throw Error(
      "unknown interpretation " + name +
      "; choices: nat-in-free nat-in-free-noparam nat-in-trace monoid-in-nat "
      "snn-in-nat snn-in-free");
}

int cmd_eval(Ctx const& ctx, MonoidModel const& M, std::string const& text,
             std::vector<std::string> const& lets, std::string const& sig_name) {
  Sig sig = sig_name == "arith" ? Sig::arithmetic : Sig::monoid;
  FormulaPtr f = parse_formula(
      text, sig, sig == Sig::monoid ? M.alphabet() : AlphabetPtr{});
  Structure S = sig == Sig::monoid ? Structure::over(M) : Structure::nat();

  Assignment a;
  for (auto const& let : lets) {
    size_t eq = let.find('=');
    if (eq == std::string::npos)
      throw Error("--let expects var=value, got '" + let + "'");
    std::string var = let.substr(0, eq), val = let.substr(eq + 1);
    if (sig == Sig::monoid)
      a[var] = Value(Word::parse(val, M.alphabet()));
    else
      a[var] = Value(static_cast<uint64_t>(std::stoull(val)));
  }

  EvalOptions opt;
  opt.bound = ctx.bound;
  opt.mode = ctx.mode == "witness" ? EvalMode::witness : EvalMode::exhaustive;

  EvalStats st;
  auto t0 = std::chrono::steady_clock::now();
  bool r = eval(S, f, a, opt, &st);
  auto dt = std::chrono::duration<double, std::milli>(
                std::chrono::steady_clock::now() - t0)
                .count();

  if (ctx.machine) {
    std::cout << "result=" << (r ? "true" : "false") << "\n"
              << "nodes=" << st.nodes << "\n"
              << "candidates=" << st.candidates << "\n";
  } else {
    std::cout << (r ? "true" : "false") << "\n"
              << "nodes " << st.nodes << ", candidates " << st.candidates
              << ", elapsed " << dt << " ms\n";
  }
  return 0;
}

int cmd_gadget(Ctx const& ctx, MonoidModel const& M, std::string const& name,
               std::vector<std::string> const& args) {
  GadgetBuild g = build_gadget(
      name, args, params_over(M),
      M.kind() == MonoidModel::Kind::trace ? &M : nullptr);
  if (ctx.machine) {
    std::cout << "name=" << g.name << "\n";
    if (g.has_word) std::cout << "word=" << g.word.str() << "\n";
    if (g.formula) {
      std::cout << "formula=" << print(g.formula) << "\n"
                << "frees=" << join(g.frees, ',') << "\n";
    }
    std::cout << "bound=" << g.witness_bound << "\n";
  } else {
    if (g.has_word) std::cout << "word " << g.word.pretty() << "\n";
    if (g.formula) {
      std::cout << "formula " << print(g.formula) << "\n"
                << "frees " << join(g.frees, ' ') << "\n";
    }
    std::cout << "bound " << g.witness_bound << "\n";
  }
  return 0;
}

int cmd_verify(Ctx const& ctx, std::string const& suite, size_t max) {
  SuiteResult res = run_suite(suite, max);
  if (ctx.machine) {
    std::cout << "suite=" << res.name << "\n"
              << "clean=" << (res.clean() ? "true" : "false") << "\n"
              << "ok=" << res.report.ok << "\n";
    for (auto const& s : res.report.false_positives)
      std::cout << "fp=" << s << "\n";
    for (auto const& s : res.report.false_negatives)
      std::cout << "fn=" << s << "\n";
    for (auto const& s : res.notes) std::cout << "note=" << s << "\n";
  } else {
    if (res.clean()) {
      std::cout << "OK, " << res.report.ok << " instances\n";
      for (auto const& s : res.notes) std::cout << s << "\n";
    } else {
      std::cout << res.str() << "FAIL\n";
    }
  }
  return res.clean() ? 0 : 1;
}

int cmd_translate(Ctx const& ctx, MonoidModel const& M,
                  std::string const& name, std::string const& text) {
  Interpretation I = make_interp(name, M);
  FormulaPtr f = parse_formula(text, I.source, I.source_alphabet);
  FormulaPtr g = translate(f, I);
  std::string before = classify(f).str(), after = classify(g).str();
  if (ctx.machine) {
    std::cout << "formula=" << print(g) << "\n"
              << "level_before=" << before << "\n"
              << "level_after=" << after << "\n";
    if (name == "nat-in-free")
      std::cout << "inflation=" << measured_inflation(I) << "\n";
  } else {
    std::cout << print(g) << "\n"
              << "level " << before << " -> " << after << "\n";
    if (name == "nat-in-free")
      std::cout << "inflation m=" << measured_inflation(I) << "\n";
  }
  return 0;
}

int cmd_member(Ctx const& ctx, MonoidModel const& M, std::string const& gs,
               std::vector<std::string> const& gen_texts) {
  if (M.kind() != MonoidModel::Kind::free)
    throw Error("member decides submonoids of free monoids; configure "
                "--monoid free:...");
  Word g = Word::parse(gs, M.alphabet());
  std::vector<Word> gens;
  for (auto const& t : gen_texts) gens.push_back(Word::parse(t, M.alphabet()));
  Membership r = submonoid_member(g, gens);
  if (ctx.machine) {
    std::cout << "member=" << (r.member ? "yes" : "no") << "\n";
    if (r.member) {
      std::string fs;
      for (size_t idx : r.factors) {
        if (!fs.empty()) fs += ',';
        fs += std::to_string(idx);
      }
      std::cout << "factors=" << fs << "\n";
    }
    for (auto const& w : r.warnings) std::cout << "warning=" << w << "\n";
  } else {
    for (auto const& w : r.warnings) std::cerr << "warning: " << w << "\n";
    if (r.member) {
      std::string fs;
      for (size_t idx : r.factors) fs += "(" + gens[idx].str() + ")";
      std::cout << "yes" << (fs.empty() ? "" : ", " + fs) << "\n";
    } else {
      std::cout << "no\n";
    }
  }
  return 0;
}

int cmd_classify(Ctx const& ctx, MonoidModel const& M, std::string const& text,
                 std::string const& sig_name) {
  Sig sig = sig_name == "arith" ? Sig::arithmetic : Sig::monoid;
  FormulaPtr f = parse_formula(
      text, sig, sig == Sig::monoid ? M.alphabet() : AlphabetPtr{});
  if (ctx.machine)
    std::cout << "level=" << classify(f).str() << "\n";
  else
    std::cout << classify(f).str() << "\n";
  return 0;
}

int cmd_code(Ctx const& ctx, MonoidModel const& M, std::string const& text) {
  Code c = word_code(Word::parse(text, M.alphabet()));
  if (ctx.machine)
    std::cout << "code=" << code_str(c) << "\n";
  else
    std::cout << code_str(c) << "\n";
  return 0;
}

int cmd_decode(Ctx const& ctx, MonoidModel const& M, std::string const& code_text) {
  Word w = word_decode(parse_code(code_text), M.alphabet());
  if (ctx.machine)
    std::cout << "word=" << w.str() << "\n";
  else
    std::cout << w.str() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Ctx ctx;
  CLI::App app{"bounded model-theory workbench for monoids and arithmetic"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "JSON config file; flags override");
  auto* o_monoid = app.add_option(
      "--monoid", ctx.monoid_spec,
      "monoid spec: free:<g,...> | trace:<g,...>;edges=<gi-gj,...> | bs:<k>,<m>");
  auto* o_bound = app.add_option("--bound", ctx.bound, "quantifier bound");
  auto* o_mode = app.add_option("--mode", ctx.mode, "exhaustive | witness")
                     ->check(CLI::IsMember({"exhaustive", "witness"}));
  auto* o_machine =
      app.add_flag("--machine", ctx.machine, "key=value output lines");

  auto* c_eval = app.add_subcommand("eval", "evaluate a formula");
  std::string eval_text, eval_sig = "monoid";
  std::vector<std::string> eval_lets;
  c_eval->add_option("formula", eval_text)->required();
  c_eval->add_option("--let", eval_lets, "fix a free variable, var=value");
  c_eval->add_option("--sig", eval_sig)->check(CLI::IsMember({"monoid", "arith"}));

  auto* c_gadget = app.add_subcommand("gadget", "build a catalogue gadget");
  std::string gadget_name;
  std::vector<std::string> gadget_args;
  c_gadget->add_option("name", gadget_name)->required();
  c_gadget->add_option("args", gadget_args);

  auto* c_verify = app.add_subcommand("verify", "run a verification suite");
  std::string verify_suite;
  size_t verify_max = 0;
  c_verify->add_option("suite", verify_suite)->required();
  c_verify->add_option("--max", verify_max, "instance size limit");

  auto* c_translate =
      app.add_subcommand("translate", "push a formula through an interpretation");
  std::string tr_name, tr_text;
  c_translate->add_option("interpretation", tr_name)->required();
  c_translate->add_option("formula", tr_text)->required();

  auto* c_member = app.add_subcommand("member", "submonoid membership");
  std::string member_g;
  std::vector<std::string> member_gens;
  c_member->add_option("element", member_g)->required();
  c_member->add_option("generators", member_gens)->required();

  auto* c_classify = app.add_subcommand("classify", "quantifier hierarchy level");
  std::string cl_text, cl_sig = "monoid";
  c_classify->add_option("formula", cl_text)->required();
  c_classify->add_option("--sig", cl_sig)
      ->check(CLI::IsMember({"monoid", "arith"}));

  auto* c_code = app.add_subcommand("code", "numeric code of a word");
  std::string code_text;
  c_code->add_option("word", code_text)->required();

  auto* c_decode = app.add_subcommand("decode", "word of a numeric code");
  std::string decode_value;
  c_decode->add_option("code", decode_value)->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw Error("cannot open config file " + config_path);
      nlohmann::json j = nlohmann::json::parse(in);
      if (o_monoid->count() == 0 && j.contains("monoid"))
        ctx.monoid_spec = j.at("monoid").get<std::string>();
      if (o_bound->count() == 0 && j.contains("bound"))
        ctx.bound = j.at("bound").get<size_t>();
      if (o_mode->count() == 0 && j.contains("mode")) {
        ctx.mode = j.at("mode").get<std::string>();
        if (ctx.mode != "exhaustive" && ctx.mode != "witness")
          throw Error("config mode must be exhaustive or witness");
      }
      if (o_machine->count() == 0 && j.contains("machine"))
        ctx.machine = j.at("machine").get<bool>();
    }

    MonoidModel M = MonoidModel::parse(ctx.monoid_spec);

    if (c_eval->parsed())
      return cmd_eval(ctx, M, eval_text, eval_lets, eval_sig);
    if (c_gadget->parsed()) return cmd_gadget(ctx, M, gadget_name, gadget_args);
    if (c_verify->parsed()) return cmd_verify(ctx, verify_suite, verify_max);
    if (c_translate->parsed()) return cmd_translate(ctx, M, tr_name, tr_text);
    if (c_member->parsed()) return cmd_member(ctx, M, member_g, member_gens);
    if (c_classify->parsed()) return cmd_classify(ctx, M, cl_text, cl_sig);
    if (c_code->parsed()) return cmd_code(ctx, M, code_text);
    if (c_decode->parsed()) return cmd_decode(ctx, M, decode_value);
    return 2;
  } catch (nlohmann::json::exception const& e) {
    std::cerr << "error: config: " << e.what() << "\n";
    return 2;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
