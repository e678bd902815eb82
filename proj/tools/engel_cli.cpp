// Command-line front end: every library operation behind a reproducible,
// scriptable invocation with text and JSON reports.
//
//   engel <noun> <verb> [--builtin name | --file path] [--seq id] [--n N] ...
//
// Exit codes: 0 = all requested checks passed/decided, 1 = a check failed
// (witness in the report), 2 = usage or input error.

#include <omp.h>

#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "engel/catalog.hpp"
#include "engel/errors.hpp"
#include "engel/fingroup.hpp"
#include "engel/liealg.hpp"
#include "engel/report.hpp"
#include "engel/verify.hpp"
#include "engel/words.hpp"

namespace {

using namespace engel;
using nlohmann::json;

struct CommonOpts {
  std::string builtin;
  std::string file;
  std::string seq;
  int n = 2;
  int max_iter = 50;
  std::string strategy = "class-reps";
  int threads = 0;
  unsigned seed = 0;
  std::string format = "text";
  std::string conj = "right";
  bool no_timing = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_model = true) {
  if (with_model) {
    cmd->add_option("--builtin", o.builtin, "builtin model name");
    cmd->add_option("--file", o.file, "model JSON file");
  }
  cmd->add_option("--seq", o.seq, "sequence id (e|v|w|r / e|s|u|w or full name)");
  cmd->add_option("--n", o.n, "sequence index n");
  cmd->add_option("--max-iter", o.max_iter, "iteration bound (default 50)");
  cmd->add_option("--strategy", o.strategy, "full|class-reps (default class-reps)")
      ->check(CLI::IsMember({"full", "class-reps"}));
  cmd->add_option("--threads", o.threads, "worker threads (0 = library default)");
  cmd->add_option("--seed", o.seed, "RNG seed (default 0)");
  cmd->add_option("--format", o.format, "text|json (default text)")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--conj-convention", o.conj, "left|right (default right)")
      ->check(CLI::IsMember({"left", "right"}));
  cmd->add_flag("--no-timing", o.no_timing, "zero the millis field (reproducible output)");
}

words::ConjConvention conj_of(const CommonOpts& o) {
  return o.conj == "left" ? words::ConjConvention::left : words::ConjConvention::right;
}

// Context-sensitive sequence aliases: single letters resolve to the Lie or
// group variant; full names (e-lie, s-bww, ...) are always accepted.
words::SequenceSpec seq_of(const CommonOpts& o, bool lie_context) {
  std::string name = o.seq;
  if (name.empty()) name = lie_context ? "v" : "e";
  if (name.size() == 1) {
    if (lie_context) {
      if (name == "e") name = "e-lie";
      else if (name == "v") name = "v-lie";
      else if (name == "w") name = "w-lie";
      else if (name == "r") name = "r-lie";
    } else {
      if (name == "e") name = "e-group";
      else if (name == "s") name = "s-bww";
      else if (name == "u") name = "u-bggkpp";
      else if (name == "w") name = "w-group";
    }
  }
  return words::sequence_by_name(name, conj_of(o));
}

lie::LiePtr load_lie(const CommonOpts& o) {
  if (!o.builtin.empty()) return cat::builtin_lie(o.builtin);
  if (!o.file.empty()) {
    auto loaded = cat::ingest(o.file);
    if (!loaded.lie) throw BadParams(o.file + " holds a group, not a Lie algebra");
    return loaded.lie;
  }
  throw BadParams("one of --builtin or --file is required");
}

grp::GroupPtr load_group(const CommonOpts& o) {
  if (!o.builtin.empty()) return cat::builtin_group(o.builtin);
  if (!o.file.empty()) {
    auto loaded = cat::ingest(o.file);
    if (!loaded.group) throw BadParams(o.file + " holds a Lie algebra, not a group");
    return loaded.group;
  }
  throw BadParams("one of --builtin or --file is required");
}

json model_inputs(const CommonOpts& o) {
  json j = json::object();
  if (!o.builtin.empty()) j["model"] = o.builtin;
  if (!o.file.empty()) j["file"] = o.file;
  return j;
}

void echo_config(rpt::Report& rep, const CommonOpts& o) {
  rep.config["seed"] = o.seed;
  rep.config["max-iter"] = o.max_iter;
  rep.config["strategy"] = o.strategy;
  rep.config["threads"] = o.threads == 0 ? omp_get_max_threads() : o.threads;
  rep.config["conj-convention"] = o.conj;
}

int emit(rpt::Report rep, const CommonOpts& o) {
  echo_config(rep, o);
  if (o.no_timing) rep.millis = 0;
  if (o.format == "json")
    std::cout << rep.to_json(!o.no_timing).dump(2) << "\n";
  else
    std::cout << rep.text() << "\n";
  return rep.ok() ? 0 : 1;
}

// Group element from text: an element index, or (for permutation groups)
// cycle notation such as "(1 2)(3 4)".
std::uint32_t parse_group_element(const grp::FiniteGroup& G, const std::string& text) {
  if (!text.empty() && (std::isdigit(static_cast<unsigned char>(text[0])) || text == "0")) {
    std::uint64_t idx = std::stoull(text);
    if (idx >= G.order()) throw BadParams("element index out of range: " + text);
    return static_cast<std::uint32_t>(idx);
  }
  const auto* pr = dynamic_cast<const grp::PermRep*>(G.rep().get());
  if (!pr) throw BadParams("cycle notation requires a permutation group; pass an index");
  return G.index_of(grp::parse_perm(pr->degree(), text));
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 t0)
        .count();
  }
};

lie::EngelOptions lie_opts(const CommonOpts& o) {
  lie::EngelOptions eo;
  eo.max_n = o.max_iter;
  eo.parallel = true;
  return eo;
}

grp::GroupEngelOptions grp_opts(const CommonOpts& o) {
  grp::GroupEngelOptions go;
  go.class_reps = o.strategy != "full";
  go.parallel = true;
  return go;
}

rpt::Report engel_verdict_report(const std::string& claim, const lie::LieAlgebra& L,
                                 const lie::EngelVerdict& v) {
  rpt::Report rep;
  rep.claim = claim;
  switch (v.outcome) {
    case lie::EngelVerdict::Outcome::engel: rep.verdict = "engel"; break;
    case lie::EngelVerdict::Outcome::not_engel: rep.verdict = "not-engel"; break;
    default: rep.verdict = "undetermined";
  }
  rep.iterations = v.iterations;
  rep.details["n"] = v.n;
  if (!v.certificate.empty()) rep.details["certificate"] = v.certificate;
  if (v.witness) rep.witness = {{"x", L.format_vec(*v.witness)}};
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Engel-sequence verification workbench"};
  app.require_subcommand(1);

  CommonOpts o;

  // ---- lie ------------------------------------------------------------
  auto* lie_cmd = app.add_subcommand("lie", "Lie algebra operations");
  lie_cmd->require_subcommand(1);

  std::string arg_u, arg_v, arg_y, arg_kind = "v", arg_series = "derived";
  std::string arg_compare, arg_out, arg_sigma, arg_text, arg_symbol = "x";

  auto* l_bracket = lie_cmd->add_subcommand("bracket", "bracket of two vectors");
  add_common(l_bracket, o);
  l_bracket->add_option("--u", arg_u, "first vector (comma-separated)")->required();
  l_bracket->add_option("--v", arg_v, "second vector")->required();

  auto* l_series = lie_cmd->add_subcommand("series", "derived / lower central series");
  add_common(l_series, o);
  l_series->add_option("--kind", arg_series, "derived|lower-central")
      ->check(CLI::IsMember({"derived", "lower-central"}));

  auto* l_radical = lie_cmd->add_subcommand("radical", "solvable radical");
  add_common(l_radical, o);
  auto* l_nilrad = lie_cmd->add_subcommand("nilradical", "nilradical");
  add_common(l_nilrad, o);

  auto* l_engel = lie_cmd->add_subcommand("engel", "Engel test for one element");
  add_common(l_engel, o);
  l_engel->add_option("--y", arg_y, "element (comma-separated coordinates)")->required();
  l_engel->add_option("--kind", arg_kind, "e|v|w|strict|total");

  auto* l_identity = lie_cmd->add_subcommand("identity", "is u_n(x,y) = 0 an identity?");
  add_common(l_identity, o);

  auto* l_set = lie_cmd->add_subcommand("engel-set", "Engel element set (finite field)");
  add_common(l_set, o);
  l_set->add_option("--kind", arg_kind, "e|v|w|strict|total");

  auto* l_export = lie_cmd->add_subcommand("export", "write canonical JSON");
  add_common(l_export, o);
  l_export->add_option("--out", arg_out, "output path")->required();

  // ---- group ----------------------------------------------------------
  auto* grp_cmd = app.add_subcommand("group", "finite group operations");
  grp_cmd->require_subcommand(1);

  auto* g_engel = grp_cmd->add_subcommand("engel", "Engel test for one element");
  add_common(g_engel, o);
  g_engel->add_option("--y", arg_y, "element index or cycle notation")->required();

  auto* g_set = grp_cmd->add_subcommand("engel-set", "Engel-like element set");
  add_common(g_set, o);
  g_set->add_option("--compare", arg_compare, "fitting|radical: compare against a subgroup")
      ->check(CLI::IsMember({"fitting", "radical"}));

  auto* g_radical = grp_cmd->add_subcommand("radical", "solvable radical");
  add_common(g_radical, o);
  auto* g_fitting = grp_cmd->add_subcommand("fitting", "Fitting subgroup");
  add_common(g_fitting, o);
  auto* g_cr = grp_cmd->add_subcommand("cr-radical", "CR-radical and isotypic components");
  add_common(g_cr, o);

  auto* g_identity = grp_cmd->add_subcommand("identity", "is u_n(x,y) = 1 an identity?");
  add_common(g_identity, o);

  auto* g_aut = grp_cmd->add_subcommand("engel-aut", "Engel test for an automorphism");
  add_common(g_aut, o);
  g_aut->add_option("--sigma", arg_sigma, "identity | swap | conj:<cycles>")->required();

  auto* g_export = grp_cmd->add_subcommand("export", "write canonical JSON");
  add_common(g_export, o);
  g_export->add_option("--out", arg_out, "output path")->required();

  // ---- word -----------------------------------------------------------
  auto* word_cmd = app.add_subcommand("word", "free-word sequence operations");
  word_cmd->require_subcommand(1);

  auto* w_gen = word_cmd->add_subcommand("generate", "n-th term of a sequence");
  add_common(w_gen, o, false);
  bool w_gen_lie = false;
  w_gen->add_flag("--lie", w_gen_lie, "interpret --seq as a Lie sequence");

  auto* w_reduce = word_cmd->add_subcommand("reduce", "freely reduce a word");
  add_common(w_reduce, o, false);
  w_reduce->add_option("--text", arg_text, "word, e.g. \"x^-2 y^-1 x\"")->required();

  auto* w_expsum = word_cmd->add_subcommand("exponent-sum", "exponent sum of a symbol");
  add_common(w_expsum, o, false);
  w_expsum->add_option("--text", arg_text, "word")->required();
  w_expsum->add_option("--symbol", arg_symbol, "x|y|z")->check(CLI::IsMember({"x", "y", "z"}));

  auto* w_correct = word_cmd->add_subcommand("check-correct", "correctness thresholds");
  add_common(w_correct, o, false);
  auto* w_auto = word_cmd->add_subcommand("check-autocorrect", "y-exponent-sum vanishing");
  add_common(w_auto, o, false);

  // ---- verify / catalog -------------------------------------------------
  auto* verify_cmd = app.add_subcommand("verify", "run a named verification suite");
  std::string suite;
  int samples = 100;
  verify_cmd->add_option("suite", suite, "suite name")->required();
  add_common(verify_cmd, o, false);
  verify_cmd->add_option("--samples", samples, "sampled elements per model (default 100)");

  auto* catalog_cmd = app.add_subcommand("catalog", "builtin model registry");
  auto* c_list = catalog_cmd->add_subcommand("list", "list builtin models");
  add_common(c_list, o, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (o.threads > 0) omp_set_num_threads(o.threads);

    // --- catalog list (plain output, no report) ---
    if (c_list->parsed()) {
      json j;
      j["lie"] = cat::builtin_lie_names();
      j["group"] = cat::builtin_group_names();
      if (o.format == "json") {
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "lie:";
        for (const auto& n : cat::builtin_lie_names()) std::cout << " " << n;
        std::cout << "\ngroup:";
        for (const auto& n : cat::builtin_group_names()) std::cout << " " << n;
        std::cout << "\n";
      }
      return 0;
    }

    if (verify_cmd->parsed()) {
      ver::SuiteOptions so;
      so.seed = o.seed;
      so.samples = samples;
      Timer t;
      rpt::Report rep = ver::run_suite(suite, so);
      rep.millis = t.ms();
      return emit(std::move(rep), o);
    }

    // --- lie ---
    if (l_bracket->parsed()) {
      auto L = load_lie(o);
      Timer t;
      auto w = L->bracket(L->parse_vec(arg_u), L->parse_vec(arg_v));
      rpt::Report rep;
      rep.claim = "lie-bracket";
      rep.inputs = model_inputs(o);
      rep.inputs["u"] = arg_u;
      rep.inputs["v"] = arg_v;
      rep.verdict = "pass";
      rep.details["value"] = L->format_vec(w);
      rep.millis = t.ms();
      return emit(std::move(rep), o);
    }
    if (l_series->parsed()) {
      auto L = load_lie(o);
      Timer t;
      auto kind = arg_series == "derived" ? lie::SeriesKind::derived : lie::SeriesKind::lower_central;
      auto chain = lie::series(*L, kind);
      rpt::Report rep;
      rep.claim = "lie-series";
      rep.inputs = model_inputs(o);
      rep.inputs["kind"] = arg_series;
      rep.verdict = "pass";
      json dims = json::array();
      for (const auto& s : chain) dims.push_back(s.dim());
      rep.details["dims"] = dims;
      rep.details["solvable"] = lie::is_solvable(*L);
      rep.details["nilpotent"] = lie::is_nilpotent_algebra(*L);
      rep.millis = t.ms();
      return emit(std::move(rep), o);
    }
    if (l_radical->parsed() || l_nilrad->parsed()) {
      auto L = load_lie(o);
      Timer t;
      bool nil = l_nilrad->parsed();
      auto S = nil ? lie::nilradical(*L) : lie::solvable_radical(*L);
      rpt::Report rep;
      rep.claim = nil ? "lie-nilradical" : "lie-radical";
      rep.inputs = model_inputs(o);
      rep.verdict = "pass";
      rep.details["dim"] = S.dim();
      json basis = json::array();
      for (const auto& b : S.basis()) basis.push_back(L->format_vec(b));
      rep.details["basis"] = basis;
      rep.millis = t.ms();
      return emit(std::move(rep), o);
    }
    if (l_engel->parsed()) {
      auto L = load_lie(o);
      Timer t;
      auto v = lie::engel_test(*L, L->parse_vec(arg_y), lie::engel_kind_by_name(arg_kind),
                               lie_opts(o));
      auto rep = engel_verdict_report("lie-engel", *L, v);
      rep.inputs = model_inputs(o);
      rep.inputs["y"] = arg_y;
      rep.inputs["kind"] = arg_kind;
      rep.millis = t.ms();
      return emit(std::move(rep), o);
    }
    if (l_identity->parsed()) {
      auto L = load_lie(o);
      Timer t;
      auto rep = lie::identity_check(*L, seq_of(o, true).id, o.n, lie_opts(o));
      rep.inputs.update(model_inputs(o));
      rep.millis = t.ms();
      return emit(std::move(rep), o);
    }
    if (l_set->parsed()) {
      auto L = load_lie(o);
      Timer t;
      auto res = lie::engel_set(*L, lie::engel_kind_by_name(arg_kind), lie_opts(o));
      auto rep = res.report;
      rep.inputs.update(model_inputs(o));
      rep.details["count"] = res.count;
      rep.millis = t.ms();
      return emit(std::move(rep), o);
    }
    if (l_export->parsed()) {
      auto L = load_lie(o);
      cat::save_json_file(arg_out, cat::lie_to_json(*L));
      rpt::Report rep;
      rep.claim = "export";
      rep.inputs = model_inputs(o);
      rep.verdict = "pass";
      rep.details["out"] = arg_out;
      return emit(std::move(rep), o);
    }

    // --- group ---
    if (g_engel->parsed()) {
      auto G = load_group(o);
      Timer t;
      std::uint32_t y = parse_group_element(*G, arg_y);
      auto r = grp::is_engel_element(*G, seq_of(o, false), y, grp_opts(o));
      rpt::Report rep;
      rep.claim = "group-engel";
      rep.inputs = model_inputs(o);
      rep.inputs["y"] = G->describe(y);
      rep.inputs["seq"] = words::sequence_name(seq_of(o, false).id);
      rep.verdict = r.engel ? "engel" : "not-engel";
      rep.details["max-n"] = r.max_n;
      if (r.witness_x) rep.witness = {{"x", G->describe(*r.witness_x)}};
      rep.millis = t.ms();
      return emit(std::move(rep), o);
    }
    if (g_set->parsed()) {
      auto G = load_group(o);
      Timer t;
      auto res = grp::engel_like_set(*G, seq_of(o, false), grp_opts(o));
      auto rep = res.report;
      rep.inputs.update(model_inputs(o));
      rep.details["count"] = res.count;
      if (!arg_compare.empty()) {
        auto H = arg_compare == "fitting" ? grp::fitting_subgroup(*G) : grp::solvable_radical(*G);
        bool equal = true, contains = true;
        for (std::uint32_t i = 0; i < G->order(); ++i) {
          if (bool(res.member[i]) != H.contains(i)) equal = false;
          if (H.contains(i) && !res.member[i]) contains = false;
        }
        rep.details["compare"] = arg_compare;
        rep.details["compare-order"] = H.order();
        rep.details["contains-subgroup"] = contains;
        rep.details["equal"] = equal;
        rep.verdict = equal ? "pass" : "fail";
      }
      rep.millis = t.ms();
      return emit(std::move(rep), o);
    }
    if (g_radical->parsed() || g_fitting->parsed()) {
      auto G = load_group(o);
      Timer t;
      bool fit = g_fitting->parsed();
      auto H = fit ? grp::fitting_subgroup(*G) : grp::solvable_radical(*G);
      rpt::Report rep;
      rep.claim = fit ? "group-fitting" : "group-radical";
      rep.inputs = model_inputs(o);
      rep.verdict = "pass";
      rep.details["order"] = H.order();
      rep.details["group-order"] = G->order();
      rep.millis = t.ms();
      return emit(std::move(rep), o);
    }
    if (g_cr->parsed()) {
      auto G = load_group(o);
      Timer t;
      auto res = grp::cr_radical(*G);
      rpt::Report rep;
      rep.claim = "group-cr-radical";
      rep.inputs = model_inputs(o);
      rep.verdict = "pass";
      rep.details["order"] = res.V.order();
      json comps = json::array();
      for (const auto& c : res.components)
        comps.push_back({{"simple-order", c.simple_order},
                         {"multiplicity", c.minimal_indices.size()}});
      rep.details["components"] = comps;
      rep.millis = t.ms();
      return emit(std::move(rep), o);
    }
    if (g_identity->parsed()) {
      auto G = load_group(o);
      Timer t;
      auto rep = grp::identity_holds(*G, seq_of(o, false), o.n, grp_opts(o));
      rep.inputs.update(model_inputs(o));
      rep.millis = t.ms();
      return emit(std::move(rep), o);
    }
    if (g_aut->parsed()) {
      auto G = load_group(o);
      Timer t;
      grp::Automorphism sigma;
      if (arg_sigma == "identity") {
        sigma = grp::identity_automorphism(*G);
      } else if (arg_sigma == "swap") {
        sigma = grp::swap_automorphism(*G);
      } else if (arg_sigma.rfind("conj:", 0) == 0) {
        const auto* pr = dynamic_cast<const grp::PermRep*>(G->rep().get());
        if (!pr) throw BadParams("conj: automorphisms require a permutation group");
        sigma = grp::perm_conjugation(*G, grp::parse_perm(pr->degree(), arg_sigma.substr(5)));
      } else {
        throw BadParams("unknown --sigma: " + arg_sigma);
      }
      auto rep = grp::engel_automorphism_test(*G, sigma, seq_of(o, false), grp_opts(o));
      rep.inputs.update(model_inputs(o));
      rep.inputs["sigma"] = arg_sigma;
      rep.millis = t.ms();
      return emit(std::move(rep), o);
    }
    if (g_export->parsed()) {
      auto G = load_group(o);
      cat::save_json_file(arg_out, cat::group_to_json(*G));
      rpt::Report rep;
      rep.claim = "export";
      rep.inputs = model_inputs(o);
      rep.verdict = "pass";
      rep.details["out"] = arg_out;
      return emit(std::move(rep), o);
    }

    // --- word ---
    if (w_gen->parsed()) {
      auto spec = seq_of(o, w_gen_lie);
      rpt::Report rep;
      rep.claim = "word-generate";
      rep.inputs["seq"] = words::sequence_name(spec.id);
      rep.inputs["n"] = o.n;
      rep.verdict = "pass";
      if (spec.is_group) {
        auto w = words::generate_group(spec, o.n);
        rep.details["word"] = words::format_word(w);
        rep.details["reduced-length"] = w.reduced_length();
      } else {
        rep.details["term"] = words::format_term(words::generate_lie(spec, o.n));
      }
      return emit(std::move(rep), o);
    }
    if (w_reduce->parsed()) {
      auto w = words::reduce(words::parse_word(arg_text));
      rpt::Report rep;
      rep.claim = "word-reduce";
      rep.inputs["text"] = arg_text;
      rep.verdict = "pass";
      rep.details["word"] = words::format_word(w);
      return emit(std::move(rep), o);
    }
    if (w_expsum->parsed()) {
      auto sym = arg_symbol == "x"   ? words::Symbol::x
                 : arg_symbol == "y" ? words::Symbol::y
                                     : words::Symbol::z;
      rpt::Report rep;
      rep.claim = "word-exponent-sum";
      rep.inputs["text"] = arg_text;
      rep.inputs["symbol"] = arg_symbol;
      rep.verdict = "pass";
      rep.details["sum"] = words::exponent_sum(words::parse_word(arg_text), sym);
      return emit(std::move(rep), o);
    }
    if (w_correct->parsed() || w_auto->parsed()) {
      auto spec = seq_of(o, false);
      auto rep = w_correct->parsed() ? words::check_correct(spec, o.n)
                                     : words::check_autocorrect(spec, o.n);
      return emit(std::move(rep), o);
    }

    std::cerr << "no operation selected\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
