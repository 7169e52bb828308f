// matchmonoid: poset validation, special-matching enumeration, monoid
// analysis, and one-shot reproduction of the frozen result tables.
//
// Exit codes: 0 success, 1 negative analysis under --require-eulerian,
// 2 input or execution error (including timeouts), 3 reproduction mismatch.

#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "matchmonoid/builtin.hpp"
#include "matchmonoid/config.hpp"
#include "matchmonoid/errors.hpp"
#include "matchmonoid/json_io.hpp"
#include "matchmonoid/matching.hpp"
#include "matchmonoid/poset.hpp"
#include "matchmonoid/repro.hpp"

namespace mm = matchmonoid;

namespace {

struct GlobalFlags {
  bool pretty = false;
  bool require_eulerian = false;
  bool count_only = false;
  unsigned workers = 0;
  double timeout = 0.0;
};

struct InputArgs {
  std::string positional;
  std::string file;
  std::string builtin;
};

void emit(const mm::ojson& j, const GlobalFlags& g) {
  std::cout << mm::dump_json(j, g.pretty) << "\n";
}

mm::PosetPtr load_input(const InputArgs& in) {
  int given = (!in.positional.empty() ? 1 : 0) + (!in.file.empty() ? 1 : 0) +
              (!in.builtin.empty() ? 1 : 0);
  if (given == 0)
    mm::fail(mm::Errc::bad_parameter,
             "no poset input: pass a builtin spec, --input FILE, or --builtin SPEC");
  if (given > 1) mm::fail(mm::Errc::bad_parameter, "more than one poset input given");
  if (!in.file.empty()) return mm::load_poset_file(in.file);
  if (!in.builtin.empty()) return mm::builtin_poset(in.builtin);
  // Positional convenience: builtin specs always contain ':'.
  if (in.positional.find(':') != std::string::npos)
    return mm::builtin_poset(in.positional);
  return mm::load_poset_file(in.positional);
}

// Shared gate: under --require-eulerian a non-Eulerian input is a negative
// analysis result (exit 1), not an error.
bool eulerian_gate(const mm::Poset& p, const GlobalFlags& g) {
  if (!g.require_eulerian || p.eulerian()) return true;
  emit({{"eulerian", false}, {"note", "input rejected by --require-eulerian"}}, g);
  return false;
}

int parse_int(const std::string& s) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    mm::fail(mm::Errc::bad_parameter, "expected an integer, got '" + s + "'");
  }
  if (pos != s.size())
    mm::fail(mm::Errc::bad_parameter, "expected an integer, got '" + s + "'");
  return v;
}

int cmd_poset_check(const InputArgs& in, const GlobalFlags& g) {
  mm::PosetPtr p = load_input(in);
  emit({{"ok", true},
        {"n", p->n},
        {"bottom", p->bottom},
        {"top", p->top},
        {"max_rank", p->max_rank()},
        {"eulerian", p->eulerian()}},
       g);
  return eulerian_gate(*p, g) ? 0 : 1;
}

int cmd_poset_eulerian(const InputArgs& in, const GlobalFlags& g) {
  mm::PosetPtr p = load_input(in);
  bool e = p->eulerian();
  emit({{"eulerian", e}}, g);
  return (g.require_eulerian && !e) ? 1 : 0;
}

int cmd_poset_mobius(const std::vector<std::string>& args, const InputArgs& flags,
                     const GlobalFlags& g) {
  InputArgs in = flags;
  std::size_t at = 0;
  if (args.size() == 3) in.positional = args[at++];
  int x = parse_int(args[at]);
  int y = parse_int(args[at + 1]);
  mm::PosetPtr p = load_input(in);
  if (!eulerian_gate(*p, g)) return 1;
  mm::Integer v = mm::mobius(*p, x, y);
  emit({{"x", x}, {"y", y}, {"mobius", mm::integer_json(v)}}, g);
  return 0;
}

int cmd_poset_dot(const InputArgs& in, const GlobalFlags& g) {
  mm::PosetPtr p = load_input(in);
  if (!eulerian_gate(*p, g)) return 1;
  std::cout << mm::to_dot(*p);
  return 0;
}

int cmd_matchings(bool partial, const InputArgs& in, const GlobalFlags& g) {
  mm::PosetPtr p = load_input(in);
  if (!eulerian_gate(*p, g)) return 1;
  if (partial) {
    std::vector<mm::PartialMatching> ms = mm::enumerate_special_partial_matchings(p);
    emit({{"kind", "partial"}, {"count", ms.size()}}, g);
    if (!g.count_only)
      for (const mm::PartialMatching& m : ms) emit(mm::matching_to_json(m), g);
  } else {
    std::vector<mm::Matching> ms = mm::enumerate_special_matchings(p);
    emit({{"kind", "special"}, {"count", ms.size()}}, g);
    if (!g.count_only)
      for (const mm::Matching& m : ms) emit(mm::matching_to_json(m), g);
  }
  return 0;
}

int cmd_reproduce(const std::string& claim, int n, const GlobalFlags& g) {
  std::vector<mm::ReproReport> reports = mm::reproduce(claim, n);
  std::size_t passed = 0;
  for (const mm::ReproReport& r : reports) {
    emit(mm::repro_report_json(r), g);
    if (r.pass) ++passed;
  }
  emit({{"claims", reports.size()}, {"passed", passed}}, g);
  return passed == reports.size() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-poset special matchings, regressive monoids, and "
               "frozen-result reproduction"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  app.add_flag("--pretty", g.pretty, "indent JSON output");
  app.add_flag("--require-eulerian", g.require_eulerian,
               "treat a non-Eulerian input poset as a negative result (exit 1)");
  app.add_option("--workers", g.workers, "worker threads (0 = hardware count)");
  app.add_option("--timeout", g.timeout, "wall-clock limit in seconds");

  std::function<int()> action;

  // poset {check, mobius, eulerian, dot}
  CLI::App* poset_cmd = app.add_subcommand("poset", "build and inspect posets");
  poset_cmd->require_subcommand(1);
  poset_cmd->fallthrough();
  InputArgs pin;
  auto add_input = [&pin](CLI::App* c) {
    c->fallthrough();
    c->add_option("--input", pin.file, "poset JSON file");
    c->add_option("--builtin", pin.builtin,
                  "builtin spec: chain:N | divisors:N | bruhat:N | "
                  "involutions:N | product:(SPEC,...)");
  };

  CLI::App* check_cmd = poset_cmd->add_subcommand("check", "validate and summarize");
  add_input(check_cmd);
  check_cmd->add_option("source", pin.positional, "poset file or builtin spec");
  check_cmd->callback([&] { action = [&] { return cmd_poset_check(pin, g); }; });

  CLI::App* eulerian_cmd = poset_cmd->add_subcommand("eulerian", "Eulerian test");
  add_input(eulerian_cmd);
  eulerian_cmd->add_option("source", pin.positional, "poset file or builtin spec");
  eulerian_cmd->callback(
      [&] { action = [&] { return cmd_poset_eulerian(pin, g); }; });

  CLI::App* mobius_cmd =
      poset_cmd->add_subcommand("mobius", "Moebius function value");
  add_input(mobius_cmd);
  std::vector<std::string> mobius_args;
  mobius_cmd->add_option("args", mobius_args, "[input] x y")->expected(2, 3);
  mobius_cmd->callback(
      [&] { action = [&] { return cmd_poset_mobius(mobius_args, pin, g); }; });

  CLI::App* dot_cmd = poset_cmd->add_subcommand("dot", "emit the Hasse diagram as DOT");
  add_input(dot_cmd);
  dot_cmd->add_option("source", pin.positional, "poset file or builtin spec");
  dot_cmd->callback([&] { action = [&] { return cmd_poset_dot(pin, g); }; });

  // matchings {special, partial}
  CLI::App* matchings_cmd =
      app.add_subcommand("matchings", "enumerate special (partial) matchings");
  matchings_cmd->require_subcommand(1);
  matchings_cmd->fallthrough();
  matchings_cmd->add_flag("--count-only", g.count_only, "emit only the count");

  CLI::App* special_cmd =
      matchings_cmd->add_subcommand("special", "perfect special matchings");
  add_input(special_cmd);
  special_cmd->add_option("source", pin.positional, "poset file or builtin spec");
  special_cmd->callback(
      [&] { action = [&] { return cmd_matchings(false, pin, g); }; });

  CLI::App* partial_cmd =
      matchings_cmd->add_subcommand("partial", "special partial matchings");
  add_input(partial_cmd);
  partial_cmd->add_option("source", pin.positional, "poset file or builtin spec");
  partial_cmd->callback(
      [&] { action = [&] { return cmd_matchings(true, pin, g); }; });

  // reproduce
  CLI::App* repro_cmd = app.add_subcommand(
      "reproduce", "re-derive a frozen result table and compare exactly");
  repro_cmd->fallthrough();
  std::string claim;
  int claim_n = -1;
  repro_cmd->add_option("claim", claim, "claim id or 'all'")->required();
  repro_cmd->add_option("--n", claim_n,
                        "table size for the projection-table claims");
  repro_cmd->callback(
      [&] { action = [&] { return cmd_reproduce(claim, claim_n, g); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (g.workers > 0) mm::config::set_workers(g.workers);
    if (g.timeout > 0) mm::config::set_timeout_seconds(g.timeout);
    if (!action) mm::fail(mm::Errc::bad_parameter, "no command selected");
    return action();
  } catch (const mm::Error& e) {
    emit({{"error", mm::errc_name(e.code())}, {"message", e.what()}}, g);
    return 2;
  } catch (const std::exception& e) {
    emit({{"error", "internal"}, {"message", e.what()}}, g);
    return 2;
  }
}
