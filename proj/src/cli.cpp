#include "segalkit/cli.hpp"

#include <CLI11.hpp>
#include <optional>
#include <ostream>

#include "segalkit/fixtures.hpp"
#include "segalkit/json_io.hpp"

namespace segal {

namespace {

json report_json(const std::string& command, const CheckReport& rep) {
  json j = rep.to_json();
  j["command"] = command;
  return j;
}

int emit(std::ostream& out, const std::string& command, const CheckReport& rep,
         const std::optional<json>& artifact, const std::string& output) {
  out << dump_canonical(report_json(command, rep));
  if (!output.empty() && artifact) save_json(output, *artifact);
  return rep.passed ? 0 : 1;
}

int emit_error(std::ostream& out, const std::string& command,
               const std::string& message) {
  json j;
  j["command"] = command;
  j["passed"] = false;
  j["error"] = message;
  out << dump_canonical(j);
  return 2;
}

CheckReport size_stats(const TruncSSet& S) {
  CheckReport rep;
  for (int n = 0; n <= S.trunc_level; ++n)
    rep.stats["level-" + std::to_string(n)] = S.size(n);
  rep.finalize();
  return rep;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"finite simplicial sets, operadic categories, and their checks"};
  app.require_subcommand(1);

  std::string input, output;
  int level = 5;
  std::string variant = "both", order = "lr", side = "top", form = "cat";
  std::uint64_t seed = 1;
  int size = 4;

  auto with_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "input JSON file")->required();
    return sub;
  };
  auto with_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", output, "write the artifact here");
    return sub;
  };

  with_input(app.add_subcommand("check-simplicial", "face and degeneracy laws"));
  with_input(app.add_subcommand("check-segal", "spine-chain comparison"));
  auto* two = with_input(
      app.add_subcommand("check-2segal", "exactness-square comparison"));
  two->add_option("--variant", variant, "upper, lower, or both")
      ->check(CLI::IsMember({"upper", "lower", "both"}));
  auto* dec = with_output(
      with_input(app.add_subcommand("dec", "shift one level down, keep a side")));
  dec->add_option("--side", side, "which outer face becomes the reference map")
      ->check(CLI::IsMember({"top", "bot"}));
  with_output(with_input(
      app.add_subcommand("sd", "interval subdivision of a simplicial set")));
  auto* nerve_cmd = with_output(
      with_input(app.add_subcommand("nerve", "chains of composable arrows")));
  nerve_cmd->add_option("--level", level, "truncation level");
  with_output(with_input(
      app.add_subcommand("from-segal", "rebuild the category a Segal set presents")));
  with_output(with_input(app.add_subcommand("tw", "category of factorizations")));
  with_input(app.add_subcommand("opcat-check", "operadic axioms"));
  with_input(app.add_subcommand("blowup", "unique-decomposition property"));
  auto* undeck_cmd = with_output(with_input(
      app.add_subcommand("undeck", "terminal-capped chain simplicial set")));
  undeck_cmd->add_option("--level", level, "truncation level");
  with_output(with_input(
      app.add_subcommand("fibers", "per-arrow fiber classification")));
  with_output(with_input(
      app.add_subcommand("expand", "two-sided arrows via the swap rule")));
  auto* fact = with_output(with_input(
      app.add_subcommand("factorize", "split subdivision edges through the "
                                      "canonical middle cell")));
  fact->add_option("--order", order, "lr or rl")
      ->check(CLI::IsMember({"lr", "rl"}));
  with_output(with_input(
      app.add_subcommand("hypermoment", "active/inert analysis and the full gate")));
  auto* rt = with_input(
      app.add_subcommand("roundtrip", "there-and-back reconstruction checks"));
  rt->add_option("--level", level, "truncation level");
  auto* gen = with_output(
      app.add_subcommand("generate", "seed-deterministic example structures"));
  gen->add_option("--seed", seed, "generator seed");
  gen->add_option("--size", size, "object count");
  gen->add_option("--level", level, "truncation level for simplicial output");
  gen->add_option("--form", form, "cat, opcat, or sset")
      ->check(CLI::IsMember({"cat", "opcat", "sset"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    return emit_error(out, "parse", e.what());
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "check-simplicial") {
      TruncSSet S = sset_from_json(load_json(input));
      return emit(out, command, check_simplicial_identities(S), std::nullopt, "");
    }
    if (command == "check-segal") {
      TruncSSet S = sset_from_json(load_json(input));
      return emit(out, command, check_segal(S), std::nullopt, "");
    }
    if (command == "check-2segal") {
      TruncSSet S = sset_from_json(load_json(input));
      TwoSegalVariant v = variant == "upper"   ? TwoSegalVariant::Upper
                          : variant == "lower" ? TwoSegalVariant::Lower
                                               : TwoSegalVariant::Both;
      return emit(out, command, check_two_segal(S, v), std::nullopt, "");
    }
    if (command == "dec") {
      TruncSSet S = sset_from_json(load_json(input));
      AugmentedTruncSSet A =
          side == "top" ? upper_decalage(S) : lower_decalage(S);
      CheckReport rep = A.verify_augmentation();
      for (const auto& [k, v] : size_stats(A.body).stats) rep.stats[k] = v;
      return emit(out, command, rep, sset_to_json(A.body), output);
    }
    if (command == "sd") {
      TruncSSet S = sset_from_json(load_json(input));
      TruncSSet R = edgewise_subdivision(S);
      CheckReport rep = check_simplicial_identities(R);
      return emit(out, command, rep, sset_to_json(R), output);
    }
    if (command == "nerve") {
      FinCat C = fincat_from_json(load_json(input));
      TruncSSet S = nerve(C, level);
      return emit(out, command, check_simplicial_identities(S), sset_to_json(S),
                  output);
    }
    if (command == "from-segal") {
      TruncSSet S = sset_from_json(load_json(input));
      FinCat C = category_from_segal(S);
      CheckReport rep;
      rep.stats["objects"] = static_cast<long long>(C.objects.size());
      rep.stats["arrows"] = static_cast<long long>(C.arrows.size());
      rep.finalize();
      return emit(out, command, rep, fincat_to_json(C), output);
    }
    if (command == "tw") {
      FinCat C = fincat_from_json(load_json(input));
      FinCat T = twisted_arrow_category(C);
      CheckReport rep;
      rep.stats["objects"] = static_cast<long long>(T.objects.size());
      rep.stats["arrows"] = static_cast<long long>(T.arrows.size());
      rep.finalize();
      return emit(out, command, rep, fincat_to_json(T), output);
    }
    if (command == "opcat-check") {
      UnaryOpCat O = opcat_from_json(load_json(input));
      return emit(out, command, check_unary_operadic(O), std::nullopt, "");
    }
    if (command == "blowup") {
      UnaryOpCat O = opcat_from_json(load_json(input));
      return emit(out, command, check_blow_up(O), std::nullopt, "");
    }
    if (command == "undeck") {
      UnaryOpCat O = opcat_from_json(load_json(input));
      TruncSSet X = undeck(O, level);
      return emit(out, command, check_simplicial_identities(X), sset_to_json(X),
                  output);
    }
    if (command == "fibers") {
      UnaryOpCat O = opcat_from_json(load_json(input));
      FiberClassification fc = classify_fibers(O);
      json art;
      for (const auto& [a, r] : fc.records)
        art["records"][a] = {{"fiber", r.fiber},
                             {"fiber_is_local_terminal", r.fiber_is_local_terminal},
                             {"fiber_is_chosen", r.fiber_is_chosen},
                             {"arrow_is_iso", r.arrow_is_iso},
                             {"arrow_is_identity", r.arrow_is_identity}};
      return emit(out, command, fc.report, art, output);
    }
    if (command == "expand") {
      UnaryOpCat O = opcat_from_json(load_json(input));
      ExpandedCategory E = expanded_category(O);
      json art = fincat_to_json(E.cat);
      json left = json::object(), right = json::object();
      for (const auto& [id, pr] : E.parts) {
        left[id] = pr.left;
        right[id] = pr.right;
      }
      art["left"] = left;
      art["right"] = right;
      CheckReport rep;
      rep.stats["objects"] = static_cast<long long>(E.cat.objects.size());
      rep.stats["arrows"] = static_cast<long long>(E.cat.arrows.size());
      rep.finalize();
      return emit(out, command, rep, art, output);
    }
    if (command == "factorize") {
      TruncSSet S = sset_from_json(load_json(input));
      FactorOrder fo = order == "lr" ? FactorOrder::LR : FactorOrder::RL;
      json art;
      CheckReport rep;
      for (const auto& m : S.levels[3]) {
        auto [first, second] = factorize_subdivision(S, m, fo);
        art["factors"][m] = json::array({first, second});
        rep.bump("factored");
      }
      rep.finalize();
      return emit(out, command, rep, art, output);
    }
    if (command == "hypermoment") {
      UnaryOpCat O = opcat_from_json(load_json(input));
      HypermomentReport H = check_hypermoment(O);
      CheckReport rep;
      rep.witnesses = H.witnesses;
      rep.passed = H.passed;
      rep.stats["active"] = static_cast<long long>(H.active.size());
      rep.stats["inert"] = static_cast<long long>(H.inert.size());
      rep.stats["units"] = static_cast<long long>(H.units.size());
      rep.stats["ofs_active_inert"] = H.ofs_active_inert;
      rep.stats["ofs_inert_active"] = H.ofs_inert_active;
      rep.stats["cond_isos_are_automorphisms"] = H.cond_isos_are_automorphisms;
      rep.stats["cond_terminal_domains_identities"] =
          H.cond_terminal_domains_identities;
      rep.stats["strict_classes_exact"] = H.strict_classes_exact;
      rep.stats["is_hypermoment"] = H.is_hypermoment;
      rep.stats["is_unital"] = H.is_unital;
      rep.stats["is_rigid"] = H.is_rigid;
      rep.stats["roundtrip_ok"] = H.roundtrip_ok;
      out << dump_canonical(report_json(command, rep));
      if (!output.empty()) save_json(output, H.to_json());
      return H.passed ? 0 : 1;
    }
    if (command == "roundtrip") {
      json j = load_json(input);
      CheckReport rep;
      if (j.is_object() && j.contains("phi0"))
        rep = verify_round_trips(opcat_from_json(j), level);
      else
        rep = verify_round_trips(sset_from_json(j), level);
      return emit(out, command, rep, std::nullopt, "");
    }
    if (command == "generate") {
      json art;
      CheckReport rep;
      if (form == "cat") {
        FinCat C = random_category(seed, size);
        art = fincat_to_json(C);
        rep.stats["objects"] = static_cast<long long>(C.objects.size());
        rep.stats["arrows"] = static_cast<long long>(C.arrows.size());
      } else if (form == "sset") {
        TruncSSet S = nerve(random_category(seed, size), level);
        art = sset_to_json(S);
        rep = size_stats(S);
      } else {
        UnaryOpCat O = operadic_from_upper_two_segal(
            nerve(random_category(seed, size), std::max(level, 4)));
        art = opcat_to_json(O);
        rep.stats["objects"] = static_cast<long long>(O.cat.objects.size());
        rep.stats["arrows"] = static_cast<long long>(O.cat.arrows.size());
        rep.stats["chosen"] = static_cast<long long>(O.chosen.size());
      }
      rep.finalize();
      return emit(out, command, rep, art, output);
    }
    return emit_error(out, command, "unknown command");
  } catch (const SegalFailure& e) {
    CheckReport rep = e.report;
    rep.add("precondition", {}, e.what());
    rep.finalize();
    out << dump_canonical(report_json(command, rep));
    return 1;
  } catch (const std::exception& e) {
    return emit_error(out, command, e.what());
  }
}

}  // namespace segal
