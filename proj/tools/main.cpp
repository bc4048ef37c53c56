// Command-line front end. Every operation reads one JSON document (file or
// stdin) and writes one JSON document (file or stdout). Exit codes: 0 on
// success, 1 when a requested check fails (the report is still emitted), 2 on
// malformed input or usage, with a {"error": {"code", "message"}} object.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "s5kit/json_io.hpp"

namespace {

using nlohmann::json;

struct Options {
  std::string input = "-";
  std::string output = "-";
  std::string format = "json";
  int level = 5;
  int cap = 6;
  std::uint64_t seed = 0;
};

json read_input(const Options& opt) {
  if (opt.input == "-") return json::parse(std::cin);
  std::ifstream in(opt.input);
  if (!in) {
    throw s5kit::Error(s5kit::ErrorCode::BadInput, "cannot open input file: " + opt.input);
  }
  return json::parse(in);
}

void write_output(const Options& opt, const json& j) {
  if (opt.output == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(opt.output);
  if (!out) {
    throw s5kit::Error(s5kit::ErrorCode::BadInput, "cannot open output file: " + opt.output);
  }
  out << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite S5 algebras, symmetric-group actions, and truncated liftings"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  int rc = 0;

  app.add_option("--input", opt.input, "input JSON file, - for stdin");
  app.add_option("--output", opt.output, "output file, - for stdout");
  app.add_option("--level", opt.level, "truncation level N");
  app.add_option("--cap", opt.cap, "largest index enumerated exhaustively");
  app.add_option("--seed", opt.seed, "seed for randomized sweeps");
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json"}));

  // surjections ----------------------------------------------------------
  auto* surj = app.add_subcommand("surj", "surjections between finite index sets");
  surj->require_subcommand(1);
  surj->fallthrough();

  auto* surj_enum = surj->add_subcommand("enumerate", "all surjections {1..n} onto {1..m}");
  surj_enum->fallthrough();
  int enum_n = 1;
  int enum_m = 1;
  surj_enum->add_option("--n", enum_n, "domain size")->required();
  surj_enum->add_option("--m", enum_m, "codomain size")->required();
  surj_enum->callback(
      [&] { write_output(opt, json(s5kit::enumerate_surjections(enum_n, enum_m))); });

  auto* surj_coeq = surj->add_subcommand("coeq", "coequalizer of a parallel pair {\"f\", \"g\"}");
  surj_coeq->fallthrough();
  surj_coeq->callback([&] {
    const auto j = read_input(opt);
    write_output(opt,
                 s5kit::coequalizer_surj(j.at("f").get<s5kit::Surjection>(),
                                         j.at("g").get<s5kit::Surjection>()));
  });

  auto* surj_push = surj->add_subcommand("pushout", "pushout of a span {\"f\", \"g\"}");
  surj_push->fallthrough();
  surj_push->callback([&] {
    const auto j = read_input(opt);
    write_output(opt, s5kit::pushout_surj(j.at("f").get<s5kit::Surjection>(),
                                          j.at("g").get<s5kit::Surjection>()));
  });

  // frames ---------------------------------------------------------------
  auto* frame = app.add_subcommand("frame", "finite S5 frames and p-morphisms");
  frame->require_subcommand(1);
  frame->fallthrough();

  auto* frame_coeq =
      frame->add_subcommand("coeq", "coequalizer of parallel p-morphisms {\"f\", \"g\"}");
  frame_coeq->fallthrough();
  frame_coeq->callback([&] {
    const auto j = read_input(opt);
    write_output(opt, s5kit::frame_coequalizer(j.at("f").get<s5kit::PMorphism>(),
                                               j.at("g").get<s5kit::PMorphism>()));
  });

  auto* frame_coprod = frame->add_subcommand("coprod", "coproduct of {\"parts\": [frames]}");
  frame_coprod->fallthrough();
  frame_coprod->callback([&] {
    const auto parts = read_input(opt).at("parts").get<std::vector<s5kit::FiniteFrame>>();
    write_output(opt, s5kit::frame_coproduct(parts));
  });

  auto* frame_dual = frame->add_subcommand("dual", "the algebra of a frame");
  frame_dual->fallthrough();
  frame_dual->callback(
      [&] { write_output(opt, s5kit::frame_to_algebra(read_input(opt).get<s5kit::FiniteFrame>())); });

  auto* frame_sig = frame->add_subcommand("signature", "sorted cluster sizes of a frame");
  frame_sig->fallthrough();
  frame_sig->callback([&] {
    const auto f = read_input(opt).get<s5kit::FiniteFrame>();
    write_output(opt, json{{"signature", s5kit::cluster_signature(f)}});
  });

  // algebras ---------------------------------------------------------------
  auto* algebra = app.add_subcommand("algebra", "finite S5 algebras");
  algebra->require_subcommand(1);
  algebra->fallthrough();

  auto* algebra_check = algebra->add_subcommand("check", "evaluate the S5 operator laws");
  algebra_check->fallthrough();
  algebra_check->callback([&] {
    const auto report = s5kit::check_s5_axioms(read_input(opt).get<s5kit::S5Algebra>());
    write_output(opt, report);
    if (!report.pass()) rc = 1;
  });

  auto* algebra_dual = algebra->add_subcommand("dual", "the frame of an algebra");
  algebra_dual->fallthrough();
  algebra_dual->callback(
      [&] { write_output(opt, s5kit::algebra_to_frame(read_input(opt).get<s5kit::S5Algebra>())); });

  // actions ----------------------------------------------------------------
  auto* action = app.add_subcommand("action", "symmetric-group actions on finite carriers");
  action->require_subcommand(1);
  action->fallthrough();

  auto* action_validate = action->add_subcommand("validate", "evaluate the action laws");
  action_validate->fallthrough();
  action_validate->callback([&] {
    const auto a = read_input(opt).get<s5kit::SymmetricAction>();
    const auto report = s5kit::validate_action(a, opt.cap);
    write_output(opt, report);
    if (!report.pass()) rc = 1;
  });

  auto* action_orbits = action->add_subcommand("orbits", "orbit of every carrier element");
  action_orbits->fallthrough();
  action_orbits->callback(
      [&] { write_output(opt, s5kit::orbits(read_input(opt).get<s5kit::SymmetricAction>())); });

  auto* action_decompose =
      action->add_subcommand("decompose", "split a free action into full orbits");
  action_decompose->fallthrough();
  action_decompose->callback([&] {
    const auto a = read_input(opt).get<s5kit::SymmetricAction>();
    write_output(opt, json{{"orbits", s5kit::decompose_faithful(a, opt.cap)}});
  });

  // liftings -----------------------------------------------------------------
  auto* lift = app.add_subcommand("lift", "truncated liftings of actions");
  lift->require_subcommand(1);
  lift->fallthrough();

  auto* lift_build = lift->add_subcommand("build", "canonical lifting of a free action");
  lift_build->fallthrough();
  bool lift_with_eta = false;
  lift_build->add_flag("--eta", lift_with_eta, "wrap the result as {presheaf, eta}");
  lift_build->callback([&] {
    const auto a = read_input(opt).get<s5kit::SymmetricAction>();
    const auto built = s5kit::canonical_lifting(a, opt.level, opt.cap);
    if (lift_with_eta) {
      write_output(opt, json{{"presheaf", built.presheaf}, {"eta", built.eta}});
    } else {
      write_output(opt, built.presheaf);
    }
  });

  auto* lift_verify =
      lift->add_subcommand("verify", "check {\"presheaf\", \"action\", \"eta\"} as a lifting");
  lift_verify->fallthrough();
  lift_verify->callback([&] {
    const auto j = read_input(opt);
    const auto report = s5kit::verify_lifting_conditions(
        j.at("presheaf").get<s5kit::TruncatedPresheaf>(),
        j.at("action").get<s5kit::SymmetricAction>(), j.at("eta").get<std::vector<int>>(),
        opt.cap);
    write_output(opt, report);
    if (!report.pass()) rc = 1;
  });

  auto* lift_homs =
      lift->add_subcommand("homs", "natural transformations {\"source\", \"target\"}");
  lift_homs->fallthrough();
  lift_homs->callback([&] {
    const auto j = read_input(opt);
    const auto found =
        s5kit::enumerate_nat_transformations(j.at("source").get<s5kit::TruncatedPresheaf>(),
                                             j.at("target").get<s5kit::TruncatedPresheaf>());
    write_output(opt, json{{"count", found.size()}, {"transformations", found}});
  });

  // theory ---------------------------------------------------------------------
  auto* theory = app.add_subcommand("theory", "axiom checks and classification");
  theory->require_subcommand(1);
  theory->fallthrough();

  auto* theory_t1 = theory->add_subcommand("check-t1", "free-presentation axioms");
  theory_t1->fallthrough();
  theory_t1->callback([&] {
    const auto report =
        s5kit::check_T1(read_input(opt).get<s5kit::TruncatedPresheaf>(), opt.cap);
    write_output(opt, report);
    if (!report.pass()) rc = 1;
  });

  auto* theory_t2 = theory->add_subcommand("check-t2", "single presenting level axioms");
  theory_t2->fallthrough();
  bool t2_all_elements = false;
  theory_t2->add_flag("--all-elements", t2_all_elements,
                      "quantify the collision criterion over every element");
  theory_t2->callback([&] {
    const auto report = s5kit::check_T2(read_input(opt).get<s5kit::TruncatedPresheaf>(),
                                        opt.cap, t2_all_elements);
    write_output(opt, report);
    if (!report.pass()) rc = 1;
  });

  auto* theory_lex = theory->add_subcommand("check-lex", "finite-colimit preservation");
  theory_lex->fallthrough();
  theory_lex->callback([&] {
    const auto report =
        s5kit::check_lex_preservation(read_input(opt).get<s5kit::TruncatedPresheaf>(), opt.cap);
    write_output(opt, report);
    if (!report.pass()) rc = 1;
  });

  auto* theory_classify = theory->add_subcommand("classify", "cluster counts of a model");
  theory_classify->fallthrough();
  theory_classify->callback([&] {
    const auto found =
        s5kit::classify_model(read_input(opt).get<s5kit::TruncatedPresheaf>(), opt.cap);
    json counts = json::object();
    for (const auto& [size, count] : found.cluster_counts) {
      counts[std::to_string(size)] = count;
    }
    write_output(opt, counts);
  });

  auto* theory_from = theory->add_subcommand(
      "from-frame", "model of a frame or of a cluster family {\"sizes\": [...]}");
  theory_from->fallthrough();
  theory_from->callback([&] {
    const auto j = read_input(opt);
    const auto family = j.contains("sizes")
                            ? j.get<s5kit::ClusterFamily>()
                            : s5kit::to_cluster_family(j.get<s5kit::FiniteFrame>());
    write_output(opt, s5kit::model_from_frame(family, opt.level, opt.cap));
  });

  // suite ------------------------------------------------------------------------
  auto* suite = app.add_subcommand("suite", "run the acceptance sweep");
  suite->fallthrough();
  suite->callback([&] {
    const auto result = s5kit::run_acceptance_suite(opt.seed, std::cerr);
    write_output(opt, result);
    if (!result.pass()) rc = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // help output, not an error
    const json err = {{"error", {{"code", "Usage"}, {"message", e.what()}}}};
    std::cout << err.dump(2) << "\n";
    return 2;
  } catch (const s5kit::Error& e) {
    const json err = {
        {"error", {{"code", s5kit::error_code_name(e.code())}, {"message", e.what()}}}};
    std::cout << err.dump(2) << "\n";
    return 2;
  } catch (const json::exception& e) {
    const json err = {{"error", {{"code", "BadInput"}, {"message", e.what()}}}};
    std::cout << err.dump(2) << "\n";
    return 2;
  }
  return rc;
}
