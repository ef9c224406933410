#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "teamaut/dot.hpp"
#include "teamaut/error.hpp"
#include "teamaut/printer.hpp"
#include "teamaut/report.hpp"

using namespace teamaut;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const json& j, const std::string& report_path) {
  std::cout << j.dump() << "\n";
  if (!report_path.empty()) {
    std::ofstream out(report_path, std::ios::app);
    out << j.dump() << "\n";
  }
}

Product parse_product(const std::string& csv) {
  Product p;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) p.insert(item);
  return p;
}

int run(int argc, char** argv) {
  CLI::App app{"team automata toolkit"};
  app.require_subcommand(1);

  std::string file, report_path, dot_path, formula_path, product_csv;
  std::string interface_path, property = "receptive";
  std::vector<std::string> files;
  bool weak = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", file, "model file")->required();
    sub->add_option("--report", report_path, "append JSONL report to file");
  };

  auto* team_cmd = app.add_subcommand("team", "build the team automaton");
  add_common(team_cmd);
  team_cmd->add_option("--dot", dot_path, "write DOT to file");

  auto* rcp_cmd = app.add_subcommand("check-rcp", "check receptiveness");
  add_common(rcp_cmd);
  rcp_cmd->add_flag("--weak", weak, "weak mode");

  auto* rsp_cmd = app.add_subcommand("check-rsp", "check responsiveness");
  add_common(rsp_cmd);
  rsp_cmd->add_flag("--weak", weak, "weak mode");

  auto* realise_cmd =
      app.add_subcommand("realise", "synthesise components from a global model");
  add_common(realise_cmd);

  auto* compose_cmd = app.add_subcommand("compose", "compose systems");
  compose_cmd->add_option("files", files, "part model files")
      ->required()
      ->expected(-2);
  compose_cmd->add_option("--interface-sts", interface_path,
                          "sync types for interface actions")
      ->required();
  compose_cmd->add_flag("--weak", weak, "weak mode");
  compose_cmd->add_option("--report", report_path, "append JSONL report");

  auto* project_cmd = app.add_subcommand("project", "project to a product");
  add_common(project_cmd);
  project_cmd->add_option("--product", product_csv, "comma-separated features");

  auto* products_cmd =
      app.add_subcommand("products-check", "check a property on all products");
  add_common(products_cmd);
  products_cmd->add_option("--property", property, "receptive|responsive");
  products_cmd->add_flag("--weak", weak, "weak mode");

  auto* pdl_cmd = app.add_subcommand("pdl", "model-check formulas");
  add_common(pdl_cmd);
  pdl_cmd->add_option("--formula", formula_path, "formula file");

  auto* dot_cmd = app.add_subcommand("dot", "export DOT");
  add_common(dot_cmd);
  dot_cmd->add_option("--out", dot_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  Mode mode = weak ? Mode::Weak : Mode::Strict;

  if (team_cmd->parsed()) {
    ModelDocument doc = parse(slurp(file));
    TeamAutomaton ta = team(doc.plain_system(), doc.plain_spec());
    emit(report_team(ta), report_path);
    if (!dot_path.empty()) {
      std::ofstream out(dot_path);
      out << export_dot(ta.lts, doc.system_name);
    }
    return 0;
  }
  if (rcp_cmd->parsed()) {
    ModelDocument doc = parse(slurp(file));
    auto rep = is_receptive(doc.plain_system(), doc.plain_spec(), mode);
    emit(report_receptive(rep, mode), report_path);
    return rep.receptive ? 0 : 1;
  }
  if (rsp_cmd->parsed()) {
    ModelDocument doc = parse(slurp(file));
    auto rep = is_responsive(doc.plain_system(), doc.plain_spec(), mode);
    emit(report_responsive(rep, mode), report_path);
    return rep.responsive ? 0 : 1;
  }
  if (realise_cmd->parsed()) {
    ModelDocument doc = parse(slurp(file));
    if (!doc.has_global) throw ModelError("no global model in '" + file + "'");
    auto res = realise_pipeline(doc.global.sig, doc.global.spec, doc.global);
    emit(report_realise(res, doc.global), report_path);
    return res.realised ? 0 : 1;
  }
  if (compose_cmd->parsed()) {
    CompositionPlan plan;
    for (const auto& f : files) {
      ModelDocument doc = parse(slurp(f));
      plan.parts.emplace_back(doc.plain_system(), doc.plain_spec());
    }
    // Interface files hold bare sync clauses; wrap them in a system block
    // so the shared grammar applies.
    ModelDocument inf =
        parse("system interface {\n" + slurp(interface_path) + "\n}");
    for (const auto& [a, st] : inf.fst.defaults) plan.interface_spec[a] = st;
    auto rep = check_preservation(plan, mode);
    auto [sys, spec] = compose(plan);
    emit(report_team(team(sys, spec)), report_path);
    emit(report_preservation(rep, mode), report_path);
    return rep.ok ? 0 : 1;
  }
  if (project_cmd->parsed()) {
    ModelDocument doc = parse(slurp(file));
    Product p = parse_product(product_csv);
    if (!doc.fsys.feature_model.eval(p))
      throw ModelError("product " + to_string(p) + " is not valid");
    ModelDocument out;
    out.has_system = true;
    out.system_name = doc.system_name;
    System proj = project_fsys(doc.fsys, p);
    out.fsys.names = proj.names;
    for (auto& c : proj.components) {
      FeaturedCA fca;
      fca.ca = std::move(c);
      fca.guards.assign(fca.ca.transitions.size(), FeatureExpr::top());
      out.fsys.components.push_back(std::move(fca));
    }
    for (const auto& s : doc.syncs) {
      if (s.when && !s.when->eval(p)) continue;
      SyncDecl d = s;
      d.when.reset();
      out.syncs.push_back(std::move(d));
    }
    // First-match: keep only the first surviving clause per action, then
    // the default if none survived.
    std::set<Action> taken;
    std::vector<SyncDecl> pruned;
    for (const auto& s : out.syncs) {
      if (taken.count(s.action)) continue;
      taken.insert(s.action);
      pruned.push_back(s);
    }
    out.syncs = std::move(pruned);
    std::cout << print_document(out);
    return 0;
  }
  if (products_cmd->parsed()) {
    ModelDocument doc = parse(slurp(file));
    CommProperty prop;
    if (property == "receptive")
      prop = CommProperty::Receptive;
    else if (property == "responsive")
      prop = CommProperty::Responsive;
    else
      throw CLI::ValidationError("--property must be receptive or responsive");
    auto verdicts = productwise_check(doc.fsys, doc.fst, prop, mode);
    emit(report_products(verdicts), report_path);
    for (const auto& [p, ok] : verdicts)
      if (!ok) return 1;
    return 0;
  }
  if (pdl_cmd->parsed()) {
    ModelDocument doc = parse(slurp(file));
    Lts<Interaction> model;
    if (doc.has_global) {
      model = doc.global.lts;
    } else {
      TeamAutomaton ta = team(doc.plain_system(), doc.plain_spec());
      model = reachable_part(interactions_of_team(ta.lts));
    }
    std::vector<std::pair<std::string, pdl::Formula>> formulas = doc.formulas;
    if (!formula_path.empty())
      formulas.emplace_back(formula_path, parse_formula(slurp(formula_path)));
    if (formulas.empty()) throw ModelError("no formulas to check");
    bool all = true;
    for (const auto& [name, f] : formulas) {
      auto res = pdl::check(model, f);
      emit(report_pdl(name, res), report_path);
      all = all && res.holds;
    }
    return all ? 0 : 1;
  }
  if (dot_cmd->parsed()) {
    ModelDocument doc = parse(slurp(file));
    std::string text;
    if (doc.has_system) {
      TeamAutomaton ta = team(doc.plain_system(), doc.plain_spec());
      text = export_dot(ta.lts, doc.system_name);
    } else {
      text = export_dot(doc.global.lts, doc.global_name);
    }
    if (dot_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(dot_path);
      out << text;
    }
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ModelError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
