#include "groupcx/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>

#include "groupcx/catalog.hpp"
#include "groupcx/gk.hpp"
#include "groupcx/graph.hpp"
#include "groupcx/group_complexes.hpp"
#include "groupcx/homology.hpp"
#include "groupcx/json_io.hpp"
#include "groupcx/verify.hpp"

namespace groupcx {

namespace {

bool kind_needs_lattice(const std::string& kind) {
  return kind == "strong" || kind == "nongen" || kind.rfind("class:", 0) == 0;
}

// catalog-name resolution with precise cap errors for the named groups that
// no desk-scale build reaches
GroupSpec resolve_or_reject(const std::string& arg,
                            const std::vector<CatalogEntry>& catalog,
                            const Caps& caps, bool needs_lattice) {
  if (auto order = out_of_reach_order(arg)) {
    if (needs_lattice && *order > caps.lattice_cap)
      throw CapExceeded::lattice(*order, caps.lattice_cap);
    throw CapExceeded::order(*order, caps.order_cap);
  }
  return resolve_group_spec(arg, catalog);
}

GroupComplex build_complex_by_kind(GroupContext& ctx, const std::string& kind) {
  if (kind == "independence") return independence_complex(ctx);
  if (kind == "strong") return strong_independence_complex(ctx);
  if (kind == "nongen") return non_generating_complex(ctx);
  if (kind == "class:cyclic") return class_complex(ctx, GroupClass::Cyclic);
  if (kind == "class:abelian") return class_complex(ctx, GroupClass::Abelian);
  if (kind == "class:nilpotent") return class_complex(ctx, GroupClass::Nilpotent);
  if (kind == "class:soluble") return class_complex(ctx, GroupClass::Soluble);
  if (kind == "indep:commuting")
    return filtered_independence_complex(ctx, IndependenceFilter::Commuting);
  if (kind == "indep:nongen")
    return filtered_independence_complex(ctx, IndependenceFilter::NonGenerating);
  if (kind == "word:commutator")
    return word_complex(ctx, WordSpec::commutator());
  if (kind == "word:triple_product")
    return word_complex(ctx, WordSpec::triple_product());
  if (kind == "word:double_commutator")
    return word_complex(ctx, WordSpec::double_commutator());
  throw ValidationError(ValidationError::Kind::BadSpec,
                        "unknown complex kind: " + kind);
}

GraphKind graph_kind_from_string(const std::string& kind) {
  if (kind == "power") return GraphKind::Power;
  if (kind == "enhanced") return GraphKind::EnhancedPower;
  if (kind == "commuting") return GraphKind::Commuting;
  if (kind == "generating") return GraphKind::Generating;
  throw ValidationError(ValidationError::Kind::BadSpec,
                        "unknown graph kind: " + kind);
}

Json group_info_json(const std::string& name, GroupContext& ctx) {
  const FiniteGroup& g = ctx.group();
  Json j;
  if (!name.empty()) j["name"] = name;
  j["order"] = g.order();
  StructureFlags f = ctx.classify();
  j["cyclic"] = f.is_cyclic;
  j["abelian"] = f.is_abelian;
  j["nilpotent"] = f.is_nilpotent;
  j["soluble"] = f.is_soluble;
  j["eppo"] = f.is_eppo;
  j["prime_divisors"] = f.prime_divisors;
  Json spectrum = Json::array();
  {
    auto orders = g.order_spectrum();
    for (size_t i = 0; i < orders.size();) {
      size_t j2 = i;
      while (j2 < orders.size() && orders[j2] == orders[i]) ++j2;
      spectrum.push_back(Json::array({orders[i], int(j2 - i)}));
      i = j2;
    }
  }
  j["order_spectrum"] = std::move(spectrum);
  j["min_generators"] =
      ctx.min_generators_of(ElementSet::full(g.order()));
  GKComplex gk = gk_complex(g);
  j["gk"] = gk_to_json(gk, gk_cover_number(gk, ctx.caps()));
  return j;
}

Suite suite_from_string(const std::string& s) {
  if (s == "core") return Suite::Core;
  if (s == "gk") return Suite::Gk;
  if (s == "homology") return Suite::Homology;
  if (s == "all") return Suite::All;
  throw ValidationError(ValidationError::Kind::BadSpec, "unknown suite: " + s);
}

std::vector<CatalogEntry> catalog_from_path(const std::string& path) {
  if (path.empty()) return default_catalog();
  std::ifstream in(path);
  if (!in)
    throw ValidationError(ValidationError::Kind::BadSpec,
                          "cannot open catalog file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return load_catalog_text(text);
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"simplicial complexes, graphs and homology on finite groups"};
  app.name("groupcx");

  Caps caps;
  app.add_option("--order-cap", caps.order_cap, "largest constructible group order");
  app.add_option("--lattice-cap", caps.lattice_cap,
                 "largest order for subgroup-lattice work");

  std::string group_arg, kind_arg, suite_arg = "all", catalog_path;
  bool want_dot = false, reduced = true, unreduced = false, include_slow = false;

  CLI::App* group_cmd = app.add_subcommand("group", "group inspection");
  CLI::App* info_cmd = group_cmd->add_subcommand("info", "structure summary");
  info_cmd->add_option("--group", group_arg, "catalog name or inline JSON spec")
      ->required();

  CLI::App* complex_cmd = app.add_subcommand("complex", "complex construction");
  CLI::App* cbuild_cmd = complex_cmd->add_subcommand("build", "build a complex");
  cbuild_cmd->add_option("--group", group_arg, "catalog name or inline JSON spec")
      ->required();
  cbuild_cmd
      ->add_option("--kind", kind_arg,
                   "independence | strong | class:<cyclic|abelian|nilpotent|"
                   "soluble> | nongen | indep:<commuting|nongen> | "
                   "word:<commutator|triple_product|double_commutator> | gk")
      ->required();

  CLI::App* graph_cmd = app.add_subcommand("graph", "graph construction");
  CLI::App* gbuild_cmd = graph_cmd->add_subcommand("build", "build a graph");
  gbuild_cmd->add_option("--group", group_arg, "catalog name or inline JSON spec")
      ->required();
  gbuild_cmd
      ->add_option("--kind", kind_arg, "power | enhanced | commuting | generating")
      ->required();
  gbuild_cmd->add_flag("--dot", want_dot, "emit DOT instead of JSON");

  CLI::App* homology_cmd = app.add_subcommand("homology", "integral homology");
  homology_cmd->add_option("--group", group_arg, "catalog name or inline JSON spec")
      ->required();
  homology_cmd
      ->add_option("--kind", kind_arg, "complex kind (as in complex build)")
      ->required();
  homology_cmd->add_flag("--reduced", reduced, "reduced homology (default)");
  homology_cmd->add_flag("--unreduced", unreduced, "unreduced homology");

  CLI::App* verify_cmd = app.add_subcommand("verify", "verification suites");
  verify_cmd->add_option("--suite", suite_arg, "core | gk | homology | all");
  verify_cmd->add_flag("--include-slow", include_slow, "include the slow tier");
  verify_cmd->add_option("--catalog", catalog_path, "catalog file override");

  CLI::App* batch_cmd = app.add_subcommand("batch", "per-entry catalog summaries");
  batch_cmd->add_option("--catalog", catalog_path, "catalog file (default: shipped)");

  for (CLI::App* sub : {group_cmd, info_cmd, complex_cmd, cbuild_cmd, graph_cmd,
                        gbuild_cmd, homology_cmd, verify_cmd, batch_cmd})
    sub->fallthrough();
  app.require_subcommand(1);

  std::vector<std::string> argv_vec = args;
  try {
    // CLI11 consumes the vector in reverse order
    std::reverse(argv_vec.begin(), argv_vec.end());
    app.parse(argv_vec);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    const auto& catalog = catalog_from_path(catalog_path);

    if (info_cmd->parsed()) {
      GroupSpec spec = resolve_or_reject(group_arg, catalog, caps, false);
      FiniteGroup g = build_group(spec, caps);
      GroupContext ctx(g, caps);
      std::string name = find_entry(catalog, group_arg) ? group_arg : "";
      emit(out, group_info_json(name, ctx));
      return 0;
    }

    if (cbuild_cmd->parsed()) {
      GroupSpec spec =
          resolve_or_reject(group_arg, catalog, caps, kind_needs_lattice(kind_arg));
      FiniteGroup g = build_group(spec, caps);
      GroupContext ctx(g, caps);
      if (kind_arg == "gk") {
        GKComplex gk = gk_complex(g);
        emit(out, gk_to_json(gk, gk_cover_number(gk, caps)));
      } else {
        GroupComplex gc = build_complex_by_kind(ctx, kind_arg);
        emit(out, complex_to_json(gc.complex));
      }
      return 0;
    }

    if (gbuild_cmd->parsed()) {
      GroupSpec spec = resolve_or_reject(group_arg, catalog, caps, false);
      FiniteGroup g = build_group(spec, caps);
      GroupContext ctx(g, caps);
      SimpleGraph graph = group_graph(ctx, graph_kind_from_string(kind_arg));
      if (want_dot)
        out << graph.to_dot();
      else
        emit(out, graph_to_json(graph));
      return 0;
    }

    if (homology_cmd->parsed()) {
      GroupSpec spec =
          resolve_or_reject(group_arg, catalog, caps, kind_needs_lattice(kind_arg));
      FiniteGroup g = build_group(spec, caps);
      GroupContext ctx(g, caps);
      SimplicialComplex c = kind_arg == "gk"
                                ? gk_complex(g).complex
                                : build_complex_by_kind(ctx, kind_arg).complex;
      emit(out, homology_to_json(homology(c, unreduced ? false : reduced)));
      return 0;
    }

    if (verify_cmd->parsed()) {
      VerifyOptions opts;
      opts.include_slow = include_slow;
      opts.caps = caps;
      auto outcomes = run_suite(suite_from_string(suite_arg), catalog, opts);
      int failures = 0;
      for (const auto& o : outcomes) {
        Json j;
        j["check"] = o.check;
        j["group"] = o.group;
        j["pass"] = o.pass;
        j["detail"] = o.detail;
        out << j.dump() << "\n";
        if (!o.pass) ++failures;
      }
      err << outcomes.size() << " checks, " << failures << " failures\n";
      return failures == 0 ? 0 : 1;
    }

    if (batch_cmd->parsed()) {
      for (const auto& e : catalog) {
        FiniteGroup g = build_group(e.spec, caps);
        GroupContext ctx(g, caps);
        Json j = group_info_json(e.name, ctx);
        j["spec"] = group_spec_to_json(e.spec);
        emit(out, j);
      }
      return 0;
    }
  } catch (const CapExceeded& e) {
    err << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    err << e.what() << "\n";
    return 2;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace groupcx
