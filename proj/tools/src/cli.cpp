#include "grassqh_cli/cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "CLI11.hpp"
#include "documents.hpp"
#include "grassqh/errors.hpp"

namespace grassqh::cli {

namespace {

struct Flags {
  std::string format = "table";
  std::string type;
  int node = 0;
  int k = 0;
  int n = 0;
  int p = 0;
  int twist = 0;
  int power = 0;
  int sg = 0;
  bool section = false;
  bool with_e2 = false;
  std::uint64_t seed = 1729;
};

void usage_error(std::ostream& err, const CLI::App& app, const std::string& what) {
  err << "error: " << what << "\n\n" << app.help();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Flags f;
  std::function<Json()> build;

  CLI::App app{"Cohomology invariants of Grassmannians and their hyperplane sections", "grassqh"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", f.format, "Output format")->check(CLI::IsMember({"table", "json"}));

  auto* betti = app.add_subcommand("betti", "Even Betti numbers and Fano index of G/P_k");
  betti->add_option("--type", f.type, "Dynkin type such as E7")->required();
  betti->add_option("--node", f.node, "Node k of the maximal parabolic")->required();
  betti->callback([&] { build = [&] { return betti_doc(f.type, f.node); }; });

  auto* scr = app.add_subcommand("screen", "Index-periodic Betti screen for semisimplicity");
  auto* o_type = scr->add_option("--type", f.type, "Dynkin type");
  auto* o_node = scr->add_option("--node", f.node, "Parabolic node");
  auto* o_sec = scr->add_flag("--section", f.section, "Hyperplane section of Gr(k,n)");
  auto* o_k = scr->add_option("--k", f.k);
  auto* o_n = scr->add_option("--n", f.n);
  auto* o_sg = scr->add_option("--sg", f.sg, "SG(2,2n) and its hyperplane section");
  scr->callback([&, o_type, o_node, o_sec, o_k, o_n, o_sg] {
    const bool by_type = o_type->count() && o_node->count();
    const bool by_section = o_sec->count() && o_k->count() && o_n->count();
    const bool by_sg = o_sg->count() > 0;
    if (by_type + by_section + by_sg != 1)
      throw CLI::ValidationError("screen", "give exactly one of --type/--node, --section --k --n, or --sg");
    if (by_type) build = [&] { return screen_type_doc(f.type, f.node); };
    else if (by_section) build = [&] { return screen_section_doc(f.k, f.n); };
    else build = [&] { return screen_sg_doc(f.sg); };
  });

  auto* exc = app.add_subcommand("exceptional-table", "Screen table for the exceptional G/P_k");
  exc->callback([&] { build = [] { return exceptional_doc(); }; });

  auto* core = app.add_subcommand("core-search", "Pairs (lambda, i) with lambda an (n-i)-core of large size");
  core->add_option("--k", f.k)->required();
  core->add_option("--n", f.n)->required();
  core->callback([&] { build = [&] { return core_search_doc(f.k, f.n); }; });

  auto* snow = app.add_subcommand("snow", "Nonvanishing cohomology of twisted forms on Gr(k,n)");
  snow->add_option("--k", f.k)->required();
  snow->add_option("--n", f.n)->required();
  snow->add_option("--p", f.p)->required();
  snow->add_option("--twist", f.twist)->required();
  snow->callback([&] { build = [&] { return snow_doc(f.k, f.n, f.p, f.twist); }; });

  auto* hodge = app.add_subcommand("hodge", "chi_y genus and Hodge diamond");
  hodge->add_option("--k", f.k)->required();
  hodge->add_option("--n", f.n)->required();
  hodge->add_flag("--section", f.section);
  hodge->add_option("--seed", f.seed, "Seed for the torus parameters");
  hodge->callback([&] { build = [&] { return hodge_doc(f.k, f.n, f.section, f.seed); }; });

  auto* qh = app.add_subcommand("qh", "Quantum cohomology");
  qh->fallthrough();
  qh->require_subcommand(1);

  auto* cp = qh->add_subcommand("charpoly", "Characteristic polynomial on the degree-0 piece");
  cp->add_option("--k", f.k)->required();
  cp->add_option("--n", f.n)->required();
  cp->add_flag("--section", f.section);
  cp->add_option("--power", f.power)->required();
  cp->add_flag("--with-e2", f.with_e2);
  cp->callback([&] { build = [&] { return charpoly_doc(f.k, f.n, f.section, f.power, f.with_e2); }; });

  auto* pres = qh->add_subcommand("presentation", "Check the quantum presentation relations");
  pres->add_option("--k", f.k)->required();
  pres->add_option("--n", f.n)->required();
  pres->callback([&] { build = [&] { return presentation_doc(f.k, f.n); }; });

  auto* lef = qh->add_subcommand("lefschetz", "Explicit relations of the section ring");
  lef->add_option("--n", f.n)->required()->check(CLI::IsMember({7, 8}));
  lef->callback([&] { build = [&] { return lefschetz_doc(f.n); }; });

  auto* ss = qh->add_subcommand("semisimple", "Trace-form semisimplicity test at q = 1");
  ss->add_option("--k", f.k)->required();
  ss->add_option("--n", f.n)->required();
  ss->add_flag("--section", f.section);
  ss->callback([&] { build = [&] { return semisimple_doc(f.k, f.n, f.section); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    for (const auto* sub : app.get_subcommands()) {
      target = sub;
      if (!sub->get_subcommands().empty()) target = sub->get_subcommands().front();
    }
    out << target->help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    const CLI::App* target = &app;
    if (!app.get_subcommands().empty()) target = app.get_subcommands().front();
    usage_error(err, *target, e.what());
    return kInvalidInput;
  }

  try {
    Json doc = build();
    if (f.format == "json") out << doc.dump(2) << '\n';
    else out << render(doc);
    return kOk;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return kConsistencyFailure;
  } catch (const UndeterminedBySource& e) {
    err << "undetermined: " << e.what() << '\n';
    return kConsistencyFailure;
  }
}

}  // namespace grassqh::cli
