#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "tvcat/cli/dispatch.hpp"
#include "tvcat/error.hpp"

namespace tvcat::cli {

namespace {

struct VerbSpec {
  const char* name;
  const char* help;
  std::size_t objects;
  bool phi;
  bool cap;
};

const VerbSpec kVerbs[] = {
    {"check", "load and validate the workspace", 0, false, false},
    {"audit-quantale", "check the quantale laws", 0, false, false},
    {"audit-theory", "check the monad, algebra and BC laws of the theory", 0, false, true},
    {"audit-phi", "check the axioms Ax1-Ax4 for a class of distributors", 0, true, true},
    {"presheaf", "list the presheaf category PhiX", 1, true, false},
    {"yoneda", "the Yoneda embedding X -> PhiX", 1, true, false},
    {"complete", "Sup : PhiX -> X, or a presheaf without colimit", 1, true, false},
    {"colim", "weighted colimit of a functor along a distributor", 0, false, false},
    {"cocomplete", "the four equivalent cocompleteness conditions", 1, true, false},
    {"injective", "bounded search for an injectivity counterexample", 1, true, true},
    {"kz-audit", "the adjunction chain Phi y -| y^-1 -| y_PhiX", 1, true, false},
    {"split-fork", "split fork identities for an equivalence relation R on X", 2, true, false},
    {"kan-check", "cocontinuous PhiX -> Y versus all functors X -> Y", 2, true, false},
    {"dual", "the dual category", 1, false, false},
    {"tensor", "the tensor product of two categories", 2, false, false},
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact finite computations with (T,V)-categories.", "tvcat"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string workspace;
  OutputOptions output;
  LoadOptions load;
  std::string caps;
  app.add_option("-w,--workspace", workspace, "workspace file (JSON)");
  app.add_flag("--json", output.json, "print the machine-readable report");
  app.add_flag("--timing", output.timing, "include wall-clock time in the report");
  app.add_flag("--allow-unaudited", load.allow_unaudited, "load theories and quantales that fail their audit");
  app.add_option("--caps", caps, "cap overrides, e.g. injective=3,kz=6");

  Command cmd;
  std::optional<std::size_t> cap;
  for (const auto& v : kVerbs) {
    CLI::App* sub = app.add_subcommand(v.name, v.help);
    if (v.objects > 0) sub->add_option("objects", cmd.args, "object names")->expected(static_cast<int>(v.objects))->required();
    if (v.phi) sub->add_option("--class", cmd.phi, "class of distributors")->default_str("all");
    if (v.cap) sub->add_option("--cap", cap, "size bound");
    if (std::string(v.name) == "colim") {
      sub->add_option("--weight", cmd.weight, "distributor Y -o-> Z")->required();
      sub->add_option("--along", cmd.along, "functor Y -> X")->required();
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }
  for (const auto* sub : app.get_subcommands()) cmd.verb = sub->get_name();
  cmd.cap = cap;

  try {
    if (workspace.empty()) fail(ErrorKind::parse, "--workspace is required");
    load.caps = default_caps();
    if (!caps.empty()) load.caps.apply(caps);
    Workspace ws = parse_workspace(workspace, load);
    if (!caps.empty()) ws.caps.apply(caps);
    Outcome o = dispatch(cmd, ws, output);
    out << o.output;
    return o.exit_code;
  } catch (const Error& e) {
    const std::string text = error_output(cmd.verb, std::string(to_string(e.kind())), e.what(), output);
    (output.json ? out : err) << text;
    return exit_usage;
  }
}

}  // namespace tvcat::cli
