#include "plumbstein/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "plumbstein/errors.hpp"
#include "plumbstein/render.hpp"
#include "plumbstein/serialize.hpp"

namespace plumbstein {

namespace {

// Raised when the input graph fails validation; the report is the payload.
struct InvalidGraph {
  ValidationReport report;
};

PlumbingGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_graph(text.str());
}

// Every construction needs valence <= 3 (else unsupported) and a valid graph.
PlumbingGraph load_valid(const std::string& path) {
  PlumbingGraph g = load_graph(path);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.valence(v) > 3) {
      throw UnsupportedShape("vertex " + g.id(v) + " has valence " + std::to_string(g.valence(v)));
    }
  }
  ValidationReport r = validate(g);
  if (!r.ok()) throw InvalidGraph{std::move(r)};
  return g;
}

std::vector<WrappedForm> wrap_clusters(const PlumbingGraph& g) {
  std::vector<WrappedForm> forms;
  for (const Cluster& c : decompose(g).clusters) forms.push_back(wrap(g.subgraph(c.edges)));
  return forms;
}

LegendrianDiagram first_stein(const HandlebodyDiagram& h) {
  SteinEnumerator e(h);
  const auto rot = e.next();
  std::vector<Stabilization> choice;
  for (std::size_t v = 0; v < h.two_handles.size(); ++v) choice.push_back(stabilization_for(h.two_handles[v].framing, (*rot)[v]));
  return legendrianize(h, choice);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Plumbing graphs to wrapped forms, Stein diagrams and tight contact structure counts",
               args.empty() ? "plumbstein" : args.front()};
  app.require_subcommand(1);
  std::string input, format = "json", output, mode = "lower";
  long long m = 1;
  bool enumerate = false;
  const std::vector<std::string> formats{"json", "dot", "svg"};

  auto graph_command = [&](const std::string& name, const std::string& about) {
    CLI::App* sub = app.add_subcommand(name, about);
    sub->add_option("file", input, "Plumbing graph file")->required();
    sub->add_option("-o,--output", output, "Write the result to this path instead of stdout");
    return sub;
  };
  CLI::App* validate_cmd = graph_command("validate", "Check weights, valences and connectivity");
  CLI::App* tori_cmd = graph_command("tori", "List the incompressible torus classes");
  CLI::App* decompose_cmd = graph_command("decompose", "Split into clusters, trees and connectors");
  CLI::App* wrap_cmd = graph_command("wrap", "Wrapped-up form of every cluster");
  wrap_cmd->add_option("--format", format)->check(CLI::IsMember(formats));
  CLI::App* stein_cmd = graph_command("stein", "Legendrian handlebody diagram");
  stein_cmd->add_option("--format", format)->check(CLI::IsMember(formats));
  stein_cmd->add_flag("--enumerate", enumerate, "List every rotation vector of the Stein structures");
  CLI::App* count_cmd = graph_command("count", "Count or bound tight contact structures");
  count_cmd->add_option("--mode", mode)->check(CLI::IsMember({"lower", "mintwist", "torsion"}));
  count_cmd->add_option("--m", m, "Twisting order for --mode torsion");

  CLI::App* cf_cmd = app.add_subcommand("cf", "Negative continued fraction calculus");
  cf_cmd->require_subcommand(1);
  std::string fraction, coefficients, matrix, slope;
  CLI::App* expand_cmd = cf_cmd->add_subcommand("expand", "Expand p/q > 1");
  expand_cmd->add_option("fraction", fraction)->required();
  CLI::App* eval_cmd = cf_cmd->add_subcommand("eval", "Evaluate a1,a2,...");
  eval_cmd->add_option("coefficients", coefficients)->required();
  CLI::App* transform_cmd = cf_cmd->add_subcommand("transform", "Apply a unimodular matrix to a slope");
  transform_cmd->add_option("--matrix", matrix, "m11,m12,m21,m22")->required();
  transform_cmd->add_option("--slope", slope, "a/b")->required();

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  std::ostringstream result;
  int code = kOk;
  try {
    if (validate_cmd->parsed()) {
      const ValidationReport r = validate(load_graph(input));
      result << dump(r);
      if (!r.ok()) code = kValidationFailed;
    } else if (tori_cmd->parsed()) {
      const PlumbingGraph g = load_valid(input);
      result << dump(tori_to_json(g, torus_classes(g)));
    } else if (decompose_cmd->parsed()) {
      const PlumbingGraph g = load_valid(input);
      result << dump(decomposition_to_json(g, decompose(g)));
    } else if (wrap_cmd->parsed()) {
      const auto forms = wrap_clusters(load_valid(input));
      if (format == "dot") {
        result << to_dot(forms);
      } else if (format == "svg") {
        result << to_svg(forms);
      } else {
        result << dump(json{{"clusters", forms}});
      }
    } else if (stein_cmd->parsed()) {
      const HandlebodyDiagram h = assemble(load_valid(input));
      if (format == "dot") {
        result << to_dot(h);
      } else if (format == "svg") {
        result << to_svg(h);
      } else {
        json j = first_stein(h);
        if (enumerate) {
          SteinEnumerator e(h);
          j["count"] = integer_to_json(e.count());
          json structures = json::array();
          while (const auto rot = e.next()) {
            json s = json::object();
            for (std::size_t v = 0; v < rot->size(); ++v) s[h.graph.id(v)] = (*rot)[v];
            structures.push_back(std::move(s));
          }
          j["structures"] = std::move(structures);
        }
        result << dump(j);
      }
    } else if (count_cmd->parsed()) {
      const PlumbingGraph g = load_valid(input);
      Integer n;
      if (mode == "lower") {
        n = lower_bound(g);
      } else if (mode == "mintwist") {
        n = mintwist_upper_bound(detect_family_y(g));
      } else {
        n = torsion_upper_bound(detect_family_y(g), m);
      }
      result << n << "\n";
    } else if (expand_cmd->parsed()) {
      result << ncf_expand(Fraction::parse(fraction)).str() << "\n";
    } else if (eval_cmd->parsed()) {
      result << ncf_eval(ContinuedFraction::parse(coefficients)).str() << "\n";
    } else if (transform_cmd->parsed()) {
      const auto entries = ContinuedFraction::parse(matrix).coefficients;
      if (entries.size() != 4) throw DomainError("--matrix needs four entries m11,m12,m21,m22");
      const GluingMatrix g(entries[0], entries[1], entries[2], entries[3]);
      result << transform_slope(g, Fraction::parse(slope)).str() << "\n";
    }
  } catch (const InvalidGraph& e) {
    err << "invalid graph:\n";
    for (const Violation& v : e.report.violations) err << "  " << v.vertex << ": " << to_string(v.kind) << " (" << v.detail << ")\n";
    return kValidationFailed;
  } catch (const UnsupportedShape& e) {
    err << "unsupported shape: " << e.what() << "\n";
    return kUnsupportedShape;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const DomainError& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kParseError;
  }

  if (!output.empty()) {
    std::ofstream file(output, std::ios::binary);
    if (!file) {
      err << "cannot write '" << output << "'\n";
      return kParseError;
    }
    file << result.str();
  } else {
    out << result.str();
  }
  if (code == kValidationFailed) err << "graph failed validation\n";
  return code;
}

}  // namespace plumbstein
