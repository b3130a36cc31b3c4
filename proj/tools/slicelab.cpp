// slicelab command-line interface.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "slicelab/errors.hpp"
#include "slicelab/ihr.hpp"
#include "slicelab/json_io.hpp"
#include "slicelab/liedata.hpp"
#include "slicelab/sampling.hpp"
#include "slicelab/suites.hpp"

namespace {

using nlohmann::json;
using namespace slicelab;
using json_io::encode;

enum Exit { kOk = 0, kVerificationFailure = 1, kUsage = 2, kInternal = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Input {
  bool from_stdin = false;
  std::string file;
};

json read_input(const Input& in) {
  std::stringstream buf;
  if (!in.file.empty()) {
    std::ifstream f(in.file);
    if (!f) throw UsageError("cannot open " + in.file);
    buf << f.rdbuf();
  } else if (in.from_stdin) {
    buf << std::cin.rdbuf();
  } else {
    throw UsageError("input required: pass --json (stdin) or --file PATH");
  }
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
}

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw UsageError(std::string("input is missing \"") + key + "\"");
  return j.at(key);
}

/// "point" as a SlicePoint, or "zastava" as a chart point; alpha defaults to
/// the chart's coroot.
std::pair<SlicePoint, CorootInterval> point_and_alpha(const json& j) {
  if (j.contains("zastava")) {
    const ZastavaPoint z = json_io::decode_zastava(j.at("zastava"));
    const CorootInterval a = j.contains("alpha") ? json_io::decode_coroot(j.at("alpha")) : z.alpha;
    return {zastava_to_matrix(z), a};
  }
  return {json_io::decode_slice_point(need(j, "point")), json_io::decode_coroot(need(j, "alpha"))};
}

json cmd_decompose(const json& j) {
  const MatQt x = json_io::decode_matrix(j.is_object() ? need(j, "matrix") : j);
  return encode(gauss_decompose(x));
}

json cmd_project(const json& j) {
  const Projection p = project_pi(json_io::decode_matrix(need(j, "matrix")), json_io::decode_coweight(need(j, "mu")));
  return json{{"point", encode(p.point)}, {"n", encode(p.n_witness)}, {"n_minus", encode(p.nminus_witness)}};
}

json cmd_multiply(const json& j) {
  return encode(multiply(json_io::decode_slice_point(need(j, "y1")), json_io::decode_slice_point(need(j, "y2"))));
}

json cmd_split(const json& j) {
  const auto [y, a] = point_and_alpha(j);
  return encode(split_F(y, a));
}

json cmd_act(const json& j) {
  const auto [y, a] = point_and_alpha(j);
  std::vector<Rational> v;
  const json& jv = need(j, "v");
  if (!jv.is_array()) throw UsageError("\"v\" must be an array");
  for (const auto& c : jv) v.push_back(json_io::decode_rational(c));
  return encode(act(v, y, a));
}

json cmd_phi(const json& j) {
  const auto [y, a] = point_and_alpha(j);
  return encode(phi_alpha(y, a));
}

json cmd_zeta(const json& j) {
  const auto [y, a] = point_and_alpha(j);
  return encode(zeta_alpha(y, a));
}

json cmd_xi(const json& j) {
  const auto [y, a] = point_and_alpha(j);
  return encode(xi_alpha(y, a));
}

json cmd_sample(const json& j) {
  const auto seed = j.value("seed", std::uint64_t{0});
  const int bound = j.value("bound", 5);
  if (!j.contains("recipe")) return encode(sample_zastava(json_io::decode_coroot(need(j, "alpha")), seed, bound));
  const int n = need(j, "n").get<int>();
  std::vector<RecipeItem> recipe;
  for (const auto& item : need(j, "recipe")) {
    if (item.contains("alpha")) {
      recipe.emplace_back(json_io::decode_coroot(item.at("alpha")));
    } else {
      recipe.emplace_back(json_io::decode_coweight(need(item, "shift")));
    }
  }
  const Coweight mu = j.contains("mu") ? json_io::decode_coweight(j.at("mu")) : Coweight::zero(static_cast<std::size_t>(n));
  const SampledSlice s = sample_slice_counted(n, mu, recipe, seed, bound);
  return json{{"point", encode(s.point)}, {"rejections", s.rejections}};
}

json cmd_quiver(const json& j) {
  const Partition mu = json_io::decode_partition(j.is_object() ? need(j, "partition") : j);
  return json{{"partition", encode(mu)},
              {"N", mu.N()},
              {"mv", encode(mv_quiver(mu))},
              {"equiv", encode(equiv_quiver(mu))},
              {"alpha_mu", encode(alpha_mu(mu, mu.N()))}};
}

int error_exit(const std::string& kind, const std::string& message, int code) {
  std::cerr << json{{"error", kind}, {"message", message}}.dump() << "\n";
  return code;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact computations on slices of the affine Grassmannian of PGL_n"};
  app.require_subcommand(1);

  using Handler = std::function<json(const json&)>;
  const std::vector<std::pair<std::string, std::pair<std::string, Handler>>> commands = {
      {"decompose", {"Gauss decomposition of a matrix", cmd_decompose}},
      {"project", {"Projection pi onto Gr_mu with witnesses", cmd_project}},
      {"multiply", {"m(y1, y2) = pi(y1 y2)", cmd_multiply}},
      {"split", {"F_alpha(y) = (xi_alpha(y), pi(xi_alpha(y)^-1 y))", cmd_split}},
      {"act", {"Translation action of G_alpha", cmd_act}},
      {"phi", {"Moment map Phi_alpha", cmd_phi}},
      {"zeta", {"zeta_alpha", cmd_zeta}},
      {"xi", {"Section xi_alpha", cmd_xi}},
      {"sample", {"Deterministic chart or slice sample", cmd_sample}},
      {"quiver", {"Quiver dimension vectors and alpha_mu of a partition", cmd_quiver}},
  };
  std::map<CLI::App*, Handler> handlers;
  std::map<CLI::App*, Input> inputs;
  for (const auto& [name, entry] : commands) {
    CLI::App* sub = app.add_subcommand(name, entry.first);
    Input& in = inputs[sub];
    sub->add_flag("--json", in.from_stdin, "Read the JSON input from stdin");
    sub->add_option("--file", in.file, "Read the JSON input from a file");
    handlers[sub] = entry.second;
  }

  std::string suite;
  int n = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::string report_path;
  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "Suite name")->required();
  verify->add_option("--n", n, "Matrix size, 2..6")->required();
  verify->add_option("--trials", trials, "Trials per coroot interval")->required();
  verify->add_option("--seed", seed, "Base seed")->required();
  verify->add_option("--report", report_path, "Write the full JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (verify->parsed()) {
      const SuiteReport r = run_suite(suite, n, trials, seed);
      const json full = report_to_json(r);
      if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) throw UsageError("cannot write " + report_path);
        out << full.dump(2) << "\n";
      }
      json summary = full;
      summary.erase("failures");
      summary["failure_count"] = r.failures.size();
      if (!r.failures.empty()) summary["first_failure"] = full["failures"][0];
      std::cout << summary.dump(2) << "\n";
      if (r.internal_breach) return kInternal;
      return r.failures.empty() ? kOk : kVerificationFailure;
    }
    for (auto& [sub, handler] : handlers) {
      if (!sub->parsed()) continue;
      std::cout << handler(read_input(inputs[sub])).dump(2) << "\n";
      return kOk;
    }
    return kUsage;
  } catch (const UsageError& e) {
    return error_exit("UsageError", e.what(), kUsage);
  } catch (const json::exception& e) {
    return error_exit("UsageError", e.what(), kUsage);
  } catch (const InvalidArgument& e) {
    return error_exit("InvalidArgument", e.what(), kUsage);
  } catch (const InternalError& e) {
    return error_exit("InternalError", e.what(), kInternal);
  } catch (const Error& e) {
    return error_exit(std::string(to_string(e.kind())), e.what(), kVerificationFailure);
  } catch (const std::exception& e) {
    return error_exit("InternalError", e.what(), kInternal);
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
