#include "pregame/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "pregame/dsl/checker.hpp"
#include "pregame/dsl/render.hpp"
#include "pregame/laws.hpp"

namespace pregame::cli {

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return buf.str();
}

void report(std::ostream& err, const std::string& path, const Error& e) {
  err << path;
  if (e.span()) err << ":" << e.span()->line << ":" << e.span()->column;
  err << ": error: " << e.what() << "\n";
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err, Caps caps) : out_(out), err_(err), caps_(caps) {}

  int check(const std::string& path) {
    auto source = read_file(path);
    if (!source) return io_error(path);
    try {
      const dsl::Environment env = dsl::load(*source);
      for (const auto& name : env.game_order) {
        dsl::elaborate_game(env, name, caps_);
        const auto& g = env.games.at(name);
        out_ << name << " : " << render_arrow(g.domain, g.codomain) << "\n";
      }
      return kOk;
    } catch (const Error& e) {
      report(err_, path, e);
      return kFailure;
    }
  }

  int equilibria(const std::string& path, const std::string& game, const std::string& format) {
    auto source = read_file(path);
    if (!source) return io_error(path);
    try {
      const dsl::Environment env = dsl::load(*source);
      const Pregame g = dsl::elaborate_game(env, game, caps_);
      const auto ranks = equilibrium_ranks(g, caps_);
      if (format == "json") {
        nlohmann::ordered_json doc;
        doc["game"] = game;
        doc["profiles"] = nlohmann::ordered_json::array();
        for (auto sigma : ranks) doc["profiles"].push_back(profile_labels(g, sigma));
        doc["count"] = ranks.size();
        out_ << doc.dump(2) << "\n";
      } else {
        for (auto sigma : ranks) {
          const auto parts = profile_labels(g, sigma);
          out_ << "(";
          for (std::size_t i = 0; i < parts.size(); ++i) out_ << (i ? ", " : "") << parts[i];
          out_ << ")\n";
        }
      }
      return kOk;
    } catch (const Error& e) {
      report(err_, path, e);
      return kFailure;
    }
  }

  int laws(std::uint64_t seed, std::size_t iterations) {
    try {
      const auto outcomes = run_law_suites(seed, iterations, caps_);
      out_ << format_report(outcomes, seed, iterations);
      const bool ok = std::all_of(outcomes.begin(), outcomes.end(),
                                  [](const LawOutcome& o) { return o.ok(); });
      return ok ? kOk : kFailure;
    } catch (const Error& e) {
      err_ << "error: " << e.what() << "\n";
      return kFailure;
    }
  }

  int render(const std::string& path, const std::string& game, const std::string& output) {
    auto source = read_file(path);
    if (!source) return io_error(path);
    std::string dot;
    try {
      const dsl::Environment env = dsl::load(*source);
      auto it = env.games.find(game);
      if (it == env.games.end()) {
        throw Error(ErrorKind::UnknownName, "no game named '" + game + "'");
      }
      dot = dsl::render_dot(it->second, game);
    } catch (const Error& e) {
      report(err_, path, e);
      return kFailure;
    }
    if (output.empty() || output == "-") {
      out_ << dot;
      return kOk;
    }
    std::ofstream file(output, std::ios::binary);
    file << dot;
    file.close();
    if (!file) {
      err_ << "error: cannot write '" << output << "'\n";
      return kUsage;
    }
    return kOk;
  }

 private:
  int io_error(const std::string& path) {
    err_ << "error: cannot read '" << path << "'\n";
    return kUsage;
  }

  std::ostream& out_;
  std::ostream& err_;
  Caps caps_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compositional games over finite sets", "pregame"};
  app.require_subcommand(1);

  std::string path;
  std::string game;
  std::string format = "text";
  std::string output;
  std::uint64_t seed = kDefaultSeed;
  std::size_t iterations = 100;

  auto* check = app.add_subcommand("check", "Typecheck a .pregame file and list its games");
  check->add_option("file", path, "Input file")->required();

  auto* eq = app.add_subcommand("equilibria", "Enumerate equilibria of a closed game");
  eq->add_option("file", path, "Input file")->required();
  eq->add_option("--game", game, "Game name")->required();
  eq->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* laws = app.add_subcommand("laws", "Run the law suites");
  laws->add_option("--seed", seed, "Random seed");
  laws->add_option("--iters", iterations, "Random instances per suite")
      ->check(CLI::Validator(
          [](const std::string& s) {
            return s.find_first_not_of("0123456789") == std::string::npos &&
                           s.find_first_not_of('0') != std::string::npos
                       ? std::string()
                       : "must be a positive integer, got '" + s + "'";
          },
          "POSITIVE"));

  auto* render = app.add_subcommand("render", "Emit a Graphviz diagram of a game");
  render->add_option("file", path, "Input file")->required();
  render->add_option("--game", game, "Game name")->required();
  render->add_option("-o,--output", output, "Output .dot file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run 'pregame --help' for usage\n";
    return kUsage;
  }

  Caps caps;
  try {
    caps = Caps::from_env();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  Runner runner(out, err, caps);
  if (*check) return runner.check(path);
  if (*eq) return runner.equilibria(path, game, format);
  if (*laws) return runner.laws(seed, iterations);
  return runner.render(path, game, output);
}

}  // namespace pregame::cli
