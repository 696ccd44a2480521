// Command-line front end over the C interface.
//
//   arthurkit <command> [FILE] [--json] [--strict] [options]
//
// FILE defaults to standard input. Exit status: 0 ok, 1 input error,
// 2 negative verdict under --strict.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <memory>
#include <sstream>

#include "arthurkit/arthurkit.h"

namespace {

struct Args {
  std::string file = "-";
  bool json = false;
  bool strict = false;
  std::string oracle = "unramified";
  std::string group = "Sp";
  long long n = 1;
  long long max_n = 9;
  std::string kind = "param";
  std::string rhos = "triv";
};

const std::map<std::string, std::string> kHelp = {
    {"validate", "check dimension, contragredient closure and twists of each param"},
    {"decompose", "split each param into nu_pos, np and gp parts"},
    {"lparam", "print the L-parameter of each param"},
    {"dual-param", "swap the two SL2 factors of each param"},
    {"characters", "list the characters of the component group"},
    {"ems-check", "check order, sign condition and (L) for each ems"},
    {"ems-pi", "Langlands data of each ems satisfying (L)"},
    {"ems-dual", "dual of each ems"},
    {"l-class", "all (L)-classes with the support of each param"},
    {"tempered-packet", "members of the tempered packet of each tempered param"},
    {"singleton", "is the tempered packet a singleton"},
    {"shahidi", "does the packet of each param contain a generic member"},
    {"classify-unramified", "decide whether an unramified ldata is of Arthur type"},
    {"unramified-member", "the unramified member of the packet of each param"},
    {"arthur-type", "run the Arthur-type test with a derivative oracle"},
    {"steinberg", "the Steinberg parameter of a group"},
    {"enumerate", "census of good-parity objects for a family"},
};

std::string read_input(const std::string& file) {
  if (file == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open '" + file + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int report(ak_status s) {
  std::cerr << "arthurkit: " << ak_status_name(s) << ": " << ak_last_error() << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local Arthur parameters, extended multi-segments and unramified classification"};
  app.require_subcommand(1);
  Args args;
  for (std::size_t i = 0; i < ak_command_count(); ++i) {
    std::string name = ak_command_name(i);
    auto* sub = app.add_subcommand(name, kHelp.at(name));
    sub->add_flag("--json", args.json, "JSON output");
    sub->add_flag("--strict", args.strict, "exit 2 on a negative verdict");
    if (ak_command_needs_input(name.c_str()))
      sub->add_option("file", args.file, "input workspace, - for stdin");
    if (name == "arthur-type")
      sub->add_option("--oracle", args.oracle, "derivative oracle")->check(CLI::IsMember({"tempered", "unramified"}));
    if (name == "steinberg" || name == "enumerate")
      sub->add_option("--group", args.group, "Sp or SO")->check(CLI::IsMember({"Sp", "SO"}));
    if (name == "steinberg") sub->add_option("--n", args.n, "rank")->check(CLI::PositiveNumber);
    if (name == "enumerate") {
      sub->add_option("--max-N", args.max_n, "largest dual dimension (capped by ARTHURKIT_MAX_N)")
          ->check(CLI::PositiveNumber);
      sub->add_option("--kind", args.kind, "param, ems or ldata")->check(CLI::IsMember({"param", "ems", "ldata"}));
      sub->add_option("--rhos", args.rhos, "comma separated census rhos: triv, chi, s");
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  std::string command = app.get_subcommands().front()->get_name();

  std::unique_ptr<ak_options, decltype(&ak_options_free)> opts(nullptr, ak_options_free);
  ak_options* raw_opts = nullptr;
  if (ak_status s = ak_options_new(&raw_opts); s != AK_OK) return report(s);
  opts.reset(raw_opts);
  const std::pair<const char*, std::string> settings[] = {
      {"json", args.json ? "1" : "0"}, {"strict", args.strict ? "1" : "0"}, {"oracle", args.oracle},
      {"group", args.group},           {"n", std::to_string(args.n)},       {"max-N", std::to_string(args.max_n)},
      {"kind", args.kind},             {"rhos", args.rhos}};
  for (const auto& [k, v] : settings)
    if (ak_status s = ak_options_set(opts.get(), k, v.c_str()); s != AK_OK) return report(s);

  std::unique_ptr<ak_workspace, decltype(&ak_workspace_free)> ws(nullptr, ak_workspace_free);
  if (ak_command_needs_input(command.c_str())) {
    std::string text;
    try {
      text = read_input(args.file);
    } catch (const std::exception& e) {
      std::cerr << "arthurkit: " << e.what() << "\n";
      return 1;
    }
    ak_workspace* raw = nullptr;
    if (ak_status s = ak_workspace_parse(text.c_str(), &raw); s != AK_OK) return report(s);
    ws.reset(raw);
  }

  char* out = nullptr;
  int exit_code = 1;
  if (ak_status s = ak_run(command.c_str(), ws.get(), opts.get(), &out, &exit_code); s != AK_OK) return report(s);
  std::cout << out;
  ak_string_free(out);
  return exit_code;
}
