#include <cstdio>
#include <string>
#include <vector>

#include "gwo/cli.hpp"

namespace {

constexpr const char* kUsage =
    "gwo - finite groups with operations, internal groupoids and crossed "
    "modules\n"
    "\n"
    "usage: gwo <subcommand> [args]\n"
    "\n"
    "subcommands:\n"
    "  check <file>                    validate a structure document\n"
    "  cover <file> --object N --subgroup i,j,...\n"
    "                                  coset cover of a groupoid, or the\n"
    "                                  internal-structure lift of an internal\n"
    "                                  groupoid\n"
    "  to-xmod <file>                  internal groupoid -> crossed module\n"
    "  to-internal <file>              crossed module -> internal groupoid\n"
    "  lift <cover> <morphism>         lift a pointed morphism through a cover\n"
    "  equiv <file> [--battery dir]    action/cover equivalence check\n"
    "  corr <cover>                    covering -> crossed-module morphism\n"
    "\n"
    "flags: --report json|text   --out <file>   --seed <n>\n"
    "exit codes: 0 pass, 1 check failure, 2 usage/parse error\n";

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty() || args[0] == "--help" || args[0] == "-h") {
    std::fputs(kUsage, args.empty() ? stderr : stdout);
    return args.empty() ? 2 : 0;
  }
  gwo::CliReport report = gwo::run_command(args);
  bool json = false;
  for (size_t i = 0; i + 1 < args.size(); ++i)
    if (args[i] == "--report" && args[i + 1] == "json") json = true;
  std::fputs((json ? report.to_json() + "\n" : report.to_text()).c_str(),
             stdout);
  return report.exit_code;
}
