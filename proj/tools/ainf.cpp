#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace ainf;

  CLI::App app{"Exact verification of curved A∞ structures"};
  app.require_subcommand(1, 1);

  std::string file;
  std::optional<int> cap;
  std::string format = "text";
  unsigned jobs = 1;
  bool strict = false;
  cli::Options opts;

  for (const auto& name : cli::command_names()) {
    CLI::App* sub = app.add_subcommand(name, cli::command_summary(name));
    sub->add_option("file", file, "JSON document")->required()->check(CLI::ExistingFile);
    sub->add_option("--cap", cap, "weight cap (default: AINF_DEFAULT_CAP, then the document caps)");
    sub->add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--jobs,-j", jobs, "worker threads")->check(CLI::Range(1u, 256u));
    sub->add_flag("--strict", strict, "exit 3 when a verdict is UNDECIDED or UNSUPPORTED");
    sub->add_option("--name", opts.name, "only the entity with this name");
    if (name == "base-change") {
      sub->add_option("--to", opts.to, "target ring, e.g. ZZ/5, QQ, QQ[t]")->required();
      sub->add_option("--at", opts.at, "evaluation point, one value per variable")->delimiter(',');
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : cli::Usage;
  }

  if (!cap) {
    if (const char* env = std::getenv("AINF_DEFAULT_CAP")) {
      try {
        cap = std::stoi(env);
      } catch (const std::exception&) {
        std::cerr << "error: AINF_DEFAULT_CAP is not an integer\n";
        return cli::Usage;
      }
    }
  }
  opts.cap = cap;
  set_worker_count(jobs);

  std::string command = app.get_subcommands().front()->get_name();
  try {
    io::SpecDocument doc = io::load(file);
    auto reports = cli::run(command, doc, opts);
    std::cout << (format == "json" ? cli::format_json(reports) : cli::format_text(reports));
    return cli::exit_code(reports, strict);
  } catch (const io::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
  } catch (const io::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
  } catch (const cli::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
  }
  return cli::Usage;
}
