#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace seidel;

namespace {

std::string valid_ids() {
  std::string s = "all";
  for (const auto& id : job_ids())
    s += ", " + id;
  return s;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seidel switching and spectra of complete multipartite graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  cli::Options opt;
  opt.workers = default_worker_count();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--jobs", opt.workers, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--tolerance", opt.tolerance, "Eigenvalue grouping tolerance")->check(CLI::PositiveNumber);

  auto* spectrum = app.add_subcommand("spectrum", "Seidel characteristic polynomial and eigenvalues");
  std::vector<std::string> spectrum_inputs;
  std::string spectrum_file;
  spectrum->add_option("graphs", spectrum_inputs, "graph6 strings or K:p,q,... specs");
  spectrum->add_option("--file", spectrum_file, "File with one graph6 string per line");

  auto* equivalent = app.add_subcommand("equivalent", "Decide switching equivalence");
  std::string eq_a, eq_b;
  equivalent->add_option("first", eq_a)->required();
  equivalent->add_option("second", eq_b)->required();

  auto* tripartite = app.add_subcommand("tripartite", "Cospectral complete tripartite graphs");
  tripartite->require_subcommand(1);
  auto* classify = tripartite->add_subcommand("classify", "Mates and sufficient conditions of a triple");
  std::vector<std::int64_t> triple;
  classify->add_option("parts", triple)->required()->expected(3);
  auto* scan = tripartite->add_subcommand("scan", "Cospectral families of each order in a range");
  std::vector<std::int64_t> range;
  scan->add_option("orders", range, "n, or first and last")->required()->expected(1, 2);
  auto* family = tripartite->add_subcommand("family", "Parametric cospectral pairs");
  std::string family_name;
  std::int64_t family_param = 0;
  family->add_option("name", family_name, "prr, pq1 or 7k")->required()->check(CLI::IsMember({"prr", "pq1", "7k"}));
  family->add_option("param", family_param)->required();

  auto* verify = app.add_subcommand("verify", "Run verification jobs");
  std::vector<std::string> ids;
  HarnessParams params;
  bool timing = false;
  std::vector<int> si_spec;
  verify->add_option("ids", ids, "Job ids or 'all'")->required();
  verify->add_option("--n-max", params.main_n_max, "Largest order for the exhaustive main-theorem check");
  verify->add_option("--tuples-n-max", params.tuples_n_max);
  verify->add_option("--tuples-k", params.tuples_k);
  verify->add_option("--bipartite-n-max", params.bipartite_n_max);
  verify->add_option("--si-spec", si_spec, "Part sizes for si-ge-3")->delimiter(',');
  verify->add_option("--si-n-max", params.si_n_max);
  verify->add_option("--remark-n-max", params.remark_n_max);
  verify->add_option("--prime-bound", params.prime_bound);
  verify->add_flag("--timing", timing, "Include elapsed_ms in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::exit_usage;
  }

  try {
    cli::Output out;
    if (*spectrum) {
      if (!spectrum_file.empty()) {
        auto more = cli::read_graph_file(spectrum_file);
        spectrum_inputs.insert(spectrum_inputs.end(), more.begin(), more.end());
      }
      if (spectrum_inputs.empty())
        throw argument_error("no graph given");
      out = cli::cmd_spectrum(spectrum_inputs, opt);
    } else if (*equivalent) {
      out = cli::cmd_equivalent(eq_a, eq_b);
    } else if (*classify) {
      out = cli::cmd_classify(triple[0], triple[1], triple[2]);
    } else if (*scan) {
      out = cli::cmd_scan(range.front(), range.back(), opt);
    } else if (*family) {
      out = cli::cmd_family(family_name, family_param);
    } else if (*verify) {
      for (const auto& id : ids)
        if (id != "all" && std::find(job_ids().begin(), job_ids().end(), id) == job_ids().end()) {
          std::cerr << "unknown job id '" << id << "'; valid ids: " << valid_ids() << '\n';
          return cli::exit_usage;
        }
      if (!si_spec.empty())
        params.si_spec = si_spec;
      params.workers = opt.workers;
      out = cli::cmd_verify(ids, params, timing);
    }
    if (format == "json")
      std::cout << out.data.dump(2) << '\n';
    else
      std::cout << out.table;
    return out.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::exit_usage;
  }
}
