#include "mimgraph/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mimgraph/bench.hpp"
#include "mimgraph/map_xml.hpp"
#include "mimgraph/router.hpp"
#include "mimgraph/sbml.hpp"
#include "mimgraph/service.hpp"
#include "mimgraph/svg.hpp"

namespace mimgraph {

namespace {

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

/// A failure that has already been reported; carries the exit code.
struct Exit {
  int code;
};

std::string read_input(const std::string& path, Io& io) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << io.in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    io.err << "error: cannot read '" << path << "'\n";
    throw Exit{kExitData};
  }
  buf << file.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& data, Io& io) {
  if (path.empty() || path == "-") {
    io.out << data;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  file << data;
  if (!file) {
    io.err << "error: cannot write '" << path << "'\n";
    throw Exit{kExitData};
  }
}

void report(const Error& e, Io& io) {
  io.err << "error: " << error_code_name(e.code()) << ": " << e.what();
  if (!e.detail().empty()) io.err << " (" << e.detail() << ")";
  io.err << '\n';
}

std::string format_violation(const Violation& v) {
  return std::string(error_code_name(v.rule)) + " " + v.id + ": " + v.message;
}

int cmd_validate(const std::string& input, Io& io) {
  const SceneMap map = parse_map(read_input(input, io), {.validate = false});
  const auto violations = validate(map);
  for (const Violation& v : violations) io.out << format_violation(v) << '\n';
  return violations.empty() ? kExitOk : kExitData;
}

int cmd_route(const std::string& input, const std::string& output, const RouteOptions& options, Io& io) {
  SceneMap map = parse_map(read_input(input, io), {.validate = false});
  const auto before = validate(map, {.auto_waypoints = false});
  if (!before.empty()) {
    for (const Violation& v : before) io.err << format_violation(v) << '\n';
    return kExitData;
  }
  const BatchRouteReport batch = map.reroute_all(options);
  std::string doc = serialize_map_unchecked(map);
  for (const auto& [id, why] : batch.failed) doc += xml_comment("route failed: " + id + ": " + why);
  write_output(output, doc, io);
  for (const auto& [id, why] : batch.failed) io.err << "route failed: " << id << ": " << why << '\n';
  return batch.failed.empty() ? kExitOk : kExitRouting;
}

int cmd_convert(const std::string& input, const std::string& output, const std::string& to, Io& io) {
  const SceneMap map = parse_map(read_input(input, io));
  std::string doc;
  if (to == "xml") {
    doc = serialize_map(map);
  } else if (to == "sbml") {
    doc = export_sbml(map);
  } else {
    doc = render_svg(map);
  }
  write_output(output, doc, io);
  return kExitOk;
}

std::vector<int> parse_grid_list(const std::string& text, Io& io) {
  std::vector<int> grids;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int n = 0;
    const auto res = std::from_chars(item.data(), item.data() + item.size(), n);
    if (res.ec != std::errc{} || res.ptr != item.data() + item.size() || n < 2 || n > kMaxGridSize) {
      io.err << "error: --grids expects sizes in [2, " << kMaxGridSize << "], got '" << item << "'\n";
      throw Exit{kExitUsage};
    }
    grids.push_back(n);
  }
  if (grids.empty()) {
    io.err << "error: --grids is empty\n";
    throw Exit{kExitUsage};
  }
  return grids;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Io io{in, out, err};
  CLI::App app{"Molecular interaction map toolkit", "mimgraph"};
  app.require_subcommand(1);

  std::string input;
  std::string output;

  auto* validate_cmd = app.add_subcommand("validate", "Check a map; print one violation per line");
  validate_cmd->add_option("input", input, "Map file (default: stdin)");

  int grid = kDefaultGridSize;
  std::string mode = "exact";
  auto* route_cmd = app.add_subcommand("route", "Re-route every auto edge of a map");
  route_cmd->add_option("input", input, "Map file (default: stdin)");
  route_cmd->add_option("--grid", grid, "Routing grid size")->check(CLI::Range(2, kMaxGridSize));
  route_cmd->add_option("--mode", mode, "Search mode")->check(CLI::IsMember({"exact", "paper"}));
  route_cmd->add_option("-o,--out", output, "Output file (default: stdout)");

  std::string to;
  auto* convert_cmd = app.add_subcommand("convert", "Convert a map to another format");
  convert_cmd->add_option("input", input, "Map file (default: stdin)");
  convert_cmd->add_option("--to", to, "Target format")->required()->check(CLI::IsMember({"xml", "sbml", "svg"}));
  convert_cmd->add_option("-o,--out", output, "Output file (default: stdout)");

  auto* render_cmd = app.add_subcommand("render", "Render a map as SVG");
  render_cmd->add_option("input", input, "Map file (default: stdin)");
  render_cmd->add_option("-o,--out", output, "Output file (default: stdout)");

  std::string grids = "4,5,6,7,9,11";
  int trials = 50;
  std::uint64_t seed = kDefaultBenchSeed;
  std::string csv;
  auto* bench_cmd = app.add_subcommand("bench", "Time routing across grid sizes");
  bench_cmd->add_option("--grids", grids, "Comma-separated grid sizes");
  bench_cmd->add_option("--trials", trials, "Routes per grid size")->check(CLI::Range(1, 1000000));
  bench_cmd->add_option("--seed", seed, "Scene and pair seed");
  bench_cmd->add_option("--csv", csv, "Also write per-trial samples as CSV");

  std::string host = "127.0.0.1";
  int port = kDefaultPort;
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP service");
  serve_cmd->add_option("--host", host, "Bind address");
  serve_cmd->add_option("--port", port, "TCP port")->check(CLI::Range(0, 65535));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*validate_cmd) return cmd_validate(input, io);
    if (*route_cmd) {
      RouteOptions options;
      options.grid_n = grid;
      options.mode = mode == "paper" ? SearchMode::paper_faithful : SearchMode::exact;
      return cmd_route(input, output, options, io);
    }
    if (*convert_cmd) return cmd_convert(input, output, to, io);
    if (*render_cmd) return cmd_convert(input, output, "svg", io);
    if (*bench_cmd) {
      const auto rows = run_bench(parse_grid_list(grids, io), trials, seed);
      write_bench_table(out, rows);
      if (!csv.empty()) {
        std::ostringstream buf;
        write_bench_csv(buf, rows);
        write_output(csv, buf.str(), io);
      }
      return kExitOk;
    }
    if (*serve_cmd) {
      Service service;
      HttpServer server(service);
      const int bound = server.bind(host, port);
      if (bound < 0) {
        err << "error: cannot listen on " << host << ":" << port << '\n';
        return kExitData;
      }
      err << "listening on http://" << host << ":" << bound << '\n';
      return server.listen() ? kExitOk : kExitData;
    }
  } catch (const Exit& e) {
    return e.code;
  } catch (const Error& e) {
    report(e, io);
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace mimgraph
