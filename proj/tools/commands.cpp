#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <map>

#include "ferrers/complex.hpp"
#include "ferrers/errors.hpp"
#include "ferrers/graph_invariants.hpp"
#include "ferrers/recursion.hpp"
#include "ferrers/sequences.hpp"
#include "ferrers/triangle.hpp"

namespace ferrers::cli {

namespace {

using nlohmann::json;

const std::map<std::string, Method> kMethods{
    {"triangle", Method::triangle}, {"row", Method::row}, {"edge", Method::edge},
    {"rank", Method::rank},         {"xi", Method::xi},
};

const std::map<std::string, Format> kFormats{
    {"plain", Format::plain}, {"json", Format::json},
    {"tsv", Format::tsv},     {"bfile", Format::bfile},
};

std::string method_name(Method m) {
  for (const auto& [name, value] : kMethods) {
    if (value == m) return name;
  }
  return "?";
}

SimpleGraph input_graph(const RunConfig& config) {
  return config.graph ? *config.graph : ferrers_graph(*config.shape);
}

json strings(const std::vector<BigInt>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_decimal(v));
  return out;
}

SimpleGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file " + path);
  return parse_edge_list(in);
}

}  // namespace

int cmd_beta(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.shape.has_value() == config.graph.has_value()) {
    err << "beta: give exactly one of --shape or --graph\n";
    return kInputError;
  }
  BigInt beta;
  switch (config.method) {
    case Method::triangle:
    case Method::row:
      if (!config.shape) {
        err << "beta: method " << method_name(config.method)
            << " needs a Ferrers shape\n";
        return kInputError;
      }
      beta = config.method == Method::triangle ? beta_ferrers(*config.shape)
                                               : beta_row_recursion(*config.shape);
      break;
    case Method::edge:
      beta = beta_edge_recursion(input_graph(config), EdgeOrder::min_degree,
                                 config.limits.recursion_vertices);
      break;
    case Method::rank:
      beta = beta_via_rank(input_graph(config), config.limits.exhaustive_vertices);
      break;
    case Method::xi:
      beta = beta_via_xi(input_graph(config), config.limits.recursion_vertices);
      break;
  }

  if (config.format == Format::json) {
    json doc;
    doc["beta"] = to_decimal(beta);
    doc["method"] = method_name(config.method);
    if (config.shape) {
      doc["shape"] = config.shape->to_string();
    } else {
      doc["vertices"] = config.graph->vertex_count();
      doc["edges"] = config.graph->edges().size();
    }
    out << doc.dump() << "\n";
  } else {
    out << to_decimal(beta) << "\n";
  }
  return kOk;
}

int cmd_triangle(const Shape& shape, Format format, std::ostream& out) {
  const auto t = coefficient_triangle(shape);
  if (format == Format::json) {
    json rows = json::array();
    for (const auto& row : t.rows) rows.push_back(strings(row));
    out << rows.dump() << "\n";
    return kOk;
  }
  for (const auto& row : t.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out << '\t';
      out << to_decimal(row[j]);
    }
    out << '\n';
  }
  return kOk;
}

int cmd_sequence(const SequenceRequest& request, std::ostream& out,
                 std::ostream& err) {
  // (index, value) lines; for the Legendre-Stirling triangle the TSV form
  // carries both indices and the b-file form numbers entries row by row.
  struct Entry {
    std::vector<std::uint64_t> index;
    BigInt value;
  };
  std::vector<Entry> entries;

  if (request.name == "genocchi2") {
    for (std::uint64_t r = 1; r <= request.count; ++r) {
      entries.push_back({{r}, genocchi2(r)});
    }
  } else if (request.name == "beta-staircase") {
    if (request.steplength < 1) {
      err << "sequence: --steplength must be at least 1\n";
      return kInputError;
    }
    for (std::uint64_t r = 1; r <= request.count; ++r) {
      entries.push_back({{r}, beta_triangle(staircase(static_cast<std::int64_t>(r),
                                                      static_cast<std::int64_t>(request.steplength)))});
    }
  } else if (request.name == "legendre-stirling") {
    const auto rows = legendre_stirling_rows(request.rows);
    for (std::uint64_t i = 1; i <= rows.size(); ++i) {
      for (std::uint64_t j = 1; j <= i; ++j) {
        entries.push_back({{i, j}, rows[i - 1][j - 1]});
      }
    }
  } else {
    err << "sequence: unknown sequence \"" << request.name
        << "\" (genocchi2, legendre-stirling, beta-staircase)\n";
    return kInputError;
  }

  switch (request.format) {
    case Format::json: {
      json values = json::array();
      for (const auto& e : entries) values.push_back(to_decimal(e.value));
      out << values.dump() << "\n";
      break;
    }
    case Format::bfile: {
      std::uint64_t n = 1;
      for (const auto& e : entries) out << n++ << ' ' << to_decimal(e.value) << '\n';
      break;
    }
    default:
      for (const auto& e : entries) {
        for (const auto i : e.index) out << i << '\t';
        out << to_decimal(e.value) << '\n';
      }
  }
  return kOk;
}

int cmd_complex(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.shape.has_value() == config.graph.has_value()) {
    err << "complex: give exactly one of --shape or --graph\n";
    return kInputError;
  }
  const auto rv = rank_vector(input_graph(config), config.limits.exhaustive_vertices);
  json counts = json::array();
  for (const auto c : rv.counts) counts.push_back(std::to_string(c));
  out << counts.dump() << "\n";
  return kOk;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Boolean numbers of Ferrers graphs"};
  app.require_subcommand(1);

  OracleLimits limits = OracleLimits::from_environment();
  std::size_t cap_vertices = 0;
  std::string shape_text;
  std::string graph_path;
  std::string method = "triangle";
  std::string format;

  auto add_cap = [&cap_vertices](CLI::App* cmd) {
    cmd->add_option("--cap-vertices", cap_vertices,
                    "Vertex cap for the exponential oracles (overrides FB_CAP_VERTICES)")
        ->check(CLI::PositiveNumber);
  };
  auto add_input = [&](CLI::App* cmd) {
    auto* shape_opt = cmd->add_option("--shape", shape_text, "Row lengths, e.g. 7,7,7,6,4,4,2");
    auto* graph_opt = cmd->add_option("--graph", graph_path, "Edge-list file");
    shape_opt->excludes(graph_opt);
  };

  auto* beta = app.add_subcommand("beta", "Boolean number of a shape or graph");
  add_input(beta);
  beta->add_option("--method", method, "triangle | row | edge | rank | xi")
      ->check(CLI::IsMember({"triangle", "row", "edge", "rank", "xi"}));
  beta->add_option("--format", format, "plain | json")
      ->check(CLI::IsMember({"plain", "json"}));
  add_cap(beta);

  auto* triangle = app.add_subcommand("triangle", "Coefficient triangle of a shape");
  triangle->add_option("--shape", shape_text, "Row lengths")->required();
  triangle->add_option("--format", format, "tsv | json")
      ->check(CLI::IsMember({"tsv", "json"}));

  SequenceRequest seq;
  auto* sequence = app.add_subcommand("sequence", "Integer sequences");
  sequence->add_option("name", seq.name, "genocchi2 | legendre-stirling | beta-staircase")
      ->required();
  sequence->add_option("--count", seq.count, "Number of terms");
  sequence->add_option("--rows", seq.rows, "Rows of the Legendre-Stirling triangle");
  sequence->add_option("--steplength", seq.steplength, "Staircase steplength");
  sequence->add_option("--format", format, "tsv | bfile | json")
      ->check(CLI::IsMember({"tsv", "bfile", "json"}));

  auto* complex = app.add_subcommand("complex", "Rank vector of the boolean complex");
  add_input(complex);
  complex->add_option("--format", format, "json")->check(CLI::IsMember({"json"}));
  add_cap(complex);

  std::int64_t cells = -1;
  auto* verify = app.add_subcommand("verify", "Cross-check every method on small shapes");
  verify->add_option("--cells", cells, "Largest cell count to sweep")->required();
  add_cap(verify);

  BenchRequest bench_request;
  std::vector<std::string> bench_shapes;
  auto* bench = app.add_subcommand("bench", "Cost model and timings");
  bench->add_option("--shape", bench_shapes, "Shapes to measure (repeatable)");
  bench->add_option("--random", bench_request.random_count, "Number of random shapes");
  bench->add_option("--cells", bench_request.random_cells, "Cells per random shape")
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_request.seed, "Seed for random shapes");
  add_cap(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  if (cap_vertices > 0) limits = OracleLimits::uniform(cap_vertices);

  try {
    RunConfig config;
    config.limits = limits;
    config.method = kMethods.at(method);
    if (!shape_text.empty()) config.shape = parse_shape(shape_text);
    if (!graph_path.empty()) config.graph = read_graph_file(graph_path);

    if (beta->parsed()) {
      config.format = format == "json" ? Format::json : Format::plain;
      return cmd_beta(config, out, err);
    }
    if (triangle->parsed()) {
      return cmd_triangle(*config.shape, format == "json" ? Format::json : Format::tsv, out);
    }
    if (sequence->parsed()) {
      seq.format = format.empty() ? Format::tsv : kFormats.at(format);
      return cmd_sequence(seq, out, err);
    }
    if (complex->parsed()) return cmd_complex(config, out, err);
    if (verify->parsed()) return cmd_verify(cells, limits, out, err);
    if (bench->parsed()) {
      for (const auto& text : bench_shapes) bench_request.shapes.push_back(parse_shape(text));
      bench_request.limits = limits;
      return cmd_bench(bench_request, out, err);
    }
  } catch (const GraphTooLarge& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace ferrers::cli
