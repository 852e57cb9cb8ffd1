#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ferrers/graphs.hpp"
#include "ferrers/limits.hpp"
#include "ferrers/shapes.hpp"

namespace ferrers::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kCapExceeded = 2,
  kVerificationFailed = 3,
};

enum class Method { triangle, row, edge, rank, xi };
enum class Format { plain, json, tsv, bfile };

// Largest --cells accepted by `verify`.
inline constexpr std::int64_t kMaxVerifyCells = 20;

struct RunConfig {
  Method method = Method::triangle;
  std::optional<Shape> shape;
  std::optional<SimpleGraph> graph;
  Format format = Format::plain;
  OracleLimits limits;
};

int cmd_beta(const RunConfig& config, std::ostream& out, std::ostream& err);

int cmd_triangle(const Shape& shape, Format format, std::ostream& out);

struct SequenceRequest {
  std::string name;  // genocchi2 | legendre-stirling | beta-staircase
  std::uint64_t count = 10;
  std::uint64_t rows = 10;
  std::uint64_t steplength = 1;
  Format format = Format::tsv;
};

int cmd_sequence(const SequenceRequest& request, std::ostream& out,
                 std::ostream& err);

int cmd_complex(const RunConfig& config, std::ostream& out, std::ostream& err);

int cmd_verify(std::int64_t cells, const OracleLimits& limits,
               std::ostream& out, std::ostream& err);

struct BenchRequest {
  std::vector<Shape> shapes;
  std::uint64_t random_count = 0;
  std::int64_t random_cells = 10000;
  std::uint64_t seed = 1;
  OracleLimits limits;
};

int cmd_bench(const BenchRequest& request, std::ostream& out, std::ostream& err);

// Parses argv and dispatches; returns the process exit code.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace ferrers::cli
