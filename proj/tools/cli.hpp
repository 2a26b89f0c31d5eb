#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "regsg/report.hpp"
#include "regsg/semigroup.hpp"

namespace regsg::cli {

  // Exit statuses.
  inline constexpr int kPass         = 0;
  inline constexpr int kFail         = 1;
  inline constexpr int kInputError   = 2;

  struct RunConfig {
    std::string              command;
    std::string              corpus;
    std::string              input;
    std::string              format = "cayley";
    std::vector<std::string> suites;  // empty means all
    std::size_t              max_chain_length = 4;
    std::string              out;
    std::string              graph = "biorder";
  };

  // Suite names in run order.
  std::vector<std::string> const& suite_names();
  // Canonical name of a suite, accepting the aliases section3 and section4.
  // Throws Parse for an unknown name.
  std::string resolve_suite(std::string const& name);

  // cayley: {"name", "order", "table"}; transformations: {"name", "degree",
  // "generators"}. Throws Parse naming the offending field, and whatever the
  // semigroup builders throw.
  FiniteSemigroup parse_semigroup_text(std::string const& text, std::string const& format, std::string const& origin);
  FiniteSemigroup parse_semigroup(std::string const& path, std::string const& format);

  // Order, idempotents, Green classes and the sizes of the derived
  // structures.
  nlohmann::ordered_json analyze(FiniteSemigroup const& S);

  Report run_suites(FiniteSemigroup const& S, std::vector<std::string> const& suites, std::size_t max_chain_length);

  // Reconstructions from G(S) and from the cross-connection, each checked
  // against S.
  Report roundtrip(FiniteSemigroup const& S);

  // Graph selectors: biorder, groupoid, gamma-groupoid, poset-l, poset-r,
  // ls, rs, lg, rg. Throws Parse for anything else.
  std::vector<std::string> const& graph_names();
  std::string                     export_dot(FiniteSemigroup const& S, std::string const& graph);

  nlohmann::ordered_json to_json(Report const& report);

  int run(RunConfig const& config, std::ostream& out, std::ostream& err);

  // Parses argv and runs. Usage errors exit with kInputError.
  int main_entry(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

}  // namespace regsg::cli
