#pragma once

#include <string>
#include <string_view>

#include "cra/command.hpp"
#include "cra/model.hpp"

namespace cra {

/// Model selection for the textual front end. Event models take their
/// alphabet from declarations at the start of the source, or a default.
struct SyntaxConfig {
  ModelKind kind = ModelKind::Relational;
  int states = 3;
  /// Observation depth; hiding over parallel terms expands this far.
  int depth = 6;
};

struct Program {
  Model model;
  Command term;
};

struct Query {
  enum class Relation { Refines, Equal };

  Model model;
  Command lhs;
  Relation relation = Relation::Refines;
  Command rhs;
};

/// Builds the model described by leading declarations
/// (`events a,b; complement a~abar;`, `particles x,y; bound 2;`).
/// `consumed` receives the offset of the first character after them.
Model parse_model(std::string_view src, const SyntaxConfig& cfg, std::size_t* consumed = nullptr);

/// Parses a bare expression (no declarations) over `m`.
Command parse(const Model& m, std::string_view src, int depth = 6);
/// Declarations followed by one expression.
Program parse_program(std::string_view src, const SyntaxConfig& cfg);
/// Declarations followed by `c [= d` or `c = d`.
Query parse_query(std::string_view src, const SyntaxConfig& cfg);

/// Prints a term so that `parse` gives it back structurally unchanged.
std::string print(const Model& m, const Command& c);
/// Prints the declarations that recreate the alphabet of an event model.
std::string print_declarations(const Model& m);

}  // namespace cra
