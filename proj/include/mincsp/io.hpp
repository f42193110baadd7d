#pragma once

#include <stdexcept>
#include <string>

#include "mincsp/instances.hpp"
#include "mincsp/relation.hpp"

namespace mincsp {

class ParseError : public std::runtime_error {
public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

// All formats are line oriented UTF-8; '#' starts a comment.  Serializers
// emit canonical forms that re-parse to equal values.

Language parse_language(const std::string& text);
std::string serialize(const Language& lang);

DcspInstance parse_dcsp(const std::string& text);
std::string serialize(const DcspInstance& inst);

EvenOddSetInstance parse_oddset(const std::string& text);
std::string serialize(const EvenOddSetInstance& inst);

NcInstance parse_nc(const std::string& text);
std::string serialize(const NcInstance& inst);

MonotoneCircuit parse_circuit(const std::string& text);
std::string serialize(const MonotoneCircuit& circuit);

ColoredGraph parse_colored_graph(const std::string& text);
std::string serialize(const ColoredGraph& graph);

Cnf3 parse_cnf(const std::string& text);  // DIMACS cnf subset
std::string serialize(const Cnf3& cnf);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace mincsp
