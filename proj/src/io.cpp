#include "mincsp/io.hpp"

#include <fstream>
#include <sstream>

namespace mincsp {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    Line line{number, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

int parse_int(const Line& line, const std::string& tok) {
  try {
    size_t pos = 0;
    const int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw ParseError(line.number, "expected an integer, got '" + tok + "'");
  }
}

}  // namespace

Language parse_language(const std::string& text) {
  std::vector<Relation> relations;
  const std::vector<Line> lines = tokenize(text);
  size_t i = 0;
  while (i < lines.size()) {
    const Line& head = lines[i];
    if (head.tokens[0] != "relation" || head.tokens.size() != 3)
      throw ParseError(head.number, "expected 'relation <name> <arity>'");
    const std::string name = head.tokens[1];
    const int arity = parse_int(head, head.tokens[2]);
    std::vector<std::string> tuples;
    ++i;
    bool closed = false;
    while (i < lines.size()) {
      const Line& line = lines[i];
      if (line.tokens[0] == "end") {
        if (line.tokens.size() != 1)
          throw ParseError(line.number, "unexpected tokens after 'end'");
        closed = true;
        ++i;
        break;
      }
      if (line.tokens.size() != 1)
        throw ParseError(line.number, "expected one tuple per line");
      tuples.push_back(line.tokens[0]);
      ++i;
    }
    if (!closed) throw ParseError(head.number, "relation without 'end'");
    try {
      relations.emplace_back(arity, tuples, name);
    } catch (const std::invalid_argument& e) {
      throw ParseError(head.number, e.what());
    }
  }
  if (relations.empty()) throw ParseError(1, "no relations in language file");
  return Language(std::move(relations));
}

std::string serialize(const Language& lang) {
  std::ostringstream out;
  for (const Relation& r : lang.relations()) {
    out << "relation " << r.name() << " " << r.arity() << "\n";
    for (uint32_t t : r.members()) {
      for (int b = r.arity() - 1; b >= 0; --b) out << ((t >> b) & 1);
      out << "\n";
    }
    out << "end\n";
  }
  return out.str();
}

DcspInstance parse_dcsp(const std::string& text) {
  DcspInstance inst;
  std::vector<Relation> relations;
  const std::vector<Line> lines = tokenize(text);
  size_t i = 0;
  // Leading language section, then variables, then constraints.
  while (i < lines.size() && lines[i].tokens[0] == "relation") {
    const Line& head = lines[i];
    if (head.tokens.size() != 3)
      throw ParseError(head.number, "expected 'relation <name> <arity>'");
    const int arity = parse_int(head, head.tokens[2]);
    std::vector<std::string> tuples;
    ++i;
    bool closed = false;
    while (i < lines.size()) {
      const Line& line = lines[i];
      if (line.tokens[0] == "end") {
        closed = true;
        ++i;
        break;
      }
      if (line.tokens.size() != 1)
        throw ParseError(line.number, "expected one tuple per line");
      tuples.push_back(line.tokens[0]);
      ++i;
    }
    if (!closed) throw ParseError(head.number, "relation without 'end'");
    try {
      relations.emplace_back(arity, tuples, head.tokens[1]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(head.number, e.what());
    }
  }
  if (relations.empty()) throw ParseError(1, "instance has no relations");
  try {
    inst.language = Language(std::move(relations));
  } catch (const std::invalid_argument& e) {
    throw ParseError(1, e.what());
  }

  for (; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string& kw = line.tokens[0];
    if (kw == "var") {
      if (line.tokens.size() != 2)
        throw ParseError(line.number, "expected 'var <name>'");
      inst.variables.push_back(line.tokens[1]);
    } else if (kw == "constraint" || kw == "undeletable") {
      if (line.tokens.size() < 2)
        throw ParseError(line.number, "expected relation name and scope");
      ConstraintInstance c;
      c.relation = line.tokens[1];
      c.undeletable = (kw == "undeletable");
      for (size_t j = 2; j < line.tokens.size(); ++j) {
        const int v = inst.var_index(line.tokens[j]);
        if (v < 0)
          throw ParseError(line.number,
                           "undeclared variable '" + line.tokens[j] + "'");
        c.scope.push_back(v);
      }
      inst.constraints.push_back(std::move(c));
    } else {
      throw ParseError(line.number, "unexpected keyword '" + kw + "'");
    }
  }
  try {
    inst.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(1, e.what());
  }
  return inst;
}

std::string serialize(const DcspInstance& inst) {
  std::ostringstream out;
  out << serialize(inst.language);
  for (const std::string& v : inst.variables) out << "var " << v << "\n";
  for (const ConstraintInstance& c : inst.constraints) {
    out << (c.undeletable ? "undeletable " : "constraint ") << c.relation;
    for (int v : c.scope) out << " " << inst.variables[v];
    out << "\n";
  }
  return out.str();
}

EvenOddSetInstance parse_oddset(const std::string& text) {
  EvenOddSetInstance inst;
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty() || lines[0].tokens[0] != "universe" ||
      lines[0].tokens.size() != 2)
    throw ParseError(lines.empty() ? 1 : lines[0].number,
                     "expected 'universe <n>' first");
  inst.universe = parse_int(lines[0], lines[0].tokens[1]);
  for (size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "set" || line.tokens.size() < 2)
      throw ParseError(line.number, "expected 'set odd|even e1 e2 ...'");
    ParitySet s;
    if (line.tokens[1] == "odd")
      s.target = ParityTarget::Odd;
    else if (line.tokens[1] == "even")
      s.target = ParityTarget::Even;
    else
      throw ParseError(line.number, "parity must be 'odd' or 'even'");
    for (size_t j = 2; j < line.tokens.size(); ++j)
      s.elements.push_back(parse_int(line, line.tokens[j]));
    std::sort(s.elements.begin(), s.elements.end());
    inst.sets.push_back(std::move(s));
  }
  try {
    inst.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(1, e.what());
  }
  return inst;
}

std::string serialize(const EvenOddSetInstance& inst) {
  std::ostringstream out;
  out << "universe " << inst.universe << "\n";
  for (const ParitySet& s : inst.sets) {
    out << "set " << (s.target == ParityTarget::Odd ? "odd" : "even");
    for (int e : s.elements) out << " " << e;
    out << "\n";
  }
  return out.str();
}

NcInstance parse_nc(const std::string& text) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty() || lines[0].tokens[0] != "matrix" ||
      lines[0].tokens.size() != 3)
    throw ParseError(lines.empty() ? 1 : lines[0].number,
                     "expected 'matrix <m> <n>' first");
  const int m = parse_int(lines[0], lines[0].tokens[1]);
  const int n = parse_int(lines[0], lines[0].tokens[2]);
  if (m < 0 || n < 1) throw ParseError(lines[0].number, "bad dimensions");
  if (int(lines.size()) != m + 3)
    throw ParseError(lines[0].number, "expected " + std::to_string(m) +
                                          " rows, 'target' and one vector");
  NcInstance inst;
  inst.a = Gf2Matrix(m, n);
  for (int r = 0; r < m; ++r) {
    const Line& line = lines[r + 1];
    if (line.tokens.size() != 1 || int(line.tokens[0].size()) != n)
      throw ParseError(line.number, "expected an n-character bit row");
    for (int c = 0; c < n; ++c) {
      const char ch = line.tokens[0][c];
      if (ch != '0' && ch != '1')
        throw ParseError(line.number, "rows must be bit strings");
      inst.a.set(r, c, ch == '1');
    }
  }
  const Line& tgt = lines[m + 1];
  if (tgt.tokens.size() != 1 || tgt.tokens[0] != "target")
    throw ParseError(tgt.number, "expected 'target'");
  const Line& vec = lines[m + 2];
  if (vec.tokens.size() != 1 || int(vec.tokens[0].size()) != m)
    throw ParseError(vec.number, "expected an m-character bit string");
  try {
    inst.b = Gf2Vector::from_string(vec.tokens[0]);
  } catch (const std::invalid_argument& e) {
    throw ParseError(vec.number, e.what());
  }
  return inst;
}

std::string serialize(const NcInstance& inst) {
  std::ostringstream out;
  out << "matrix " << inst.a.rows() << " " << inst.a.cols() << "\n";
  for (int r = 0; r < inst.a.rows(); ++r) {
    for (int c = 0; c < inst.a.cols(); ++c) out << (inst.a.get(r, c) ? '1' : '0');
    out << "\n";
  }
  out << "target\n" << inst.b.to_string() << "\n";
  return out.str();
}

MonotoneCircuit parse_circuit(const std::string& text) {
  MonotoneCircuit circuit;
  std::string output_id;
  int output_line = 0;
  auto index_of = [&](const Line& line, const std::string& id) {
    for (size_t i = 0; i < circuit.gates.size(); ++i)
      if (circuit.gates[i].id == id) return int(i);
    throw ParseError(line.number, "unknown gate '" + id + "'");
  };
  for (const Line& line : tokenize(text)) {
    const std::string& kw = line.tokens[0];
    if (kw == "input") {
      if (line.tokens.size() != 2)
        throw ParseError(line.number, "expected 'input <id>'");
      circuit.gates.push_back({line.tokens[1], GateKind::Input, -1, -1});
    } else if (kw == "and" || kw == "or") {
      if (line.tokens.size() != 4)
        throw ParseError(line.number, "expected '" + kw + " <id> <a> <b>'");
      Gate g;
      g.id = line.tokens[1];
      g.kind = kw == "and" ? GateKind::And : GateKind::Or;
      g.left = index_of(line, line.tokens[2]);
      g.right = index_of(line, line.tokens[3]);
      circuit.gates.push_back(std::move(g));
    } else if (kw == "output") {
      if (line.tokens.size() != 2)
        throw ParseError(line.number, "expected 'output <id>'");
      output_id = line.tokens[1];
      output_line = line.number;
    } else {
      throw ParseError(line.number, "unexpected keyword '" + kw + "'");
    }
  }
  if (output_id.empty()) throw ParseError(1, "missing 'output'");
  for (size_t i = 0; i < circuit.gates.size(); ++i)
    if (circuit.gates[i].id == output_id) circuit.output = int(i);
  if (circuit.output < 0)
    throw ParseError(output_line, "unknown output gate '" + output_id + "'");
  try {
    circuit.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(1, e.what());
  }
  return circuit;
}

std::string serialize(const MonotoneCircuit& circuit) {
  std::ostringstream out;
  for (const Gate& g : circuit.gates) {
    switch (g.kind) {
      case GateKind::Input: out << "input " << g.id << "\n"; break;
      case GateKind::And:
        out << "and " << g.id << " " << circuit.gates[g.left].id << " "
            << circuit.gates[g.right].id << "\n";
        break;
      case GateKind::Or:
        out << "or " << g.id << " " << circuit.gates[g.left].id << " "
            << circuit.gates[g.right].id << "\n";
        break;
    }
  }
  out << "output " << circuit.gates[circuit.output].id << "\n";
  return out.str();
}

ColoredGraph parse_colored_graph(const std::string& text) {
  ColoredGraph g;
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty() || lines[0].tokens[0] != "classes" ||
      lines[0].tokens.size() != 2)
    throw ParseError(lines.empty() ? 1 : lines[0].number,
                     "expected 'classes <k>' first");
  g.num_classes = parse_int(lines[0], lines[0].tokens[1]);
  auto vertex_of = [&](const Line& line, const std::string& id) {
    for (size_t i = 0; i < g.vertices.size(); ++i)
      if (g.vertices[i] == id) return int(i);
    throw ParseError(line.number, "unknown vertex '" + id + "'");
  };
  for (size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] == "vertex") {
      if (line.tokens.size() != 3)
        throw ParseError(line.number, "expected 'vertex <name> <class>'");
      g.vertices.push_back(line.tokens[1]);
      g.vertex_class.push_back(parse_int(line, line.tokens[2]));
    } else if (line.tokens[0] == "edge") {
      if (line.tokens.size() != 3)
        throw ParseError(line.number, "expected 'edge <u> <v>'");
      g.edges.emplace_back(vertex_of(line, line.tokens[1]),
                           vertex_of(line, line.tokens[2]));
    } else {
      throw ParseError(line.number, "unexpected keyword '" + line.tokens[0] + "'");
    }
  }
  try {
    g.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(1, e.what());
  }
  return g;
}

std::string serialize(const ColoredGraph& graph) {
  std::ostringstream out;
  out << "classes " << graph.num_classes << "\n";
  for (size_t i = 0; i < graph.vertices.size(); ++i)
    out << "vertex " << graph.vertices[i] << " " << graph.vertex_class[i] << "\n";
  for (const auto& [u, v] : graph.edges)
    out << "edge " << graph.vertices[u] << " " << graph.vertices[v] << "\n";
  return out.str();
}

Cnf3 parse_cnf(const std::string& text) {
  Cnf3 cnf;
  int promised_clauses = -1;
  bool seen_header = false;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  std::vector<int> current;
  while (std::getline(in, raw)) {
    ++number;
    if (raw.empty() || raw[0] == 'c') continue;
    std::istringstream ls(raw);
    if (!seen_header) {
      std::string p, kind;
      if (!(ls >> p >> kind >> cnf.num_vars >> promised_clauses) || p != "p" ||
          kind != "cnf")
        throw ParseError(number, "expected 'p cnf <vars> <clauses>'");
      seen_header = true;
      continue;
    }
    int lit;
    while (ls >> lit) {
      if (lit == 0) {
        if (current.empty()) throw ParseError(number, "empty clause");
        cnf.clauses.push_back(current);
        current.clear();
      } else {
        current.push_back(lit);
      }
    }
  }
  if (!seen_header) throw ParseError(1, "missing DIMACS header");
  if (!current.empty()) throw ParseError(number, "clause without terminating 0");
  if (promised_clauses >= 0 && int(cnf.clauses.size()) != promised_clauses)
    throw ParseError(1, "clause count does not match header");
  try {
    cnf.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(1, e.what());
  }
  return cnf;
}

std::string serialize(const Cnf3& cnf) {
  std::ostringstream out;
  out << "p cnf " << cnf.num_vars << " " << cnf.clauses.size() << "\n";
  for (const std::vector<int>& cl : cnf.clauses) {
    for (int lit : cl) out << lit << " ";
    out << "0\n";
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

}  // namespace mincsp
