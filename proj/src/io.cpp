#include "nonblock/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <vector>

#include "nonblock/error.hpp"

namespace nonblock {
namespace {

[[noreturn]] void fail(const std::string& source, size_t line,
                       const std::string& message) {
  throw Error(ErrorCode::ParseError,
              source + ":" + std::to_string(line) + ": " + message);
}

struct Line {
  size_t number;
  std::vector<std::string> tokens;
};

// Non-blank, non-comment lines split into whitespace-separated tokens,
// keeping 1-based line numbers for diagnostics.
std::vector<Line> tokenize(const std::string& text, char comment) {
  std::vector<Line> lines;
  std::istringstream stream(text);
  std::string raw;
  size_t number = 0;
  while (std::getline(stream, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::istringstream split(raw);
    std::vector<std::string> tokens;
    std::string token;
    while (split >> token) tokens.push_back(token);
    if (tokens.empty() || tokens[0][0] == comment) continue;
    lines.push_back({number, std::move(tokens)});
  }
  return lines;
}

uint32_t parse_u32(const std::string& token, const std::string& source,
                   size_t line) {
  if (token.empty()) fail(source, line, "expected a number");
  uint64_t value = 0;
  for (char ch : token) {
    if (ch < '0' || ch > '9') {
      fail(source, line, "expected a number, got '" + token + "'");
    }
    value = value * 10 + static_cast<uint64_t>(ch - '0');
    if (value > UINT32_MAX) {
      fail(source, line, "number out of range: '" + token + "'");
    }
  }
  return static_cast<uint32_t>(value);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  return out;
}

}  // namespace

AutomatonData parse_aut(const std::string& text, const std::string& source) {
  AutomatonData data;
  bool saw_states = false, saw_alphabet = false, saw_initial = false,
       saw_marked = false;

  for (const Line& line : tokenize(text, '#')) {
    const std::string& keyword = line.tokens[0];
    if (keyword == "states") {
      if (saw_states) fail(source, line.number, "duplicate 'states' line");
      if (line.tokens.size() != 2) {
        fail(source, line.number, "usage: states N");
      }
      data.num_states = parse_u32(line.tokens[1], source, line.number);
      saw_states = true;
    } else if (keyword == "alphabet") {
      if (saw_alphabet) fail(source, line.number, "duplicate 'alphabet' line");
      data.alphabet.assign(line.tokens.begin() + 1, line.tokens.end());
      saw_alphabet = true;
    } else if (keyword == "initial") {
      if (saw_initial) fail(source, line.number, "duplicate 'initial' line");
      for (size_t i = 1; i < line.tokens.size(); ++i) {
        data.initial.push_back(parse_u32(line.tokens[i], source, line.number));
      }
      saw_initial = true;
    } else if (keyword == "marked") {
      if (saw_marked) fail(source, line.number, "duplicate 'marked' line");
      for (size_t i = 1; i < line.tokens.size(); ++i) {
        data.marked.push_back(parse_u32(line.tokens[i], source, line.number));
      }
      saw_marked = true;
    } else if (keyword == "trans") {
      if (line.tokens.size() != 4) {
        fail(source, line.number, "usage: trans FROM EVENT TO");
      }
      data.transitions.emplace_back(
          parse_u32(line.tokens[1], source, line.number), line.tokens[2],
          parse_u32(line.tokens[3], source, line.number));
    } else {
      fail(source, line.number, "unknown directive '" + keyword + "'");
    }
  }
  if (!saw_states) {
    throw Error(ErrorCode::ParseError, source + ": missing 'states' line");
  }
  return data;
}

AutomatonData load_aut(const std::string& path) {
  return parse_aut(read_file(path), path);
}

std::string serialize_aut(const Automaton& a) {
  std::ostringstream out;
  out << "states " << a.num_states() << "\n";
  out << "alphabet";
  for (const std::string& label : a.alphabet().labels()) out << ' ' << label;
  out << "\ninitial";
  for (StateId q : a.initial()) out << ' ' << q;
  out << "\nmarked";
  for (StateId q : a.marked()) out << ' ' << q;
  out << "\n";
  for (const Transition& t : a.transitions()) {
    out << "trans " << t.from << ' ' << a.alphabet().label(t.event) << ' '
        << t.to << "\n";
  }
  return out.str();
}

std::string to_dot(const Automaton& a, const std::string& name) {
  std::ostringstream out;
  out << "digraph \"" << dot_escape(name) << "\" {\n";
  out << "  rankdir=LR;\n";
  for (size_t i = 0; i < a.initial().size(); ++i) {
    out << "  entry" << i << " [shape=point, width=0.05];\n";
  }
  for (StateId q = 0; q < a.num_states(); ++q) {
    out << "  q" << q << " [label=\"" << dot_escape(a.state_name(q))
        << "\", shape=" << (a.is_marked(q) ? "doublecircle" : "circle")
        << "];\n";
  }
  for (size_t i = 0; i < a.initial().size(); ++i) {
    out << "  entry" << i << " -> q" << a.initial()[i] << ";\n";
  }
  for (const Transition& t : a.transitions()) {
    out << "  q" << t.from << " -> q" << t.to << " [label=\""
        << dot_escape(a.alphabet().label(t.event)) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

Graph parse_graph(const std::string& text, const std::string& source) {
  Graph g;
  bool saw_n = false, saw_s = false, saw_t = false;

  for (const Line& line : tokenize(text, '#')) {
    const std::string& keyword = line.tokens[0];
    if (keyword == "n") {
      if (saw_n) fail(source, line.number, "duplicate 'n' line");
      if (line.tokens.size() != 2) fail(source, line.number, "usage: n COUNT");
      g.nodes = parse_u32(line.tokens[1], source, line.number);
      if (g.nodes == 0) fail(source, line.number, "graph needs a node");
      saw_n = true;
      continue;
    }
    if (!saw_n) fail(source, line.number, "the 'n' line must come first");
    if (keyword == "e") {
      if (line.tokens.size() != 3) fail(source, line.number, "usage: e U V");
      uint32_t u = parse_u32(line.tokens[1], source, line.number);
      uint32_t v = parse_u32(line.tokens[2], source, line.number);
      if (u >= g.nodes || v >= g.nodes) {
        fail(source, line.number, "edge endpoint out of range");
      }
      g.edges.emplace_back(u, v);
    } else if (keyword == "s" || keyword == "t") {
      bool& seen = keyword == "s" ? saw_s : saw_t;
      if (seen) fail(source, line.number, "duplicate '" + keyword + "' line");
      if (line.tokens.size() != 2) {
        fail(source, line.number, "usage: " + keyword + " ID");
      }
      uint32_t id = parse_u32(line.tokens[1], source, line.number);
      if (id >= g.nodes) fail(source, line.number, "node id out of range");
      (keyword == "s" ? g.source : g.target) = id;
      seen = true;
    } else {
      fail(source, line.number, "unknown directive '" + keyword + "'");
    }
  }
  if (!saw_n || !saw_s || !saw_t) {
    throw Error(ErrorCode::ParseError,
                source + ": graph needs 'n', 's' and 't' lines");
  }
  return g;
}

Graph load_graph(const std::string& path) {
  return parse_graph(read_file(path), path);
}

Cnf3 parse_cnf3(const std::string& text, const std::string& source) {
  Cnf3 f;
  bool saw_header = false;
  size_t declared_clauses = 0;
  std::vector<Literal> pending;

  for (const Line& line : tokenize(text, 'c')) {
    if (line.tokens[0] == "p") {
      if (saw_header) fail(source, line.number, "duplicate 'p' line");
      if (line.tokens.size() != 4 || line.tokens[1] != "cnf") {
        fail(source, line.number, "usage: p cnf VARS CLAUSES");
      }
      f.num_vars = parse_u32(line.tokens[2], source, line.number);
      if (f.num_vars == 0) {
        fail(source, line.number, "formula needs at least one variable");
      }
      declared_clauses = parse_u32(line.tokens[3], source, line.number);
      saw_header = true;
      continue;
    }
    if (!saw_header) {
      fail(source, line.number, "clause before the 'p cnf' header");
    }
    for (const std::string& token : line.tokens) {
      bool negated = token.size() > 1 && token[0] == '-';
      uint32_t magnitude = parse_u32(negated ? token.substr(1) : token, source,
                                     line.number);
      if (magnitude == 0) {
        if (pending.size() != 3) {
          fail(source, line.number,
               "clause has " + std::to_string(pending.size()) +
                   " literals, expected 3");
        }
        f.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
        continue;
      }
      if (magnitude > f.num_vars) {
        fail(source, line.number, "literal out of range: '" + token + "'");
      }
      pending.push_back(Literal{magnitude - 1, negated});
    }
  }
  if (!saw_header) {
    throw Error(ErrorCode::ParseError, source + ": missing 'p cnf' header");
  }
  if (!pending.empty()) {
    throw Error(ErrorCode::ParseError, source + ": unterminated clause");
  }
  if (f.clauses.size() != declared_clauses) {
    throw Error(ErrorCode::ParseError,
                source + ": header declares " +
                    std::to_string(declared_clauses) + " clauses, found " +
                    std::to_string(f.clauses.size()));
  }
  return f;
}

Cnf3 load_cnf3(const std::string& path) {
  return parse_cnf3(read_file(path), path);
}

}  // namespace nonblock
