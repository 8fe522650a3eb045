#include "c2p/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

#include "c2p/error.hpp"

namespace c2p {
namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> fields;
};

class LineReader {
 public:
  LineReader(std::istream& in, bool dimacs_comments) : in_(in), dimacs_(dimacs_comments) {}

  bool next(Line& line) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++number_;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      std::istringstream split(raw);
      line.fields.clear();
      for (std::string tok; split >> tok;) line.fields.push_back(tok);
      if (line.fields.empty()) continue;
      if (dimacs_ && line.fields[0] == "c") continue;
      line.number = number_;
      return true;
    }
    return false;
  }

 private:
  std::istream& in_;
  bool dimacs_;
  std::size_t number_ = 0;
};

[[noreturn]] void fail(const Line& line, const std::string& what) {
  throw Error(ErrorCode::Parse, "line " + std::to_string(line.number) + ": " + what);
}

std::uint64_t parse_uint(const Line& line, const std::string& tok) {
  std::uint64_t value = 0;
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc{} || ptr != end) fail(line, "expected a non-negative integer, got '" + tok + "'");
  return value;
}

std::uint32_t parse_u32(const Line& line, const std::string& tok) {
  const std::uint64_t v = parse_uint(line, tok);
  if (v > 0xffffffffu) fail(line, "value out of range: " + tok);
  return static_cast<std::uint32_t>(v);
}

std::int64_t parse_int(const Line& line, const std::string& tok) {
  std::int64_t value = 0;
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc{} || ptr != end) fail(line, "expected an integer, got '" + tok + "'");
  return value;
}

void expect_fields(const Line& line, std::size_t count) {
  if (line.fields.size() != count) {
    fail(line, "'" + line.fields[0] + "' takes " + std::to_string(count - 1) + " fields, got " +
                   std::to_string(line.fields.size() - 1));
  }
}

void expect_header(LineReader& reader, std::string_view magic) {
  Line line;
  if (!reader.next(line)) throw Error(ErrorCode::Parse, "empty input, expected '" + std::string(magic) + " 1'");
  if (line.fields.size() != 2 || line.fields[0] != magic) {
    fail(line, "expected header '" + std::string(magic) + " 1'");
  }
  if (line.fields[1] != "1") fail(line, "unsupported format version " + line.fields[1]);
}

void write_handle(std::ostream& out, const TriHandle& t) {
  out << ' ' << t.part << ' ' << t.base << ' ' << t.left << ' ' << t.right;
}

TriHandle read_handle(const Line& line, std::size_t first) {
  return TriHandle{parse_u32(line, line.fields[first]), parse_u32(line, line.fields[first + 1]),
                   parse_u32(line, line.fields[first + 2]), parse_u32(line, line.fields[first + 3])};
}

}  // namespace

// ---------------------------------------------------------------------------
// Instance

Instance parse_instance(std::istream& in) {
  LineReader reader(in, false);
  expect_header(reader, "c2p");
  std::optional<std::size_t> n;
  std::vector<std::vector<VertexId>> parts;
  std::vector<Edge> links;
  std::vector<std::pair<Edge, Edge>> crossings;
  for (Line line; reader.next(line);) {
    const std::string& kind = line.fields[0];
    if (kind == "n") {
      expect_fields(line, 2);
      if (n) fail(line, "vertex count given twice");
      n = parse_uint(line, line.fields[1]);
      continue;
    }
    if (!n) fail(line, "'" + kind + "' before the vertex count line");
    if (kind == "part") {
      if (line.fields.size() < 2) fail(line, "part without vertices");
      std::vector<VertexId> part;
      for (std::size_t i = 1; i < line.fields.size(); ++i) part.push_back(parse_u32(line, line.fields[i]));
      parts.push_back(std::move(part));
    } else if (kind == "link") {
      expect_fields(line, 3);
      links.push_back(Edge{parse_u32(line, line.fields[1]), parse_u32(line, line.fields[2])});
    } else if (kind == "cross") {
      expect_fields(line, 5);
      crossings.emplace_back(Edge{parse_u32(line, line.fields[1]), parse_u32(line, line.fields[2])},
                             Edge{parse_u32(line, line.fields[3]), parse_u32(line, line.fields[4])});
    } else {
      fail(line, "unknown directive '" + kind + "'");
    }
  }
  if (!n) throw Error(ErrorCode::Parse, "missing vertex count line");
  return assemble_instance(*n, std::move(parts), links, crossings);
}

void write_instance(std::ostream& out, const Instance& inst) {
  out << "c2p 1\n";
  out << "n " << inst.vertex_count() << '\n';
  for (const auto& part : inst.parts()) {
    out << "part";
    for (VertexId v : part) out << ' ' << v;
    out << '\n';
  }
  for (EdgeId e = 0; e < inst.edge_count(); ++e) {
    if (inst.classify(e).kind == EdgeKind::Link) {
      out << "link " << inst.edge(e).u << ' ' << inst.edge(e).v << '\n';
    }
  }
  for (const CrossingPair& c : inst.crossings()) {
    const Edge& a = inst.edge(c.first);
    const Edge& b = inst.edge(c.second);
    out << "cross " << a.u << ' ' << a.v << ' ' << b.u << ' ' << b.v << '\n';
  }
}

// ---------------------------------------------------------------------------
// Solution

Solution parse_solution(std::istream& in) {
  LineReader reader(in, false);
  expect_header(reader, "sol");
  Solution sol;
  for (Line line; reader.next(line);) {
    if (line.fields[0] != "path") fail(line, "unknown directive '" + line.fields[0] + "'");
    if (line.fields.size() < 3) fail(line, "path needs a part index and at least one vertex");
    PathChoice choice{parse_u32(line, line.fields[1]), {}};
    for (std::size_t i = 2; i < line.fields.size(); ++i) choice.order.push_back(parse_u32(line, line.fields[i]));
    sol.paths.push_back(std::move(choice));
  }
  return sol;
}

void write_solution(std::ostream& out, const Solution& sol) {
  out << "sol 1\n";
  for (const PathChoice& c : sol.paths) {
    out << "path " << c.part;
    for (VertexId v : c.order) out << ' ' << v;
    out << '\n';
  }
}

// ---------------------------------------------------------------------------
// Formula

Formula parse_formula(std::istream& in) {
  LineReader reader(in, true);
  Line line;
  if (!reader.next(line)) throw Error(ErrorCode::Parse, "empty formula file");
  if (line.fields.size() != 4 || line.fields[0] != "p" || line.fields[1] != "pp13") {
    fail(line, "expected 'p pp13 <nvars> <nclauses>'");
  }
  Formula f;
  f.nvars = parse_uint(line, line.fields[2]);
  const std::uint64_t expected = parse_uint(line, line.fields[3]);
  while (reader.next(line)) {
    if (line.fields.size() != 4 || line.fields[3] != "0") fail(line, "expected '<x> <y> <z> 0'");
    std::array<std::uint32_t, 3> clause{};
    for (std::size_t k = 0; k < 3; ++k) clause[k] = parse_u32(line, line.fields[k]);
    f.clauses.push_back(clause);
  }
  if (f.clauses.size() != expected) {
    throw Error(ErrorCode::Parse, "header announces " + std::to_string(expected) +
                                      " clauses, file has " + std::to_string(f.clauses.size()));
  }
  validate_formula(f);
  return f;
}

void write_formula(std::ostream& out, const Formula& f) {
  out << "p pp13 " << f.nvars << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) out << c[0] << ' ' << c[1] << ' ' << c[2] << " 0\n";
}

// ---------------------------------------------------------------------------
// Witness

ReductionWitness parse_witness(std::istream& in) {
  LineReader reader(in, false);
  expect_header(reader, "witness");
  ReductionWitness w;
  bool have_formula = false;
  std::size_t nclauses = 0;
  auto index = [](const Line& line, const std::string& tok, std::size_t limit, const char* what) {
    const std::uint64_t v = parse_uint(line, tok);
    if (v < 1 || v > limit) fail(line, std::string(what) + " index " + tok + " out of range");
    return static_cast<std::size_t>(v - 1);
  };
  auto sequential = [](const Line& line, std::size_t given, std::size_t expected) {
    if (given != expected) fail(line, "handles must be listed in order");
  };

  for (Line line; reader.next(line);) {
    if (line.fields[0] != "wit" || line.fields.size() < 2) fail(line, "expected a 'wit' line");
    const std::string& kind = line.fields[1];
    if (kind == "formula") {
      expect_fields(line, 5);
      if (have_formula) fail(line, "formula line given twice");
      have_formula = true;
      w.nvars = parse_uint(line, line.fields[2]);
      nclauses = parse_uint(line, line.fields[3]);
      w.chain_length = parse_uint(line, line.fields[4]);
      w.variables.resize(w.nvars);
      continue;
    }
    if (!have_formula) fail(line, "'wit " + kind + "' before 'wit formula'");
    if (kind == "ring" || kind == "tau") {
      expect_fields(line, 8);
      const std::size_t var = index(line, line.fields[2], w.nvars, "variable");
      auto& list = kind == "ring" ? w.variables[var].ring : w.variables[var].tau;
      sequential(line, parse_uint(line, line.fields[3]), list.size() + 1);
      list.push_back(read_handle(line, 4));
    } else if (kind == "clause") {
      expect_fields(line, 14);
      sequential(line, parse_uint(line, line.fields[2]), w.clauses.size() + 1);
      if (w.clauses.size() == nclauses) fail(line, "more clauses than announced");
      ClauseWitness cw;
      cw.part = parse_u32(line, line.fields[3]);
      cw.center = parse_u32(line, line.fields[4]);
      for (std::size_t i = 0; i < 3; ++i) {
        cw.rim[i] = parse_u32(line, line.fields[5 + i]);
        cw.spokes[i] = parse_u32(line, line.fields[8 + i]);
        cw.outer[i] = parse_u32(line, line.fields[11 + i]);
      }
      w.clauses.push_back(std::move(cw));
    } else if (kind == "input") {
      expect_fields(line, 10);
      const std::size_t c = index(line, line.fields[2], w.clauses.size(), "clause");
      const std::size_t pos = index(line, line.fields[3], 3, "position");
      ClauseWitness& cw = w.clauses[c];
      cw.vars[pos] = static_cast<std::uint32_t>(index(line, line.fields[4], w.nvars, "variable") + 1);
      cw.occurrence[pos] = parse_u32(line, line.fields[5]);
      cw.inputs[pos] = read_handle(line, 6);
    } else if (kind == "chain") {
      expect_fields(line, 9);
      const std::size_t c = index(line, line.fields[2], w.clauses.size(), "clause");
      const std::size_t pos = index(line, line.fields[3], 3, "position");
      auto& chain = w.clauses[c].chains[pos];
      sequential(line, parse_uint(line, line.fields[4]), chain.size() + 1);
      chain.push_back(read_handle(line, 5));
    } else {
      fail(line, "unknown witness kind '" + kind + "'");
    }
  }
  if (!have_formula) throw Error(ErrorCode::Parse, "missing 'wit formula' line");
  if (w.clauses.size() != nclauses) {
    throw Error(ErrorCode::Parse, "witness announces " + std::to_string(nclauses) +
                                      " clauses, lists " + std::to_string(w.clauses.size()));
  }
  for (std::size_t c = 0; c < w.clauses.size(); ++c) {
    const ClauseWitness& cw = w.clauses[c];
    for (std::size_t i = 0; i < 3; ++i) {
      if (cw.vars[i] == 0 || cw.chains[i].size() != w.chain_length) {
        throw Error(ErrorCode::Parse, "clause " + std::to_string(c + 1) +
                                          " lacks an input or a complete chain");
      }
      const auto& tau = w.variables[cw.vars[i] - 1].tau;
      if (cw.occurrence[i] < 1 || cw.occurrence[i] > tau.size()) {
        throw Error(ErrorCode::Parse, "clause " + std::to_string(c + 1) +
                                          " refers to a missing tau triangle");
      }
    }
  }
  return w;
}

void write_witness(std::ostream& out, const ReductionWitness& w) {
  out << "witness 1\n";
  out << "wit formula " << w.nvars << ' ' << w.clauses.size() << ' ' << w.chain_length << '\n';
  for (std::size_t x = 0; x < w.variables.size(); ++x) {
    const VariableWitness& var = w.variables[x];
    for (std::size_t i = 0; i < var.ring.size(); ++i) {
      out << "wit ring " << x + 1 << ' ' << i + 1;
      write_handle(out, var.ring[i]);
      out << '\n';
    }
    for (std::size_t j = 0; j < var.tau.size(); ++j) {
      out << "wit tau " << x + 1 << ' ' << j + 1;
      write_handle(out, var.tau[j]);
      out << '\n';
    }
  }
  for (std::size_t c = 0; c < w.clauses.size(); ++c) {
    const ClauseWitness& cw = w.clauses[c];
    out << "wit clause " << c + 1 << ' ' << cw.part << ' ' << cw.center;
    for (VertexId v : cw.rim) out << ' ' << v;
    for (EdgeId e : cw.spokes) out << ' ' << e;
    for (EdgeId e : cw.outer) out << ' ' << e;
    out << '\n';
    for (std::size_t i = 0; i < 3; ++i) {
      out << "wit input " << c + 1 << ' ' << i + 1 << ' ' << cw.vars[i] << ' ' << cw.occurrence[i];
      write_handle(out, cw.inputs[i]);
      out << '\n';
      for (std::size_t k = 0; k < cw.chains[i].size(); ++k) {
        out << "wit chain " << c + 1 << ' ' << i + 1 << ' ' << k + 1;
        write_handle(out, cw.chains[i][k]);
        out << '\n';
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Assignment

Assignment parse_assignment(std::istream& in, std::size_t nvars) {
  LineReader reader(in, true);
  Assignment a;
  a.values.assign(nvars, false);
  std::vector<bool> seen(nvars, false);
  bool closed = false;
  for (Line line; reader.next(line);) {
    if (line.fields[0] != "v") continue;  // status lines such as 's SATISFIABLE'
    if (closed) fail(line, "values after the terminating 0");
    for (std::size_t i = 1; i < line.fields.size(); ++i) {
      const std::int64_t lit = parse_int(line, line.fields[i]);
      if (lit == 0) {
        closed = true;
        if (i + 1 != line.fields.size()) fail(line, "values after the terminating 0");
        break;
      }
      const std::uint64_t var = static_cast<std::uint64_t>(lit < 0 ? -lit : lit);
      if (var > nvars) fail(line, "variable " + std::to_string(var) + " out of range");
      if (seen[var - 1]) fail(line, "variable " + std::to_string(var) + " given twice");
      seen[var - 1] = true;
      a.values[var - 1] = lit > 0;
    }
  }
  if (!closed) throw Error(ErrorCode::Parse, "assignment lacks the terminating 0");
  for (std::size_t v = 0; v < nvars; ++v) {
    if (!seen[v]) throw Error(ErrorCode::Parse, "variable " + std::to_string(v + 1) + " has no value");
  }
  return a;
}

void write_assignment(std::ostream& out, const Assignment& a) {
  out << 'v';
  for (std::size_t v = 0; v < a.values.size(); ++v) {
    out << ' ' << (a.values[v] ? "" : "-") << v + 1;
  }
  out << " 0\n";
}

// ---------------------------------------------------------------------------

Instance instance_from_string(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

std::string to_string(const Instance& inst) {
  std::ostringstream out;
  write_instance(out, inst);
  return out.str();
}

std::string to_string(const Solution& sol) {
  std::ostringstream out;
  write_solution(out, sol);
  return out.str();
}

std::string to_string(const Formula& f) {
  std::ostringstream out;
  write_formula(out, f);
  return out.str();
}

std::string to_string(const ReductionWitness& w) {
  std::ostringstream out;
  write_witness(out, w);
  return out.str();
}

}  // namespace c2p
