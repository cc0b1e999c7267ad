#include "feasflow/io.hpp"

#include <charconv>
#include <limits>
#include <vector>

#include "feasflow/verify.hpp"

namespace feasflow {

namespace {

struct Line {
  std::size_t number;  // 1-based
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view raw = text.substr(pos, end - pos);
    ++line_no;

    Line line{line_no, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
      std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') ++i;
      if (i > start) line.tokens.push_back(raw.substr(start, i - start));
    }
    if (line.tokens.empty()) throw SyntaxError(line_no, "blank line");
    lines.push_back(std::move(line));
    pos = end + 1;
  }
  return lines;
}

Units parse_int(std::string_view token, std::size_t line) {
  Units value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec == std::errc::result_out_of_range)
    throw RangeError("line " + std::to_string(line) + ": number '" + std::string(token) +
                     "' out of range");
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw SyntaxError(line, "expected a decimal integer, got '" + std::string(token) + "'");
  return value;
}

Vertex parse_vertex(std::string_view token, std::size_t line, Vertex n) {
  const Units v = parse_int(token, line);
  if (v < 1 || v > n)
    throw RangeError("line " + std::to_string(line) + ": vertex " + std::string(token) +
                     " out of 1.." + std::to_string(n));
  return static_cast<Vertex>(v);
}

void expect_tokens(const Line& line, std::size_t count, const char* shape) {
  if (line.tokens.size() != count)
    throw SyntaxError(line.number, std::string("expected '") + shape + "'");
}

}  // namespace

Network parse_network(std::string_view text) {
  Vertex n = 0;
  std::size_t m = 0;
  bool have_problem = false;
  std::vector<Arc> arcs;
  std::vector<Units> imports;
  std::vector<char> import_seen;

  std::size_t last_line = 0;
  for (const Line& line : tokenize(text)) {
    last_line = line.number;
    const std::string_view tag = line.tokens[0];
    if (tag == "c") continue;

    if (tag == "p") {
      if (have_problem) throw SyntaxError(line.number, "duplicate problem line");
      expect_tokens(line, 4, "p feas <n> <m>");
      if (line.tokens[1] != "feas")
        throw SyntaxError(line.number, "unknown problem type '" + std::string(line.tokens[1]) + "'");
      const Units n_value = parse_int(line.tokens[2], line.number);
      const Units m_value = parse_int(line.tokens[3], line.number);
      if (n_value < 1 || n_value > std::numeric_limits<Vertex>::max())
        throw RangeError("line " + std::to_string(line.number) + ": vertex count out of range");
      if (m_value < 0 || m_value > (Units{1} << 31))
        throw RangeError("line " + std::to_string(line.number) + ": arc count out of range");
      n = static_cast<Vertex>(n_value);
      m = static_cast<std::size_t>(m_value);
      imports.assign(static_cast<std::size_t>(n) + 1, 0);
      import_seen.assign(static_cast<std::size_t>(n) + 1, 0);
      arcs.reserve(m);
      have_problem = true;
      continue;
    }

    if (!have_problem)
      throw SyntaxError(line.number, "'" + std::string(tag) + "' line before the problem line");

    if (tag == "n") {
      expect_tokens(line, 3, "n <vertex> <import>");
      const Vertex v = parse_vertex(line.tokens[1], line.number, n);
      const Units b = parse_int(line.tokens[2], line.number);
      if (b > max_magnitude || b < -max_magnitude)
        throw RangeError("line " + std::to_string(line.number) + ": import magnitude exceeds 2^62");
      if (import_seen[static_cast<std::size_t>(v)]) throw DuplicateImport(line.number, v);
      import_seen[static_cast<std::size_t>(v)] = 1;
      imports[static_cast<std::size_t>(v)] = b;
    } else if (tag == "a") {
      expect_tokens(line, 4, "a <tail> <head> <capacity>");
      if (arcs.size() == m)
        throw SyntaxError(line.number, "more arc lines than the declared " + std::to_string(m));
      const Vertex tail = parse_vertex(line.tokens[1], line.number, n);
      const Vertex head = parse_vertex(line.tokens[2], line.number, n);
      const Units capacity = parse_int(line.tokens[3], line.number);
      if (capacity < 0)
        throw RangeError("line " + std::to_string(line.number) + ": negative capacity");
      if (capacity > max_magnitude)
        throw RangeError("line " + std::to_string(line.number) + ": capacity exceeds 2^62");
      arcs.push_back({tail, head, capacity});
    } else {
      throw SyntaxError(line.number, "unknown line type '" + std::string(tag) + "'");
    }
  }

  if (!have_problem) throw SyntaxError(last_line, "missing problem line");
  if (arcs.size() != m)
    throw SyntaxError(last_line, "declared " + std::to_string(m) + " arcs but found " +
                                     std::to_string(arcs.size()));
  return Network(n, std::move(arcs), std::move(imports));
}

std::string serialize_network(const Network& net) {
  std::string out;
  out += "p feas " + std::to_string(net.vertex_count()) + ' ' + std::to_string(net.arc_count()) + '\n';
  for (Vertex v = 1; v <= net.vertex_count(); ++v)
    if (net.import(v) != 0)
      out += "n " + std::to_string(v) + ' ' + std::to_string(net.import(v)) + '\n';
  for (const Arc& a : net.arcs())
    out += "a " + std::to_string(a.tail) + ' ' + std::to_string(a.head) + ' ' +
           std::to_string(a.capacity) + '\n';
  return out;
}

Flow parse_flow(std::string_view text, const Network& net) {
  bool have_status = false;
  std::size_t count = 0;
  Flow flow{std::vector<Units>(net.arc_count(), 0)};

  std::size_t last_line = 0;
  for (const Line& line : tokenize(text)) {
    last_line = line.number;
    const std::string_view tag = line.tokens[0];
    if (tag == "c") continue;

    if (tag == "s") {
      if (have_status) throw SyntaxError(line.number, "duplicate status line");
      expect_tokens(line, 2, "s feasible|infeasible");
      if (line.tokens[1] != "feasible" && line.tokens[1] != "infeasible")
        throw SyntaxError(line.number, "unknown status '" + std::string(line.tokens[1]) + "'");
      have_status = true;
    } else if (tag == "f") {
      if (!have_status) throw SyntaxError(line.number, "flow line before the status line");
      expect_tokens(line, 5, "f <arc-index> <tail> <head> <value>");
      if (count == net.arc_count())
        throw SyntaxError(line.number, "more flow lines than the network has arcs");
      const Units index = parse_int(line.tokens[1], line.number);
      if (index != static_cast<Units>(count) + 1)
        throw SyntaxError(line.number, "flow lines must cover arcs 1.." +
                                           std::to_string(net.arc_count()) + " in order");
      const Arc& arc = net.arcs()[count];
      if (parse_int(line.tokens[2], line.number) != arc.tail ||
          parse_int(line.tokens[3], line.number) != arc.head)
        throw SyntaxError(line.number, "arc endpoints disagree with the network");
      const Units value = parse_int(line.tokens[4], line.number);
      if (value > max_magnitude || value < -max_magnitude)
        throw RangeError("line " + std::to_string(line.number) + ": flow magnitude exceeds 2^62");
      flow.values[count] = value;
      ++count;
    } else {
      throw SyntaxError(line.number, "unknown line type '" + std::string(tag) + "'");
    }
  }

  if (!have_status) throw SyntaxError(last_line, "missing status line");
  if (count != net.arc_count())
    throw SyntaxError(last_line, "expected " + std::to_string(net.arc_count()) +
                                     " flow lines, found " + std::to_string(count));
  return flow;
}

std::string serialize_flow(const Network& net, const Flow& flow) {
  const VerifyReport report = verify_flow(net, flow);  // also checks lengths
  std::string out = report.feasible ? "s feasible\n" : "s infeasible\n";
  for (std::size_t i = 0; i < net.arc_count(); ++i) {
    const Arc& a = net.arcs()[i];
    out += "f " + std::to_string(i + 1) + ' ' + std::to_string(a.tail) + ' ' +
           std::to_string(a.head) + ' ' + std::to_string(flow.values[i]) + '\n';
  }
  return out;
}

}  // namespace feasflow
