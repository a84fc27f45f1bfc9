#include "jetfront/front_io.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace jetfront {

namespace {

struct Line {
  int number;
  std::string text;
  std::vector<std::string> tokens;
};

std::vector<Line> split_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int no = 0;
  while (std::getline(in, raw)) {
    ++no;
    std::string body = raw.substr(0, raw.find('#'));
    std::istringstream ls(body);
    Line ln{no, raw, {}};
    std::string tok;
    while (ls >> tok) ln.tokens.push_back(tok);
    if (!ln.tokens.empty()) out.push_back(std::move(ln));
  }
  return out;
}

int column_of(const Line& ln, size_t token_index) {
  // best-effort column of the token start, 1-based
  size_t at = 0;
  for (size_t t = 0; t <= token_index && t < ln.tokens.size(); ++t) {
    at = ln.text.find(ln.tokens[t], at);
    if (at == std::string::npos) return 1;
    if (t == token_index) return static_cast<int>(at) + 1;
    at += ln.tokens[t].size();
  }
  return 1;
}

int parse_int(const Line& ln, size_t tok, int min_value, const std::string& what) {
  const std::string& s = ln.tokens[tok];
  size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw ParseError(ln.number, column_of(ln, tok), what + " must be an integer");
  }
  if (used != s.size())
    throw ParseError(ln.number, column_of(ln, tok), what + " must be an integer");
  if (v < min_value)
    throw ParseError(ln.number, column_of(ln, tok),
                     what + " must be >= " + std::to_string(min_value));
  return v;
}

}  // namespace

FrontDiagram parse_front(const std::string& text) {
  std::vector<Line> lines = split_lines(text);
  size_t at = 0;
  auto need = [&](const std::string& what) -> const Line& {
    if (at >= lines.size()) throw ParseError(lines.empty() ? 1 : lines.back().number, 1,
                                             "unexpected end of file, expected " + what);
    return lines[at];
  };
  {
    const Line& ln = need("header 'front v1'");
    if (ln.tokens.size() != 2 || ln.tokens[0] != "front" || ln.tokens[1] != "v1")
      throw ParseError(ln.number, 1, "expected header 'front v1'");
    ++at;
  }
  FrontDiagram d;
  {
    const Line& ln = need("'strands N'");
    if (ln.tokens.size() != 2 || ln.tokens[0] != "strands")
      throw ParseError(ln.number, 1, "expected 'strands N'");
    d.base_strands = parse_int(ln, 1, 0, "strand count");
    ++at;
  }
  {
    const Line& ln = need("'events'");
    if (ln.tokens.size() != 1 || ln.tokens[0] != "events")
      throw ParseError(ln.number, 1, "expected 'events'");
    ++at;
  }
  while (at < lines.size()) {
    const Line& ln = lines[at];
    const std::string& head = ln.tokens[0];
    if (head == "orient" || head == "order") break;
    EventKind kind;
    if (head == "X") kind = EventKind::Crossing;
    else if (head == "L") kind = EventKind::LeftCusp;
    else if (head == "R") kind = EventKind::RightCusp;
    else throw ParseError(ln.number, 1, "expected an event (X/L/R), 'orient' or 'order'");
    if (ln.tokens.size() != 2) throw ParseError(ln.number, 1, "event needs one position");
    d.events.push_back({kind, parse_int(ln, 1, 1, "event position")});
    ++at;
  }
  while (at < lines.size() && lines[at].tokens[0] == "orient") {
    const Line& ln = lines[at];
    if (ln.tokens.size() != 3) throw ParseError(ln.number, 1, "expected 'orient COMPONENT +|-'");
    int comp = parse_int(ln, 1, 0, "component id");
    const std::string& s = ln.tokens[2];
    if (s != "+" && s != "-") throw ParseError(ln.number, column_of(ln, 2), "expected + or -");
    if (comp >= static_cast<int>(d.orientations.size())) d.orientations.resize(comp + 1, 1);
    d.orientations[comp] = (s == "+") ? 1 : -1;
    ++at;
  }
  if (at < lines.size() && lines[at].tokens[0] == "order") {
    const Line& ln = lines[at];
    if (ln.tokens.size() < 2) throw ParseError(ln.number, 1, "expected 'order ID...'");
    for (size_t t = 1; t < ln.tokens.size(); ++t)
      d.order.push_back(parse_int(ln, t, 0, "component id"));
    ++at;
  }
  if (at < lines.size())
    throw ParseError(lines[at].number, 1, "unexpected content after the diagram");

  // normalize the field conventions: empty orientation list means all '+',
  // otherwise one sign per component
  if (!d.orientations.empty()) {
    FrontDiagram bare{d.base_strands, d.events, {}, {}};
    if (validate(bare).ok) {
      int n = Trace::compute(bare).component_count();
      if (static_cast<int>(d.orientations.size()) < n) d.orientations.resize(n, 1);
    }
  }
  if (std::all_of(d.orientations.begin(), d.orientations.end(),
                  [](std::int8_t s) { return s == 1; }))
    d.orientations.clear();
  bool identity = true;
  for (size_t i = 0; i < d.order.size(); ++i)
    if (d.order[i] != static_cast<int>(i)) identity = false;
  if (identity) d.order.clear();
  return d;
}

std::string serialize_front(const FrontDiagram& d) {
  std::ostringstream out;
  out << "front v1\n";
  out << "strands " << d.base_strands << "\n";
  out << "events\n";
  for (const Event& e : d.events) {
    char c = e.kind == EventKind::Crossing ? 'X' : e.kind == EventKind::LeftCusp ? 'L' : 'R';
    out << c << " " << e.position << "\n";
  }
  for (size_t i = 0; i < d.orientations.size(); ++i)
    if (d.orientations[i] != 1) out << "orient " << i << " -\n";
  if (!d.order.empty()) {
    out << "order";
    for (int i : d.order) out << " " << i;
    out << "\n";
  }
  return out.str();
}

}  // namespace jetfront
