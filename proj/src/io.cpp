#include "lamanspan/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "lamanspan/error.hpp"

namespace lamanspan {

namespace {

int parse_id(std::istringstream& ls, int line_no) {
  std::string tok;
  if (!(ls >> tok)) fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": missing vertex id");
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad vertex id '" + tok + "'");
  try {
    return std::stoi(tok);
  } catch (const std::exception&) {
    fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": vertex id out of range");
  }
}

void expect_end(std::istringstream& ls, int line_no) {
  std::string extra;
  if (ls >> extra) fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": trailing '" + extra + "'");
}

}  // namespace

TriFile parse_tri(std::istream& in) {
  TriFile f;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head) || head[0] == '#') continue;
    if (head == "t") {
      int a = parse_id(ls, line_no), b = parse_id(ls, line_no), c = parse_id(ls, line_no);
      expect_end(ls, line_no);
      f.triangles.push_back({a, b, c});
    } else if (head == "surface") {
      std::string name;
      if (!(ls >> name)) fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": surface without name");
      expect_end(ls, line_no);
      f.surface = name;
    } else if (head == "abc") {
      int a = parse_id(ls, line_no), b = parse_id(ls, line_no), c = parse_id(ls, line_no);
      expect_end(ls, line_no);
      f.abc = std::array<Vertex, 3>{a, b, c};
    } else {
      fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": unknown record '" + head + "'");
    }
  }
  return f;
}

TriFile read_tri_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoError, "cannot open " + path.string());
  return parse_tri(in);
}

Triangulation read_triangulation(const std::filesystem::path& path) {
  auto f = read_tri_file(path);
  return Triangulation::validate(f.triangles);
}

void write_tri(std::ostream& out, const Triangulation& t, const std::optional<std::string>& surface,
               const std::optional<std::array<Vertex, 3>>& abc) {
  if (surface) out << "surface " << *surface << '\n';
  if (abc) out << "abc " << (*abc)[0] << ' ' << (*abc)[1] << ' ' << (*abc)[2] << '\n';
  for (const auto& tri : t.triangles()) out << "t " << tri[0] << ' ' << tri[1] << ' ' << tri[2] << '\n';
}

void write_tri_file(const std::filesystem::path& path, const Triangulation& t,
                    const std::optional<std::string>& surface) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::IoError, "cannot write " + path.string());
  write_tri(out, t, surface);
}

void write_span(std::ostream& out, const SpanningComplex& s) {
  out << "class " << span_class_name(s.topology_class) << '\n';
  if (s.singular) out << "singular " << *s.singular << '\n';
  if (s.cap) out << "cap " << (*s.cap)[0] << ' ' << (*s.cap)[1] << ' ' << (*s.cap)[2] << '\n';
  for (const auto& t : s.triangles) out << "t " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  for (const auto& e : s.extra_edges) out << "e " << e.a << ' ' << e.b << '\n';
}

SpanningComplex parse_span(std::istream& in) {
  SpanningComplex s;
  std::string line;
  int line_no = 0;
  bool have_class = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head) || head[0] == '#') continue;
    if (head == "class") {
      std::string name;
      ls >> name;
      s.topology_class = parse_span_class(name);
      have_class = true;
    } else if (head == "t") {
      int a = parse_id(ls, line_no), b = parse_id(ls, line_no), c = parse_id(ls, line_no);
      s.triangles.push_back(make_triangle(a, b, c));
    } else if (head == "e") {
      int a = parse_id(ls, line_no), b = parse_id(ls, line_no);
      s.extra_edges.push_back(make_edge(a, b));
    } else if (head == "singular") {
      s.singular = parse_id(ls, line_no);
    } else if (head == "cap") {
      int a = parse_id(ls, line_no), b = parse_id(ls, line_no), c = parse_id(ls, line_no);
      s.cap = make_triangle(a, b, c);
    } else {
      fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": unknown record '" + head + "'");
    }
    expect_end(ls, line_no);
  }
  if (!have_class) fail(ErrorCode::ParseError, "missing class header");
  std::sort(s.triangles.begin(), s.triangles.end());
  std::sort(s.extra_edges.begin(), s.extra_edges.end());
  return s;
}

}  // namespace lamanspan
